#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "wk/hodge.hpp"

using wk::LambdaPoly;
using wk::Rational;

namespace {

LambdaPoly l(int g, int i)
{
    return LambdaPoly::lambda(g, i);
}

}  // namespace

TEST_CASE("lambda polynomials")
{
    auto p = l(3, 1) * l(3, 1) * l(3, 2);
    CHECK(p.to_string() == "l1^2*l2");
    CHECK(p.degree() == 4);
    CHECK(l(2, 0) == LambdaPoly::constant(2, 1));
    CHECK(l(2, 3).is_zero());
    CHECK_FALSE((l(3, 1) + l(3, 2)).is_homogeneous());
    CHECK_FALSE((l(3, 1) + l(3, 2)).degree().has_value());
    CHECK((l(2, 1) - l(2, 1)).is_zero());
}

TEST_CASE("relation generators")
{
    auto g2 = wk::mumford_generators(2).generators();
    REQUIRE(g2.size() == 2);
    CHECK(std::count(g2.begin(), g2.end(), Rational(2) * l(2, 2) - l(2, 1) * l(2, 1)) == 1);
    CHECK(std::count(g2.begin(), g2.end(), l(2, 2) * l(2, 2)) == 1);

    auto g1 = wk::mumford_generators(1).generators();
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == Rational(-1) * l(1, 1) * l(1, 1));

    for (int g = 1; g <= 6; ++g) {
        const auto ideal = wk::mumford_generators(g);
        for (const auto& r : ideal.generators()) {
            REQUIRE(r.degree().has_value());
            CHECK(*r.degree() % 2 == 0);
        }
    }
}

TEST_CASE("chern character in low degree")
{
    const int g = 4;
    CHECK(wk::chern_character(g, 1) == l(g, 1));
    CHECK(wk::chern_character(g, 2) == Rational(1, 2) * (l(g, 1) * l(g, 1) - Rational(2) * l(g, 2)));
    CHECK(wk::chern_character(g, 3) ==
          Rational(1, 6) * (l(g, 1) * l(g, 1) * l(g, 1) - Rational(3) * l(g, 1) * l(g, 2) + Rational(3) * l(g, 3)));
}

TEST_CASE("chern character satisfies Newton's identities")
{
    // j! ch_j = p_j with p_j = sum_{i<j} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j.
    const int g = 4;
    std::vector<LambdaPoly> p{LambdaPoly(g)};
    Rational jfact(1);
    for (int j = 1; j <= 8; ++j) {
        LambdaPoly next = Rational(j % 2 == 1 ? j : -j) * l(g, j);
        for (int i = 1; i < j; ++i)
            next += Rational(i % 2 == 1 ? 1 : -1) * l(g, i) * p[static_cast<std::size_t>(j - i)];
        p.push_back(next);
        jfact *= Rational(j);
        CHECK_MESSAGE(jfact * wk::chern_character(g, j) == next, "j=" << j);
    }
}

TEST_CASE("ideal membership")
{
    auto ideal = wk::mumford_generators(2);
    CHECK(wk::ideal_member(LambdaPoly(2), ideal));
    CHECK(wk::ideal_member(Rational(2) * l(2, 2) - l(2, 1) * l(2, 1), ideal));
    CHECK(wk::ideal_member(l(2, 2) * l(2, 2), ideal));
    CHECK_FALSE(wk::ideal_member(l(2, 1), ideal));
    CHECK_FALSE(wk::ideal_member(l(2, 2), ideal));
    CHECK(wk::ideal_member(l(2, 1) * l(2, 1) * l(2, 2) * Rational(3) - l(2, 1) * l(2, 1) * l(2, 1) * l(2, 1) * Rational(3, 2),
                           ideal));
    CHECK_THROWS_AS(wk::ideal_member(l(2, 1) + l(2, 2), ideal), std::invalid_argument);
    CHECK_THROWS_AS(wk::GradedIdeal(2, {l(2, 1) + l(2, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(wk::GradedIdeal(2, {LambdaPoly(2)}), std::invalid_argument);
}

TEST_CASE("membership ignores generator order")
{
    const int g = 3;
    auto gens = wk::mumford_generators(g).generators();
    std::reverse(gens.begin(), gens.end());
    wk::GradedIdeal reversed(g, gens);
    auto original = wk::mumford_generators(g);
    for (int j = 1; j <= 8; ++j) {
        auto ch = wk::chern_character(g, j);
        CHECK(wk::ideal_member(ch, original) == wk::ideal_member(ch, reversed));
    }
}

TEST_CASE("all checks hold in genus 1..8")
{
    for (int g = 1; g <= 8; ++g) {
        auto reports = wk::run_hodge_checks(g, wk::HodgeCheck::all);
        CHECK(reports.size() == 6);
        CHECK_MESSAGE(wk::all_passed(reports), "g=" << g);
    }
}

TEST_CASE("a wrong sign in the lambda_{g-1} lambda_g relation is rejected")
{
    const int g = 3;
    auto ideal = wk::mumford_generators(g);
    Rational f(1);
    for (int i = 2; i <= 2 * g - 1; ++i)
        f *= Rational(i);
    auto lhs = f * wk::chern_character(g, 2 * g - 1);
    auto correct = lhs - l(g, g - 1) * l(g, g);  // (-1)^{g-1} = 1 at g = 3
    auto wrong = lhs + l(g, g - 1) * l(g, g);
    CHECK(wk::ideal_member(correct, ideal));
    CHECK_FALSE(wk::ideal_member(wrong, ideal));
    CHECK_FALSE(wk::ideal_member(wk::chern_character(g, 2 * g - 1), ideal));
}
