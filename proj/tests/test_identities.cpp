#include <doctest.h>

#include "wk/bernoulli.hpp"
#include "wk/identities.hpp"

using wk::CorrelatorEngine;
using wk::Rational;
using wk::Suite;

TEST_CASE("generating-function equations hold")
{
    const int G = 6;
    auto d = wk::d_series(G);
    auto f = wk::f_series(G);
    CHECK(wk::verify_d_boundary(d).passed());
    CHECK(wk::all_passed(wk::verify_d_ode(d)));
    CHECK(wk::verify_f_ode(f, d).passed());
    CHECK(wk::all_passed(wk::verify_product_collapse(d)));
    CorrelatorEngine engine(G);
    for (int g = 0; g <= G; ++g)
        CHECK(wk::verify_e_ode(engine, g).passed());
}

TEST_CASE("a perturbed D or F leaves a residual")
{
    const int G = 4;
    auto d = wk::d_series(G);
    auto f = wk::f_series(G);
    auto bad_d = d;
    bad_d.accumulate({2, 4, 2}, 1);
    CHECK_FALSE(wk::all_passed(wk::verify_d_ode(bad_d)));
    auto bad_f = f;
    bad_f.accumulate({3, 0, 1}, Rational(1, 7));
    auto report = wk::verify_f_ode(bad_f, d);
    CHECK_FALSE(report.passed());
    CHECK(report.expected() == "zero-series");
    CHECK(report.computed() != "zero-series");
}

TEST_CASE("identity values")
{
    CorrelatorEngine engine(6);
    auto f = wk::f_series(6);
    auto four = wk::verify_identity4(engine, 1);
    CHECK(wk::all_passed(four));
    CHECK(four.front().computed() == "1/24");
    auto five = wk::verify_identity5(engine, f, 2);
    CHECK(wk::all_passed(five));
    CHECK(five.front().computed() == "1/12");
    for (int g = 1; g <= 6; ++g) {
        CHECK(wk::all_passed(wk::verify_identity4(engine, g)));
        CHECK(wk::all_passed(wk::verify_identity5(engine, f, g)));
        for (int k = 1; k <= g; ++k)
            CHECK(wk::verify_telescope(engine, g, k).passed());
    }
    CHECK_THROWS_AS(wk::verify_telescope(engine, 2, 3), std::domain_error);
}

TEST_CASE("assembly at genus 2")
{
    CorrelatorEngine engine(2);
    auto parts = wk::assemble_eq3(engine, 2);
    CHECK(parts.two_point == Rational(1, 384));
    CHECK(parts.one_point == Rational(1, 1152));
    CHECK(parts.delta0 == Rational(1, 24));
    CHECK(parts.delta_i == Rational(-1, 576));
    CHECK(parts.total() == Rational(1, 24));
    CHECK(wk::lemma2_bridge_factor(2) * parts.total() == Rational(1, 2880));
    CHECK_THROWS_AS(wk::assemble_eq3(engine, 1), std::domain_error);
}

TEST_CASE("assembly across genera")
{
    CorrelatorEngine engine(8);
    for (int g = 2; g <= 8; ++g) {
        auto parts = wk::assemble_eq3(engine, g);
        CHECK(parts.total() == wk::eq3_target(g));
        CHECK(wk::verify_eq3(engine, g).passed());
        CHECK(wk::verify_lemma2(engine, g).passed());
        // The separating-divisor sum reduces to the two-point sum weighted by one-point values.
        CHECK(parts.delta_i == wk::delta_i_reduced(engine, g));
    }
}

TEST_CASE("assembly does not depend on evaluation order")
{
    const int G = 7;
    CorrelatorEngine forward(G);
    std::vector<Rational> a;
    for (int g = 2; g <= G; ++g)
        a.push_back(wk::assemble_eq3_lhs(forward, g));
    CorrelatorEngine backward(G);
    for (int g = G; g >= 2; --g)
        CHECK(wk::assemble_eq3_lhs(backward, g) == a[static_cast<std::size_t>(g - 2)]);
}

TEST_CASE("consistency checks")
{
    CorrelatorEngine engine(6);
    auto f = wk::f_series(6);
    for (int g = 1; g <= 6; ++g) {
        CHECK(wk::verify_string_closure(engine, g).passed());
        CHECK(wk::verify_two_point_palindrome(engine, g).passed());
        CHECK(wk::verify_f_consistency(engine, f, g).passed());
    }
    for (int g = 0; g <= 6; ++g)
        CHECK(wk::verify_cross_oracle(engine, g).passed());
}

TEST_CASE("suites")
{
    CHECK(wk::parse_suite("d-ode") == Suite::d_ode);
    CHECK(wk::parse_suite("all") == Suite::all);
    CHECK_FALSE(wk::parse_suite("nope").has_value());
    for (auto s : wk::individual_suites())
        CHECK(wk::parse_suite(wk::suite_name(s)) == s);
    CorrelatorEngine engine(5);
    auto reports = wk::run_suite(engine, Suite::all, 5);
    CHECK_FALSE(reports.empty());
    CHECK(wk::all_passed(reports));
    CHECK(wk::run_suite(engine, Suite::lemma2, 6 - 1).size() == 4);
}

TEST_CASE("report ordering")
{
    wk::ReportList r{wk::VerificationReport::equality("b", "g=10", 1, 1),
                     wk::VerificationReport::equality("b", "g=2", 1, 1),
                     wk::VerificationReport::equality("a", "g=3", 1, 2)};
    wk::sort_reports(r);
    CHECK(r[0].check() == "a");
    CHECK_FALSE(r[0].passed());
    CHECK(r[1].param() == "g=2");
    CHECK(r[2].param() == "g=10");
}

TEST_CASE("every cached correlator is load-bearing")
{
    // Fill a reference table, then bump each entry of genus <= 3 by one in a
    // fresh engine and confirm some suite notices.
    const int G = 4;
    CorrelatorEngine reference(G);
    std::vector<wk::TauWord> words;
    for (int g = 0; g <= 3; ++g) {
        if (g >= 1)
            words.emplace_back(g, std::vector<int>{3 * g - 2});
        for (int a = 0; 2 * a <= 3 * g - 1; ++a)
            if (wk::dimension_ok(wk::TauWord(g, {a, 3 * g - 1 - a})))
                words.emplace_back(g, std::vector<int>{a, 3 * g - 1 - a});
        for (const auto& [key, value] : reference.e_solve(g))
            if (key[0] <= key[1] && key[1] <= key[2])
                words.emplace_back(g, std::vector<int>{key[0], key[1], key[2]});
    }
    REQUIRE(words.size() > 30);
    for (const auto& w : words) {
        CorrelatorEngine engine(G);
        engine.override_value(w, reference.correlator(w) + 1);
        bool caught = false;
        for (auto s : wk::individual_suites())
            if (!wk::all_passed(wk::run_suite(engine, s, G))) {
                caught = true;
                break;
            }
        CHECK_MESSAGE(caught, w.to_string());
    }
}

TEST_CASE("suites stop at the first failure")
{
    CorrelatorEngine engine(5);
    engine.override_value(wk::TauWord(2, {1, 4}), 0);
    auto reports = wk::run_suite(engine, Suite::eq3, 5);
    REQUIRE_FALSE(reports.empty());
    CHECK_FALSE(reports.back().passed());
    CHECK(reports.size() == 1);
}
