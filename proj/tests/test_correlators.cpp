#include <doctest.h>

#include <random>
#include <thread>

#include "oracles/dvv.hpp"
#include "wk/correlators.hpp"
#include "wk/errors.hpp"

using wk::CorrelatorEngine;
using wk::Rational;
using wk::TauWord;

TEST_CASE("tau words")
{
    TauWord t(2, {3, 0, 2});
    CHECK(t.indices() == std::vector<int>{0, 2, 3});
    CHECK(t.to_string() == "<tau_0 tau_2 tau_3>_2");
    CHECK_THROWS_AS(TauWord(1, {-1, 2}), std::invalid_argument);
    CHECK(wk::dimension_ok(TauWord(1, {1})));
    CHECK_FALSE(wk::dimension_ok(TauWord(0, {0, 0})));
    CHECK(wk::dimension_ok(TauWord(0, {0, 0, 0})));
    CHECK(wk::admissible_genus({2, 3}) == 2);
    CHECK_FALSE(wk::admissible_genus({1, 1, 0}).has_value());
    CHECK_FALSE(wk::admissible_genus({-1, 5}).has_value());
}

TEST_CASE("kappa products as tau brackets")
{
    auto c = wk::kappa_pair_to_tau(0, 3);
    REQUIRE(c.terms().size() == 2);
    CHECK(c.terms()[0].sign == 1);
    CHECK(c.terms()[0].bracket.indices == std::vector<int>{1, 4});
    CHECK(c.terms()[1].sign == -1);
    CHECK(c.terms()[1].bracket.indices == std::vector<int>{4});
    CorrelatorEngine engine(3);
    CHECK(engine.evaluate(c) == Rational(1, 384) - Rational(1, 1152));

    wk::SignedTauCombination dup;
    dup.add(1, wk::TauBracket({1, 2}));
    CHECK_THROWS_AS(dup.add(-1, wk::TauBracket({2, 1})), std::invalid_argument);
}

TEST_CASE("one-point values")
{
    CorrelatorEngine engine(3);
    CHECK(engine.one_point(1) == Rational(1, 24));
    CHECK(engine.one_point(2) == Rational(1, 1152));
    CHECK(engine.one_point(3) == Rational(1, 82944));
    CHECK_THROWS_AS(engine.one_point(0), std::domain_error);
}

TEST_CASE("generating function D")
{
    CorrelatorEngine engine(3);
    CHECK(engine.three_point_with_zero(0, 0, 0) == 1);
    CHECK(engine.three_point_with_zero(1, 2, 1) == Rational(1, 12));
    CHECK(engine.three_point_with_zero(3, 0, 1) == Rational(1, 24));
    CHECK(engine.three_point_with_zero(2, 4, 2) == Rational(11, 1440));
    CHECK(engine.three_point_with_zero(2, 2, 1).is_zero());
    for (int g = 0; g <= 3; ++g)
        for (int a = 0; a <= 3 * g; ++a)
            CHECK(engine.three_point_with_zero(a, 3 * g - a, g) == oracle::dijkgraaf_coefficient(a, 3 * g - a, g));
}

TEST_CASE("two-point values")
{
    CorrelatorEngine engine(3);
    CHECK(engine.two_point(1, 1, 1) == Rational(1, 24));
    CHECK(engine.two_point(2, 3, 2) == Rational(29, 5760));
    CHECK(engine.two_point(3, 2, 2) == Rational(29, 5760));
    CHECK(engine.two_point(1, 4, 2) == Rational(1, 384));
    CHECK(engine.two_point(0, 4, 2).is_zero());  // string equation: <tau_0 tau_4>_2 = <tau_3>_2 = 0
}

TEST_CASE("three-point tables")
{
    CorrelatorEngine engine(2);
    auto t0 = engine.e_solve(0);
    CHECK(t0.at({0, 0, 0}) == 1);
    auto t1 = engine.e_solve(1);
    CHECK(t1.at({1, 1, 1}) == Rational(1, 12));
    CHECK(t1.at({0, 1, 2}) == Rational(1, 12));
    CHECK(t1.at({2, 1, 0}) == Rational(1, 12));
    CHECK(t1.at({3, 0, 0}) == Rational(1, 24));
}

TEST_CASE("dispatcher")
{
    CorrelatorEngine engine(2);
    CHECK(engine.correlator(TauWord(1, {1})) == Rational(1, 24));
    CHECK(engine.correlator(2, {4, 0, 2}) == Rational(11, 1440));
    CHECK(engine.correlator(2, {-1, 7}).is_zero());
    CHECK(engine.correlator(1, {2, 2}).is_zero());
    CHECK(engine.bracket({2, 3}) == Rational(29, 5760));
    CHECK(engine.bracket({1, 1, 0}).is_zero());
    CHECK_THROWS_AS(engine.correlator(TauWord(1, {0, 0, 1, 1})), wk::UnsupportedArity);
    CHECK_THROWS_AS(engine.correlator(1, {}), wk::UnsupportedArity);
    CHECK_THROWS_AS(engine.correlator(3, {7}), wk::TruncationExceeded);
}

TEST_CASE("symmetry and dimension filter on random words")
{
    CorrelatorEngine engine(4);
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<int> genus(0, 4), index(0, 12), arity(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const int g = genus(rng);
        std::vector<int> idx;
        for (int i = arity(rng); i > 0; --i)
            idx.push_back(index(rng));
        const Rational v = engine.correlator(g, idx);
        if (!wk::dimension_ok(TauWord(g, idx)))
            CHECK(v.is_zero());
        std::shuffle(idx.begin(), idx.end(), rng);
        CHECK(engine.correlator(g, idx) == v);
    }
}

TEST_CASE("all one-, two- and three-point numbers agree with the DVV recursion")
{
    const int max_genus = 6;
    CorrelatorEngine engine(max_genus);
    oracle::Dvv dvv;
    for (int g = 0; g <= max_genus; ++g) {
        const int one = 3 * g - 2;
        if (one >= 0)
            CHECK(engine.correlator(g, {one}) == dvv(g, {one}));
        for (int a = 0; a <= (3 * g - 1) / 2; ++a)
            CHECK(engine.correlator(g, {a, 3 * g - 1 - a}) == dvv(g, {a, 3 * g - 1 - a}));
        for (int a = 0; a <= 3 * g; ++a)
            for (int b = a; a + b <= 3 * g; ++b) {
                const int c = 3 * g - a - b;
                if (c < b)
                    continue;
                const Rational v = engine.correlator(g, {a, b, c});
                CHECK_MESSAGE(v == dvv(g, {a, b, c}), "g=" << g << " (" << a << "," << b << "," << c << ")");
                CHECK(v.sign() > 0);
            }
    }
}

TEST_CASE("closed form F matches its direct expansion")
{
    const int G = 5;
    auto f = wk::f_series(G);
    for (int g = 0; g <= G; ++g)
        for (int a = 0; a <= 3 * g; ++a)
            for (int m = 0; a + m <= 3 * g; ++m)
                CHECK(f.coefficient({a, m, g}) == oracle::f_closed_form_coefficient(a, m, g));
}

TEST_CASE("concurrent readers see one consistent table")
{
    CorrelatorEngine shared(5);
    CorrelatorEngine reference(5);
    std::vector<std::thread> workers;
    std::vector<int> mismatches(8, 0);
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&, w] {
            for (int g = 5; g >= 0; --g)
                for (int a = (w % 3); a <= 3 * g; a += 2) {
                    const int b = (3 * g - a) / 2;
                    const int c = 3 * g - a - b;
                    if (shared.correlator(g, {a, b, c}) != shared.correlator(g, {c, b, a}))
                        ++mismatches[static_cast<std::size_t>(w)];
                }
        });
    for (auto& t : workers)
        t.join();
    for (int m : mismatches)
        CHECK(m == 0);
    for (int g = 0; g <= 5; ++g)
        for (const auto& [key, value] : reference.e_solve(g))
            CHECK(shared.correlator(g, {key[0], key[1], key[2]}) == value);
}
