// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "oracles/dvv.hpp"
#include "wk/bernoulli.hpp"
#include "wk/hodge.hpp"
#include "wk/identities.hpp"

using wk::CorrelatorEngine;
using wk::Rational;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const wk::ReportList& reports)
    {
        for (const auto& r : reports)
            require(r.passed(), r.check() + " " + r.param() + " expected=" + r.expected() + " computed=" + r.computed());
    }
};

int failures = 0;

template <class F>
void criterion(int number, const std::string& title, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << ms << " ms)";
    if (!o.ok)
        std::cout << " -- " << o.detail;
    std::cout << std::endl;
}

// Reference numbers, each recomputed here by the brute-force oracles before
// being compared with the engine.
struct Frozen {
    int genus;
    std::vector<int> indices;
    Rational value;
};

}  // namespace

int main()
{
    CorrelatorEngine engine(12);

    criterion(1, "kappa/tau assembly and its Bernoulli bridge, g = 2..10", [&](Outcome& o) {
        for (int g = 2; g <= 10; ++g) {
            o.require({wk::verify_eq3(engine, g), wk::verify_lemma2(engine, g)});
            o.require(wk::assemble_eq3_lhs(engine, g) == wk::eq3_target(g), "assembly g=" + std::to_string(g));
        }
        auto parts = wk::assemble_eq3(engine, 2);
        oracle::Dvv dvv;
        o.require(parts.two_point == Rational(1, 384) && dvv(2, {1, 4}) == Rational(1, 384), "two-point term");
        o.require(parts.one_point == Rational(1, 1152) && dvv(2, {4}) == Rational(1, 1152), "one-point term");
        o.require(parts.delta0 == Rational(1, 24), "delta0 term");
        o.require(parts.delta_i == Rational(-1, 576), "delta_i term");
        o.require(parts.total() == Rational(1, 24), "g=2 total");
        o.require(wk::bernoulli(4) == Rational(-1, 30), "b_4");
        o.require(wk::lemma2_bridge_factor(2) * parts.total() == Rational(1, 2880), "g=2 certificate");
    });

    criterion(2, "certificate nonzero, g = 2..25", [&](Outcome& o) {
        for (int g = 2; g <= 25; ++g)
            o.require(!wk::lemma2_target(g).is_zero(), "g=" + std::to_string(g));
    });

    criterion(3, "two-point alternating sum, g = 1..12", [&](Outcome& o) {
        for (int g = 1; g <= 12; ++g)
            o.require(wk::verify_identity4(engine, g));
        Rational g1 = engine.correlator(1, {2, 0});
        o.require(g1 == Rational(1, 24), "g=1 value");
    });

    criterion(4, "three-point alternating sum via E and via F, g = 1..12", [&](Outcome& o) {
        const auto f = wk::f_series(11);
        for (int g = 1; g <= 12; ++g)
            o.require(wk::verify_identity5(engine, f, g));
        Rational sum(0);
        for (int j = 0; j <= 2; ++j)
            sum += Rational(j % 2 == 0 ? 1 : -1) * engine.correlator(1, {2 - j, j, 1});
        o.require(sum == Rational(1, 12), "g=2 value");
        for (int g = 1; g <= 10; ++g)
            o.require(f.coefficient({g, 2 * g, g}) ==
                          Rational(oracle::fact(g + 1)) /
                              (Rational(2).pow(g - 1) * Rational(oracle::fact(2 * g + 2))),
                      "F coefficient law g=" + std::to_string(g));
    });

    criterion(5, "differential equations for D, E, F; mutations detected", [&](Outcome& o) {
        const int G = 8;
        const auto d = wk::d_series(G);
        const auto f = wk::f_series(G);
        o.require(wk::verify_d_ode(d));
        o.require({wk::verify_f_ode(f, d)});
        for (int g = 0; g <= G; ++g)
            o.require({wk::verify_e_ode(engine, g)});

        // One perturbed coefficient per series must be caught.
        for (int g = 1; g <= 3; ++g) {
            auto bad_d = d;
            bad_d.accumulate({g, 2 * g, g}, 1);
            o.require(!wk::all_passed(wk::verify_d_ode(bad_d)), "D mutation g=" + std::to_string(g));
            auto bad_f = f;
            bad_f.accumulate({g, 2 * g, g}, 1);
            o.require(!wk::verify_f_ode(bad_f, d).passed(), "F mutation g=" + std::to_string(g));
        }
        CorrelatorEngine reference(3);
        for (int g = 1; g <= 3; ++g)
            for (const auto& [key, value] : reference.e_solve(g)) {
                if (!(key[0] <= key[1] && key[1] <= key[2]))
                    continue;
                CorrelatorEngine mutated(3);
                wk::TauWord w(g, {key[0], key[1], key[2]});
                mutated.override_value(w, value + 1);
                o.require(!wk::verify_e_ode(mutated, g).passed(), "E mutation " + w.to_string());
            }
    });

    criterion(6, "zero-index entries, string equation, palindrome, g <= 10", [&](Outcome& o) {
        for (int g = 0; g <= 10; ++g) {
            o.require({wk::verify_cross_oracle(engine, g)});
            for (int a = 0; a <= 3 * g; ++a)
                o.require(engine.correlator(g, {0, a, 3 * g - a}) == oracle::dijkgraaf_coefficient(a, 3 * g - a, g),
                          "direct expansion g=" + std::to_string(g));
            if (g >= 1)
                o.require({wk::verify_string_closure(engine, g), wk::verify_two_point_palindrome(engine, g)});
        }
    });

    criterion(7, "telescoping sums, 1 <= k <= g <= 10", [&](Outcome& o) {
        for (int g = 1; g <= 10; ++g)
            for (int k = 1; k <= g; ++k)
                o.require({wk::verify_telescope(engine, g, k)});
    });

    criterion(8, "known values", [&](Outcome& o) {
        oracle::Dvv dvv;
        const std::vector<Frozen> table{
            {1, {1}, Rational(1, 24)},         {1, {1, 1}, Rational(1, 24)},     {1, {1, 1, 1}, Rational(1, 12)},
            {2, {2, 3}, Rational(29, 5760)},   {2, {0, 4, 2}, Rational(11, 1440)},
        };
        for (const auto& row : table) {
            const std::string name = wk::TauWord(row.genus, row.indices).to_string();
            o.require(dvv(row.genus, row.indices) == row.value, "oracle disagrees on " + name);
            o.require(engine.correlator(row.genus, row.indices) == row.value, "engine disagrees on " + name);
        }
        o.require(oracle::dijkgraaf_coefficient(2, 4, 2) == Rational(11, 1440), "direct expansion of D");
        o.require(oracle::f_closed_form_coefficient(1, 2, 1) == Rational(1, 12), "direct expansion of F");
    });

    criterion(9, "lambda-class relations, g = 1..8", [&](Outcome& o) {
        for (int g = 1; g <= 8; ++g)
            o.require(wk::run_hodge_checks(g, wk::HodgeCheck::all));
    });

    std::cout << "NOTE criterion 10: the non-vanishing of kappa_{g-2} on M_g is a geometric consequence of "
                 "criteria 1-9 and is not checked separately."
              << std::endl;
    return failures == 0 ? 0 : 1;
}
