#include "tricolor/dynamics.hpp"
#include "tricolor/enumerate.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace tricolor;

namespace {

std::shared_ptr<const Lattice> torus(int d, int n) { return Lattice::make(LatticeSpec::torus(d, n)); }

}  // namespace

TEST_CASE("counter rng") {
    CounterRng a(1, 2), b(1, 2), c(1, 3), d(2, 2);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
    CounterRng replay(1, 2, 1);
    CHECK(a() == replay());
    CHECK(a.counter() == 2);

    CounterRng r(9, 0);
    std::map<std::uint32_t, int> hist;
    for (int i = 0; i < 30000; ++i) {
        const auto v = r.below(3);
        REQUIRE(v < 3);
        ++hist[v];
    }
    for (auto [k, n] : hist) CHECK(std::abs(n - 10000) < 500);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("a metropolis step stays proper and moves at most one site") {
    const auto t = torus(2, 4);
    Coloring chi = phase_coloring(t, Parity::Even);
    CounterRng rng(3, 0);
    int changed = 0;
    for (int i = 0; i < 5000; ++i) {
        const Coloring before = chi;
        const bool moved = metropolis_step(chi, rng);
        REQUIRE(is_proper(chi));
        const int dist = hamming_distance(before, chi);
        CHECK(dist == (moved ? 1 : 0));
        CHECK(std::abs(imbalance(before) - imbalance(chi)) <= 1);
        changed += moved;
    }
    CHECK(changed > 0);
    CounterRng r1(4, 0), r2(4, 0);
    CHECK(metropolis_step(chi, r1) == metropolis_step(chi, r2));
}

TEST_CASE("single-site proposal frequencies match 1/(q|V|)") {
    // On a single edge from (0, 1) the legal moves are v0 -> 2 and v1 -> 2.
    const auto lat = Lattice::make(LatticeSpec::box(1, 1));  // three vertices on a line
    Coloring chi(lat);
    chi.set(0, 0);
    chi.set(1, 1);
    chi.set(2, 0);
    CounterRng rng(11, 0);
    std::map<std::vector<std::uint8_t>, int> next;
    const int trials = 90000;
    for (int i = 0; i < trials; ++i) ++next[metropolis_step(static_cast<const Coloring&>(chi), rng).colors()];
    // Legal moves: v0 -> 2, v2 -> 2, v1 -> 2; each has probability 1/9.
    CHECK(next.size() == 4);
    for (const auto& [colors, n] : next) {
        if (colors == chi.colors()) CHECK(std::abs(n - trials * 6 / 9) < 1000);
        else CHECK(std::abs(n - trials / 9) < 700);
    }
}

TEST_CASE("trajectories") {
    const auto t = torus(2, 4);
    const Coloring chi0 = phase_coloring(t, Parity::Even);
    ChainSpec spec;
    spec.seed = 42;

    const auto empty = run_chain(spec, chi0, 0);
    REQUIRE(empty.records.size() == 1);
    CHECK(empty.records[0].step == 0);
    CHECK(empty.records[0].imbalance == 8);
    CHECK(empty.records[0].cls == ImbalanceClass::EvenHeavy);

    const auto a = run_chain(spec, chi0, 1000, 7, "even");
    const auto b = run_chain(spec, chi0, 1000, 7, "even");
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records.size() == 1 + 1000 / 7 + 1);
    CHECK(a.records.back().step == 1000);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].imbalance == b.records[i].imbalance);
        CHECK(a.records[i].imbalance == a.records[i].zero_even - a.records[i].zero_odd);
        if (i > 0) CHECK(a.records[i].step > a.records[i - 1].step);
    }
    spec.seed = 43;
    const auto c = run_chain(spec, chi0, 1000, 7, "even");
    bool differs = false;
    for (std::size_t i = 0; i < a.records.size(); ++i) differs |= a.records[i].imbalance != c.records[i].imbalance;
    CHECK(differs);

    std::ostringstream csv;
    write_trajectory_csv(csv, empty);
    CHECK(csv.str() == "step,imbalance,zero_even,zero_odd,class\n0,8,8,0,even\n");

    spec.scan = ScanOrder::SystematicSweep;
    const auto sweep = run_chain(spec, chi0, 160);
    CHECK(sweep.records.size() == 161);

    CHECK_THROWS_AS(run_chain(spec, chi0, -1), Error);
    CHECK_THROWS_AS(run_chain(spec, chi0, 10, 0), Error);
    Coloring bad = chi0;
    bad.set(0, 1);
    bad.set(1, 1);
    CHECK_THROWS_AS(run_chain(spec, bad, 10), Error);
}

TEST_CASE("recorded observables agree with a recount") {
    const auto t = torus(2, 4);
    ChainSpec spec;
    spec.seed = 5;
    Coloring chi = phase_coloring(t, Parity::Odd);
    const auto traj = run_chain(spec, chi, 500);
    CounterRng rng(spec.seed, spec.stream);
    for (long long step = 1; step <= 500; ++step) {
        metropolis_step(chi, rng);
        const auto stats = imbalance_stats(chi);
        CHECK(traj.records[step].zero_even == stats.zero_even);
        CHECK(traj.records[step].zero_odd == stats.zero_odd);
    }
}

TEST_CASE("custom local chains") {
    const auto t = torus(2, 4);
    const Coloring even = phase_coloring(t, Parity::Even);
    const Coloring odd = phase_coloring(t, Parity::Odd);
    ChainSpec spec;
    spec.kind = ChainKind::CustomLocal;
    spec.rho = Rational(1, 4);
    spec.move = [](const Coloring& chi, CounterRng& rng) { return metropolis_step(chi, rng); };
    CHECK(run_chain(spec, even, 50).records.size() == 51);

    spec.move = [&](const Coloring& chi, CounterRng&) { return chi == even ? odd : even; };
    CHECK_THROWS_AS(run_chain(spec, even, 1), Error);
    try {
        run_chain(spec, even, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PropertyViolation);
    }
    spec.rho = 1;
    CHECK(run_chain(spec, even, 3).records.back().imbalance == -8);

    ChainSpec missing;
    missing.kind = ChainKind::CustomLocal;
    CHECK_THROWS_AS(run_chain(missing, even, 1), Error);
}

TEST_CASE("locality and crossing") {
    const auto t = torus(2, 4);
    const Coloring even = phase_coloring(t, Parity::Even);
    const Coloring odd = phase_coloring(t, Parity::Odd);
    CHECK(rho_locality_check(even, even, Rational(1, 16)));
    CHECK_FALSE(rho_locality_check(even, odd, Rational(15, 16)));
    CHECK(rho_locality_check(even, odd, 1));

    const Rational rho(11, 50);
    const auto c = crossing_check(even, odd, rho);
    CHECK(c.applicable);
    CHECK(c.inequality_ok);
    CHECK(c.blocked);
    CHECK(crossing_blocked_check(even, odd, rho));
    // At rho = 1 nothing on Z^2_4 is heavy enough to apply.
    CHECK_FALSE(crossing_check(even, odd, 1).applicable);
    CHECK_FALSE(crossing_blocked_check(even, odd, 1));
    CHECK_FALSE(crossing_check(odd, even, rho).applicable);
    CHECK_THROWS_AS(crossing_check(phase_coloring(Lattice::make(LatticeSpec::box(2, 2)), Parity::Even),
                                   phase_coloring(Lattice::make(LatticeSpec::box(2, 2)), Parity::Odd), rho),
                    Error);

    // Exhaustively: every pair of enumerated states that is EvenHeavy -> OddHeavy is blocked.
    const StateSpace states(t, 3);
    std::vector<Coloring> heavy_even, heavy_odd;
    for (int i = 0; i < states.size(); ++i) {
        const Coloring chi = states.coloring(i);
        const auto cls = classify(chi, rho);
        if (cls == ImbalanceClass::EvenHeavy) heavy_even.push_back(chi);
        if (cls == ImbalanceClass::OddHeavy) heavy_odd.push_back(chi);
    }
    REQUIRE_FALSE(heavy_even.empty());
    REQUIRE(heavy_even.size() == heavy_odd.size());
    long long pairs = 0;
    for (std::size_t i = 0; i < heavy_even.size(); i += 7)
        for (const auto& b : heavy_odd) {
            CHECK(crossing_blocked_check(heavy_even[i], b, rho));
            ++pairs;
        }
    CHECK(pairs > 0);
}
