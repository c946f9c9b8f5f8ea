#include "tricolor/dynamics.hpp"

#include <ostream>

namespace tricolor {

namespace {

bool try_recolor(Coloring& chi, Vertex v, int j) {
    if (chi[v] == j) return false;
    for (Vertex w : chi.lattice().neighbors(v))
        if (chi[w] == j) return false;
    chi.set(v, j);
    return true;
}

}  // namespace

const char* to_string(ScanOrder s) { return s == ScanOrder::RandomSite ? "random-site" : "systematic-sweep"; }

bool metropolis_step(Coloring& chi, CounterRng& rng) {
    const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint32_t>(chi.size())));
    const int j = static_cast<int>(rng.below(static_cast<std::uint32_t>(chi.q())));
    return try_recolor(chi, v, j);
}

Coloring metropolis_step(const Coloring& chi, CounterRng& rng) {
    Coloring next = chi;
    metropolis_step(next, rng);
    return next;
}

Trajectory run_chain(const ChainSpec& spec, const Coloring& chi0, long long steps, long long thinning,
                     std::string initial_id) {
    require(steps >= 0, "number of steps must be nonnegative");
    require(thinning >= 1, "thinning interval must be positive");
    require(chi0.q() == spec.q, "initial colouring uses a different q than the chain");
    require(is_proper(chi0), "initial colouring is not proper");
    require(spec.rho > 0 && spec.rho <= 1, "rho must lie in (0, 1]");
    require(spec.kind != ChainKind::CustomLocal || static_cast<bool>(spec.move), "CustomLocal chains need a move");

    const Lattice& lat = chi0.lattice();
    Trajectory t;
    t.thinning = thinning;
    t.initial_id = std::move(initial_id);
    t.seed = spec.seed;
    t.stream = spec.stream;

    Coloring chi = chi0;
    ImbalanceStats stats = imbalance_stats(chi);
    auto record = [&](long long step) {
        t.records.push_back({step, stats.imbalance(), stats.zero_even, stats.zero_odd,
                             classify(stats.imbalance(), spec.rho, chi.size())});
    };
    record(0);

    CounterRng rng(spec.seed, spec.stream);
    const int n = chi.size();
    for (long long step = 1; step <= steps; ++step) {
        if (spec.kind == ChainKind::CustomLocal) {
            Coloring next = spec.move(chi, rng);
            if (!is_proper(next) || !rho_locality_check(chi, next, spec.rho))
                fail(ErrorCode::PropertyViolation, "custom move is not a proper rho-local update");
            chi = std::move(next);
            stats = imbalance_stats(chi);
        } else {
            Vertex v;
            int j;
            if (spec.scan == ScanOrder::RandomSite) {
                v = static_cast<Vertex>(rng.below(static_cast<std::uint32_t>(n)));
                j = static_cast<int>(rng.below(static_cast<std::uint32_t>(spec.q)));
            } else {
                v = static_cast<Vertex>((step - 1) % n);
                j = static_cast<int>(rng.below(static_cast<std::uint32_t>(spec.q)));
            }
            const int before = chi[v];
            if (try_recolor(chi, v, j)) {
                int& slot = lat.is_even(v) ? stats.zero_even : stats.zero_odd;
                if (before == 0) --slot;
                if (j == 0) ++slot;
            }
        }
        if (step % thinning == 0 || step == steps) record(step);
    }
    return t;
}

bool rho_locality_check(const Coloring& a, const Coloring& b, const Rational& rho) {
    const BigInt changed = hamming_distance(a, b);
    return changed * boost::multiprecision::denominator(rho) <= boost::multiprecision::numerator(rho) * a.size();
}

CrossingCheck crossing_check(const Coloring& chi1, const Coloring& chi2, const Rational& rho) {
    require(chi1.lattice().is_torus(), "the crossing argument lives on the torus");
    CrossingCheck c;
    c.applicable = classify(chi1, rho) == ImbalanceClass::EvenHeavy && classify(chi2, rho) == ImbalanceClass::OddHeavy;
    const int delta = std::abs(imbalance(chi1) - imbalance(chi2));
    c.inequality_ok = delta <= hamming_distance(chi1, chi2);
    c.blocked = c.applicable && !rho_locality_check(chi1, chi2, rho);
    return c;
}

bool crossing_blocked_check(const Coloring& chi1, const Coloring& chi2, const Rational& rho) {
    const CrossingCheck c = crossing_check(chi1, chi2, rho);
    return c.applicable && c.inequality_ok && c.blocked;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
    out << "step,imbalance,zero_even,zero_odd,class\n";
    for (const auto& r : t.records)
        out << r.step << ',' << r.imbalance << ',' << r.zero_even << ',' << r.zero_odd << ',' << to_string(r.cls)
            << '\n';
}

}  // namespace tricolor
