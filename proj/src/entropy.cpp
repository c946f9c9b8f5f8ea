#include "tricolor/entropy.hpp"

#include "tricolor/enumerate.hpp"

#include <cmath>
#include <map>

namespace tricolor {

bool Distribution::valid() const {
    if (outcomes.size() != p.size()) return false;
    Rational total = 0;
    for (const auto& x : p) {
        if (x < 0) return false;
        total += x;
    }
    return total == 1;
}

int Distribution::support_size() const {
    int k = 0;
    for (const auto& x : p)
        if (x > 0) ++k;
    return k;
}

double shannon_entropy(std::span<const Rational> p) {
    double h = 0.0;
    for (const auto& x : p) {
        if (x <= 0) continue;
        // ln x = ln num - ln den keeps precision for tiny probabilities.
        const double lx = log_bigint(numerator(x)) - log_bigint(denominator(x));
        h -= to_double(x) * lx;
    }
    return h;
}

double shannon_entropy(const Distribution& dist) { return shannon_entropy(std::span<const Rational>(dist.p)); }

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::InvalidArgument, "binary entropy needs x in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

TopologicalEstimate topological_entropy_estimate(int d, std::vector<int> widths, const TransferLimits& limits) {
    require(d >= 1, "dimension must be positive");
    require(!widths.empty(), "at least one width is needed");
    TopologicalEstimate t;
    t.d = d;
    t.widths = std::move(widths);
    for (int w : t.widths) {
        require(w >= 1, "widths must be positive");
        BigInt count;
        if (d == 1) {
            count = 3;
            for (int k = 1; k < w; ++k) count *= 2;
        } else {
            count = transfer_count(GridSpec::open(std::vector<int>(d, w)), 3, limits);
        }
        double sites = 1.0;
        for (int k = 0; k < d; ++k) sites *= w;
        t.counts.push_back(count);
        t.per_site.push_back(log_bigint(count) / sites);
    }
    const auto& s = t.per_site;
    for (std::size_t k = 0; k + 2 < s.size(); ++k) {
        const double d1 = s[k + 1] - s[k];
        const double d2 = s[k + 2] - s[k + 1];
        const double den = d2 - d1;
        t.aitken.push_back(den == 0.0 ? s[k + 2] : s[k + 2] - d2 * d2 / den);
    }
    t.estimate = t.aitken.empty() ? s.back() : t.aitken.back();
    if (t.aitken.size() >= 2) t.spread = std::abs(t.aitken.back() - t.aitken[t.aitken.size() - 2]);
    t.bounds_ok = true;
    for (double x : s)
        if (!(x > 0.0 && x <= std::log(3.0) + 1e-15)) t.bounds_ok = false;
    return t;
}

namespace {

/// Positions of Lambda_n's vertices inside a larger centred box.
std::vector<Vertex> embed(const Lattice& small, const Lattice& big) {
    std::vector<Vertex> out(small.size());
    for (Vertex v = 0; v < small.size(); ++v) {
        auto w = big.find(small.coords(v));
        require(w.has_value(), "inner box does not fit");
        out[v] = *w;
    }
    return out;
}

struct RestrictionTables {
    std::shared_ptr<const Lattice> small;
    std::unique_ptr<StateSpace> states;  // C_3(Lambda_n)
    std::vector<char> extendable;
    std::vector<BigInt> weight;
};

RestrictionTables build_tables(int d, int n, int m, unsigned threads) {
    require(d >= 2, "the restricted distribution needs d >= 2");
    require(n >= 1 && m > n, "need m > n >= 1");
    RestrictionTables t;
    t.small = Lattice::make(LatticeSpec::box(d, n));
    t.states = std::make_unique<StateSpace>(t.small, 3);
    const auto ext = Lattice::make(LatticeSpec::box(d, n + 2));
    const auto outer = Lattice::make(LatticeSpec::box(d, m + 1));
    const auto into_ext = embed(*t.small, *ext);
    const auto into_outer = embed(*t.small, *outer);

    std::vector<int> shell(outer->size(), kFree);
    (outer->outer_boundary() & outer->even()).for_each([&](Vertex v) { shell[v] = 1; });

    const int count = t.states->size();
    t.extendable.assign(count, 0);
    t.weight.assign(count, 0);
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        auto tau = t.states->state(static_cast<int>(i));
        std::vector<int> a(ext->size(), kFree);
        for (Vertex v = 0; v < t.small->size(); ++v) a[into_ext[v]] = tau[v];
        t.extendable[i] = transfer_count(grid_of(*ext, a), 3) > 0;
        std::vector<int> b = shell;
        for (Vertex v = 0; v < t.small->size(); ++v) b[into_outer[v]] = tau[v];
        t.weight[i] = transfer_count(grid_of(*outer, b), 3);
    });
    return t;
}

Restriction to_restriction(int d, int n, int m, const RestrictionTables& t) {
    Restriction r;
    r.d = d;
    r.n = n;
    r.m = m;
    for (const auto& w : t.weight) r.support_total += w;
    require(r.support_total > 0, "the pinned outer box admits no colouring");
    for (int i = 0; i < t.states->size(); ++i) {
        if (t.weight[i] == 0) continue;
        auto tau = t.states->state(i);
        r.dist.outcomes.emplace_back(tau.begin(), tau.end());
        r.dist.p.emplace_back(t.weight[i], r.support_total);
        r.weight.push_back(t.weight[i]);
    }
    return r;
}

BigInt pow3(int k) {
    BigInt x = 1;
    for (int i = 0; i < k; ++i) x *= 3;
    return x;
}

}  // namespace

Restriction restriction_distribution(int d, int n, int m, unsigned threads) {
    return to_restriction(d, n, m, build_tables(d, n, m, threads));
}

EntropyGapCheck max_entropy_gap_check(int d, int n, int m, unsigned threads) {
    const auto t = build_tables(d, n, m, threads);
    const auto r = to_restriction(d, n, m, t);
    const Lattice& small = *t.small;
    const VertexSet& rim = small.outer_boundary();
    const auto rim_list = rim.to_vector();

    EntropyGapCheck c;
    c.d = d;
    c.n = n;
    c.m = m;
    c.inner_boundary = static_cast<int>(rim_list.size());
    c.colorings = t.states->size();
    c.support_total = r.support_total;
    c.support = static_cast<int>(r.dist.outcomes.size());

    std::map<std::vector<std::uint8_t>, BigInt> by_rim;
    c.grouped_by_boundary = true;
    c.support_in_extendable = true;
    BigInt max_weight = 0;
    BigInt max_extendable_weight = 0;
    std::optional<BigInt> min_star_weight;
    for (int i = 0; i < t.states->size(); ++i) {
        auto tau = t.states->state(i);
        const BigInt& w = t.weight[i];
        if (w > 0 && !t.extendable[i]) c.support_in_extendable = false;
        std::vector<std::uint8_t> key;
        for (Vertex v : rim_list) key.push_back(tau[v]);
        auto [it, fresh] = by_rim.emplace(key, w);
        if (!fresh && it->second != w) c.grouped_by_boundary = false;
        max_weight = std::max(max_weight, w);
        if (!t.extendable[i]) continue;
        c.extendable += 1;
        max_extendable_weight = std::max(max_extendable_weight, w);
        bool star = true;
        for (Vertex v : rim_list)
            if (tau[v] != (small.is_even(v) ? 1 : 0)) star = false;
        if (star) {
            c.c_star += 1;
            if (!min_star_weight || w < *min_star_weight) min_star_weight = w;
        }
    }

    Rational total = 0;
    for (const auto& p : r.dist.p) total += p;
    c.sums_to_one = total == 1 && r.dist.valid();

    const BigInt b1 = pow3(c.inner_boundary);
    const BigInt b2 = b1 * b1;
    c.entropy = shannon_entropy(r.dist);
    c.entropy_lower = log_bigint(c.extendable) - 2.0 * c.inner_boundary * std::log(3.0);
    c.entropy_bound = c.entropy >= c.entropy_lower;
    // max_tau N(tau) / S <= 3^{2b} / |C'|
    c.max_probability_bound = max_weight * c.extendable <= b2 * c.support_total;
    // |C_*| 3^b >= |C'|
    c.c_star_mass = c.c_star * b1 >= c.extendable;
    // N(tau0) 3^b >= N(tau) for every tau0 in C_* and tau in C'
    c.c_star_dominates = min_star_weight && *min_star_weight * b1 >= max_extendable_weight;
    return c;
}

}  // namespace tricolor
