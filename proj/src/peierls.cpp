#include "tricolor/peierls.hpp"

#include <cmath>

namespace tricolor {

namespace {

Vertex shift_or_throw(const Lattice& lat, Vertex v, ShiftDirection s) {
    auto w = lat.shift(v, s);
    if (!w) fail(ErrorCode::InvalidArgument, "shift leaves the box; W must avoid the box boundary");
    return *w;
}

int isqrt(int x) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

Rational power(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

/// Host-graph neighbours of `from` (a subset of Q^E) inside Q^O.
VertexSet host_neighbors(const Lattice& lat, const VertexSet& from, const VertexSet& qo) {
    return external_boundary(lat, from) & qo;
}

}  // namespace

VertexSet boundary_layer(const Lattice& lattice, const VertexSet& w, ShiftDirection s) {
    VertexSet out(lattice.size());
    internal_boundary(lattice, w).for_each([&](Vertex x) {
        auto back = lattice.shift(x, s.reversed());
        if (!back || !w.contains(*back)) out.insert(x);
    });
    return out;
}

Coloring shift_coloring(const Coloring& chi, const VertexSet& w, ShiftDirection s, const VertexSet& subset) {
    const Lattice& lat = chi.lattice();
    const VertexSet layer = boundary_layer(lat, w, s);
    require(subset.is_subset_of(layer), "S must be a subset of W^s");
    Coloring out = chi;
    w.for_each([&](Vertex v) {
        if (subset.contains(v)) out.set(v, 0);
        else if (!layer.contains(v)) out.set(v, swap12(chi[shift_or_throw(lat, v, s.reversed())]));
    });
    return out;
}

Coloring reconstruct(const Coloring& chi_prime, const VertexSet& w, ShiftDirection s) {
    const Lattice& lat = chi_prime.lattice();
    Coloring out = chi_prime;
    w.for_each([&](Vertex v) { out.set(v, swap12(chi_prime[shift_or_throw(lat, v, s)])); });
    return out;
}

void for_each_shift(const Coloring& chi, const VertexSet& w, ShiftDirection s,
                    const std::function<void(const VertexSet&, const Coloring&)>& fn, int max_layer) {
    const Lattice& lat = chi.lattice();
    const auto members = boundary_layer(lat, w, s).to_vector();
    const int k = static_cast<int>(members.size());
    if (k > max_layer)
        fail(ErrorCode::CapExceeded, "|W^s| = " + std::to_string(k) + " exceeds the enumeration cap " +
                                         std::to_string(max_layer));
    // Shared part of every chi^s_S: everything except the S cells.
    const Coloring base = shift_coloring(chi, w, s, VertexSet(lat.size()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet subset(lat.size());
        Coloring image = base;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) {
                subset.insert(members[i]);
                image.set(members[i], 0);
            }
        fn(subset, image);
    }
}

VertexSet sample_subset(const VertexSet& layer, CounterRng& rng) {
    VertexSet out(layer.universe());
    layer.for_each([&](Vertex v) {
        if (rng() >> 63) out.insert(v);
    });
    return out;
}

// ---------------------------------------------------------------- approximations

int approximation_threshold(int d) { return 2 * d - isqrt(d); }

bool is_approximation(const Lattice& lattice, const VertexSet& a, const ShiftRegion& region) {
    const VertexSet& even = lattice.of_parity(region.inner);
    const VertexSet& odd = lattice.of_parity(opposite(region.inner));
    const VertexSet ae = a & even;
    const VertexSet ao = a & odd;
    if (!(region.w & even).is_subset_of(ae)) return false;
    if (!ao.is_subset_of(region.w & odd)) return false;
    const int t = approximation_threshold(lattice.dim());
    bool ok = true;
    ae.for_each([&](Vertex x) {
        if (degree_into(lattice, x, ao) < t) ok = false;
    });
    if (!ok) return false;
    (odd - ao).for_each([&](Vertex y) {
        if (lattice.ambient_degree() - degree_into(lattice, y, ae) < t) ok = false;
    });
    return ok;
}

std::vector<VertexSet> approximations_near(const Lattice& lattice, const ShiftRegion& region, int max_bits) {
    const VertexSet& even = lattice.of_parity(region.inner);
    const VertexSet wo = region.w & lattice.of_parity(opposite(region.inner));
    const int t = approximation_threshold(lattice.dim());

    VertexSet add(lattice.size());
    (even - region.w).for_each([&](Vertex x) {
        if (degree_into(lattice, x, wo) >= t) add.insert(x);
    });
    const VertexSet drop = wo & (internal_boundary(lattice, region.w) | external_boundary(lattice, add));

    std::vector<Vertex> toggles = add.to_vector();
    for (Vertex v : drop.to_vector()) toggles.push_back(v);
    if (static_cast<int>(toggles.size()) > max_bits) toggles.resize(max_bits);

    std::vector<VertexSet> out;
    const int k = static_cast<int>(toggles.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet a = region.w;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) a.set(toggles[i], !a.contains(toggles[i]));
        if (is_approximation(lattice, a, region)) out.push_back(std::move(a));
    }
    return out;
}

QSets q_sets(const Lattice& lattice, const VertexSet& a, Parity inner, ShiftDirection s, const Coloring* chi_prime) {
    const VertexSet ae = a & lattice.of_parity(inner);
    const VertexSet outside_odd = lattice.of_parity(opposite(inner)) - a;
    QSets q;
    q.qe = ae & external_boundary(lattice, outside_odd);
    q.qo = outside_odd & external_boundary(lattice, ae);
    q.u = VertexSet(lattice.size());
    if (chi_prime) {
        q.qe.for_each([&](Vertex x) {
            auto y = lattice.shift(x, s);
            if (y && (*chi_prime)[*y] == 0) q.u.insert(x);
        });
    }
    return q;
}

bool q_containments_hold(const Lattice& lattice, const VertexSet& a, const ShiftRegion& region, const QSets& q) {
    const VertexSet& even = lattice.of_parity(region.inner);
    const VertexSet& odd = lattice.of_parity(opposite(region.inner));
    const VertexSet we = region.w & even;
    const VertexSet wo = region.w & odd;
    const VertexSet ae = a & even;
    const VertexSet ao = a & odd;
    return (ae - q.qe).is_subset_of(we) && (even - ae).is_subset_of(even - we) && ao.is_subset_of(wo) &&
           (odd - (ao | q.qo)).is_subset_of(odd - wo);
}

// ---------------------------------------------------------------- direction and flow

const char* to_string(DirectionRule r) { return r == DirectionRule::Primary ? "primary" : "fallback"; }

DirectionChoice select_direction(const Lattice& lattice, const ShiftRegion& region, const VertexSet& a) {
    const long long d = lattice.dim();
    const long long wo = (region.w & lattice.of_parity(opposite(region.inner))).count();
    const long long we = (region.w & lattice.of_parity(region.inner)).count();
    std::optional<DirectionChoice> best;
    for (ShiftDirection s : all_directions(lattice.dim())) {
        const QSets q = q_sets(lattice, a, region.inner, s);
        DirectionChoice c;
        c.s = s;
        c.layer_size = boundary_layer(lattice, region.w, s).count();
        c.overlap = (shifted(lattice, q.qe, s) & q.qo).count();
        const long long ws = c.layer_size;
        const long long ov = c.overlap;
        if (5 * ws >= 4 * (wo - we) && d * ov * ov <= 25 * ws * ws) {
            c.rule = DirectionRule::Primary;
            return c;
        }
        if (!best || c.layer_size > best->layer_size) best = c;
    }
    best->rule = DirectionRule::Fallback;
    return *best;
}

FlowCertificate flow_certificate(const Lattice& lattice, const ShiftRegion& region, const VertexSet& a, ShiftDirection s) {
    const QSets q = q_sets(lattice, a, region.inner, s);
    FlowCertificate cert{s, boundary_layer(lattice, region.w, s), {}, {}};
    cert.c = cert.layer & (a & lattice.of_parity(opposite(region.inner))) & shifted(lattice, q.qe, s);
    cert.d = cert.layer - cert.c;
    return cert;
}

Rational flow_weight(const FlowCertificate& cert, const Coloring& chi_prime) {
    int c_zero = 0;
    int c_other = 0;
    cert.c.for_each([&](Vertex v) { (chi_prime[v] == 0 ? c_zero : c_other) += 1; });
    return power(Rational(1, 4), c_zero) * power(Rational(3, 4), c_other) * power(Rational(1, 2), cert.d.count());
}

Rational flow_weight(const Coloring& chi, const Coloring& chi_prime, const ShiftRegion& region,
                     const FlowCertificate& cert) {
    VertexSet subset(chi.size());
    cert.layer.for_each([&](Vertex v) {
        if (chi_prime[v] == 0) subset.insert(v);
    });
    if (!(shift_coloring(chi, region.w, cert.s, subset) == chi_prime))
        fail(ErrorCode::InvalidArgument, "chi' is not in phi_s(chi)");
    return flow_weight(cert, chi_prime);
}

FlowTotal flow_out_total(const Coloring& chi, const ShiftRegion& region, const FlowCertificate& cert, int max_layer) {
    FlowTotal total;
    total.closed_form = power(Rational(1, 4) + Rational(3, 4), cert.c.count()) *
                        power(Rational(1, 2) + Rational(1, 2), cert.d.count());
    if (cert.layer.count() > max_layer) return total;
    Rational sum = 0;
    for_each_shift(
        chi, region.w, cert.s,
        [&](const VertexSet&, const Coloring& image) {
            sum += flow_weight(cert, image);
            if (!is_proper(image)) total.proper_ok = false;
            if (!(reconstruct(image, region.w, cert.s) == chi)) total.roundtrip_ok = false;
        },
        max_layer);
    total.explicit_sum = sum;
    return total;
}

// ---------------------------------------------------------------- good triples

bool is_good_triple(const Lattice& lattice, const GoodTriple& t, const QSets& q) {
    if (!t.k.is_subset_of(q.qo) || !t.l.is_subset_of(q.u) || !t.m.is_subset_of(q.qe - q.u)) return false;
    if (!(t.k == host_neighbors(lattice, q.u - t.l, q.qo))) return false;
    const VertexSet cover = t.k | t.l | t.m;
    bool ok = true;
    // Every host edge covered.
    (q.qe - cover).for_each([&](Vertex x) {
        for (Vertex y : lattice.neighbors(x))
            if (q.qo.contains(y) && !cover.contains(y)) ok = false;
    });
    if (!ok) return false;
    // Inclusion-minimal: each cover vertex has a host neighbour outside the cover.
    auto has_free_neighbor = [&](Vertex v, const VertexSet& other_side) {
        for (Vertex y : lattice.neighbors(v))
            if (other_side.contains(y) && !cover.contains(y)) return true;
        return false;
    };
    (cover & q.qe).for_each([&](Vertex x) {
        if (!has_free_neighbor(x, q.qo)) ok = false;
    });
    (cover & q.qo).for_each([&](Vertex y) {
        if (!has_free_neighbor(y, q.qe)) ok = false;
    });
    return ok;
}

GoodTriple canonical_good_triple(const ShiftRegion& region, const QSets& q) {
    return {region.w & q.qo, q.u - region.w, (q.qe - q.u) - region.w};
}

const char* to_string(BoundStatus s) {
    switch (s) {
    case BoundStatus::Computed: return "computed";
    case BoundStatus::Skipped: return "skipped";
    case BoundStatus::NoGoodTriple: return "no-good-triple";
    }
    return "?";
}

BoundReport bound_report(const Lattice& lattice, const ShiftRegion& region, const QSets& q, const Rational& nu,
                         int max_unknown) {
    BoundReport r;
    r.nu = nu;
    r.excess = (region.w & lattice.of_parity(opposite(region.inner))).count() -
               (region.w & lattice.of_parity(region.inner)).count();
    if ((q.qe | q.qo).count() > max_unknown) {
        r.status = BoundStatus::Skipped;
        return r;
    }
    // L determines K = ext(U \ L) and then M is forced: the Q^E \ U vertices with an
    // uncovered host edge. Any other M would break minimality, so 2^|U| candidates suffice.
    const auto u = q.u.to_vector();
    const int k = static_cast<int>(u.size());
    std::optional<GoodTriple> best;
    int best_cost = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        GoodTriple t;
        t.l = VertexSet(lattice.size());
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) t.l.insert(u[i]);
        t.k = host_neighbors(lattice, q.u - t.l, q.qo);
        t.m = VertexSet(lattice.size());
        (q.qe - q.u).for_each([&](Vertex x) {
            for (Vertex y : lattice.neighbors(x))
                if (q.qo.contains(y) && !t.k.contains(y)) {
                    t.m.insert(x);
                    break;
                }
        });
        if (!is_good_triple(lattice, t, q)) continue;
        const int cost = t.k.count() + t.l.count();
        if (!best || cost < best_cost) {
            best = std::move(t);
            best_cost = cost;
        }
    }
    if (!best) {
        r.status = BoundStatus::NoGoodTriple;
        return r;
    }
    const GoodTriple hat = canonical_good_triple(region, q);
    r.status = BoundStatus::Computed;
    r.k0 = best->k.count();
    r.l0 = best->l.count();
    r.k_prime = (best->k - hat.k).count();
    r.l_prime = (best->l - hat.l).count();
    // B = (sqrt3/2)^excess * rest, rest = 2^{k0 - k' + l'} / 3^{k0 + l0}.
    const Rational rest = power(Rational(2), r.k0 - r.k_prime + r.l_prime) / power(Rational(3), r.k0 + r.l0);
    const Rational scaled = nu / rest;
    r.nu_within_bound = scaled * scaled <= power(Rational(3, 4), r.excess);
    r.bound = std::pow(std::sqrt(3.0) / 2.0, r.excess) * to_double(rest);
    r.ratio = to_double(nu) / r.bound;
    return r;
}

}  // namespace tricolor
