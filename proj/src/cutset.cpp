#include "tricolor/cutset.hpp"

#include <algorithm>

namespace tricolor {

namespace {

Cutset make_cutset(const Lattice& lat, Parity parity, const VertexSet& seed, const VertexSet& complement) {
    Cutset cut;
    cut.seed_parity = parity;
    cut.seed = seed;
    cut.complement = complement;
    cut.region = complement.complement();
    cut.edges = edge_boundary(lat, complement);
    const int w = cut.region.count();
    const int c = complement.count();
    cut.interior = c < w ? complement : cut.region;
    return cut;
}

bool q_is_three(const Coloring& chi) { return chi.q() == 3; }

bool is_connected(const Lattice& lat, const VertexSet& x) {
    return connected_components(lat, x).size() <= 1;
}

}  // namespace

const char* to_string(FamilyOutcome o) {
    switch (o) {
    case FamilyOutcome::Even: return "even";
    case FamilyOutcome::Odd: return "odd";
    case FamilyOutcome::NotEvenClass: return "not-even-class";
    }
    return "?";
}

Cutset build_box_cutset(const Coloring& chi, Vertex v0) {
    const Lattice& lat = chi.lattice();
    require(lat.kind() == LatticeKind::Box && !lat.spec().extended, "box cutsets need a plain box lattice");
    require(lat.dim() >= 2, "box cutsets need d >= 2 (the boundary of a 1-d box is disconnected)");
    require(q_is_three(chi), "cutsets are defined for 3-colourings");
    const auto bc = BoundaryCondition::odd_boundary_with_center(lat, v0);
    require(is_proper(chi) && satisfies_bc(chi, bc), "colouring is not in C_3^O(v0)");

    const VertexSet zeros = zero_set(chi);
    const VertexSet grown = closure(lat, zeros & lat.even());
    VertexSet seed;
    for (auto& comp : connected_components(lat, grown))
        if (comp.contains(v0)) seed = std::move(comp);

    const VertexSet& boundary = lat.outer_boundary();
    const Vertex anchor = *boundary.first();
    VertexSet complement;
    for (auto& comp : connected_components(lat, seed.complement()))
        if (comp.contains(anchor)) complement = std::move(comp);
    if (complement.universe() == 0 || !boundary.is_subset_of(complement))
        fail(ErrorCode::PropertyViolation, "box boundary is not contained in one component of the complement of R");

    Cutset cut = make_cutset(lat, Parity::Even, seed, complement);
    cut.interior = cut.region;
    cut.v0 = v0;
    return cut;
}

std::vector<Cutset> build_torus_cutsets(const Coloring& chi) {
    const Lattice& lat = chi.lattice();
    require(lat.is_torus(), "torus cutsets need a torus lattice");
    require(q_is_three(chi), "cutsets are defined for 3-colourings");
    const VertexSet zeros = zero_set(chi);
    std::vector<Cutset> out;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const VertexSet grown = closure(lat, zeros & lat.of_parity(p));
        for (const auto& seed : connected_components(lat, grown))
            for (const auto& comp : connected_components(lat, seed.complement()))
                out.push_back(make_cutset(lat, p, seed, comp));
    }
    return out;
}

Family select_family(const Coloring& chi) {
    const Lattice& lat = chi.lattice();
    require(lat.is_torus(), "families are defined on the torus");
    require(q_is_three(chi), "cutsets are defined for 3-colourings");
    const VertexSet zeros = zero_set(chi);
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const VertexSet seeds = zeros & lat.of_parity(p);
        std::vector<Cutset> family;
        VertexSet covered(lat.size());
        bool ok = true;
        for (const auto& seed : connected_components(lat, closure(lat, seeds))) {
            const auto comps = connected_components(lat, seed.complement());
            if (comps.empty()) {
                ok = false;
                break;
            }
            // Largest component; components arrive ordered by smallest vertex, so
            // a strict comparison keeps the earliest on ties.
            const VertexSet* best = &comps.front();
            for (const auto& c : comps)
                if (c.count() > best->count()) best = &c;
            Cutset cut = make_cutset(lat, p, seed, *best);
            if (!cut.interior_is_region() || cut.interior.intersects(covered)) {
                ok = false;
                break;
            }
            covered |= cut.interior;
            family.push_back(std::move(cut));
        }
        if (ok && seeds.is_subset_of(covered))
            return {p == Parity::Even ? FamilyOutcome::Even : FamilyOutcome::Odd, std::move(family)};
    }
    return {FamilyOutcome::NotEvenClass, {}};
}

bool PropertyReport::asserted_hold() const {
    return p1.value_or(true) && p2 && p3 && p4 && p5 && size_identity && p8a.value_or(true) &&
           (!p8b_asserted || p8b) && minimal && two_layer;
}

PropertyReport verify_properties(const Cutset& cut, const Coloring& chi, int large_d_threshold) {
    const Lattice& lat = chi.lattice();
    const int d = lat.dim();
    const Parity inner = cut.seed_parity;
    const Parity outer = opposite(inner);
    const VertexSet& w = cut.region;
    const VertexSet zeros = zero_set(chi);
    const VertexSet int_w = internal_boundary(lat, w);
    const VertexSet ext_w = external_boundary(lat, w);
    const VertexSet w_in = w & lat.of_parity(inner);
    const VertexSet w_out = w & lat.of_parity(outer);

    PropertyReport r;
    if (!lat.is_torus()) {
        r.p1 = cut.v0 && w.contains(*cut.v0) && !w.intersects(lat.outer_boundary());
    }
    r.p2 = int_w.is_subset_of(lat.of_parity(outer)) && ext_w.is_subset_of(lat.of_parity(inner));
    r.p3 = !(int_w | ext_w).intersects(zeros);

    r.p4 = true;
    const VertexSet zeros_in_w = w & zeros;
    int_w.for_each([&](Vertex v) {
        if (degree_into(lat, v, zeros_in_w) == 0) r.p4 = false;
    });

    // p5, first half: W^{P'} equals the external boundary of W^P.
    bool first = w_out == external_boundary(lat, w_in);
    // second half: W^P is exactly the P-vertices whose whole neighbourhood is in W^{P'}.
    // A box vertex missing a Z^d neighbour never has its neighbourhood inside W.
    VertexSet full_nbhd(lat.size());
    lat.of_parity(inner).for_each([&](Vertex y) {
        if (lat.degree(y) == lat.ambient_degree() && degree_into(lat, y, w_out) == lat.ambient_degree())
            full_nbhd.insert(y);
    });
    r.p5 = first && full_nbhd == w_in;

    const long long wo = w_out.count();
    const long long we = w_in.count();
    r.size_identity = static_cast<long long>(cut.size()) == 2LL * d * (wo - we);

    const long long wsize = w.count();
    if (2 * wsize <= lat.size()) {
        // |gamma| >= |W|^{1-1/d}  <=>  |gamma|^d >= |W|^{d-1}
        BigInt lhs = boost::multiprecision::pow(BigInt(cut.size()), static_cast<unsigned>(d));
        BigInt rhs = boost::multiprecision::pow(BigInt(wsize), static_cast<unsigned>(d - 1));
        r.p8a = lhs >= rhs;
    }
    r.p8b = cut.size() >= d * d;
    r.p8b_asserted = d >= large_d_threshold;

    r.minimal = !cut.complement.empty() && !w.empty() && is_connected(lat, w) && is_connected(lat, cut.complement);

    r.two_layer = true;
    for (const auto& comp : connected_components(lat, int_w | ext_w)) {
        int inside = -1;
        int outside = -1;
        comp.for_each([&](Vertex v) {
            int& slot = int_w.contains(v) ? inside : outside;
            if (slot < 0) slot = chi[v];
            else if (slot != chi[v]) r.two_layer = false;
        });
        if (!((inside == 1 && outside == 2) || (inside == 2 && outside == 1))) r.two_layer = false;
    }
    return r;
}

bool profile_membership(const Family& family, const Lattice& lattice, const Profile& profile) {
    if (family.outcome != FamilyOutcome::Even)
        fail(ErrorCode::InvalidArgument, "profile membership needs a colouring in the even class");
    const auto& cuts = family.cutsets;
    std::vector<char> used(cuts.size(), 0);
    // Tiny bipartite matching by backtracking: profiles and families are both short.
    auto match = [&](auto&& self, std::size_t i) -> bool {
        if (i == profile.size()) return true;
        const auto [c, v] = profile[i];
        if (v < 0 || v >= lattice.size()) return false;
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            if (used[k] || cuts[k].size() != c) continue;
            if (!lattice.is_even(v) || !cuts[k].interior.contains(v)) continue;
            used[k] = 1;
            if (self(self, i + 1)) return true;
            used[k] = 0;
        }
        return false;
    };
    return match(match, 0);
}

bool profile_membership(const Coloring& chi, const Profile& profile) {
    return profile_membership(select_family(chi), chi.lattice(), profile);
}

}  // namespace tricolor
