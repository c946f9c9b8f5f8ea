#include "support/brute.hpp"
#include "tricolor/cutset.hpp"
#include "tricolor/enumerate.hpp"

#include <doctest.h>

using namespace tricolor;

namespace {

/// Evens coloured 1 except the listed zeros, odds coloured 2.
Coloring sparse_zeros(const std::shared_ptr<const Lattice>& lat, const std::vector<Vertex>& zeros) {
    Coloring chi(lat);
    for (Vertex v = 0; v < lat->size(); ++v) chi.set(v, lat->is_even(v) ? 1 : 2);
    for (Vertex v : zeros) chi.set(v, 0);
    return chi;
}

}  // namespace

TEST_CASE("box cutsets agree with a coordinate-level BFS and satisfy the structural properties") {
    const auto lat = Lattice::make(LatticeSpec::box(2, 2));
    const auto grid = brute::make_grid(2, 2, false);
    const Vertex v0 = lat->origin();
    const int g0 = grid.index.at(brute::Point{0, 0});
    long long seen = 0;
    for_each_coloring(*lat, 3, BoundaryCondition::odd_boundary_with_center(*lat, v0),
                      [&](std::span<const std::uint8_t> colors) {
                          const Coloring chi(lat, 3, colors);
                          const Cutset cut = build_box_cutset(chi, v0);
                          std::vector<int> raw(grid.pts.size());
                          for (int i = 0; i < static_cast<int>(grid.pts.size()); ++i)
                              raw[i] = chi[*lat->find(grid.pts[i])];
                          const auto ref = brute::box_cut(grid, raw, g0);
                          CHECK(cut.size() == ref.edge_count);
                          CHECK(cut.region.count() == static_cast<int>(ref.w.size()));
                          for (int i : ref.w) CHECK(cut.region.contains(*lat->find(grid.pts[i])));
                          const auto props = verify_properties(cut, chi);
                          CHECK(props.p1.value_or(false));
                          CHECK(props.asserted_hold());
                          CHECK(props.p8a.value_or(true));
                          CHECK(cut.size() == 4 * ((cut.region & lat->odd()).count() - (cut.region & lat->even()).count()));
                          ++seen;
                      });
    CHECK(seen == 32);
}

TEST_CASE("a single zero at the centre gives the star") {
    const auto lat = Lattice::make(LatticeSpec::box(2, 2));
    Coloring chi(lat);
    for (Vertex v = 0; v < lat->size(); ++v) chi.set(v, lat->is_even(v) ? 1 : 0);
    // odd vertices: 0 on the boundary, 2 inside; even vertices 1 except the centre.
    for (Vertex v = 0; v < lat->size(); ++v)
        if (!lat->is_even(v) && !lat->outer_boundary().contains(v)) chi.set(v, 2);
    chi.set(lat->origin(), 0);
    REQUIRE(is_proper(chi));
    const Cutset cut = build_box_cutset(chi, lat->origin());
    CHECK(cut.region == closure(*lat, VertexSet::of(lat->size(), std::vector<Vertex>{lat->origin()})));
    CHECK(cut.size() == 12);
    CHECK(cut.interior_is_region());
}

TEST_CASE("box cutsets depend only on the zero set") {
    const auto lat = Lattice::make(LatticeSpec::box(2, 2));
    std::map<std::vector<Vertex>, std::vector<Vertex>> region_of;
    for_each_coloring(*lat, 3, BoundaryCondition::odd_boundary_with_center(*lat, lat->origin()),
                      [&](std::span<const std::uint8_t> colors) {
                          const Coloring chi(lat, 3, colors);
                          const auto key = zero_set(chi).to_vector();
                          const auto w = build_box_cutset(chi, lat->origin()).region.to_vector();
                          auto [it, fresh] = region_of.emplace(key, w);
                          if (!fresh) CHECK(it->second == w);
                      });
    CHECK(region_of.size() < 32);  // several colourings share a zero set
}

TEST_CASE("box cutset preconditions") {
    const auto lat = Lattice::make(LatticeSpec::box(2, 2));
    CHECK_THROWS_AS(build_box_cutset(phase_coloring(lat, Parity::Even), lat->origin()), Error);
    const auto line = Lattice::make(LatticeSpec::box(1, 2));
    CHECK_THROWS_AS(build_box_cutset(phase_coloring(line, Parity::Odd), line->origin()), Error);
}

TEST_CASE("torus cutsets") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    CHECK(build_torus_cutsets(phase_coloring(t, Parity::Even)).empty());

    const Vertex v = *t->find(std::vector<int>{1, 1});
    const auto chi = sparse_zeros(t, {v});
    const auto cuts = build_torus_cutsets(chi);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].seed.count() == 5);
    CHECK(cuts[0].interior_is_region());
    CHECK(cuts[0].size() == 12);
    CHECK(cuts[0].size() == static_cast<int>(edge_boundary(*t, cuts[0].complement).size()));
    for (const Edge& e : cuts[0].edges) CHECK(t->adjacent(e.u, e.v));
}

TEST_CASE("families on tori") {
    const auto t6 = Lattice::make(LatticeSpec::torus(2, 6));
    const Vertex a = *t6->find(std::vector<int>{0, 0});
    const Vertex b = *t6->find(std::vector<int>{3, 3});
    const auto fam = select_family(sparse_zeros(t6, {a, b}));
    CHECK(fam.outcome == FamilyOutcome::Even);
    REQUIRE(fam.cutsets.size() == 2);
    CHECK_FALSE(fam.cutsets[0].interior.intersects(fam.cutsets[1].interior));
    CHECK(fam.cutsets[0].interior.contains(a) != fam.cutsets[1].interior.contains(a));

    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const auto empty = select_family(sparse_zeros(t, {}));
    CHECK(empty.outcome == FamilyOutcome::Even);
    CHECK(empty.cutsets.empty());

    // With zeros on every even vertex the even rule fails; the odd rule holds vacuously.
    const auto phase = select_family(phase_coloring(t, Parity::Even));
    CHECK(phase.outcome == FamilyOutcome::Odd);
    CHECK(phase.cutsets.empty());
}

TEST_CASE("every cutset on the enumerated torus") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const StateSpace states(t, 3);
    long long asserted = 0, family_members = 0;
    std::map<FamilyOutcome, int> outcomes;
    for (int i = 0; i < states.size(); ++i) {
        const Coloring chi = states.coloring(i);
        const auto fam = select_family(chi);
        ++outcomes[fam.outcome];
        for (const auto& cut : fam.cutsets) {
            ++family_members;
            CHECK(cut.interior_is_region());
            CHECK(verify_properties(cut, chi).asserted_hold());
        }
        for (const auto& cut : build_torus_cutsets(chi)) {
            CHECK(cut.region.count() + cut.complement.count() == t->size());
            if (!cut.interior_is_region()) continue;
            ++asserted;
            const auto p = verify_properties(cut, chi);
            CHECK(p.asserted_hold());
            CHECK_FALSE(p.p1.has_value());
        }
    }
    CHECK(asserted > 0);
    CHECK(family_members > 0);
    CHECK(outcomes[FamilyOutcome::Even] > 0);
}

TEST_CASE("profiles") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const Vertex v = *t->find(std::vector<int>{1, 1});
    const auto chi = sparse_zeros(t, {v});
    CHECK(profile_membership(chi, {}));
    CHECK(profile_membership(chi, {{12, v}}));
    CHECK_FALSE(profile_membership(chi, {{13, v}}));
    CHECK_FALSE(profile_membership(chi, {{100, v}}));
    CHECK_FALSE(profile_membership(chi, {{12, v}, {12, v}}));  // members must be distinct
    CHECK_THROWS_AS(profile_membership(phase_coloring(t, Parity::Even), {}), Error);
}
