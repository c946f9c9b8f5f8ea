#include "support/brute.hpp"
#include "tricolor/enumerate.hpp"
#include "tricolor/transfer_matrix.hpp"

#include <doctest.h>

using namespace tricolor;

namespace {

std::shared_ptr<const Graph> graph_of(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return std::make_shared<const Graph>(Graph::from_edges(n, edges));
}

/// Brute-force count on the lattice's own coordinates, with pins given per lattice vertex.
long long brute_count(const Lattice& lat, const brute::Grid& g, int q, const std::vector<int>& pins = {}) {
    std::vector<int> raw(g.pts.size(), -1);
    if (!pins.empty())
        for (std::size_t i = 0; i < g.pts.size(); ++i) raw[i] = pins[*lat.find(g.pts[i])];
    return brute::count(g.adj, q, raw);
}

}  // namespace

TEST_CASE("known counts") {
    CHECK(count_colorings(*Lattice::make(LatticeSpec::torus(2, 2)), 3) == 18);
    CHECK(count_colorings(*Lattice::make(LatticeSpec::torus(2, 4)), 3) == 2970);
    CHECK(count_colorings(*Lattice::make(LatticeSpec::box(1, 1)), 3) == 12);
    CHECK(count_colorings(*Lattice::make(LatticeSpec::box(2, 1)), 2) == 2);

    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    CHECK(count_colorings(*b, 3, BoundaryCondition::odd_boundary_zero()) == 32);
    CHECK(count_colorings(*b, 3, BoundaryCondition::odd_boundary_with_center(*b, b->origin())) == 0);

    CHECK(StateSpace(graph_of(2, {{0, 1}}), 3).size() == 6);
    CHECK(StateSpace(graph_of(1, {}), 3).size() == 3);
    CHECK(StateSpace(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}), 3).size() == 6);
    CHECK(StateSpace(graph_of(2, {{0, 1}}), 3, {kFree, 2}).size() == 2);
}

TEST_CASE("enumeration agrees with brute force") {
    for (auto [d, n, torus] : std::vector<std::tuple<int, int, bool>>{
             {1, 3, false}, {2, 1, false}, {2, 2, true}, {2, 4, true}, {3, 1, false}, {3, 2, true}}) {
        const auto lat = Lattice::make(torus ? LatticeSpec::torus(d, n) : LatticeSpec::box(d, n));
        const auto g = brute::make_grid(d, n, torus);
        for (int q : {2, 3, 4}) {
            if (q == 4 && lat->size() > 9) continue;
            CHECK(count_colorings(*lat, q) == brute_count(*lat, g, q));
        }
    }
}

TEST_CASE("lexicographic order and lookups") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const StateSpace states(t, 3);
    REQUIRE(states.size() == 2970);
    for (int i = 1; i < states.size(); ++i) {
        const auto a = states.state(i - 1);
        const auto b = states.state(i);
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
    for (int i = 0; i < states.size(); i += 37) CHECK(states.index_of(states.state(i)) == i);
    std::vector<std::uint8_t> bad(16, 0);
    CHECK_FALSE(states.index_of(bad).has_value());
    CHECK(states.coloring(0).colors() == std::vector<std::uint8_t>(states.state(0).begin(), states.state(0).end()));
    CHECK(states.has_lattice());
    CHECK_FALSE(states.constrained());

    const StateSpace bare(graph_of(2, {{0, 1}}), 3);
    CHECK_FALSE(bare.has_lattice());
    CHECK_THROWS_AS(bare.lattice(), Error);
    CHECK_THROWS_AS(bare.coloring(0), Error);
    CHECK(StateSpace(graph_of(2, {{0, 1}}), 3, {0, kFree}).constrained());

    const auto visited = enumerate_colorings(t, 3);
    CHECK(visited.size() == 2970);
    for (const auto& chi : visited) CHECK(is_proper(chi));
}

TEST_CASE("caps and fallback") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    CHECK_THROWS_AS(enumerate_colorings(t, 3, {}, 100), Error);
    try {
        StateSpace(t, 3, {}, 100);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK(count_colorings(*t, 3, {}, 100) == 2970);
    CHECK(count_graph(t->graph(), 3, {}, kDefaultEnumerationCap, 3) == 2970);
}

TEST_CASE("transfer matrix") {
    // Ladders: every rung has 6 colourings and 3 continuations.
    for (int k = 1; k <= 12; ++k) {
        BigInt expect = 6;
        for (int i = 1; i < k; ++i) expect *= 3;
        CHECK(transfer_count(GridSpec::open({k, 2}), 3) == expect);
    }
    // 3 x k strips against brute force; they satisfy a_k = 5 a_{k-1} - 2 a_{k-2}.
    std::vector<BigInt> strip;
    for (int k = 1; k <= 6; ++k) {
        const int nv = 3 * k;
        std::vector<std::vector<int>> adj(nv);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < 3; ++c) {
                const int v = r * 3 + c;
                if (c + 1 < 3) adj[v].push_back(v + 1), adj[v + 1].push_back(v);
                if (r + 1 < k) adj[v].push_back(v + 3), adj[v + 3].push_back(v);
            }
        strip.push_back(transfer_count(GridSpec::open({k, 3}), 3));
        CHECK(strip.back() == brute::count(adj, 3));
    }
    CHECK(strip[0] == 12);
    CHECK(strip[1] == 54);
    for (std::size_t k = 2; k < strip.size(); ++k) CHECK(strip[k] == 5 * strip[k - 1] - 2 * strip[k - 2]);
    // Periodic grids against the brute-force torus.
    for (int n : {2, 3, 4, 5}) {
        const auto g = brute::make_grid(2, n, true);
        GridSpec spec{{n, n}, {true, true}, {}};
        CHECK(transfer_count(spec, 3) == brute::count(g.adj, 3));
    }
    CHECK(transfer_count(GridSpec{{3, 3, 3}, {true, true, true}, {}}, 3) ==
          brute::count(brute::make_grid(3, 3, true).adj, 3));
    // Pins and absent slots.
    const auto box = Lattice::make(LatticeSpec::box(2, 2));
    const auto g = brute::make_grid(2, 2, false);
    std::vector<int> pins(box->size(), kFree);
    box->outer_boundary().for_each([&](Vertex v) { pins[v] = box->is_even(v) ? 1 : kFree; });
    pins[box->origin()] = 0;
    CHECK(transfer_count(grid_of(*box, pins), 3) == brute_count(*box, g, 3, pins));
    GridSpec holes = GridSpec::open({3, 3});
    holes.pins.assign(9, kFree);
    holes.pins[4] = kAbsent;
    CHECK(transfer_count(holes, 3) == 258);  // an 8-cycle: 2^8 + 2
    TransferLimits tight;
    tight.max_states = 2;
    CHECK_THROWS_AS(transfer_count(GridSpec::open({4, 4}), 3, tight), Error);
}
