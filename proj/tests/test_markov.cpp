#include "support/brute.hpp"
#include "tricolor/markov.hpp"

#include <doctest.h>

using namespace tricolor;

namespace {

std::shared_ptr<const Graph> graph_of(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
    return std::make_shared<const Graph>(Graph::from_edges(n, edges));
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v)
        for (Vertex w : g.neighbors(v)) adj[v].push_back(w);
    return adj;
}

std::vector<std::vector<int>> all_states(const StateSpace& s) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < s.size(); ++i) {
        auto st = s.state(i);
        out.emplace_back(st.begin(), st.end());
    }
    return out;
}

long long brute_tau(const StateSpace& s) { return brute::dense_mixing_time(all_states(s), adjacency(s.graph()), s.q()); }

}  // namespace

TEST_CASE("single vertex and single edge") {
    const StateSpace one(graph_of(1, {}), 3);
    const auto p1 = transition_matrix(one);
    CHECK(p1.denominator == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p1.entry(i, j) == Rational(1, 3));
    const auto m1 = tv_mixing_time(p1, one);
    CHECK(m1.tau == 0);
    CHECK(m1.exact);

    const StateSpace edge(graph_of(2, {{0, 1}}), 3);
    const auto p2 = transition_matrix(edge);
    REQUIRE(p2.size() == 6);
    CHECK(p2.denominator == 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            const auto e = p2.entry(i, j);
            CHECK((e == 0 || e == Rational(1, 6)));
            CHECK(e == p2.entry(j, i));
        }
    const auto c = check_matrix(p2);
    CHECK(c.symmetric);
    CHECK(c.stochastic);
    CHECK(c.uniform_stationary);
    CHECK(c.connected);
    CHECK(c.components == 1);
    CHECK(tv_mixing_time(p2, edge).tau == brute_tau(edge));
}

TEST_CASE("mixing times agree with dense iteration") {
    std::vector<std::unique_ptr<StateSpace>> cases;
    cases.push_back(std::make_unique<StateSpace>(Lattice::make(LatticeSpec::torus(2, 2)), 3));
    cases.push_back(std::make_unique<StateSpace>(Lattice::make(LatticeSpec::box(1, 2)), 3));
    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    cases.push_back(std::make_unique<StateSpace>(b, 3, BoundaryCondition::odd_boundary_zero()));
    cases.push_back(std::make_unique<StateSpace>(graph_of(4, {{0, 1}, {1, 2}, {2, 3}}), 3));
    cases.push_back(std::make_unique<StateSpace>(graph_of(3, {{0, 1}, {1, 2}}), 3, std::vector<int>{0, kFree, kFree}));
    for (const auto& s : cases) {
        const auto p = transition_matrix(*s);
        const auto checks = check_matrix(p);
        CHECK(checks.symmetric);
        CHECK(checks.stochastic);
        CHECK(checks.uniform_stationary);
        double dense_after = 0.0;
        const long long expect =
            brute::dense_mixing_time(all_states(*s), adjacency(s->graph()), s->q(), &dense_after);
        if (!checks.connected) continue;
        const auto exact = tv_mixing_time(p, *s);
        CHECK(exact.tau == expect);
        CHECK(exact.exact);
        CHECK(exact.tv_after_tau <= std::exp(-1.0));
        if (exact.tau > 0) CHECK(exact.tv_at_tau > std::exp(-1.0));
        CHECK(exact.tv_after_tau == doctest::Approx(dense_after).epsilon(1e-9));

        MixingOptions plain;
        plain.use_symmetry = false;
        CHECK(tv_mixing_time(p, *s, plain).tau == expect);

        MixingOptions floats;
        floats.exact_state_cap = 0;
        const auto f = tv_mixing_time(p, *s, floats);
        CHECK_FALSE(f.exact);
        CHECK(f.tau == expect);
        CHECK(f.decided);
        CHECK(f.error_budget > 0.0);
        CHECK(f.error_budget < 1e-6);
    }
}

TEST_CASE("two colours on a path are frozen") {
    // With q = 2 a connected bipartite graph has two colourings and no legal moves.
    const StateSpace s(graph_of(3, {{0, 1}, {1, 2}}), 2);
    const auto c = check_matrix(transition_matrix(s));
    CHECK(c.symmetric);
    CHECK_FALSE(c.connected);
    CHECK(c.components == 2);
    CHECK_THROWS_AS(tv_mixing_time(transition_matrix(s), s, MixingOptions{1000, 5000, true, 1}), Error);
}

TEST_CASE("the Z^2_4 chain") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const StateSpace s(t, 3);
    const auto p = transition_matrix(s);
    CHECK(p.denominator == 48);
    const auto c = check_matrix(p);
    CHECK(c.symmetric);
    CHECK(c.stochastic);
    CHECK(c.uniform_stationary);
    CHECK(c.connected);
    for (int i = 0; i < s.size(); i += 101) {
        auto row = s.state(i);
        for (Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>::InnerIterator it(p.numer, i); it; ++it) {
            if (it.col() == i) continue;
            CHECK(it.value() == 1);
            auto col = s.state(static_cast<int>(it.col()));
            int diff = 0;
            for (int v = 0; v < 16; ++v) diff += row[v] != col[v];
            CHECK(diff == 1);
        }
    }

    const auto reps = orbit_representatives(s);
    CHECK(reps.size() == 22);
    CHECK(std::is_sorted(reps.begin(), reps.end()));

    const auto cond = conductance_bound(s, Rational(11, 50));
    CHECK(cond.pi_a == Rational(658, 1485));
    CHECK(cond.pi_m == Rational(169, 1485));
    CHECK(cond.pi_odd == cond.pi_a);
    CHECK(cond.classes_symmetric);
    CHECK(cond.pi_a_at_most_half);
    REQUIRE(cond.bound.has_value());
    CHECK(*cond.bound == Rational(329, 676));
    CHECK_FALSE(cond.bound_holds.has_value());
    CHECK(conductance_bound(s, Rational(11, 50), 0).bound_holds == false);
    CHECK(conductance_bound(s, Rational(11, 50), 1).bound_holds == true);

    const auto all = conductance_bound(s, 1);
    CHECK(all.pi_a == 0);
    CHECK(all.pi_m == 1);
    CHECK(*all.bound == 0);

    const auto block = single_site_blocking(s, p, Rational(11, 50));
    CHECK(block.moves == 21888);
    CHECK(block.even_to_odd == 0);
    CHECK(block.max_imbalance_change == 1);
    CHECK(block.blocked());

    MixingOptions capped;
    capped.max_iterations = 5;
    try {
        tv_mixing_time(p, s, capped);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    MatrixLimits small;
    small.max_states = 100;
    CHECK_THROWS_AS(transition_matrix(s, small), Error);
}

TEST_CASE("orbits are skipped for constrained state spaces") {
    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    const StateSpace s(b, 3, BoundaryCondition::odd_boundary_zero());
    CHECK(orbit_representatives(s).size() == static_cast<std::size_t>(s.size()));
    const StateSpace free_box(b, 3);
    const auto reps = orbit_representatives(free_box);
    CHECK(reps.size() < static_cast<std::size_t>(free_box.size()));
    CHECK(tv_mixing_time(transition_matrix(free_box), free_box).symmetry_reduced);
    CHECK_THROWS_AS(conductance_bound(free_box, Rational(11, 50)), Error);
}
