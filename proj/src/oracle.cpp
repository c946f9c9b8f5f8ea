#include "tricolor/oracle.hpp"

#include "tricolor/cutset.hpp"

#include <algorithm>

namespace tricolor {

InfluenceReport influence_ratio(const std::shared_ptr<const Lattice>& box, Vertex v0, long long cap,
                                unsigned threads) {
    require(!box->is_torus(), "the influence ratio is defined on boxes");
    const auto all = BoundaryCondition::odd_boundary_zero();
    const auto centred = BoundaryCondition::odd_boundary_with_center(*box, v0);
    InfluenceReport r;
    r.total = count_colorings(*box, 3, all, cap, threads);
    r.with_center = count_colorings(*box, 3, centred, cap, threads);
    r.ratio = r.total == 0 ? Rational(0) : Rational(r.with_center, r.total);
    if (box->dim() >= 2 && r.with_center > 0) {
        for_each_coloring(
            *box, 3, centred,
            [&](std::span<const std::uint8_t> colors) {
                const Coloring chi(box, 3, colors);
                r.by_size[build_box_cutset(chi, v0).size()] += 1;
            },
            cap);
    }
    return r;
}

LcolReport lcol_check(const BipartiteInstance& in) {
    const Graph& g = in.graph;
    require(static_cast<int>(g.side.size()) == g.vertex_count, "the instance needs bipartition labels");
    for (Vertex v = 0; v < g.vertex_count; ++v)
        for (Vertex w : g.neighbors(v))
            require(g.side[v] != g.side[w], "the instance graph is not bipartite under its labels");

    std::vector<int> pins(g.vertex_count, kFree);
    auto pin = [&](const std::vector<Vertex>& set, int side, int color, const char* what) {
        for (Vertex v : set) {
            require(v >= 0 && v < g.vertex_count, std::string(what) + " vertex out of range");
            require(g.side[v] == side, std::string(what) + " vertex lies in the wrong class");
            require(pins[v] == kFree, std::string(what) + " overlaps another set");
            pins[v] = color;
        }
    };
    pin(in.e_cond, 0, 0, "E'");
    pin(in.o_cond, 1, 1, "O'");
    LcolReport r;
    r.conditioned = count_graph(g, 3, pins);
    if (r.conditioned == 0) fail(ErrorCode::InvalidArgument, "conditioning event is empty");
    pin(in.e_target, 0, 0, "E''");
    pin(in.o_target, 1, 1, "O''");
    r.joint = count_graph(g, 3, pins);
    r.lhs = Rational(r.joint, r.conditioned);
    BigInt power = 1;
    for (std::size_t k = 0; k < in.e_target.size() + in.o_target.size(); ++k) power *= 3;
    r.rhs = Rational(BigInt(1), power);
    r.holds = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

BipartiteInstance random_bipartite_instance(CounterRng& rng, int max_side) {
    require(max_side >= 1, "max_side must be positive");
    const int evens = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_side)));
    const int odds = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_side)));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex e = 0; e < evens; ++e)
        for (Vertex o = 0; o < odds; ++o)
            if (rng.below(2)) edges.emplace_back(e, evens + o);
    std::vector<std::uint8_t> side(evens + odds, 0);
    std::fill(side.begin() + evens, side.end(), 1);

    BipartiteInstance in;
    in.graph = Graph::from_edges(evens + odds, edges, side);
    // Roles: 0 = none, 1 = conditioning, 2 = target, each with probability 1/3.
    std::vector<int> role(evens + odds);
    for (auto& x : role) x = static_cast<int>(rng.below(3));
    if (std::none_of(role.begin(), role.end(), [](int x) { return x == 2; }))
        role[rng.below(static_cast<std::uint32_t>(role.size()))] = 2;
    for (Vertex v = 0; v < evens + odds; ++v) {
        const bool even = v < evens;
        if (role[v] == 1) (even ? in.e_cond : in.o_cond).push_back(v);
        if (role[v] == 2) (even ? in.e_target : in.o_target).push_back(v);
    }
    return in;
}

}  // namespace tricolor
