#pragma once

#include "tricolor/enumerate.hpp"
#include "tricolor/rng.hpp"

#include <map>
#include <memory>
#include <vector>

namespace tricolor {

struct InfluenceReport {
    BigInt with_center;            // |C_3^O(v0)|
    BigInt total;                  // |C_3^O|
    Rational ratio;                // with_center / total (0 when total is 0)
    std::map<int, BigInt> by_size; // cutset size |gamma| -> number of colourings in C_3^O(v0)
};

/// Exact |C_3^O(v0)| / |C_3^O| on a box, with the colourings in C_3^O(v0) grouped by the
/// size of their cutset gamma(chi). The histogram needs d >= 2.
InfluenceReport influence_ratio(const std::shared_ptr<const Lattice>& box, Vertex v0,
                                long long cap = kDefaultEnumerationCap, unsigned threads = 1);

/// A bipartite graph (graph.side holds the classes) with conditioning sets E', O' and
/// target sets E'', O''.
struct BipartiteInstance {
    Graph graph;
    std::vector<Vertex> e_cond, o_cond;      // E', O'
    std::vector<Vertex> e_target, o_target;  // E'', O''
};

struct LcolReport {
    BigInt conditioned;  // colourings with 0 on E', 1 on O'
    BigInt joint;        // ... and additionally 0 on E'', 1 on O''
    Rational lhs;        // joint / conditioned
    Rational rhs;        // 3^{-|E'' u O''|}
    bool holds = false;
    bool equality = false;
};

/// Uniform measure on the proper 3-colourings: P(0 on E'', 1 on O'' | 0 on E', 1 on O')
/// against 3^{-|E'' u O''|}. Refuses an empty conditioning event.
LcolReport lcol_check(const BipartiteInstance& instance);

/// A random bipartite graph with 1..max_side vertices per class, edge probability 1/2,
/// and random disjoint conditioning/target sets with a nonempty target.
BipartiteInstance random_bipartite_instance(CounterRng& rng, int max_side = 4);

}  // namespace tricolor
