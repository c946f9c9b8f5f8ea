#pragma once

#include "tricolor/coloring.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tricolor {

constexpr long long kDefaultEnumerationCap = 10'000'000;

using ColoringVisitor = std::function<void(std::span<const std::uint8_t>)>;

/// Backtracking over vertices in index order, colours ascending, with forward checking.
/// Visits every proper colouring matching `pins` exactly once in lexicographic order and
/// returns how many there were. Throws CapExceeded once more than `cap` are found.
/// Absent vertices are reported with colour 0 and carry no constraint.
long long enumerate_graph(const Graph& graph, int q, std::span<const int> pins, const ColoringVisitor& visit,
                          long long cap = kDefaultEnumerationCap);

/// Counting-only variant, split over the first free vertex's colour on `threads` workers.
BigInt count_graph(const Graph& graph, int q, std::span<const int> pins, long long cap = kDefaultEnumerationCap,
                   unsigned threads = 1);

/// Proper colourings of a lattice satisfying a boundary condition, lexicographic order.
void for_each_coloring(const Lattice& lattice, int q, const BoundaryCondition& bc, const ColoringVisitor& visit,
                       long long cap = kDefaultEnumerationCap);

std::vector<Coloring> enumerate_colorings(const std::shared_ptr<const Lattice>& lattice, int q,
                                          const BoundaryCondition& bc = {}, long long cap = kDefaultEnumerationCap);

/// Exact count; falls back to the transfer matrix when enumeration would exceed `cap`.
BigInt count_colorings(const Lattice& lattice, int q, const BoundaryCondition& bc = {},
                       long long cap = kDefaultEnumerationCap, unsigned threads = 1);

/// All enumerated states of a lattice (or a bare graph), stored row-major in lexicographic
/// order so that lookups are binary searches.
class StateSpace {
public:
    StateSpace(std::shared_ptr<const Lattice> lattice, int q, const BoundaryCondition& bc = {},
               long long cap = kDefaultEnumerationCap);
    /// States of a bare graph with optional pins (kFree / colour per vertex).
    StateSpace(std::shared_ptr<const Graph> graph, int q, std::vector<int> pins = {},
               long long cap = kDefaultEnumerationCap);

    bool has_lattice() const { return lattice_ != nullptr; }
    const Lattice& lattice() const;
    const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
    const Graph& graph() const { return *graph_; }
    /// True when states are constrained (a boundary condition or pins).
    bool constrained() const { return constrained_; }
    int q() const { return q_; }
    const BoundaryCondition& boundary_condition() const { return bc_; }
    int size() const { return count_; }
    int vertex_count() const { return width_; }

    std::span<const std::uint8_t> state(int i) const {
        return {colors_.data() + static_cast<std::size_t>(i) * width_, static_cast<std::size_t>(width_)};
    }
    std::optional<int> index_of(std::span<const std::uint8_t> colors) const;
    Coloring coloring(int i) const;

private:
    std::shared_ptr<const Lattice> lattice_;
    std::shared_ptr<const Graph> graph_;
    int q_;
    BoundaryCondition bc_;
    bool constrained_ = false;
    int width_;
    int count_ = 0;
    std::vector<std::uint8_t> colors_;
};

}  // namespace tricolor
