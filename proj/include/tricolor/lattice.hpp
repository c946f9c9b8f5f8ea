#pragma once

#include "tricolor/common.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricolor {

using Vertex = std::int32_t;

enum class LatticeKind { Box, Torus };

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Box: {-n..n}^d. Torus: Z^d_n with n even. `extended` adds the odd vertices of
/// the shell {-(n+1)..n+1}^d to a box.
struct LatticeSpec {
    LatticeKind kind = LatticeKind::Box;
    int d = 2;
    int n = 1;
    bool extended = false;

    static LatticeSpec box(int d, int n) { return {LatticeKind::Box, d, n, false}; }
    static LatticeSpec torus(int d, int n) { return {LatticeKind::Torus, d, n, false}; }
    static LatticeSpec extended_box(int d, int n) { return {LatticeKind::Box, d, n, true}; }

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

std::string describe(const LatticeSpec& spec);

/// Direction s in {+-1, ..., +-d}. Ordered +1 < -1 < +2 < -2 < ...
class ShiftDirection {
public:
    constexpr explicit ShiftDirection(int s) : s_(s) {}

    constexpr int value() const { return s_; }
    constexpr int axis() const { return (s_ > 0 ? s_ : -s_) - 1; }
    constexpr int sign() const { return s_ > 0 ? 1 : -1; }
    constexpr ShiftDirection reversed() const { return ShiftDirection(-s_); }
    constexpr int rank() const { return 2 * axis() + (s_ < 0 ? 1 : 0); }

    static constexpr ShiftDirection from_rank(int r) {
        return ShiftDirection(r % 2 == 0 ? r / 2 + 1 : -(r / 2 + 1));
    }

    friend constexpr bool operator==(ShiftDirection a, ShiftDirection b) { return a.s_ == b.s_; }
    friend constexpr bool operator<(ShiftDirection a, ShiftDirection b) { return a.rank() < b.rank(); }

private:
    int s_;
};

/// All 2d directions in the fixed order.
std::vector<ShiftDirection> all_directions(int d);

/// Per-vertex pin values used by the counting routines besides actual colours.
constexpr int kFree = -1;
constexpr int kAbsent = -2;  // vertex ignored entirely (no colour, no constraint)

/// Undirected simple graph in CSR form, with an optional bipartition side per vertex.
struct Graph {
    int vertex_count = 0;
    std::vector<int> offsets{0};
    std::vector<Vertex> targets;
    std::vector<std::uint8_t> side;  // 0 = even class, 1 = odd class; empty if unknown

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
    int degree(Vertex v) const { return offsets[v + 1] - offsets[v]; }

    /// Builds from an edge list; duplicate and reversed edges collapse.
    static Graph from_edges(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                            std::vector<std::uint8_t> side = {});
};

/// Dense bitset over the vertices of one lattice.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::span<const Vertex> members);

    int universe() const { return universe_; }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void set(Vertex v, bool on) { on ? insert(v) : erase(v); }

    int count() const;
    bool empty() const;
    std::optional<Vertex> first() const;
    std::vector<Vertex> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void check_same(const VertexSet& o) const;
    void trim();

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable geometry. Vertices are numbered row-major over coordinates of the
/// enclosing box (last coordinate fastest), skipping absent sites.
class Lattice {
public:
    explicit Lattice(const LatticeSpec& spec);

    static std::shared_ptr<const Lattice> make(const LatticeSpec& spec) {
        return std::make_shared<const Lattice>(spec);
    }

    const LatticeSpec& spec() const { return spec_; }
    LatticeKind kind() const { return spec_.kind; }
    bool is_torus() const { return spec_.kind == LatticeKind::Torus; }
    int dim() const { return spec_.d; }
    int size() const { return static_cast<int>(parity_.size()); }
    int ambient_degree() const { return 2 * spec_.d; }

    std::span<const int> coords(Vertex v) const {
        return {coords_.data() + static_cast<std::size_t>(v) * spec_.d, static_cast<std::size_t>(spec_.d)};
    }
    std::optional<Vertex> find(std::span<const int> coords) const;
    Vertex origin() const;

    Parity parity(Vertex v) const { return parity_[v]; }
    bool is_even(Vertex v) const { return parity_[v] == Parity::Even; }

    std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
    int degree(Vertex v) const { return graph_.degree(v); }
    const Graph& graph() const { return graph_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(Vertex u, Vertex v) const;

    /// sigma_s(v); nullopt when the image leaves a box.
    std::optional<Vertex> shift(Vertex v, ShiftDirection s) const {
        const Vertex w = shift_table_[static_cast<std::size_t>(v) * 2 * spec_.d + s.rank()];
        if (w < 0) return std::nullopt;
        return w;
    }

    VertexSet empty_set() const { return VertexSet(size()); }
    VertexSet all() const { return VertexSet::full(size()); }
    const VertexSet& even() const { return even_; }
    const VertexSet& odd() const { return odd_; }
    const VertexSet& of_parity(Parity p) const { return p == Parity::Even ? even_ : odd_; }

    /// Vertices with a Z^d neighbour outside the lattice (empty on a torus).
    const VertexSet& outer_boundary() const { return outer_boundary_; }

private:
    LatticeSpec spec_;
    std::vector<int> coords_;
    std::vector<Parity> parity_;
    std::vector<Vertex> slot_to_vertex_;
    int side_ = 0;
    int low_ = 0;
    Graph graph_;
    std::vector<Edge> edges_;
    std::vector<Vertex> shift_table_;
    VertexSet even_;
    VertexSet odd_;
    VertexSet outer_boundary_;
};

struct BoundaryOperators {
    std::vector<Edge> edge_boundary;
    VertexSet internal;
    VertexSet external;
    VertexSet closure;
    VertexSet even_part;
    VertexSet odd_part;
};

std::vector<Edge> edge_boundary(const Lattice& lattice, const VertexSet& x);
VertexSet internal_boundary(const Lattice& lattice, const VertexSet& x);
VertexSet external_boundary(const Lattice& lattice, const VertexSet& x);
VertexSet closure(const Lattice& lattice, const VertexSet& x);
BoundaryOperators boundary_operators(const Lattice& lattice, const VertexSet& x);

/// Neighbours of v, as a set.
VertexSet neighborhood(const Lattice& lattice, Vertex v);

/// |{neighbours of v in x}|.
int degree_into(const Lattice& lattice, Vertex v, const VertexSet& x);

/// Maximal connected pieces of the induced subgraph, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Lattice& lattice, const VertexSet& x);

/// sigma_s(X) restricted to the lattice.
VertexSet shifted(const Lattice& lattice, const VertexSet& x, ShiftDirection s);

}  // namespace tricolor
