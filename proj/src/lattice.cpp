#include "tricolor/lattice.hpp"

#include <algorithm>
#include <bit>

namespace tricolor {

std::string describe(const LatticeSpec& spec) {
    std::string s = spec.kind == LatticeKind::Torus ? "torus" : (spec.extended ? "extended-box" : "box");
    return s + "(d=" + std::to_string(spec.d) + ",n=" + std::to_string(spec.n) + ")";
}

std::vector<ShiftDirection> all_directions(int d) {
    std::vector<ShiftDirection> out;
    out.reserve(2 * d);
    for (int r = 0; r < 2 * d; ++r) out.push_back(ShiftDirection::from_rank(r));
    return out;
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::uint8_t> side) {
    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (auto [u, v] : edges) {
        require(u >= 0 && v >= 0 && u < vertex_count && v < vertex_count, "edge endpoint out of range");
        require(u != v, "self-loops are not allowed");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Graph g;
    g.vertex_count = vertex_count;
    g.offsets.assign(1, 0);
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.targets.insert(g.targets.end(), list.begin(), list.end());
        g.offsets.push_back(static_cast<int>(g.targets.size()));
    }
    require(side.empty() || static_cast<int>(side.size()) == vertex_count, "side labels must cover every vertex");
    g.side = std::move(side);
    return g;
}

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) {
        require(v >= 0 && v < universe, "vertex out of range");
        s.insert(v);
    }
    return s;
}

void VertexSet::trim() {
    if (universe_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

void VertexSet::check_same(const VertexSet& o) const {
    require(universe_ == o.universe_, "vertex sets over different lattices");
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
}

// ---------------------------------------------------------------- Lattice

namespace {

constexpr long long kMaxSlots = 1LL << 26;

bool in_core_box(std::span<const int> c, int n) {
    return std::all_of(c.begin(), c.end(), [n](int x) { return x >= -n && x <= n; });
}

int coordinate_sum_parity(std::span<const int> c) {
    long long sum = 0;
    for (int x : c) sum += x;
    return static_cast<int>(((sum % 2) + 2) % 2);
}

}  // namespace

Lattice::Lattice(const LatticeSpec& spec) : spec_(spec) {
    require(spec.d >= 1, "lattice dimension d must be positive (got d=" + std::to_string(spec.d) + ")");
    if (spec.kind == LatticeKind::Torus) {
        require(spec.n >= 2, "torus side n must be at least 2 (got n=" + std::to_string(spec.n) + ")");
        require(spec.n % 2 == 0, "torus side n must be even for bipartiteness (got n=" + std::to_string(spec.n) + ")");
        require(!spec.extended, "the extended region is only defined for boxes");
        side_ = spec.n;
        low_ = 0;
    } else {
        require(spec.n >= 1, "box half-width n must be at least 1 (got n=" + std::to_string(spec.n) + ")");
        side_ = 2 * spec.n + 1 + (spec.extended ? 2 : 0);
        low_ = -(spec.n + (spec.extended ? 1 : 0));
    }
    long long slots = 1;
    for (int k = 0; k < spec.d; ++k) {
        slots *= side_;
        require(slots <= kMaxSlots, "lattice too large: " + describe(spec));
    }

    const int d = spec.d;
    slot_to_vertex_.assign(static_cast<std::size_t>(slots), -1);
    std::vector<int> c(d, low_);
    for (long long slot = 0; slot < slots; ++slot) {
        long long rem = slot;
        for (int k = d - 1; k >= 0; --k) {
            c[k] = low_ + static_cast<int>(rem % side_);
            rem /= side_;
        }
        const int par = coordinate_sum_parity(c);
        const bool present = !spec.extended || in_core_box(c, spec.n) || par == 1;
        if (!present) continue;
        slot_to_vertex_[slot] = static_cast<Vertex>(parity_.size());
        coords_.insert(coords_.end(), c.begin(), c.end());
        parity_.push_back(par == 0 ? Parity::Even : Parity::Odd);
    }

    const int count = size();
    shift_table_.assign(static_cast<std::size_t>(count) * 2 * d, -1);
    std::vector<std::pair<Vertex, Vertex>> edge_pairs;
    even_ = VertexSet(count);
    odd_ = VertexSet(count);
    outer_boundary_ = VertexSet(count);
    std::vector<int> t(d);
    for (Vertex v = 0; v < count; ++v) {
        (parity_[v] == Parity::Even ? even_ : odd_).insert(v);
        auto cv = coords(v);
        for (int r = 0; r < 2 * d; ++r) {
            const ShiftDirection s = ShiftDirection::from_rank(r);
            std::copy(cv.begin(), cv.end(), t.begin());
            t[s.axis()] += s.sign();
            std::optional<Vertex> w;
            if (is_torus()) t[s.axis()] = (t[s.axis()] % side_ + side_) % side_;
            w = find(t);
            if (w) {
                shift_table_[static_cast<std::size_t>(v) * 2 * d + r] = *w;
                if (v < *w) edge_pairs.emplace_back(v, *w);
            } else {
                outer_boundary_.insert(v);
            }
        }
    }
    std::vector<std::uint8_t> side(count);
    for (Vertex v = 0; v < count; ++v) side[v] = static_cast<std::uint8_t>(parity_[v]);
    graph_ = Graph::from_edges(count, edge_pairs, std::move(side));
    for (Vertex v = 0; v < count; ++v)
        for (Vertex w : graph_.neighbors(v))
            if (v < w) edges_.push_back({v, w});
}

std::optional<Vertex> Lattice::find(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != spec_.d) return std::nullopt;
    long long slot = 0;
    for (int k = 0; k < spec_.d; ++k) {
        const int x = c[k] - low_;
        if (x < 0 || x >= side_) return std::nullopt;
        slot = slot * side_ + x;
    }
    const Vertex v = slot_to_vertex_[static_cast<std::size_t>(slot)];
    if (v < 0) return std::nullopt;
    return v;
}

Vertex Lattice::origin() const {
    std::vector<int> zero(spec_.d, 0);
    return *find(zero);
}

bool Lattice::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

// ---------------------------------------------------------------- operators

std::vector<Edge> edge_boundary(const Lattice& lattice, const VertexSet& x) {
    std::vector<Edge> out;
    for (const Edge& e : lattice.edges())
        if (x.contains(e.u) != x.contains(e.v)) out.push_back(e);
    return out;
}

VertexSet internal_boundary(const Lattice& lattice, const VertexSet& x) {
    VertexSet out(lattice.size());
    x.for_each([&](Vertex v) {
        for (Vertex w : lattice.neighbors(v))
            if (!x.contains(w)) {
                out.insert(v);
                break;
            }
    });
    return out;
}

VertexSet external_boundary(const Lattice& lattice, const VertexSet& x) {
    VertexSet out(lattice.size());
    x.for_each([&](Vertex v) {
        for (Vertex w : lattice.neighbors(v))
            if (!x.contains(w)) out.insert(w);
    });
    return out;
}

VertexSet closure(const Lattice& lattice, const VertexSet& x) {
    return x | external_boundary(lattice, x);
}

BoundaryOperators boundary_operators(const Lattice& lattice, const VertexSet& x) {
    BoundaryOperators ops;
    ops.edge_boundary = edge_boundary(lattice, x);
    ops.internal = internal_boundary(lattice, x);
    ops.external = external_boundary(lattice, x);
    ops.closure = x | ops.external;
    ops.even_part = x & lattice.even();
    ops.odd_part = x & lattice.odd();
    return ops;
}

VertexSet neighborhood(const Lattice& lattice, Vertex v) {
    VertexSet out(lattice.size());
    for (Vertex w : lattice.neighbors(v)) out.insert(w);
    return out;
}

int degree_into(const Lattice& lattice, Vertex v, const VertexSet& x) {
    int k = 0;
    for (Vertex w : lattice.neighbors(v)) k += x.contains(w) ? 1 : 0;
    return k;
}

std::vector<VertexSet> connected_components(const Lattice& lattice, const VertexSet& x) {
    std::vector<VertexSet> out;
    VertexSet seen(lattice.size());
    std::vector<Vertex> stack;
    x.for_each([&](Vertex start) {
        if (seen.contains(start)) return;
        VertexSet comp(lattice.size());
        stack.assign(1, start);
        seen.insert(start);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex w : lattice.neighbors(v)) {
                if (x.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    });
    return out;
}

VertexSet shifted(const Lattice& lattice, const VertexSet& x, ShiftDirection s) {
    VertexSet out(lattice.size());
    x.for_each([&](Vertex v) {
        if (auto w = lattice.shift(v, s)) out.insert(*w);
    });
    return out;
}

}  // namespace tricolor
