#include "tricolor/transfer_matrix.hpp"

#include "tricolor/coloring.hpp"

#include <unordered_map>

namespace tricolor {

GridSpec GridSpec::open(std::vector<int> dims) {
    GridSpec g;
    g.periodic.assign(dims.size(), false);
    g.dims = std::move(dims);
    return g;
}

namespace {

struct Sweep {
    int slots = 0;
    int frontier = 1;  // F = prod dims[1..]
    int bits = 2;
    std::uint64_t field_mask = 3;
    int none = 3;  // code for "no colour" (absent or not yet seen)
    std::vector<int> pins;
    std::vector<std::vector<int>> back;  // offsets o with slot i - o a neighbour
    std::vector<int> wrap_partner;       // first-slab partner across a periodic first axis, or -1
};

Sweep prepare(const GridSpec& grid, int q) {
    const int d = static_cast<int>(grid.dims.size());
    require(d >= 1, "grid needs at least one axis");
    require(static_cast<int>(grid.periodic.size()) == d, "periodic flags must match the grid dimension");
    Sweep s;
    std::vector<long long> stride(d, 1);
    long long total = 1;
    for (int k = d - 1; k >= 0; --k) {
        require(grid.dims[k] >= 1, "grid side lengths must be positive");
        stride[k] = total;
        total *= grid.dims[k];
        require(total <= (1LL << 26), "grid too large");
    }
    s.slots = static_cast<int>(total);
    s.frontier = static_cast<int>(stride[0]);
    s.bits = bits_for_colors(q + 1);
    s.none = q;
    s.field_mask = (std::uint64_t{1} << s.bits) - 1;
    if (static_cast<long long>(s.frontier) * s.bits > 64)
        fail(ErrorCode::CapExceeded, "transfer-matrix frontier of " + std::to_string(s.frontier) +
                                         " sites does not fit in a 64-bit state");
    s.pins = grid.pins.empty() ? std::vector<int>(s.slots, kFree) : grid.pins;
    require(static_cast<int>(s.pins.size()) == s.slots, "pin vector length does not match the grid");
    for (int p : s.pins) require(p >= kAbsent && p < q, "pin value out of range");

    s.back.assign(s.slots, {});
    s.wrap_partner.assign(s.slots, -1);
    std::vector<int> c(d);
    for (int i = 0; i < s.slots; ++i) {
        long long rem = i;
        for (int k = 0; k < d; ++k) {
            c[k] = static_cast<int>(rem / stride[k]);
            rem %= stride[k];
        }
        for (int k = 0; k < d; ++k) {
            if (c[k] >= 1) s.back[i].push_back(static_cast<int>(stride[k]));
            if (grid.periodic[k] && grid.dims[k] > 2 && c[k] == grid.dims[k] - 1) {
                if (k == 0) s.wrap_partner[i] = static_cast<int>(i - (grid.dims[0] - 1) * stride[0]);
                else s.back[i].push_back(static_cast<int>((grid.dims[k] - 1) * stride[k]));
            }
        }
    }
    return s;
}

BigInt sweep(const Sweep& s, int q, const std::vector<int>* first_slab, long long max_states) {
    std::uint64_t start = 0;
    for (int f = 0; f < s.frontier; ++f) start |= static_cast<std::uint64_t>(s.none) << (f * s.bits);
    std::unordered_map<std::uint64_t, BigInt> cur{{start, BigInt(1)}};
    std::unordered_map<std::uint64_t, BigInt> next;
    auto field = [&](std::uint64_t key, int slot) {
        return static_cast<int>((key >> ((slot % s.frontier) * s.bits)) & s.field_mask);
    };
    for (int i = 0; i < s.slots; ++i) {
        next.clear();
        const int shift = (i % s.frontier) * s.bits;
        int lo = 0, hi = q - 1;
        if (s.pins[i] == kAbsent) lo = hi = s.none;
        else if (first_slab && i < s.frontier) lo = hi = (*first_slab)[i];
        else if (s.pins[i] >= 0) lo = hi = s.pins[i];
        for (const auto& [key, count] : cur) {
            for (int c = lo; c <= hi; ++c) {
                bool ok = true;
                if (c != s.none) {
                    for (int o : s.back[i])
                        if (field(key, i - o) == c) ok = false;
                    if (first_slab && s.wrap_partner[i] >= 0 && (*first_slab)[s.wrap_partner[i]] == c) ok = false;
                }
                if (!ok) continue;
                const std::uint64_t nk = (key & ~(s.field_mask << shift)) | (static_cast<std::uint64_t>(c) << shift);
                next[nk] += count;
            }
        }
        if (static_cast<long long>(next.size()) > max_states)
            fail(ErrorCode::CapExceeded, "transfer-matrix state count exceeded " + std::to_string(max_states));
        cur.swap(next);
    }
    BigInt total = 0;
    for (const auto& [key, count] : cur) total += count;
    return total;
}

/// All colourings of the first slab consistent with pins and in-slab adjacency.
void first_slabs(const Sweep& s, int q, std::vector<int>& slab, int i, std::vector<std::vector<int>>& out) {
    if (i == s.frontier) {
        out.push_back(slab);
        return;
    }
    if (s.pins[i] == kAbsent) {
        slab[i] = s.none;
        first_slabs(s, q, slab, i + 1, out);
        return;
    }
    for (int c = 0; c < q; ++c) {
        if (s.pins[i] >= 0 && s.pins[i] != c) continue;
        bool ok = true;
        for (int o : s.back[i])
            if (i - o >= 0 && slab[i - o] == c) ok = false;
        if (!ok) continue;
        slab[i] = c;
        first_slabs(s, q, slab, i + 1, out);
    }
}

}  // namespace

BigInt transfer_count(const GridSpec& grid, int q, const TransferLimits& limits) {
    require(q >= 1 && q <= 15, "q must lie in [1, 15] for the transfer matrix");
    const Sweep s = prepare(grid, q);
    const bool wraps = grid.periodic[0] && grid.dims[0] > 2;
    if (!wraps) return sweep(s, q, nullptr, limits.max_states);
    std::vector<int> slab(s.frontier, s.none);
    std::vector<std::vector<int>> slabs;
    first_slabs(s, q, slab, 0, slabs);
    if (static_cast<long long>(slabs.size()) > limits.max_states)
        fail(ErrorCode::CapExceeded, "too many first-slab colourings for a periodic transfer matrix");
    BigInt total = 0;
    for (const auto& fs : slabs) total += sweep(s, q, &fs, limits.max_states);
    return total;
}

GridSpec grid_of(const Lattice& lattice, std::span<const int> vertex_pins) {
    const LatticeSpec& spec = lattice.spec();
    const bool torus = lattice.is_torus();
    const int side = torus ? spec.n : 2 * spec.n + 1 + (spec.extended ? 2 : 0);
    const int low = torus ? 0 : -(spec.n + (spec.extended ? 1 : 0));
    GridSpec g;
    g.dims.assign(spec.d, side);
    g.periodic.assign(spec.d, torus);
    long long slots = 1;
    for (int k = 0; k < spec.d; ++k) slots *= side;
    g.pins.assign(static_cast<std::size_t>(slots), kAbsent);
    require(vertex_pins.empty() || static_cast<int>(vertex_pins.size()) == lattice.size(),
            "pin vector length does not match the lattice");
    for (Vertex v = 0; v < lattice.size(); ++v) {
        long long slot = 0;
        for (int x : lattice.coords(v)) slot = slot * side + (x - low);
        g.pins[static_cast<std::size_t>(slot)] = vertex_pins.empty() ? kFree : vertex_pins[v];
    }
    return g;
}

}  // namespace tricolor
