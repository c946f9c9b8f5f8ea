#include "tricolor/enumerate.hpp"

#include "tricolor/transfer_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>

namespace tricolor {

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, int q, std::span<const int> pins, const ColoringVisitor* visit, long long cap)
        : g_(g), q_(q), visit_(visit), cap_(cap), colors_(g.vertex_count, 0),
          forbid_(static_cast<std::size_t>(g.vertex_count) * q, 0), pins_(g.vertex_count, kFree) {
        require(q >= 1 && q <= 16, "q must lie in [1, 16]");
        if (!pins.empty()) {
            require(static_cast<int>(pins.size()) == g.vertex_count, "pin vector length does not match the graph");
            for (int v = 0; v < g.vertex_count; ++v) {
                require(pins[v] >= kAbsent && pins[v] < q, "pin value out of range");
                pins_[v] = pins[v];
            }
        }
        for (int v = 0; v < g.vertex_count; ++v)
            if (pins_[v] != kAbsent) order_.push_back(v);
    }

    long long run() {
        descend(0);
        return found_;
    }

private:
    bool available(Vertex v, int c) const {
        if (pins_[v] >= 0 && pins_[v] != c) return false;
        return forbid_[static_cast<std::size_t>(v) * q_ + c] == 0;
    }

    bool has_option(Vertex v) const {
        for (int c = 0; c < q_; ++c)
            if (available(v, c)) return true;
        return false;
    }

    void descend(std::size_t depth) {
        if (depth == order_.size()) {
            if (++found_ > cap_)
                fail(ErrorCode::CapExceeded, "enumeration refused: more than " + std::to_string(cap_) +
                                                 " colourings (at least " + std::to_string(found_) + ")");
            if (visit_) (*visit_)(colors_);
            return;
        }
        const Vertex v = order_[depth];
        for (int c = 0; c < q_; ++c) {
            if (!available(v, c)) continue;
            colors_[v] = static_cast<std::uint8_t>(c);
            bool dead = false;
            for (Vertex w : g_.neighbors(v)) {
                if (w < v || pins_[w] == kAbsent) continue;
                if (++forbid_[static_cast<std::size_t>(w) * q_ + c] == 1 && !has_option(w)) dead = true;
            }
            if (!dead) descend(depth + 1);
            for (Vertex w : g_.neighbors(v)) {
                if (w < v || pins_[w] == kAbsent) continue;
                --forbid_[static_cast<std::size_t>(w) * q_ + c];
            }
        }
        colors_[v] = 0;
    }

    const Graph& g_;
    int q_;
    const ColoringVisitor* visit_;
    long long cap_;
    long long found_ = 0;
    std::vector<std::uint8_t> colors_;
    std::vector<int> forbid_;
    std::vector<int> pins_;
    std::vector<Vertex> order_;
};

}  // namespace

long long enumerate_graph(const Graph& graph, int q, std::span<const int> pins, const ColoringVisitor& visit,
                          long long cap) {
    return Backtracker(graph, q, pins, &visit, cap).run();
}

BigInt count_graph(const Graph& graph, int q, std::span<const int> pins, long long cap, unsigned threads) {
    std::vector<int> base(graph.vertex_count, kFree);
    if (!pins.empty()) {
        require(static_cast<int>(pins.size()) == graph.vertex_count, "pin vector length does not match the graph");
        base.assign(pins.begin(), pins.end());
    }
    const auto first = std::find(base.begin(), base.end(), kFree);
    if (first == base.end()) return Backtracker(graph, q, base, nullptr, cap).run();

    const auto pos = static_cast<std::size_t>(first - base.begin());
    std::vector<long long> partial(q, 0);
    parallel_for(static_cast<std::size_t>(q), threads, [&](std::size_t c) {
        std::vector<int> branch = base;
        branch[pos] = static_cast<int>(c);
        partial[c] = Backtracker(graph, q, branch, nullptr, cap).run();
    });
    BigInt total = 0;
    for (long long p : partial) total += p;
    if (total > cap)
        fail(ErrorCode::CapExceeded, "enumeration refused: more than " + std::to_string(cap) + " colourings");
    return total;
}

void for_each_coloring(const Lattice& lattice, int q, const BoundaryCondition& bc, const ColoringVisitor& visit,
                       long long cap) {
    const auto pins = bc.pins(lattice, q);
    if (!pins) return;
    enumerate_graph(lattice.graph(), q, *pins, visit, cap);
}

std::vector<Coloring> enumerate_colorings(const std::shared_ptr<const Lattice>& lattice, int q,
                                          const BoundaryCondition& bc, long long cap) {
    std::vector<Coloring> out;
    for_each_coloring(
        *lattice, q, bc, [&](std::span<const std::uint8_t> colors) { out.emplace_back(lattice, q, colors); }, cap);
    return out;
}

BigInt count_colorings(const Lattice& lattice, int q, const BoundaryCondition& bc, long long cap, unsigned threads) {
    const auto pins = bc.pins(lattice, q);
    if (!pins) return 0;
    try {
        return count_graph(lattice.graph(), q, *pins, cap, threads);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
    }
    return transfer_count(grid_of(lattice, *pins), q);
}

// ---------------------------------------------------------------- StateSpace

StateSpace::StateSpace(std::shared_ptr<const Lattice> lattice, int q, const BoundaryCondition& bc, long long cap)
    : lattice_(std::move(lattice)), graph_(lattice_, &lattice_->graph()), q_(q), bc_(bc),
      constrained_(!bc.is_none()), width_(lattice_->size()) {
    for_each_coloring(
        *lattice_, q, bc,
        [&](std::span<const std::uint8_t> colors) {
            colors_.insert(colors_.end(), colors.begin(), colors.end());
            ++count_;
        },
        cap);
}

StateSpace::StateSpace(std::shared_ptr<const Graph> graph, int q, std::vector<int> pins, long long cap)
    : graph_(std::move(graph)), q_(q), width_(graph_->vertex_count) {
    constrained_ = std::any_of(pins.begin(), pins.end(), [](int p) { return p != kFree; });
    enumerate_graph(
        *graph_, q, pins,
        [&](std::span<const std::uint8_t> colors) {
            colors_.insert(colors_.end(), colors.begin(), colors.end());
            ++count_;
        },
        cap);
}

const Lattice& StateSpace::lattice() const {
    require(lattice_ != nullptr, "this state space is over a bare graph");
    return *lattice_;
}

std::optional<int> StateSpace::index_of(std::span<const std::uint8_t> colors) const {
    if (static_cast<int>(colors.size()) != width_) return std::nullopt;
    int lo = 0;
    int hi = count_;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        const int cmp = std::memcmp(state(mid).data(), colors.data(), static_cast<std::size_t>(width_));
        if (cmp == 0) return mid;
        if (cmp < 0) lo = mid + 1;
        else hi = mid;
    }
    return std::nullopt;
}

Coloring StateSpace::coloring(int i) const {
    require(lattice_ != nullptr, "this state space is over a bare graph");
    return Coloring(lattice_, q_, state(i));
}

}  // namespace tricolor
