#pragma once

#include "tricolor/lattice.hpp"

#include <span>
#include <vector>

namespace tricolor {

/// A rectangular grid of slots, row-major with the last axis fastest. Slots may be
/// pinned to a colour, free (kFree) or absent (kAbsent).
struct GridSpec {
    std::vector<int> dims;
    std::vector<bool> periodic;
    std::vector<int> pins;  // one per slot; empty means all free

    static GridSpec open(std::vector<int> dims);
};

struct TransferLimits {
    long long max_states = 4'000'000;  // distinct frontier configurations at any point
};

/// Counts proper q-colourings by sweeping slots in order and keeping the colours of the
/// last prod(dims[1..]) slots as state. A periodic first axis of length > 2 is closed by
/// summing over the colourings of the first slab. Throws CapExceeded when the frontier
/// does not fit in 64 bits or the state count passes the limit.
BigInt transfer_count(const GridSpec& grid, int q, const TransferLimits& limits = {});

/// The grid of a lattice (its enclosing box, absent sites marked), with per-vertex pins.
GridSpec grid_of(const Lattice& lattice, std::span<const int> vertex_pins = {});

}  // namespace tricolor
