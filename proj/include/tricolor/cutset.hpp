#pragma once

#include "tricolor/coloring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tricolor {

/// A minimal edge cutset gamma = grad(C) with W = V \ C. `seed_parity` is the
/// parity class whose zero set grew the witness R (Even = even-seeded).
struct Cutset {
    Parity seed_parity = Parity::Even;
    VertexSet seed;        // R
    VertexSet complement;  // C
    VertexSet region;      // W
    VertexSet interior;    // int gamma; always W on a box
    std::vector<Edge> edges;
    std::optional<Vertex> v0;  // box cutsets only

    int size() const { return static_cast<int>(edges.size()); }
    bool interior_is_region() const { return interior == region; }
    /// |W^{P'}| and |W^P| with P the seed parity ("w_o" and "w_e" for even seeds).
    int outer_count(const Lattice& lattice) const { return (region & lattice.of_parity(opposite(seed_parity))).count(); }
    int inner_count(const Lattice& lattice) const { return (region & lattice.of_parity(seed_parity)).count(); }
};

/// gamma(chi) on a box: R = component of (I^E)^+ containing v0, C = component of
/// complement(R) containing the box boundary. Requires d >= 2 and chi in C_3^O(v0).
Cutset build_box_cutset(const Coloring& chi, Vertex v0);

/// Every gamma(R, C, chi) over both parities on a torus, in a fixed order:
/// even seeds first, then by smallest vertex of R, then of C.
std::vector<Cutset> build_torus_cutsets(const Coloring& chi);

enum class FamilyOutcome { Even, Odd, NotEvenClass };

const char* to_string(FamilyOutcome o);

struct Family {
    FamilyOutcome outcome = FamilyOutcome::NotEvenClass;
    std::vector<Cutset> cutsets;
};

/// Greedy choice of Gamma(chi): for each component R of (I^P)^+ take the largest
/// component of complement(R) as C (ties to the smallest vertex). Accept P when all
/// interiors equal W, are pairwise disjoint and cover I^P. Even is tried first.
Family select_family(const Coloring& chi);

struct PropertyReport {
    std::optional<bool> p1;  // v0 in W, W misses the box boundary (boxes only)
    bool p2 = false;         // inner boundary in opposite class, outer boundary in seed class
    bool p3 = false;         // no zeros on either boundary layer
    bool p4 = false;         // each inner-boundary vertex sees a zero inside W
    bool p5 = false;         // W^{P'} = ext W^P and W^P = {y in P : dy in W^{P'}}
    bool size_identity = false;     // |gamma| = 2d(|W^{P'}| - |W^P|)
    std::optional<bool> p8a;        // |gamma| >= |W|^{1-1/d}, only when |W| <= |V|/2
    bool p8b = false;               // |gamma| >= d^2
    bool p8b_asserted = false;      // d is at least the large-d threshold
    bool minimal = false;           // W and C both connected
    bool two_layer = false;         // colours 1/2 constant on each side of every boundary component

    /// The properties expected to hold: p1-p5, p8a, the size identity,
    /// minimality, the two-layer structure, and p8b when asserted.
    bool asserted_hold() const;
};

PropertyReport verify_properties(const Cutset& cut, const Coloring& chi, int large_d_threshold = 10);

/// A sequence of (cutset size, vertex) pairs.
using Profile = std::vector<std::pair<int, Vertex>>;

/// True iff the family has distinct members gamma_i with |gamma_i| = c_i and v_i in
/// (int gamma_i)^E. Rejects colourings outside the even class.
bool profile_membership(const Coloring& chi, const Profile& profile);
bool profile_membership(const Family& family, const Lattice& lattice, const Profile& profile);

}  // namespace tricolor
