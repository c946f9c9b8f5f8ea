#pragma once

#include "tricolor/cutset.hpp"
#include "tricolor/rng.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tricolor {

/// The region being shifted together with its seed parity. Every set named
/// "even"/"odd" below is relative to `inner`: E means the seed class, O the other.
struct ShiftRegion {
    VertexSet w;
    Parity inner = Parity::Even;

    /// W = int gamma (equal to W(gamma) on a box and for family members).
    static ShiftRegion of(const Cutset& cut) { return {cut.interior, cut.seed_parity}; }
};

/// W^s = {x in int W : sigma_{-s}(x) not in W}.
VertexSet boundary_layer(const Lattice& lattice, const VertexSet& w, ShiftDirection s);

/// chi^s_S: 0 on S, chi on (W^s \ S) and off W, f(chi(sigma_{-s} v)) on W \ W^s.
/// Throws InvalidArgument when S is not inside W^s.
Coloring shift_coloring(const Coloring& chi, const VertexSet& w, ShiftDirection s, const VertexSet& subset);

/// chi(v) = chi'(v) off W and f(chi'(sigma_s v)) on W.
Coloring reconstruct(const Coloring& chi_prime, const VertexSet& w, ShiftDirection s);

/// Calls fn(S, chi^s_S) for every S in W^s in increasing bitmask order over the
/// sorted members of W^s. Refuses (CapExceeded) when |W^s| > max_layer.
void for_each_shift(const Coloring& chi, const VertexSet& w, ShiftDirection s,
                    const std::function<void(const VertexSet&, const Coloring&)>& fn, int max_layer = 20);

/// A uniformly random S in W^s (each member independently with probability 1/2).
VertexSet sample_subset(const VertexSet& layer, CounterRng& rng);

// ---------------------------------------------------------------- approximations

enum class ApproximationSource { ExactW, External };

struct Approximation {
    VertexSet set;
    ApproximationSource source = ApproximationSource::External;

    static Approximation exact(const ShiftRegion& region) { return {region.w, ApproximationSource::ExactW}; }
};

/// ceil(2d - sqrt d), exactly.
int approximation_threshold(int d);

/// A^E contains W^E, A^O inside W^O, every x in A^E has >= T neighbours in A^O and
/// every y in O \ A^O has >= T Z^d-neighbours outside A^E (a missing box neighbour
/// counts as outside).
bool is_approximation(const Lattice& lattice, const VertexSet& a, const ShiftRegion& region);

/// Approximations obtained from W by adding outside E-vertices with at least T
/// neighbours in W^O and removing O-vertices; at most 2^max_bits candidates are tried.
std::vector<VertexSet> approximations_near(const Lattice& lattice, const ShiftRegion& region, int max_bits = 16);

struct QSets {
    VertexSet qe;  // A^E cap ext(O \ A^O)
    VertexSet qo;  // (O \ A^O) cap ext(A^E)
    VertexSet u;   // {x in Q^E : chi'(sigma_s x) = 0}
};

/// Q^E and Q^O only depend on A; U additionally on (s, chi'). Pass no chi' to leave U empty.
QSets q_sets(const Lattice& lattice, const VertexSet& a, Parity inner, ShiftDirection s,
             const Coloring* chi_prime = nullptr);

/// The four containments that pin the unknown region to Q^E and Q^O.
bool q_containments_hold(const Lattice& lattice, const VertexSet& a, const ShiftRegion& region, const QSets& q);

// ---------------------------------------------------------------- direction and flow

enum class DirectionRule { Primary, Fallback };

const char* to_string(DirectionRule r);

struct DirectionChoice {
    ShiftDirection s{1};
    DirectionRule rule = DirectionRule::Primary;
    int layer_size = 0;  // |W^s|
    int overlap = 0;     // |sigma_s(Q^E) cap Q^O|
};

/// Smallest s with 5|W^s| >= 4(w_o - w_e) and d |sigma_s(Q^E) cap Q^O|^2 <= 25 |W^s|^2;
/// otherwise the s maximising |W^s| (earliest on ties), labelled Fallback.
DirectionChoice select_direction(const Lattice& lattice, const ShiftRegion& region, const VertexSet& a);

struct FlowCertificate {
    ShiftDirection s{1};
    VertexSet layer;  // W^s
    VertexSet c;      // W^s cap A^O cap sigma_s(Q^E)
    VertexSet d;      // W^s \ C
};

FlowCertificate flow_certificate(const Lattice& lattice, const ShiftRegion& region, const VertexSet& a, ShiftDirection s);

/// (1/4)^{|C cap I(chi')|} (3/4)^{|C \ I(chi')|} (1/2)^{|D|}.
Rational flow_weight(const FlowCertificate& cert, const Coloring& chi_prime);

/// As above, after checking that chi' lies in phi_s(chi); throws InvalidArgument otherwise.
Rational flow_weight(const Coloring& chi, const Coloring& chi_prime, const ShiftRegion& region,
                     const FlowCertificate& cert);

struct FlowTotal {
    Rational closed_form;             // prod_C (1/4 + 3/4) prod_D (1/2 + 1/2)
    std::optional<Rational> explicit_sum;  // sum over all S when |W^s| <= max_layer
    bool roundtrip_ok = true;         // reconstruct(chi^s_S) == chi for every S visited
    bool proper_ok = true;            // every chi^s_S proper
};

FlowTotal flow_out_total(const Coloring& chi, const ShiftRegion& region, const FlowCertificate& cert,
                         int max_layer = 20);

// ---------------------------------------------------------------- good triples

struct GoodTriple {
    VertexSet k;
    VertexSet l;
    VertexSet m;
};

/// K u L u M is an inclusion-minimal vertex cover of the bipartite graph of lattice
/// edges between Q^E and Q^O; K in Q^O, L in U, M in Q^E \ U; K = ext(U \ L) taken
/// inside that graph (the Q^O-neighbours of U \ L).
bool is_good_triple(const Lattice& lattice, const GoodTriple& t, const QSets& q);

/// (W cap Q^O, U \ W, (Q^E \ U) \ W).
GoodTriple canonical_good_triple(const ShiftRegion& region, const QSets& q);

enum class BoundStatus { Computed, Skipped, NoGoodTriple };

const char* to_string(BoundStatus s);

struct BoundReport {
    BoundStatus status = BoundStatus::Skipped;
    Rational nu;
    int k0 = 0, l0 = 0, k_prime = 0, l_prime = 0;
    int excess = 0;       // w_o - w_e
    double bound = 0.0;   // B(K', L') as a float
    double ratio = 0.0;   // nu / B
    bool nu_within_bound = false;  // exact comparison
};

/// Minimises |K| + |L| over good triples by exhaustion when |Q^E u Q^O| <= max_unknown
/// and compares nu against B(K', L') exactly (via squares). A diagnostic only.
BoundReport bound_report(const Lattice& lattice, const ShiftRegion& region, const QSets& q, const Rational& nu,
                         int max_unknown = 24);

}  // namespace tricolor
