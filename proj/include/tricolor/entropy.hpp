#pragma once

#include "tricolor/common.hpp"
#include "tricolor/transfer_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tricolor {

/// Outcomes with exact probabilities.
struct Distribution {
    std::vector<std::vector<std::uint8_t>> outcomes;
    std::vector<Rational> p;

    /// Nonnegative and summing to exactly 1.
    bool valid() const;
    int support_size() const;
};

/// -sum p ln p in nats, with 0 ln 0 = 0.
double shannon_entropy(std::span<const Rational> p);
double shannon_entropy(const Distribution& dist);

/// -x log2 x - (1-x) log2 (1-x) in bits; InvalidArgument outside [0, 1].
double binary_entropy(double x);

struct TopologicalEstimate {
    int d = 2;
    std::vector<int> widths;
    std::vector<BigInt> counts;     // proper 3-colourings of the width^d box
    std::vector<double> per_site;   // ln(count) / width^d, nats
    std::vector<double> aitken;     // Aitken delta-squared iterates over consecutive triples
    double estimate = 0.0;          // last Aitken iterate (last per-site value if fewer than 3)
    double spread = 0.0;            // |difference of the last two Aitken iterates|
    bool bounds_ok = false;         // 0 < per-site <= ln 3 throughout
};

/// Per-site log-counts of proper 3-colourings of w^d boxes (free boundary) and an
/// Aitken extrapolation. d = 1 uses the closed form 3 * 2^(w-1).
TopologicalEstimate topological_entropy_estimate(int d, std::vector<int> widths, const TransferLimits& limits = {});

/// Law of the restriction to Lambda_n of a uniform colouring of Lambda_{m+1} whose
/// even outer-shell vertices are coloured 1 (odd vertices of that shell free). Outcomes
/// are colourings of Lambda_n in the vertex order of Lattice(box(d, n)).
struct Restriction {
    int d = 2, n = 1, m = 2;
    Distribution dist;
    std::vector<BigInt> weight;  // N(tau) per outcome
    BigInt support_total;        // |supp mu_m| = sum of N(tau)
};

Restriction restriction_distribution(int d, int n, int m, unsigned threads = 1);

struct EntropyGapCheck {
    int d = 2, n = 1, m = 2;
    int inner_boundary = 0;        // |d_int Lambda_n|
    BigInt colorings;              // |C_3(Lambda_n)|
    BigInt extendable;             // |C'_3(Lambda_n)|: extendable to Lambda_{n+2}
    BigInt c_star;                 // |C_*(Lambda_n)|
    BigInt support_total;          // |supp mu_m|
    int support = 0;               // restrictions with N(tau) > 0
    double entropy = 0.0;          // H(X^m_n), nats
    double entropy_lower = 0.0;    // ln|C'| - 2 |d_int| ln 3
    bool sums_to_one = false;
    bool support_in_extendable = false;
    bool grouped_by_boundary = false;   // N(tau) depends only on tau on d_int Lambda_n
    bool entropy_bound = false;         // H(X) >= entropy_lower
    bool max_probability_bound = false; // max Pr <= 3^{2|d_int|} / |C'|, exact
    bool c_star_mass = false;           // |C_*| / |C'| >= 3^{-|d_int|}, exact
    bool c_star_dominates = false;      // N(tau0) >= 3^{-|d_int|} N(tau) for tau0 in C_*, exact

    bool all_hold() const {
        return sums_to_one && support_in_extendable && grouped_by_boundary && entropy_bound &&
               max_probability_bound && c_star_mass && c_star_dominates;
    }
};

EntropyGapCheck max_entropy_gap_check(int d, int n, int m, unsigned threads = 1);

}  // namespace tricolor
