#pragma once

#include "tricolor/enumerate.hpp"

#include <Eigen/SparseCore>

#include <cstdint>
#include <optional>
#include <vector>

namespace tricolor {

/// P = numer / denominator exactly, with denominator = q |V| for the Metropolis chain.
struct TransitionMatrix {
    Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor> numer;
    std::int64_t denominator = 1;

    int size() const { return static_cast<int>(numer.rows()); }
    Rational entry(int i, int j) const { return Rational(numer.coeff(i, j), denominator); }
    Eigen::SparseMatrix<double, Eigen::RowMajor> to_double() const;
};

struct MatrixLimits {
    long long max_states = 2'000'000;  // the matrix is always stored sparse
};

/// The Metropolis matrix P_q restricted to the enumerated states: 1/(q|V|) per legal
/// single-site recolouring, the remaining mass on the diagonal.
TransitionMatrix transition_matrix(const StateSpace& states, const MatrixLimits& limits = {});

struct MatrixChecks {
    bool symmetric = false;
    bool stochastic = false;          // every row sums to 1
    bool uniform_stationary = false;  // every column sums to 1
    bool connected = false;           // transition graph is one class
    int components = 0;
};

MatrixChecks check_matrix(const TransitionMatrix& p);

/// Representatives of the orbits of the state space under the lattice symmetries
/// (translations on a torus, axis permutations and reflections) combined with colour
/// permutations. Only valid without a boundary condition; returns all states otherwise.
std::vector<int> orbit_representatives(const StateSpace& states);

struct MixingOptions {
    long long max_iterations = 1'000'000;
    int exact_state_cap = 5000;  // exact rational arithmetic at or below this size
    bool use_symmetry = true;    // iterate orbit representatives only
    unsigned threads = 1;
};

struct MixingResult {
    long long tau = 0;
    int worst_start = 0;
    bool exact = true;             // exact arithmetic (false: doubles)
    bool symmetry_reduced = false;
    int starts = 0;                // number of starting states iterated
    double tv_at_tau = 0.0;        // max TV at t = tau (> 1/e unless tau = 0)
    double tv_after_tau = 0.0;     // max TV at t = tau + 1 (<= 1/e)
    double error_budget = 0.0;     // float path: accumulated per-iteration budget at tau + 1
    bool decided = true;           // float path: the threshold decision is outside the budget
};

/// tau = min{t0 >= 0 : max_x TV(P^t(x,.), uniform) <= 1/e for all t > t0}. Each start's
/// TV is non-increasing in t, so tau is one less than the first t where all starts are
/// within 1/e. Exact comparison against 1/e on the exact path.
MixingResult tv_mixing_time(const TransitionMatrix& p, const StateSpace& states, const MixingOptions& options = {});

struct ConductanceReport {
    Rational pi_a;     // EvenHeavy
    Rational pi_odd;   // OddHeavy
    Rational pi_m;     // Balanced
    std::optional<Rational> bound;  // pi(A) / (8 pi(M)); empty when M is empty (infinite)
    bool pi_a_at_most_half = false;
    bool classes_symmetric = false;
    std::optional<long long> tau;
    std::optional<bool> bound_holds;  // tau >= bound, when tau is known
};

ConductanceReport conductance_bound(const StateSpace& states, const Rational& rho,
                                    std::optional<long long> tau = std::nullopt);

struct BlockingReport {
    long long moves = 0;            // nonzero off-diagonal entries examined
    long long even_to_odd = 0;      // moves from EvenHeavy straight to OddHeavy
    int max_imbalance_change = 0;   // over all single-site moves
    bool blocked() const { return even_to_odd == 0 && max_imbalance_change <= 1; }
};

BlockingReport single_site_blocking(const StateSpace& states, const TransitionMatrix& p, const Rational& rho);

}  // namespace tricolor
