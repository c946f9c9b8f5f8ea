#pragma once

#include "tricolor/coloring.hpp"
#include "tricolor/rng.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tricolor {

enum class ChainKind { Metropolis, CustomLocal };

/// RandomSite is the Metropolis chain P_q. SystematicSweep visits vertices in index order
/// with a uniform colour proposal each; it is an engineering comparison only.
enum class ScanOrder { RandomSite, SystematicSweep };

const char* to_string(ScanOrder s);

/// A CustomLocal move maps the current colouring to the next one; run_chain checks
/// that every move is proper and changes at most rho |V| vertices.
using LocalMove = std::function<Coloring(const Coloring&, CounterRng&)>;

struct ChainSpec {
    ChainKind kind = ChainKind::Metropolis;
    int q = 3;
    Rational rho = Rational(11, 50);  // classification threshold and CustomLocal locality bound
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    ScanOrder scan = ScanOrder::RandomSite;
    LocalMove move;  // CustomLocal only
};

struct TrajectoryRecord {
    long long step = 0;
    int imbalance = 0;
    int zero_even = 0;
    int zero_odd = 0;
    ImbalanceClass cls = ImbalanceClass::Balanced;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    long long thinning = 1;
    std::string initial_id;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// One proposal of P_q: uniform v and colour j, applied iff the result is proper.
/// Returns true when the colouring changed.
bool metropolis_step(Coloring& chi, CounterRng& rng);

/// Value-returning form of the same proposal.
Coloring metropolis_step(const Coloring& chi, CounterRng& rng);

/// Runs `steps` proposals (moves for CustomLocal) and records the observables at step 0,
/// every `thinning` steps, and at the final step. Deterministic in (spec, chi0, steps).
Trajectory run_chain(const ChainSpec& spec, const Coloring& chi0, long long steps, long long thinning = 1,
                     std::string initial_id = "chi0");

/// Hamming distance <= rho |V|, compared exactly.
bool rho_locality_check(const Coloring& a, const Coloring& b, const Rational& rho);

struct CrossingCheck {
    bool applicable = false;   // chi1 EvenHeavy and chi2 OddHeavy at rho
    bool inequality_ok = false; // |imbalance change| <= number of changed vertices
    bool blocked = false;      // so the pair cannot be a rho-local move
};

/// On a torus: a rho-local move from EvenHeavy cannot reach OddHeavy, because the
/// imbalance would have to move by more than rho n^d while each changed vertex moves
/// it by at most one.
CrossingCheck crossing_check(const Coloring& chi1, const Coloring& chi2, const Rational& rho);

/// applicable && inequality_ok && blocked.
bool crossing_blocked_check(const Coloring& chi1, const Coloring& chi2, const Rational& rho);

/// header `step,imbalance,zero_even,zero_odd,class`
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace tricolor
