#pragma once

#include "tricolor/lattice.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tricolor {

/// chi: V -> {0..q-1}, stored ceil(log2 q) bits per vertex.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::shared_ptr<const Lattice> lattice, int q = 3);
    Coloring(std::shared_ptr<const Lattice> lattice, int q, std::span<const std::uint8_t> colors);

    const Lattice& lattice() const { return *lattice_; }
    const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
    int q() const { return q_; }
    int size() const { return lattice_->size(); }
    int bits_per_vertex() const { return bits_; }

    int operator[](Vertex v) const {
        const auto [word, shift] = locate(v);
        return static_cast<int>((words_[word] >> shift) & mask());
    }

    void set(Vertex v, int color) {
        const auto [word, shift] = locate(v);
        words_[word] = (words_[word] & ~(mask() << shift)) | (static_cast<std::uint64_t>(color) << shift);
    }

    std::vector<std::uint8_t> colors() const;
    std::span<const std::uint64_t> packed() const { return words_; }

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.q_ == b.q_ && a.lattice_->spec() == b.lattice_->spec() && a.words_ == b.words_;
    }

private:
    std::uint64_t mask() const { return (std::uint64_t{1} << bits_) - 1; }
    std::pair<std::size_t, int> locate(Vertex v) const {
        return {static_cast<std::size_t>(v) / per_word_, (v % per_word_) * bits_};
    }

    std::shared_ptr<const Lattice> lattice_;
    int q_ = 3;
    int bits_ = 2;
    int per_word_ = 32;
    std::vector<std::uint64_t> words_;
};

int bits_for_colors(int q);

/// The colour map fixing 0 and swapping 1 and 2.
constexpr int swap12(int c) { return c == 0 ? 0 : 3 - c; }

bool is_proper(const Coloring& chi);

/// I(chi) = chi^{-1}(0). Throws on an improper colouring.
VertexSet zero_set(const Coloring& chi);

struct ImbalanceStats {
    int zero_even = 0;
    int zero_odd = 0;
    int imbalance() const { return zero_even - zero_odd; }
};

ImbalanceStats imbalance_stats(const Coloring& chi);
inline int imbalance(const Coloring& chi) { return imbalance_stats(chi).imbalance(); }

enum class ImbalanceClass { Balanced, EvenHeavy, OddHeavy };

const char* to_string(ImbalanceClass c);

/// 11/50.
Rational default_rho();

/// EvenHeavy iff imbalance > rho * n^d / 2, compared exactly; OddHeavy symmetric.
ImbalanceClass classify(int imbalance, const Rational& rho, long long volume);
ImbalanceClass classify(const Coloring& chi, const Rational& rho);

int hamming_distance(const Coloring& a, const Coloring& b);

// ---------------------------------------------------------------- boundary conditions

struct OddBoundaryZero {};
struct EvenBoundaryZero {};
struct PinnedVertex {
    Vertex vertex;
    int color;
};

using BoundaryClause = std::variant<OddBoundaryZero, EvenBoundaryZero, PinnedVertex>;

/// Conjunction of clauses; no clauses means unconstrained.
class BoundaryCondition {
public:
    BoundaryCondition() = default;
    BoundaryCondition(std::initializer_list<BoundaryClause> clauses) : clauses_(clauses) {}

    static BoundaryCondition none() { return {}; }
    static BoundaryCondition odd_boundary_zero() { return {OddBoundaryZero{}}; }
    static BoundaryCondition even_boundary_zero() { return {EvenBoundaryZero{}}; }
    static BoundaryCondition pinned(Vertex v, int color) { return {PinnedVertex{v, color}}; }

    /// C_3^O(v0): odd boundary zero plus chi(v0) = 0; v0 must be an even non-boundary vertex.
    static BoundaryCondition odd_boundary_with_center(const Lattice& lattice, Vertex v0);

    BoundaryCondition& operator+=(const BoundaryCondition& other);
    friend BoundaryCondition operator+(BoundaryCondition a, const BoundaryCondition& b) { return a += b; }

    const std::vector<BoundaryClause>& clauses() const { return clauses_; }
    bool is_none() const { return clauses_.empty(); }

    /// Throws InvalidArgument when a clause does not apply to the lattice.
    void check_applicable(const Lattice& lattice, int q) const;

    /// Required colour per vertex, -1 where free; nullopt when two clauses conflict.
    std::optional<std::vector<int>> pins(const Lattice& lattice, int q) const;

    std::string describe() const;

private:
    std::vector<BoundaryClause> clauses_;
};

bool satisfies_bc(const Coloring& chi, const BoundaryCondition& bc);

// ---------------------------------------------------------------- standard colourings

/// Colour `zero_side` vertices 0 and the other class `other_color`.
Coloring phase_coloring(std::shared_ptr<const Lattice> lattice, Parity zero_side, int other_color = 1, int q = 3);

// ---------------------------------------------------------------- file format

/// One-line JSON header {"kind","d","n","q"} then a newline and base64 of the packed colours.
std::string serialize(const Coloring& chi);
Coloring deserialize(std::string_view text);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace tricolor
