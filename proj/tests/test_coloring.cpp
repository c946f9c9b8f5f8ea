#include "support/brute.hpp"
#include "tricolor/coloring.hpp"
#include "tricolor/enumerate.hpp"

#include <doctest.h>

using namespace tricolor;

namespace {

Coloring mod3(const std::shared_ptr<const Lattice>& lat) {
    Coloring chi(lat);
    for (Vertex v = 0; v < lat->size(); ++v) {
        int s = 0;
        for (int x : lat->coords(v)) s += x;
        chi.set(v, ((s % 3) + 3) % 3);
    }
    return chi;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("properness") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    CHECK_FALSE(is_proper(Coloring(t)));
    CHECK(is_proper(phase_coloring(t, Parity::Even)));
    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    CHECK(is_proper(mod3(b)));
}

TEST_CASE("zero sets") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    CHECK(zero_set(phase_coloring(t, Parity::Even)) == t->even());
    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    CHECK(zero_set(mod3(b)).count() == 3);
    CHECK_THROWS_AS(zero_set(Coloring(t)), Error);
}

TEST_CASE("imbalance and classes") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const auto rho = default_rho();
    CHECK(rho == Rational(11, 50));
    const auto even = phase_coloring(t, Parity::Even);
    CHECK(imbalance(even) == 8);
    CHECK(classify(even, rho) == ImbalanceClass::EvenHeavy);
    const auto odd = phase_coloring(t, Parity::Odd);
    CHECK(imbalance(odd) == -8);
    CHECK(classify(odd, rho) == ImbalanceClass::OddHeavy);
    Coloring none(t);
    for (Vertex v = 0; v < t->size(); ++v) none.set(v, t->is_even(v) ? 1 : 2);
    CHECK(imbalance(none) == 0);
    CHECK(classify(none, rho) == ImbalanceClass::Balanced);
    // Threshold rho n^d / 2 = 1.76: imbalance 1 is balanced, 2 is not.
    CHECK(classify(1, rho, 16) == ImbalanceClass::Balanced);
    CHECK(classify(2, rho, 16) == ImbalanceClass::EvenHeavy);
    CHECK(classify(-2, rho, 16) == ImbalanceClass::OddHeavy);
    CHECK(classify(5, Rational(5, 8), 16) == ImbalanceClass::Balanced);  // exactly on the threshold
    CHECK(classify(6, Rational(5, 8), 16) == ImbalanceClass::EvenHeavy);
    CHECK_THROWS_AS(classify(1, Rational(11, 8), 16), Error);
    CHECK_THROWS_AS(classify(mod3(Lattice::make(LatticeSpec::box(2, 1))), rho), Error);
}

TEST_CASE("enumerated torus: symmetries of the zero set and imbalance") {
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    const StateSpace states(t, 3);
    for (int i = 0; i < states.size(); ++i) {
        const Coloring chi = states.coloring(i);
        const VertexSet z = zero_set(chi);
        for (const Edge& e : t->edges()) CHECK_FALSE((z.contains(e.u) && z.contains(e.v)));
        Coloring swapped(t);
        Coloring moved(t);
        for (Vertex v = 0; v < t->size(); ++v) {
            swapped.set(v, swap12(chi[v]));
            moved.set(*t->shift(v, ShiftDirection(1)), chi[v]);
        }
        CHECK(is_proper(swapped));
        CHECK(zero_set(swapped) == z);
        CHECK(imbalance(moved) == -imbalance(chi));
    }
}

TEST_CASE("boundary conditions") {
    const auto b = Lattice::make(LatticeSpec::box(2, 1));
    const auto chi = phase_coloring(b, Parity::Odd);
    CHECK(satisfies_bc(chi, BoundaryCondition::odd_boundary_zero()));
    CHECK_FALSE(satisfies_bc(chi, BoundaryCondition::pinned(b->origin(), 0)));
    CHECK_FALSE(satisfies_bc(mod3(b), BoundaryCondition::odd_boundary_zero()));

    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    CHECK_THROWS_AS(satisfies_bc(phase_coloring(t, Parity::Odd), BoundaryCondition::odd_boundary_zero()), Error);
    // The centre must be an even non-boundary vertex.
    CHECK_THROWS_AS(BoundaryCondition::odd_boundary_with_center(*b, *b->find(std::vector<int>{1, 0})), Error);
    CHECK_THROWS_AS(BoundaryCondition::odd_boundary_with_center(*b, *b->find(std::vector<int>{1, 1})), Error);
    // Conflicting pins make the condition unsatisfiable rather than an error.
    const auto clash = BoundaryCondition::pinned(0, 1) + BoundaryCondition::pinned(0, 2);
    CHECK_FALSE(clash.pins(*b, 3).has_value());
}

TEST_CASE("serialisation round trip and diagnostics") {
    for (auto spec : {LatticeSpec::torus(2, 4), LatticeSpec::box(3, 1), LatticeSpec::extended_box(2, 2)}) {
        const auto lat = Lattice::make(spec);
        const auto chi = phase_coloring(lat, Parity::Even, 2);
        const auto back = deserialize(serialize(chi));
        CHECK(back.lattice().spec() == spec);
        CHECK(back.colors() == chi.colors());
    }
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    Coloring four(t, 4);
    four.set(5, 3);
    std::string text = serialize(four);
    const auto q_at = text.find("\"q\":4");
    REQUIRE(q_at != std::string::npos);
    text.replace(q_at, 5, "\"q\":3");
    CHECK(code_of([&] { deserialize(text); }) == ErrorCode::ColorOutOfRange);

    const std::string header = serialize(Coloring(t)).substr(0, serialize(Coloring(t)).find('\n') + 1);
    CHECK(code_of([&] { deserialize(header); }) == ErrorCode::WrongLength);
    CHECK(code_of([&] { deserialize("{\"kind\":\"torus\"}\nAAAA\n"); }) == ErrorCode::MalformedHeader);
    CHECK(code_of([&] { deserialize("not json\nAAAA\n"); }) == ErrorCode::MalformedHeader);
    CHECK(code_of([&] { deserialize(header + "@@@@\n"); }) == ErrorCode::MalformedPayload);
    CHECK(text.substr(0, text.find('\n')) == "{\"kind\":\"torus\",\"d\":2,\"n\":4,\"q\":3}");
}

TEST_CASE("colour packing for general q") {
    CHECK(bits_for_colors(3) == 2);
    CHECK(bits_for_colors(4) == 2);
    CHECK(bits_for_colors(5) == 3);
    const auto t = Lattice::make(LatticeSpec::torus(2, 4));
    Coloring chi(t, 7);
    for (Vertex v = 0; v < t->size(); ++v) chi.set(v, v % 7);
    for (Vertex v = 0; v < t->size(); ++v) CHECK(chi[v] == v % 7);
    CHECK(hamming_distance(chi, chi) == 0);
}
