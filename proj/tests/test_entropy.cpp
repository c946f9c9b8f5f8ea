#include "tricolor/entropy.hpp"
#include "tricolor/enumerate.hpp"

#include <doctest.h>

#include <cmath>

using namespace tricolor;

TEST_CASE("shannon and binary entropy") {
    const std::vector<Rational> uniform3{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    CHECK(shannon_entropy(uniform3) == doctest::Approx(std::log(3.0)));
    const std::vector<Rational> point{Rational(1), Rational(0)};
    CHECK(shannon_entropy(point) == 0.0);
    const std::vector<Rational> mixed{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    CHECK(shannon_entropy(mixed) == doctest::Approx(1.5 * std::log(2.0)));
    // Tiny probabilities keep full precision.
    BigInt huge = 1;
    for (int i = 0; i < 400; ++i) huge *= 10;
    const std::vector<Rational> tiny{Rational(BigInt(1), huge), 1 - Rational(BigInt(1), huge)};
    CHECK(shannon_entropy(tiny) >= 0.0);

    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.22) == doctest::Approx(0.7602).epsilon(1e-4));
    CHECK(binary_entropy(0.22) + 0.22 < 1.0);
    for (double x : {0.01, 0.1, 0.3, 0.45}) CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1 - x)));
    CHECK_THROWS_AS(binary_entropy(-0.1), Error);
    CHECK_THROWS_AS(binary_entropy(1.5), Error);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), Error);

    Distribution d{{{0}, {1}}, {Rational(1, 2), Rational(1, 2)}};
    CHECK(d.valid());
    CHECK(d.support_size() == 2);
    d.p[1] = Rational(1, 3);
    CHECK_FALSE(d.valid());
}

TEST_CASE("topological entropy") {
    const auto one = topological_entropy_estimate(1, {1, 2, 3, 10});
    CHECK(one.counts[3] == 3 * 512);
    CHECK(one.per_site[0] == doctest::Approx(std::log(3.0)));
    CHECK(one.bounds_ok);

    const auto two = topological_entropy_estimate(2, {2, 3, 4, 5, 6, 7, 8});
    const std::vector<long long> expect{18, 246, 7812, 580986, 101596896, 41869995708LL, 40724629633188LL};
    REQUIRE(two.counts.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(two.counts[i] == expect[i]);
    CHECK(two.bounds_ok);
    CHECK(two.aitken.size() == 5);
    CHECK(two.spread < 0.02);
    // The square-lattice value is (3/2) ln(4/3) = 0.4315 (Lieb); open boxes approach it from above.
    CHECK(two.estimate > 1.5 * std::log(4.0 / 3.0));
    CHECK(two.estimate < 0.5);
    // Brute cross-check of the smallest box.
    CHECK(count_colorings(*Lattice::make(LatticeSpec::box(2, 1)), 3) == 246);

    CHECK_THROWS_AS(topological_entropy_estimate(2, {}), Error);
    CHECK_THROWS_AS(topological_entropy_estimate(0, {2}), Error);
}

TEST_CASE("restricted distributions and the entropy gap") {
    const auto r = restriction_distribution(2, 1, 2);
    CHECK(r.dist.valid());
    CHECK(r.dist.support_size() == 178);
    // Summing over the inner colourings recovers a single count of the pinned outer box.
    const auto outer = Lattice::make(LatticeSpec::box(2, 3));
    std::vector<int> pins(outer->size(), kFree);
    (outer->outer_boundary() & outer->even()).for_each([&](Vertex v) { pins[v] = 1; });
    CHECK(r.support_total == transfer_count(grid_of(*outer, pins), 3));

    const auto c2 = max_entropy_gap_check(2, 1, 2);
    CHECK(c2.inner_boundary == 8);
    CHECK(c2.colorings == 246);
    CHECK(c2.extendable == 246);
    CHECK(c2.c_star == 2);
    CHECK(c2.support == 178);
    CHECK(c2.entropy == doctest::Approx(4.40978).epsilon(1e-5));
    CHECK(c2.entropy == doctest::Approx(shannon_entropy(r.dist)));
    CHECK(c2.all_hold());

    const auto c3 = max_entropy_gap_check(2, 1, 3);
    CHECK(c3.support == 246);
    CHECK(c3.entropy == doctest::Approx(4.55496).epsilon(1e-5));
    CHECK(c3.all_hold());

    CHECK_THROWS_AS(max_entropy_gap_check(2, 2, 2), Error);
    CHECK_THROWS_AS(max_entropy_gap_check(1, 1, 2), Error);
}
