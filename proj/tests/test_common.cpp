#include "tricolor/common.hpp"

#include <doctest.h>

#include <atomic>
#include <cmath>

using namespace tricolor;

TEST_CASE("rationals") {
    CHECK(parse_rational("11/50") == Rational(11, 50));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational(" 2/4 ") == Rational(1, 2));
    CHECK(parse_rational("0.22") == Rational(11, 50));
    CHECK(parse_rational("010/0100") == Rational(1, 10));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational(".25") == Rational(1, 4));
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3"}) CHECK_THROWS_AS(parse_rational(bad), Error);
    CHECK(format_rational(Rational(329, 676)) == "329/676");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("logs and the 1/e threshold") {
    CHECK(log_bigint(BigInt(1)) == 0.0);
    BigInt big = 1;
    for (int i = 0; i < 1000; ++i) big *= 3;
    CHECK(log_bigint(big) == doctest::Approx(1000 * std::log(3.0)));
    CHECK(at_most_inverse_e(Rational(36787944117, 100000000000)));
    CHECK_FALSE(at_most_inverse_e(Rational(36787944118, 100000000000)));
    CHECK(at_most_inverse_e(0));
    CHECK_FALSE(at_most_inverse_e(Rational(1, 2)));
}

TEST_CASE("parallel_for visits every index once") {
    for (unsigned threads : {1u, 3u}) {
        std::vector<std::atomic<int>> hits(101);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) CHECK(h == 1);
    }
    CHECK(default_thread_count() >= 1);
}
