#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricolor {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class ErrorCode {
    InvalidArgument,
    CapExceeded,
    MalformedHeader,
    MalformedPayload,
    WrongLength,
    ColorOutOfRange,
    PropertyViolation,
};

const char* to_string(ErrorCode code);

// Every failure the library reports. The code drives CLI exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::InvalidArgument, what);
}

/// Parses "p/q", an integer, or a finite decimal such as "0.22" into an exact rational.
Rational parse_rational(std::string_view text);

/// "p/q" rendering (integers render without a denominator).
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

/// Natural log of a positive big integer, accurate to double precision.
double log_bigint(const BigInt& x);

/// Rigorous comparison of a nonnegative rational against 1/e.
bool at_most_inverse_e(const Rational& r);

/// Runs fn(i) for i in [0, count) on up to `threads` workers; fn must only touch slot i.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

unsigned default_thread_count();

}  // namespace tricolor
