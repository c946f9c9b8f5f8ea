#include "tricolor/common.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

namespace tricolor {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::MalformedHeader: return "malformed_header";
    case ErrorCode::MalformedPayload: return "malformed_payload";
    case ErrorCode::WrongLength: return "wrong_length";
    case ErrorCode::ColorOutOfRange: return "color_out_of_range";
    case ErrorCode::PropertyViolation: return "property_violation";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    require(all_digits(s), "cannot parse rational '" + std::string(whole) + "'");
    // Leading zeros would make the string constructor read octal.
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    require(!text.empty(), "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        require(all_digits(den_text), "cannot parse rational '" + std::string(text) + "'");
        BigInt den = parse_integer(den_text, text);
        require(den != 0, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        require(frac.empty() || all_digits(frac), "cannot parse rational '" + std::string(text) + "'");
        std::string digits(text.substr(0, dot));
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        digits += frac;
        BigInt num = parse_integer(digits, text);
        BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        return Rational(num, den);
    }
    return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

double log_bigint(const BigInt& x) {
    require(x > 0, "log of a nonpositive integer");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, x.backend().data());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

bool at_most_inverse_e(const Rational& r) {
    if (r <= 0) return true;
    // lower = sum_{k<=K} 1/k!, and e < lower + 1/(K! * K).
    Rational lower = 0;
    BigInt factorial = 1;
    for (unsigned k = 0;; ++k) {
        if (k > 0) factorial *= k;
        lower += Rational(BigInt(1), factorial);
        if (k < 8 || k % 8 != 0) continue;
        const Rational upper = lower + Rational(BigInt(1), factorial * k);
        if (r * upper <= 1) return true;
        if (r * lower > 1) return false;
    }
}

unsigned default_thread_count() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1u : hc;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += threads) fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace tricolor
