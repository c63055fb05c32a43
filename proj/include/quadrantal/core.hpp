#pragma once

/**
 * @file core.hpp
 * @brief Exact scalar types, error hierarchy and rational-integer helpers
 *
 * Every exact computation in the library runs over BigInt / Rational. Floating
 * types appear only in numerical cross-checks and decimal renderings.
 */

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace quadrantal {

namespace mp = boost::multiprecision;

using BigInt = mp::cpp_int;
using Rational = mp::cpp_rational;

/// High-precision binary float used for regulators, bounds and embeddings.
using Real = mp::number<mp::cpp_bin_float<160>>;

/// Malformed user input (text or JSON that does not parse).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The precondition may hold but cannot be certified within configured bounds.
class unverified_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Trial-division bound shared by square-free checks and totient factorization.
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Remainder in [0, |n|).
inline BigInt floor_mod(const BigInt& a, const BigInt& n)
{
    BigInt r = a % n;
    if (r < 0) r += abs(n);
    return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + (n < 0 ? -n : n) : r;
}

/// Quotient rounded toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return mp::gcd(abs(a), abs(b)); }

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b)
{
    BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {r0, s0, t0};
}

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n)
{
    if (n < 0) throw precondition_error("isqrt of negative integer");
    return mp::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr)
{
    if (n < 0) return false;
    BigInt s = mp::sqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

inline BigInt pow(const BigInt& base, unsigned exponent)
{
    return mp::pow(base, exponent);
}

inline BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& modulus)
{
    return mp::powm(floor_mod(base, modulus), exponent, modulus);
}

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exponent, std::uint64_t n)
{
    std::uint64_t result = 1 % n;
    base %= n;
    while (exponent) {
        if (exponent & 1) result = mulmod64(result, base, n);
        base = mulmod64(base, base, n);
        exponent >>= 1;
    }
    return result;
}

/// Deterministic primality for the 64-bit range (Miller-Rabin with fixed bases).
inline bool is_prime64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_prime(const BigInt& n)
{
    if (n < 2) return false;
    if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        return is_prime64(static_cast<std::uint64_t>(n));
    }
    return mp::miller_rabin_test(n, 40);
}

struct PrimePower {
    BigInt prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/**
 * Factor |n| by trial division up to `bound`.
 *
 * Succeeds when the cofactor left after trial division is 1 or provably prime
 * (smaller than bound^2). Otherwise throws unverified_error.
 */
inline std::vector<PrimePower> factor_trial(const BigInt& n, std::uint64_t bound = kTrialDivisionBound)
{
    if (n == 0) throw precondition_error("cannot factor zero");
    BigInt rest = abs(n);
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) out.push_back({BigInt(p), e});
    };
    strip(2);
    for (std::uint64_t p = 3; p <= bound && BigInt(p) * p <= rest; p += 2) strip(p);
    if (rest > 1) {
        // A cofactor free of primes <= bound is prime when below bound^2; above that
        // only a primality proof certifies it.
        if (rest > BigInt(bound) * bound && !is_prime(rest)) {
            throw unverified_error("integer " + n.str() + " has a cofactor beyond the trial-division bound " +
                                   std::to_string(bound));
        }
        out.push_back({rest, 1});
    }
    return out;
}

inline bool is_square_free(const BigInt& n)
{
    for (const auto& pp : factor_trial(n)) {
        if (pp.exponent > 1) return false;
    }
    return true;
}

/// Strict decimal integer syntax: optional sign followed by digits.
inline BigInt parse_integer(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) throw input_error("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < t.size(); ++j) {
        if (t[j] < '0' || t[j] > '9') throw input_error("expected an integer, got '" + std::string(text) + "'");
    }
    BigInt v(std::string(t.substr(i)));
    return t[0] == '-' ? BigInt(-v) : v;
}

/// "p" or "p/q" with q nonzero.
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x)
{
    if (mp::denominator(x) == 1) return mp::numerator(x).str();
    return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

inline bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }

/// Fixed-point decimal rendering with `digits` digits after the point.
inline std::string to_decimal(const Real& x, int digits)
{
    return x.str(digits, std::ios_base::fixed);
}

/// pi to 45 digits; cpp_bin_float's own constant is used for decimals, this one for certified bounds.
inline const Rational& pi_lower()
{
    static const Rational v(BigInt("314159265358979323846264338327950288419716939"),
                            BigInt("100000000000000000000000000000000000000000000"));
    return v;
}

inline const Rational& pi_upper()
{
    static const Rational v(BigInt("314159265358979323846264338327950288419716940"),
                            BigInt("100000000000000000000000000000000000000000000"));
    return v;
}

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

} // namespace quadrantal
