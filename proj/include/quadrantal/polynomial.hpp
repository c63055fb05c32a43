#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Z and Q
 *
 * Coefficients are stored lowest degree first. The zero polynomial is the
 * empty coefficient list, and every constructor strips trailing zeros, so two
 * polynomials are equal exactly when their coefficient vectors are equal.
 */

#include "quadrantal/core.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace quadrantal {

template <class T>
class Polynomial {
public:
    using coefficient_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }
    Polynomial(std::initializer_list<T> coefficients) : coeffs_(coefficients) { normalize(); }

    /// The constant polynomial c.
    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    /// c * x^k.
    static Polynomial monomial(T c, std::size_t k)
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    static Polynomial x() { return monomial(T(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the degree).
    T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    const std::vector<T>& coefficients() const noexcept { return coeffs_; }

    const T& leading() const
    {
        if (is_zero()) throw precondition_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    template <class U>
    U evaluate(const U& at) const
    {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + U(*it);
        return acc;
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * T(static_cast<long long>(k));
        return Polynomial(std::move(v));
    }

    Polynomial operator-() const
    {
        std::vector<T> v(coeffs_);
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const T& c, const Polynomial& p)
    {
        std::vector<T> v(p.coeffs_);
        for (auto& x : v) x *= c;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntegerPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned k)
{
    Polynomial<T> result = Polynomial<T>::constant(T(1));
    Polynomial<T> base = p;
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

inline RationalPolynomial to_rational(const IntegerPolynomial& p)
{
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RationalPolynomial(std::move(v));
}

/// Exact conversion; nullopt when some coefficient is not an integer.
inline std::optional<IntegerPolynomial> to_integer(const RationalPolynomial& p)
{
    std::vector<BigInt> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (!is_integer(c)) return std::nullopt;
        v.push_back(mp::numerator(c));
    }
    return IntegerPolynomial(std::move(v));
}

/// p divided by its leading coefficient.
inline RationalPolynomial monic(const RationalPolynomial& p)
{
    if (p.is_zero()) throw precondition_error("cannot make the zero polynomial monic");
    Rational inv = Rational(1) / p.leading();
    return inv * p;
}

struct DivRem {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

/// Euclidean division in Q[x]: dividend = quotient * divisor + remainder, deg remainder < deg divisor.
inline DivRem poly_div_rem(const RationalPolynomial& dividend, const RationalPolynomial& divisor)
{
    if (divisor.is_zero()) throw precondition_error("polynomial division by the zero polynomial");
    std::vector<Rational> rem = dividend.coefficients();
    const int db = divisor.degree();
    const int da = dividend.degree();
    if (da < db) return {RationalPolynomial{}, dividend};
    std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
    const Rational lead_inv = Rational(1) / divisor.leading();
    for (int k = da - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b)
{
    return poly_div_rem(a, b).remainder;
}

/// Monic gcd in Q[x] by Euclid with monic normalization at each step.
inline RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() && b.is_zero()) throw precondition_error("gcd of two zero polynomials is undefined");
    RationalPolynomial r0 = a.is_zero() ? monic(b) : monic(a);
    RationalPolynomial r1 = b.is_zero() ? RationalPolynomial{} : monic(b);
    while (!r1.is_zero()) {
        RationalPolynomial r = r0 % r1;
        r0 = std::move(r1);
        r1 = r.is_zero() ? RationalPolynomial{} : monic(r);
    }
    return r0;
}

struct ExtendedGcd {
    RationalPolynomial gcd;  ///< monic
    RationalPolynomial s;    ///< s*a + t*b = gcd
    RationalPolynomial t;
};

inline ExtendedGcd poly_extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() && b.is_zero()) throw precondition_error("gcd of two zero polynomials is undefined");
    RationalPolynomial r0 = a, r1 = b;
    RationalPolynomial s0 = RationalPolynomial::constant(1), s1;
    RationalPolynomial t0, t1 = RationalPolynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_div_rem(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

/// Square-free part: p / gcd(p, p'), made monic.
inline RationalPolynomial square_free_part(const RationalPolynomial& p)
{
    if (p.degree() <= 0) return monic(p);
    RationalPolynomial g = poly_gcd(p, p.derivative());
    return monic(poly_div_rem(p, g).quotient);
}

struct ContentSplit {
    BigInt content;               ///< positive gcd of the coefficients
    IntegerPolynomial primitive;  ///< coefficients with gcd 1, sign of p
};

inline ContentSplit content_and_primitive_part(const IntegerPolynomial& p)
{
    if (p.is_zero()) throw precondition_error("content of the zero polynomial is undefined");
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    std::vector<BigInt> v(p.coefficients());
    for (auto& c : v) c /= g;
    return {g, IntegerPolynomial(std::move(v))};
}

/**
 * Search for a prime q with q not dividing the leading coefficient, q dividing
 * every other coefficient and q^2 not dividing the constant term.
 *
 * Only prime divisors of the constant term can qualify, so the search is
 * complete over them. nullopt does not mean the polynomial is reducible.
 */
inline std::optional<BigInt> eisenstein_witness(const IntegerPolynomial& p)
{
    if (p.degree() < 1) throw precondition_error("Eisenstein criterion needs a nonconstant polynomial");
    const BigInt a0 = p[0];
    if (a0 == 0) return std::nullopt;
    for (const auto& pp : factor_trial(a0)) {
        const BigInt& q = pp.prime;
        if (pp.exponent != 1) continue;
        if (p.leading() % q == 0) continue;
        bool divides_all = true;
        for (int k = 1; k < p.degree(); ++k) {
            if (p[static_cast<std::size_t>(k)] % q != 0) {
                divides_all = false;
                break;
            }
        }
        if (divides_all) return q;
    }
    return std::nullopt;
}

/// 1 + x + ... + x^{p-1} for a prime p.
inline IntegerPolynomial cyclotomic_polynomial_prime(const BigInt& p)
{
    if (!is_prime(p)) throw precondition_error("cyclotomic_polynomial_prime: " + p.str() + " is not prime");
    if (p > 100000) throw precondition_error("cyclotomic_polynomial_prime: prime too large for a dense polynomial");
    return IntegerPolynomial(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
}

// ---------------------------------------------------------------------------
// Text form: "c0 + c1*x + c2*x^2 + ..." with zero terms omitted.

namespace detail {

template <class T>
std::string coefficient_text(const T& c)
{
    return to_string(c);
}

} // namespace detail

template <class T>
std::string to_text(const Polynomial<T>& p, char var = 'x')
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const T& c = p.coefficients()[k];
        if (c == 0) continue;
        bool negative = c < 0;
        T mag = negative ? T(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string coef = detail::coefficient_text(mag);
        if (k == 0) {
            out += coef;
            continue;
        }
        if (mag != 1) out += coef + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p)
{
    return os << to_text(p);
}

/**
 * Parse sums of terms `c`, `c*x^k`, `c x`, `x^k`, `-x` where c is an integer or
 * a fraction p/q. Repeated powers are added together.
 */
inline RationalPolynomial parse_rational_polynomial(std::string_view text, char var = 'x')
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw input_error("empty polynomial text");
    auto fail = [&](const std::string& why) {
        return input_error("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    std::vector<Rational> coeffs;
    std::size_t i = 0;
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        Rational coef(1);
        bool have_coef = false;
        std::string digits = read_digits();
        if (!digits.empty()) {
            have_coef = true;
            coef = Rational(BigInt(digits));
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits();
                if (den.empty()) throw fail("missing denominator");
                if (BigInt(den) == 0) throw fail("zero denominator");
                coef /= Rational(BigInt(den));
            }
        }
        std::size_t power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == var)) {
            if (s[i] == '*') {
                if (!have_coef) throw fail("'*' without a coefficient");
                ++i;
            }
            if (i >= s.size() || s[i] != var) throw fail(std::string("expected '") + var + "'");
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = read_digits();
                if (e.empty()) throw fail("missing exponent");
                if (e.size() > 6) throw fail("exponent too large");
                power = static_cast<std::size_t>(std::stoul(e));
            }
        } else if (!have_coef) {
            throw fail("empty term");
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += sign * coef;
    }
    return RationalPolynomial(std::move(coeffs));
}

inline IntegerPolynomial parse_integer_polynomial(std::string_view text, char var = 'x')
{
    auto p = to_integer(parse_rational_polynomial(text, var));
    if (!p) throw input_error("polynomial '" + std::string(text) + "' has non-integer coefficients");
    return *p;
}

} // namespace quadrantal
