#pragma once

/**
 * @file quadratic.hpp
 * @brief Quadratic fields Q(sqrt m) and their rings of integers Z + omega Z
 *
 * omega = sqrt(m) when m = 2, 3 mod 4 and omega = (1 + sqrt(m))/2 when
 * m = 1 mod 4. Elements of the ring are pairs (a, b) meaning a + b*omega.
 */

#include "quadrantal/core.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadrantal {

enum class OmegaKind { sqrt_m, half_one_plus_sqrt_m };

class QuadraticField {
public:
    /// Throws precondition_error for m in {0, 1} or m not square-free, and
    /// unverified_error when square-freeness cannot be certified by trial division.
    explicit QuadraticField(const BigInt& m)
    {
        if (m == 0 || m == 1) throw precondition_error("m must not be 0 or 1");
        if (abs(m) > BigInt(std::numeric_limits<std::int64_t>::max() / 8))
            throw unverified_error("m = " + m.str() + " is outside the supported range");
        if (!is_square_free(m)) throw precondition_error("m = " + m.str() + " is not square-free");
        m_ = static_cast<std::int64_t>(m);
        kind_ = floor_mod(m_, 4) == 1 ? OmegaKind::half_one_plus_sqrt_m : OmegaKind::sqrt_m;
        d_ = kind_ == OmegaKind::half_one_plus_sqrt_m ? m_ : 4 * m_;
    }

    explicit QuadraticField(std::int64_t m) : QuadraticField(BigInt(m)) {}

    std::int64_t m() const noexcept { return m_; }
    std::int64_t discriminant() const noexcept { return d_; }
    OmegaKind omega_kind() const noexcept { return kind_; }
    bool is_half() const noexcept { return kind_ == OmegaKind::half_one_plus_sqrt_m; }
    bool is_real() const noexcept { return m_ > 0; }

    /// (r1, s): real embeddings and pairs of complex embeddings.
    std::pair<int, int> signature() const noexcept { return is_real() ? std::pair{2, 0} : std::pair{0, 1}; }

    /// omega^2 = omega_sq_const + omega_sq_omega * omega.
    BigInt omega_sq_const() const { return is_half() ? BigInt((m_ - 1) / 4) : BigInt(m_); }
    BigInt omega_sq_omega() const { return is_half() ? BigInt(1) : BigInt(0); }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    std::int64_t m_ = 0;
    std::int64_t d_ = 0;
    OmegaKind kind_ = OmegaKind::sqrt_m;
};

/// ringOfIntegers: the quadratic field with its integral basis {1, omega}.
inline QuadraticField ring_of_integers(const BigInt& m) { return QuadraticField(m); }

class QuadInt {
public:
    QuadInt(QuadraticField field, BigInt a, BigInt b = 0) : field_(field), a_(std::move(a)), b_(std::move(b)) {}

    static QuadInt omega(const QuadraticField& f) { return QuadInt(f, 0, 1); }

    const QuadraticField& field() const noexcept { return field_; }
    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y)
    {
        check(x, y);
        return QuadInt(x.field_, x.a_ + y.a_, x.b_ + y.b_);
    }

    friend QuadInt operator-(const QuadInt& x, const QuadInt& y)
    {
        check(x, y);
        return QuadInt(x.field_, x.a_ - y.a_, x.b_ - y.b_);
    }

    QuadInt operator-() const { return QuadInt(field_, -a_, -b_); }

    friend QuadInt operator*(const QuadInt& x, const QuadInt& y)
    {
        check(x, y);
        BigInt bb = x.b_ * y.b_;
        BigInt a = x.a_ * y.a_ + bb * x.field_.omega_sq_const();
        BigInt b = x.a_ * y.b_ + x.b_ * y.a_ + bb * x.field_.omega_sq_omega();
        return QuadInt(x.field_, std::move(a), std::move(b));
    }

    friend QuadInt operator*(const BigInt& k, const QuadInt& x) { return QuadInt(x.field_, k * x.a_, k * x.b_); }

    friend bool operator==(const QuadInt& x, const QuadInt& y)
    {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    static void check(const QuadInt& x, const QuadInt& y)
    {
        if (!(x.field_ == y.field_)) throw precondition_error("quadratic integers from different fields");
    }

    QuadraticField field_;
    BigInt a_;
    BigInt b_;
};

/// x * conj(x) as a rational integer.
inline BigInt quad_norm(const QuadInt& x)
{
    const BigInt& a = x.a();
    const BigInt& b = x.b();
    if (x.field().is_half()) return a * a + a * b - b * b * x.field().omega_sq_const();
    return a * a - b * b * x.field().m();
}

inline BigInt quad_trace(const QuadInt& x)
{
    return x.field().is_half() ? BigInt(2 * x.a() + x.b()) : BigInt(2 * x.a());
}

/// sqrt(m) -> -sqrt(m); for omega = (1 + sqrt m)/2 the conjugate is 1 - omega.
inline QuadInt quad_conj(const QuadInt& x)
{
    if (x.field().is_half()) return QuadInt(x.field(), x.a() + x.b(), -x.b());
    return QuadInt(x.field(), x.a(), -x.b());
}

inline bool is_unit(const QuadInt& x)
{
    BigInt n = quad_norm(x);
    return n == 1 || n == -1;
}

inline QuadInt pow(const QuadInt& x, unsigned k)
{
    QuadInt result(x.field(), 1);
    QuadInt base = x;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

/// Exact quotient x / y when it lies in the ring.
inline std::optional<QuadInt> exact_divide(const QuadInt& x, const QuadInt& y)
{
    if (y.is_zero()) throw precondition_error("division by zero");
    BigInt n = quad_norm(y);
    QuadInt num = x * quad_conj(y);
    if (num.a() % n != 0 || num.b() % n != 0) return std::nullopt;
    return QuadInt(x.field(), num.a() / n, num.b() / n);
}

/// Value under the real embedding sqrt(m) > 0 (m > 0 only).
inline Real real_value(const QuadInt& x)
{
    if (!x.field().is_real()) throw precondition_error("real_value needs a real quadratic field");
    Real root = mp::sqrt(Real(x.field().m()));
    Real omega = x.field().is_half() ? (1 + root) / 2 : root;
    return Real(x.a()) + Real(x.b()) * omega;
}

/// Human-readable "a + b*w" form, w standing for omega.
inline std::string to_text(const QuadInt& x)
{
    if (x.b() == 0) return x.a().str();
    std::string w = x.b() == 1 ? "w" : x.b() == -1 ? "-w" : x.b().str() + "*w";
    if (x.a() == 0) return w;
    if (x.b() < 0) {
        BigInt mb = -x.b();
        return x.a().str() + " - " + (mb == 1 ? std::string("w") : mb.str() + "*w");
    }
    return x.a().str() + " + " + w;
}

inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_text(x); }

// ---------------------------------------------------------------------------
// Expression syntax for ring elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := integer | 'w' | 'sqrt(' integer ')' | '(' expr ')' | '-' factor
//
// Values are computed in Q(sqrt m) as x + y*sqrt(m); division only by
// nonzero rationals. The result must be an algebraic integer.

namespace detail {

struct SurdValue {
    Rational x;  // rational part
    Rational y;  // coefficient of sqrt(m)
};

class ElementParser {
public:
    ElementParser(const QuadraticField& f, std::string_view text) : field_(f), text_(text)
    {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
        }
    }

    SurdValue parse()
    {
        if (s_.empty()) throw fail("empty expression");
        SurdValue v = expr();
        if (pos_ != s_.size()) throw fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    input_error fail(const std::string& why) const
    {
        return input_error("cannot parse ring element '" + std::string(text_) + "': " + why);
    }

    bool eat(char c)
    {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SurdValue expr()
    {
        SurdValue v = term();
        while (pos_ < s_.size()) {
            if (eat('+')) {
                SurdValue t = term();
                v = {v.x + t.x, v.y + t.y};
            } else if (eat('-')) {
                SurdValue t = term();
                v = {v.x - t.x, v.y - t.y};
            } else {
                break;
            }
        }
        return v;
    }

    SurdValue term()
    {
        SurdValue v = factor();
        while (pos_ < s_.size()) {
            if (eat('*')) {
                SurdValue f = factor();
                const Rational m(field_.m());
                v = {v.x * f.x + v.y * f.y * m, v.x * f.y + v.y * f.x};
            } else if (eat('/')) {
                SurdValue f = factor();
                if (f.y != 0) throw fail("division by an irrational value");
                if (f.x == 0) throw fail("division by zero");
                v = {v.x / f.x, v.y / f.x};
            } else {
                break;
            }
        }
        return v;
    }

    BigInt integer()
    {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return parse_integer(std::string_view(s_).substr(start, pos_ - start));
    }

    SurdValue factor()
    {
        if (pos_ >= s_.size()) throw fail("unexpected end of input");
        if (eat('-')) {
            SurdValue f = factor();
            return {-f.x, -f.y};
        }
        if (eat('(')) {
            SurdValue v = expr();
            if (!eat(')')) throw fail("missing ')'");
            return v;
        }
        if (eat('w')) {
            if (field_.is_half()) return {Rational(1, 2), Rational(1, 2)};
            return {Rational(0), Rational(1)};
        }
        if (s_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            BigInt radicand = integer();
            if (!eat(')')) throw fail("missing ')' after sqrt");
            if (radicand != field_.m())
                throw fail("sqrt(" + radicand.str() + ") does not belong to Q(sqrt(" + std::to_string(field_.m()) + "))");
            return {Rational(0), Rational(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return {Rational(integer()), Rational(0)};
        throw fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    const QuadraticField& field_;
    std::string_view text_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Convert x + y*sqrt(m) to the integral basis; nullopt when not an algebraic integer.
inline std::optional<QuadInt> from_surd(const QuadraticField& f, const Rational& x, const Rational& y)
{
    if (f.is_half()) {
        // x + y sqrt m = (x - y) + 2y * omega
        Rational a = x - y, b = 2 * y;
        if (!is_integer(a) || !is_integer(b)) return std::nullopt;
        return QuadInt(f, mp::numerator(a), mp::numerator(b));
    }
    if (!is_integer(x) || !is_integer(y)) return std::nullopt;
    return QuadInt(f, mp::numerator(x), mp::numerator(y));
}

inline QuadInt parse_quad_int(const QuadraticField& f, std::string_view text)
{
    detail::SurdValue v = detail::ElementParser(f, text).parse();
    auto q = from_surd(f, v.x, v.y);
    if (!q) throw input_error("'" + std::string(text) + "' is not an algebraic integer of Q(sqrt(" + std::to_string(f.m()) + "))");
    return *q;
}

} // namespace quadrantal
