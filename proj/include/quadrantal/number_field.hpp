#pragma once

/**
 * @file number_field.hpp
 * @brief Number fields Q(theta) given by a monic irreducible integer polynomial
 *
 * An element is stored as the unique rational polynomial q of degree < n with
 * alpha = q(theta). Trace, norm and field polynomial come from q(M), M the
 * companion matrix of the defining polynomial; discriminants from Bareiss
 * determinants of trace matrices. Complex embeddings are computed lazily and
 * only serve cross-checks and conjugate ordering.
 */

#include "quadrantal/complex_roots.hpp"
#include "quadrantal/core.hpp"
#include "quadrantal/matrix.hpp"
#include "quadrantal/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quadrantal {

class NumberField {
public:
    /// Throws precondition_error when the polynomial is not monic, is constant,
    /// or is detectably reducible (repeated or rational roots).
    explicit NumberField(IntegerPolynomial minimal_polynomial)
    {
        validate(minimal_polynomial);
        auto impl = std::make_shared<Impl>();
        impl->minpoly = std::move(minimal_polynomial);
        impl->minpoly_q = to_rational(impl->minpoly);
        impl->companion = companion_matrix(impl->minpoly_q);
        impl_ = std::move(impl);
    }

    const IntegerPolynomial& minimal_polynomial() const noexcept { return impl_->minpoly; }
    const RationalPolynomial& modulus() const noexcept { return impl_->minpoly_q; }
    const Matrix<Rational>& companion() const noexcept { return impl_->companion; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(impl_->minpoly.degree()); }

    /// Conjugates theta^(1..n) in the library's conjugate order, computed once.
    const std::vector<ComplexN>& embeddings() const
    {
        std::call_once(impl_->embeddings_once, [this] { impl_->embeddings = numeric_roots(impl_->minpoly); });
        return impl_->embeddings;
    }

    friend bool operator==(const NumberField& a, const NumberField& b)
    {
        return a.impl_ == b.impl_ || a.impl_->minpoly == b.impl_->minpoly;
    }

private:
    struct Impl {
        IntegerPolynomial minpoly;
        RationalPolynomial minpoly_q;
        Matrix<Rational> companion;
        mutable std::once_flag embeddings_once;
        mutable std::vector<ComplexN> embeddings;
    };

    static void validate(const IntegerPolynomial& f)
    {
        if (f.degree() < 1) throw precondition_error("defining polynomial must be nonconstant");
        if (!f.is_monic()) throw precondition_error("defining polynomial must be monic");
        if (f.degree() == 1) return;
        if (eisenstein_witness(f)) return;
        const RationalPolynomial fq = to_rational(f);
        if (poly_gcd(fq, fq.derivative()).degree() > 0)
            throw precondition_error("defining polynomial " + to_text(f) + " has repeated roots");
        // A monic integer polynomial can only have integer rational roots.
        for (const auto& z : numeric_roots(fq)) {
            if (z.imag() != 0) continue;
            BigInt nearest(mp::round(z.real()));
            if (f.evaluate(nearest) == 0)
                throw precondition_error("defining polynomial " + to_text(f) + " has the rational root " + nearest.str());
        }
    }

    std::shared_ptr<const Impl> impl_;
};

class FieldElement {
public:
    FieldElement(NumberField field, const RationalPolynomial& representative)
        : field_(std::move(field)), repr_(representative % field_.modulus())
    {
    }

    static FieldElement rational(NumberField field, const Rational& c)
    {
        return FieldElement(std::move(field), RationalPolynomial::constant(c));
    }

    /// The generator theta itself.
    static FieldElement generator(NumberField field) { return FieldElement(std::move(field), RationalPolynomial::x()); }

    static FieldElement from_coordinates(NumberField field, std::span<const Rational> coords)
    {
        if (coords.size() != field.degree())
            throw precondition_error("element needs " + std::to_string(field.degree()) + " power-basis coordinates");
        return FieldElement(std::move(field), RationalPolynomial(std::vector<Rational>(coords.begin(), coords.end())));
    }

    const NumberField& field() const noexcept { return field_; }
    const RationalPolynomial& representative() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_.is_zero(); }

    /// Coordinates in the power basis 1, theta, ..., theta^{n-1}.
    std::vector<Rational> coordinates() const
    {
        std::vector<Rational> v(field_.degree(), Rational(0));
        for (std::size_t k = 0; k < repr_.coefficients().size(); ++k) v[k] = repr_.coefficients()[k];
        return v;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        same_field(a, b);
        return FieldElement(a.field_, a.repr_ + b.repr_);
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b)
    {
        same_field(a, b);
        return FieldElement(a.field_, a.repr_ - b.repr_);
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        same_field(a, b);
        return FieldElement(a.field_, a.repr_ * b.repr_);
    }

    friend FieldElement operator*(const Rational& c, const FieldElement& a) { return FieldElement(a.field_, c * a.repr_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.field_ == b.field_ && a.repr_ == b.repr_;
    }

private:
    static void same_field(const FieldElement& a, const FieldElement& b)
    {
        if (!(a.field_ == b.field_)) throw precondition_error("elements belong to different number fields");
    }

    NumberField field_;
    RationalPolynomial repr_;
};

/// Inverse via the extended gcd of the representative with the defining polynomial.
inline FieldElement inverse(const FieldElement& a)
{
    if (a.is_zero()) throw precondition_error("zero has no inverse");
    auto eg = poly_extended_gcd(a.representative(), a.field().modulus());
    // The defining polynomial is irreducible, so the gcd is 1 and s*q = 1 mod f.
    if (eg.gcd.degree() != 0) throw precondition_error("defining polynomial is reducible; element is a zero divisor");
    return FieldElement(a.field(), eg.s);
}

/// q(M): the matrix of multiplication by the element on the power basis.
inline Matrix<Rational> multiplication_matrix(const FieldElement& a)
{
    return evaluate(a.representative(), a.field().companion());
}

struct TraceNorm {
    Rational trace;
    Rational norm;
};

inline TraceNorm trace_and_norm(const FieldElement& a)
{
    Matrix<Rational> m = multiplication_matrix(a);
    return {m.trace(), determinant(m)};
}

inline Rational trace(const FieldElement& a) { return multiplication_matrix(a).trace(); }
inline Rational norm(const FieldElement& a) { return determinant(multiplication_matrix(a)); }

/// det[T(alpha_i alpha_j)]; zero exactly when the tuple is not a Q-basis.
inline Rational tuple_discriminant(std::span<const FieldElement> tuple)
{
    if (tuple.empty()) throw precondition_error("discriminant of an empty tuple");
    const std::size_t n = tuple.front().field().degree();
    if (tuple.size() != n)
        throw precondition_error("discriminant needs exactly " + std::to_string(n) + " elements, got " +
                                 std::to_string(tuple.size()));
    Matrix<Rational> t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            t(i, j) = trace(tuple[i] * tuple[j]);
            t(j, i) = t(i, j);
        }
    return determinant(t);
}

/// prod (x - q(theta_i)) as the characteristic polynomial of q(M).
inline RationalPolynomial field_polynomial(const FieldElement& a)
{
    return characteristic_polynomial(multiplication_matrix(a));
}

/**
 * Monic minimal polynomial over Q: the square-free part of the field
 * polynomial, confirmed by checking field polynomial = minpoly^(n/m).
 */
inline RationalPolynomial minimal_polynomial_of(const FieldElement& a)
{
    RationalPolynomial f = field_polynomial(a);
    RationalPolynomial p = square_free_part(f);
    const int n = f.degree();
    const int m = p.degree();
    if (m <= 0 || n % m != 0 || pow(p, static_cast<unsigned>(n / m)) != f)
        throw precondition_error("field polynomial is not a power of an irreducible polynomial; defining polynomial is reducible");
    return p;
}

inline bool is_algebraic_integer(const FieldElement& a)
{
    return to_integer(minimal_polynomial_of(a)).has_value();
}

struct ClearedDenominator {
    BigInt multiplier;
    FieldElement element;
};

namespace detail {

/// Smallest n > 0 with den | n^k, from the factorization of den.
inline BigInt smallest_root_multiple(const BigInt& den, unsigned k)
{
    BigInt n = 1;
    for (const auto& pp : factor_trial(den)) n *= pow(pp.prime, (pp.exponent + k - 1) / k);
    return n;
}

} // namespace detail

/**
 * A positive n with n*a an algebraic integer. With minimal polynomial
 * x^k + c_{k-1}x^{k-1} + ... + c_0, n*a has coefficients n^{k-i} c_i, so the
 * multiplier is lcm_i of the least n_i with den(c_i) | n_i^{k-i}. This is the
 * smallest valid integer multiplier.
 */
inline ClearedDenominator denominator_clearing(const FieldElement& a)
{
    if (a.is_zero()) throw precondition_error("denominator clearing of zero");
    RationalPolynomial p = minimal_polynomial_of(a);
    const auto k = static_cast<unsigned>(p.degree());
    BigInt n = 1;
    for (unsigned i = 0; i < k; ++i) {
        const BigInt den = mp::denominator(p[i]);
        if (den != 1) n = lcm(n, detail::smallest_root_multiple(den, k - i));
    }
    return {n, Rational(n) * a};
}

enum class ComposeOp { sum, product };

/**
 * Monic integer polynomial of degree deg(p)*deg(q) whose roots are all
 * alpha_i + beta_j (or alpha_i * beta_j): the characteristic polynomial of the
 * Kronecker sum (or product) of the two companion matrices.
 */
inline IntegerPolynomial composed_min_poly(ComposeOp op, const IntegerPolynomial& p, const IntegerPolynomial& q)
{
    if (!p.is_monic() || !q.is_monic()) throw precondition_error("composed_min_poly needs monic inputs");
    if (p.degree() < 1 || q.degree() < 1) throw precondition_error("composed_min_poly needs nonconstant inputs");
    Matrix<BigInt> a = companion_matrix(p);
    Matrix<BigInt> b = companion_matrix(q);
    Matrix<BigInt> k = op == ComposeOp::sum ? kronecker_sum(a, b) : kronecker_product(a, b);
    auto result = to_integer(characteristic_polynomial(to_rational(k)));
    if (!result) throw precondition_error("characteristic polynomial of an integer matrix is not integral");
    return *result;
}

/// Numerical conjugates q(theta_i) in conjugate order.
inline std::vector<ComplexN> conjugates(const FieldElement& a)
{
    std::vector<ComplexN> out;
    for (const auto& theta : a.field().embeddings()) {
        ComplexN acc(0);
        const auto& c = a.representative().coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * theta + ComplexN(to_real_n(*it));
        out.push_back(acc);
    }
    return out;
}

struct PrimitiveElement {
    BigInt c;
    bool certified_exactly;  ///< true when the composed polynomial was square-free
};

/**
 * Smallest c >= 0 with alpha_i + c*beta_j != alpha + c*beta for every i and
 * every j != 1, where alpha = alpha_1 and beta = beta_1 are the first roots in
 * conjugate order.
 *
 * For c >= 1 the condition is certified exactly when the polynomial with roots
 * alpha_i + c*beta_j is square-free (all mn values distinct); otherwise the
 * inequalities are checked on 90-digit numerical roots.
 */
inline PrimitiveElement primitive_element_search(const IntegerPolynomial& p, const IntegerPolynomial& q)
{
    if (!p.is_monic() || !q.is_monic() || p.degree() < 1 || q.degree() < 1)
        throw precondition_error("primitive_element_search needs monic nonconstant polynomials");
    if (q.degree() == 1) return {0, true};
    const auto alphas = numeric_roots(p);
    const auto betas = numeric_roots(q);
    const RealN separation("1e-40");
    const auto n = static_cast<std::size_t>(q.degree());
    for (BigInt c = 1;; ++c) {
        // c^n q(x/c) has roots c*beta_j.
        std::vector<BigInt> scaled(n + 1);
        for (std::size_t k = 0; k <= n; ++k) scaled[k] = q[k] * pow(c, static_cast<unsigned>(n - k));
        IntegerPolynomial h = composed_min_poly(ComposeOp::sum, p, IntegerPolynomial(std::move(scaled)));
        RationalPolynomial hq = to_rational(h);
        if (poly_gcd(hq, hq.derivative()).degree() == 0) return {c, true};

        const RealN cr(c);
        const ComplexN target = alphas.front() + cr * betas.front();
        bool ok = true;
        for (const auto& ai : alphas) {
            for (std::size_t j = 1; j < betas.size() && ok; ++j) {
                if (abs(ComplexN(ai + cr * betas[j] - target)) < separation) ok = false;
            }
            if (!ok) break;
        }
        if (ok) return {c, false};
    }
}

} // namespace quadrantal
