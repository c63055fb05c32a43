#pragma once

/**
 * @file complex_roots.hpp
 * @brief High-precision complex roots of rational polynomials
 *
 * Roots are located with Durand-Kerner iteration and polished by Newton
 * steps at about 90 significant digits, which leaves 60 trustworthy digits
 * for simple roots. Nothing exact depends on these values.
 */

#include "quadrantal/core.hpp"
#include "quadrantal/polynomial.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <vector>

namespace quadrantal {

using RealN = mp::number<mp::cpp_bin_float<90>>;
using ComplexN = mp::cpp_complex<90>;

inline RealN to_real_n(const Rational& q)
{
    return RealN(mp::numerator(q)) / RealN(mp::denominator(q));
}

/// Imaginary parts below this (relative) size are treated as zero.
inline RealN real_root_tolerance() { return RealN("1e-45"); }

namespace detail {

inline ComplexN eval(const std::vector<ComplexN>& c, const ComplexN& z)
{
    ComplexN acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline bool conjugate_order(const ComplexN& a, const ComplexN& b)
{
    const RealN tol("1e-40");
    const bool ra = a.imag() == 0;
    const bool rb = b.imag() == 0;
    if (ra != rb) return ra;
    if (ra) return a.real() < b.real();
    RealN dre = a.real() - b.real();
    if (mp::abs(dre) > tol) return dre < 0;
    // Same real part: upper half-plane first, then by size of the imaginary part.
    const bool ua = a.imag() > 0;
    const bool ub = b.imag() > 0;
    if (ua != ub) return ua;
    return mp::abs(a.imag()) < mp::abs(b.imag());
}

} // namespace detail

/**
 * All complex roots of a nonconstant polynomial, ordered real ascending first,
 * then non-real roots by real part with the upper-half-plane root of each
 * conjugate pair preceding its conjugate.
 */
inline std::vector<ComplexN> numeric_roots(const RationalPolynomial& p)
{
    if (p.degree() < 1) throw precondition_error("numeric_roots needs a nonconstant polynomial");
    const RationalPolynomial q = monic(p);
    const auto n = static_cast<std::size_t>(q.degree());
    std::vector<ComplexN> c;
    for (const auto& a : q.coefficients()) c.emplace_back(to_real_n(a));

    std::vector<ComplexN> deriv;
    for (std::size_t k = 1; k < c.size(); ++k) deriv.push_back(c[k] * RealN(static_cast<long long>(k)));

    // Cauchy bound on root moduli.
    RealN radius = 0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, RealN(mp::abs(c[k].real())));
    radius += 1;

    std::vector<ComplexN> z(n);
    const ComplexN seed(RealN("0.4"), RealN("0.9"));
    ComplexN power(1);
    for (std::size_t k = 0; k < n; ++k) {
        power *= seed;
        z[k] = power * radius;
    }
    const RealN stop("1e-85");
    for (int iter = 0; iter < 2000; ++iter) {
        RealN biggest = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ComplexN denom(1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            ComplexN step = detail::eval(c, z[i]) / denom;
            z[i] -= step;
            biggest = std::max(biggest, RealN(abs(step)));
        }
        if (biggest < stop) break;
    }
    for (auto& root : z) {
        for (int k = 0; k < 4; ++k) {
            ComplexN d = detail::eval(deriv, root);
            if (d == ComplexN(0)) break;
            root -= detail::eval(c, root) / d;
        }
        RealN scale = std::max(RealN(1), RealN(abs(root)));
        if (mp::abs(root.imag()) < real_root_tolerance() * scale) root = ComplexN(root.real(), RealN(0));
    }
    std::sort(z.begin(), z.end(), detail::conjugate_order);
    return z;
}

inline std::vector<ComplexN> numeric_roots(const IntegerPolynomial& p) { return numeric_roots(to_rational(p)); }

} // namespace quadrantal
