#include "quadrantal/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quadrantal;

namespace {

RationalPolynomial rp(std::string_view s) { return parse_rational_polynomial(s); }
IntegerPolynomial ip(std::string_view s) { return parse_integer_polynomial(s); }

IntegerPolynomial random_integer_poly(std::mt19937_64& rng, int max_degree, int bound)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return IntegerPolynomial(std::move(c));
}

} // namespace

TEST(Polynomial, ZeroIsEmptyAndTrailingZerosAreStripped)
{
    IntegerPolynomial z({BigInt(0), BigInt(0)});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_EQ(IntegerPolynomial({BigInt(1), BigInt(2), BigInt(0)}), IntegerPolynomial({BigInt(1), BigInt(2)}));
}

TEST(Polynomial, DivRemExamples)
{
    auto [q, r] = poly_div_rem(rp("x^2 - 2"), rp("x - 1"));
    EXPECT_EQ(q, rp("x + 1"));
    EXPECT_EQ(r, rp("-1"));
    // Expansion check of the identity.
    EXPECT_EQ(q * rp("x - 1") + r, rp("x^2 - 2"));

    auto self = poly_div_rem(rp("3*x^3 - x + 5"), rp("3*x^3 - x + 5"));
    EXPECT_EQ(self.quotient, rp("1"));
    EXPECT_TRUE(self.remainder.is_zero());

    auto cube = poly_div_rem(rp("x^3 - 1"), rp("x - 1"));
    EXPECT_EQ(cube.quotient, rp("x^2 + x + 1"));
    EXPECT_TRUE(cube.remainder.is_zero());
}

TEST(Polynomial, DivisionByZeroIsRejected)
{
    EXPECT_THROW(poly_div_rem(rp("x"), RationalPolynomial{}), precondition_error);
}

TEST(Polynomial, DivisionIdentityHoldsOnRandomInputs)
{
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        RationalPolynomial a = to_rational(random_integer_poly(rng, 8, 50));
        RationalPolynomial b = to_rational(random_integer_poly(rng, 8, 50));
        if (b.is_zero()) continue;
        auto [q, r] = poly_div_rem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
}

TEST(Polynomial, GcdExamples)
{
    EXPECT_EQ(poly_gcd(rp("x^2 - 1"), rp("x - 1")), rp("x - 1"));
    EXPECT_EQ(poly_gcd(rp("x^2 - 2"), rp("x^2 - 3")), rp("1"));
    EXPECT_EQ(poly_gcd(rp("2*x^2 + 4"), RationalPolynomial{}), rp("x^2 + 2"));
    EXPECT_THROW(poly_gcd(RationalPolynomial{}, RationalPolynomial{}), precondition_error);
}

TEST(Polynomial, GcdDividesBothAndIsMonic)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto common = to_rational(random_integer_poly(rng, 3, 9));
        if (common.is_zero()) continue;
        auto a = common * to_rational(random_integer_poly(rng, 4, 9));
        auto b = common * to_rational(random_integer_poly(rng, 4, 9));
        if (a.is_zero() && b.is_zero()) continue;
        auto g = poly_gcd(a, b);
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        if (!a.is_zero() && !b.is_zero()) EXPECT_TRUE((g % monic(common)).is_zero());
    }
}

TEST(Polynomial, ExtendedGcdBezout)
{
    auto a = rp("x^3 - 2");
    auto b = rp("x^2 + x + 1");
    auto eg = poly_extended_gcd(a, b);
    EXPECT_EQ(eg.gcd, rp("1"));
    EXPECT_EQ(eg.s * a + eg.t * b, eg.gcd);
}

TEST(Polynomial, ContentAndPrimitivePart)
{
    auto s = content_and_primitive_part(ip("2 + 4*x + 6*x^2"));
    EXPECT_EQ(s.content, 2);
    EXPECT_EQ(s.primitive, ip("1 + 2*x + 3*x^2"));

    auto t = content_and_primitive_part(ip("x^2 + 1"));
    EXPECT_EQ(t.content, 1);
    EXPECT_EQ(t.primitive, ip("x^2 + 1"));

    auto u = content_and_primitive_part(ip("-4*x"));
    EXPECT_EQ(u.content, 4);
    EXPECT_EQ(u.primitive, ip("-x"));

    EXPECT_THROW(content_and_primitive_part(IntegerPolynomial{}), precondition_error);
}

TEST(Polynomial, GaussClosureOnRandomPrimitivePairs)
{
    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 200) {
        auto a = random_integer_poly(rng, 5, 30);
        auto b = random_integer_poly(rng, 5, 30);
        if (a.is_zero() || b.is_zero()) continue;
        auto pa = content_and_primitive_part(a).primitive;
        auto pb = content_and_primitive_part(b).primitive;
        EXPECT_EQ(content_and_primitive_part(pa * pb).content, 1);
        auto split = content_and_primitive_part(a);
        EXPECT_EQ(split.content * split.primitive, a);
        ++tested;
    }
}

TEST(Polynomial, EisensteinExamples)
{
    EXPECT_EQ(eisenstein_witness(ip("x^3 - 2")), BigInt(2));
    EXPECT_FALSE(eisenstein_witness(ip("x^2 + 4")).has_value());
    // ((x+1)^5 - 1)/x = x^4 + 5x^3 + 10x^2 + 10x + 5
    EXPECT_EQ(eisenstein_witness(ip("5 + 10*x + 10*x^2 + 5*x^3 + x^4")), BigInt(5));
    EXPECT_THROW(eisenstein_witness(ip("7")), precondition_error);
}

TEST(Polynomial, EisensteinWitnessesAreSound)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto p = random_integer_poly(rng, 6, 40);
        if (p.degree() < 1) continue;
        auto w = eisenstein_witness(p);
        if (!w) continue;
        const BigInt& q = *w;
        EXPECT_NE(p.leading() % q, 0);
        for (int k = 0; k < p.degree(); ++k) EXPECT_EQ(p[static_cast<std::size_t>(k)] % q, 0);
        EXPECT_NE(p[0] % (q * q), 0);
    }
}

TEST(Polynomial, CyclotomicPrime)
{
    EXPECT_EQ(cyclotomic_polynomial_prime(3), ip("1 + x + x^2"));
    EXPECT_EQ(cyclotomic_polynomial_prime(2), ip("1 + x"));
    EXPECT_EQ(cyclotomic_polynomial_prime(7).degree(), 6);
    EXPECT_THROW(cyclotomic_polynomial_prime(9), precondition_error);
    for (int p = 2; p <= 100; ++p) {
        if (!is_prime(BigInt(p))) continue;
        EXPECT_EQ(cyclotomic_polynomial_prime(p).evaluate(BigInt(1)), p);
    }
}

TEST(Polynomial, TextFormRoundTrips)
{
    for (const char* s : {"0", "1", "-2 + x^2", "3/4 - 1/2*x + x^5", "x", "-x^3"}) {
        auto p = rp(s);
        EXPECT_EQ(to_text(p), s);
        EXPECT_EQ(rp(to_text(p)), p);
    }
}

TEST(Polynomial, TextParserAcceptsCoefficientTerms)
{
    EXPECT_EQ(rp("1 + 2*x + 3*x^2"), RationalPolynomial({Rational(1), Rational(2), Rational(3)}));
    EXPECT_EQ(rp("x^2 + x^2"), rp("2*x^2"));
    EXPECT_THROW(rp("1 + * x"), input_error);
    EXPECT_THROW(rp(""), input_error);
    EXPECT_THROW(ip("x/2"), input_error);
    EXPECT_THROW(ip("1/2*x"), input_error);
}
