// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "quadrantal/quadrantal.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace quadrantal;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

bool report(int id, const char* name, double limit_seconds, const std::function<void(Check&)>& body)
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        std::ostringstream s;
        s << "took " << secs << " s, limit " << limit_seconds << " s";
        c.expect(false, s.str());
    }
    std::printf("%s %d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, c.ok ? "" : ": ", c.why.str().c_str());
    return c.ok;
}

QuadIdeal random_ideal(const QuadraticField& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-15, 15);
    for (;;) {
        QuadIdeal i = ideal_from_generators(f, {QuadInt(f, d(rng), d(rng)), QuadInt(f, d(rng), d(rng))});
        if (!i.is_zero()) return i;
    }
}

bool is_prime_norm(const BigInt& n)
{
    const BigInt r = isqrt(n);
    return is_prime(n) || (r * r == n && is_prime(r));
}

QuadIdeal remultiply(const QuadIdeal& x, const std::vector<PrimeFactor>& fs)
{
    QuadIdeal p = QuadIdeal::unit(x.field());
    for (const auto& pf : fs) p = ideal_product(p, ideal_power(pf.prime, static_cast<unsigned>(pf.exponent)));
    return p;
}

ComplexN evaluate(const IntegerPolynomial& h, const ComplexN& z)
{
    ComplexN v(0);
    for (auto it = h.coefficients().rbegin(); it != h.coefficients().rend(); ++it) v = v * z + ComplexN(RealN(*it));
    return v;
}

} // namespace

int main()
{
    bool all = true;

    all &= report(1, "class numbers h(2)=1, h(-5)=2, h(-23)=3 cyclic, each < 1 s", 0, [](Check& c) {
        for (auto [m, h] : {std::pair{2, 1}, std::pair{-5, 2}, std::pair{-23, 3}}) {
            const auto t0 = std::chrono::steady_clock::now();
            auto g = class_group(QuadraticField(m));
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.expect(g.h() == static_cast<std::size_t>(h), "wrong h for m=" + std::to_string(m));
            c.expect(g.is_cyclic(), "not cyclic for m=" + std::to_string(m));
            c.expect(verify_class_group(g).ok(), "group table check failed for m=" + std::to_string(m));
            c.expect(secs < 1.0, "m=" + std::to_string(m) + " took over 1 s");
        }
        c.expect(class_group(QuadraticField(-23)).structure == std::vector<std::uint64_t>{3}, "structure of m=-23 is not [3]");
    });

    all &= report(2, "imaginary class number one exactly at the nine m in [-200, -1]", 30, [](Check& c) {
        const std::vector<std::int64_t> one{-1, -2, -3, -7, -11, -19, -43, -67, -163};
        for (std::int64_t m = -200; m <= -1; ++m) {
            if (!is_square_free(BigInt(m))) continue;
            const bool expect_one = std::find(one.begin(), one.end(), m) != one.end();
            const auto h = class_group(QuadraticField(m)).h();
            c.expect((h == 1) == expect_one, "m=" + std::to_string(m) + " has h=" + std::to_string(h));
        }
    });

    all &= report(3, "(21) in Z[sqrt -5] factors as P3 P3' P7 P7'; 3, 7, 1 +- 2 sqrt -5 irreducible", 0, [](Check& c) {
        const QuadraticField f(-5);
        const QuadIdeal x = principal_ideal(QuadInt(f, 21, 0));
        const auto fs = factor_ideal(x);
        c.expect(fs.size() == 4, "expected four distinct prime factors");
        std::vector<BigInt> norms;
        for (const auto& pf : fs) {
            c.expect(pf.exponent == 1, "a factor appears more than once");
            c.expect(is_prime(pf.prime.norm()), "factor of non-prime norm");
            norms.push_back(pf.prime.norm());
        }
        c.expect(norms == std::vector<BigInt>{3, 3, 7, 7}, "factor norms are not 3, 3, 7, 7");
        if (fs.size() == 4) {
            c.expect(fs[0].prime == ideal_conj(fs[1].prime), "the two norm-3 primes are not conjugate");
            c.expect(fs[2].prime == ideal_conj(fs[3].prime), "the two norm-7 primes are not conjugate");
        }
        c.expect(remultiply(x, fs) == x, "re-multiplication differs from (21)");
        // An element of norm 9, 49 or 21 factors only through elements of norm 3 or 7; none exist.
        c.expect(oracle::elements_of_norm(f, 3).empty() && oracle::elements_of_norm(f, 7).empty(), "element of norm 3 or 7 found");
        const QuadInt s = sqrt_m(f);
        c.expect(quad_norm(QuadInt(f, 3, 0)) == 9 && quad_norm(QuadInt(f, 7, 0)) == 49, "norms of 3, 7");
        c.expect(quad_norm(QuadInt(f, 1, 0) + 2 * s) == 21 && quad_norm(QuadInt(f, 1, 0) - 2 * s) == 21, "norms of 1 +- 2 sqrt -5");
        c.expect(QuadInt(f, 3, 0) * QuadInt(f, 7, 0) == (QuadInt(f, 1, 0) + 2 * s) * (QuadInt(f, 1, 0) - 2 * s), "3*7 != (1+2s)(1-2s)");
        c.expect(!is_principal(fs[0].prime) && !is_principal(fs[2].prime), "a prime factor is principal");
    });

    all &= report(4, "splitting laws for q <= 100, m in {-23, -5, -1, 2, 3, 5, 13}", 0, [](Check& c) {
        for (std::int64_t m : {-23, -5, -1, 2, 3, 5, 13}) {
            const QuadraticField f(m);
            for (std::int64_t q = 2; q <= 100; ++q) {
                if (!is_prime(BigInt(q))) continue;
                const auto r = split_prime(f, q);
                const std::string at = " at m=" + std::to_string(m) + " q=" + std::to_string(q);
                c.expect(r.e * r.f * r.g == 2, "efg != 2" + at);
                c.expect((r.type == SplittingType::ramified) == (f.discriminant() % q == 0), "ramification law" + at);
                const QuadIdeal qq = principal_ideal(QuadInt(f, q, 0));
                c.expect(remultiply(qq, r.factors) == qq, "product" + at);
                // odd unramified q: split exactly when d is a square mod q
                if (q > 2 && f.discriminant() % q != 0) {
                    const auto sq = oracle::squares_mod(q);
                    const bool residue = sq[static_cast<std::size_t>(floor_mod(BigInt(f.discriminant()), BigInt(q)))];
                    c.expect((r.type == SplittingType::split) == residue, "Legendre symbol" + at);
                }
            }
        }
    });

    all &= report(5, "units: lambda(2) = 1 + sqrt 2, regulator 0.8813735870, w = 4, 6, 2, minimality for m <= 13", 0, [](Check& c) {
        const QuadraticField f2(2);
        const auto u = unit_group_report(f2);
        c.expect(u.fundamental_unit && *u.fundamental_unit == QuadInt(f2, 1, 1), "fundamental unit of m=2");
        c.expect(to_decimal(u.regulator, 10) == "0.8813735870", "regulator is " + to_decimal(u.regulator, 10));
        c.expect(unit_group_report(QuadraticField(-1)).torsion_order == 4, "w(-1)");
        c.expect(unit_group_report(QuadraticField(-3)).torsion_order == 6, "w(-3)");
        c.expect(unit_group_report(QuadraticField(-5)).torsion_order == 2, "w(-5)");
        for (std::int64_t m = 2; m <= 13; ++m) {
            if (!is_square_free(BigInt(m))) continue;
            const QuadraticField f(m);
            const auto brute = oracle::smallest_unit_above_one(f, 1000);
            c.expect(brute && *brute == fundamental_unit(f), "brute-force unit differs at m=" + std::to_string(m));
        }
    });

    all &= report(6, "cyclotomic splitting for p in {5, 7, 11, 13}, q <= 50, and efg = phi(m) for m <= 60", 0, [](Check& c) {
        for (std::int64_t p : {5, 7, 11, 13}) {
            for (std::int64_t q = 2; q <= 50; ++q) {
                if (!is_prime(BigInt(q))) continue;
                const auto s = split_prime_cyclotomic(p, q);
                const std::string at = " at p=" + std::to_string(p) + " q=" + std::to_string(q);
                if (q == p) {
                    c.expect(s.e == p - 1 && s.f == 1 && s.g == 1, "(e,f,g) != (p-1,1,1)" + at);
                    continue;
                }
                std::int64_t order = 1, x = q % p;
                while (x != 1) {
                    x = x * q % p;
                    ++order;
                }
                c.expect(s.e == 1 && s.f == order && s.g == (p - 1) / order, "f or g" + at);
            }
        }
        for (std::int64_t m = 3; m <= 60; ++m)
            for (std::int64_t q = 2; q <= 60; ++q) {
                if (!is_prime(BigInt(q))) continue;
                const auto s = split_prime_cyclotomic(m, q);
                c.expect(s.e * s.f * s.g == euler_phi(m), "efg != phi at m=" + std::to_string(m) + " q=" + std::to_string(q));
            }
    });

    all &= report(7, "discriminants 4m or m for 20 quadratic fields and (-1)^((p-1)/2) p^(p-2)", 0, [](Check& c) {
        const std::vector<std::int64_t> ms{-1, -2, -3, -5, -6, -7, -11, -15, -19, -23, 2, 3, 5, 6, 7, 10, 13, 17, 21, 94};
        for (auto m : ms) {
            NumberField k(IntegerPolynomial({BigInt(-m), BigInt(0), BigInt(1)}));
            const bool one_mod_four = floor_mod(BigInt(m), BigInt(4)) == 1;
            std::vector<FieldElement> basis{FieldElement::rational(k, 1),
                                            one_mod_four ? FieldElement(k, parse_rational_polynomial("1/2 + 1/2*x"))
                                                         : FieldElement::generator(k)};
            const Rational expect = one_mod_four ? Rational(m) : Rational(4 * m);
            c.expect(tuple_discriminant(basis) == expect, "m=" + std::to_string(m));
        }
        const std::vector<std::pair<std::int64_t, BigInt>> cyclo{{3, -3}, {5, 125}, {7, -16807}, {11, BigInt(-2357947691LL)}};
        for (const auto& [p, d] : cyclo) {
            NumberField k(cyclotomic_polynomial_prime(p));
            std::vector<FieldElement> basis;
            FieldElement z = FieldElement::rational(k, 1);
            for (std::int64_t i = 0; i < p - 1; ++i, z = z * FieldElement::generator(k)) basis.push_back(z);
            const BigInt sign = (p - 1) / 2 % 2 ? -1 : 1;
            c.expect(tuple_discriminant(basis) == Rational(d) && d == sign * pow(BigInt(p), static_cast<unsigned>(p - 2)),
                     "p=" + std::to_string(p));
        }
    });

    all &= report(8, "ideal census: sieve = enumeration for n <= 300, normalized deviation <= 5 at k = 1e3, 1e4, 1e5", 60, [](Check& c) {
        for (std::int64_t m : {2, -5, -23}) {
            const QuadraticField f(m);
            const auto a = ideal_count_sieve(f, 300);
            for (std::int64_t n = 1; n <= 300; ++n)
                c.expect(a[static_cast<std::size_t>(n)] == oracle::ideals_of_norm(f, n).size(),
                         "count mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
            for (std::int64_t k : {1000, 10000, 100000}) {
                const auto r = census_check(f, k);
                c.expect(r.normalized_deviation <= 5, "m=" + std::to_string(m) + " k=" + std::to_string(k) + " deviation " +
                                                          to_decimal(r.normalized_deviation, 6));
            }
        }
    });

    all &= report(9, "property suites: norm multiplicativity, factorization round trips, power law, root containment", 0, [](Check& c) {
        std::mt19937_64 rng(2024);
        const std::vector<std::int64_t> fields{-23, -5, -1, -3, 2, 3, 5, 10, 13};
        std::uniform_int_distribution<std::size_t> pick(0, fields.size() - 1);
        std::uniform_int_distribution<int> coef(-40, 40);
        for (int i = 0; i < 200; ++i) {
            const QuadraticField f(fields[pick(rng)]);
            const QuadIdeal x = random_ideal(f, rng), y = random_ideal(f, rng);
            c.expect(ideal_product(x, y).norm() == x.norm() * y.norm(), "ideal norm not multiplicative");
            const QuadInt a(f, coef(rng), coef(rng)), b(f, coef(rng), coef(rng));
            c.expect(quad_norm(a * b) == quad_norm(a) * quad_norm(b), "element norm not multiplicative");
        }
        for (auto m : fields) {
            const QuadraticField f(m);
            for (int i = 0; i < 100; ++i) {
                const QuadIdeal x = random_ideal(f, rng);
                const auto fs = factor_ideal(x);
                c.expect(remultiply(x, fs) == x, "factorization round trip failed at m=" + std::to_string(m));
                for (const auto& pf : fs) c.expect(is_prime_norm(pf.prime.norm()), "non-prime factor at m=" + std::to_string(m));
            }
        }
        {
            NumberField k(cyclotomic_polynomial_prime(7));
            std::uniform_int_distribution<int> small(-3, 3), mode(0, 2);
            for (int i = 0; i < 50; ++i) {
                std::vector<Rational> v(k.degree());
                for (auto& x : v) x = Rational(small(rng), 1 + (small(rng) + 3) % 3);
                // mix in elements of proper subfields so the power is sometimes > 1
                if (mode(rng) == 0) std::fill(v.begin() + 1, v.end(), Rational(0));
                FieldElement a = FieldElement::from_coordinates(k, v);
                if (mode(rng) == 1) a = a + FieldElement(k, parse_rational_polynomial("x + x^6"));
                const auto fp = field_polynomial(a);
                const auto mp = minimal_polynomial_of(a);
                c.expect(fp.degree() % mp.degree() == 0 && pow(mp, static_cast<unsigned>(fp.degree() / mp.degree())) == fp,
                         "field polynomial is not a power of the minimal polynomial");
            }
        }
        {
            const RealN tol("1e-20");
            const std::vector<std::pair<const char*, const char*>> pairs{
                {"x^2 - 2", "x^3 - 3"}, {"x^2 + x + 1", "x^2 + 5"}, {"x^3 - x - 1", "x^2 - 7"}, {"x^4 + 1", "x^2 - 3"}};
            for (const auto& [ps, qs] : pairs) {
                const auto p = parse_integer_polynomial(ps), q = parse_integer_polynomial(qs);
                const auto hs = composed_min_poly(ComposeOp::sum, p, q), hp = composed_min_poly(ComposeOp::product, p, q);
                for (const auto& x : numeric_roots(p))
                    for (const auto& y : numeric_roots(q)) {
                        c.expect(RealN(abs(evaluate(hs, x + y))) < tol, std::string("sum root missing for ") + ps + ", " + qs);
                        c.expect(RealN(abs(evaluate(hp, x * y))) < tol, std::string("product root missing for ") + ps + ", " + qs);
                    }
            }
        }
    });

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
