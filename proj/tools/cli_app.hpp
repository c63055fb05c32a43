#pragma once

// Command-line front end. Kept in a header so the tests can drive it in-process.

#include "quadrantal/quadrantal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace quadrantal::cli {

enum ExitCode : int { ok = 0, internal_failure = 1, bad_input = 2, precondition_failed = 3 };

namespace detail {

// Polynomials are given as text ("x^2 - 2") or as a JSON coefficient array.
inline RationalPolynomial read_rational_polynomial(const std::string& text)
{
    if (!text.empty() && text.front() == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw input_error(std::string("malformed JSON polynomial: ") + e.what());
        }
        return rational_polynomial_from_json(j);
    }
    return parse_rational_polynomial(text);
}

inline IntegerPolynomial read_integer_polynomial(const std::string& text)
{
    auto p = to_integer(read_rational_polynomial(text));
    if (!p) throw input_error("'" + text + "' must have integer coefficients");
    return *p;
}

inline IntegerPolynomial read_minpoly(const std::string& text)
{
    auto p = read_integer_polynomial(text);
    if (p.degree() < 1 || !p.is_monic()) throw input_error("defining polynomial must be monic of degree >= 1");
    return p;
}

// Elements are polynomials in x reduced mod the minimal polynomial, or {"coords": [...]}.
inline FieldElement read_element(const NumberField& k, const std::string& text)
{
    if (!text.empty() && text.front() == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw input_error(std::string("malformed JSON element: ") + e.what());
        }
        return field_element_from_json(k, j);
    }
    return FieldElement(k, parse_rational_polynomial(text));
}

inline BigInt read_integer(const std::string& text, const char* what)
{
    try {
        return parse_integer(text);
    } catch (const input_error&) {
        throw input_error(std::string(what) + " must be an integer, got '" + text + "'");
    }
}

inline std::int64_t read_int64(const std::string& text, const char* what)
{
    const BigInt v = read_integer(text, what);
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw input_error(std::string(what) + " is out of range");
    return v.convert_to<std::int64_t>();
}

inline QuadIdeal read_ideal(const QuadraticField& f, const std::string& text)
{
    if (!text.empty() && text.front() == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw input_error(std::string("malformed JSON ideal: ") + e.what());
        }
        QuadIdeal x = quad_ideal_from_json(j);
        if (!(x.field() == f)) throw input_error("ideal JSON names a different field");
        return x;
    }
    return parse_ideal(f, text);
}

inline PellKind read_pell_kind(const std::string& s)
{
    if (s == "+1" || s == "1") return PellKind::plus_one;
    if (s == "-1") return PellKind::minus_one;
    if (s == "+4" || s == "4") return PellKind::plus_four;
    if (s == "-4") return PellKind::minus_four;
    throw input_error("--pell must be one of +1, -1, +4, -4");
}

inline void write_text(std::ostream& out, const Json& j, const std::string& indent)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object() || (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); }))) {
            out << indent << key << ":\n";
            write_text(out, v, indent + "  ");
        } else if (v.is_array()) {
            out << indent << key << ": [";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            out << "]\n";
        } else {
            out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

inline Json verification(const QuadIdeal& target, const std::vector<PrimeFactor>& fs)
{
    QuadIdeal product = QuadIdeal::unit(target.field());
    bool all_prime = true;
    for (const auto& pf : fs) {
        product = ideal_product(product, ideal_power(pf.prime, static_cast<unsigned>(pf.exponent)));
        const BigInt n = pf.prime.norm();
        // a prime ideal has norm q or q^2 with q prime
        const BigInt r = isqrt(n);
        all_prime = all_prime && (is_prime(n) || (r * r == n && is_prime(r)));
    }
    return Json{{"product", ideal_entry(product)}, {"product_matches", product == target}, {"factors_prime", all_prime}};
}

inline Json verification(const ClassGroupReport& g)
{
    const auto c = verify_class_group(g);
    return Json{{"identity", c.identity},
                {"commutative", c.commutative},
                {"associative", c.associative},
                {"inverses", c.inverses},
                {"inverse_products_principal", c.inverse_products_principal},
                {"ok", c.ok()}};
}

} // namespace detail

/**
 * Runs one command. `args` excludes the program name. JSON goes to `out`
 * (or text with --format text); diagnostics and usage go to `err`.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using namespace detail;

    CLI::App app{"Exact computations in quadratic and cyclotomic number fields", "quadrantal"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited, so --format is accepted after a subcommand too
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    // Each leaf sets `action`; it runs after parsing so errors map to exit codes.
    std::function<Json()> action;
    std::function<void(std::ostream&)> raw_action;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        return parent->add_subcommand(name, help);
    };

    // ---- poly
    auto* poly = app.add_subcommand("poly", "Polynomials over Q")->require_subcommand(1);
    std::string pa, pb, pp;
    bool extended = false;
    {
        auto* c = leaf(poly, "divrem", "Quotient and remainder of a by b");
        c->add_option("--a", pa, "Dividend")->required();
        c->add_option("--b", pb, "Divisor")->required();
        c->callback([&] {
            action = [&] {
                auto a = read_rational_polynomial(pa), b = read_rational_polynomial(pb);
                if (b.is_zero()) throw input_error("division by the zero polynomial");
                auto qr = poly_div_rem(a, b);
                return Json{{"schema_version", kSchemaVersion},
                            {"quotient", to_json(qr.quotient)},
                            {"remainder", to_json(qr.remainder)},
                            {"quotient_text", to_text(qr.quotient)},
                            {"remainder_text", to_text(qr.remainder)}};
            };
        });
    }
    {
        auto* c = leaf(poly, "gcd", "Monic gcd of a and b");
        c->add_option("--a", pa, "First polynomial")->required();
        c->add_option("--b", pb, "Second polynomial")->required();
        c->add_flag("--extended", extended, "Also print Bezout cofactors s, t with s*a + t*b = gcd");
        c->callback([&] {
            action = [&] {
                auto a = read_rational_polynomial(pa), b = read_rational_polynomial(pb);
                Json j{{"schema_version", kSchemaVersion}};
                if (extended) {
                    auto e = poly_extended_gcd(a, b);
                    j["gcd"] = to_json(e.gcd);
                    j["gcd_text"] = to_text(e.gcd);
                    j["s"] = to_json(e.s);
                    j["t"] = to_json(e.t);
                } else {
                    auto g = poly_gcd(a, b);
                    j["gcd"] = to_json(g);
                    j["gcd_text"] = to_text(g);
                }
                return j;
            };
        });
    }
    {
        auto* c = leaf(poly, "eisenstein", "Smallest prime witnessing Eisenstein's criterion");
        c->add_option("--p", pp, "Integer polynomial")->required();
        c->callback([&] {
            action = [&] {
                auto p = read_integer_polynomial(pp);
                auto w = eisenstein_witness(p);
                return Json{{"schema_version", kSchemaVersion},
                            {"polynomial", to_json(p)},
                            {"eisenstein", w.has_value()},
                            {"prime", w ? Json(w->str()) : Json(nullptr)}};
            };
        });
    }
    {
        auto* c = leaf(poly, "cyclotomic", "Cyclotomic polynomial 1 + x + ... + x^(p-1) for a prime p");
        c->add_option("--p", pp, "Prime")->required();
        c->callback([&] {
            action = [&] {
                const BigInt p = read_integer(pp, "--p");
                auto phi = cyclotomic_polynomial_prime(p);
                return Json{{"schema_version", kSchemaVersion}, {"p", pp}, {"polynomial", to_json(phi)}, {"text", to_text(phi)}};
            };
        });
    }

    // ---- field
    auto* field = app.add_subcommand("field", "Number fields Q[x]/(f)")->require_subcommand(1);
    std::string minpoly, element, fg_f, fg_g, op = "sum";
    std::vector<std::string> basis;
    {
        auto* c = leaf(field, "trace-norm", "Trace and norm of an element");
        c->add_option("--minpoly", minpoly, "Monic defining polynomial")->required();
        c->add_option("--element", element, "Element as a polynomial in x or {\"coords\": [...]}")->required();
        c->callback([&] {
            action = [&] {
                NumberField k(read_minpoly(minpoly));
                auto a = read_element(k, element);
                auto tn = trace_and_norm(a);
                return Json{{"schema_version", kSchemaVersion},
                            {"field", to_json(k)},
                            {"element", to_json(a)},
                            {"trace", to_string(tn.trace)},
                            {"norm", to_string(tn.norm)}};
            };
        });
    }
    {
        auto* c = leaf(field, "minpoly-of", "Minimal and field polynomials of an element");
        c->add_option("--minpoly", minpoly, "Monic defining polynomial")->required();
        c->add_option("--element", element, "Element as a polynomial in x or {\"coords\": [...]}")->required();
        c->callback([&] {
            action = [&] {
                NumberField k(read_minpoly(minpoly));
                auto a = read_element(k, element);
                auto mp = minimal_polynomial_of(a);
                return Json{{"schema_version", kSchemaVersion},
                            {"field", to_json(k)},
                            {"element", to_json(a)},
                            {"minimal_polynomial", to_json(mp)},
                            {"field_polynomial", to_json(field_polynomial(a))},
                            {"algebraic_integer", to_integer(mp).has_value()}};
            };
        });
    }
    {
        auto* c = leaf(field, "discriminant", "Discriminant of a tuple (power basis by default)");
        c->add_option("--minpoly", minpoly, "Monic defining polynomial")->required();
        c->add_option("--basis", basis, "Tuple elements; repeat the flag or give several values");
        c->callback([&] {
            action = [&] {
                NumberField k(read_minpoly(minpoly));
                std::vector<FieldElement> tuple;
                if (basis.empty()) {
                    FieldElement p = FieldElement::rational(k, Rational(1));
                    for (std::size_t i = 0; i < k.degree(); ++i, p = p * FieldElement::generator(k)) tuple.push_back(p);
                } else {
                    for (const auto& b : basis) tuple.push_back(read_element(k, b));
                }
                if (tuple.size() != k.degree())
                    throw input_error("--basis needs exactly " + std::to_string(k.degree()) + " elements");
                Json elems = Json::array();
                for (const auto& e : tuple) elems.push_back(to_json(e));
                return Json{{"schema_version", kSchemaVersion},
                            {"field", to_json(k)},
                            {"tuple", elems},
                            {"discriminant", to_string(tuple_discriminant(tuple))}};
            };
        });
    }
    {
        auto* c = leaf(field, "compose", "Polynomial whose roots are the pairwise sums or products of roots");
        c->add_option("--f", fg_f, "Monic integer polynomial")->required();
        c->add_option("--g", fg_g, "Monic integer polynomial")->required();
        c->add_option("--op", op, "sum or product")->check(CLI::IsMember({"sum", "product"}));
        c->callback([&] {
            action = [&] {
                auto f = read_minpoly(fg_f), g = read_minpoly(fg_g);
                auto h = composed_min_poly(op == "sum" ? ComposeOp::sum : ComposeOp::product, f, g);
                return Json{{"schema_version", kSchemaVersion}, {"op", op}, {"polynomial", to_json(h)}, {"text", to_text(h)}};
            };
        });
    }
    {
        auto* c = leaf(field, "primitive-element", "Smallest c with Q(a, b) = Q(a + c*b)");
        c->add_option("--f", fg_f, "Minimal polynomial of a")->required();
        c->add_option("--g", fg_g, "Minimal polynomial of b")->required();
        c->callback([&] {
            action = [&] {
                auto pe = primitive_element_search(read_minpoly(fg_f), read_minpoly(fg_g));
                return Json{{"schema_version", kSchemaVersion}, {"c", pe.c.str()}, {"certified_exactly", pe.certified_exactly}};
            };
        });
    }

    // ---- quad
    auto* quad = app.add_subcommand("quad", "Quadratic rings of integers")->require_subcommand(1);
    std::string m_text, q_text, ideal_text, other_text, ideal_op, power_text = "2";
    bool verify = false;
    auto add_m = [&](CLI::App* c) { c->add_option("--m", m_text, "Square-free integer m != 0, 1")->required(); };
    auto field_m = [&] { return QuadraticField(read_integer(m_text, "--m")); };
    {
        auto* c = leaf(quad, "ring", "Ring of integers and discriminant");
        add_m(c);
        c->callback([&] {
            action = [&] {
                Json j{{"schema_version", kSchemaVersion}};
                j.update(to_json(field_m()));
                return j;
            };
        });
    }
    {
        auto* c = leaf(quad, "split", "Decomposition of a rational prime");
        add_m(c);
        c->add_option("--q", q_text, "Prime")->required();
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                Json j{{"schema_version", kSchemaVersion}, {"m", f.m()}};
                j.update(to_json(split_prime(f, read_integer(q_text, "--q"))));
                return j;
            };
        });
    }
    {
        auto* c = leaf(quad, "factor", "Prime factorization of an ideal");
        add_m(c);
        c->add_option("--ideal", ideal_text, "Ideal as \"(g1, g2, ...)\" or ideal JSON")->required();
        c->add_flag("--verify", verify, "Re-multiply the factors and check primality");
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                auto x = read_ideal(f, ideal_text);
                if (x.is_zero()) throw precondition_error("the zero ideal has no factorization");
                auto fs = factor_ideal(x);
                Json j{{"schema_version", kSchemaVersion}, {"m", f.m()}, {"ideal", ideal_entry(x)}, {"factors", to_json(fs)}};
                if (verify) j["verification"] = verification(x, fs);
                return j;
            };
        });
    }
    {
        auto* c = leaf(quad, "ideal", "Ideal arithmetic");
        add_m(c);
        c->add_option("--op", ideal_op, "product, sum, quotient, conj, power or norm")
            ->required()
            ->check(CLI::IsMember({"product", "sum", "quotient", "conj", "power", "norm"}));
        c->add_option("--a", ideal_text, "First ideal")->required();
        c->add_option("--b", other_text, "Second ideal (product, sum, quotient: a / b)");
        c->add_option("--k", power_text, "Exponent for power");
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                auto a = read_ideal(f, ideal_text);
                Json j{{"schema_version", kSchemaVersion}, {"m", f.m()}, {"op", ideal_op}, {"a", ideal_entry(a)}};
                const bool binary = ideal_op == "product" || ideal_op == "sum" || ideal_op == "quotient";
                if (binary) {
                    if (other_text.empty()) throw input_error("--op " + ideal_op + " needs --b");
                    auto b = read_ideal(f, other_text);
                    j["b"] = ideal_entry(b);
                    if (ideal_op == "product") j["result"] = ideal_entry(ideal_product(a, b));
                    else if (ideal_op == "sum") j["result"] = ideal_entry(ideal_sum(a, b));
                    else {
                        if (b.is_zero()) throw precondition_error("division by the zero ideal");
                        auto q = ideal_quotient(a, b);
                        j["divides"] = q.has_value();
                        j["result"] = q ? ideal_entry(*q) : Json(nullptr);
                    }
                } else if (ideal_op == "conj") {
                    j["result"] = ideal_entry(ideal_conj(a));
                } else if (ideal_op == "power") {
                    const BigInt k = read_integer(power_text, "--k");
                    if (k < 0 || k > 10000) throw input_error("--k must lie in [0, 10000]");
                    j["k"] = k.convert_to<std::int64_t>();
                    j["result"] = ideal_entry(ideal_power(a, k.convert_to<unsigned>()));
                } else {
                    j["result"] = a.norm().str();
                }
                return j;
            };
        });
    }
    {
        auto* c = leaf(quad, "principal", "Whether an ideal is principal, with a generator");
        add_m(c);
        c->add_option("--ideal", ideal_text, "Ideal")->required();
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                auto x = read_ideal(f, ideal_text);
                auto g = principal_generator(x);
                return Json{{"schema_version", kSchemaVersion},
                            {"m", f.m()},
                            {"ideal", ideal_entry(x)},
                            {"principal", g.has_value()},
                            {"generator", g ? to_json(*g) : Json(nullptr)}};
            };
        });
    }
    {
        auto* c = leaf(quad, "minkowski", "Minkowski bound");
        add_m(c);
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                Json j{{"schema_version", kSchemaVersion}, {"m", f.m()}};
                j.update(to_json(minkowski_bound(f)));
                return j;
            };
        });
    }
    {
        auto* c = leaf(quad, "classgroup", "Class group: h, structure, representatives and table");
        add_m(c);
        c->add_flag("--verify", verify, "Recheck the group axioms on the composition table");
        c->callback([&] {
            action = [&] {
                auto g = class_group(field_m());
                Json j = to_json(g);
                if (verify) j["verification"] = verification(g);
                return j;
            };
        });
    }

    // ---- units
    std::string pell_text;
    {
        auto* c = app.add_subcommand("units", "Unit group of a quadratic ring");
        add_m(c);
        c->add_option("--pell", pell_text, "Also solve x^2 - m y^2 = N for N in +1, -1, +4, -4 (m > 1)");
        c->callback([&] {
            action = [&] {
                auto f = field_m();
                Json j = to_json(unit_group_report(f, decimal_digits_from_env()));
                if (!pell_text.empty()) {
                    const PellKind kind = read_pell_kind(pell_text);
                    auto s = pell_solve(BigInt(f.m()), kind);
                    j["pell"] = Json{{"rhs", to_string(kind)},
                                     {"solvable", s.has_value()},
                                     {"x", s ? Json(s->x.str()) : Json(nullptr)},
                                     {"y", s ? Json(s->y.str()) : Json(nullptr)}};
                }
                return j;
            };
        });
    }

    // ---- cyclo
    auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic fields Q(zeta_m)")->require_subcommand(1);
    std::string n_text, a_text;
    {
        auto* c = leaf(cyclo, "split", "Decomposition of a prime q in Q(zeta_m)");
        add_m(c);
        c->add_option("--q", q_text, "Prime")->required();
        c->callback([&] {
            action = [&] { return to_json(split_prime_cyclotomic(read_integer(m_text, "--m"), read_integer(q_text, "--q"))); };
        });
    }
    {
        auto* c = leaf(cyclo, "phi", "Degree phi(m) and the discriminant when m is an odd prime");
        add_m(c);
        c->callback([&] {
            action = [&] {
                auto d = cyclotomic_descriptor(read_integer(m_text, "--m"));
                return Json{{"schema_version", kSchemaVersion},
                            {"m", integer_json(d.m)},
                            {"phi_m", integer_json(d.degree)},
                            {"discriminant", d.prime_discriminant ? Json(d.prime_discriminant->str()) : Json(nullptr)}};
            };
        });
    }
    {
        auto* c = leaf(cyclo, "order", "Multiplicative order of a mod n");
        c->add_option("--a", a_text, "Residue")->required();
        c->add_option("--n", n_text, "Modulus")->required();
        c->callback([&] {
            action = [&] {
                const BigInt a = read_integer(a_text, "--a"), n = read_integer(n_text, "--n");
                return Json{{"schema_version", kSchemaVersion},
                            {"a", integer_json(a)},
                            {"n", integer_json(n)},
                            {"order", integer_json(multiplicative_order(a, n))}};
            };
        });
    }
    {
        auto* c = leaf(cyclo, "lists", "Known class-number-one lists");
        c->callback([&] {
            action = [&] {
                auto l = class_number_one_lists();
                return Json{{"schema_version", kSchemaVersion},
                            {"cyclotomic", std::vector<std::int64_t>(l.cyclotomic.begin(), l.cyclotomic.end())},
                            {"imaginary_quadratic", std::vector<std::int64_t>(l.imaginary_quadratic.begin(), l.imaginary_quadratic.end())}};
            };
        });
    }

    // ---- census
    std::string k_text;
    bool per_class = false, csv = false;
    {
        auto* c = app.add_subcommand("census", "Count ideals of norm <= k and compare with the limit");
        add_m(c);
        c->add_option("--k", k_text, "Cutoff, 100 <= k <= 10^7")->required();
        c->add_flag("--per-class", per_class, "Also count ideals in each class");
        c->add_flag("--csv", csv, "Print checkpoints k, Z(k), Z(k)/k as CSV instead");
        c->callback([&] {
            auto run_census = [&] {
                auto f = field_m();
                const std::int64_t k = read_int64(k_text, "--k");
                if (k < 100 || k > kMaxCensusCutoff) throw input_error("--k must lie in [100, 10^7]");
                return census_check(f, k, per_class);
            };
            if (csv) {
                raw_action = [&, run_census](std::ostream& os) {
                    const auto r = run_census();
                    const int digits = decimal_digits_from_env();
                    std::ostringstream buf;
                    buf << "k,Z_k,ratio\n";
                    for (const auto& cp : r.checkpoints) buf << cp.k << ',' << cp.count << ',' << to_decimal(cp.ratio, digits) << '\n';
                    os << buf.str();
                };
            } else {
                action = [&, run_census] { return to_json(run_census(), decimal_digits_from_env()); };
            }
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return bad_input;
    }

    try {
        if (raw_action) {
            std::ostringstream buf;
            raw_action(buf);
            out << buf.str();
            return ok;
        }
        if (!action) {
            err << app.help();
            return bad_input;
        }
        const Json j = action();
        if (format == "text") {
            std::ostringstream buf;
            write_text(buf, j, "");
            out << buf.str();
        } else {
            out << j.dump(2) << "\n";
        }
        return ok;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const precondition_error& e) {
        err << "precondition failed: " << e.what() << "\n";
        return precondition_failed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_failure;
    }
}

} // namespace quadrantal::cli
