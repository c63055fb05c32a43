#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings of library values and reports
 *
 * Arbitrary-precision quantities are written as decimal strings and small
 * structural integers (class numbers, orders, ranks, 64-bit field
 * parameters) as JSON numbers. Objects keep insertion order so output
 * is byte-stable.
 */

#include "quadrantal/census.hpp"
#include "quadrantal/class_group.hpp"
#include "quadrantal/core.hpp"
#include "quadrantal/cyclotomic.hpp"
#include "quadrantal/ideal.hpp"
#include "quadrantal/number_field.hpp"
#include "quadrantal/polynomial.hpp"
#include "quadrantal/quadratic.hpp"
#include "quadrantal/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace quadrantal {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Polynomials

template <class T>
Json to_json(const Polynomial<T>& p)
{
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_string(c));
    return a;
}

/// Dense coefficient array, constant term first; entries are strings or integers.
inline RationalPolynomial rational_polynomial_from_json(const Json& j)
{
    if (!j.is_array()) throw input_error("polynomial JSON must be an array of coefficients");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (e.is_string()) c.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer()) c.emplace_back(e.get<std::int64_t>());
        else throw input_error("polynomial coefficients must be strings or integers");
    }
    return RationalPolynomial(std::move(c));
}

inline IntegerPolynomial integer_polynomial_from_json(const Json& j)
{
    auto p = to_integer(rational_polynomial_from_json(j));
    if (!p) throw input_error("polynomial must have integer coefficients");
    return *p;
}

// ---------------------------------------------------------------------------
// Number fields

inline Json to_json(const NumberField& k) { return Json{{"minpoly", to_json(k.minimal_polynomial())}}; }

inline NumberField number_field_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("minpoly")) throw input_error("field JSON needs a \"minpoly\" array");
    return NumberField(integer_polynomial_from_json(j.at("minpoly")));
}

inline Json to_json(const FieldElement& a)
{
    Json coords = Json::array();
    for (const auto& c : a.coordinates()) coords.push_back(to_string(c));
    return Json{{"coords", coords}};
}

inline FieldElement field_element_from_json(const NumberField& k, const Json& j)
{
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
        throw input_error("element JSON needs a \"coords\" array");
    std::vector<Rational> c;
    for (const auto& e : j.at("coords")) {
        if (!e.is_string()) throw input_error("element coordinates must be strings");
        c.push_back(parse_rational(e.get<std::string>()));
    }
    if (c.size() != k.degree()) throw input_error("element needs " + std::to_string(k.degree()) + " coordinates");
    return FieldElement::from_coordinates(k, c);
}

// ---------------------------------------------------------------------------
// Quadratic rings

inline Json to_json(const QuadraticField& f)
{
    return Json{{"m", f.m()},
                {"d", f.discriminant()},
                {"omega", f.is_half() ? "(1 + sqrt(m))/2" : "sqrt(m)"},
                {"signature", Json::array({f.signature().first, f.signature().second})}};
}

inline Json to_json(const QuadInt& x)
{
    return Json{{"a", x.a().str()}, {"b", x.b().str()}, {"text", to_text(x)}};
}

inline Json to_json(const QuadIdeal& x)
{
    return Json{{"m", x.field().m()}, {"a", x.a().str()}, {"b", x.b().str()}, {"c", x.c().str()}};
}

inline QuadIdeal quad_ideal_from_json(const Json& j)
{
    if (!j.is_object()) throw input_error("ideal JSON must be an object");
    for (const char* key : {"m", "a", "b", "c"})
        if (!j.contains(key)) throw input_error(std::string("ideal JSON needs \"") + key + "\"");
    if (!j.at("m").is_number_integer()) throw input_error("ideal JSON \"m\" must be an integer");
    auto big = [&](const char* key) {
        if (!j.at(key).is_string()) throw input_error(std::string("ideal JSON \"") + key + "\" must be a string");
        return parse_integer(j.at(key).get<std::string>());
    };
    QuadraticField f(j.at("m").get<std::int64_t>());
    return QuadIdeal::from_standard(f, big("a"), big("b"), big("c"));
}

inline Json ideal_entry(const QuadIdeal& x)
{
    Json j = to_json(x);
    j["norm"] = x.norm().str();
    j["text"] = to_text(x);
    return j;
}

inline Json to_json(const SplittingReport& r)
{
    Json factors = Json::array();
    for (const auto& pf : r.factors) factors.push_back(Json{{"ideal", ideal_entry(pf.prime)}, {"multiplicity", pf.exponent}});
    return Json{{"schema_version", kSchemaVersion}, {"q", r.q.str()}, {"type", to_string(r.type)},
                {"e", r.e}, {"f", r.f}, {"g", r.g}, {"factors", factors}};
}

inline Json to_json(const std::vector<PrimeFactor>& fs)
{
    Json a = Json::array();
    for (const auto& pf : fs) a.push_back(Json{{"ideal", ideal_entry(pf.prime)}, {"multiplicity", pf.exponent}});
    return a;
}

inline Json to_json(const MinkowskiBound& b)
{
    return Json{{"exact", b.exact}, {"decimal", b.decimal}, {"norm_limit", b.norm_limit.str()}};
}

inline Json to_json(const ClassGroupReport& g)
{
    Json reps = Json::array();
    for (const auto& r : g.representatives) reps.push_back(ideal_entry(r));
    Json table = Json::array();
    for (const auto& row : g.table) table.push_back(row);
    return Json{{"schema_version", kSchemaVersion},
                {"m", g.field.m()},
                {"d", g.field.discriminant()},
                {"minkowski_bound", to_json(g.bound)},
                {"h", g.h()},
                {"structure", g.structure},
                {"cyclic", g.is_cyclic()},
                {"representatives", reps},
                {"table", table},
                {"inverse", g.inverse}};
}

inline Json to_json(const UnitGroupReport& r)
{
    Json j{{"schema_version", kSchemaVersion},
           {"m", r.field.m()},
           {"w", r.torsion_order},
           {"torsion_generator", to_json(r.torsion_generator)},
           {"rank", r.rank}};
    j["fundamental_unit"] = r.fundamental_unit ? to_json(*r.fundamental_unit) : Json(nullptr);
    if (r.fundamental_unit) j["fundamental_unit_norm"] = quad_norm(*r.fundamental_unit).str();
    j["regulator"] = r.regulator_text();
    j["precision_digits"] = r.precision_digits;
    return j;
}

inline std::string to_string(PellKind k)
{
    switch (k) {
    case PellKind::plus_one: return "+1";
    case PellKind::minus_one: return "-1";
    case PellKind::plus_four: return "+4";
    case PellKind::minus_four: return "-4";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Cyclotomic fields and the census

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline Json integer_json(const BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return Json(x.convert_to<std::int64_t>());
    return Json(x.str());
}

inline Json to_json(const CycloSplitting& s)
{
    Json labels = Json::array();
    for (auto c : s.labels) labels.push_back(to_string(c));
    Json j{{"schema_version", kSchemaVersion},
           {"m", integer_json(s.m)},
           {"q", integer_json(s.q)},
           {"k", s.k},
           {"n", integer_json(s.n)},
           {"e", integer_json(s.e)},
           {"f", integer_json(s.f)},
           {"g", integer_json(s.g)},
           {"phi_m", integer_json(s.phi_m)},
           {"classification", to_string(s.classification)},
           {"labels", labels}};
    if (!s.notes.empty()) j["notes"] = s.notes;
    return j;
}

inline Json to_json(const CensusResult& r, int digits)
{
    Json j{{"schema_version", kSchemaVersion},
           {"m", r.field.m()},
           {"k", r.k},
           {"Z_k", std::to_string(r.z_k)},
           {"h", r.h},
           {"sigma_theoretical", to_decimal(r.sigma, digits)},
           {"sigma_h", to_decimal(r.sigma * Real(r.h), digits)},
           {"empirical", to_decimal(r.empirical, digits)},
           {"deviation", to_decimal(r.deviation, digits)},
           {"normalized_deviation", to_decimal(r.normalized_deviation, digits)}};
    if (r.per_class) {
        Json classes = Json::array();
        for (std::size_t c = 0; c < r.per_class->size(); ++c)
            classes.push_back(Json{{"class", c},
                                   {"Z_C", std::to_string((*r.per_class)[c])},
                                   {"empirical", to_decimal(Real((*r.per_class)[c]) / Real(r.k), digits)},
                                   {"normalized_deviation", to_decimal(r.per_class_normalized_deviation[c], digits)}});
        j["per_class"] = classes;
        const auto worst = std::max_element(r.per_class_normalized_deviation.begin(), r.per_class_normalized_deviation.end());
        j["per_class_max_normalized_deviation"] = to_decimal(*worst, digits);
    }
    Json cps = Json::array();
    for (const auto& cp : r.checkpoints)
        cps.push_back(Json{{"k", cp.k}, {"Z_k", std::to_string(cp.count)}, {"ratio", to_decimal(cp.ratio, digits)}});
    j["checkpoints"] = cps;
    return j;
}

} // namespace quadrantal
