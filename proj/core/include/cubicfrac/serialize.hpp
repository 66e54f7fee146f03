#pragma once

#include <nlohmann/json.hpp>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/cubic.hpp"
#include "cubicfrac/jacobi.hpp"
#include "cubicfrac/matrix.hpp"
#include "cubicfrac/periodic.hpp"
#include "cubicfrac/rational.hpp"

// JSON encodings. Rationals are "p/q" strings ("p" when integral), cubic
// numbers are {"d", "a0", "a1", "a2"}, fractions are
// {"a": [...], "b": [...], "preperiod": int, "period": int}.
namespace cubicfrac {

using json = nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const CubicNumber& x);
CubicNumber cubic_from_json(const json& j);

void to_json(json& j, const Enclosure& e);
void to_json(json& j, const Matrix3& m);
void to_json(json& j, const ConvergentTriple& t);

void to_json(json& j, const Bcf& f);
Bcf bcf_from_json(const json& j);

void to_json(json& j, const ExpansionStatus& s);
void to_json(json& j, const ExpansionStep& s);

// {"params": {...}, "checks": [{"n", "pass", "lhs", "rhs"}], "summary": {...}}
void to_json(json& j, const VerificationReport& r);

}  // namespace cubicfrac
