#include "cubicfrac/serialize.hpp"

#include "cubicfrac/error.hpp"

namespace cubicfrac {
namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key).get<Rational>();
}

std::vector<Rational> rational_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array");
  }
  std::vector<Rational> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<Rational>());
  return out;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw ParseError("rational must be a \"p/q\" string or an integer");
  }
}

void to_json(json& j, const CubicNumber& x) {
  j = json{{"d", x.radicand().value().get_str()},
           {"a0", x.coord(0)},
           {"a1", x.coord(1)},
           {"a2", x.coord(2)}};
}

CubicNumber cubic_from_json(const json& j) {
  if (!j.contains("d")) throw ParseError("missing field 'd'");
  const json& d = j.at("d");
  const BigInt radicand = d.is_string() ? parse_bigint(d.get<std::string>()) : BigInt(d.get<long>());
  return {Radicand(radicand), rational_field(j, "a0"), rational_field(j, "a1"),
          rational_field(j, "a2")};
}

void to_json(json& j, const Enclosure& e) { j = json{{"lo", e.lo}, {"hi", e.hi}}; }

void to_json(json& j, const Matrix3& m) {
  j = json::array();
  for (const auto& row : m.m) j.push_back(json{row[0], row[1], row[2]});
}

void to_json(json& j, const ConvergentTriple& t) {
  j = json{{"n", t.index}, {"A", t.A}, {"B", t.B}, {"C", t.C}};
}

void to_json(json& j, const Bcf& f) {
  j = json{{"a", f.a_seq()},
           {"b", f.b_seq()},
           {"preperiod", f.preperiod_len()},
           {"period", f.period_len()}};
}

Bcf bcf_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("fraction must be a JSON object");
  auto a = rational_list(j, "a");
  auto b = rational_list(j, "b");
  const std::size_t pre = j.value("preperiod", std::size_t{0});
  const std::size_t period = j.value("period", std::size_t{0});
  if (period == 0) {
    if (pre != 0 && pre != a.size()) throw ParseError("finite fraction with inconsistent preperiod");
    return Bcf::finite(std::move(a), std::move(b));
  }
  return Bcf::periodic(std::move(a), std::move(b), pre, period);
}

void to_json(json& j, const ExpansionStatus& s) {
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Periodic>) {
          j = json{{"kind", "periodic"}, {"preperiod", v.preperiod_len}, {"period", v.period_len}};
        } else if constexpr (std::is_same_v<V, Exhausted>) {
          j = json{{"kind", "exhausted"}, {"max_steps", v.max_steps}};
        } else {
          j = json{{"kind", "terminated"}, {"at_step", v.at_step}};
        }
      },
      s);
}

void to_json(json& j, const ExpansionStep& s) { j = json{s.a.get_str(), s.b.get_str()}; }

void to_json(json& j, const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"n", c.n}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (!c.defined) item["defined"] = false;
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  json summary{{"checked", r.checks.size()}, {"failures", r.failures()},
               {"undefined", r.undefined()}, {"passed", r.passed()}};
  if (auto f = r.first_failure()) summary["first_failure"] = *f;
  j = json{{"name", r.name},
           {"params", {{"d", r.d.get_str()}, {"z", r.z.get_str()}, {"n_max", r.n_max}}},
           {"checks", std::move(checks)},
           {"summary", std::move(summary)}};
}

}  // namespace cubicfrac
