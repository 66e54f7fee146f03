#include "format.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace cubicfrac::cli {
namespace {

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_table(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
  }
  return true;
}

// Identifying columns first, then "name@k" columns by k, then the rest.
bool column_before(const std::string& a, const std::string& b) {
  static const std::vector<std::string> leading{"scheme", "status", "preperiod", "period", "depth", "n"};
  auto rank = [](const std::string& c) {
    const auto it = std::find(leading.begin(), leading.end(), c);
    return it == leading.end() ? leading.size() : static_cast<std::size_t>(it - leading.begin());
  };
  auto suffix = [](const std::string& c) {
    const auto at = c.find('@');
    return at == std::string::npos ? -1L : std::stol(c.substr(at + 1));
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (suffix(a) != suffix(b)) return suffix(a) < suffix(b);
  return a < b;
}

void write_table(const std::string& path, const json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) {
        columns.push_back(it.key());
      }
    }
  }
  std::stable_sort(columns.begin(), columns.end(), column_before);
  out << "\n# " << path << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "\t" : "");
      const auto it = row.find(columns[i]);
      out << (it == row.end() ? "-" : (is_scalar(*it) ? cell(*it) : it->dump()));
    }
    out << "\n";
  }
}

void write_node(const std::string& path, const json& v, std::ostream& out,
                std::vector<std::pair<std::string, const json*>>& tables) {
  if (is_scalar(v)) {
    out << path << "\t" << cell(v) << "\n";
  } else if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      write_node(path.empty() ? it.key() : path + "." + it.key(), *it, out, tables);
    }
  } else if (is_table(v)) {
    tables.emplace_back(path, &v);
  } else {
    out << path;
    for (const auto& item : v) out << "\t" << (is_scalar(item) ? cell(item) : item.dump());
    out << "\n";
  }
}

}  // namespace

std::string scientific(const Rational& r, int digits) {
  if (r.is_zero()) return "0";
  const mpf_class f(r.raw(), 128);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  mant.resize(static_cast<std::size_t>(digits), '0');
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp) - 1;
  out += (e < 0 ? "e-" : "e+");
  const std::string mag = std::to_string(e < 0 ? -e : e);
  out += (mag.size() < 2 ? "0" : "") + mag;
  return out;
}

void write_json(const json& record, std::ostream& out) { out << record.dump(2) << "\n"; }

void write_tsv(const json& record, std::ostream& out) {
  std::vector<std::pair<std::string, const json*>> tables;
  write_node("", record, out, tables);
  for (const auto& [path, rows] : tables) write_table(path, *rows, out);
}

}  // namespace cubicfrac::cli
