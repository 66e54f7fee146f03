#pragma once

#include <ostream>
#include <string>

#include "cubicfrac/rational.hpp"
#include "cubicfrac/serialize.hpp"

namespace cubicfrac::cli {

// "1.234e-07" style rendering of a nonnegative rational, exact in exponent.
std::string scientific(const Rational& r, int digits = 4);

void write_json(const json& record, std::ostream& out);

// Scalars become "key<TAB>value" lines, scalar arrays one line, arrays of
// objects a table with a header row.
void write_tsv(const json& record, std::ostream& out);

}  // namespace cubicfrac::cli
