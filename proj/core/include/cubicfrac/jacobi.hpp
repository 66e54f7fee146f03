#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/cubic.hpp"
#include "cubicfrac/rational.hpp"

namespace cubicfrac {

struct ExpansionStep {
  BigInt a;
  BigInt b;

  friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

struct Periodic {
  std::size_t preperiod_len;
  std::size_t period_len;
};
struct Exhausted {
  std::size_t max_steps;
};
struct Terminated {
  std::size_t at_step;
};
using ExpansionStatus = std::variant<Periodic, Exhausted, Terminated>;

// Output of the Jacobi algorithm. `states[n]` is the exact complete quotient
// (x_n, y_n); there is one more state than steps unless the expansion
// terminated. For a periodic expansion, states[preperiod] == states[preperiod + period]
// and steps holds exactly preperiod + period entries.
template <class T>
struct JacobiExpansion {
  std::vector<ExpansionStep> steps;
  std::vector<std::pair<T, T>> states;
  ExpansionStatus status;
};

// T is Rational or CubicNumber. Runs at most max_steps steps of
//   a_n = ⌊x_n⌋, b_n = ⌊y_n⌋, x_{n+1} = 1/(y_n - b_n), y_{n+1} = (x_n - a_n)/(y_n - b_n)
// and stops at the first exactly repeated state or when y_n - b_n = 0.
template <class T>
JacobiExpansion<T> jacobi_expand(const T& x, const T& y, std::size_t max_steps);

// Folds x_n = a_n + y_{n+1}/x_{n+1}, y_n = b_n + 1/x_{n+1} backwards over
// `prefix`, starting from the state that follows it.
template <class T>
std::pair<T, T> reconstruct(std::span<const ExpansionStep> prefix, const std::pair<T, T>& tail);

template <class T>
struct TStep {
  BigInt a;  // ⌊1/α⌋
  BigInt b;  // ⌊β/α⌋
  T alpha;
  T beta;
};

// One application of T(α, β) = (β/α - ⌊β/α⌋, 1/α - ⌊1/α⌋). Throws on α = 0.
template <class T>
TStep<T> t_step(const T& alpha, const T& beta);

// Quotients of iterated t_step from (1/x, y/x); stops early when α reaches 0.
template <class T>
std::vector<ExpansionStep> t_map_quotients(const T& x, const T& y, std::size_t steps);

// Integer Bcf carrying the expansion's quotients (periodic when detected).
Bcf to_bcf(std::span<const ExpansionStep> steps, const ExpansionStatus& status);

}  // namespace cubicfrac
