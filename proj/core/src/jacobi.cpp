#include "cubicfrac/jacobi.hpp"

#include <unordered_map>

#include "cubicfrac/error.hpp"

namespace cubicfrac {
namespace {

// Floor and hashing per scalar type; the cubic variant keeps one δ refiner
// alive for the whole computation.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  explicit ScalarOps(const Rational&) {}
  BigInt floor(const Rational& v) { return v.floor(); }
  static std::size_t hash(const Rational& v) { return hash_rational(v); }
  static void check_pair(const Rational&, const Rational&) {}
};

template <>
struct ScalarOps<CubicNumber> {
  explicit ScalarOps(const CubicNumber& v) : refiner(v.radicand()) {}
  BigInt floor(const CubicNumber& v) { return cn_floor(v, refiner); }
  static std::size_t hash(const CubicNumber& v) { return hash_cubic(v); }
  static void check_pair(const CubicNumber& x, const CubicNumber& y) {
    if (!(x.radicand() == y.radicand())) {
      throw DomainError("mixed radicands " + x.radicand().value().get_str() + " and " +
                        y.radicand().value().get_str());
    }
  }
  DeltaRefiner refiner;
};

}  // namespace

template <class T>
JacobiExpansion<T> jacobi_expand(const T& x, const T& y, std::size_t max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  ScalarOps<T>::check_pair(x, y);
  ScalarOps<T> ops(x);

  JacobiExpansion<T> out{{}, {{x, y}}, Exhausted{max_steps}};
  // Buckets of state indices keyed by the hash of the exact state.
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  auto state_hash = [](const std::pair<T, T>& s) {
    return hash_combine(ScalarOps<T>::hash(s.first), ScalarOps<T>::hash(s.second));
  };
  seen[state_hash(out.states[0])].push_back(0);

  for (std::size_t n = 0; n < max_steps; ++n) {
    const auto& [xn, yn] = out.states[n];
    BigInt a = ops.floor(xn);
    BigInt b = ops.floor(yn);
    T frac_y = yn - Rational(b);
    T frac_x = xn - Rational(a);
    out.steps.push_back({std::move(a), std::move(b)});
    if (frac_y.is_zero()) {
      out.status = Terminated{n};
      return out;
    }
    T next_x = frac_y.inverse();
    T next_y = frac_x * next_x;
    out.states.emplace_back(std::move(next_x), std::move(next_y));

    const std::size_t h = state_hash(out.states.back());
    auto& bucket = seen[h];
    for (std::size_t j : bucket) {
      if (out.states[j] == out.states.back()) {
        out.status = Periodic{j, n + 1 - j};
        return out;
      }
    }
    bucket.push_back(n + 1);
  }
  return out;
}

template <class T>
std::pair<T, T> reconstruct(std::span<const ExpansionStep> prefix, const std::pair<T, T>& tail) {
  ScalarOps<T>::check_pair(tail.first, tail.second);
  T x = tail.first;
  T y = tail.second;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    const T inv = x.inverse();
    T px = y * inv + Rational(it->a);
    T py = inv + Rational(it->b);
    x = std::move(px);
    y = std::move(py);
  }
  return {x, y};
}

template <class T>
TStep<T> t_step(const T& alpha, const T& beta) {
  ScalarOps<T>::check_pair(alpha, beta);
  if (alpha.is_zero()) throw DomainError("t_step requires alpha != 0");
  ScalarOps<T> ops(alpha);
  const T inv = alpha.inverse();
  const T ratio = beta * inv;
  BigInt a = ops.floor(inv);
  BigInt b = ops.floor(ratio);
  T next_alpha = ratio - Rational(b);
  T next_beta = inv - Rational(a);
  return {std::move(a), std::move(b), std::move(next_alpha), std::move(next_beta)};
}

template <class T>
std::vector<ExpansionStep> t_map_quotients(const T& x, const T& y, std::size_t steps) {
  ScalarOps<T>::check_pair(x, y);
  std::vector<ExpansionStep> out;
  T alpha = x.inverse();
  T beta = y * alpha;
  for (std::size_t i = 0; i < steps && !alpha.is_zero(); ++i) {
    TStep<T> s = t_step(alpha, beta);
    out.push_back({std::move(s.a), std::move(s.b)});
    alpha = std::move(s.alpha);
    beta = std::move(s.beta);
  }
  return out;
}

Bcf to_bcf(std::span<const ExpansionStep> steps, const ExpansionStatus& status) {
  std::vector<Rational> a, b;
  for (const auto& s : steps) {
    a.emplace_back(s.a);
    b.emplace_back(s.b);
  }
  if (const auto* p = std::get_if<Periodic>(&status)) {
    return Bcf::periodic(std::move(a), std::move(b), p->preperiod_len, p->period_len);
  }
  return Bcf::finite(std::move(a), std::move(b));
}

template JacobiExpansion<Rational> jacobi_expand(const Rational&, const Rational&, std::size_t);
template JacobiExpansion<CubicNumber> jacobi_expand(const CubicNumber&, const CubicNumber&,
                                                    std::size_t);
template std::pair<Rational, Rational> reconstruct(std::span<const ExpansionStep>,
                                                   const std::pair<Rational, Rational>&);
template std::pair<CubicNumber, CubicNumber> reconstruct(std::span<const ExpansionStep>,
                                                         const std::pair<CubicNumber, CubicNumber>&);
template TStep<Rational> t_step(const Rational&, const Rational&);
template TStep<CubicNumber> t_step(const CubicNumber&, const CubicNumber&);
template std::vector<ExpansionStep> t_map_quotients(const Rational&, const Rational&, std::size_t);
template std::vector<ExpansionStep> t_map_quotients(const CubicNumber&, const CubicNumber&,
                                                    std::size_t);

}  // namespace cubicfrac
