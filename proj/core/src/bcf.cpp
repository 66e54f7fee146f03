#include "cubicfrac/bcf.hpp"

#include <string>

#include "cubicfrac/error.hpp"

namespace cubicfrac {

Bcf Bcf::finite(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw DomainError("partial quotient sequences differ in length");
  Bcf f;
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

Bcf Bcf::periodic(std::vector<Rational> a, std::vector<Rational> b, std::size_t preperiod_len,
                  std::size_t period_len) {
  if (period_len == 0) throw DomainError("periodic fraction needs a period length >= 1");
  if (a.size() != b.size() || a.size() != preperiod_len + period_len) {
    throw DomainError("periodic fraction must store preperiod + period quotient pairs");
  }
  Bcf f = finite(std::move(a), std::move(b));
  f.preperiod_ = preperiod_len;
  f.period_ = period_len;
  return f;
}

std::size_t Bcf::resolve(std::size_t n) const {
  if (n < a_.size() && (period_ == 0 || n < preperiod_ + period_)) return n;
  if (period_ == 0) {
    throw DomainError("index " + std::to_string(n) + " beyond finite fraction of length " +
                      std::to_string(a_.size()));
  }
  return preperiod_ + (n - preperiod_) % period_;
}

Bcf Bcf::with_prefix(std::span<const Rational> a, std::span<const Rational> b) const {
  if (a.size() != b.size()) throw DomainError("prefix sequences differ in length");
  std::vector<Rational> na(a.begin(), a.end());
  std::vector<Rational> nb(b.begin(), b.end());
  na.insert(na.end(), a_.begin(), a_.end());
  nb.insert(nb.end(), b_.begin(), b_.end());
  if (period_ == 0) return finite(std::move(na), std::move(nb));
  return periodic(std::move(na), std::move(nb), preperiod_ + a.size(), period_);
}

std::vector<ConvergentTriple> convergents(const Bcf& f, std::size_t n) {
  if (!f.resolvable(n)) throw DomainError("fraction has fewer than n+1 partial quotients");
  std::vector<ConvergentTriple> out;
  out.reserve(n + 1);
  // Columns of the first step matrix fix the seeds at indices -1 and -2.
  ConvergentTriple m2{0, 1, 0, 0};
  ConvergentTriple m1{1, 0, 0, 0};
  ConvergentTriple cur{f.a(0), f.b(0), 1, 0};
  out.push_back(cur);
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational& a = f.a(k);
    const Rational& b = f.b(k);
    ConvergentTriple next{a * cur.A + b * m1.A + m2.A, a * cur.B + b * m1.B + m2.B,
                          a * cur.C + b * m1.C + m2.C, k};
    m2 = std::move(m1);
    m1 = std::move(cur);
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

Matrix3 matrix_product(const Bcf& f, std::size_t n) {
  if (!f.resolvable(n)) throw DomainError("fraction has fewer than n+1 partial quotients");
  Matrix3 p = step_matrix(f.a(0), f.b(0));
  for (std::size_t k = 1; k <= n; ++k) p = p * step_matrix(f.a(k), f.b(k));
  return p;
}

Matrix3 period_matrix(const Bcf& f) {
  if (!f.is_periodic()) throw DomainError("fraction is not periodic");
  Matrix3 p = Matrix3::identity();
  for (std::size_t k = 0; k < f.period_len(); ++k) {
    const std::size_t i = f.preperiod_len() + k;
    p = p * step_matrix(f.a(i), f.b(i));
  }
  return p;
}

LemmaSequences lemma_sequences(std::span<const QuotientForm> first,
                               std::span<const QuotientForm> second, std::size_t n) {
  if (first.size() <= n || second.size() <= n) {
    throw DomainError("lemma sequences need quotient forms for indices 0..n");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (first[i].den == 0 || second[i].den == 0) {
      throw DomainError("zero denominator in partial quotient " + std::to_string(i));
    }
  }
  // a_i/b_i and c_i/d_i in the naming of the recurrences below.
  auto a = [&](std::size_t i) -> const BigInt& { return first[i].num; };
  auto b = [&](std::size_t i) -> const BigInt& { return first[i].den; };
  auto c = [&](std::size_t i) -> const BigInt& { return second[i].num; };
  auto d = [&](std::size_t i) -> const BigInt& { return second[i].den; };

  LemmaSequences r;
  r.s.push_back(a(0));
  r.sp.push_back(c(0));
  r.spp.push_back(1);
  r.t.push_back(b(0));
  r.tp.push_back(d(0));
  r.tpp.push_back(1);
  if (n >= 1) {
    r.s.push_back(a(0) * a(1) * d(1) + b(0) * b(1) * c(1));
    r.sp.push_back(a(1) * c(0) + b(1) * d(0));
    r.spp.push_back(a(1));
    r.t.push_back(r.t[0] * b(1) * d(1));
    r.tp.push_back(r.tp[0] * b(1));
    r.tpp.push_back(b(1));
  }
  if (n >= 2) {
    r.s.push_back(a(2) * d(2) * r.s[1] + b(2) * b(1) * c(2) * d(1) * r.s[0] +
                  b(2) * b(1) * b(0) * d(2) * d(1));
    r.sp.push_back(b(1) * b(2) * c(0) * c(2) + a(1) * a(2) * c(0) * d(2) + a(2) * b(1) * d(0) * d(2));
    r.spp.push_back(b(1) * b(2) * c(2) + a(1) * a(2) * d(2));
  }
  for (std::size_t k = 2; k <= n; ++k) {
    r.t.push_back(r.t[k - 1] * b(k) * d(k));
    r.tp.push_back(r.tp[k - 1] * b(k) * d(k));
    r.tpp.push_back(r.tpp[k - 1] * b(k) * d(k));
  }
  for (std::size_t k = 3; k <= n; ++k) {
    const BigInt first_coef = a(k) * d(k);
    const BigInt second_coef = b(k) * b(k - 1) * c(k) * d(k - 1);
    const BigInt shared = b(k) * b(k - 1) * d(k) * d(k - 1);
    r.s.push_back(first_coef * r.s[k - 1] + second_coef * r.s[k - 2] +
                  shared * b(k - 2) * d(k - 2) * r.s[k - 3]);
    // t'_1/t'_0 = t''_1/t''_0 = b_1 (no d_1 factor), which matters at k = 3.
    const BigInt third = k == 3 ? BigInt(shared * b(1)) : BigInt(shared * b(k - 2) * d(k - 2));
    r.sp.push_back(first_coef * r.sp[k - 1] + second_coef * r.sp[k - 2] + third * r.sp[k - 3]);
    r.spp.push_back(first_coef * r.spp[k - 1] + second_coef * r.spp[k - 2] + third * r.spp[k - 3]);
  }
  return r;
}

LemmaSequences lemma_sequences(const Bcf& f, std::size_t n) {
  if (!f.resolvable(n)) throw DomainError("fraction has fewer than n+1 partial quotients");
  std::vector<QuotientForm> first, second;
  for (std::size_t i = 0; i <= n; ++i) {
    first.push_back({f.a(i).num(), f.a(i).den()});
    second.push_back({f.b(i).num(), f.b(i).den()});
  }
  return lemma_sequences(first, second, n);
}

std::vector<CubicPair> tail_states(const Bcf& f, const CubicPair& value, std::size_t n) {
  if (!(value.first.radicand() == value.second.radicand())) {
    throw DomainError("value pair has mismatched radicands");
  }
  std::vector<CubicPair> out{value};
  out.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [x, y] = out.back();
    const CubicNumber dy = y - f.b(k);
    if (dy.is_zero()) {
      throw DomainError("y_" + std::to_string(k) + " - b_" + std::to_string(k) +
                        " = 0: the fraction does not represent the pair");
    }
    CubicNumber next_x = dy.inverse();
    CubicNumber next_y = (x - f.a(k)) * next_x;
    out.emplace_back(std::move(next_x), std::move(next_y));
  }
  return out;
}

bool fixed_point_check(const Matrix3& p, const CubicNumber& alpha, const CubicNumber& beta) {
  auto row = [&](int r) { return alpha * p(r, 0) + beta * p(r, 1) + p(r, 2); };
  const CubicNumber den = row(2);
  if (den.is_zero()) throw DomainError("zero denominator in fixed-point identity");
  return alpha * den == row(0) && beta * den == row(1);
}

std::array<Rational, 4> characteristic_poly(const Matrix3& m) {
  const Rational minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                          m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  return {-m.determinant(), minors, -m.trace(), Rational(1)};
}

std::pair<Rational, Rational> evaluate_numeric(const Bcf& f, std::size_t depth) {
  const ConvergentTriple t = convergents(f, depth).back();
  if (t.C.is_zero()) throw DomainError("C_" + std::to_string(depth) + " = 0");
  return {t.A / t.C, t.B / t.C};
}

}  // namespace cubicfrac
