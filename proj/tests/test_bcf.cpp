#include <doctest.h>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/error.hpp"
#include "cubicfrac/periodic.hpp"
#include "cubicfrac/redei.hpp"
#include "support.hpp"

using namespace cubicfrac;
using namespace testing_support;

namespace {

struct RandomFraction {
  std::vector<oracle::Q> a, b;
  Bcf bcf;
};

RandomFraction random_integer_fraction(oracle::Random& rng, std::size_t len) {
  RandomFraction f;
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < len; ++i) {
    f.a.emplace_back(rng.integer(-9, 9));
    f.b.emplace_back(rng.integer(-9, 9));
    a.push_back(R(f.a.back()));
    b.push_back(R(f.b.back()));
  }
  f.bcf = Bcf::finite(a, b);
  return f;
}

RandomFraction random_rational_fraction(oracle::Random& rng, std::size_t len) {
  RandomFraction f;
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < len; ++i) {
    f.a.push_back(rng.nonzero_rational(9));
    f.b.push_back(rng.nonzero_rational(9));
    a.push_back(R(f.a.back()));
    b.push_back(R(f.b.back()));
  }
  f.bcf = Bcf::finite(a, b);
  return f;
}

Matrix3 to_matrix(const oracle::Mat& m) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = R(m[i][j]);
  }
  return out;
}

}  // namespace

TEST_SUITE("bcf structure") {
  TEST_CASE("periodic index resolution") {
    const Bcf f = Bcf::periodic({R(1), R(2), R(3), R(4), R(5)}, {R(0), R(0), R(0), R(0), R(0)}, 2, 3);
    CHECK(f.a(0) == R(1));
    CHECK(f.a(4) == R(5));
    CHECK(f.a(5) == R(3));
    CHECK(f.a(6) == R(4));
    CHECK(f.a(100) == f.a(2 + (100 - 2) % 3));
    CHECK(f.resolvable(1000));
  }

  TEST_CASE("invalid shapes") {
    CHECK_THROWS_AS(Bcf::finite({R(1)}, {}), DomainError);
    CHECK_THROWS_AS(Bcf::periodic({R(1), R(2)}, {R(1), R(2)}, 1, 2), DomainError);
    CHECK_THROWS_AS(Bcf::periodic({R(1)}, {R(1)}, 1, 0), DomainError);
    const Bcf f = Bcf::finite({R(1), R(2)}, {R(0), R(1)});
    CHECK_FALSE(f.resolvable(2));
    CHECK_THROWS_AS(f.a(2), DomainError);
    CHECK_THROWS_AS(convergents(f, 2), DomainError);
  }

  TEST_CASE("with_prefix keeps the period") {
    const TheoremFraction t = build_theorem_bcf(5, 1);
    const std::array<Rational, 2> pa{R(7), R(8)};
    const std::array<Rational, 2> pb{R(1), R(2)};
    const Bcf g = t.fraction.with_prefix(pa, pb);
    CHECK(g.preperiod_len() == 4);
    CHECK(g.period_len() == 3);
    CHECK(g.a(0) == R(7));
    CHECK(g.a(2) == t.fraction.a(0));
    CHECK(g.a(50) == t.fraction.a(48));
  }
}

TEST_SUITE("convergents") {
  TEST_CASE("depth-0 convergent of the (d=4, z=2) fraction is (2, 0)") {
    const auto t = convergents(build_theorem_bcf(4, 2).fraction, 0);
    REQUIRE(t.size() == 1);
    CHECK(t[0].A / t[0].C == R(2));
    CHECK(t[0].B / t[0].C == R(0));
  }

  TEST_CASE("integer fraction of length 4 matches the first column of the product") {
    oracle::Random rng(3);
    for (int i = 0; i < 20; ++i) {
      const RandomFraction f = random_integer_fraction(rng, 4);
      const oracle::Mat m = oracle::step_product(f.a, f.b, 3);
      const auto t = convergents(f.bcf, 3).back();
      CHECK(Q(t.A) == m[0][0]);
      CHECK(Q(t.B) == m[1][0]);
      CHECK(Q(t.C) == m[2][0]);
      CHECK(t.index == 3);
    }
  }

  TEST_CASE("(d=2, z=1) convergent 5 equals the mu ratios from polynomial powers") {
    const auto t = convergents(build_theorem_bcf(2, 1).fraction, 5).back();
    const auto mu = oracle::mu_power(3, 2, 1, 6);
    CHECK(Q(t.A / t.C) == oracle::frac(mu[0], mu[2]));
    CHECK(Q(t.B / t.C) == oracle::frac(mu[1], mu[2]));
  }

  TEST_CASE("matrix product for n = 0 is the single step matrix") {
    const Bcf f = Bcf::finite({R(2)}, {R(0)});
    const Matrix3 m = matrix_product(f, 0);
    CHECK(m == Matrix3::from_rows({R(2), R(1), R(0), R(0), R(0), R(1), R(1), R(0), R(0)}));
  }

  TEST_CASE("matrix product with a = b = 1, n = 2 matches direct multiplication") {
    const Bcf f = Bcf::finite({R(1), R(1), R(1)}, {R(1), R(1), R(1)});
    const std::vector<oracle::Q> ones(3, oracle::Q(1));
    CHECK(matrix_product(f, 2) == to_matrix(oracle::step_product(ones, ones, 2)));
  }

  TEST_CASE("matrix columns equal recurrence triples on random fractions") {
    oracle::Random rng(17);
    for (int i = 0; i < 100; ++i) {
      const RandomFraction f = random_integer_fraction(rng, 13);
      const auto tr = convergents(f.bcf, 12);
      const auto ref = oracle::recurrence(f.a, f.b, 12);
      for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(Q(tr[n].A) == ref[n].A);
        CHECK(Q(tr[n].B) == ref[n].B);
        CHECK(Q(tr[n].C) == ref[n].C);
        const Matrix3 m = matrix_product(f.bcf, n);
        CHECK(m == to_matrix(oracle::step_product(f.a, f.b, n)));
        CHECK(m(0, 0) == tr[n].A);
        CHECK(m(1, 0) == tr[n].B);
        CHECK(m(2, 0) == tr[n].C);
        if (n >= 1) {
          CHECK(m(0, 1) == tr[n - 1].A);
          CHECK(m(2, 1) == tr[n - 1].C);
        }
        if (n >= 2) CHECK(m(1, 2) == tr[n - 2].B);
      }
    }
  }
}

TEST_SUITE("lemma sequences") {
  TEST_CASE("(d=5, z=1) seeds") {
    const TheoremFraction t = build_theorem_bcf(5, 1);
    const LemmaSequences s = lemma_sequences(t.forms_a(3), t.forms_b(3), 3);
    CHECK(s.s[0] == 1);
    CHECK(s.sp[0] == 0);
    CHECK(s.spp[0] == 1);
  }

  TEST_CASE("s_1 = d z^2 for the displayed forms") {
    for (long d : {2L, 3L, 5L, 7L}) {
      for (long z : {-2L, 1L, 2L, 3L}) {
        const TheoremFraction t = build_theorem_bcf(d, z);
        const LemmaSequences s = lemma_sequences(t.forms_a(2), t.forms_b(2), 2);
        CHECK(s.s[1] == d * z * z);
      }
    }
  }

  TEST_CASE("ratios equal the recurrence triples on random rational fractions") {
    oracle::Random rng(2024);
    for (int i = 0; i < 100; ++i) {
      const RandomFraction f = random_rational_fraction(rng, 16);
      const LemmaSequences s = lemma_sequences(f.bcf, 15);
      const auto ref = oracle::recurrence(f.a, f.b, 15);
      for (std::size_t n = 0; n <= 15; ++n) {
        CHECK(oracle::frac(s.s[n], s.t[n]) == ref[n].A);
        CHECK(oracle::frac(s.sp[n], s.tp[n]) == ref[n].B);
        CHECK(oracle::frac(s.spp[n], s.tpp[n]) == ref[n].C);
      }
    }
  }

  TEST_CASE("convergent ratio forms") {
    oracle::Random rng(99);
    for (int i = 0; i < 30; ++i) {
      const RandomFraction f = random_rational_fraction(rng, 10);
      const LemmaSequences s = lemma_sequences(f.bcf, 9);
      const auto tr = convergents(f.bcf, 9);
      const oracle::Z b0 = f.a[0].get_den();
      const oracle::Z d0 = f.b[0].get_den();
      const oracle::Z d1 = f.b[1].get_den();
      for (std::size_t n = 0; n <= 9; ++n) {
        if (tr[n].C.is_zero()) continue;
        const oracle::Q ac = Q(tr[n].A / tr[n].C);
        const oracle::Q bc = Q(tr[n].B / tr[n].C);
        if (n == 0) {
          CHECK(ac == oracle::frac(s.s[0], b0 * s.spp[0]));
        } else {
          CHECK(ac == oracle::frac(s.s[n], b0 * d1 * s.spp[n]));
        }
        CHECK(bc == oracle::frac(s.sp[n], d0 * s.spp[n]));
      }
    }
  }

  TEST_CASE("zero denominators are rejected") {
    const std::vector<QuotientForm> a{{1, 1}, {2, 0}};
    const std::vector<QuotientForm> b{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(lemma_sequences(a, b, 1), DomainError);
  }
}

TEST_SUITE("tail states") {
  TEST_CASE("(d=2, z=1) first tail state") {
    const Radicand d(2);
    const Bcf f = build_theorem_bcf(2, 1).fraction;
    const auto st = tail_states(f, {CubicNumber::cbrt_squared(d), CubicNumber::cbrt(d)}, 1);
    REQUIRE(st.size() == 2);
    CHECK(st[1].first == CubicNumber(d, 0, 0, R(1, 2)));
    CHECK(st[1].second == CubicNumber(d, 0, 1, R(-1, 2)));
  }

  TEST_CASE("rational value with b_0 = y is degenerate") {
    const Radicand d(2);
    const Bcf f = Bcf::finite({R(1), R(1)}, {R(3), R(1)});
    CHECK_THROWS_AS(tail_states(f, {CubicNumber(d, 2), CubicNumber(d, 3)}, 1), DomainError);
  }

  TEST_CASE("(d=5, z=1) states repeat with period 3 from index 2") {
    const Radicand d(5);
    const Bcf f = build_theorem_bcf(5, 1).fraction;
    const auto st = tail_states(f, {CubicNumber::cbrt_squared(d), CubicNumber::cbrt(d)}, 20);
    for (std::size_t k = 2; k + 3 <= 20; ++k) CHECK(st[k] == st[k + 3]);
    CHECK_FALSE(st[2] == st[3]);
  }
}

TEST_SUITE("fixed points and characteristic polynomials") {
  TEST_CASE("identity period fixes any candidate") {
    const Radicand d(3);
    CHECK(fixed_point_check(Matrix3::identity(), CubicNumber::cbrt(d), CubicNumber(d, 2)));
  }

  TEST_CASE("tail period of the (d=2, z=1) fraction fixes the exact tail state") {
    const Radicand d(2);
    const Bcf f = build_theorem_bcf(2, 1).fraction;
    const auto st = tail_states(f, {CubicNumber::cbrt_squared(d), CubicNumber::cbrt(d)}, 2);
    const Matrix3 p = period_matrix(f);
    CHECK(fixed_point_check(p, st[2].first, st[2].second));
    CHECK_FALSE(fixed_point_check(p, st[2].first + R(1), st[2].second));
  }

  TEST_CASE("purely periodic integer fraction: numeric limit is near the fixed point") {
    // [{2, 1, 3}, {1, 0, 2}] repeating; the fixed point lies in a cubic field.
    const Bcf f = Bcf::periodic({R(2), R(1), R(3)}, {R(1), R(0), R(2)}, 0, 3);
    const Matrix3 p = period_matrix(f);
    const auto [x, y] = evaluate_numeric(f, 60);
    const Rational xa = p(0, 0) * x + p(0, 1) * y + p(0, 2);
    const Rational den = p(2, 0) * x + p(2, 1) * y + p(2, 2);
    const Rational ya = p(1, 0) * x + p(1, 1) * y + p(1, 2);
    CHECK((xa / den - x).abs() < R(1, 1000000));
    CHECK((ya / den - y).abs() < R(1, 1000000));
  }

  TEST_CASE("identity has (x - 1)^3") {
    CHECK(characteristic_poly(Matrix3::identity()) == std::array<Rational, 4>{R(-1), R(3), R(-3), R(1)});
  }

  TEST_CASE("banded mu matrix has (x - z)^3 - d^2") {
    for (long d : {2L, 5L}) {
      for (long z : {-1L, 1L, 3L}) {
        const IntMatrix m = mu_base_matrix(3, d, z);
        Matrix3 r;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) r(i, j) = Rational(m[i][j]);
        }
        const std::array<Rational, 4> expected{R(-z * z * z - d * d), R(3 * z * z), R(-3 * z), R(1)};
        CHECK(characteristic_poly(r) == expected);
      }
    }
  }

  TEST_CASE("random matrices against the sampled determinant") {
    oracle::Random rng(8);
    for (int i = 0; i < 50; ++i) {
      oracle::Mat m;
      for (auto& row : m) {
        for (auto& v : row) v = rng.rational(9, 4);
      }
      const auto expected = oracle::charpoly_by_sampling(m);
      const auto got = characteristic_poly(to_matrix(m));
      for (int k = 0; k < 4; ++k) CHECK(Q(got[k]) == expected[k]);
    }
  }
}

TEST_SUITE("evaluate_numeric") {
  TEST_CASE("depth 0 gives (a0, b0)") {
    const Bcf f = Bcf::finite({R(3, 2)}, {R(-1, 5)});
    CHECK(evaluate_numeric(f, 0) == std::make_pair(R(3, 2), R(-1, 5)));
  }

  TEST_CASE("(d=4, z=2) depth 20 against the numeric oracle") {
    // First coordinate is within 1e-6; the second is 3.29e-6 and drops
    // below 1e-6 only from depth 23 on.
    const Bcf f = build_theorem_bcf(4, 2).fraction;
    const auto [x, y] = evaluate_numeric(f, 20);
    const oracle::Real ex = abs(oracle::to_real(Q(x)) - oracle::real_root(16, 3));
    const oracle::Real ey = abs(oracle::to_real(Q(y)) - oracle::real_root(4, 3));
    CHECK(ex < oracle::Real("1e-6"));
    CHECK(abs(ey - oracle::Real("3.2937131252548184e-6")) < oracle::Real("1e-15"));
    for (std::size_t depth = 23; depth <= 40; ++depth) {
      const auto [x2, y2] = evaluate_numeric(f, depth);
      CHECK(abs(oracle::to_real(Q(x2)) - oracle::real_root(16, 3)) < oracle::Real("1e-6"));
      CHECK(abs(oracle::to_real(Q(y2)) - oracle::real_root(4, 3)) < oracle::Real("1e-6"));
    }
  }

  TEST_CASE("finite fraction equals its backward fold") {
    oracle::Random rng(1234);
    for (int i = 0; i < 50; ++i) {
      const RandomFraction f = random_integer_fraction(rng, 6);
      oracle::Q x = f.a[5], y = f.b[5];
      bool ok = true;
      for (int k = 4; k >= 0 && ok; --k) {
        if (x == 0) {
          ok = false;
          break;
        }
        const oracle::Q nx = f.a[k] + y / x;
        const oracle::Q ny = f.b[k] + 1 / x;
        x = nx;
        y = ny;
      }
      const auto t = convergents(f.bcf, 5).back();
      if (!ok || t.C.is_zero()) continue;
      CHECK(evaluate_numeric(f.bcf, 5) == std::make_pair(R(x), R(y)));
    }
  }

  TEST_CASE("C_n = 0 is reported") {
    const Bcf f = Bcf::finite({R(0), R(0)}, {R(0), R(0)});
    CHECK_THROWS_AS(evaluate_numeric(f, 1), DomainError);
  }
}
