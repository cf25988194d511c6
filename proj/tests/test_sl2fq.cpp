#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2p/sl2fq.hpp"

using namespace sl2p;

TEST_CASE("lie classification") {
  PrimeField F(3);
  CHECK(classify_lie(F, Mat2{0, 1, 2, 0}) == LieKind::Elliptic);       // -det = -1 = 2, non-square
  CHECK(classify_lie(F, Mat2{0, 1, 1, 0}) == LieKind::SplitRegular);   // -det = 1, square
  CHECK(classify_lie(F, Mat2{0, 0, 0, 0}) == LieKind::Zero);
  CHECK(classify_lie(F, Mat2{0, 1, 0, 0}) == LieKind::Nilpotent);
  CHECK_THROWS_AS(classify_lie(F, Mat2{1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("elliptic enumeration counts and orbits") {
  struct Want {
    long long q, count, orbits, orbit_size;
  };
  for (auto w : {Want{3, 6, 1, 6}, Want{5, 40, 2, 20}, Want{7, 126, 3, 42}}) {
    PrimeField F(w.q);
    auto elliptic = enumerate_elliptic(F);
    CHECK(static_cast<long long>(elliptic.size()) == w.count);
    auto orbits = adjoint_orbits(F, elliptic);
    CHECK(static_cast<long long>(orbits.size()) == w.orbits);
    for (const auto& o : orbits) CHECK(static_cast<long long>(o.size()) == w.orbit_size);
  }
  // counts only for larger q
  for (long long q : {11LL, 13LL, 17LL, 19LL}) {
    PrimeField F(q);
    CHECK(static_cast<long long>(enumerate_elliptic(F).size()) == (q - 1) / 2 * (q - 1) * q);
  }
  CHECK_THROWS_AS(enumerate_elliptic(PrimeField(23)), std::invalid_argument);
}

TEST_CASE("elliptic psi sums equal q") {
  PrimeField F3(3);
  CHECK(elliptic_psi_sum(F3, Mat2{0, 1, 2, 0}).equals(Rational(3)));
  for (long long q : {3LL, 5LL, 7LL}) {
    PrimeField F(q);
    for (const auto& z : enumerate_elliptic(F)) CHECK(elliptic_psi_sum(F, z).equals(Rational(q)));
  }
  CHECK_THROWS_AS(elliptic_psi_sum(F3, Mat2{0, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("conjugacy classes") {
  PrimeField F3(3);
  auto d3 = conjugacy_classes(F3);
  CHECK(d3.group_order == 24);
  CHECK(d3.classes.size() == 7);

  PrimeField F5(5);
  CHECK(conjugacy_classes(F5).group_order == 120);

  PrimeField F7(7);
  auto d7 = conjugacy_classes(F7);
  long long total = 0;
  for (const auto& c : d7.classes) total += c.size;
  CHECK(total == 336);

  CHECK_THROWS_AS(conjugacy_classes(PrimeField(17)), std::invalid_argument);
}

TEST_CASE("cuspidal character table values") {
  CuspidalTable t5(5);
  CHECK(t5.chi(2, ClassLabel::MinusId).equals(Rational(4)));  // (-1)^i (q-1)
  CuspidalTable t7(7);
  CHECK(t7.chi(1, ClassLabel::UpperU1).equals(Rational(-1)));
  CuspidalTable t3(3);
  // chi_1(beta) = -(zeta + zeta^-1) with zeta of order 4, so 0
  CHECK(t3.chi(1, ClassLabel::BetaPow, 1).is_zero());
  CHECK(t3.chi(1, ClassLabel::Id).equals(Rational(2)));
  CHECK(t3.chi(1, ClassLabel::MinusU1).equals(Rational(1)));   // (-1)^(i+1), i = 1
  CHECK(t3.chi(2, ClassLabel::MinusUeps).equals(Rational(-1)));
  CHECK(t3.chi(1, ClassLabel::Split).is_zero());
  CHECK_THROWS_AS(t3.chi(0, ClassLabel::Id), std::invalid_argument);
  CHECK_THROWS_AS(t3.chi(4, ClassLabel::Id), std::invalid_argument);
}

TEST_CASE("chi symmetry chi_i = chi_(q+1-i)") {
  for (long long q : {3LL, 5LL, 7LL}) {
    CuspidalTable t(q);
    for (int i = 1; i <= q; ++i)
      for (const auto& cls : t.conjugacy().classes)
        CHECK((t.chi(i, cls.label, cls.beta_power) -
               t.chi(static_cast<int>(q + 1 - i), cls.label, cls.beta_power))
                  .is_zero());
  }
}

TEST_CASE("character inner products") {
  CuspidalTable t(5);
  CHECK(t.inner_product(1, 1) == Rational(1));
  CHECK(t.inner_product(3, 3) == Rational(2));  // i = (q+1)/2 splits in two
  CHECK(t.inner_product(1, 2) == Rational(0));
  CHECK(t.inner_product(1, 5) == Rational(1));  // chi_5 = chi_1
}

TEST_CASE("beta has order q+1 and torus classes are labeled") {
  for (long long q : {3LL, 5LL, 7LL, 11LL}) {
    CuspidalTable t(q);
    const auto& F = t.field();
    Mat2 x = t.beta();
    long long n = 1;
    while (!(x == Mat2{1, 0, 0, 1})) {
      x = mul(F, x, t.beta());
      ++n;
    }
    CHECK(n == q + 1);
    long long beta_classes = 0;
    for (const auto& c : t.conjugacy().classes)
      if (c.label == ClassLabel::BetaPow) ++beta_classes;
    CHECK(beta_classes == (q - 1) / 2);
  }
}

TEST_CASE("ramified pair sums equal 1") {
  for (long long q : {3LL, 5LL, 7LL}) {
    PrimeField F(q);
    for (long long u = 1; u < q; ++u)
      for (long long v = 1; v < q; ++v) CHECK(ramified_pair_sum(F, u, v).equals(Rational(1)));
  }
}

TEST_CASE("summed character data is independent of the torus generator") {
  for (long long q : {3LL, 5LL, 7LL}) {
    CuspidalTable base(q);
    const auto& F = base.field();
    // alternative generators: every primitive power of beta, plus any
    // order-(q+1) element found scanning from a shifted start
    std::vector<Mat2> alt;
    Mat2 bk = base.beta();
    for (long long k = 2; k <= q; ++k) {
      bk = mul(F, bk, base.beta());
      if (std::gcd(k, q + 1) == 1) alt.push_back(bk);
    }
    alt.push_back(conjugate(F, Mat2{1, 1, 0, 1}, base.beta()));  // a conjugate torus
    for (const auto& beta2 : alt) {
      CuspidalTable other(q, beta2);
      for (const auto& cls : base.conjugacy().classes) {
        CycloSum s1(q + 1), s2(q + 1);
        for (int i = 1; i <= q; ++i) {
          s1 += base.chi_at(i, cls.representative);
          s2 += other.chi_at(i, cls.representative);
        }
        CHECK((s1 - s2).is_zero());
      }
      // orthogonality totals agree as multisets: diagonal sums match
      Rational d1(0), d2(0);
      for (int i = 1; i <= q; ++i) {
        d1 += base.inner_product(i, i);
        d2 += other.inner_product(i, i);
      }
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("elliptic parametrization covers the elliptic set") {
  for (long long q : {3LL, 5LL, 7LL}) {
    PrimeField F(q);
    std::set<Mat2> param;
    long long produced = 0;
    for (long long u = 1; u < q; ++u) {
      if (F.sgn(u) != -1) continue;
      for (long long a = 1; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
          param.insert(conjugate(F, Mat2{a, b, 0, 1}, Mat2{0, 1, u, 0}));
          ++produced;
        }
    }
    auto elliptic = enumerate_elliptic(F);
    CHECK(produced == static_cast<long long>(param.size()));  // injective
    CHECK(param == std::set<Mat2>(elliptic.begin(), elliptic.end()));
  }
}
