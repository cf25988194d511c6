#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2p/projectors.hpp"

using namespace sl2p;

namespace {
RegSSClass split_top_m(int m) { return RegSSClass::split_top(HalfInt::whole(m)); }
RegSSClass split_minus_m(int m) { return RegSSClass::split_minus(HalfInt::whole(m)); }
const HalfInt d0 = HalfInt::whole(0);
const HalfInt dhalf = HalfInt::half(1);
const HalfInt d1 = HalfInt::whole(1);
}  // namespace

TEST_CASE("residue characters") {
  // (Z/5)^x is cyclic of order 4 with generator 2
  ResidueCharacter chi(5, 1, 1);
  CHECK(chi.group_order() == 4);
  CHECK(chi.generator() == 2);
  CHECK(chi.regular());
  CHECK(chi.conductor_exact());
  CHECK(chi.chi_exponent(2) == 1);
  CHECK(chi.chi_exponent(4) == 2);
  // sgn is the exponent n/2 character; not regular
  CHECK_FALSE(ResidueCharacter(5, 1, 2).regular());
  // conductor drops when p | e at f >= 2
  CHECK_FALSE(ResidueCharacter(5, 2, 5).conductor_exact());
  CHECK(ResidueCharacter(5, 2, 1).conductor_exact());
  CHECK(regular_pairs_with_conductor(3, 2).size() == 2);  // phi(9)=6: e in {1,2,4,5}, pairs {1,5},{2,4}
}

TEST_CASE("regular PS projector, conductor one") {
  // p=5, chi of order 4: alpha = 2 gives chi(2)+chi(2)^-1 = i - i = 0
  ResidueCharacter chi(5, 1, 1);
  CHECK(ps_regular(chi, RegSSClass::split_strongly_regular(2)).is_zero());
  // alpha = 4 is congruent to -1 mod 5, so the class carrying that residue is
  // minus-unipotent with some m >= 1; chi(4)+chi(4)^-1 = -2 and the norm
  // factor contributes q^m: (q+1)(-2)q = -60 at m = 1
  CHECK(ps_regular(chi, RegSSClass::split_minus(HalfInt::whole(1), 4)).equals(Rational(-60)));
  // a strongly regular class with a nonzero value needs q >= 7: at p=7,
  // g = 3, alpha = 2 = g^2 gives chi(2)+chi(2)^-1 = -1, so (q+1)(-1) = -8
  ResidueCharacter chi7(7, 1, 1);
  CHECK(chi7.generator() == 3);
  CHECK(ps_regular(chi7, RegSSClass::split_strongly_regular(2)).equals(Rational(-8)));
  // elliptic classes vanish
  CHECK(ps_regular(chi, RegSSClass::unramified_top(HalfInt::whole(1))).is_zero());
  CHECK(ps_regular(chi, RegSSClass::noncompact(1)).is_zero());
  // missing residue data
  CHECK_THROWS_AS(ps_regular(chi, RegSSClass::split_strongly_regular()), std::invalid_argument);
}

TEST_CASE("sgn PS projector") {
  CHECK(ps_sgn(3, split_top_m(1)) == Rational(12));    // (q+1) q^m
  CHECK(ps_sgn(3, split_minus_m(1)) == Rational(-12)); // sgn(-1) = -1 at p=3
  CHECK(ps_sgn(3, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(0));
  CHECK(ps_sgn(5, split_minus_m(1)) == Rational(30));  // sgn(-1) = +1 at p=5
  CHECK(ps_sgn(3, RegSSClass::noncompact(1)) == Rational(0));
}

TEST_CASE("unramified PS projector") {
  CHECK(ps_unramified(3, split_top_m(1)) == Rational(16));  // 2q q^m - (q-1)
  CHECK(ps_unramified(3, RegSSClass::unramified_top(HalfInt::whole(1))) == Rational(-2));
  CHECK(ps_unramified(3, RegSSClass::ramified_minus(HalfInt::half(3))) == Rational(-2));
  CHECK(ps_unramified(3, RegSSClass::split_strongly_regular()) == Rational(4));
  CHECK(ps_unramified(3, RegSSClass::noncompact(1)) == Rational(0));
}

TEST_CASE("PS depth sums") {
  CHECK(ps_depth_sum(3, d0, split_top_m(1)) == Rational(28));   // (q-1)((q+2)q - 1)
  CHECK(ps_depth_sum(3, d1, split_top_m(1)) == Rational(-72));  // m = d shell
  CHECK(ps_depth_sum(3, d1, split_top_m(2)) == Rational(432));
  CHECK(ps_depth_sum(3, d0, split_minus_m(1)) == Rational(4));  // (q-1)(q^m - 1)
  CHECK(ps_depth_sum(3, d0, RegSSClass::split_strongly_regular()) == Rational(0));
  CHECK(ps_depth_sum(3, d0, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(-2));
  CHECK(ps_depth_sum(3, d1, split_minus_m(1)) == Rational(0));
  CHECK(ps_depth_sum(3, d1, RegSSClass::unramified_top(HalfInt::whole(2))) == Rational(0));
  CHECK(ps_depth_sum(3, d0, RegSSClass::noncompact(1)) == Rational(0));
  CHECK_THROWS_AS(ps_depth_sum(3, dhalf, split_top_m(1)), std::invalid_argument);
}

TEST_CASE("PS depth sum oracle agrees with the closed form") {
  CHECK(ps_depth_sum_oracle(3, d1, split_top_m(2)) == Rational(432));
  CHECK(ps_depth_sum_oracle(3, d1, split_top_m(1)) == Rational(-72));
  CHECK(ps_depth_sum_oracle(5, d1, RegSSClass::split_strongly_regular()) == Rational(0));
  // F_3^x = {1,-1}: no strongly regular split classes at p = 3
  CHECK_THROWS_AS(ps_depth_sum_oracle(3, d1, RegSSClass::split_strongly_regular()),
                  std::invalid_argument);
  for (long long p : {3LL, 5LL}) {
    for (int d = 1; d <= 2; ++d) {
      std::vector<RegSSClass> cs;
      if (p >= 5) cs.push_back(RegSSClass::split_strongly_regular());
      for (int m = 1; m <= d + 2; ++m) {
        cs.push_back(split_top_m(m));
        cs.push_back(split_minus_m(m));
      }
      for (const auto& c : cs)
        CHECK(ps_depth_sum_oracle(p, HalfInt::whole(d), c) == ps_depth_sum(p, HalfInt::whole(d), c));
    }
  }
  // depth-zero cross check assembled from the three projector families:
  // regular pairs + sgn + unramified reproduce the ps-zero case values
  for (long long p : {3LL, 5LL, 7LL}) {
    std::vector<RegSSClass> cs = {split_top_m(1), split_top_m(2), split_minus_m(1)};
    for (long long u = 2; u + 1 < p; ++u) cs.push_back(RegSSClass::split_strongly_regular(u));
    for (const auto& c : cs) {
      auto pairs = regular_pairs_with_conductor(p, 1);
      CycloSum acc(p - 1);
      for (const auto& chi : pairs) acc += ps_regular(chi, c);
      Rational total = acc.as_rational() + ps_sgn(p, c) + ps_unramified(p, c);
      CHECK(total == ps_depth_sum(p, d0, c));
    }
  }
}

TEST_CASE("depth zero cuspidal values") {
  // split m=1, q=3: Theta_i = q^m - 1 = 2
  auto t = theta_cuspidal(3, split_top_m(1));
  CHECK(t.a == Rational(2));
  CHECK_FALSE(t.pair_sum);
  // ramified topologically unipotent: Theta_i = -1
  t = theta_cuspidal(3, RegSSClass::ramified_top(HalfInt::half(1)));
  CHECK(t.a == Rational(-1));
  // unramified: only the packet sum is pinned; (Theta_i + Theta_i')(y) = -2
  t = theta_cuspidal(3, RegSSClass::unramified_top(HalfInt::whole(1)));
  CHECK(t.pair_sum);
  CHECK(t.a == Rational(-2));

  CHECK(e_cusp_zero(3, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(-6));   // -(q-1)q
  CHECK(e_cusp_zero(3, RegSSClass::ramified_minus(HalfInt::half(1))) == Rational(2));  // (q-1)
  CHECK(e_cusp_zero(3, RegSSClass::unramified_strongly_regular()) == Rational(2));
  CHECK(e_cusp_zero(3, split_top_m(1)) == Rational(12));  // (q-1) q (q^m - 1)
}

TEST_CASE("e0 closed form and rebuild") {
  CHECK(e_zero(3, split_top_m(1)) == Rational(40));
  CHECK(e_zero(3, RegSSClass::unramified_top(HalfInt::whole(1))) == Rational(-8));
  CHECK(e_zero(3, RegSSClass::ramified_top(HalfInt::half(3))) == Rational(-8));
  CHECK(e_zero(3, split_minus_m(1)) == Rational(0));
  CHECK(e_zero(3, RegSSClass::split_strongly_regular()) == Rational(0));
  for (long long q : {3LL, 5LL, 7LL, 11LL})
    for (const auto& c : class_grid(HalfInt::whole(2))) CHECK(e_zero(q, c) == e_zero_rebuilt(q, c));
}

TEST_CASE("cuspidal depth sums, integral depth") {
  CHECK(cusp_integral(3, d1, split_top_m(2)) == Rational(288));
  CHECK(cusp_integral(3, d1, RegSSClass::unramified_top(HalfInt::whole(1))) == Rational(72));
  CHECK(cusp_integral(3, d1, RegSSClass::ramified_top(HalfInt::half(3))) == Rational(-144));
  CHECK(cusp_integral(3, d1, split_top_m(1)) == Rational(0));
  CHECK(cusp_integral(3, d1, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(0));
  CHECK(cusp_integral(3, d1, split_minus_m(3)) == Rational(0));
  CHECK_THROWS_AS(cusp_integral(3, dhalf, split_top_m(1)), std::invalid_argument);
}

TEST_CASE("depth sums, half-integral depth") {
  CHECK(e_half_integral(3, dhalf, split_top_m(1)) == Rational(32));
  CHECK(e_half_integral(3, dhalf, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(8));
  CHECK(e_half_integral(3, dhalf, RegSSClass::unramified_top(HalfInt::whole(1))) == Rational(-64));
  CHECK(e_half_integral(3, dhalf, RegSSClass::ramified_top(HalfInt::half(3))) == Rational(-64));
  CHECK(e_half_integral(3, dhalf, split_minus_m(2)) == Rational(0));
  CHECK_THROWS_AS(e_half_integral(3, d1, split_top_m(1)), std::invalid_argument);
}

TEST_CASE("depth dispatch") {
  CHECK(e_depth(3, d0, split_top_m(1)) == Rational(40));
  CHECK(e_depth(3, d1, split_top_m(2)) == Rational(720));  // 432 + 288
  CHECK(e_depth(3, dhalf, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(8));
}

TEST_CASE("sigma closed form") {
  CHECK(sigma(3, d0, split_top_m(1)) == Rational(40));
  CHECK(sigma(3, dhalf, split_top_m(1)) == Rational(72));
  CHECK(sigma(3, d1, RegSSClass::unramified_top(HalfInt::whole(2))) == Rational(-216));
  CHECK(sigma(3, d1, RegSSClass::ramified_top(HalfInt::half(3))) == Rational(-216));
  CHECK(sigma(3, d1, split_top_m(2)) == Rational(1080));
  // outside the domain
  CHECK(sigma(3, d1, split_top_m(1)) == Rational(0));
  CHECK(sigma(3, dhalf, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(0));
  CHECK(sigma(3, d1, RegSSClass::noncompact(1)) == Rational(0));
}

TEST_CASE("sigma equals the cumulative depth sums") {
  for (long long q : {3LL, 5LL, 7LL, 11LL}) {
    auto report = verify_sigma_induction(q, HalfInt::whole(2));
    CHECK(report.pass);
  }
  // the three shell cancellations
  CHECK(sigma_summed(3, dhalf, RegSSClass::ramified_top(HalfInt::half(1))) == Rational(0));
  CHECK(sigma_summed(3, d1, split_top_m(1)) == Rational(0));
  CHECK(sigma_summed(3, d1, RegSSClass::unramified_top(HalfInt::whole(1))) == Rational(0));
  // worked chain: 136 + 224 + 432 + 288 = 1080
  CHECK(sigma_summed(3, d1, split_top_m(2)) == Rational(1080));
}

TEST_CASE("homogeneity in m and d") {
  for (long long q : {3LL, 5LL}) {
    for (const auto& c : class_grid(HalfInt::whole(2))) {
      if (c.compact_partition() != CompactKind::TopUnipotent) continue;
      for (HalfInt d = d0; d + HalfInt::whole(1) <= HalfInt::whole(2); d = d + dhalf) {
        if (!c.in_utop_domain(d)) continue;
        CHECK(sigma(q, d + HalfInt::whole(1), c.with_m_plus_one()) ==
              Rational(q * q * q) * sigma(q, d, c));
      }
    }
  }
}

TEST_CASE("values depend only on (torus, sign, m)") {
  RegSSClass plain = split_top_m(1);
  RegSSClass adorned = RegSSClass::split_top(HalfInt::whole(1), 4);  // residue 4 = 1 + 3 mod 9
  for (HalfInt d = d0; d <= HalfInt::whole(2); d = d + dhalf) {
    CHECK(sigma(3, d, plain) == sigma(3, d, adorned));
    CHECK(e_depth(3, d, plain) == e_depth(3, d, adorned));
  }
}

TEST_CASE("census records") {
  auto c1 = supercuspidal_census(3, d1);
  CHECK(c1.count_per_family == Rational(4));
  CHECK(c1.count_total == Rational(8));
  CHECK(c1.formal_degree.as_rational() == Rational(6));
  CHECK(c1.multiplicity.as_rational() == Rational(1));

  auto c2 = supercuspidal_census(3, HalfInt::whole(2));
  CHECK(c2.count_per_family == Rational(12));
  CHECK(c2.formal_degree.as_rational() == Rational(18));
  CHECK(c2.multiplicity.as_rational() == Rational(3));

  auto ch = supercuspidal_census(3, dhalf);
  CHECK(ch.formal_degree.as_rational() == Rational(4));  // (q+1)(q-1)/2 q^0
  CHECK(ch.nondegenerate_characters == 4);               // (q-1)^2
  CHECK(ch.orbit_count == 4);                            // 2(q-1)
  CHECK(ch.characters_per_orbit == Rational(1));
  CHECK(ch.classes_per_induced == Rational(2));

  auto c32 = supercuspidal_census(5, HalfInt::half(3));
  CHECK(c32.formal_degree == QPow::make(5, Rational(12), HalfInt::whole(1)));  // (q+1)(q-1)/2 q

  CHECK_THROWS_AS(supercuspidal_census(3, d0), std::invalid_argument);
}

TEST_CASE("tau values") {
  CHECK(tau_unramified(3) == 3);
  CHECK(tau_ramified(5) == 1);
  CHECK(tau_ramified(7) == 1);
}

TEST_CASE("all depth-sum and sigma values are integers") {
  for (long long q : {3LL, 5LL, 7LL}) {
    for (const auto& c : class_grid(HalfInt::whole(2))) {
      for (HalfInt d = d0; d <= HalfInt::whole(2); d = d + dhalf) {
        CHECK(e_depth(q, d, c).is_integer());
        CHECK(sigma(q, d, c).is_integer());
      }
    }
  }
}

TEST_CASE("class grid covers the sentinels") {
  auto grid = class_grid(HalfInt::whole(2));
  bool has_nc = false, has_sr = false, has_minus = false, has_ram_deep = false;
  for (const auto& c : grid) {
    if (c.compact_partition() == CompactKind::NonCompact) has_nc = true;
    if (c.strongly_regular()) has_sr = true;
    if (c.compact_partition() == CompactKind::MinusTopUnipotent) has_minus = true;
    if (c.torus() == TorusType::EllipticRamified && c.m() >= HalfInt::half(9)) has_ram_deep = true;
  }
  CHECK(has_nc);
  CHECK(has_sr);
  CHECK(has_minus);
  CHECK(has_ram_deep);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
}
