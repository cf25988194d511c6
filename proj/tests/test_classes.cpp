#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2p/classes.hpp"

using namespace sl2p;

TEST_CASE("compact partition") {
  CHECK(RegSSClass::split_top(HalfInt::whole(1)).compact_partition() == CompactKind::TopUnipotent);
  CHECK(RegSSClass::split_minus(HalfInt::whole(1)).compact_partition() ==
        CompactKind::MinusTopUnipotent);
  CHECK(RegSSClass::unramified_strongly_regular().compact_partition() == CompactKind::StronglyRegular);
  CHECK(RegSSClass::noncompact(1).compact_partition() == CompactKind::NonCompact);
}

TEST_CASE("class invariants enforced") {
  CHECK_THROWS_AS(RegSSClass::ramified_top(HalfInt::whole(1)), std::invalid_argument);
  CHECK_THROWS_AS(RegSSClass::split_top(HalfInt::half(3)), std::invalid_argument);
  CHECK_THROWS_AS(RegSSClass::split_top(HalfInt::whole(0)), std::invalid_argument);
  CHECK_THROWS_AS(RegSSClass::noncompact(0), std::invalid_argument);
}

TEST_CASE("norm of alpha - alpha^-1") {
  CHECK(RegSSClass::split_top(HalfInt::whole(2)).norm_alpha_diff(3) ==
        QPow::make(3, Rational(1, 9), HalfInt::whole(0)));
  // ramified m = 1/2 at q = 3: 3^(-1/2)
  QPow v = RegSSClass::ramified_top(HalfInt::half(1)).norm_alpha_diff(3);
  CHECK(v.has_half_exp());
  CHECK(v == QPow::make(3, Rational(1), HalfInt::half(-1)));
  CHECK(RegSSClass::split_strongly_regular().norm_alpha_diff(3) ==
        QPow::make(3, Rational(1), HalfInt::whole(0)));
  CHECK(RegSSClass::split_minus(HalfInt::whole(2)).norm_alpha_diff(3) ==
        QPow::make(3, Rational(1, 9), HalfInt::whole(0)));
  CHECK_THROWS_AS(RegSSClass::noncompact(1).norm_alpha_diff(3), std::domain_error);
}

TEST_CASE("utop domain membership") {
  // d = 0
  CHECK(RegSSClass::split_top(HalfInt::whole(1)).in_utop_domain(HalfInt::whole(0)));
  CHECK_FALSE(RegSSClass::split_strongly_regular().in_utop_domain(HalfInt::whole(0)));
  // d = 1/2 shells
  CHECK_FALSE(RegSSClass::ramified_top(HalfInt::half(1)).in_utop_domain(HalfInt::half(1)));
  CHECK(RegSSClass::ramified_top(HalfInt::half(3)).in_utop_domain(HalfInt::half(1)));
  // d = 1 shells
  CHECK_FALSE(RegSSClass::unramified_top(HalfInt::whole(1)).in_utop_domain(HalfInt::whole(1)));
  CHECK(RegSSClass::unramified_top(HalfInt::whole(2)).in_utop_domain(HalfInt::whole(1)));
  // minus classes are never in the domain
  CHECK_FALSE(RegSSClass::split_minus(HalfInt::whole(5)).in_utop_domain(HalfInt::whole(0)));
}

TEST_CASE("domains shrink as depth grows") {
  std::vector<RegSSClass> cs = {
      RegSSClass::split_top(HalfInt::whole(2)), RegSSClass::unramified_top(HalfInt::whole(3)),
      RegSSClass::ramified_top(HalfInt::half(5)), RegSSClass::split_minus(HalfInt::whole(2)),
      RegSSClass::split_strongly_regular()};
  for (const auto& c : cs)
    for (HalfInt d = HalfInt::half(1); d <= HalfInt::whole(4); d = d + HalfInt::half(1))
      if (c.in_utop_domain(d))
        for (HalfInt dd = HalfInt::whole(0); dd <= d; dd = dd + HalfInt::half(1))
          CHECK(c.in_utop_domain(dd));
}

TEST_CASE("canonical strings round-trip") {
  std::vector<std::string> strs = {"split:+1:m=2", "split:-1:m=1",  "ram:+1:m=3/2", "ram:-1:m=1/2",
                                   "unram:+1:m=1", "unram:sr",      "split:sr",     "split:sr:u=2",
                                   "split:nc:v=1", "split:nc:v=-2", "split:+1:m=1:u=4"};
  for (const auto& s : strs) CHECK(RegSSClass::parse(s).str() == s);
  CHECK_THROWS_AS(RegSSClass::parse("ram:sr"), std::invalid_argument);
  CHECK_THROWS_AS(RegSSClass::parse("split:m=1"), std::invalid_argument);
}

TEST_CASE("lie class transfer") {
  // p=5, -det a square with val(det) = 2: split, m = 1
  CHECK(lie_class_of(5, HalfInt::whole(1), SquareClass::SquareUnit) ==
        RegSSClass::split_top(HalfInt::whole(1)));
  CHECK(lie_class_of(5, HalfInt::whole(1), SquareClass::NonSquareUnit) ==
        RegSSClass::unramified_top(HalfInt::whole(1)));
  CHECK(lie_class_of(5, HalfInt::half(3), SquareClass::OddValuation) ==
        RegSSClass::ramified_top(HalfInt::half(3)));
  // p=3 convergence bound
  CHECK_THROWS_AS(lie_class_of(3, HalfInt::half(1), SquareClass::OddValuation), std::domain_error);
  CHECK_NOTHROW(lie_class_of(3, HalfInt::whole(1), SquareClass::SquareUnit));
  CHECK_NOTHROW(lie_class_of(5, HalfInt::half(1), SquareClass::OddValuation));
  // inconsistent square class vs parity
  CHECK_THROWS_AS(lie_class_of(5, HalfInt::whole(1), SquareClass::OddValuation), std::invalid_argument);
}

TEST_CASE("random classes round-trip through their canonical string") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> torus(0, 2), sign(0, 1), mval(1, 6), res(2, 60);
  for (int trial = 0; trial < 300; ++trial) {
    RegSSClass c = [&]() {
      switch (torus(rng)) {
        case 0: {
          HalfInt m = HalfInt::whole(mval(rng));
          std::optional<long long> u;
          if (trial % 3 == 0) u = res(rng);
          return sign(rng) ? RegSSClass::split_top(m, u) : RegSSClass::split_minus(m, u);
        }
        case 1: {
          HalfInt m = HalfInt::whole(mval(rng));
          return sign(rng) ? RegSSClass::unramified_top(m) : RegSSClass::unramified_minus(m);
        }
        default: {
          HalfInt m = HalfInt::half(2 * mval(rng) - 1);
          return sign(rng) ? RegSSClass::ramified_top(m) : RegSSClass::ramified_minus(m);
        }
      }
    }();
    CHECK(RegSSClass::parse(c.str()) == c);
  }
}

TEST_CASE("grid ordering is canonical") {
  RegSSClass a = RegSSClass::split_top(HalfInt::whole(1));
  RegSSClass b = RegSSClass::split_top(HalfInt::whole(2));
  RegSSClass c = RegSSClass::unramified_top(HalfInt::whole(1));
  RegSSClass d = RegSSClass::split_minus(HalfInt::whole(1));
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a < d);
  CHECK(d < c);
}
