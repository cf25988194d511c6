#pragma once

#include <optional>
#include <vector>

#include "sl2p/classes.hpp"
#include "sl2p/cyclotomic.hpp"

namespace sl2p {

// p-adic valuation of an exact rational (INT_MAX/2 for zero)
int val_p(const Rational& x, long long p);

// trace-zero matrix [[a,b],[c,-a]] with exact rational entries
struct LieTarget {
  Rational a, b, c;

  Rational det() const { return Rational(0) - a * a - b * c; }  // det = -(a^2 + bc)
  LieTarget scaled(const Rational& t) const { return {a * t, b * t, c * t}; }
  std::string str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + (Rational(0) - a).str() + "]]";
  }
};

// g Y g^-1 for an exact rational g with det(g) = 1 (entries ga..gd)
LieTarget conjugate(const LieTarget& Y, const Rational& ga, const Rational& gb, const Rational& gc,
                    const Rational& gd);

// filtration membership through the determinant criterion: X in g_r iff
// val(det X) >= 2r.  Exact-entry form first; the second form takes a lattice
// point X = p^-ell [[A,B],[C,-A]] whose coordinates are known only modulo
// p^(ell+s) and refuses when that precision cannot decide the question.
bool in_g_filtration(long long p, const LieTarget& X, HalfInt r);
bool indicator_g_r(long long p, int ell, int s, long long A, long long B, long long C, HalfInt r);

// square class of -det(Y); decides the torus type of exp(Y)
SquareClass minus_det_square_class(long long p, const LieTarget& Y);
// class of exp(Y); throws if Y is degenerate, not topologically nilpotent,
// or outside the exp-convergence range
RegSSClass lie_class_of(long long p, const LieTarget& Y);

struct BudgetError : std::runtime_error {
  BudgetError(long long required_, long long cap_)
      : std::runtime_error("lattice point budget exceeded: need " + std::to_string(required_) +
                           " points, cap is " + std::to_string(cap_)),
        required(required_),
        cap(cap_) {}
  long long required;
  long long cap;
};

constexpr long long kDefaultPointBudget = 100'000'000;

// integral over T_ell = {X : entries in p^-ell R, val(det X) >= det_val_min}
// of psi(trace(X Y)), with the product Haar measure normalized so each
// coordinate gives R_F measure 1.  Exact: the value is a CycloSum of order
// p^(ell+v+1), v = max(-val) over the entries of Y.  The residual precision
// s = max(ell, v+1, ell+det_val_min) makes both the indicator and the phase
// constant on cosets, so the sum is independent of s (tested).
// s_min forces a finer residual precision than the automatic choice; the
// result is the same by coset-constancy (tested), only the cost grows
CycloSum ft_truncated(long long p, const LieTarget& Y, int ell, int det_val_min,
                      long long budget = kDefaultPointBudget, int s_min = -1);

// truncation of FT(1_{g_0})(Y) at level ell
CycloSum ft_g0(long long p, const LieTarget& Y, int ell, long long budget = kDefaultPointBudget);

// truncation of FT(1_{g_{-d}})(Y): direct summation over the g_{-d} box
CycloSum ft_g_minus_d_direct(long long p, HalfInt d, const LieTarget& Y, int ell,
                             long long budget = kDefaultPointBudget);
// same value through the change of variables X = p^-k U, k = ceil(d):
// p^(3k) * integral over {U in g_(k-d), entries in p^-(ell-k) R}
CycloSum ft_g_minus_d(long long p, HalfInt d, const LieTarget& Y, int ell,
                      long long budget = kDefaultPointBudget);

struct FtSweep {
  std::vector<int> ells;
  std::vector<CycloSum> values;
  bool stabilized = false;
  int ell_at_stability = -1;
  CycloSum stabilized_value;  // meaningful when stabilized
};

// run the truncations for ell = ell_min..ell_max; stability is declared when
// two consecutive levels agree exactly; never extrapolated
FtSweep ft_stabilize(long long p, const LieTarget& Y, int ell_max, long long budget = kDefaultPointBudget);
FtSweep ft_g_minus_d_stabilize(long long p, HalfInt d, const LieTarget& Y, int ell_max,
                               long long budget = kDefaultPointBudget);

struct KimCase {
  LieTarget Y;
  RegSSClass cls;
  Rational ft_value;       // stabilized FT(1_{g_{-d}})(Y)
  Rational sigma_value;    // sigma_d at the class of exp(Y)
  bool stabilized = false;
  bool pass = false;
};

struct KimReport {
  long long p = 0;
  HalfInt depth;
  std::vector<KimCase> cases;
  // sigma = constant * FT on the first vector with both sides nonzero; the
  // same constant must fit every vector
  std::optional<Rational> measure_constant;
  bool pass = false;
};

// desk-scale check of sigma_d(exp Y) against FT(1_{g_{-d}})(Y), up to one
// global measure constant shared by all vectors
KimReport kim_check(long long p, HalfInt d, const std::vector<LieTarget>& targets, int ell_max,
                    long long budget = kDefaultPointBudget);

// parse "n", "n/m" (m a power of p) entries a,b,c,d of [[a,b],[c,d]], d = -a
LieTarget parse_lie_target(long long p, const std::string& csv);

}  // namespace sl2p
