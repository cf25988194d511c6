#include "sl2p/latticeft.hpp"

#include <climits>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sl2p/fq.hpp"
#include "sl2p/projectors.hpp"

namespace sl2p {

int val_p(const Rational& x, long long p) {
  if (x.is_zero()) return INT_MAX / 2;
  int v = 0;
  long long n = std::abs(x.num());
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  long long d = x.den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

namespace {

// x * p^shift reduced mod p^M; the shifted value must be p-integral
long long rat_mod(const Rational& x, int shift, long long pM, long long p) {
  if (x.is_zero()) return 0;
  long long n = x.num(), d = x.den();
  int e = shift;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  while (d % p == 0) {
    d /= p;
    --e;
  }
  if (e < 0) throw std::logic_error("rat_mod: value is not p-integral");
  long long nm = ((n % pM) + pM) % pM;
  for (int i = 0; i < e; ++i) nm = (nm * p) % pM;
  long long dm = ((d % pM) + pM) % pM;
  // invert d mod p^M (a unit): d^(phi(p^M)-1)
  long long inv = 1, base = dm, ee = pM / p * (p - 1) - 1;
  while (ee > 0) {
    if (ee & 1) inv = (inv * base) % pM;
    base = (base * base) % pM;
    ee >>= 1;
  }
  return (nm * inv) % pM;
}

}  // namespace

LieTarget conjugate(const LieTarget& Y, const Rational& ga, const Rational& gb, const Rational& gc,
                    const Rational& gd) {
  Rational dg = ga * gd - gb * gc;
  if (dg != Rational(1)) throw std::invalid_argument("conjugate: det(g) must be 1");
  // g [[a,b],[c,-a]] g^-1 with g^-1 = [[gd,-gb],[-gc,ga]]
  Rational m11 = ga * Y.a + gb * Y.c, m12 = ga * Y.b - gb * Y.a;
  Rational m21 = gc * Y.a + gd * Y.c, m22 = gc * Y.b - gd * Y.a;
  return LieTarget{m11 * gd - m12 * gc, m12 * ga - m11 * gb, m21 * gd - m22 * gc};
}

bool in_g_filtration(long long p, const LieTarget& X, HalfInt r) {
  return HalfInt::whole(val_p(X.det(), p)) >= r + r;
}

bool indicator_g_r(long long p, int ell, int s, long long A, long long B, long long C, HalfInt r) {
  if (ell < 0 || s < ell) throw std::invalid_argument("indicator_g_r: need s >= ell >= 0");
  int threshold = 2 * ell + r.twice();  // val_p(A^2 + BC) must reach this
  if (threshold <= 0) return true;
  if (threshold > ell + s)
    throw std::invalid_argument(
        "indicator_g_r: precision s = " + std::to_string(s) + " cannot decide membership in g_" +
        r.str() + " at ell = " + std::to_string(ell) + " (needs s >= " +
        std::to_string(threshold - ell) + ")");
  long long mod = checked_pow(p, threshold);
  long long Am = ((A % mod) + mod) % mod, Bm = ((B % mod) + mod) % mod, Cm = ((C % mod) + mod) % mod;
  return (Am * Am + Bm * Cm) % mod == 0;
}

SquareClass minus_det_square_class(long long p, const LieTarget& Y) {
  Rational md = Rational(0) - Y.det();
  if (md.is_zero()) throw std::invalid_argument("minus_det_square_class: degenerate Y");
  int v = val_p(md, p);
  if (v % 2 != 0) return SquareClass::OddValuation;
  // unit part mod p
  long long unit = rat_mod(md, -v, p, p);
  PrimeField F(p);
  return F.sgn(unit) == 1 ? SquareClass::SquareUnit : SquareClass::NonSquareUnit;
}

RegSSClass lie_class_of(long long p, const LieTarget& Y) {
  Rational d = Y.det();
  if (d.is_zero()) throw std::invalid_argument("lie_class_of: degenerate Y");
  return lie_class_of(p, HalfInt::from_twice(val_p(d, p)), minus_det_square_class(p, Y));
}

CycloSum ft_truncated(long long p, const LieTarget& Y, int ell, int det_val_min, long long budget,
                      int s_min) {
  if (!is_odd_prime(p)) throw std::invalid_argument("ft_truncated: p must be an odd prime");
  if (ell < 0) throw std::invalid_argument("ft_truncated: ell >= 0");

  int v = INT_MIN;
  for (const Rational* e : {&Y.a, &Y.b, &Y.c})
    if (!e->is_zero()) v = std::max(v, -val_p(*e, p));
  if (v == INT_MIN) throw std::invalid_argument("ft_truncated: Y must be nonzero");

  int s = std::max({ell, v + 1, ell + std::max(0, det_val_min), 0, s_min});
  int M = std::max(1, ell + v + 1);

  if (3.0 * (ell + s) * std::log2(double(p)) > 62.0)
    throw BudgetError(LLONG_MAX, budget);
  long long N = checked_pow(p, ell + s);  // coordinate classes, also det modulus
  long long points = checked_mul(N, checked_mul(N, N));
  if (points > budget) throw BudgetError(points, budget);

  long long PM = checked_pow(p, M);
  long long T = checked_pow(p, std::max(0, 2 * ell + det_val_min));
  if (T > N) throw std::logic_error("ft_truncated: indicator precision bound violated");

  // phase: trace(XY) = 2a*Y.a + b*Y.c + c*Y.b with a = Ai/p^ell;
  // index = p^(M-1) * trace mod p^M, so the coefficient of Ai is
  // 2*Y.a*p^(M-1-ell) = 2*Y.a*p^v, and likewise for Bi, Ci
  long long cA = rat_mod(Y.a * Rational(2), v, PM, p);
  long long cB = rat_mod(Y.c, v, PM, p);
  long long cC = rat_mod(Y.b, v, PM, p);

  std::vector<long long> hist(static_cast<size_t>(PM), 0);
  for (long long Ai = 0; Ai < N; ++Ai) {
    long long A2 = (Ai * Ai) % N;
    long long phA = (cA * Ai) % PM;
    for (long long Bi = 0; Bi < N; ++Bi) {
      long long idx = (phA + cB * Bi) % PM;
      long long D = A2 % T;
      long long Dstep = Bi % T;
      for (long long Ci = 0; Ci < N; ++Ci) {
        if (D == 0) ++hist[static_cast<size_t>(idx)];
        D += Dstep;
        if (D >= T) D -= T;
        idx += cC;
        if (idx >= PM) idx -= PM;
      }
    }
  }
  return CycloSum(PM, std::move(hist), Rational(1, checked_pow(p, 3 * s)));
}

CycloSum ft_g0(long long p, const LieTarget& Y, int ell, long long budget) {
  if (Y.det().is_zero()) throw std::invalid_argument("ft_g0: degenerate Y rejected");
  return ft_truncated(p, Y, ell, 0, budget);
}

CycloSum ft_g_minus_d_direct(long long p, HalfInt d, const LieTarget& Y, int ell, long long budget) {
  if (Y.det().is_zero()) throw std::invalid_argument("ft_g_minus_d_direct: degenerate Y rejected");
  if (d < HalfInt::whole(0)) throw std::invalid_argument("ft_g_minus_d_direct: d >= 0");
  return ft_truncated(p, Y, ell, -d.twice(), budget);
}

CycloSum ft_g_minus_d(long long p, HalfInt d, const LieTarget& Y, int ell, long long budget) {
  if (Y.det().is_zero()) throw std::invalid_argument("ft_g_minus_d: degenerate Y rejected");
  if (d < HalfInt::whole(0)) throw std::invalid_argument("ft_g_minus_d: d >= 0");
  int k = d.ceil();
  if (ell < k) throw std::invalid_argument("ft_g_minus_d: need ell >= ceil(d)");
  // X = p^-k U maps {X in g_-d, entries in p^-ell} onto
  // {U in g_(k-d), entries in p^-(ell-k)} and multiplies the measure by p^(3k)
  LieTarget U = Y.scaled(Rational(1, checked_pow(p, k)));
  CycloSum base = ft_truncated(p, U, ell - k, (HalfInt::whole(k) - d).twice(), budget);
  return base * Rational(checked_pow(p, 3 * k));
}

namespace {

FtSweep sweep(int ell_min, int ell_max, const std::function<CycloSum(int)>& eval) {
  FtSweep sw;
  for (int ell = ell_min; ell <= ell_max; ++ell) {
    sw.ells.push_back(ell);
    sw.values.push_back(eval(ell));
    size_t n = sw.values.size();
    if (!sw.stabilized && n >= 2 && (sw.values[n - 1] - sw.values[n - 2]).is_zero()) {
      sw.stabilized = true;
      sw.ell_at_stability = ell;
      sw.stabilized_value = sw.values[n - 1];
    }
  }
  return sw;
}

}  // namespace

FtSweep ft_stabilize(long long p, const LieTarget& Y, int ell_max, long long budget) {
  return sweep(0, ell_max, [&](int ell) { return ft_g0(p, Y, ell, budget); });
}

FtSweep ft_g_minus_d_stabilize(long long p, HalfInt d, const LieTarget& Y, int ell_max, long long budget) {
  return sweep(d.ceil(), ell_max, [&](int ell) { return ft_g_minus_d(p, d, Y, ell, budget); });
}

KimReport kim_check(long long p, HalfInt d, const std::vector<LieTarget>& targets, int ell_max,
                    long long budget) {
  if (d < HalfInt::half(1)) throw std::invalid_argument("kim_check: d >= 1/2");
  KimReport report;
  report.p = p;
  report.depth = d;
  report.pass = true;
  for (const auto& Y : targets) {
    RegSSClass cls = lie_class_of(p, Y);  // enforces exp-convergence
    FtSweep sw = ft_g_minus_d_stabilize(p, d, Y, ell_max, budget);
    KimCase kc{Y, cls, Rational(0), sigma(p, d, cls), sw.stabilized, false};
    if (sw.stabilized) kc.ft_value = sw.stabilized_value.as_rational();
    if (!report.measure_constant && sw.stabilized && !kc.ft_value.is_zero() && !kc.sigma_value.is_zero())
      report.measure_constant = kc.sigma_value / kc.ft_value;
    report.cases.push_back(kc);
  }
  for (auto& kc : report.cases) {
    if (!kc.stabilized) {
      kc.pass = false;
    } else if (report.measure_constant) {
      kc.pass = kc.sigma_value == *report.measure_constant * kc.ft_value;
    } else {
      kc.pass = kc.sigma_value.is_zero() && kc.ft_value.is_zero();
    }
    report.pass = report.pass && kc.pass;
  }
  return report;
}

LieTarget parse_lie_target(long long p, const std::string& csv) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    parts.push_back(csv.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("Y must have four entries a,b,c,d");
  auto parse_entry = [&](const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    long long t = den;
    while (t > 1 && t % p == 0) t /= p;
    if (t != 1) throw std::invalid_argument("Y entry denominators must be powers of p");
    return Rational(num, den);
  };
  LieTarget Y{parse_entry(parts[0]), parse_entry(parts[1]), parse_entry(parts[2])};
  if (parse_entry(parts[3]) != Rational(0) - Y.a)
    throw std::invalid_argument("Y must be trace-zero: d = -a");
  return Y;
}

}  // namespace sl2p
