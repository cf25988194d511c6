#include "sl2p/projectors.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2p/fq.hpp"
#include "sl2p/sl2fq.hpp"

namespace sl2p {

namespace {

long long qpow(long long q, HalfInt e, const char* what) {
  if (!e.is_integral()) throw std::logic_error(std::string(what) + ": non-integral q-exponent");
  return checked_pow(q, e.as_int());
}

bool is_elliptic(const RegSSClass& c) { return c.torus() != TorusType::Split; }

}  // namespace

ResidueCharacter::ResidueCharacter(long long p, int f, long long e) : p_(p), f_(f), e_(e) {
  if (!is_odd_prime(p)) throw std::invalid_argument("ResidueCharacter: p must be an odd prime");
  if (f < 1) throw std::invalid_argument("ResidueCharacter: conductor exponent f must be >= 1");
  modulus_ = checked_pow(p, f);
  n_ = (p - 1) * checked_pow(p, f - 1);
  e_ = ((e % n_) + n_) % n_;
  gen_ = primitive_root(p, f);
  dlog_.assign(static_cast<size_t>(modulus_), -1);
  long long x = 1;
  for (long long k = 0; k < n_; ++k) {
    dlog_[static_cast<size_t>(x)] = k;
    x = (x * gen_) % modulus_;
  }
}

long long ResidueCharacter::primitive_root(long long p, int f) {
  long long modulus = checked_pow(p, f);
  long long n = (p - 1) * checked_pow(p, f - 1);
  for (long long g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    long long x = g, order = 1;
    while (x != 1) {
      x = (x * g) % modulus;
      ++order;
    }
    if (order == n) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

long long ResidueCharacter::chi_exponent(long long u) const {
  u = ((u % modulus_) + modulus_) % modulus_;
  long long k = u == 0 ? -1 : dlog_[static_cast<size_t>(u)];
  if (k < 0) throw std::domain_error("ResidueCharacter: chi of a non-unit");
  return (e_ * k) % n_;
}

std::vector<ResidueCharacter> regular_pairs_with_conductor(long long p, int f) {
  long long n = (p - 1) * checked_pow(p, f - 1);
  std::vector<ResidueCharacter> out;
  for (long long e = 1; 2 * e < n; ++e) {  // e < n - e picks one per pair
    ResidueCharacter chi(p, f, e);
    if (chi.conductor_exact() && chi.regular()) out.push_back(chi);
  }
  return out;
}

std::vector<long long> compatible_residues(long long p, int f, const RegSSClass& c) {
  if (c.torus() != TorusType::Split || !c.compact())
    throw std::invalid_argument("compatible_residues: split compact classes only");
  long long modulus = checked_pow(p, f);
  auto val_of = [&](long long x) {
    int v = 0;
    while (v < f && x % p == 0) {
      x /= p;
      ++v;
    }
    return v;  // v == f means x == 0 mod p^f
  };
  std::vector<long long> out;
  for (long long r = 1; r < modulus; ++r) {
    if (r % p == 0) continue;
    int vplus = val_of((r - 1 + modulus) % modulus);   // val(r - 1)
    int vminus = val_of((r + 1) % modulus);            // val(r + 1)
    switch (c.compact_partition()) {
      case CompactKind::TopUnipotent: {
        int m = c.m().as_int();
        if (m >= f ? vplus == f : vplus == m) out.push_back(r);
        break;
      }
      case CompactKind::MinusTopUnipotent: {
        int m = c.m().as_int();
        if (m >= f ? vminus == f : vminus == m) out.push_back(r);
        break;
      }
      case CompactKind::StronglyRegular:
        if (vplus == 0 && vminus == 0) out.push_back(r);
        break;
      default:
        break;
    }
  }
  if (c.residue_unit()) {
    long long want = ((*c.residue_unit() % modulus) + modulus) % modulus;
    if (std::find(out.begin(), out.end(), want) == out.end())
      throw std::invalid_argument("compatible_residues: residue inconsistent with class");
    return {want};
  }
  return out;
}

CycloSum ps_regular(const ResidueCharacter& chi, const RegSSClass& c) {
  if (!chi.regular() || !chi.conductor_exact())
    throw std::invalid_argument("ps_regular: character must be regular with exact conductor");
  long long q = chi.p();
  long long n = chi.group_order();
  if (!c.compact() || is_elliptic(c)) return CycloSum::zero(n);  // support theorem

  auto residues = compatible_residues(q, chi.f(), c);
  if (residues.size() != 1)
    throw std::invalid_argument("ps_regular: split class needs residue data mod p^f");
  long long r = residues[0];
  long long modulus = chi.modulus();
  // r^-1 mod p^f
  long long rinv = 1;
  for (long long x = 1; x < modulus; ++x)
    if ((x * r) % modulus == 1) {
      rinv = x;
      break;
    }
  CycloSum s(n);
  s.add_root(chi.chi_exponent(r));
  s.add_root(chi.chi_exponent(rinv));
  HalfInt d = HalfInt::whole(chi.f() - 1);
  return s * Rational(checked_mul(q + 1, qpow(q, d + c.m(), "ps_regular")));
}

Rational ps_sgn(long long q, const RegSSClass& c) {
  if (!c.compact() || is_elliptic(c)) return Rational(0);
  PrimeField F(q);
  long long r;
  switch (c.compact_partition()) {
    case CompactKind::TopUnipotent:
      r = 1;
      break;
    case CompactKind::MinusTopUnipotent:
      r = q - 1;
      break;
    default:
      if (!c.residue_unit()) throw std::invalid_argument("ps_sgn: residue needed for strongly regular class");
      r = F.reduce(*c.residue_unit());
  }
  return Rational(F.sgn(r)) * Rational(q + 1) * Rational(qpow(q, c.m(), "ps_sgn"));
}

Rational ps_unramified(long long q, const RegSSClass& c) {
  if (!c.compact()) return Rational(0);
  if (is_elliptic(c)) return Rational(-(q - 1));
  return Rational(2 * qpow(q, c.m() + HalfInt::whole(1), "ps_unramified") - (q - 1));
}

Rational ps_depth_sum(long long q, HalfInt d, const RegSSClass& c) {
  if (!d.is_integral() || d < HalfInt::whole(0))
    throw std::invalid_argument("ps_depth_sum: principal series components have integral depth");
  if (!c.compact()) return Rational(0);
  if (d == HalfInt::whole(0)) {
    if (is_elliptic(c)) return Rational(-(q - 1));
    switch (c.compact_partition()) {
      case CompactKind::TopUnipotent:
        return Rational(q - 1) * Rational((q + 2) * qpow(q, c.m(), "ps0") - 1);
      case CompactKind::MinusTopUnipotent:
        return Rational(q - 1) * Rational(qpow(q, c.m(), "ps0") - 1);
      default:
        return Rational(0);
    }
  }
  // d >= 1: support is inside the split topologically unipotent set
  if (c.compact_partition() != CompactKind::TopUnipotent || is_elliptic(c)) return Rational(0);
  Rational lead(checked_mul(q + 1, checked_mul(q - 1, qpow(q, d + d - HalfInt::whole(1), "psd"))));
  if (c.m() == d) return lead * Rational(-qpow(q, d, "psd"));
  if (c.m() >= d + HalfInt::whole(1)) return lead * Rational(q - 1) * Rational(qpow(q, c.m(), "psd"));
  return Rational(0);
}

Rational ps_depth_sum_oracle(long long q, HalfInt d, const RegSSClass& c) {
  if (!d.is_integral() || d < HalfInt::whole(1))
    throw std::invalid_argument("ps_depth_sum_oracle: needs integral d >= 1");
  if (!c.compact() || is_elliptic(c)) return Rational(0);
  int f = d.as_int() + 1;
  auto pairs = regular_pairs_with_conductor(q, f);
  bool have = false;
  Rational common;
  for (long long r : compatible_residues(q, f, c)) {
    RegSSClass cr = c.with_residue(r);
    CycloSum acc(pairs.empty() ? 1 : pairs.front().group_order());
    for (const auto& chi : pairs) acc += ps_regular(chi, cr);
    Rational v = acc.as_rational();
    if (!have) {
      common = v;
      have = true;
    } else if (v != common) {
      throw std::logic_error("ps_depth_sum_oracle: value depends on the residue at " + cr.str());
    }
  }
  if (!have)
    throw std::invalid_argument("ps_depth_sum_oracle: class " + c.str() +
                                " has no residues at p = " + std::to_string(q) +
                                " (strongly regular split classes need p >= 5)");
  return common;
}

DepthZeroTheta theta_cuspidal(long long q, const RegSSClass& c) {
  if (!c.compact()) throw std::invalid_argument("theta_cuspidal: compact classes only");
  DepthZeroTheta t{Rational(0), Rational(0), false};
  switch (c.torus()) {
    case TorusType::Split: {
      // Theta_i = 1/|alpha-alpha^-1| - 1 at alpha = 1, times (-1)^i at alpha = -1
      long long qm = c.sign() == CentralSign::None ? 1 : qpow(q, c.m(), "theta_cuspidal");
      if (c.sign() == CentralSign::Plus) t.a = Rational(qm - 1);
      if (c.sign() == CentralSign::Minus) t.b = Rational(qm - 1);
      break;
    }
    case TorusType::EllipticRamified:
      if (c.sign() == CentralSign::Plus) t.a = Rational(-1);
      if (c.sign() == CentralSign::Minus) t.b = Rational(-1);
      break;
    case TorusType::EllipticUnramified:
      // only the packet sum Theta_i + Theta_i' is pinned down; the
      // sgn_E-dependent parts cancel within the packet
      t.pair_sum = true;
      if (c.sign() == CentralSign::Plus) t.a = Rational(-2);
      if (c.sign() == CentralSign::Minus) t.b = Rational(-2);
      break;
  }
  return t;
}

Rational e_cusp_zero(long long q, const RegSSClass& c) {
  if (!c.compact()) return Rational(0);
  if (c.torus() == TorusType::EllipticUnramified && c.strongly_regular()) {
    // the class meets exactly one of K, K'; Harish-Chandra induction gives
    // e_K = q-1 there and e_K' = 0 (or the transpose)
    return Rational(q - 1);
  }
  DepthZeroTheta t = theta_cuspidal(q, c);
  // sum_{i=1..q} (a + b(-1)^i) = qa - b; weight (q-1) covers e_K + e_K' for
  // single characters, (q-1)/2 when the value already describes the packet sum
  Rational weight = t.pair_sum ? Rational(q - 1, 2) : Rational(q - 1);
  return weight * (Rational(q) * t.a - t.b);
}

Rational e_zero(long long q, const RegSSClass& c) {
  if (c.compact_partition() != CompactKind::TopUnipotent) return Rational(0);
  long long q2m1 = q * q - 1;
  if (is_elliptic(c)) return Rational(-q2m1);
  return Rational(q2m1) * Rational(2 * qpow(q, c.m(), "e_zero") - 1);
}

Rational e_zero_rebuilt(long long q, const RegSSClass& c) {
  return ps_depth_sum(q, HalfInt::whole(0), c) + e_cusp_zero(q, c);
}

Rational cusp_integral(long long q, HalfInt d, const RegSSClass& c) {
  if (!d.is_integral() || d < HalfInt::whole(1))
    throw std::invalid_argument("cusp_integral: needs integral d >= 1");
  if (c.compact_partition() != CompactKind::TopUnipotent) return Rational(0);
  Rational lead(q * q - 1);
  HalfInt d2m1 = d + d - HalfInt::whole(1);  // exponent 2d - 1
  switch (c.torus()) {
    case TorusType::Split:
      if (c.m() >= d + HalfInt::whole(1))
        return lead * Rational(q - 1) * Rational(qpow(q, d2m1, "cusp")) *
               Rational(qpow(q, c.m(), "cusp") - qpow(q, d, "cusp"));
      return Rational(0);
    case TorusType::EllipticRamified:
      if (c.m() >= d + HalfInt::half(1))
        return lead * Rational(-(q - 1)) * Rational(qpow(q, d2m1 + d, "cusp"));
      return Rational(0);
    case TorusType::EllipticUnramified: {
      HalfInt e = d + d2m1;  // 3d - 1
      if (c.m() == d) return lead * Rational(qpow(q, e, "cusp"));
      if (c.m() >= d + HalfInt::whole(1)) return lead * Rational(-(q - 1)) * Rational(qpow(q, e, "cusp"));
      return Rational(0);
    }
  }
  return Rational(0);
}

Rational e_half_integral(long long q, HalfInt d, const RegSSClass& c) {
  if (d.is_integral() || d < HalfInt::half(1))
    throw std::invalid_argument("e_half_integral: needs half-integral d >= 1/2");
  if (c.compact_partition() != CompactKind::TopUnipotent) return Rational(0);
  Rational lead(q * q - 1);
  HalfInt k = d - HalfInt::half(1);  // integral
  long long q3k = qpow(q, k + k + k, "e_half");
  switch (c.torus()) {
    case TorusType::Split:
      if (c.m() >= d + HalfInt::half(1))
        return lead * (Rational(2 * (q - 1)) * Rational(qpow(q, k + k + c.m(), "e_half")) -
                       Rational(q * q - 1) * Rational(q3k));
      return Rational(0);
    case TorusType::EllipticRamified:
      if (c.m() == d) return lead * Rational(q3k);
      if (c.m() > d) return lead * Rational(-(q * q - 1)) * Rational(q3k);
      return Rational(0);
    case TorusType::EllipticUnramified:
      if (c.m() >= d + HalfInt::half(1)) return lead * Rational(-(q * q - 1)) * Rational(q3k);
      return Rational(0);
  }
  return Rational(0);
}

Rational e_depth(long long q, HalfInt d, const RegSSClass& c) {
  if (d < HalfInt::whole(0)) throw std::invalid_argument("e_depth: d >= 0");
  if (d == HalfInt::whole(0)) return e_zero(q, c);
  if (d.is_integral()) return ps_depth_sum(q, d, c) + cusp_integral(q, d, c);
  return e_half_integral(q, d, c);
}

Rational sigma(long long q, HalfInt d, const RegSSClass& c) {
  if (!c.in_utop_domain(d)) return Rational(0);
  if (d.is_integral()) {
    Rational lead = Rational(q * q - 1) * Rational(qpow(q, d + d + d, "sigma"));
    if (is_elliptic(c)) return lead * Rational(-1);
    return lead * Rational(2 * qpow(q, c.m() - d, "sigma") - 1);
  }
  Rational lead = Rational(q * q - 1) * Rational(qpow(q, d + d + d + HalfInt::half(1), "sigma"));
  if (is_elliptic(c)) return lead * Rational(-1);
  return lead * Rational(2 * qpow(q, c.m() - d - HalfInt::half(1), "sigma") - 1);
}

Rational sigma_summed(long long q, HalfInt d, const RegSSClass& c) {
  Rational acc(0);
  for (HalfInt k = HalfInt::whole(0); k <= d; k = k + HalfInt::half(1)) acc += e_depth(q, k, c);
  return acc;
}

CensusRecord supercuspidal_census(long long q, HalfInt d) {
  CensusRecord r;
  r.q = q;
  r.depth = d;
  if (d.is_integral()) {
    if (d < HalfInt::whole(1))
      throw std::invalid_argument(
          "supercuspidal_census: depth zero is covered by the cuspidal-table structure (q per vertex class)");
    HalfInt dm1 = d - HalfInt::whole(1);
    r.count_per_family = Rational(q - 1, 2) * Rational(q + 1) * Rational(qpow(q, dm1, "census"));
    r.count_total = r.count_per_family * Rational(2);
    r.formal_degree = QPow::make(q, Rational(q - 1), d);            // (q-1) q q^(d-1)
    r.multiplicity = QPow::make(q, Rational(1), dm1);
  } else {
    if (d < HalfInt::half(1)) throw std::invalid_argument("supercuspidal_census: d >= 1/2");
    HalfInt dmh = d - HalfInt::half(1);
    r.nondegenerate_characters = checked_mul(q - 1, q - 1);
    r.orbit_count = 2 * (q - 1);
    r.characters_per_orbit = Rational(q - 1, 2);
    r.classes_per_induced = Rational(2 * qpow(q, dmh, "census"));
    r.formal_degree = QPow::make(q, Rational((q + 1) * (q - 1), 2), dmh);
    r.multiplicity = QPow::make(q, Rational(1), dmh);
    // no total census: distinct orbits are not asserted to give disjoint sets
  }
  return r;
}

long long tau_unramified(long long q) {
  PrimeField F(q);
  for (const auto& z : enumerate_elliptic(F))
    if (!elliptic_psi_sum(F, z).equals(Rational(q)))
      throw std::logic_error("tau_unramified: sum differs from q at z = " + mat_str(z));
  return q;
}

long long tau_ramified(long long q) {
  PrimeField F(q);
  for (long long u = 1; u < q; ++u)
    for (long long v = 1; v < q; ++v)
      if (!ramified_pair_sum(F, u, v).equals(Rational(1)))
        throw std::logic_error("tau_ramified: sum differs from 1");
  return 1;
}

std::vector<RegSSClass> class_grid(HalfInt d_max) {
  std::vector<RegSSClass> grid;
  int mmax = d_max.floor() + 3;
  for (int m = 1; m <= mmax; ++m) {
    grid.push_back(RegSSClass::split_top(HalfInt::whole(m)));
    grid.push_back(RegSSClass::split_minus(HalfInt::whole(m)));
    grid.push_back(RegSSClass::unramified_top(HalfInt::whole(m)));
    grid.push_back(RegSSClass::unramified_minus(HalfInt::whole(m)));
  }
  for (HalfInt m = HalfInt::half(1); m <= d_max + HalfInt::half(5); m = m + HalfInt::whole(1)) {
    grid.push_back(RegSSClass::ramified_top(m));
    grid.push_back(RegSSClass::ramified_minus(m));
  }
  grid.push_back(RegSSClass::split_strongly_regular());
  grid.push_back(RegSSClass::unramified_strongly_regular());
  grid.push_back(RegSSClass::noncompact(1));
  grid.push_back(RegSSClass::noncompact(-1));
  std::sort(grid.begin(), grid.end());
  return grid;
}

InductionReport verify_sigma_induction(long long q, HalfInt d_max) {
  InductionReport report;
  for (const auto& c : class_grid(d_max)) {
    for (HalfInt d = HalfInt::whole(0); d <= d_max; d = d + HalfInt::half(1)) {
      InductionRow row{c, d, sigma(q, d, c), sigma_summed(q, d, c), false};
      row.pass = row.sigma_closed == row.sigma_sum;
      report.pass = report.pass && row.pass;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace sl2p
