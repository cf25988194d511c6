#pragma once

#include <vector>

#include "sl2p/classes.hpp"
#include "sl2p/cyclotomic.hpp"

namespace sl2p {

// Character of the unit group (Z/p^f)^x, indexed against a fixed primitive
// root g: chi(g^k) = zeta_n^(e k) with n = (p-1) p^(f-1).
class ResidueCharacter {
 public:
  ResidueCharacter(long long p, int f, long long e);

  long long p() const { return p_; }
  int f() const { return f_; }
  long long modulus() const { return modulus_; }
  long long group_order() const { return n_; }
  long long generator() const { return gen_; }
  long long exponent() const { return e_; }

  // conductor is exactly p^f
  bool conductor_exact() const { return f_ == 1 ? e_ % n_ != 0 : e_ % p_ != 0; }
  bool regular() const { return (2 * e_) % n_ != 0; }

  long long chi_exponent(long long u) const;  // k with chi(u) = zeta_n^k
  CycloSum chi(long long u) const { return CycloSum::root(n_, chi_exponent(u)); }

  static long long primitive_root(long long p, int f);

 private:
  long long p_;
  int f_;
  long long modulus_, n_, gen_, e_;
  std::vector<long long> dlog_;
};

// unordered pairs {chi, chi^-1} of regular characters with conductor exactly
// p^f, one representative exponent per pair
std::vector<ResidueCharacter> regular_pairs_with_conductor(long long p, int f);

// ---- principal series (q = p everywhere; meas(SL(2,R_F)) = 1) ----

// single projector for the component {chi, chi^-1}, chi regular of conductor
// p^(d+1); supported on split compact classes, zero elsewhere
CycloSum ps_regular(const ResidueCharacter& chi, const RegSSClass& c);
Rational ps_sgn(long long q, const RegSSClass& c);
Rational ps_unramified(long long q, const RegSSClass& c);

// sum of the depth-d principal series projectors (d integral)
Rational ps_depth_sum(long long q, HalfInt d, const RegSSClass& c);
// brute-force recomputation of ps_depth_sum (d >= 1) as a character-pair sum;
// when the class carries no residue, all compatible residues are tried and
// must agree
Rational ps_depth_sum_oracle(long long q, HalfInt d, const RegSSClass& c);
// residues of alpha mod p^f compatible with a split class descriptor
std::vector<long long> compatible_residues(long long p, int f, const RegSSClass& c);

// ---- depth zero cuspidal data ----

// depth-zero induced-character values on a class: value(i) = a + b*(-1)^i,
// describing Theta_i itself, or the packet sum Theta_i + Theta_i' in the
// unramified case where only the pair is determined
struct DepthZeroTheta {
  Rational a, b;
  bool pair_sum = false;
};
DepthZeroTheta theta_cuspidal(long long q, const RegSSClass& c);

// e_K + e_K' at depth zero, rebuilt from theta_cuspidal with the weights
// (q-1) resp. (q-1)/2
Rational e_cusp_zero(long long q, const RegSSClass& c);

// ---- depth sums ----

Rational e_zero(long long q, const RegSSClass& c);              // closed form (Table 1)
Rational e_zero_rebuilt(long long q, const RegSSClass& c);      // ps-zero + e_K + e_K'
Rational cusp_integral(long long q, HalfInt d, const RegSSClass& c);   // Table 2, d >= 1
Rational e_half_integral(long long q, HalfInt d, const RegSSClass& c); // Table 3
Rational e_depth(long long q, HalfInt d, const RegSSClass& c);
Rational sigma(long long q, HalfInt d, const RegSSClass& c);    // cumulative, closed form
Rational sigma_summed(long long q, HalfInt d, const RegSSClass& c);  // sum of e_depth

// ---- census and Gauss-type sums ----

struct CensusRecord {
  long long q = 0;
  HalfInt depth;
  // integral depth: counts per maximal-compact family (two families)
  Rational count_per_family;
  Rational count_total;
  QPow formal_degree;
  QPow multiplicity;
  // half-integral depth orbit structure
  long long nondegenerate_characters = 0;
  long long orbit_count = 0;
  Rational characters_per_orbit;
  Rational classes_per_induced;
};
CensusRecord supercuspidal_census(long long q, HalfInt d);

// tau on the shell classes, recomputed by brute force over F_q:
// unramified integral case gives q, ramified half-integral case gives 1
long long tau_unramified(long long q);
long long tau_ramified(long long q);

// ---- verification grid ----

// class descriptors covering every case of the tables: m up to d_max + 3
// (split/unramified) resp. d_max + 5/2 (ramified), both central signs, plus
// strongly regular and non-compact sentinels
std::vector<RegSSClass> class_grid(HalfInt d_max);

struct InductionRow {
  RegSSClass cls;
  HalfInt depth;
  Rational sigma_closed;
  Rational sigma_sum;
  bool pass = false;
};
struct InductionReport {
  std::vector<InductionRow> rows;
  bool pass = true;
};
InductionReport verify_sigma_induction(long long q, HalfInt d_max);

}  // namespace sl2p
