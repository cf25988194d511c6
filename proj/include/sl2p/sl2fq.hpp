#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2p/fq.hpp"

namespace sl2p {

// 2x2 matrix over F_p.  Group elements have det 1, Lie algebra elements trace 0.
struct Mat2 {
  long long a, b, c, d;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend bool operator<(const Mat2& x, const Mat2& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  }
};

Mat2 mul(const PrimeField& F, const Mat2& x, const Mat2& y);
Mat2 conjugate(const PrimeField& F, const Mat2& g, const Mat2& x);  // g x g^-1, det(g) != 0
long long det(const PrimeField& F, const Mat2& x);
long long trace(const PrimeField& F, const Mat2& x);
Mat2 neg(const PrimeField& F, const Mat2& x);
long long mat_key(const PrimeField& F, const Mat2& x);
std::string mat_str(const Mat2& x);

enum class LieKind { Zero, Nilpotent, SplitRegular, Elliptic };

// Trace-zero X is elliptic iff -det(X) is a nonzero non-square (irreducible
// characteristic polynomial), split regular iff a nonzero square.
LieKind classify_lie(const PrimeField& F, const Mat2& X);

// All elliptic trace-zero matrices; (q-1)/2 * (q-1)q of them.  Capped at q <= 19.
std::vector<Mat2> enumerate_elliptic(const PrimeField& F);

// Partition of a set of trace-zero matrices into Adjoint SL(2,F_q)-orbits.
std::vector<std::vector<Mat2>> adjoint_orbits(const PrimeField& F, const std::vector<Mat2>& elems);

// sum over all elliptic e of psi(trace(z e)); equals q for every elliptic z
CycloSum elliptic_psi_sum(const PrimeField& F, const Mat2& z);

// sum over (a,b) in (F_q^x)^2 of psi(ua) psi(vb); equals 1 for all units u, v
CycloSum ramified_pair_sum(const PrimeField& F, long long u, long long v);

std::vector<Mat2> enumerate_sl2(const PrimeField& F);

enum class ClassLabel { Id, MinusId, BetaPow, UpperU1, UpperUeps, MinusU1, MinusUeps, Split, Other };

struct ConjClass {
  Mat2 representative;
  long long size = 0;
  ClassLabel label = ClassLabel::Other;
  int beta_power = 0;  // for BetaPow: the exponent k in 1..(q-1)/2
};

// Brute-force conjugacy classes of SL(2,F_q); budget q <= 13.
struct ConjugacyData {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // indexed by mat_key
  long long group_order = 0;
};

// Cuspidal character table of SL(2,F_q).  beta generates the elliptic torus
// of order q+1; the labels of the chi_i depend on this choice, every summed
// quantity downstream does not.
class CuspidalTable {
 public:
  explicit CuspidalTable(long long q);
  // pin the torus generator; the chi_i labels move with it, the summed
  // quantities do not
  CuspidalTable(long long q, const Mat2& beta);

  long long q() const { return F_.p(); }
  const PrimeField& field() const { return F_; }
  Mat2 beta() const { return beta_; }
  long long epsilon() const { return epsilon_; }
  const ConjugacyData& conjugacy() const { return conj_; }

  // chi_i on a class given by its label; values are in Z[zeta_{q+1}]
  CycloSum chi(int i, ClassLabel label, int beta_power = 0) const;
  // chi_i at an arbitrary group element
  CycloSum chi_at(int i, const Mat2& g) const;

  // <chi_i, chi_j> over the brute-force classes; exact, and always rational
  Rational inner_product(int i, int j) const;

 private:
  void build_labels();

  PrimeField F_;
  long long epsilon_;
  Mat2 beta_;
  ConjugacyData conj_;
};

ConjugacyData conjugacy_classes(const PrimeField& F);

}  // namespace sl2p
