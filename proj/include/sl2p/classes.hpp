#pragma once

#include <optional>
#include <string>

#include "sl2p/rational.hpp"

namespace sl2p {

enum class TorusType { Split, EllipticUnramified, EllipticRamified };
// whether y itself, or -y, is topologically unipotent; None for the
// strongly regular and non-compact cases
enum class CentralSign { Plus, Minus, None };

enum class CompactKind { TopUnipotent, MinusTopUnipotent, StronglyRegular, NonCompact };

// Descriptor of a regular semisimple conjugacy class of SL(2,F).  Everything
// in the depth tables is a function of (torus type, sign, m) with
// m = val(1 - sign*alpha); split classes optionally carry the residue of
// alpha mod p^f for evaluating single-character principal series projectors.
class RegSSClass {
 public:
  static RegSSClass split_top(HalfInt m, std::optional<long long> residue = {});
  static RegSSClass split_minus(HalfInt m, std::optional<long long> residue = {});
  static RegSSClass split_strongly_regular(std::optional<long long> residue = {});
  static RegSSClass unramified_top(HalfInt m);
  static RegSSClass unramified_minus(HalfInt m);
  static RegSSClass unramified_strongly_regular();
  static RegSSClass ramified_top(HalfInt m);
  static RegSSClass ramified_minus(HalfInt m);
  static RegSSClass noncompact(int eigenvalue_valuation);

  TorusType torus() const { return torus_; }
  CentralSign sign() const { return sign_; }
  HalfInt m() const { return m_; }
  bool compact() const { return compact_; }
  bool strongly_regular() const { return compact_ && sign_ == CentralSign::None; }
  std::optional<long long> residue_unit() const { return residue_; }
  int eigenvalue_valuation() const { return noncompact_val_; }

  RegSSClass with_residue(long long r) const {
    RegSSClass c = *this;
    c.residue_ = r;
    return c;
  }
  // same torus and sign, m shifted by a whole step (homogeneity transport)
  RegSSClass with_m_plus_one() const;

  CompactKind compact_partition() const;
  // |alpha - alpha^-1| as an exact power of q (half-integral exponent for
  // ramified classes); requires a compact class
  QPow norm_alpha_diff(long long q) const;
  // membership of the class in U^top_{d+}
  bool in_utop_domain(HalfInt d) const;

  // canonical form, e.g. "split:+1:m=2", "ram:-1:m=3/2", "unram:sr",
  // "split:sr:u=2", "split:nc:v=1"
  std::string str() const;
  static RegSSClass parse(const std::string& s);

  friend bool operator==(const RegSSClass&, const RegSSClass&);
  // canonical grid order: torus, then sign bucket, then m
  friend bool operator<(const RegSSClass&, const RegSSClass&);

 private:
  RegSSClass() = default;
  static RegSSClass make(TorusType t, CentralSign s, HalfInt m, bool compact, int nc_val,
                         std::optional<long long> residue);

  TorusType torus_ = TorusType::Split;
  CentralSign sign_ = CentralSign::None;
  HalfInt m_;
  bool compact_ = true;
  int noncompact_val_ = 0;
  std::optional<long long> residue_;
};

enum class SquareClass { SquareUnit, NonSquareUnit, OddValuation };

// Class of exp(Y) for Y regular semisimple topologically nilpotent with
// eigenvalues +-lambda: torus type from the square class of -det(Y),
// m = val(det Y)/2 = val(lambda).  Convergence needs p >= 5 or m >= 1.
RegSSClass lie_class_of(long long p, HalfInt det_valuation_halved, SquareClass minus_det_class);

}  // namespace sl2p
