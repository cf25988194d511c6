#pragma once

#include <complex>
#include <vector>

#include "sl2p/rational.hpp"

namespace sl2p {

// Exact element of Q(zeta_n): scale * sum_j counts[j] * zeta_n^j with
// zeta_n = exp(2*pi*i/n).  Zero and rationality tests are decided exactly by
// folding the histogram onto the tensor integral basis of Z[zeta_n]: along
// each prime-power factor p^M of n, zeta^e with e >= phi(p^M) is rewritten
// through Phi_{p^M}(x) = sum_{k<p} x^{k*p^(M-1)}.  This is integer polynomial
// division by Phi_{p^M}, axis by axis; no root of unity is ever evaluated
// numerically on a verification path.
class CycloSum {
 public:
  CycloSum() : order_(1), counts_(1, 0), scale_(1) {}
  explicit CycloSum(long long order)
      : order_(order), counts_(static_cast<size_t>(order), 0), scale_(1) {
    if (order < 1) throw std::invalid_argument("CycloSum: order must be >= 1");
  }
  CycloSum(long long order, std::vector<long long> counts, Rational scale = Rational(1))
      : order_(order), counts_(std::move(counts)), scale_(scale) {
    if (order < 1 || counts_.size() != static_cast<size_t>(order))
      throw std::invalid_argument("CycloSum: histogram length must equal order");
  }

  static CycloSum zero(long long order) { return CycloSum(order); }
  static CycloSum constant(long long order, const Rational& r) {
    CycloSum s(order);
    s.counts_[0] = r.num();
    s.scale_ = Rational(1, r.den());
    return s;
  }
  // zeta_n^j
  static CycloSum root(long long order, long long j) {
    CycloSum s(order);
    s.counts_[static_cast<size_t>(((j % order) + order) % order)] = 1;
    return s;
  }

  long long order() const { return order_; }
  const std::vector<long long>& counts() const { return counts_; }
  Rational scale() const { return scale_; }

  void add_root(long long j, long long mult = 1) {
    size_t idx = static_cast<size_t>(((j % order_) + order_) % order_);
    counts_[idx] = checked_add(counts_[idx], mult);
  }

  CycloSum& operator+=(const CycloSum& o);
  CycloSum& operator-=(const CycloSum& o);
  friend CycloSum operator+(CycloSum a, const CycloSum& b) { return a += b; }
  friend CycloSum operator-(CycloSum a, const CycloSum& b) { return a -= b; }
  friend CycloSum operator*(const CycloSum& a, const CycloSum& b);
  friend CycloSum operator*(const CycloSum& a, const Rational& r) {
    CycloSum s = a;
    s.scale_ *= r;
    return s;
  }

  CycloSum conj() const;

  // lift to a multiple of the current order (indices scale by factor)
  CycloSum lifted(long long new_order) const;

  bool is_zero() const;
  bool equals(const Rational& r) const;
  // exact rational value if the element lies in Q, nullopt-style via bool
  bool as_rational(Rational* out) const;
  Rational as_rational() const {
    Rational r;
    if (!as_rational(&r)) throw std::domain_error("CycloSum: value is irrational");
    return r;
  }

  std::complex<double> to_complex() const;

 private:
  // coordinates over the tensor power basis; zero iff all coordinates vanish
  std::vector<long long> reduced() const;

  long long order_;
  std::vector<long long> counts_;
  Rational scale_;
};

}  // namespace sl2p
