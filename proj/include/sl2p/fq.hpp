#pragma once

#include <vector>

#include "sl2p/cyclotomic.hpp"

namespace sl2p {

bool is_odd_prime(long long p);

// Arithmetic in the prime field F_p, p an odd prime.  Prime-power fields are
// out of scope: every identity we check is already nontrivial for prime q.
class PrimeField {
 public:
  explicit PrimeField(long long p);

  long long p() const { return p_; }
  long long add(long long a, long long b) const { return (a + b) % p_; }
  long long sub(long long a, long long b) const { return ((a - b) % p_ + p_) % p_; }
  long long mul(long long a, long long b) const { return (a * b) % p_; }
  long long neg(long long a) const { return (p_ - a % p_) % p_; }
  long long pow(long long a, long long e) const;
  long long inv(long long a) const;
  long long reduce(long long a) const { return ((a % p_) + p_) % p_; }

  // quadratic character: +1 square, -1 non-square, 0 zero
  int sgn(long long a) const;
  bool is_square(long long a) const { return sgn(a) >= 0 && (a % p_ == 0 || sgn(a) == 1); }
  long long smallest_nonsquare() const;

  // additive character psi(x) = zeta_p^x (conductor-one character of F_p)
  CycloSum psi(long long x) const { return CycloSum::root(p_, reduce(x)); }

 private:
  long long p_;
};

// G(psi, sgn) = sum_{a in F_p^x} sgn(a) psi(a); satisfies G^2 = sgn(-1) p.
CycloSum gauss_sum(long long p);

// G(psi_a, sgn) with psi_a(x) = psi(ax)
CycloSum gauss_sum_twisted(long long p, long long a);

}  // namespace sl2p
