#include "sl2p/fq.hpp"

namespace sl2p {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(long long p) : p_(p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("PrimeField: p must be an odd prime >= 3");
}

long long PrimeField::pow(long long a, long long e) const {
  a = reduce(a);
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long long PrimeField::inv(long long a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("PrimeField::inv(0)");
  return pow(a, p_ - 2);
}

int PrimeField::sgn(long long a) const {
  a = reduce(a);
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

long long PrimeField::smallest_nonsquare() const {
  for (long long a = 2; a < p_; ++a)
    if (sgn(a) == -1) return a;
  throw std::logic_error("PrimeField: no non-square found");
}

CycloSum gauss_sum(long long p) { return gauss_sum_twisted(p, 1); }

CycloSum gauss_sum_twisted(long long p, long long a) {
  PrimeField F(p);
  CycloSum g(p);
  for (long long x = 1; x < p; ++x) g.add_root(F.mul(F.reduce(a), x), F.sgn(x));
  return g;
}

}  // namespace sl2p
