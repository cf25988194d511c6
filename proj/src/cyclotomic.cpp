#include "sl2p/cyclotomic.hpp"

#include <algorithm>
#include <cmath>

namespace sl2p {

namespace {

struct PrimePower {
  long long p;
  long long pk;   // p^M
  long long phi;  // (p-1)*p^(M-1)
  long long step; // p^(M-1)
};

std::vector<PrimePower> factor(long long n) {
  std::vector<PrimePower> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower f{p, 1, 0, 1};
    while (n % p == 0) {
      f.pk *= p;
      n /= p;
    }
    f.step = f.pk / p;
    f.phi = f.step * (p - 1);
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, n, n - 1, 1});
  return out;
}

// common scale for adding two sums: counts become integer multiples
Rational common_scale(const Rational& a, const Rational& b) {
  long long num = std::gcd(std::abs(a.num()), std::abs(b.num()));
  long long den = std::lcm(a.den(), b.den());
  if (num == 0) num = 1;
  return Rational(num, den);
}

}  // namespace

CycloSum CycloSum::lifted(long long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("CycloSum::lifted: new order not a multiple");
  long long f = new_order / order_;
  CycloSum s(new_order);
  for (long long j = 0; j < order_; ++j) s.counts_[static_cast<size_t>(j * f)] = counts_[static_cast<size_t>(j)];
  s.scale_ = scale_;
  return s;
}

CycloSum& CycloSum::operator+=(const CycloSum& o) {
  long long L = std::lcm(order_, o.order_);
  CycloSum a = lifted(L);
  CycloSum b = o.lifted(L);
  Rational s = common_scale(a.scale_, b.scale_);
  long long ma = (a.scale_ / s).as_integer();
  long long mb = (b.scale_ / s).as_integer();
  for (long long j = 0; j < L; ++j)
    a.counts_[static_cast<size_t>(j)] = checked_add(checked_mul(a.counts_[static_cast<size_t>(j)], ma),
                                                    checked_mul(b.counts_[static_cast<size_t>(j)], mb));
  a.scale_ = s;
  return *this = a;
}

CycloSum& CycloSum::operator-=(const CycloSum& o) { return *this += o * Rational(-1); }

CycloSum operator*(const CycloSum& a, const CycloSum& b) {
  long long L = std::lcm(a.order_, b.order_);
  CycloSum x = a.lifted(L);
  CycloSum y = b.lifted(L);
  CycloSum r(L);
  for (long long i = 0; i < L; ++i) {
    if (x.counts_[static_cast<size_t>(i)] == 0) continue;
    for (long long j = 0; j < L; ++j) {
      if (y.counts_[static_cast<size_t>(j)] == 0) continue;
      size_t k = static_cast<size_t>((i + j) % L);
      r.counts_[k] = checked_add(r.counts_[k], checked_mul(x.counts_[static_cast<size_t>(i)],
                                                           y.counts_[static_cast<size_t>(j)]));
    }
  }
  r.scale_ = x.scale_ * y.scale_;
  return r;
}

CycloSum CycloSum::conj() const {
  CycloSum s(order_);
  for (long long j = 0; j < order_; ++j)
    s.counts_[static_cast<size_t>((order_ - j) % order_)] = counts_[static_cast<size_t>(j)];
  s.scale_ = scale_;
  return s;
}

std::vector<long long> CycloSum::reduced() const {
  auto fac = factor(order_);
  if (fac.empty()) return counts_;  // order 1

  // CRT layout: index j maps to digits (j mod p_i^{M_i}) in a mixed-radix array
  size_t naxes = fac.size();
  std::vector<long long> dims(naxes), strides(naxes);
  long long total = 1;
  for (size_t i = 0; i < naxes; ++i) {
    dims[i] = fac[i].pk;
    strides[i] = total;
    total *= dims[i];
  }
  std::vector<long long> t(static_cast<size_t>(total), 0);
  for (long long j = 0; j < order_; ++j) {
    if (counts_[static_cast<size_t>(j)] == 0) continue;
    long long idx = 0;
    for (size_t i = 0; i < naxes; ++i) idx += (j % dims[i]) * strides[i];
    t[static_cast<size_t>(idx)] = checked_add(t[static_cast<size_t>(idx)], counts_[static_cast<size_t>(j)]);
  }

  // Fold each axis: zeta^e = -sum_{k=0}^{p-2} zeta^(e-phi+k*step) for e >= phi.
  for (size_t ax = 0; ax < naxes; ++ax) {
    const auto& f = fac[ax];
    long long outer = total / dims[ax];
    for (long long o = 0; o < outer; ++o) {
      // base offset of this 1-d slice
      long long rem = o, base = 0;
      for (size_t i = 0; i < naxes; ++i) {
        if (i == ax) continue;
        base += (rem % dims[i]) * strides[i];
        rem /= dims[i];
      }
      for (long long e = dims[ax] - 1; e >= f.phi; --e) {
        long long c = t[static_cast<size_t>(base + e * strides[ax])];
        if (c == 0) continue;
        t[static_cast<size_t>(base + e * strides[ax])] = 0;
        for (long long k = 0; k + 1 < f.p; ++k) {
          size_t at = static_cast<size_t>(base + (e - f.phi + k * f.step) * strides[ax]);
          t[at] = checked_add(t[at], -c);
        }
      }
    }
  }
  return t;
}

bool CycloSum::is_zero() const {
  if (scale_.is_zero()) return true;
  auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
}

bool CycloSum::as_rational(Rational* out) const {
  auto r = reduced();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  *out = scale_ * Rational(r.empty() ? 0 : r[0]);
  return true;
}

bool CycloSum::equals(const Rational& r) const {
  CycloSum d = *this;
  d -= CycloSum::constant(order_, r);
  return d.is_zero();
}

std::complex<double> CycloSum::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925287;
  for (long long j = 0; j < order_; ++j) {
    if (counts_[static_cast<size_t>(j)] == 0) continue;
    double arg = tau * double(j) / double(order_);
    acc += double(counts_[static_cast<size_t>(j)]) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc * scale_.to_double();
}

}  // namespace sl2p
