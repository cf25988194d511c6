#include "sl2p/sl2fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2p {

Mat2 mul(const PrimeField& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

long long det(const PrimeField& F, const Mat2& x) { return F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c)); }
long long trace(const PrimeField& F, const Mat2& x) { return F.add(x.a, x.d); }
Mat2 neg(const PrimeField& F, const Mat2& x) { return {F.neg(x.a), F.neg(x.b), F.neg(x.c), F.neg(x.d)}; }

Mat2 conjugate(const PrimeField& F, const Mat2& g, const Mat2& x) {
  long long dg = det(F, g);
  long long di = F.inv(dg);
  Mat2 ginv{F.mul(g.d, di), F.mul(F.neg(g.b), di), F.mul(F.neg(g.c), di), F.mul(g.a, di)};
  return mul(F, mul(F, g, x), ginv);
}

long long mat_key(const PrimeField& F, const Mat2& x) {
  long long p = F.p();
  return ((x.a * p + x.b) * p + x.c) * p + x.d;
}

std::string mat_str(const Mat2& x) {
  return "[[" + std::to_string(x.a) + "," + std::to_string(x.b) + "],[" + std::to_string(x.c) + "," +
         std::to_string(x.d) + "]]";
}

LieKind classify_lie(const PrimeField& F, const Mat2& X) {
  if (trace(F, X) != 0) throw std::invalid_argument("classify_lie: nonzero trace");
  if (X.a == 0 && X.b == 0 && X.c == 0 && X.d == 0) return LieKind::Zero;
  int s = F.sgn(F.neg(det(F, X)));
  if (s == 0) return LieKind::Nilpotent;
  return s == 1 ? LieKind::SplitRegular : LieKind::Elliptic;
}

std::vector<Mat2> enumerate_elliptic(const PrimeField& F) {
  if (F.p() > 19) throw std::invalid_argument("enumerate_elliptic: budget is q <= 19");
  std::vector<Mat2> out;
  for (long long a = 0; a < F.p(); ++a)
    for (long long b = 0; b < F.p(); ++b)
      for (long long c = 0; c < F.p(); ++c) {
        Mat2 X{a, b, c, F.neg(a)};
        if (F.sgn(F.neg(det(F, X))) == -1) out.push_back(X);
      }
  return out;
}

std::vector<Mat2> enumerate_sl2(const PrimeField& F) {
  std::vector<Mat2> out;
  out.reserve(static_cast<size_t>(F.p() * (F.p() * F.p() - 1)));
  for (long long a = 0; a < F.p(); ++a)
    for (long long b = 0; b < F.p(); ++b)
      for (long long c = 0; c < F.p(); ++c)
        for (long long d = 0; d < F.p(); ++d)
          if (det(F, Mat2{a, b, c, d}) == 1) out.push_back({a, b, c, d});
  return out;
}

std::vector<std::vector<Mat2>> adjoint_orbits(const PrimeField& F, const std::vector<Mat2>& elems) {
  auto group = enumerate_sl2(F);
  std::map<Mat2, bool> seen;
  for (const auto& x : elems) seen[x] = false;
  std::vector<std::vector<Mat2>> orbits;
  for (const auto& x : elems) {
    if (seen[x]) continue;
    std::vector<Mat2> orbit;
    for (const auto& g : group) {
      Mat2 y = conjugate(F, g, x);
      auto it = seen.find(y);
      if (it == seen.end()) throw std::logic_error("adjoint_orbits: orbit leaves the input set");
      if (!it->second) {
        it->second = true;
        orbit.push_back(y);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

CycloSum elliptic_psi_sum(const PrimeField& F, const Mat2& z) {
  if (classify_lie(F, z) != LieKind::Elliptic)
    throw std::invalid_argument("elliptic_psi_sum: z must be elliptic");
  CycloSum acc(F.p());
  for (const auto& e : enumerate_elliptic(F)) acc.add_root(trace(F, mul(F, z, e)));
  return acc;
}

CycloSum ramified_pair_sum(const PrimeField& F, long long u, long long v) {
  u = F.reduce(u);
  v = F.reduce(v);
  if (u == 0 || v == 0) throw std::invalid_argument("ramified_pair_sum: u, v must be units");
  CycloSum acc(F.p());
  for (long long a = 1; a < F.p(); ++a)
    for (long long b = 1; b < F.p(); ++b) acc.add_root(F.add(F.mul(u, a), F.mul(v, b)));
  return acc;
}

namespace {

long long element_order(const PrimeField& F, const Mat2& g) {
  Mat2 id{1, 0, 0, 1};
  Mat2 x = g;
  long long n = 1;
  while (!(x == id)) {
    x = mul(F, x, g);
    ++n;
    if (n > F.p() * (F.p() + 1)) throw std::logic_error("element_order: runaway");
  }
  return n;
}

// unipotent class invariant: conjugates of [[1,b],[0,1]] are classified by
// the square class of b
ClassLabel unipotent_label(const PrimeField& F, const Mat2& g, bool negated) {
  Mat2 u = negated ? neg(F, g) : g;  // now u = Id + N with N nilpotent
  long long y = u.b, z = u.c;
  // u is conjugate to [[1,b],[0,1]] with b of square class -z (if z != 0) or y
  long long b = z != 0 ? F.neg(z) : y;
  int s = F.sgn(b);
  if (s == 0) throw std::logic_error("unipotent_label: not a regular unipotent");
  if (s == 1) return negated ? ClassLabel::MinusU1 : ClassLabel::UpperU1;
  return negated ? ClassLabel::MinusUeps : ClassLabel::UpperUeps;
}

}  // namespace

ConjugacyData conjugacy_classes(const PrimeField& F) {
  if (F.p() > 13)
    throw std::invalid_argument("conjugacy_classes: brute-force budget is q <= 13");
  auto group = enumerate_sl2(F);
  long long p = F.p();
  ConjugacyData data;
  data.group_order = static_cast<long long>(group.size());
  data.class_of.assign(static_cast<size_t>(p * p * p * p), -1);

  for (const auto& x : group) {
    if (data.class_of[static_cast<size_t>(mat_key(F, x))] != -1) continue;
    int id = static_cast<int>(data.classes.size());
    ConjClass cls;
    cls.representative = x;
    for (const auto& g : group) {
      long long k = mat_key(F, conjugate(F, g, x));
      if (data.class_of[static_cast<size_t>(k)] == -1) {
        data.class_of[static_cast<size_t>(k)] = id;
        ++cls.size;
      }
    }
    data.classes.push_back(cls);
  }

  long long total = 0;
  for (const auto& c : data.classes) total += c.size;
  if (total != data.group_order) throw std::logic_error("conjugacy_classes: sizes do not partition G");
  return data;
}

CuspidalTable::CuspidalTable(long long q) : F_(q), epsilon_(F_.smallest_nonsquare()) {
  // beta: an element of order q+1 (its characteristic polynomial is then
  // automatically irreducible); scan order follows enumerate_sl2
  bool found = false;
  for (const auto& g : enumerate_sl2(F_)) {
    if (element_order(F_, g) == q + 1) {
      beta_ = g;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("CuspidalTable: no torus generator of order q+1");
  build_labels();
}

CuspidalTable::CuspidalTable(long long q, const Mat2& beta) : F_(q), epsilon_(F_.smallest_nonsquare()) {
  if (element_order(F_, beta) != q + 1)
    throw std::invalid_argument("CuspidalTable: beta must have order q+1");
  beta_ = beta;
  build_labels();
}

void CuspidalTable::build_labels() {
  long long q = F_.p();
  conj_ = conjugacy_classes(F_);

  // attach labels to the brute-force classes
  long long p = F_.p();
  std::vector<int> beta_class(static_cast<size_t>(p + 1), -1);
  Mat2 bk{1, 0, 0, 1};
  for (int k = 1; k <= p; ++k) {
    bk = mul(F_, bk, beta_);
    beta_class[static_cast<size_t>(k)] = conj_.class_of[static_cast<size_t>(mat_key(F_, bk))];
  }
  for (auto& cls : conj_.classes) {
    const Mat2& r = cls.representative;
    if (r == Mat2{1, 0, 0, 1}) {
      cls.label = ClassLabel::Id;
      continue;
    }
    if (r == Mat2{p - 1, 0, 0, p - 1}) {
      cls.label = ClassLabel::MinusId;
      continue;
    }
    long long t = trace(F_, r);
    long long disc = F_.sub(F_.mul(t, t), 4);
    if (disc == 0) {
      cls.label = unipotent_label(F_, r, t == F_.reduce(-2));
      continue;
    }
    if (F_.sgn(disc) == 1) {
      cls.label = ClassLabel::Split;
      continue;
    }
    // elliptic: locate which beta power this class is
    int my_id = conj_.class_of[static_cast<size_t>(mat_key(F_, r))];
    for (int k = 1; k <= p; ++k) {
      if (beta_class[static_cast<size_t>(k)] == my_id) {
        cls.label = ClassLabel::BetaPow;
        cls.beta_power = k;
        break;
      }
    }
    if (cls.label != ClassLabel::BetaPow)
      throw std::logic_error("CuspidalTable: elliptic class not hit by the beta torus");
  }
}

CycloSum CuspidalTable::chi(int i, ClassLabel label, int beta_power) const {
  long long q = F_.p();
  if (i < 1 || i > q) throw std::invalid_argument("CuspidalTable::chi: need 1 <= i <= q");
  long long n = q + 1;
  switch (label) {
    case ClassLabel::Id:
      return CycloSum::constant(n, Rational(q - 1));
    case ClassLabel::MinusId:
      return CycloSum::constant(n, Rational(i % 2 == 0 ? q - 1 : -(q - 1)));
    case ClassLabel::BetaPow: {
      CycloSum s(n);
      s.add_root(static_cast<long long>(i) * beta_power, -1);
      s.add_root(-static_cast<long long>(i) * beta_power, -1);
      return s;
    }
    case ClassLabel::UpperU1:
    case ClassLabel::UpperUeps:
      return CycloSum::constant(n, Rational(-1));
    case ClassLabel::MinusU1:
    case ClassLabel::MinusUeps:
      return CycloSum::constant(n, Rational(i % 2 == 0 ? -1 : 1));  // (-1)^(i+1)
    default:
      return CycloSum::zero(n);
  }
}

CycloSum CuspidalTable::chi_at(int i, const Mat2& g) const {
  int id = conj_.class_of[static_cast<size_t>(mat_key(F_, g))];
  const ConjClass& cls = conj_.classes[static_cast<size_t>(id)];
  return chi(i, cls.label, cls.beta_power);
}

Rational CuspidalTable::inner_product(int i, int j) const {
  CycloSum acc(F_.p() + 1);
  for (const auto& cls : conj_.classes) {
    CycloSum term = chi(i, cls.label, cls.beta_power) * chi(j, cls.label, cls.beta_power).conj();
    acc += term * Rational(cls.size);
  }
  return (acc * Rational(1, conj_.group_order)).as_rational();
}

}  // namespace sl2p
