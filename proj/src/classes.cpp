#include "sl2p/classes.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace sl2p {

RegSSClass RegSSClass::make(TorusType t, CentralSign s, HalfInt m, bool compact, int nc_val,
                            std::optional<long long> residue) {
  RegSSClass c;
  c.torus_ = t;
  c.sign_ = s;
  c.m_ = m;
  c.compact_ = compact;
  c.noncompact_val_ = nc_val;
  c.residue_ = residue;
  if (compact && s != CentralSign::None) {
    bool ram = t == TorusType::EllipticRamified;
    if (ram && (m.is_integral() || m < HalfInt::half(1)))
      throw std::invalid_argument("RegSSClass: ramified m must lie in 1/2 + N");
    if (!ram && (!m.is_integral() || m < HalfInt::whole(1)))
      throw std::invalid_argument("RegSSClass: split/unramified m must be an integer >= 1");
  }
  if (!compact && t != TorusType::Split)
    throw std::invalid_argument("RegSSClass: non-compact classes are split");
  return c;
}

RegSSClass RegSSClass::split_top(HalfInt m, std::optional<long long> residue) {
  return make(TorusType::Split, CentralSign::Plus, m, true, 0, residue);
}
RegSSClass RegSSClass::split_minus(HalfInt m, std::optional<long long> residue) {
  return make(TorusType::Split, CentralSign::Minus, m, true, 0, residue);
}
RegSSClass RegSSClass::split_strongly_regular(std::optional<long long> residue) {
  return make(TorusType::Split, CentralSign::None, HalfInt::whole(0), true, 0, residue);
}
RegSSClass RegSSClass::unramified_top(HalfInt m) {
  return make(TorusType::EllipticUnramified, CentralSign::Plus, m, true, 0, {});
}
RegSSClass RegSSClass::unramified_minus(HalfInt m) {
  return make(TorusType::EllipticUnramified, CentralSign::Minus, m, true, 0, {});
}
RegSSClass RegSSClass::unramified_strongly_regular() {
  return make(TorusType::EllipticUnramified, CentralSign::None, HalfInt::whole(0), true, 0, {});
}
RegSSClass RegSSClass::ramified_top(HalfInt m) {
  return make(TorusType::EllipticRamified, CentralSign::Plus, m, true, 0, {});
}
RegSSClass RegSSClass::ramified_minus(HalfInt m) {
  return make(TorusType::EllipticRamified, CentralSign::Minus, m, true, 0, {});
}
RegSSClass RegSSClass::noncompact(int eigenvalue_valuation) {
  if (eigenvalue_valuation == 0)
    throw std::invalid_argument("RegSSClass::noncompact: eigenvalue valuation must be nonzero");
  return make(TorusType::Split, CentralSign::None, HalfInt::whole(0), false,
              eigenvalue_valuation, {});
}

RegSSClass RegSSClass::with_m_plus_one() const {
  if (!compact_ || sign_ == CentralSign::None)
    throw std::domain_error("with_m_plus_one: requires a topologically (anti)unipotent class");
  RegSSClass c = *this;
  c.m_ = m_ + HalfInt::whole(1);
  c.residue_.reset();
  return c;
}

CompactKind RegSSClass::compact_partition() const {
  if (!compact_) return CompactKind::NonCompact;
  switch (sign_) {
    case CentralSign::Plus:
      return CompactKind::TopUnipotent;
    case CentralSign::Minus:
      return CompactKind::MinusTopUnipotent;
    default:
      return CompactKind::StronglyRegular;
  }
}

QPow RegSSClass::norm_alpha_diff(long long q) const {
  if (!compact_) throw std::domain_error("norm_alpha_diff: non-compact class");
  // val(alpha - alpha^-1) = val(1 - sign*alpha) since the other factor is a unit
  return QPow::make(q, Rational(1), HalfInt::whole(0) - m_);
}

bool RegSSClass::in_utop_domain(HalfInt d) const {
  if (compact_partition() != CompactKind::TopUnipotent) return false;
  // smallest admissible valuation above d: next integer for split/unramified
  // (vertex jumps), next half-odd-integer for ramified (barycenter jumps)
  HalfInt threshold = torus_ == TorusType::EllipticRamified
                          ? (d.is_integral() ? d + HalfInt::half(1) : d + HalfInt::whole(1))
                          : HalfInt::whole(d.floor() + 1);
  return m_ >= threshold;
}

std::string RegSSClass::str() const {
  std::string t = torus_ == TorusType::Split ? "split"
                  : torus_ == TorusType::EllipticUnramified ? "unram"
                                                            : "ram";
  std::string s;
  if (!compact_) {
    s = t + ":nc:v=" + std::to_string(noncompact_val_);
  } else if (sign_ == CentralSign::None) {
    s = t + ":sr";
  } else {
    s = t + (sign_ == CentralSign::Plus ? ":+1" : ":-1") + ":m=" + m_.str();
  }
  if (residue_) s += ":u=" + std::to_string(*residue_);
  return s;
}

RegSSClass RegSSClass::parse(const std::string& s) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t colon = s.find(':', pos);
    if (colon == std::string::npos) colon = s.size();
    parts.push_back(s.substr(pos, colon - pos));
    pos = colon + 1;
  }
  auto fail = [&]() -> RegSSClass {
    throw std::invalid_argument("RegSSClass: cannot parse '" + s + "'");
  };
  if (parts.size() < 2) return fail();
  TorusType t;
  if (parts[0] == "split")
    t = TorusType::Split;
  else if (parts[0] == "unram")
    t = TorusType::EllipticUnramified;
  else if (parts[0] == "ram")
    t = TorusType::EllipticRamified;
  else
    return fail();

  std::optional<long long> residue;
  if (!parts.empty() && parts.back().rfind("u=", 0) == 0) {
    residue = std::stoll(parts.back().substr(2));
    parts.pop_back();
  }

  if (parts[1] == "nc") {
    if (t != TorusType::Split || parts.size() != 3 || parts[2].rfind("v=", 0) != 0) return fail();
    return noncompact(std::stoi(parts[2].substr(2)));
  }
  if (parts[1] == "sr") {
    if (parts.size() != 2) return fail();
    if (t == TorusType::Split) return split_strongly_regular(residue);
    if (t == TorusType::EllipticUnramified) return unramified_strongly_regular();
    return fail();
  }
  if (parts.size() != 3 || parts[2].rfind("m=", 0) != 0) return fail();
  HalfInt m = HalfInt::parse(parts[2].substr(2));
  bool plus = parts[1] == "+1";
  if (!plus && parts[1] != "-1") return fail();
  switch (t) {
    case TorusType::Split:
      return plus ? split_top(m, residue) : split_minus(m, residue);
    case TorusType::EllipticUnramified:
      return plus ? unramified_top(m) : unramified_minus(m);
    default:
      return plus ? ramified_top(m) : ramified_minus(m);
  }
}

bool operator==(const RegSSClass& a, const RegSSClass& b) {
  return a.torus_ == b.torus_ && a.sign_ == b.sign_ && a.m_ == b.m_ && a.compact_ == b.compact_ &&
         a.noncompact_val_ == b.noncompact_val_ && a.residue_ == b.residue_;
}

bool operator<(const RegSSClass& a, const RegSSClass& b) {
  auto bucket = [](const RegSSClass& c) {
    if (!c.compact_) return 3;
    if (c.sign_ == CentralSign::Plus) return 0;
    if (c.sign_ == CentralSign::Minus) return 1;
    return 2;
  };
  long long ra = a.residue_.value_or(-1), rb = b.residue_.value_or(-1);
  return std::make_tuple(static_cast<int>(a.torus_), bucket(a), a.m_.twice(), a.noncompact_val_, ra) <
         std::make_tuple(static_cast<int>(b.torus_), bucket(b), b.m_.twice(), b.noncompact_val_, rb);
}

RegSSClass lie_class_of(long long p, HalfInt m, SquareClass minus_det_class) {
  if (m <= HalfInt::whole(0))
    throw std::invalid_argument("lie_class_of: Y must be topologically nilpotent (val(det) > 0)");
  // exp converges when val(lambda) > 1/(p-1)
  if (p == 3 && m <= HalfInt::half(1))
    throw std::domain_error("lie_class_of: exp does not converge for p=3, m <= 1/2");
  if ((minus_det_class == SquareClass::OddValuation) == m.is_integral())
    throw std::invalid_argument("lie_class_of: square class inconsistent with val(det)");
  switch (minus_det_class) {
    case SquareClass::SquareUnit:
      return RegSSClass::split_top(m);
    case SquareClass::NonSquareUnit:
      return RegSSClass::unramified_top(m);
    default:
      return RegSSClass::ramified_top(m);
  }
}

}  // namespace sl2p
