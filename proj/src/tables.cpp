#include "sl2p/tables.hpp"

#include <sstream>

#include <json.hpp>

namespace sl2p {

namespace {

using TableFn = Rational (*)(long long, HalfInt, const RegSSClass&);

std::vector<DepthTable> build(long long q, HalfInt depth_max, TableFn sigma_fn, TableFn e_fn) {
  auto grid = class_grid(depth_max);
  std::vector<DepthTable> out;
  auto add = [&](const std::string& name, HalfInt d, TableFn fn) {
    DepthTable t{name, q, d, {}};
    for (const auto& c : grid) t.rows.push_back({c, fn(q, d, c)});
    out.push_back(std::move(t));
  };
  add("e0", HalfInt::whole(0), e_fn);
  for (HalfInt d = HalfInt::half(1); d <= depth_max; d = d + HalfInt::half(1)) {
    if (d.is_integral())
      add("cusp", d, [](long long qq, HalfInt dd, const RegSSClass& c) { return cusp_integral(qq, dd, c); });
    else
      add("e", d, [](long long qq, HalfInt dd, const RegSSClass& c) { return e_half_integral(qq, dd, c); });
  }
  for (HalfInt d = HalfInt::whole(0); d <= depth_max; d = d + HalfInt::half(1)) add("sigma", d, sigma_fn);
  return out;
}

}  // namespace

std::vector<DepthTable> make_tables(long long q, HalfInt depth_max) {
  return build(
      q, depth_max, [](long long qq, HalfInt d, const RegSSClass& c) { return sigma(qq, d, c); },
      [](long long qq, HalfInt d, const RegSSClass& c) {
        (void)d;
        return e_zero(qq, c);
      });
}

std::vector<DepthTable> make_tables_by_summation(long long q, HalfInt depth_max) {
  return build(
      q, depth_max, [](long long qq, HalfInt d, const RegSSClass& c) { return sigma_summed(qq, d, c); },
      [](long long qq, HalfInt d, const RegSSClass& c) {
        (void)d;
        return e_zero_rebuilt(qq, c);
      });
}

std::string tables_to_markdown(const std::vector<DepthTable>& tables) {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << "## " << t.name << "  (q = " << t.q << ", depth = " << t.depth.str() << ")\n\n";
    os << "| class | value |\n|---|---|\n";
    for (const auto& r : t.rows) os << "| " << r.cls.str() << " | " << r.value.str() << " |\n";
    os << "\n";
  }
  return os.str();
}

std::string tables_to_csv(const std::vector<DepthTable>& tables) {
  std::ostringstream os;
  os << "table,q,depth,class,value_num,value_den,q_exponent\n";
  for (const auto& t : tables)
    for (const auto& r : t.rows)
      os << t.name << "," << t.q << "," << t.depth.str() << "," << r.cls.str() << "," << r.value.num()
         << "," << r.value.den() << ",0\n";
  return os.str();
}

std::string tables_to_json(const std::vector<DepthTable>& tables) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json jt;
    jt["table"] = t.name;
    jt["q"] = t.q;
    jt["depth"] = t.depth.str();
    jt["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows)
      jt["rows"].push_back({{"class", r.cls.str()},
                            {"value_num", r.value.num()},
                            {"value_den", r.value.den()},
                            {"q_exponent", 0}});
    out.push_back(jt);
  }
  return out.dump(2) + "\n";
}

CensusTable make_census(long long q, HalfInt depth_max) {
  CensusTable t{q, {}};
  for (HalfInt d = HalfInt::half(1); d <= depth_max; d = d + HalfInt::half(1))
    t.records.push_back(supercuspidal_census(q, d));
  return t;
}

namespace {

// QPow serialized as coefficient plus half-integer exponent of q
void qpow_fields(const QPow& v, long long& num, long long& den, std::string& qexp) {
  num = v.coeff().num();
  den = v.coeff().den();
  qexp = v.has_half_exp() ? "1/2" : "0";
}

}  // namespace

std::string census_to_markdown(const CensusTable& t) {
  std::ostringstream os;
  os << "## supercuspidal census  (q = " << t.q << ")\n\n";
  os << "| depth | per-family count | total count | formal degree | multiplicity | orbits |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : t.records) {
    os << "| " << r.depth.str() << " | ";
    if (r.depth.is_integral())
      os << r.count_per_family.str() << " | " << r.count_total.str() << " | ";
    else
      os << "- | - | ";
    os << r.formal_degree.str() << " | " << r.multiplicity.str() << " | ";
    if (r.depth.is_integral())
      os << "-";
    else
      os << r.orbit_count << " orbits x " << r.characters_per_orbit.str() << " chars, "
         << r.classes_per_induced.str() << " classes per induced";
    os << " |\n";
  }
  os << "\n";
  return os.str();
}

std::string census_to_csv(const CensusTable& t) {
  std::ostringstream os;
  os << "q,depth,count_per_family_num,count_per_family_den,count_total_num,count_total_den,"
        "formal_degree_num,formal_degree_den,formal_degree_qexp,multiplicity_num,multiplicity_den,"
        "multiplicity_qexp,orbit_count,characters_per_orbit,classes_per_induced\n";
  for (const auto& r : t.records) {
    long long fn, fd2;
    std::string fq;
    qpow_fields(r.formal_degree, fn, fd2, fq);
    long long mn, md;
    std::string mq;
    qpow_fields(r.multiplicity, mn, md, mq);
    os << t.q << "," << r.depth.str() << "," << r.count_per_family.num() << ","
       << r.count_per_family.den() << "," << r.count_total.num() << "," << r.count_total.den() << ","
       << fn << "," << fd2 << "," << fq << "," << mn << "," << md << "," << mq << "," << r.orbit_count
       << "," << r.characters_per_orbit.str() << "," << r.classes_per_induced.str() << "\n";
  }
  return os.str();
}

std::string census_to_json(const CensusTable& t) {
  nlohmann::json out;
  out["q"] = t.q;
  out["records"] = nlohmann::json::array();
  for (const auto& r : t.records) {
    nlohmann::json jr;
    jr["depth"] = r.depth.str();
    long long fn, fd2;
    std::string fq;
    qpow_fields(r.formal_degree, fn, fd2, fq);
    jr["formal_degree"] = {{"value_num", fn}, {"value_den", fd2}, {"q_exponent", fq}};
    long long mn, md;
    std::string mq;
    qpow_fields(r.multiplicity, mn, md, mq);
    jr["multiplicity"] = {{"value_num", mn}, {"value_den", md}, {"q_exponent", mq}};
    if (r.depth.is_integral()) {
      jr["count_per_family"] = {{"value_num", r.count_per_family.num()},
                                {"value_den", r.count_per_family.den()}};
      jr["count_total"] = {{"value_num", r.count_total.num()}, {"value_den", r.count_total.den()}};
    } else {
      jr["nondegenerate_characters"] = r.nondegenerate_characters;
      jr["orbit_count"] = r.orbit_count;
      jr["characters_per_orbit"] = r.characters_per_orbit.str();
      jr["classes_per_induced"] = r.classes_per_induced.str();
    }
    out["records"].push_back(jr);
  }
  return out.dump(2) + "\n";
}

}  // namespace sl2p
