#include "z2dyn/report.hpp"

#include <sstream>

namespace z2dyn {

namespace {

std::string dec(const ExactInt& v) { return v.str(); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Json balls_to_json(const std::vector<Ball>& balls) {
  Json arr = Json::array();
  for (const auto& b : balls) arr.push_back(ball_to_json(b));
  return arr;
}

void append_balls(std::ostringstream& os, const std::vector<Ball>& balls,
                  const std::string& indent) {
  for (const auto& b : balls) os << indent << b.str() << "\n";
}

}  // namespace

Json report_envelope(Json command, Json payload) {
  Json doc;
  doc["schema_version"] = "1";
  doc["command"] = std::move(command);
  doc["payload"] = std::move(payload);
  return doc;
}

Json error_document(const std::string& code, const std::string& message) {
  Json doc;
  doc["schema_version"] = "1";
  doc["error"] = Json{{"code", code}, {"message", message}};
  return doc;
}

Json ball_to_json(const Ball& b) {
  Json j;
  j["center"] = dec(b.center.value());
  j["level"] = b.level();
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["max_level"] = d.max_level;
  j["periodic_localizations"] = balls_to_json(d.periodic_localizations);
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json jc;
    jc["balls"] = balls_to_json(c.balls);
    jc["cycle_length"] = c.cycle_length;
    jc["status"] = status_name(c.status);
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  Json basins = Json::array();
  for (const auto& b : d.basins) {
    Json jb;
    jb["region"] = balls_to_json(b.region);
    jb["attractor_orbit"] = balls_to_json(b.attractor_orbit);
    jb["period"] = b.period;
    basins.push_back(std::move(jb));
  }
  j["basins"] = std::move(basins);
  j["unresolved"] = balls_to_json(d.unresolved);
  const auto balls = d.all_balls();
  j["measure_sum"] = rational_str(measure_sum(balls));
  j["pairwise_disjoint"] = pairwise_disjoint(balls);
  return j;
}

Json classification_to_json(const std::string& poly_text, int level,
                            const std::vector<Cycle>& cycles,
                            const std::vector<CycleClass>& classes) {
  Json j;
  j["poly"] = poly_text;
  j["level"] = level;
  Json arr = Json::array();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    Json jc;
    Json pts = Json::array();
    for (const auto& p : cycles[i].points()) pts.push_back(dec(p.value()));
    jc["points"] = std::move(pts);
    jc["length"] = cycles[i].length();
    jc["behavior"] = behavior_name(classes[i].behavior);
    jc["multiplier_mod4"] = classes[i].mult_mod4;
    if (classes[i].disp_mod2)
      jc["displacement_mod2"] = *classes[i].disp_mod2;
    else
      jc["displacement_mod2"] = nullptr;
    arr.push_back(std::move(jc));
  }
  j["cycles"] = std::move(arr);
  return j;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["m"] = r.m;
  j["budget"] = r.budget;
  j["case"] = r.odd_case ? "odd" : "even";
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  if (r.odd_case) {
    j["matched_components"] = r.matched;
    j["missing"] = balls_to_json(r.missing);
    j["extra"] = balls_to_json(r.extra);
    j["checks"] = Json{{"fixed_points_exact", r.fixed_points_exact},
                       {"periodic_localized", r.periodic_localized},
                       {"residual_matches", r.residual_matches},
                       {"recertified", r.recertified}};
  } else {
    j["checks"] = Json{{"fixed_points_exact", r.fixed_points_exact}, {"basin", r.basin_ok}};
  }
  j["failures"] = r.failures;
  return j;
}

Json coeff_report_to_json(long m, const IntPolynomial& T, const CoeffValuationReport* check) {
  Json j;
  j["m"] = m;
  Json coeffs = Json::array();
  for (long k = 0; k <= T.degree(); ++k) coeffs.push_back(dec(T.coeff(k)));
  j["coefficients"] = std::move(coeffs);
  if (check) {
    Json jc;
    jc["s"] = check->s;
    jc["odd_coefficient_v2"] = check->odd_coeff_v2;
    jc["pass"] = check->pass;
    jc["violations"] = check->violations;
    j["valuation_check"] = std::move(jc);
  }
  return j;
}

Json minimality_to_json(const std::string& poly_text, const std::vector<Ball>& balls,
                        int check_level, bool minimal) {
  Json j;
  j["poly"] = poly_text;
  j["balls"] = balls_to_json(balls);
  j["check_level"] = check_level;
  j["minimal"] = minimal;
  return j;
}

std::string decomposition_to_text(const Decomposition& d) {
  std::ostringstream os;
  os << "decomposition to level " << d.max_level << "\n";
  os << "periodic points localized in (" << d.periodic_localizations.size() << "):\n";
  append_balls(os, d.periodic_localizations, "  ");
  os << "minimal components (" << d.components.size() << "):\n";
  for (const auto& c : d.components) {
    os << "  [" << status_name(c.status) << "] cycle length " << c.cycle_length << ":";
    for (const auto& b : c.balls) os << " " << b.str() << ";";
    os << "\n";
  }
  os << "basins (" << d.basins.size() << "):\n";
  for (const auto& b : d.basins) {
    os << "  region measure " << rational_str(measure_sum(b.region)) << ", period " << b.period
       << ", attractor:";
    for (const auto& a : b.attractor_orbit) os << " " << a.str() << ";";
    os << "\n    region:";
    for (const auto& r : b.region) os << " " << r.str() << ";";
    os << "\n";
  }
  os << "unresolved (" << d.unresolved.size() << "):\n";
  append_balls(os, d.unresolved, "  ");
  const auto balls = d.all_balls();
  os << "measure sum: " << rational_str(measure_sum(balls))
     << "; pairwise disjoint: " << (pairwise_disjoint(balls) ? "yes" : "no") << "\n";
  return os.str();
}

std::string classification_to_text(int level, const std::vector<Cycle>& cycles,
                                   const std::vector<CycleClass>& classes) {
  std::ostringstream os;
  os << "cycles at level " << level << " (" << cycles.size() << "):\n";
  for (std::size_t i = 0; i < cycles.size(); ++i)
    os << "  " << cycles[i].str() << ": " << classes[i].str() << "\n";
  return os.str();
}

std::string verification_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verify m=" << r.m << " to level " << r.budget << " [" << (r.odd_case ? "odd" : "even")
     << " case]: " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (r.odd_case) {
    os << "  matched components: " << r.matched << "\n";
    os << "  missing: " << r.missing.size() << ", extra: " << r.extra.size() << "\n";
    os << "  fixed points exact: " << (r.fixed_points_exact ? "yes" : "no")
       << "; periodic localized: " << (r.periodic_localized ? "yes" : "no")
       << "; residual matches: " << (r.residual_matches ? "yes" : "no")
       << "; re-certified: " << (r.recertified ? "yes" : "no") << "\n";
  } else {
    os << "  fixed point exact: " << (r.fixed_points_exact ? "yes" : "no")
       << "; single basin onto 1: " << (r.basin_ok ? "yes" : "no") << "\n";
  }
  for (const auto& f : r.failures) os << "  failure: " << f << "\n";
  return os.str();
}

std::string coeff_report_to_text(long m, const IntPolynomial& T,
                                 const CoeffValuationReport* check) {
  std::ostringstream os;
  os << "degree-" << m << " polynomial: ";
  for (long k = T.degree(); k >= 0; --k) {
    if (T.coeff(k) == 0) continue;
    os << "c_" << k << "=" << T.coeff(k) << " ";
  }
  os << "\n";
  if (check) {
    os << "odd-coefficient 2-adic valuations:";
    for (auto v : check->odd_coeff_v2) os << " " << v;
    os << "\ns = " << check->s << ": " << (check->pass ? "PASS" : "FAIL") << "\n";
    for (const auto& v : check->violations) os << "  violation: " << v << "\n";
  }
  return os.str();
}

std::string minimality_to_text(const std::vector<Ball>& balls, int check_level, bool minimal) {
  std::ostringstream os;
  os << "minimality of";
  for (const auto& b : balls) os << " " << b.str() << ";";
  os << " checked to level " << check_level << ": " << (minimal ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace z2dyn
