#include "novk/report.hpp"

#include <memory>
#include <sstream>

#include <json.hpp>

#include "novk/fixtures.hpp"

namespace novk {

ExampleReport report_example(const std::string& which) {
  ExampleReport r;
  std::string pres_text, cx_text;
  if (which == "poincare") {
    r.name = "poincare";
    r.model_dim = 7; // T^7 # (S x S^4); any n with H_1 = H_2 = 0 behaves the same
    pres_text = fixtures::poincare_presentation();
    cx_text = fixtures::poincare_sphere_complex_json();
  } else if (which == "rp4") {
    r.name = "rp4";
    r.model_dim = 4; // T^4 # RP^4
    pres_text = fixtures::rp4_presentation();
    cx_text = fixtures::rp4_complex_json();
  } else {
    fail(ErrKind::InvalidArgument, "unknown example '" + which + "' (try poincare or rp4)");
  }

  Presentation p = parse_presentation(pres_text);
  auto table = std::make_shared<const FiniteGroupTable>(todd_coxeter(p, 10000));
  r.group_order = table->order();
  r.group_ab = abelianization(p);
  r.cyclic = is_cyclic(*table);
  r.dim_hom = dim_hom_r(p);
  r.mu = mu_dtc_bounds(*table);
  r.rho = rho_dtc_bounds(p, *table);

  ChainComplex cx = parse_chain_complex_json(cx_text);
  r.hn0 = hn_connected_sum(cx, 0, r.model_dim);
  r.hn1 = hn_connected_sum(cx, 1, r.model_dim);
  r.hn2 = hn_connected_sum(cx, 2, r.model_dim);

  auto sys = pro_abelianize(*table, r.hurewicz_window);
  r.pro_abelianization_zero = abelianization(*table).is_trivial();
  r.ml_stable = ml_check(sys, 1).stable;

  r.min_crit1 = r.mu.lower;
  r.min_crit2 = r.rho.lower;
  return r;
}

std::string render_report_text(const ExampleReport& r) {
  std::ostringstream os;
  std::string xdesc = r.name == "poincare" ? "S x S^" + std::to_string(r.model_dim - 3) +
                                                 " with S the Poincare homology sphere"
                                           : "RP^" + std::to_string(r.model_dim);
  os << "report: " << r.name << "  (M = T^n # X, X = " << xdesc << ", n = " << r.model_dim
     << ", u = class of dtheta_1)\n";
  os << "  factor group G = pi_1(X): order " << r.group_order << " by coset enumeration\n";
  os << "  abelianization of G: " << to_string(r.group_ab) << "\n";
  os << "  G cyclic: " << (r.cyclic ? "yes" : "no") << "\n";
  os << "  dim Hom(G, R) = " << r.dim_hom << "\n";
  os << "  " << to_string(r.mu, "mu_DTC") << "\n";
  for (const auto& c : r.mu.certificates) os << "    - " << c << "\n";
  os << "  " << to_string(r.rho, "rho_DTC") << "\n";
  for (const auto& c : r.rho.certificates) os << "    - " << c << "\n";
  os << "  HN_0(M, u) = " << to_string(r.hn0) << "\n";
  os << "  HN_1(M, u) = " << to_string(r.hn1) << "  [H_1(X) tensor Lambda]\n";
  os << "  HN_2(M, u) = " << to_string(r.hn2) << "  [H_2(X) tensor Lambda]\n";
  os << "  hurewicz window [" << r.hurewicz_window.lo << ", " << r.hurewicz_window.hi
     << "]: pro-abelianization is " << (r.pro_abelianization_zero ? "identically zero" : "levelwise G^ab")
     << "; Mittag-Leffler images " << (r.ml_stable ? "stabilize" : "do not stabilize") << "\n";
  os << "  conclusion: every Morse 1-form in u has at least " << r.min_crit1
     << (r.min_crit1 == 1 ? " critical point" : " critical points") << " of index 1 and "
     << r.min_crit2 << " of index 2";
  if (r.hn1.is_zero() && r.hn2.is_zero())
    os << "; HN_1 = HN_2 = 0, so Novikov homology alone detects none of them";
  os << "\n";
  return os.str();
}

namespace {

nlohmann::json bound_json(const BoundReport& b) {
  nlohmann::json j;
  j["lower"] = b.lower;
  if (b.upper)
    j["upper"] = *b.upper;
  else
    j["upper"] = nullptr;
  j["certificates"] = b.certificates;
  return j;
}

nlohmann::json module_json(const NovikovModule& m) {
  nlohmann::json j;
  j["free_rank"] = m.free_rank;
  j["torsion"] = nlohmann::json::array();
  for (const auto& t : m.torsion) j["torsion"].push_back(t.str());
  j["pretty"] = to_string(m);
  return j;
}

} // namespace

std::string render_report_json(const ExampleReport& r) {
  nlohmann::json j;
  j["example"] = r.name;
  j["model_dim"] = r.model_dim;
  j["group"]["order"] = r.group_order;
  j["group"]["abelianization"]["rank"] = r.group_ab.rank;
  j["group"]["abelianization"]["torsion"] = nlohmann::json::array();
  for (const auto& t : r.group_ab.torsion)
    j["group"]["abelianization"]["torsion"].push_back(t.str());
  j["group"]["cyclic"] = r.cyclic;
  j["dim_hom_R"] = r.dim_hom;
  j["mu_dtc"] = bound_json(r.mu);
  j["rho_dtc"] = bound_json(r.rho);
  j["novikov_homology"]["HN0"] = module_json(r.hn0);
  j["novikov_homology"]["HN1"] = module_json(r.hn1);
  j["novikov_homology"]["HN2"] = module_json(r.hn2);
  j["hurewicz"]["window"] = {r.hurewicz_window.lo, r.hurewicz_window.hi};
  j["hurewicz"]["pro_abelianization_zero"] = r.pro_abelianization_zero;
  j["hurewicz"]["mittag_leffler_stable"] = r.ml_stable;
  j["critical_points"]["min_index1"] = r.min_crit1;
  j["critical_points"]["min_index2"] = r.min_crit2;
  return j.dump(2) + "\n";
}

} // namespace novk
