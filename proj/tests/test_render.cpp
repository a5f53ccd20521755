#include <doctest.h>

#include <fstream>
#include <sstream>

#include "novk/fixtures.hpp"
#include "novk/report.hpp"

using namespace novk;

TEST_CASE("poincare report content") {
  auto r = report_example("poincare");
  CHECK(r.group_order == 120);
  CHECK(r.group_ab.is_trivial());
  CHECK(!r.cyclic);
  CHECK(r.dim_hom == 0);
  CHECK(r.mu.lower == 2);
  CHECK(r.mu.upper == 2);
  CHECK(r.rho.lower == 2);
  CHECK(r.rho.upper == 2);
  CHECK(r.hn0.is_zero());
  CHECK(r.hn1.is_zero());
  CHECK(r.hn2.is_zero());
  CHECK(r.pro_abelianization_zero);
  CHECK(r.ml_stable);
  CHECK(r.min_crit1 == 2);
  CHECK(r.min_crit2 == 2);

  auto text = render_report_text(r);
  CHECK(text.find("at least 2 critical points of index 1 and 2 of index 2") != std::string::npos);
  CHECK(text.find("HN_1 = HN_2 = 0") != std::string::npos);
}

TEST_CASE("rp4 report content") {
  auto r = report_example("rp4");
  CHECK(r.group_order == 2);
  CHECK(r.cyclic);
  CHECK(r.mu.lower == 1);
  CHECK(r.mu.upper == 1);
  CHECK(r.rho.lower == 1);
  CHECK(r.rho.upper == 1);
  CHECK(to_string(r.hn1) == "Z/2((t))");
  CHECK(r.hn2.is_zero());
  CHECK(!r.pro_abelianization_zero);
  CHECK(r.ml_stable);

  auto text = render_report_text(r);
  CHECK(text.find("mu_DTC in [1, 1]") != std::string::npos);
  CHECK(text.find("rho_DTC in [1, 1]") != std::string::npos);
  CHECK(text.find("Z/2((t))") != std::string::npos);
}

TEST_CASE("report JSON matches the golden file byte for byte") {
  for (const std::string which : {"poincare", "rp4"}) {
    std::ifstream in(std::string(NOVK_TEST_DIR) + "/golden/" + which + "_report.json");
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(render_report_json(report_example(which)) == os.str());
  }
}

TEST_CASE("unknown example is a domain error") {
  CHECK_THROWS_AS((void)report_example("klein"), Error);
}

TEST_CASE("bundled fixtures are byte-identical to the data files") {
  auto slurp = [](const std::string& rel) {
    std::ifstream in(std::string(NOVK_TEST_DIR) + "/../data/" + rel);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  CHECK(slurp("poincare.pres") == fixtures::poincare_presentation());
  CHECK(slurp("rp4.pres") == fixtures::rp4_presentation());
  CHECK(slurp("poincare_sphere.cx.json") == fixtures::poincare_sphere_complex_json());
  CHECK(slurp("rp4.cx.json") == fixtures::rp4_complex_json());
}
