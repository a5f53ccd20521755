#pragma once

#include <string>

#include "novk/dtc.hpp"
#include "novk/novhom.hpp"

namespace novk {

// End-to-end pipeline for one bundled example: realize the factor group,
// compute the generator/relation bounds and dim Hom, evaluate the Novikov
// homology of the connected sum, and run the window Hurewicz checks.
struct ExampleReport {
  std::string name;
  int model_dim = 0; // ambient dimension n of T^n # X
  size_t group_order = 0;
  AbelianGroup group_ab;
  bool cyclic = false;
  size_t dim_hom = 0;
  BoundReport mu;
  BoundReport rho;
  NovikovModule hn0, hn1, hn2;
  Window hurewicz_window{0, 2};
  bool pro_abelianization_zero = false;
  bool ml_stable = false;
  size_t min_crit1 = 0; // implied lower bounds for critical points
  size_t min_crit2 = 0;
};

ExampleReport report_example(const std::string& which); // "poincare" or "rp4"

std::string render_report_text(const ExampleReport& r);
std::string render_report_json(const ExampleReport& r); // schema-stable

} // namespace novk
