#pragma once

#include <string>

namespace novk::fixtures {

// Bundled inputs for the two showcase computations, byte-identical to the
// files under data/ so the reports run without touching the filesystem.

// <a,b | a^5 = b^3, a^5 = (ab)^2>, the binary icosahedral group (order 120)
const std::string& poincare_presentation();

// spine of the Poincare homology sphere: one 0-, two 1-, two 2-, one 3-cell
const std::string& poincare_sphere_complex_json();

// <a | a^2>
const std::string& rp4_presentation();

// minimal cell structure of RP^4, one cell per degree 0..4
const std::string& rp4_complex_json();

} // namespace novk::fixtures
