#include "novk/fixtures.hpp"

namespace novk::fixtures {

const std::string& poincare_presentation() {
  static const std::string text =
      "# fundamental group of the Poincare homology sphere\n"
      "gens: a b\n"
      "rel: a^5 b^-3\n"
      "rel: a^5 (a b)^-2\n";
  return text;
}

const std::string& poincare_sphere_complex_json() {
  static const std::string text =
      "{\n"
      "  \"dims\": [1, 2, 2, 1],\n"
      "  \"boundaries\": [\n"
      "    [[0, 0]],\n"
      "    [[5, 3], [-3, -2]],\n"
      "    [[0], [0]]\n"
      "  ]\n"
      "}\n";
  return text;
}

const std::string& rp4_presentation() {
  static const std::string text =
      "# fundamental group of RP^4\n"
      "gens: a\n"
      "rel: a^2\n";
  return text;
}

const std::string& rp4_complex_json() {
  static const std::string text =
      "{\n"
      "  \"dims\": [1, 1, 1, 1, 1],\n"
      "  \"boundaries\": [\n"
      "    [[0]],\n"
      "    [[2]],\n"
      "    [[0]],\n"
      "    [[2]]\n"
      "  ]\n"
      "}\n";
  return text;
}

} // namespace novk::fixtures
