#pragma once

#include <memory>
#include <string>

#include "novk/freeprod.hpp"

namespace testutil {

struct RealizedGroup {
  novk::Presentation pres;
  std::shared_ptr<const novk::FiniteGroupTable> table;

  novk::ProductWord word(const std::string& text) const {
    return novk::parse_product_word(text, pres, table);
  }
  novk::ProductWord word(const std::vector<novk::Letter>& raw) const {
    return novk::reduce(table, raw);
  }
};

inline RealizedGroup realize(const std::string& presentation, size_t max_cosets = 10000) {
  RealizedGroup g;
  g.pres = novk::parse_presentation(presentation);
  g.table = std::make_shared<const novk::FiniteGroupTable>(novk::todd_coxeter(g.pres, max_cosets));
  return g;
}

inline RealizedGroup z2() { return realize("gens: a\nrel: a^2"); }
inline RealizedGroup z3() { return realize("gens: a\nrel: a^3"); }
inline RealizedGroup z6() { return realize("gens: a\nrel: a^6"); }
inline RealizedGroup klein4() { return realize("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a^-1 b^-1"); }
inline RealizedGroup poincare() {
  return realize("gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2");
}

} // namespace testutil
