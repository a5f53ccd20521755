#pragma once

#include <string>
#include <vector>

#include "novk/freeprod.hpp"
#include "novk/intmat.hpp"

namespace novk {

// Cellular chain complex over Z; boundaries[k-1] is the matrix of
// d_k : C_k -> C_{k-1} (rows indexed by the C_{k-1} basis). Shapes and
// d(d) = 0 are checked at construction.
class ChainComplex {
 public:
  ChainComplex(std::vector<size_t> dims, std::vector<IntMatrix> boundaries);

  size_t top_degree() const { return dims_.size() - 1; }
  const std::vector<size_t>& dims() const { return dims_; }
  // matrix of d_k for 1 <= k <= top_degree
  const IntMatrix& boundary(size_t k) const;

 private:
  std::vector<size_t> dims_;
  std::vector<IntMatrix> boundaries_;
};

// {"dims": [...], "boundaries": [[[...]]]}
ChainComplex parse_chain_complex_json(const std::string& text);

AbelianGroup homology(const ChainComplex& c, size_t i);

// Abelianization of a realized finite group straight from its table:
// quotient by the commutator subgroup, then invariant factors.
AbelianGroup abelianization(const FiniteGroupTable& g);

// Finitely generated module over the Novikov ring Z((t)), presented as
// Lambda^free_rank + sum of Z/k((t)) summands.
struct NovikovModule {
  size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const NovikovModule&) const = default;
};

std::string to_string(const NovikovModule& m);

NovikovModule tensor_novikov(const AbelianGroup& h);

// Novikov homology of a connected sum of an n-torus with a manifold whose
// complex is cx, in degree i (0, 1 or 2). Requires n >= 4.
NovikovModule hn_connected_sum(const ChainComplex& cx, int i, int n);

// Per-level image of a free-product word in the abelianization of the
// factor group; levels below window.lo are dropped first.
struct HurewiczImage {
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<Int>> levels; // coordinate vector per level lo..hi

  bool all_zero() const;
  bool operator==(const HurewiczImage&) const = default;
};

HurewiczImage hurewicz_map_word(const ProductWord& x, const AbelianizationMap& ab,
                                const Window& window);
std::string to_string(const HurewiczImage& im);

// Finite window of a projective system of finitely presented abelian groups:
// presentations[i] presents the level (window.lo + i) group, maps[i] sends
// its generators into the level above.
struct AbelianSystemWindow {
  Window window;
  std::vector<IntMatrix> presentations; // rows = relations, cols = generators
  std::vector<IntMatrix> maps;          // maps[i]: rows = gens of level i+1, cols = gens of level i

  AbelianSystemWindow(Window w, std::vector<IntMatrix> pres, std::vector<IntMatrix> transition);
};

// The window system of abelianizations of the truncated free products:
// level h carries one copy of gab per level in [h, window.hi], transitions
// forget the bottom copy.
AbelianSystemWindow pro_abelianize(const AbelianGroup& gab, const Window& window);
AbelianSystemWindow pro_abelianize(const FiniteGroupTable& g, const Window& window);

struct MlReport {
  bool stable = false;
  std::vector<std::string> notes; // one line per checked target level
};

// Window-relative Mittag-Leffler check: at every target level with sources
// at depth >= K inside the window, the images of all composite maps must
// coincide (decided exactly on lattices of generators).
MlReport ml_check(const AbelianSystemWindow& sys, size_t K);

} // namespace novk
