#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novk/freeprod.hpp"
#include "novk/laurent.hpp"

namespace novk {

// A named generator for generation up to deck transformations and
// completion. The assigned height defaults to the word's height but may be
// fixed arbitrarily (it only needs to dominate triviality after zipping).
struct DtcGenerator {
  std::string id;
  ProductWord word;
  int height;

  DtcGenerator(std::string id_, ProductWord word_, std::optional<int> height_ = std::nullopt);
};

struct DtcFactor {
  int shift;
  std::string gen;
  long long exp; // nonzero
  bool operator==(const DtcFactor&) const = default;
};

// Formal word in shifted generators: product of (shift, generator)^exp.
struct DtcWord {
  std::vector<DtcFactor> factors;
  bool operator==(const DtcWord&) const = default;
};

DtcWord parse_dtc_word(const std::string& text);
std::string to_string(const DtcWord& w);

// Substitute each factor by the shifted generator word raised to its
// exponent and zip at h; factors whose assigned shifted height falls below h
// evaluate to the identity.
ProductWord eval_dtc_word(const DtcWord& w, const std::vector<DtcGenerator>& gens, int h);

struct SpanSearchResult {
  bool found = false;
  std::optional<DtcWord> witness;
  bool exhausted = false; // the windowed subgroup was fully enumerated
  size_t states_explored = 0;
};

// Bounded BFS over DtcWords of length <= max_len with shifts inside the
// window, deterministic exploration order (shift, then generator, then
// exponent sign). A found witness is re-evaluated before being returned;
// not-found is Unknown unless `exhausted` is set.
SpanSearchResult span_member_bounded(const ProductWord& target,
                                     const std::vector<DtcGenerator>& gens, int h,
                                     const Window& window, size_t max_len);

struct BoundReport {
  size_t lower = 0;
  std::optional<size_t> upper;
  std::vector<std::string> certificates;
};

std::string to_string(const BoundReport& r, const std::string& name);

// Bounds for the minimal number of generators up to deck transformations and
// completion of the free product of copies of g.
BoundReport mu_dtc_bounds(const FiniteGroupTable& g);

// Rows = relations, cols = generators; entry (i,j) collects a*t^-k over the
// occurrences (k, j, a) in relation i. Entries are exact Laurent polynomials
// over Q.
class RhoMatrix {
 public:
  RhoMatrix(std::vector<std::string> gen_ids, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return gen_ids_.size(); }
  const std::vector<std::string>& gen_ids() const { return gen_ids_; }
  const LaurentSeries& at(size_t i, size_t j) const;

  friend RhoMatrix build_rho_matrix(const std::vector<std::string>& gen_ids,
                                    const std::vector<DtcWord>& relations);

 private:
  std::vector<std::string> gen_ids_;
  size_t rows_;
  std::vector<LaurentSeries> entries_;
};

RhoMatrix build_rho_matrix(const std::vector<std::string>& gen_ids,
                           const std::vector<DtcWord>& relations);
RhoMatrix build_rho_matrix(const std::vector<DtcGenerator>& gens,
                           const std::vector<DtcWord>& relations);

// Rank over the fraction field Q(t): per-row powers of t are cleared and the
// polynomial matrix is eliminated fraction-free with exact rationals.
size_t rank_over_laurent_field(const RhoMatrix& m);

size_t l_lambda_dim(const std::vector<std::string>& gen_ids, const std::vector<DtcWord>& relations);

// Bounds for the minimal number of relations up to DTC, from the deficiency
// inequality r >= m - dim Hom(G, R) and the level-0 relator presentation.
BoundReport rho_dtc_bounds(const Presentation& p, const FiniteGroupTable& g);

struct RefutationReport {
  size_t candidates = 0;
  std::vector<ProductWord> survivors;
  bool conclusive() const { return survivors.empty(); }
};

// Experimental finite search: enumerate candidate single generators (words
// of length <= max_len with levels in the window) and keep those from which
// every level-0 single letter is reachable by bounded span search. Shifts in
// the reachability search extend one window-span below window.lo.
RefutationReport single_generator_refutation_search(std::shared_ptr<const FiniteGroupTable> g,
                                                    const Window& window, size_t max_len);

} // namespace novk
