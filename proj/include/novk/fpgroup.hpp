#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novk/intmat.hpp"

namespace novk {

// One syllable g^e of a free-group word; e is never 0 in reduced form.
struct Syllable {
  int gen;
  long long exp;
  bool operator==(const Syllable&) const = default;
};

// Word in a free group, kept in reduced form (adjacent syllables have
// distinct generators, no zero exponents).
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Syllable> raw) { append(raw); }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  long long length() const; // total letter count

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;

  // exponent sum per generator (the abelian rewriting)
  std::vector<Int> exponent_vector(size_t num_gens) const;

  bool operator==(const FreeWord&) const = default;

 private:
  void append(const std::vector<Syllable>& raw);
  std::vector<Syllable> syllables_;
};

FreeWord free_reduce(const std::vector<Syllable>& raw);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  std::optional<size_t> generator_index(const std::string& name) const;
  // relator matrix: rows = relators, cols = generators, entry = exponent sum
  IntMatrix relator_matrix() const;
};

// Presentation file format: statements separated by newlines or ';',
// `gens: a b ...` once, then any number of `rel: <word>`; '#' starts a
// comment. Word grammar: term := name | name^int | ( word )^int, with
// juxtaposition as product.
Presentation parse_presentation(const std::string& text);
FreeWord parse_word(const std::string& text, const Presentation& p);
std::string to_string(const FreeWord& w, const Presentation& p);

// An effective finite group: complete multiplication table plus the images
// of the presentation's generators and a representative word per element.
class FiniteGroupTable {
 public:
  FiniteGroupTable(size_t order, std::vector<int> mul, std::vector<int> generator_images,
                   std::vector<FreeWord> element_words);

  size_t order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + static_cast<size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int power(int a, long long n) const;
  size_t element_order(int a) const;

  const std::vector<int>& generator_images() const { return generator_images_; }
  const std::vector<FreeWord>& element_words() const { return element_words_; }

  // evaluate a word in the presentation's generators
  int eval_word(const FreeWord& w) const;

  bool operator==(const FiniteGroupTable&) const = default;

 private:
  size_t order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> generator_images_;
  std::vector<FreeWord> element_words_;
};

// Coset enumeration over the trivial subgroup, HLT relator scanning with
// first-free-coset definitions; deterministic for fixed input. Throws
// CosetLimitExceeded if more than max_cosets cosets would be alive at once.
FiniteGroupTable todd_coxeter(const Presentation& p, size_t max_cosets);

struct AbelianGroup {
  size_t rank = 0;
  std::vector<Int> torsion; // entries >= 2, each divides the next

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

std::string to_string(const AbelianGroup& g);

AbelianGroup abelianization(const Presentation& p);

// The quotient map G -> G^ab in explicit coordinates: torsion coordinates
// first (divisibility order), then free coordinates.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const Presentation& p);

  const AbelianGroup& group() const { return group_; }
  size_t num_coordinates() const { return group_.torsion.size() + group_.rank; }

  std::vector<Int> image(const FreeWord& w) const;
  // reduce an arbitrary coordinate vector (torsion coords mod their factor)
  std::vector<Int> reduce(std::vector<Int> coords) const;

 private:
  size_t num_gens_;
  AbelianGroup group_;
  IntMatrix v_;                   // Smith column transform of the relator matrix
  std::vector<size_t> coord_cols_; // columns of v_ giving each output coordinate
};

bool is_cyclic(const FiniteGroupTable& g);

// #generators - rank over Q of the relator matrix = dim Hom(G, R)
size_t dim_hom_r(const Presentation& p);

// Smallest k <= cap such that some k-subset generates; cap+1 if none.
// Exhaustive search; only available for order <= 512.
size_t min_generators(const FiniteGroupTable& g, size_t cap);

} // namespace novk
