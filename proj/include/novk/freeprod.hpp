#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "novk/fpgroup.hpp"

namespace novk {

// One letter of a free-product word: a non-identity element of the level-k
// copy of the factor group.
struct Letter {
  int level;
  int elem;
  bool operator==(const Letter&) const = default;
};

// Finite truncation window; every pro-limit statement is evaluated per window.
struct Window {
  int lo;
  int hi;

  Window(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) fail(ErrKind::InvalidArgument, "window lo > hi");
  }
  int length() const { return hi - lo + 1; }
  bool contains(int k) const { return lo <= k && k <= hi; }
};

// Normal-form word in the level-indexed free product of copies of one finite
// factor group: no identity letters, adjacent letters in distinct levels.
class ProductWord {
 public:
  explicit ProductWord(std::shared_ptr<const FiniteGroupTable> group)
      : group_(std::move(group)) {
    if (!group_) fail(ErrKind::InvalidArgument, "null group");
  }

  const FiniteGroupTable& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroupTable>& group_ptr() const { return group_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  bool operator==(const ProductWord& o) const {
    return letters_ == o.letters_ && same_group(o);
  }

  bool same_group(const ProductWord& o) const {
    return group_ == o.group_ || *group_ == *o.group_;
  }

  friend ProductWord reduce(std::shared_ptr<const FiniteGroupTable> group,
                            const std::vector<Letter>& raw);

 private:
  std::shared_ptr<const FiniteGroupTable> group_;
  std::vector<Letter> letters_;
};

// Drop identity letters, merge adjacent same-level letters in the factor
// group, cascade; the result is the unique normal form.
ProductWord reduce(std::shared_ptr<const FiniteGroupTable> group, const std::vector<Letter>& raw);

ProductWord mul(const ProductWord& x, const ProductWord& y);
ProductWord inv(const ProductWord& x);
ProductWord shift(const ProductWord& x, int k);

// Image in the quotient killing all levels < h.
ProductWord zip(const ProductWord& x, int h);

// Maximal letter level; nullopt for the identity. h > height(x) forces
// zip(x, h) == 1; the converse can fail over torsion factors, where deleting
// low letters may expose a cancellation at the top level (e.g. over Z/2 the
// word (2,a)(1,a)(2,a) zips to 1 already at h = 2).
std::optional<int> height(const ProductWord& x);

// x = conjugator * core * conjugator^-1 with the longest possible
// conjugator; core is nonempty whenever x is.
std::pair<ProductWord, ProductWord> cyclic_reduce(const ProductWord& x);

ProductWord power(const ProductWord& x, long long n);

inline bool is_single_letter(const ProductWord& x) { return x.length() <= 1; }

// Literal syntax: concatenation of `[k:w]` blocks, k an integer level and w
// a word in the presentation's generators; `[]` is the identity.
ProductWord parse_product_word(const std::string& text, const Presentation& p,
                               std::shared_ptr<const FiniteGroupTable> group);
std::string to_string(const ProductWord& x, const Presentation& p);

Window parse_window(const std::string& text);

} // namespace novk
