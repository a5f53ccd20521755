#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novk/error.hpp"
#include "novk/numeric.hpp"

namespace novk {

enum class RingTag { Integers, Rationals, IntegersMod };

// Coefficient ring of a series: Z, Q, or Z/n (n >= 2). Elements are carried
// as Rat values; Z and Z/n elements are integral, Z/n residues live in [0, n).
class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(RingTag::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(RingTag::Rationals, 0); }
  static CoefficientRing integers_mod(const Int& n);

  RingTag tag() const { return tag_; }
  const Int& modulus() const { return modulus_; }

  bool operator==(const CoefficientRing& o) const = default;

  // validates that x belongs to the ring and puts it in canonical form
  Rat normalize(const Rat& x) const;
  Rat add(const Rat& a, const Rat& b) const;
  Rat mul(const Rat& a, const Rat& b) const;
  Rat neg(const Rat& a) const;
  bool is_unit(const Rat& x) const;
  Rat unit_inverse(const Rat& x) const;

  std::string to_string() const;

 private:
  CoefficientRing(RingTag tag, Int modulus) : tag_(tag), modulus_(std::move(modulus)) {}

  RingTag tag_;
  Int modulus_;
};

// Truncated formal Laurent series: the coefficients of t^e are known exactly
// for all e <= truncation and unknown above. Canonical form strips zero
// coefficients at both ends of the stored window, so equality is structural.
class LaurentSeries {
 public:
  LaurentSeries(CoefficientRing ring, int valuation, std::vector<Rat> coeffs, int truncation);

  static LaurentSeries zero(CoefficientRing ring, int truncation);
  static LaurentSeries one(CoefficientRing ring, int truncation);
  static LaurentSeries monomial(CoefficientRing ring, const Rat& c, int exp, int truncation);

  const CoefficientRing& ring() const { return ring_; }
  int truncation() const { return truncation_; }
  bool is_zero() const { return coeffs_.empty(); }

  // lowest exponent with a nonzero coefficient; nullopt for the zero series
  std::optional<int> valuation() const;

  // coefficient of t^e; e must not exceed the truncation
  Rat coeff(int e) const;

  // exponents of the stored (nonzero) window
  int lowest_exp() const { return valuation_; }
  int highest_exp() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& stored_coeffs() const { return coeffs_; }

  bool operator==(const LaurentSeries& o) const = default;

 private:
  CoefficientRing ring_;
  int valuation_ = 0;      // exponent of coeffs_[0]; meaningless when zero
  std::vector<Rat> coeffs_;
  int truncation_;
};

LaurentSeries truncate(const LaurentSeries& x, int d);
LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries sub(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries mul(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries neg(const LaurentSeries& x);
LaurentSeries invert(const LaurentSeries& x);

inline LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) { return add(x, y); }
inline LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return sub(x, y); }
inline LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) { return mul(x, y); }
inline LaurentSeries operator-(const LaurentSeries& x) { return neg(x); }

// Literal syntax: sum of `c*t^e` terms, `t` for `t^1`, `*1` elidable,
// rational coefficients as `p/q`. Whitespace-insensitive. `0` is the zero
// series. The truncation is not part of the literal and is supplied
// separately.
LaurentSeries parse_series(const std::string& text, const CoefficientRing& ring, int truncation);
std::string to_string(const LaurentSeries& x);

} // namespace novk
