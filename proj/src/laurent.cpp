#include "novk/laurent.hpp"

#include <algorithm>
#include <map>
#include <cctype>
#include <sstream>

namespace novk {

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::TruncationIncrease: return "TruncationIncrease";
    case ErrKind::RingMismatch: return "RingMismatch";
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
    case ErrKind::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::HypothesisViolation: return "HypothesisViolation";
    case ErrKind::OutOfScope: return "OutOfScope";
    case ErrKind::IndexError: return "IndexError";
    case ErrKind::GroupMismatch: return "GroupMismatch";
    case ErrKind::UnresolvedId: return "UnresolvedId";
    case ErrKind::WindowTooShort: return "WindowTooShort";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

CoefficientRing CoefficientRing::integers_mod(const Int& n) {
  if (n < 2) fail(ErrKind::InvalidArgument, "modulus must be >= 2");
  return CoefficientRing(RingTag::IntegersMod, n);
}

Rat CoefficientRing::normalize(const Rat& x) const {
  switch (tag_) {
    case RingTag::Rationals:
      return x;
    case RingTag::Integers:
      if (!is_integer(x)) fail(ErrKind::InvalidArgument, "non-integer coefficient over Z");
      return x;
    case RingTag::IntegersMod: {
      if (!is_integer(x)) fail(ErrKind::InvalidArgument, "non-integer coefficient over Z/n");
      Int r = num(x) % modulus_;
      if (r < 0) r += modulus_;
      return Rat(r);
    }
  }
  return x;
}

Rat CoefficientRing::add(const Rat& a, const Rat& b) const { return normalize(a + b); }
Rat CoefficientRing::mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
Rat CoefficientRing::neg(const Rat& a) const { return normalize(-a); }

bool CoefficientRing::is_unit(const Rat& x) const {
  switch (tag_) {
    case RingTag::Rationals: return x != 0;
    case RingTag::Integers: return x == 1 || x == -1;
    case RingTag::IntegersMod: return boost::multiprecision::gcd(num(normalize(x)), modulus_) == 1;
  }
  return false;
}

namespace {

// extended gcd on Int, returns (g, u, v) with u*a + v*b = g
void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  if (b == 0) {
    g = a; u = 1; v = 0;
    return;
  }
  Int g1, u1, v1;
  ext_gcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

} // namespace

Rat CoefficientRing::unit_inverse(const Rat& x) const {
  if (!is_unit(x)) fail(ErrKind::NonUnitLeadingTerm, "element is not a unit in " + to_string());
  switch (tag_) {
    case RingTag::Rationals: return 1 / x;
    case RingTag::Integers: return x; // +-1 are self-inverse
    case RingTag::IntegersMod: {
      Int g, u, v;
      ext_gcd(num(normalize(x)), modulus_, g, u, v);
      return normalize(Rat(u));
    }
  }
  return x;
}

std::string CoefficientRing::to_string() const {
  switch (tag_) {
    case RingTag::Integers: return "Z";
    case RingTag::Rationals: return "Q";
    case RingTag::IntegersMod: return "Z/" + modulus_.str();
  }
  return "?";
}

LaurentSeries::LaurentSeries(CoefficientRing ring, int valuation, std::vector<Rat> coeffs,
                             int truncation)
    : ring_(std::move(ring)), valuation_(valuation), coeffs_(std::move(coeffs)),
      truncation_(truncation) {
  for (auto& c : coeffs_) c = ring_.normalize(c);
  // canonical form: no zero coefficients at either end of the stored window
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  valuation_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) valuation_ = 0;
  if (!coeffs_.empty() && highest_exp() > truncation_)
    fail(ErrKind::InvalidArgument, "coefficients extend beyond the truncation degree");
}

LaurentSeries LaurentSeries::zero(CoefficientRing ring, int truncation) {
  return LaurentSeries(std::move(ring), 0, {}, truncation);
}

LaurentSeries LaurentSeries::one(CoefficientRing ring, int truncation) {
  return monomial(std::move(ring), Rat(1), 0, truncation);
}

LaurentSeries LaurentSeries::monomial(CoefficientRing ring, const Rat& c, int exp,
                                      int truncation) {
  return LaurentSeries(std::move(ring), exp, {c}, truncation);
}

std::optional<int> LaurentSeries::valuation() const {
  if (is_zero()) return std::nullopt;
  return valuation_;
}

Rat LaurentSeries::coeff(int e) const {
  if (e > truncation_) fail(ErrKind::IndexError, "coefficient above the truncation is unknown");
  if (is_zero() || e < valuation_ || e > highest_exp()) return Rat(0);
  return coeffs_[static_cast<size_t>(e - valuation_)];
}

std::optional<int> valuation(const LaurentSeries& x) { return x.valuation(); }

LaurentSeries truncate(const LaurentSeries& x, int d) {
  if (d > x.truncation())
    fail(ErrKind::TruncationIncrease,
         "cannot raise truncation from " + std::to_string(x.truncation()) + " to " +
             std::to_string(d));
  if (x.is_zero()) return LaurentSeries::zero(x.ring(), d);
  std::vector<Rat> kept;
  for (int e = x.lowest_exp(); e <= std::min(x.highest_exp(), d); ++e) kept.push_back(x.coeff(e));
  return LaurentSeries(x.ring(), x.lowest_exp(), std::move(kept), d);
}

namespace {

void require_same_ring(const LaurentSeries& x, const LaurentSeries& y) {
  if (!(x.ring() == y.ring()))
    fail(ErrKind::RingMismatch, x.ring().to_string() + " vs " + y.ring().to_string());
}

} // namespace

LaurentSeries add(const LaurentSeries& x, const LaurentSeries& y) {
  require_same_ring(x, y);
  const int d = std::min(x.truncation(), y.truncation());
  if (x.is_zero() && y.is_zero()) return LaurentSeries::zero(x.ring(), d);
  int lo = std::min(x.is_zero() ? y.lowest_exp() : x.lowest_exp(),
                    y.is_zero() ? x.lowest_exp() : y.lowest_exp());
  int hi = std::min(d, std::max(x.is_zero() ? lo : x.highest_exp(),
                                y.is_zero() ? lo : y.highest_exp()));
  std::vector<Rat> coeffs;
  for (int e = lo; e <= hi; ++e)
    coeffs.push_back(x.ring().add(e <= x.truncation() ? x.coeff(e) : Rat(0),
                                  e <= y.truncation() ? y.coeff(e) : Rat(0)));
  return LaurentSeries(x.ring(), lo, std::move(coeffs), d);
}

LaurentSeries neg(const LaurentSeries& x) {
  std::vector<Rat> coeffs;
  coeffs.reserve(x.stored_coeffs().size());
  for (const auto& c : x.stored_coeffs()) coeffs.push_back(x.ring().neg(c));
  return LaurentSeries(x.ring(), x.lowest_exp(), std::move(coeffs), x.truncation());
}

LaurentSeries sub(const LaurentSeries& x, const LaurentSeries& y) { return add(x, neg(y)); }

LaurentSeries mul(const LaurentSeries& x, const LaurentSeries& y) {
  require_same_ring(x, y);
  // Only products of known terms are kept: unknown terms of x enter at
  // exponent >= x.trunc + 1 + nu(y) and symmetrically, and the product of the
  // two unknown tails at x.trunc + y.trunc + 2.
  long long d = static_cast<long long>(x.truncation()) + y.truncation() + 1;
  if (auto vy = y.valuation()) d = std::min(d, static_cast<long long>(x.truncation()) + *vy);
  if (auto vx = x.valuation()) d = std::min(d, static_cast<long long>(y.truncation()) + *vx);
  const int trunc = static_cast<int>(d);
  if (x.is_zero() || y.is_zero()) return LaurentSeries::zero(x.ring(), trunc);
  const int lo = x.lowest_exp() + y.lowest_exp();
  const int hi = std::min<long long>(trunc, static_cast<long long>(x.highest_exp()) + y.highest_exp());
  if (hi < lo) return LaurentSeries::zero(x.ring(), trunc);
  std::vector<Rat> coeffs(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (int i = x.lowest_exp(); i <= x.highest_exp(); ++i) {
    if (x.coeff(i) == 0) continue;
    for (int j = y.lowest_exp(); j <= y.highest_exp(); ++j) {
      const long long e = static_cast<long long>(i) + j;
      if (e > hi) break;
      auto& slot = coeffs[static_cast<size_t>(e - lo)];
      slot = x.ring().add(slot, x.ring().mul(x.coeff(i), y.coeff(j)));
    }
  }
  return LaurentSeries(x.ring(), lo, std::move(coeffs), trunc);
}

LaurentSeries invert(const LaurentSeries& x) {
  if (x.is_zero()) fail(ErrKind::DivisionByZero, "cannot invert the zero series");
  const Rat lead = x.coeff(x.lowest_exp());
  if (!x.ring().is_unit(lead))
    fail(ErrKind::NonUnitLeadingTerm,
         "lowest coefficient is not a unit in " + x.ring().to_string());
  const int v = x.lowest_exp();
  const int terms = x.truncation() - v + 1; // known coefficients of the inverse
  const Rat lead_inv = x.ring().unit_inverse(lead);
  // power-series inversion: b_0 = 1/c_0, b_k = -1/c_0 * sum_{i=1..k} c_i b_{k-i}
  std::vector<Rat> b(static_cast<size_t>(terms), Rat(0));
  b[0] = lead_inv;
  for (int k = 1; k < terms; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) {
      const int e = v + i;
      const Rat ci = e <= x.highest_exp() ? x.coeff(e) : Rat(0);
      if (ci == 0) continue;
      acc = x.ring().add(acc, x.ring().mul(ci, b[static_cast<size_t>(k - i)]));
    }
    b[static_cast<size_t>(k)] = x.ring().neg(x.ring().mul(lead_inv, acc));
  }
  return LaurentSeries(x.ring(), -v, std::move(b), x.truncation() - 2 * v);
}

namespace {

struct SeriesParser {
  const std::string& s;
  size_t pos = 0;

  explicit SeriesParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(ErrKind::ParseError, msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  Int parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) error("expected digit");
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    return Int(digits);
  }

  Int parse_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s[pos++] == '-';
    Int v = parse_uint();
    return negative ? -v : v;
  }

  // term := [coeff ['*']] ['t' ['^' int]]
  void parse_term(int sign, std::vector<std::pair<int, Rat>>& out) {
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int n = parse_uint();
      coeff = Rat(n);
      if (peek() == '/') {
        ++pos;
        Int d = parse_uint();
        if (d == 0) error("zero denominator");
        coeff = Rat(n) / Rat(d);
      }
      have_coeff = true;
      if (peek() == '*') ++pos;
    }
    int exp = 0;
    if (peek() == 't') {
      ++pos;
      exp = 1;
      if (peek() == '^') {
        ++pos;
        Int e = parse_int();
        if (e > 1'000'000 || e < -1'000'000) error("exponent out of range");
        exp = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      error("expected a coefficient or 't'");
    }
    if (sign < 0) coeff = -coeff;
    out.emplace_back(exp, coeff);
  }
};

} // namespace

LaurentSeries parse_series(const std::string& text, const CoefficientRing& ring, int truncation) {
  SeriesParser p(text);
  std::vector<std::pair<int, Rat>> terms;
  if (p.eof()) p.error("empty series literal");
  int sign = 1;
  if (p.peek() == '+' || p.peek() == '-') sign = p.s[p.pos++] == '-' ? -1 : 1;
  p.parse_term(sign, terms);
  while (!p.eof()) {
    char c = p.peek();
    if (c == '+' || c == '-') {
      ++p.pos;
      p.parse_term(c == '-' ? -1 : 1, terms);
    } else {
      p.error("expected '+' or '-'");
    }
  }
  std::map<int, Rat> acc;
  for (const auto& [e, c] : terms) acc[e] = ring.add(acc.count(e) ? acc[e] : Rat(0), c);
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  if (acc.empty()) return LaurentSeries::zero(ring, truncation);
  const int lo = acc.begin()->first, hi = acc.rbegin()->first;
  if (hi > truncation) {
    // the literal names a coefficient the truncation claims unknown
    fail(ErrKind::ParseError, "term exponent " + std::to_string(hi) +
                                  " exceeds truncation " + std::to_string(truncation));
  }
  std::vector<Rat> coeffs(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (const auto& [e, c] : acc) coeffs[static_cast<size_t>(e - lo)] = c;
  return LaurentSeries(ring, lo, std::move(coeffs), truncation);
}

namespace {

std::string coeff_str(const Rat& c) {
  std::ostringstream os;
  os << num(c).str();
  if (den(c) != 1) os << "/" << den(c).str();
  return os.str();
}

} // namespace

std::string to_string(const LaurentSeries& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = x.lowest_exp(); e <= x.highest_exp(); ++e) {
    Rat c = x.coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    Rat a = negative ? Rat(-c) : c;
    if (e == 0) {
      os << coeff_str(a);
    } else {
      if (a != 1) os << coeff_str(a) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace novk
