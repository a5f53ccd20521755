#include "novk/dtc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace novk {

DtcGenerator::DtcGenerator(std::string id_, ProductWord word_, std::optional<int> height_)
    : id(std::move(id_)), word(std::move(word_)), height(0) {
  auto h = novk::height(word);
  if (height_) {
    if (h && *height_ < *h)
      fail(ErrKind::InvalidArgument, "assigned height below the word height");
    height = *height_;
  } else {
    height = h.value_or(0);
  }
}

DtcWord parse_dtc_word(const std::string& text) {
  DtcWord w;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '{')
      fail(ErrKind::ParseError, "expected '{' at position " + std::to_string(pos));
    size_t close = text.find('}', pos);
    if (close == std::string::npos) fail(ErrKind::ParseError, "unterminated '{' block");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    skip_ws();
    if (body.empty()) continue; // "{}" is the empty word
    size_t colon = body.find(':');
    if (colon == std::string::npos) fail(ErrKind::ParseError, "expected 'shift:id^exp' in block");
    long long exp = 1;
    std::string idpart = body.substr(colon + 1);
    if (size_t caret = idpart.find('^'); caret != std::string::npos) {
      try {
        exp = std::stoll(idpart.substr(caret + 1));
      } catch (const std::exception&) {
        fail(ErrKind::ParseError, "bad exponent in '" + body + "'");
      }
      idpart = idpart.substr(0, caret);
    }
    int k = 0;
    try {
      k = std::stoi(body.substr(0, colon));
    } catch (const std::exception&) {
      fail(ErrKind::ParseError, "bad shift in '" + body + "'");
    }
    if (idpart.empty()) fail(ErrKind::ParseError, "missing generator id in '" + body + "'");
    if (exp == 0) continue;
    w.factors.push_back({k, idpart, exp});
  }
  return w;
}

std::string to_string(const DtcWord& w) {
  if (w.factors.empty()) return "{}";
  std::ostringstream os;
  for (const auto& f : w.factors) os << "{" << f.shift << ":" << f.gen << "^" << f.exp << "}";
  return os.str();
}

namespace {

size_t resolve(const std::vector<DtcGenerator>& gens, const std::string& id) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].id == id) return i;
  fail(ErrKind::UnresolvedId, "unknown generator '" + id + "'");
}

} // namespace

ProductWord eval_dtc_word(const DtcWord& w, const std::vector<DtcGenerator>& gens, int h) {
  if (gens.empty()) fail(ErrKind::UnresolvedId, "no generators given");
  ProductWord acc(gens.front().word.group_ptr());
  for (const auto& f : w.factors) {
    const auto& g = gens[resolve(gens, f.gen)];
    if (g.height + f.shift < h) continue; // letter below the window maps to 1
    acc = mul(acc, power(shift(g.word, f.shift), f.exp));
  }
  return zip(acc, h);
}

namespace {

std::string state_key(const ProductWord& w) {
  std::ostringstream os;
  for (const auto& l : w.letters()) os << l.level << "," << l.elem << ";";
  return os.str();
}

} // namespace

SpanSearchResult span_member_bounded(const ProductWord& target,
                                     const std::vector<DtcGenerator>& gens, int h,
                                     const Window& window, size_t max_len) {
  if (gens.empty()) fail(ErrKind::UnresolvedId, "no generators given");
  for (const auto& g : gens)
    if (!g.word.same_group(target)) fail(ErrKind::GroupMismatch, "generator over a different group");

  const ProductWord goal = zip(target, h);

  // moves in the documented order: shift increasing, then generator, then +1/-1
  struct Move {
    DtcFactor factor;
    ProductWord step;
  };
  std::vector<Move> moves;
  for (int k = window.lo; k <= window.hi; ++k)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      if (gens[gi].height + k < h) continue; // evaluates to 1, no progress
      for (long long e : {1LL, -1LL})
        moves.push_back({{k, gens[gi].id, e}, zip(power(shift(gens[gi].word, k), e), h)});
    }

  SpanSearchResult res;
  std::map<std::string, bool> visited;
  struct Node {
    ProductWord state;
    DtcWord witness;
  };
  std::deque<Node> queue;
  ProductWord start(goal.group_ptr());
  visited[state_key(start)] = true;
  queue.push_back({start, {}});
  bool cut_by_depth = false;

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++res.states_explored;
    if (node.state == goal) {
      // the witness must reproduce the zipped target when re-evaluated
      if (!(eval_dtc_word(node.witness, gens, h) == goal))
        fail(ErrKind::InvalidArgument, "internal error: witness failed re-evaluation");
      res.found = true;
      res.witness = node.witness;
      return res;
    }
    if (node.witness.factors.size() == max_len) {
      cut_by_depth = true;
      continue;
    }
    for (const auto& m : moves) {
      ProductWord next = mul(node.state, m.step);
      auto key = state_key(next);
      if (visited.contains(key)) continue;
      visited[key] = true;
      DtcWord w = node.witness;
      w.factors.push_back(m.factor);
      queue.push_back({std::move(next), std::move(w)});
    }
  }
  res.exhausted = !cut_by_depth;
  return res;
}

std::string to_string(const BoundReport& r, const std::string& name) {
  std::ostringstream os;
  os << name << " in [" << r.lower << ", ";
  if (r.upper)
    os << *r.upper;
  else
    os << "?";
  os << "]";
  return os.str();
}

BoundReport mu_dtc_bounds(const FiniteGroupTable& g) {
  BoundReport r;
  if (g.order() == 1) {
    r.lower = 0;
    r.certificates.push_back("lower 0: the factor group is trivial, so the free product is too");
  } else if (!is_cyclic(g)) {
    r.lower = 2;
    r.certificates.push_back(
        "lower 2: the factor group is not cyclic; a single generator up to shifts and "
        "completion would force its top zipped letter to generate a cyclic factor");
  } else {
    r.lower = 1;
    r.certificates.push_back("lower 1: the factor group is nontrivial");
  }
  size_t cap = 1;
  while ((1ull << cap) < g.order()) ++cap; // any group of order n needs <= log2(n) generators
  size_t m = min_generators(g, cap);
  if (m <= cap) {
    r.upper = m;
    r.certificates.push_back(
        "upper " + std::to_string(m) +
        ": level-0 copies of a minimal generating set of the factor group generate every "
        "level under shifts and completion");
  }
  return r;
}

RhoMatrix::RhoMatrix(std::vector<std::string> gen_ids, size_t rows)
    : gen_ids_(std::move(gen_ids)), rows_(rows),
      entries_(rows_ * gen_ids_.size(), LaurentSeries::zero(CoefficientRing::rationals(), 0)) {}

const LaurentSeries& RhoMatrix::at(size_t i, size_t j) const {
  if (i >= rows_ || j >= cols()) fail(ErrKind::IndexError, "rho matrix index out of range");
  return entries_[i * cols() + j];
}

RhoMatrix build_rho_matrix(const std::vector<std::string>& gen_ids,
                           const std::vector<DtcWord>& relations) {
  const auto ring = CoefficientRing::rationals();
  // gather coefficient maps first to fix one common truncation degree
  std::vector<std::map<int, Rat>> cells(relations.size() * gen_ids.size());
  int top = 0;
  for (size_t i = 0; i < relations.size(); ++i)
    for (const auto& f : relations[i].factors) {
      size_t j = 0;
      for (; j < gen_ids.size(); ++j)
        if (gen_ids[j] == f.gen) break;
      if (j == gen_ids.size()) fail(ErrKind::UnresolvedId, "relation uses unknown id '" + f.gen + "'");
      cells[i * gen_ids.size() + j][-f.shift] += Rat(f.exp);
      top = std::max(top, -f.shift);
    }
  RhoMatrix m(gen_ids, relations.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) {
      m.entries_[c] = LaurentSeries::zero(ring, top);
      continue;
    }
    int lo = cells[c].begin()->first;
    int hi = cells[c].rbegin()->first;
    std::vector<Rat> coeffs(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, v] : cells[c]) coeffs[static_cast<size_t>(e - lo)] = v;
    m.entries_[c] = LaurentSeries(ring, lo, std::move(coeffs), top);
  }
  return m;
}

RhoMatrix build_rho_matrix(const std::vector<DtcGenerator>& gens,
                           const std::vector<DtcWord>& relations) {
  std::vector<std::string> ids;
  ids.reserve(gens.size());
  for (const auto& g : gens) ids.push_back(g.id);
  return build_rho_matrix(ids, relations);
}

namespace {

// dense polynomials over Q, coefficient of t^i at index i
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_zero(const Poly& p) { return p.empty(); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c = a;
  if (b.size() > c.size()) c.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  poly_trim(c);
  return c;
}

// exact division; the fraction-free elimination guarantees zero remainder
Poly poly_div_exact(Poly a, const Poly& b) {
  if (poly_zero(b)) fail(ErrKind::DivisionByZero, "polynomial division by zero");
  if (poly_zero(a)) return {};
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !poly_zero(a)) {
    size_t shift_deg = a.size() - b.size();
    Rat coef = a.back() / b.back();
    q[shift_deg] = coef;
    for (size_t i = 0; i < b.size(); ++i) a[shift_deg + i] -= coef * b[i];
    poly_trim(a);
  }
  if (!poly_zero(a)) fail(ErrKind::InvalidArgument, "internal error: inexact polynomial division");
  poly_trim(q);
  return q;
}

} // namespace

size_t rank_over_laurent_field(const RhoMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  // clear per-row powers of t (unit scaling), leaving honest polynomials
  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols));
  for (size_t i = 0; i < rows; ++i) {
    int minval = 0;
    bool any = false;
    for (size_t j = 0; j < cols; ++j) {
      if (auto v = m.at(i, j).valuation()) {
        minval = any ? std::min(minval, *v) : *v;
        any = true;
      }
    }
    for (size_t j = 0; j < cols; ++j) {
      const auto& s = m.at(i, j);
      if (s.is_zero()) continue;
      Poly p(static_cast<size_t>(s.highest_exp() - minval + 1), Rat(0));
      for (int e = s.lowest_exp(); e <= s.highest_exp(); ++e)
        p[static_cast<size_t>(e - minval)] = s.coeff(e);
      poly_trim(p);
      a[i][j] = std::move(p);
    }
  }

  size_t rank = 0;
  Poly prev{Rat(1)};
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && poly_zero(a[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      Poly head = a[i][col];
      for (size_t j = 0; j < cols; ++j)
        a[i][j] = poly_div_exact(poly_sub(poly_mul(a[i][j], a[rank][col]), poly_mul(head, a[rank][j])), prev);
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

size_t l_lambda_dim(const std::vector<std::string>& gen_ids, const std::vector<DtcWord>& relations) {
  return gen_ids.size() - rank_over_laurent_field(build_rho_matrix(gen_ids, relations));
}

BoundReport rho_dtc_bounds(const Presentation& p, const FiniteGroupTable& g) {
  BoundReport r;
  const size_t m_low = mu_dtc_bounds(g).lower;
  const size_t d = dim_hom_r(p);
  r.upper = p.relators.size();
  r.certificates.push_back(
      "upper " + std::to_string(p.relators.size()) +
      ": the level-0 copies of the presentation's relators, together with all their shifts, "
      "present the free product up to deck transformations and completion");
  r.lower = m_low > d ? m_low - d : 0;
  r.certificates.push_back(
      "lower " + std::to_string(r.lower) +
      ": a presentation up to DTC with m generators has at least m - dim Hom(G,R) relations; "
      "here m >= " + std::to_string(m_low) + " and dim Hom(G,R) = " + std::to_string(d));
  return r;
}

RefutationReport single_generator_refutation_search(std::shared_ptr<const FiniteGroupTable> g,
                                                    const Window& window, size_t max_len) {
  const size_t n = g->order();
  const size_t levels = static_cast<size_t>(window.length());
  // candidate count: levels*(n-1) first letters, (levels-1)*(n-1) continuations
  double estimate = 0, layer = static_cast<double>(levels * (n - 1));
  for (size_t len = 1; len <= max_len; ++len) {
    estimate += layer;
    layer *= static_cast<double>((levels > 1 ? levels - 1 : 0) * (n - 1));
  }
  if (estimate > 200000)
    fail(ErrKind::BudgetExceeded, "candidate space too large for exhaustive search");

  std::vector<ProductWord> targets;
  for (int e = 0; e < static_cast<int>(n); ++e)
    if (e != g->identity()) targets.push_back(reduce(g, {{0, e}}));

  // reachability searches may shift one window-span below the window
  Window search_window(window.lo - (window.hi - window.lo), window.hi);

  RefutationReport report;
  std::vector<Letter> stack;
  auto consider = [&](const ProductWord& candidate) {
    ++report.candidates;
    std::vector<DtcGenerator> gens{DtcGenerator("g", candidate)};
    for (const auto& target : targets) {
      auto res = span_member_bounded(target, gens, 0, search_window, max_len);
      if (!res.found) return;
    }
    report.survivors.push_back(candidate);
  };

  auto rec = [&](auto&& self, size_t len) -> void {
    if (!stack.empty()) consider(reduce(g, stack)); // stack is built in normal form
    if (len == max_len) return;
    for (int lv = window.lo; lv <= window.hi; ++lv) {
      if (!stack.empty() && stack.back().level == lv) continue;
      for (int e = 0; e < static_cast<int>(n); ++e) {
        if (e == g->identity()) continue;
        stack.push_back({lv, e});
        self(self, len + 1);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0);
  return report;
}

} // namespace novk
