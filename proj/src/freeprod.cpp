#include "novk/freeprod.hpp"

#include <algorithm>
#include <sstream>

namespace novk {

ProductWord reduce(std::shared_ptr<const FiniteGroupTable> group, const std::vector<Letter>& raw) {
  ProductWord w(std::move(group));
  const auto& g = w.group();
  auto& st = w.letters_;
  for (const auto& in : raw) {
    if (in.elem < 0 || static_cast<size_t>(in.elem) >= g.order())
      fail(ErrKind::IndexError, "letter element out of range");
    Letter cur = in;
    for (;;) {
      if (cur.elem == g.identity()) break;
      if (st.empty() || st.back().level != cur.level) {
        st.push_back(cur);
        break;
      }
      cur.elem = g.mul(st.back().elem, cur.elem);
      st.pop_back();
    }
  }
  return w;
}

namespace {

void require_same_group(const ProductWord& x, const ProductWord& y) {
  if (!x.same_group(y)) fail(ErrKind::GroupMismatch, "words over different factor groups");
}

} // namespace

ProductWord mul(const ProductWord& x, const ProductWord& y) {
  require_same_group(x, y);
  std::vector<Letter> raw = x.letters();
  raw.insert(raw.end(), y.letters().begin(), y.letters().end());
  return reduce(x.group_ptr(), raw);
}

ProductWord inv(const ProductWord& x) {
  std::vector<Letter> raw;
  raw.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it)
    raw.push_back({it->level, x.group().inv(it->elem)});
  return reduce(x.group_ptr(), raw);
}

ProductWord shift(const ProductWord& x, int k) {
  std::vector<Letter> raw = x.letters();
  for (auto& l : raw) l.level += k;
  return reduce(x.group_ptr(), raw); // normal form is preserved verbatim
}

ProductWord zip(const ProductWord& x, int h) {
  std::vector<Letter> raw;
  for (const auto& l : x.letters())
    if (l.level >= h) raw.push_back(l);
  return reduce(x.group_ptr(), raw);
}

std::optional<int> height(const ProductWord& x) {
  if (x.is_identity()) return std::nullopt;
  int m = x.letters().front().level;
  for (const auto& l : x.letters()) m = std::max(m, l.level);
  return m;
}

std::pair<ProductWord, ProductWord> cyclic_reduce(const ProductWord& x) {
  const auto& ls = x.letters();
  const size_t n = ls.size();
  const auto& g = x.group();
  size_t k = 0;
  // maximal k with prefix(k) = suffix(k)^-1 and a nonempty core left over
  while (2 * (k + 1) < n + 1 && ls[k].level == ls[n - 1 - k].level &&
         g.mul(ls[k].elem, ls[n - 1 - k].elem) == g.identity())
    ++k;
  std::vector<Letter> conj(ls.begin(), ls.begin() + static_cast<long>(k));
  std::vector<Letter> core(ls.begin() + static_cast<long>(k), ls.end() - static_cast<long>(k));
  return {reduce(x.group_ptr(), conj), reduce(x.group_ptr(), core)};
}

ProductWord power(const ProductWord& x, long long n) {
  if (n == 0 || x.is_identity()) return ProductWord(x.group_ptr());
  ProductWord base = n < 0 ? inv(x) : x;
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  auto [conj, core] = cyclic_reduce(base);
  std::vector<Letter> raw = conj.letters();
  for (unsigned long long i = 0; i < m; ++i)
    raw.insert(raw.end(), core.letters().begin(), core.letters().end());
  const auto ci = inv(conj);
  raw.insert(raw.end(), ci.letters().begin(), ci.letters().end());
  return reduce(x.group_ptr(), raw);
}

ProductWord parse_product_word(const std::string& text, const Presentation& p,
                               std::shared_ptr<const FiniteGroupTable> group) {
  std::vector<Letter> raw;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '[')
      fail(ErrKind::ParseError, "expected '[' at position " + std::to_string(pos));
    size_t close = text.find(']', pos);
    if (close == std::string::npos) fail(ErrKind::ParseError, "unterminated '[' block");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    skip_ws();
    if (body.empty()) continue; // "[]" is the identity
    size_t colon = body.find(':');
    if (colon == std::string::npos) fail(ErrKind::ParseError, "expected 'level:word' in block");
    int level = 0;
    try {
      level = std::stoi(body.substr(0, colon));
    } catch (const std::exception&) {
      fail(ErrKind::ParseError, "bad level '" + body.substr(0, colon) + "'");
    }
    FreeWord w = parse_word(body.substr(colon + 1), p);
    raw.push_back({level, group->eval_word(w)});
  }
  return reduce(std::move(group), raw);
}

std::string to_string(const ProductWord& x, const Presentation& p) {
  if (x.is_identity()) return "[]";
  std::ostringstream os;
  for (const auto& l : x.letters())
    os << "[" << l.level << ":"
       << to_string(x.group().element_words()[static_cast<size_t>(l.elem)], p) << "]";
  return os.str();
}

Window parse_window(const std::string& text) {
  size_t colon = text.find(':', text.empty() || text[0] != '-' ? 0 : 1);
  if (colon == std::string::npos)
    fail(ErrKind::ParseError, "window must be 'lo:hi', got '" + text + "'");
  try {
    return Window(std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrKind::ParseError, "window must be 'lo:hi', got '" + text + "'");
  }
}

} // namespace novk
