#include "novk/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace novk {

void FreeWord::append(const std::vector<Syllable>& raw) {
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!syllables_.empty() && syllables_.back().gen == s.gen) {
      syllables_.back().exp += s.exp;
      if (syllables_.back().exp == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }
}

long long FreeWord::length() const {
  long long n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

FreeWord FreeWord::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  return FreeWord(std::move(rev));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r = *this;
  r.append(o.syllables_);
  return r;
}

std::vector<Int> FreeWord::exponent_vector(size_t num_gens) const {
  std::vector<Int> e(num_gens, Int(0));
  for (const auto& s : syllables_) e[static_cast<size_t>(s.gen)] += s.exp;
  return e;
}

FreeWord free_reduce(const std::vector<Syllable>& raw) { return FreeWord(raw); }

std::optional<size_t> Presentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  return std::nullopt;
}

IntMatrix Presentation::relator_matrix() const {
  IntMatrix m(relators.size(), generators.size());
  for (size_t i = 0; i < relators.size(); ++i) {
    auto e = relators[i].exponent_vector(generators.size());
    for (size_t j = 0; j < generators.size(); ++j) m.at(i, j) = e[j];
  }
  return m;
}

namespace {

struct TextCursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit TextCursor(const std::string& text) : s(text) {}

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }

  char take() {
    char c = s[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_blanks() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) take();
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrKind::ParseError,
         msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")");
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(TextCursor& c) {
  c.skip_blanks();
  if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
    c.error("expected a generator name");
  std::string name;
  while (!c.eof() && is_name_char(c.peek())) name += c.take();
  return name;
}

long long read_exponent(TextCursor& c) {
  c.skip_blanks();
  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') negative = c.take() == '-';
  c.skip_blanks();
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.error("expected an exponent");
  long long v = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.take() - '0');
    if (v > 1'000'000'000) c.error("exponent out of range");
  }
  return negative ? -v : v;
}

// word := term+ ; term := (name | '(' word ')') ['^' int]
std::vector<Syllable> read_word(TextCursor& c, const Presentation& p, bool inside_parens) {
  std::vector<Syllable> out;
  for (;;) {
    c.skip_blanks();
    char ch = c.peek();
    if (ch == '\0' || ch == '\n' || ch == ';' || ch == '#' || (inside_parens && ch == ')')) break;
    std::vector<Syllable> atom;
    if (ch == '(') {
      c.take();
      atom = read_word(c, p, true);
      c.skip_blanks();
      if (c.peek() != ')') c.error("expected ')'");
      c.take();
    } else {
      std::string name = read_name(c);
      auto idx = p.generator_index(name);
      if (!idx) c.error("undeclared generator '" + name + "'");
      atom = {{static_cast<int>(*idx), 1}};
    }
    long long e = 1;
    c.skip_blanks();
    if (c.peek() == '^') {
      c.take();
      e = read_exponent(c);
    }
    if (e == 0) continue;
    std::vector<Syllable> piece = atom;
    if (e < 0) {
      piece.clear();
      for (auto it = atom.rbegin(); it != atom.rend(); ++it) piece.push_back({it->gen, -it->exp});
      e = -e;
    }
    for (long long k = 0; k < e; ++k) out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

void skip_to_statement_end(TextCursor& c) {
  while (!c.eof() && c.peek() != '\n' && c.peek() != ';') {
    if (c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n') c.take();
      return;
    }
    if (c.peek() != ' ' && c.peek() != '\t' && c.peek() != '\r')
      c.error("unexpected trailing input");
    c.take();
  }
}

} // namespace

Presentation parse_presentation(const std::string& text) {
  TextCursor c(text);
  Presentation p;
  bool have_gens = false;
  while (!c.eof()) {
    c.skip_blanks();
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '\n' || ch == ';') {
      c.take();
      continue;
    }
    if (ch == '#') {
      while (!c.eof() && c.peek() != '\n') c.take();
      continue;
    }
    std::string key = read_name(c);
    c.skip_blanks();
    if (c.peek() != ':') c.error("expected ':' after '" + key + "'");
    c.take();
    if (key == "gens") {
      if (have_gens) c.error("duplicate gens statement");
      have_gens = true;
      for (;;) {
        c.skip_blanks();
        char g = c.peek();
        if (g == '\0' || g == '\n' || g == ';' || g == '#') break;
        std::string name = read_name(c);
        if (p.generator_index(name)) c.error("duplicate generator '" + name + "'");
        p.generators.push_back(name);
      }
      skip_to_statement_end(c);
    } else if (key == "rel") {
      if (!have_gens) c.error("rel before gens");
      auto raw = read_word(c, p, false);
      p.relators.push_back(FreeWord(std::move(raw)));
      skip_to_statement_end(c);
    } else {
      c.error("unknown statement '" + key + "'");
    }
  }
  if (!have_gens) fail(ErrKind::ParseError, "missing gens statement");
  return p;
}

FreeWord parse_word(const std::string& text, const Presentation& p) {
  TextCursor c(text);
  auto raw = read_word(c, p, false);
  c.skip_blanks();
  if (!c.eof() && c.peek() != '#') c.error("unexpected trailing input in word");
  return FreeWord(std::move(raw));
}

std::string to_string(const FreeWord& w, const Presentation& p) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << " ";
    first = false;
    os << p.generators[static_cast<size_t>(s.gen)];
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

FiniteGroupTable::FiniteGroupTable(size_t order, std::vector<int> mul,
                                   std::vector<int> generator_images,
                                   std::vector<FreeWord> element_words)
    : order_(order), mul_(std::move(mul)), generator_images_(std::move(generator_images)),
      element_words_(std::move(element_words)) {
  if (order_ == 0 || mul_.size() != order_ * order_)
    fail(ErrKind::InvalidArgument, "multiplication table shape mismatch");
  inv_.assign(order_, -1);
  for (int a = 0; a < static_cast<int>(order_); ++a) {
    for (int b = 0; b < static_cast<int>(order_); ++b)
      if (this->mul(a, b) == identity()) {
        inv_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inv_[static_cast<size_t>(a)] < 0)
      fail(ErrKind::InvalidArgument, "element without inverse in table");
  }
}

int FiniteGroupTable::power(int a, long long n) const {
  int base = n < 0 ? inv(a) : a;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  int acc = identity();
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

size_t FiniteGroupTable::element_order(int a) const {
  size_t n = 1;
  int x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

int FiniteGroupTable::eval_word(const FreeWord& w) const {
  int acc = identity();
  for (const auto& s : w.syllables()) {
    if (s.gen < 0 || static_cast<size_t>(s.gen) >= generator_images_.size())
      fail(ErrKind::IndexError, "word references an unknown generator");
    acc = mul(acc, power(generator_images_[static_cast<size_t>(s.gen)], s.exp));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace {

class CosetTable {
 public:
  CosetTable(size_t ngens, size_t max_cosets) : ngens_(ngens), max_cosets_(max_cosets) {
    new_coset();
  }

  static int inv_letter(int x) { return x ^ 1; }
  size_t num_letters() const { return 2 * ngens_; }

  int entry(int c, int x) const { return table_[static_cast<size_t>(c) * num_letters() + static_cast<size_t>(x)]; }
  void set_entry(int c, int x, int v) { table_[static_cast<size_t>(c) * num_letters() + static_cast<size_t>(x)] = v; }

  size_t total() const { return parent_.size(); }
  bool alive(int c) const { return parent_[static_cast<size_t>(c)] == c; }
  size_t live_count() const { return live_; }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
    while (parent_[static_cast<size_t>(c)] != r) {
      int next = parent_[static_cast<size_t>(c)];
      parent_[static_cast<size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  // rep-compressed lookup; -1 when undefined
  int look(int c, int x) {
    int v = entry(c, x);
    return v < 0 ? -1 : rep(v);
  }

  int define(int c, int x) {
    if (live_ + 1 > max_cosets_)
      fail(ErrKind::CosetLimitExceeded,
           "enumeration needs more than " + std::to_string(max_cosets_) + " cosets");
    if (total() >= 64 * max_cosets_ + 1024)
      fail(ErrKind::CosetLimitExceeded, "enumeration did not settle within the coset budget");
    int n = static_cast<int>(new_coset());
    set_entry(c, x, n);
    set_entry(n, inv_letter(x), c);
    ++events;
    return n;
  }

  void deduce(int c, int x, int d) {
    set_entry(c, x, d);
    set_entry(d, inv_letter(x), c);
    ++events;
  }

  size_t events = 0;

  void coincidence(int a, int b) {
    std::deque<int> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      int e = dead.front();
      dead.pop_front();
      for (int x = 0; x < static_cast<int>(num_letters()); ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        if (entry(f, inv_letter(x)) == e) set_entry(f, inv_letter(x), -1);
        int e1 = rep(e), f1 = rep(f);
        if (int g = entry(e1, x); g >= 0) {
          merge(f1, rep(g), dead);
        } else if (int h = entry(f1, inv_letter(x)); h >= 0) {
          merge(e1, rep(h), dead);
        } else {
          set_entry(e1, x, f1);
          set_entry(f1, inv_letter(x), e1);
        }
      }
    }
  }

 private:
  size_t new_coset() {
    size_t n = parent_.size();
    parent_.push_back(static_cast<int>(n));
    table_.resize(table_.size() + num_letters(), -1);
    ++live_;
    return n;
  }

  void merge(int a, int b, std::deque<int>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    --live_;
    ++events;
    dead.push_back(b);
  }

  size_t ngens_;
  size_t max_cosets_;
  size_t live_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
};

std::vector<int> expand_relator(const FreeWord& w) {
  std::vector<int> letters;
  for (const auto& s : w.syllables()) {
    int letter = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
    long long count = s.exp > 0 ? s.exp : -s.exp;
    for (long long i = 0; i < count; ++i) letters.push_back(letter);
  }
  return letters;
}

// scan relator r at coset c, defining cosets to fill gaps (HLT style)
void scan_and_fill(CosetTable& t, int c, const std::vector<int>& r) {
  if (r.empty()) return;
  const int len = static_cast<int>(r.size());
  for (;;) {
    c = t.rep(c);
    int f = c, i = 0;
    while (i < len) {
      int next = t.look(f, r[static_cast<size_t>(i)]);
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == len) {
      if (f != c) t.coincidence(f, c);
      return;
    }
    int b = c, j = len - 1;
    while (j >= i) {
      int prev = t.look(b, CosetTable::inv_letter(r[static_cast<size_t>(j)]));
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (j < i) {
      t.coincidence(f, b);
      return;
    }
    if (j == i) {
      t.deduce(f, r[static_cast<size_t>(i)], b);
      return;
    }
    t.define(f, r[static_cast<size_t>(i)]);
  }
}

} // namespace

FiniteGroupTable todd_coxeter(const Presentation& p, size_t max_cosets) {
  if (max_cosets < 1) fail(ErrKind::InvalidArgument, "max_cosets must be positive");
  const size_t ngens = p.generators.size();
  CosetTable t(ngens, max_cosets);

  std::vector<std::vector<int>> rels;
  rels.reserve(p.relators.size());
  for (const auto& w : p.relators) rels.push_back(expand_relator(w));

  // HLT passes until nothing changes: relator scans with gap filling, then
  // completion of every live row. Coincidences may leave one-sided edges, so
  // a pass that produced events is followed by another.
  for (;;) {
    t.events = 0;
    for (int c = 0; c < static_cast<int>(t.total()); ++c) {
      if (!t.alive(c)) continue;
      for (const auto& r : rels) {
        scan_and_fill(t, c, r);
        if (!t.alive(c)) break;
      }
      if (!t.alive(c)) continue;
      for (int x = 0; x < static_cast<int>(t.num_letters()); ++x)
        if (t.look(c, x) < 0) t.define(c, x);
    }
    if (t.events == 0) break;
  }

  // compress live cosets and derive representative words by BFS from 1
  std::vector<int> index(t.total(), -1);
  std::vector<int> live;
  for (int c = 0; c < static_cast<int>(t.total()); ++c)
    if (t.alive(c)) {
      index[static_cast<size_t>(c)] = static_cast<int>(live.size());
      live.push_back(c);
    }
  const size_t order = live.size();

  std::vector<FreeWord> words(order);
  std::vector<bool> seen(order, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int ci = queue.front();
    queue.pop_front();
    int c = live[static_cast<size_t>(ci)];
    for (int x = 0; x < static_cast<int>(t.num_letters()); ++x) {
      int n = t.look(c, x);
      int ni = index[static_cast<size_t>(n)];
      if (seen[static_cast<size_t>(ni)]) continue;
      seen[static_cast<size_t>(ni)] = true;
      words[static_cast<size_t>(ni)] =
          words[static_cast<size_t>(ci)] * FreeWord({{x / 2, x % 2 == 0 ? 1 : -1}});
      queue.push_back(ni);
    }
  }

  // multiplication: follow the representative word of the right factor
  std::vector<int> mul(order * order, -1);
  for (size_t i = 0; i < order; ++i) {
    for (size_t j = 0; j < order; ++j) {
      int c = live[i];
      for (const auto& s : words[j].syllables()) {
        int letter = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
        long long count = s.exp > 0 ? s.exp : -s.exp;
        for (long long k = 0; k < count; ++k) c = t.look(c, letter);
      }
      mul[i * order + j] = index[static_cast<size_t>(c)];
    }
  }

  std::vector<int> generator_images(ngens);
  for (size_t g = 0; g < ngens; ++g)
    generator_images[g] = index[static_cast<size_t>(t.look(0, 2 * static_cast<int>(g)))];

  FiniteGroupTable table(order, std::move(mul), std::move(generator_images), std::move(words));

  // the enumeration is trusted only after its output checks out
  for (const auto& w : p.relators)
    if (table.eval_word(w) != table.identity())
      fail(ErrKind::InvalidArgument, "internal error: relator does not vanish in the table");
  return table;
}

// ---------------------------------------------------------------------------

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  os << "rank " << g.rank << ", torsion [";
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    if (i) os << ", ";
    os << g.torsion[i].str();
  }
  os << "]";
  return os.str();
}

AbelianGroup abelianization(const Presentation& p) {
  auto snf = smith_normal_form(p.relator_matrix());
  AbelianGroup g;
  g.rank = p.generators.size() - snf.rank();
  for (const auto& d : snf.d)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianizationMap::AbelianizationMap(const Presentation& p) : num_gens_(p.generators.size()) {
  auto snf = smith_normal_form(p.relator_matrix());
  v_ = std::move(snf.V);
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < num_gens_; ++j) {
    Int d = j < snf.d.size() ? snf.d[j] : Int(0);
    if (d == 0) {
      free_cols.push_back(j);
    } else if (d > 1) {
      group_.torsion.push_back(d);
      coord_cols_.push_back(j);
    }
  }
  group_.rank = free_cols.size();
  coord_cols_.insert(coord_cols_.end(), free_cols.begin(), free_cols.end());
}

std::vector<Int> AbelianizationMap::image(const FreeWord& w) const {
  auto e = w.exponent_vector(num_gens_);
  std::vector<Int> coords;
  coords.reserve(coord_cols_.size());
  for (size_t j : coord_cols_) {
    Int c(0);
    for (size_t k = 0; k < num_gens_; ++k) c += e[k] * v_.at(k, j);
    coords.push_back(std::move(c));
  }
  return reduce(std::move(coords));
}

std::vector<Int> AbelianizationMap::reduce(std::vector<Int> coords) const {
  if (coords.size() != num_coordinates())
    fail(ErrKind::InvalidArgument, "coordinate vector length mismatch");
  for (size_t i = 0; i < group_.torsion.size(); ++i) {
    coords[i] %= group_.torsion[i];
    if (coords[i] < 0) coords[i] += group_.torsion[i];
  }
  return coords;
}

bool is_cyclic(const FiniteGroupTable& g) {
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

size_t dim_hom_r(const Presentation& p) {
  return p.generators.size() - rank_over_q(p.relator_matrix());
}

namespace {

// closure of {identity} under right multiplication by the chosen elements
size_t closure_size(const FiniteGroupTable& g, const std::vector<int>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::deque<int> queue{g.identity()};
  seen[static_cast<size_t>(g.identity())] = true;
  size_t count = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int x : gens) {
      int b = g.mul(a, x);
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        ++count;
        queue.push_back(b);
      }
    }
  }
  return count;
}

bool any_tuple_generates(const FiniteGroupTable& g, size_t k, size_t first, std::vector<int>& chosen) {
  if (chosen.size() == k) return closure_size(g, chosen) == g.order();
  for (size_t e = first; e < g.order(); ++e) {
    if (static_cast<int>(e) == g.identity()) continue;
    chosen.push_back(static_cast<int>(e));
    if (any_tuple_generates(g, k, e + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

size_t min_generators(const FiniteGroupTable& g, size_t cap) {
  if (g.order() > 512)
    fail(ErrKind::BudgetExceeded, "exhaustive generator search capped at order 512");
  if (g.order() == 1) return 0;
  for (size_t k = 1; k <= cap; ++k) {
    std::vector<int> chosen;
    if (any_tuple_generates(g, k, 0, chosen)) return k;
  }
  return cap + 1;
}

} // namespace novk
