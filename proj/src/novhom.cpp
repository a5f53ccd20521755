#include "novk/novhom.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace novk {

ChainComplex::ChainComplex(std::vector<size_t> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) fail(ErrKind::InvalidArgument, "complex needs at least one degree");
  if (boundaries_.size() + 1 != dims_.size())
    fail(ErrKind::InvalidArgument, "expected one boundary matrix per degree 1..n");
  for (size_t k = 1; k < dims_.size(); ++k) {
    const auto& b = boundaries_[k - 1];
    if (b.rows != dims_[k - 1] || b.cols != dims_[k])
      fail(ErrKind::InvalidArgument,
           "boundary " + std::to_string(k) + " has shape " + std::to_string(b.rows) + "x" +
               std::to_string(b.cols) + ", expected " + std::to_string(dims_[k - 1]) + "x" +
               std::to_string(dims_[k]));
  }
  for (size_t k = 1; k + 1 < dims_.size(); ++k) {
    IntMatrix prod = mat_mul(boundaries_[k - 1], boundaries_[k]);
    for (const auto& e : prod.entries)
      if (e != 0)
        fail(ErrKind::InvalidArgument,
             "d(d) != 0 between degrees " + std::to_string(k + 1) + " and " + std::to_string(k - 1));
  }
}

const IntMatrix& ChainComplex::boundary(size_t k) const {
  if (k < 1 || k > top_degree()) fail(ErrKind::IndexError, "no boundary in degree " + std::to_string(k));
  return boundaries_[k - 1];
}

ChainComplex parse_chain_complex_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrKind::ParseError, std::string("bad complex JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("boundaries"))
    fail(ErrKind::ParseError, "complex JSON needs 'dims' and 'boundaries'");
  std::vector<size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_unsigned()) fail(ErrKind::ParseError, "dims must be nonnegative integers");
    dims.push_back(d.get<size_t>());
  }
  std::vector<IntMatrix> boundaries;
  size_t k = 1;
  for (const auto& m : j["boundaries"]) {
    size_t rows = k - 1 < dims.size() ? dims[k - 1] : 0;
    size_t cols = k < dims.size() ? dims[k] : 0;
    IntMatrix b(rows, cols);
    if (!m.is_array() || m.size() != rows)
      fail(ErrKind::ParseError, "boundary " + std::to_string(k) + ": wrong row count");
    for (size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols)
        fail(ErrKind::ParseError, "boundary " + std::to_string(k) + ": wrong column count in row " +
                                      std::to_string(r));
      for (size_t c = 0; c < cols; ++c) {
        if (!m[r][c].is_number_integer())
          fail(ErrKind::ParseError, "boundary " + std::to_string(k) + ": non-integer entry");
        b.at(r, c) = Int(m[r][c].get<long long>());
      }
    }
    boundaries.push_back(std::move(b));
    ++k;
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

AbelianGroup homology(const ChainComplex& c, size_t i) {
  if (i > c.top_degree()) fail(ErrKind::IndexError, "degree out of range");
  const size_t rank_in = i >= 1 ? smith_normal_form(c.boundary(i)).rank() : 0;
  AbelianGroup h;
  if (i + 1 <= c.top_degree()) {
    auto snf = smith_normal_form(c.boundary(i + 1));
    h.rank = c.dims()[i] - rank_in - snf.rank();
    for (const auto& d : snf.d)
      if (d > 1) h.torsion.push_back(d);
  } else {
    h.rank = c.dims()[i] - rank_in;
  }
  return h;
}

namespace {

// subgroup closure under right multiplication (the set is inverse-closed)
std::vector<int> subgroup_closure(const FiniteGroupTable& g, const std::vector<int>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::deque<int> queue{g.identity()};
  seen[static_cast<size_t>(g.identity())] = true;
  std::vector<int> members{g.identity()};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int x : gens) {
      int b = g.mul(a, x);
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = true;
        members.push_back(b);
        queue.push_back(b);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

struct SmallAbelian {
  size_t order;
  std::vector<int> mul; // flat order x order
  int times(int a, int b) const { return mul[static_cast<size_t>(a) * order + static_cast<size_t>(b)]; }
};

// quotient of a finite group table by a normal subgroup, as a bare table
SmallAbelian quotient_table(size_t order, const std::vector<int>& mul,
                            const std::vector<int>& members) {
  std::vector<int> coset(order, -1);
  std::vector<int> reps;
  for (size_t e = 0; e < order; ++e) {
    if (coset[e] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(e));
    for (int k : members) coset[static_cast<size_t>(mul[e * order + static_cast<size_t>(k)])] = id;
  }
  SmallAbelian q{reps.size(), std::vector<int>(reps.size() * reps.size(), -1)};
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      q.mul[i * reps.size() + j] = coset[static_cast<size_t>(
          mul[static_cast<size_t>(reps[i]) * order + static_cast<size_t>(reps[j])])];
  return q;
}

size_t order_of(const SmallAbelian& g, int a) {
  size_t n = 1;
  int x = a;
  while (x != 0) {
    x = g.times(x, a);
    ++n;
  }
  return n;
}

} // namespace

AbelianGroup abelianization(const FiniteGroupTable& g) {
  // commutator subgroup: closure of all [a,b]; the generating set is
  // inverse-closed since [a,b]^-1 = [b,a]
  std::vector<int> comms;
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int b = 0; b < static_cast<int>(g.order()); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  auto members = subgroup_closure(g, comms);

  std::vector<int> mul(g.order() * g.order());
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int b = 0; b < static_cast<int>(g.order()); ++b)
      mul[static_cast<size_t>(a) * g.order() + static_cast<size_t>(b)] = g.mul(a, b);
  SmallAbelian q = quotient_table(g.order(), mul, members);

  // invariant factors, largest first: an element of maximal order spans a
  // direct summand of a finite abelian group
  std::vector<Int> factors;
  while (q.order > 1) {
    int best = 1;
    size_t best_order = 1;
    for (int a = 0; a < static_cast<int>(q.order); ++a) {
      size_t o = order_of(q, a);
      if (o > best_order) {
        best_order = o;
        best = a;
      }
    }
    factors.push_back(Int(best_order));
    std::vector<int> cyc;
    int x = 0;
    do {
      cyc.push_back(x);
      x = q.times(x, best);
    } while (x != 0);
    std::sort(cyc.begin(), cyc.end());
    q = quotient_table(q.order, q.mul, cyc);
  }
  std::reverse(factors.begin(), factors.end());
  AbelianGroup out;
  out.torsion = std::move(factors);
  return out;
}

std::string to_string(const NovikovModule& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (m.free_rank > 0) {
    os << "Lambda";
    if (m.free_rank > 1) os << "^" << m.free_rank;
    first = false;
  }
  for (const auto& k : m.torsion) {
    if (!first) os << " + ";
    os << "Z/" << k.str() << "((t))";
    first = false;
  }
  return os.str();
}

NovikovModule tensor_novikov(const AbelianGroup& h) {
  return NovikovModule{h.rank, h.torsion};
}

NovikovModule hn_connected_sum(const ChainComplex& cx, int i, int n) {
  if (n < 4)
    fail(ErrKind::HypothesisViolation,
         "the connected-sum formula needs dimension >= 4 (the gluing sphere must be "
         "1- and 2-connected)");
  if (i < 0 || i > 2) fail(ErrKind::OutOfScope, "only degrees 0, 1, 2 are computed");
  if (i == 0) return NovikovModule{}; // always zero for a nonzero class
  return tensor_novikov(homology(cx, static_cast<size_t>(i)));
}

bool HurewiczImage::all_zero() const {
  for (const auto& level : levels)
    for (const auto& c : level)
      if (c != 0) return false;
  return true;
}

HurewiczImage hurewicz_map_word(const ProductWord& x, const AbelianizationMap& ab,
                                const Window& window) {
  HurewiczImage im;
  im.lo = window.lo;
  im.hi = window.hi;
  im.levels.assign(static_cast<size_t>(window.length()),
                   std::vector<Int>(ab.num_coordinates(), Int(0)));
  const auto& words = x.group().element_words();
  for (const auto& l : x.letters()) {
    if (l.level < window.lo) continue; // zip semantics
    if (l.level > window.hi) fail(ErrKind::IndexError, "letter level above the window");
    auto coords = ab.image(words[static_cast<size_t>(l.elem)]);
    auto& slot = im.levels[static_cast<size_t>(l.level - window.lo)];
    for (size_t i = 0; i < coords.size(); ++i) slot[i] += coords[i];
  }
  for (auto& level : im.levels) level = ab.reduce(std::move(level));
  return im;
}

std::string to_string(const HurewiczImage& im) {
  std::ostringstream os;
  for (int k = im.lo; k <= im.hi; ++k) {
    if (k > im.lo) os << " ";
    os << k << ":(";
    const auto& v = im.levels[static_cast<size_t>(k - im.lo)];
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i].str();
    }
    os << ")";
  }
  return os.str();
}

AbelianSystemWindow::AbelianSystemWindow(Window w, std::vector<IntMatrix> pres,
                                         std::vector<IntMatrix> transition)
    : window(w), presentations(std::move(pres)), maps(std::move(transition)) {
  if (presentations.size() != static_cast<size_t>(window.length()))
    fail(ErrKind::InvalidArgument, "one presentation per window level required");
  if (maps.size() + 1 != presentations.size())
    fail(ErrKind::InvalidArgument, "one transition map per consecutive pair required");
  for (size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].cols != presentations[i].cols || maps[i].rows != presentations[i + 1].cols)
      fail(ErrKind::InvalidArgument, "transition map " + std::to_string(i) + " has wrong shape");
    // relations must map into the target relation lattice
    RowLattice target(presentations[i + 1]);
    const auto& r = presentations[i];
    for (size_t row = 0; row < r.rows; ++row) {
      std::vector<Int> image(maps[i].rows, Int(0));
      for (size_t t = 0; t < maps[i].rows; ++t)
        for (size_t s = 0; s < maps[i].cols; ++s) image[t] += maps[i].at(t, s) * r.at(row, s);
      if (!target.contains(image))
        fail(ErrKind::InvalidArgument,
             "transition map " + std::to_string(i) + " does not preserve relations");
    }
  }
}

namespace {

// block-diagonal presentation of `copies` direct summands of gab
IntMatrix sum_presentation(const AbelianGroup& gab, size_t copies) {
  const size_t coords = gab.torsion.size() + gab.rank;
  IntMatrix m(copies * gab.torsion.size(), copies * coords);
  for (size_t c = 0; c < copies; ++c)
    for (size_t t = 0; t < gab.torsion.size(); ++t)
      m.at(c * gab.torsion.size() + t, c * coords + t) = gab.torsion[t];
  return m;
}

} // namespace

AbelianSystemWindow pro_abelianize(const AbelianGroup& gab, const Window& window) {
  const size_t coords = gab.torsion.size() + gab.rank;
  std::vector<IntMatrix> pres;
  std::vector<IntMatrix> maps;
  for (int h = window.lo; h <= window.hi; ++h) {
    const size_t copies = static_cast<size_t>(window.hi - h + 1);
    pres.push_back(sum_presentation(gab, copies));
    if (h > window.lo) {
      // forget the bottom summand of the previous (deeper) level
      IntMatrix m(copies * coords, (copies + 1) * coords);
      for (size_t i = 0; i < copies * coords; ++i) m.at(i, i + coords) = 1;
      maps.push_back(std::move(m));
    }
  }
  return AbelianSystemWindow(window, std::move(pres), std::move(maps));
}

AbelianSystemWindow pro_abelianize(const FiniteGroupTable& g, const Window& window) {
  return pro_abelianize(abelianization(g), window);
}

MlReport ml_check(const AbelianSystemWindow& sys, size_t K) {
  const size_t len = sys.presentations.size();
  if (len <= K) fail(ErrKind::WindowTooShort, "window length must exceed K");
  MlReport report;
  report.stable = true;
  for (size_t target = K; target < len; ++target) {
    // image lattice of the composite from each source level <= target - K
    std::vector<IntMatrix> images;
    for (size_t source = 0; source + K <= target; ++source) {
      IntMatrix comp = IntMatrix::identity(sys.presentations[source].cols);
      for (size_t i = source; i < target; ++i) comp = mat_mul(sys.maps[i], comp);
      // rows of [comp^T; relations] span the image subgroup in Z^{c_target}
      IntMatrix ct = transpose(comp);
      IntMatrix stacked(ct.rows + sys.presentations[target].rows, ct.cols);
      std::copy(ct.entries.begin(), ct.entries.end(), stacked.entries.begin());
      std::copy(sys.presentations[target].entries.begin(), sys.presentations[target].entries.end(),
                stacked.entries.begin() + static_cast<long>(ct.entries.size()));
      images.push_back(std::move(stacked));
    }
    bool ok = true;
    for (size_t i = 1; i < images.size(); ++i)
      if (!same_row_lattice(images[0], images[i])) {
        ok = false;
        break;
      }
    int level = sys.window.lo + static_cast<int>(target);
    report.notes.push_back("level " + std::to_string(level) + ": images from depth >= " +
                           std::to_string(K) + (ok ? " stabilize" : " do not stabilize") + " (" +
                           std::to_string(images.size()) + " sources in window)");
    if (!ok) report.stable = false;
  }
  return report;
}

} // namespace novk
