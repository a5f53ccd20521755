#include <doctest.h>

#include <random>
#include <set>

#include "common.hpp"
#include "oracles.hpp"

using namespace novk;

namespace {

// closure of the generator permutations inside the symmetric group on the
// elements; independent witness that the table's generators generate a group
// of the claimed order
size_t permutation_closure_order(const FiniteGroupTable& g) {
  const size_t n = g.order();
  std::vector<std::vector<int>> gens;
  for (int img : g.generator_images()) {
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = g.mul(static_cast<int>(i), img);
    gens.push_back(std::move(perm));
  }
  std::vector<int> identity(n);
  for (size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& q : gens) {
        std::vector<int> comp(n);
        for (size_t i = 0; i < n; ++i) comp[i] = q[static_cast<size_t>(p[i])];
        if (seen.insert(comp).second) next.push_back(std::move(comp));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

void check_group_axioms(const FiniteGroupTable& g) {
  REQUIRE(g.order() <= 512);
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.mul(a, g.identity()) == a);
    CHECK(g.mul(a, g.inv(a)) == g.identity());
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

} // namespace

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2");
  REQUIRE(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == parse_word("a^5 b^-3", p));
  // (ab)^-2 expands mechanically
  CHECK(p.relators[1] == parse_word("a^5 b^-1 a^-1 b^-1 a^-1", p));

  auto free1 = parse_presentation("gens: a\n");
  CHECK(free1.relators.empty());

  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b"), Error);
  CHECK_THROWS_AS(parse_presentation("rel: a"), Error);
  CHECK_THROWS_AS(parse_presentation("gens: a a"), Error);

  // ';' separates statements like a newline
  auto semi = parse_presentation("gens: a; rel: a^3");
  CHECK(semi.relators.size() == 1);

  // comments are ignored
  auto com = parse_presentation("# header\ngens: a # trailing\nrel: a^2 # again\n");
  CHECK(com.relators.size() == 1);
}

TEST_CASE("free reduction") {
  auto p = parse_presentation("gens: a b");
  CHECK(parse_word("a b b^-1 a", p) == parse_word("a^2", p));
  CHECK(parse_word("a^0", p).is_identity());
  CHECK(parse_word("a^2 a^-2", p).is_identity());
  CHECK(free_reduce({{0, 1}, {0, -1}, {1, 2}}).syllables() == std::vector<Syllable>{{1, 2}});
  // inverse and product
  auto w = parse_word("a b^-2", p);
  CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("todd-coxeter on small groups") {
  CHECK(testutil::z3().table->order() == 3);
  CHECK(testutil::z6().table->order() == 6);
  CHECK(testutil::klein4().table->order() == 4);
  CHECK(testutil::realize("gens:\n").table->order() == 1);

  check_group_axioms(*testutil::z6().table);
  check_group_axioms(*testutil::klein4().table);

  auto z3 = testutil::z3();
  for (const auto& r : z3.pres.relators) CHECK(z3.table->eval_word(r) == z3.table->identity());
}

TEST_CASE("todd-coxeter rejects an infinite enumeration") {
  auto p = parse_presentation("gens: a\n");
  CHECK_THROWS_AS((void)todd_coxeter(p, 100), Error);
  try {
    (void)todd_coxeter(p, 100);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::CosetLimitExceeded);
  }
}

TEST_CASE("todd-coxeter realizes the Poincare sphere group") {
  auto g = testutil::realize(
      "gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2", 1000);
  CHECK(g.table->order() == 120);
  check_group_axioms(*g.table);
  for (const auto& r : g.pres.relators) CHECK(g.table->eval_word(r) == g.table->identity());
  // independent permutation-closure witness
  CHECK(permutation_closure_order(*g.table) == 120);
  // element words evaluate back to their elements
  for (size_t e = 0; e < g.table->order(); ++e)
    CHECK(g.table->eval_word(g.table->element_words()[e]) == static_cast<int>(e));
  // determinism: a second run yields the identical table
  auto again = testutil::realize("gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2", 1000);
  CHECK(*g.table == *again.table);
}

TEST_CASE("abelianization and dim Hom") {
  auto poincare = parse_presentation("gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2");
  CHECK(abelianization(poincare) == AbelianGroup{0, {}});
  CHECK(dim_hom_r(poincare) == 0);

  auto z2pres = parse_presentation("gens: a\nrel: a^2");
  CHECK(abelianization(z2pres) == AbelianGroup{0, {Int(2)}});
  CHECK(dim_hom_r(z2pres) == 0);

  auto zz = parse_presentation("gens: a b\nrel: a b a^-1 b^-1");
  CHECK(abelianization(zz) == AbelianGroup{2, {}});
  CHECK(dim_hom_r(zz) == 2);

  auto free2 = parse_presentation("gens: a b\n");
  CHECK(dim_hom_r(free2) == 2);
}

TEST_CASE("abelianization rank equals dim Hom on random presentations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ngens(1, 3), nrels(0, 3), nsyl(1, 4), exp(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p;
    int m = ngens(rng);
    for (int i = 0; i < m; ++i) p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
    int r = nrels(rng);
    for (int i = 0; i < r; ++i) {
      std::vector<Syllable> syl;
      int len = nsyl(rng);
      for (int j = 0; j < len; ++j) {
        int e = exp(rng);
        if (e != 0) syl.push_back({std::uniform_int_distribution<int>(0, m - 1)(rng), e});
      }
      p.relators.push_back(FreeWord(syl));
    }
    CHECK(abelianization(p).rank == dim_hom_r(p));
  }
}

TEST_CASE("cyclicity and minimal generators") {
  auto z6 = testutil::z6(), klein = testutil::klein4(), poincare = testutil::poincare();
  CHECK(is_cyclic(*z6.table));
  CHECK(!is_cyclic(*klein.table));
  CHECK(!is_cyclic(*poincare.table));

  CHECK(min_generators(*klein.table, 3) == 2);
  CHECK(min_generators(*z6.table, 3) == 1);
  CHECK(min_generators(*poincare.table, 3) == 2);
  CHECK(min_generators(*testutil::realize("gens:\n").table, 2) == 0);

  for (const auto& g : {z6, klein, poincare})
    CHECK(is_cyclic(*g.table) == (min_generators(*g.table, 1) == 1));

  // exhaustive search is capped at order 512
  auto big = testutil::realize("gens: a\nrel: a^600", 2000);
  CHECK_THROWS_AS((void)min_generators(*big.table, 2), Error);
  try {
    (void)min_generators(*big.table, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::BudgetExceeded);
  }
}

TEST_CASE("abelianization map coordinates") {
  auto z2 = testutil::z2();
  AbelianizationMap ab(z2.pres);
  CHECK(ab.group() == AbelianGroup{0, {Int(2)}});
  CHECK(ab.image(parse_word("a", z2.pres)) == std::vector<Int>{1});
  CHECK(ab.image(parse_word("a^2", z2.pres)) == std::vector<Int>{0});

  auto poincare = testutil::poincare();
  AbelianizationMap pab(poincare.pres);
  CHECK(pab.num_coordinates() == 0);

  auto zz = parse_presentation("gens: a b\nrel: a b a^-1 b^-1");
  AbelianizationMap zab(zz);
  CHECK(zab.num_coordinates() == 2);
  auto ia = zab.image(parse_word("a", zz)), ib = zab.image(parse_word("b", zz));
  // images of the generators form a basis of Z^2
  IntMatrix m(2, 2);
  m.at(0, 0) = ia[0];
  m.at(0, 1) = ia[1];
  m.at(1, 0) = ib[0];
  m.at(1, 1) = ib[1];
  auto d = oracle::det(m);
  CHECK((d == 1 || d == -1));
}
