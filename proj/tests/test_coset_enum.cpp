#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tensordeg/catalog.hpp"
#include "tensordeg/coset_enum.hpp"
#include "tensordeg/errors.hpp"

using namespace tdeg;

namespace {

Presentation s3_presentation() { return Presentation(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}); }

}  // namespace

TEST_CASE("free_reduce cancels adjacent inverses") {
  const std::int32_t w[] = {1, 2, -2, -1, 3};
  CHECK(free_reduce(w) == Word{3});
  const std::int32_t v[] = {1, -1};
  CHECK(free_reduce(v).empty());
}

TEST_CASE("presentations normalise their relators") {
  const Presentation a(2, {{1, 2, -2}, {2, 2, 2}, {}, {1}});
  const Presentation b(2, {{1}, {2, 2, 2}});
  CHECK(a == b);
  CHECK_THROWS_AS(Presentation(1, {{2}}), InvalidPresentation);
  CHECK_THROWS_AS(Presentation(1, {{0}}), InvalidPresentation);
}

TEST_CASE("cyclic group of order 5") {
  const auto eg = todd_coxeter(Presentation(1, {{1, 1, 1, 1, 1}}));
  CHECK(eg.group->order() == 5);
  CHECK(eg.group->is_abelian());
  CHECK(eg.group->element_order(eg.genmap[0]) == 5);
}

TEST_CASE("trivial and degenerate presentations") {
  CHECK(todd_coxeter(Presentation(1, {{1}})).group->order() == 1);
  CHECK(todd_coxeter(Presentation(0, {})).group->order() == 1);
  // <a, b | a b^-1, a^3>: a = b, order 3
  const auto eg = todd_coxeter(Presentation(2, {{1, -2}, {1, 1, 1}}));
  CHECK(eg.group->order() == 3);
  CHECK(eg.genmap[0] == eg.genmap[1]);
}

TEST_CASE("S3 presentation matches the catalog") {
  const auto eg = todd_coxeter(s3_presentation());
  CHECK(eg.group->order() == 6);
  CHECK(oracle::class_count(*eg.group) == 3);
  CHECK(oracle::order_profile(*eg.group) == oracle::order_profile(*catalog_group("S3")));
  CHECK_FALSE(eg.group->is_abelian());
}

TEST_CASE("quaternion and dihedral presentations") {
  // Q8 = <a, b | a^4, a^2 b^-2, b^-1 a b a>
  const auto q8 = todd_coxeter(Presentation(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}));
  CHECK(q8.group->order() == 8);
  CHECK(oracle::order_profile(*q8.group) == oracle::order_profile(*catalog_group("Q8")));
  // D6 = <r, s | r^6, s^2, (rs)^2>
  const auto d6 = todd_coxeter(Presentation(2, {{1, 1, 1, 1, 1, 1}, {2, 2}, {1, 2, 1, 2}}));
  CHECK(d6.group->order() == 12);
  CHECK(oracle::class_count(*d6.group) == 6);
  // A5 = <a, b | a^2, b^3, (ab)^5>
  const auto a5 = todd_coxeter(Presentation(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}));
  CHECK(a5.group->order() == 60);
  CHECK(oracle::order_profile(*a5.group) == oracle::order_profile(*catalog_group("A5")));
}

TEST_CASE("infinite presentations hit the coset cap") {
  CHECK_THROWS_AS(todd_coxeter(Presentation(1, {}), 100), CosetLimitExceeded);
  try {
    todd_coxeter(Presentation(2, {{1, 2, -1, -2}}), 250);
    FAIL("expected CosetLimitExceeded");
  } catch (const CosetLimitExceeded& e) {
    CHECK(e.cap() == 250);
  }
}

TEST_CASE("evaluate_word") {
  const auto eg = todd_coxeter(s3_presentation());
  const FiniteGroup& g = *eg.group;
  CHECK(evaluate_word(eg, Word{}) == 0);
  CHECK(evaluate_word(eg, Word{1, 1}) == 0);
  CHECK(evaluate_word(eg, Word{2, 2, 2}) == 0);
  CHECK(evaluate_word(eg, Word{-1}) == g.inv(eg.genmap[0]));
  CHECK(evaluate_word(eg, Word{1, 2}) == g.mul(eg.genmap[0], eg.genmap[1]));
  CHECK(evaluate_word(eg, Word{-2, 1}) == g.mul(g.inv(eg.genmap[1]), eg.genmap[0]));
}

TEST_CASE("relator order does not change the result") {
  const std::vector<Word> rels = {{1, 1, 1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2}, {-1, 2, 1, 2}};
  const auto reference = todd_coxeter(Presentation(2, rels));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = rels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto eg = todd_coxeter(Presentation(2, shuffled));
    CHECK(eg.genmap == reference.genmap);
    for (Elem a = 0; a < eg.group->order(); ++a) CHECK(std::ranges::equal(eg.group->row(a), reference.group->row(a)));
  }
}

TEST_CASE("the cap does not change the numbering") {
  const auto small = todd_coxeter(s3_presentation(), 64);
  const auto large = todd_coxeter(s3_presentation(), 100000);
  CHECK(small.genmap == large.genmap);
  for (Elem a = 0; a < 6; ++a) CHECK(std::ranges::equal(small.group->row(a), large.group->row(a)));
}

TEST_CASE("property: every relator evaluates to the identity") {
  const Presentation p(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2, 1, 2, 1, 2}, {2, 3, 2, 3, 2, 3}, {1, 3, 1, 3}});
  const auto eg = todd_coxeter(p);
  CHECK(eg.group->order() == 24);  // the Coxeter group A3, isomorphic to S4
  CHECK(oracle::order_profile(*eg.group) == oracle::order_profile(*catalog_group("S4")));
  for (const auto& r : p.relators()) CHECK(evaluate_word(eg, r) == 0);
}

TEST_CASE("quotient_group") {
  auto d4 = catalog_group("D4");
  const Subgroup whole = Subgroup::whole(d4);
  const Subgroup z = centralizer(whole, whole.elements());
  const Quotient q = quotient_group(z);
  CHECK(q.group->order() == 4);
  CHECK(q.group->is_abelian());
  CHECK(oracle::order_profile(*q.group) == std::vector<std::size_t>{1, 2, 2, 2});
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(q.projection[d4->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  for (Elem x : z.elements()) CHECK(q.projection[x] == 0);

  CHECK(quotient_group(whole).group->order() == 1);
  CHECK(quotient_group(Subgroup::trivial(d4)).group->order() == 8);

  auto s3 = catalog_group("S3");
  Elem two = 1;
  while (s3->element_order(two) != 2) ++two;
  const Elem g[] = {two};
  CHECK_THROWS_AS(quotient_group(subgroup_closure(s3, g)), NotNormal);
}
