#include <doctest.h>

#include "oracles.hpp"
#include "tensordeg/catalog.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/tensor.hpp"

using namespace tdeg;

namespace {

ExteriorData square(const std::string& name) {
  const Subgroup g = Subgroup::whole(catalog_group(name));
  return exterior_data(tensor_square(g, g));
}

Subgroup closure_of(const GroupPtr& g, std::initializer_list<Elem> gens) {
  const std::vector<Elem> v(gens);
  return subgroup_closure(g, v);
}

}  // namespace

TEST_CASE("normal subgroups act compatibly") {
  for (const auto& name : {"S3", "D4", "Q8", "A4"}) {
    auto g = catalog_group(name);
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup comm = relative_commutator(whole, whole);
    CHECK(check_compatibility(whole, whole));
    CHECK(check_compatibility(comm, whole));
    CHECK(check_compatibility(whole, comm));
  }
}

TEST_CASE("tensor presentation shape") {
  auto c1 = catalog_group("C1");
  const auto t1 = tensor_presentation(Subgroup::whole(c1), Subgroup::whole(c1));
  CHECK(t1.pres.ngens() == 1);

  auto z2 = catalog_group("C2");
  const auto t2 = tensor_presentation(Subgroup::whole(z2), Subgroup::whole(z2));
  CHECK(t2.pres.ngens() == 4);
  CHECK(t2.h_size == 2);
  CHECK(t2.k_size == 2);
  CHECK(todd_coxeter(t2.pres).group->order() == 2);

  auto v4 = catalog_group("C2xC2");
  const auto t4 = tensor_presentation(Subgroup::whole(v4), Subgroup::whole(v4));
  CHECK(t4.pres.ngens() == 16);
  CHECK(todd_coxeter(t4.pres).group->order() == 16);

  auto s3 = catalog_group("S3");
  Elem two = 1;
  while (s3->element_order(two) != 2) ++two;
  CHECK_THROWS_AS(tensor_presentation(closure_of(s3, {two}), Subgroup::whole(s3)), NotNormal);
}

TEST_CASE("redundant trivial symbols do not change the group") {
  for (const auto& name : {"C2", "C4", "S3", "C2xC2", "Q8"}) {
    auto g = catalog_group(name);
    const Subgroup w = Subgroup::whole(g);
    const auto with = tensor_presentation(w, w, true);
    const auto without = tensor_presentation(w, w, false);
    CHECK(todd_coxeter(with.pres).group->order() == todd_coxeter(without.pres).group->order());
  }
}

TEST_CASE("Z2 tensor square") {
  const auto ed = square("C2");
  CHECK(ed.base.eg.group->order() == 2);
  CHECK(ed.base.J.size() == 2);
  CHECK(ed.M.size() == 1);
  CHECK(ed.wedge_group->order() == 1);
  CHECK_FALSE(vanishes(ed, 1, 1, Mode::tensor));
  CHECK(vanishes(ed, 1, 1, Mode::exterior));
  CHECK(vanishes(ed, 0, 1, Mode::tensor));
  CHECK(vanishes(ed, 1, 0, Mode::tensor));
}

TEST_CASE("S3 tensor square") {
  const auto ed = square("S3");
  CHECK(ed.base.eg.group->order() == 6);
  CHECK(ed.base.J.size() == 2);
  CHECK(ed.base.commutator_HK.size() == 3);
  CHECK(ed.nabla.size() == 2);
  CHECK(ed.wedge_group->order() == 3);
  CHECK(ed.M.size() == 1);
}

TEST_CASE("tensor product of A3 with the trivial subgroup") {
  auto s3 = catalog_group("S3");
  Elem three = 1;
  while (s3->element_order(three) != 3) ++three;
  const Subgroup a3 = closure_of(s3, {three});
  const auto td = tensor_square(a3, Subgroup::trivial(s3));
  CHECK(td.eg.group->order() == 1);
  CHECK(td.J.size() == 1);
  CHECK(td.commutator_HK.size() == 1);
}

TEST_CASE("S3 tensor A3") {
  auto s3 = catalog_group("S3");
  Elem three = 1;
  while (s3->element_order(three) != 3) ++three;
  const Subgroup a3 = closure_of(s3, {three});
  const Subgroup w = Subgroup::whole(s3);
  const auto td = tensor_square(w, a3);
  CHECK(td.commutator_HK == a3);
  CHECK(td.eg.group->order() == td.J.size() * 3);
}

TEST_CASE("known exterior squares and multipliers") {
  // |G (x) G|, |G ^ G|, |M(G)|
  const std::tuple<const char*, std::size_t, std::size_t, std::size_t> cases[] = {
      {"C5", 5, 1, 1},    {"C2xC2", 16, 2, 2}, {"Q8", 64, 2, 1},  {"D4", 32, 4, 2},
      {"A4", 24, 8, 2},   {"D6", 48, 6, 2},   {"Dic3", 12, 3, 1}, {"C3xC3", 81, 3, 3},
  };
  for (const auto& [name, t, w, m] : cases) {
    CAPTURE(name);
    const auto ed = square(name);
    CHECK(ed.base.eg.group->order() == t);
    CHECK(ed.wedge_group->order() == w);
    CHECK(ed.M.size() == m);
  }
}

TEST_CASE("kappa sends h (x) k to the commutator") {
  for (const auto& name : {"S3", "D4", "Q8", "A4"}) {
    const auto ed = square(name);
    const TensorData& td = ed.base;
    const FiniteGroup& g = *td.G;
    for (Elem h = 0; h < g.order(); ++h)
      for (Elem k = 0; k < g.order(); ++k) {
        CHECK(td.kappa[td.tensor_element(h, k)] == g.commutator(h, k));
        CHECK(ed.kappa_prime[ed.projection[td.tensor_element(h, k)]] == g.commutator(h, k));
      }
  }
}

TEST_CASE("property: tensor identities in the enumerated group") {
  for (const auto& name : {"S3", "D4", "Q8", "C4xC2"}) {
    const auto ed = square(name);
    const TensorData& td = ed.base;
    const FiniteGroup& g = *td.G;
    const FiniteGroup& t = *td.eg.group;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        // (a (x) b)^-1 = ^b a (x) b^-1
        CHECK(t.inv(td.tensor_element(a, b)) == td.tensor_element(g.conj(b, a), g.inv(b)));
        for (Elem c = 0; c < g.order(); ++c) {
          CHECK(td.tensor_element(g.mul(a, b), c) ==
                t.mul(td.tensor_element(g.conj(a, b), g.conj(a, c)), td.tensor_element(a, c)));
          CHECK(td.tensor_element(a, g.mul(b, c)) ==
                t.mul(td.tensor_element(a, b), td.tensor_element(g.conj(b, a), g.conj(b, c))));
        }
      }
    // J is central
    for (Elem j : td.J.elements())
      for (Elem x = 0; x < t.order(); ++x) CHECK(t.mul(j, x) == t.mul(x, j));
  }
}

TEST_CASE("oracle: abelian gcd formulas and element vanishing") {
  for (const auto& name : {"C2", "C3", "C4", "C6", "C2xC2", "C4xC2", "C3xC3", "C2xC2xC2", "C6xC2"}) {
    CAPTURE(name);
    const auto m = oracle::cyclic_moduli(name);
    const auto ed = square(name);
    CHECK(static_cast<std::int64_t>(ed.base.eg.group->order()) == oracle::tensor_order(m));
    CHECK(static_cast<std::int64_t>(ed.wedge_group->order()) == oracle::exterior_order(m));
    const std::size_t n = ed.base.G->order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        CHECK(vanishes(ed, a, b, Mode::tensor) == oracle::bilinear_vanishes(a, b, m));
        CHECK(vanishes(ed, a, b, Mode::exterior) == oracle::alternating_vanishes(a, b, m));
      }
  }
}

TEST_CASE("oracle: nonabelian squares against nu(G)") {
  for (const auto& name : {"S3", "D4", "Q8", "A4", "Dic3"}) {
    CAPTURE(name);
    auto g = catalog_group(name);
    const oracle::NuGroup nu(*g);
    const auto ed = square(name);
    CHECK(nu.nu_order() == g->order() * g->order() * ed.base.eg.group->order());
    CHECK(nu.tensor_order() == ed.base.eg.group->order());
    CHECK(nu.nabla_order() == ed.nabla.size());
    for (Elem a = 0; a < g->order(); ++a)
      for (Elem b = 0; b < g->order(); ++b) {
        CHECK(vanishes(ed, a, b, Mode::tensor) == nu.tensor_trivial(a, b));
        CHECK(vanishes(ed, a, b, Mode::exterior) == nu.wedge_trivial(a, b));
      }
  }
}

TEST_CASE("vanishes rejects elements outside H or K") {
  auto s3 = catalog_group("S3");
  Elem three = 1;
  while (s3->element_order(three) != 3) ++three;
  Elem two = 1;
  while (s3->element_order(two) != 2) ++two;
  const Subgroup a3 = closure_of(s3, {three});
  const auto ed = exterior_data(tensor_square(a3, Subgroup::whole(s3)));
  CHECK_THROWS_AS(vanishes(ed, two, 0, Mode::tensor), ElementOutOfRange);
  CHECK_NOTHROW(vanishes(ed, three, two, Mode::tensor));
}

TEST_CASE("small coset cap is reported") {
  auto g = catalog_group("C2xC2xC2");
  const Subgroup w = Subgroup::whole(g);
  CHECK_THROWS_AS(tensor_square(w, w, 100), CosetLimitExceeded);
}
