#include <algorithm>
#include <doctest.h>
#include <set>

#include "helpers.hpp"
#include "massform/errors.hpp"
#include "massform/group.hpp"

using namespace massform;
using testutil::perm_of;

namespace {

std::multiset<int> element_orders(const PermGroup& g) {
  std::multiset<int> orders;
  for (const auto& e : g.elements()) orders.insert(e.order());
  return orders;
}

void check_class_equation(const PermGroup& g) {
  long long total = 0;
  for (const auto& cls : g.classes()) {
    total += cls.size;
    CHECK(cls.size == static_cast<long long>(cls.members.size()));
    CHECK(cls.size * centralizer_order(g, cls.representative) == g.order());
  }
  CHECK(total == g.order());
}

}  // namespace

TEST_CASE("generate closes the generators") {
  const PermGroup c2 = generate(2, {perm_of(2, {{0, 1}})});
  CHECK(c2.order() == 2);

  const PermGroup d4 = generate(4, {perm_of(4, {{0, 1, 2, 3}}), perm_of(4, {{0, 2}})});
  CHECK(d4.order() == 8);

  const PermGroup g18 = generate(
      6, {perm_of(6, {{0, 1, 2}}), perm_of(6, {{3, 4, 5}}), perm_of(6, {{1, 2}, {4, 5}})});
  CHECK(g18.order() == 18);
}

TEST_CASE("generate enforces the cap and generator degrees") {
  CHECK_THROWS_AS(generate(4, {perm_of(4, {{0, 1, 2, 3}}), perm_of(4, {{0, 1}})}, 5),
                  SizeCapError);
  CHECK_THROWS_AS(generate(3, {perm_of(2, {{0, 1}})}), std::invalid_argument);
}

TEST_CASE("symmetric groups") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(4).order() == 24);
  // classes of S5 = partitions of 5
  CHECK(symmetric_group(5).classes().size() == 7);
  CHECK_THROWS_AS(symmetric_group(8, 20000), SizeCapError);
}

TEST_CASE("element zero is the identity and lookups work") {
  const PermGroup s4 = symmetric_group(4);
  CHECK(s4.element(0).is_identity());
  CHECK(s4.index_of(s4.element(7)) == 7);
  CHECK(!s4.contains(Permutation(3)));
  CHECK_THROWS_AS(s4.index_of(Permutation(3)), NotInGroup);
}

TEST_CASE("wreath product: order, degree, point layout") {
  const PermGroup s2 = symmetric_group(2);
  const PermGroup w = wreath_product(s2, s2);
  CHECK(w.order() == 8);
  CHECK(w.degree() == 4);
  CHECK(w.is_wreath());
  CHECK(w.inner().order() == 2);

  // isomorphic to the D4 generated inside S4: same element-order profile
  const PermGroup d4 = generate(4, {perm_of(4, {{0, 1, 2, 3}}), perm_of(4, {{0, 2}})});
  CHECK(element_orders(w) == element_orders(d4));

  const PermGroup wb3 = wreath_product(s2, symmetric_group(3));
  CHECK(wb3.order() == 48);
  CHECK(wb3.degree() == 6);

  // A ≀ (trivial group on one point) is A again up to relabeling
  const PermGroup s3 = symmetric_group(3);
  const PermGroup w1 = wreath_product(s3, symmetric_group(1));
  CHECK(w1.order() == 6);
  CHECK(w1.degree() == 3);
  CHECK(element_orders(w1) == element_orders(s3));

  CHECK_THROWS_AS(wreath_product(symmetric_group(4), symmetric_group(4)), SizeCapError);
}

TEST_CASE("direct product: order and degree") {
  const PermGroup p = direct_product(symmetric_group(2), symmetric_group(3));
  CHECK(p.order() == 12);
  CHECK(p.degree() == 5);
  CHECK(p.is_product());

  const PermGroup q = direct_product(symmetric_group(1), symmetric_group(3));
  CHECK(q.order() == 6);
  CHECK(q.degree() == 4);

  CHECK(direct_product(symmetric_group(2), symmetric_group(2)).order() == 4);
  CHECK(direct_product(symmetric_group(2), symmetric_group(2)).degree() == 4);
}

TEST_CASE("plain groups expose no factors") {
  const PermGroup s3 = symmetric_group(3);
  CHECK(s3.structure() == PermGroup::Structure::Plain);
  CHECK_THROWS_AS(s3.inner(), StructureError);
}

TEST_CASE("orbits") {
  CHECK(orbits({Permutation(4)}, 4) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
  CHECK(orbits({perm_of(4, {{0, 1, 2, 3}})}, 4) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(orbits({perm_of(4, {{0, 1}}), perm_of(4, {{2, 3}})}, 4) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("conjugacy machinery") {
  const PermGroup s4 = symmetric_group(4);
  CHECK(centralizer_order(s4, Permutation(4)) == 24);
  const PermGroup s3 = symmetric_group(3);
  CHECK(is_conjugate(s3, perm_of(3, {{0, 1, 2}}), perm_of(3, {{0, 2, 1}})));
  CHECK(!is_conjugate(s3, Permutation(3), perm_of(3, {{0, 1}})));

  // centralizer of a 4-cycle inside the order-8 dihedral group
  const PermGroup d4 = generate(4, {perm_of(4, {{0, 1, 2, 3}}), perm_of(4, {{0, 2}})});
  CHECK(centralizer_order(d4, perm_of(4, {{0, 1, 2, 3}})) == 4);

  check_class_equation(s4);
  check_class_equation(d4);
}

TEST_CASE("cycle products in a wreath group") {
  const PermGroup w = wreath_product(symmetric_group(2), symmetric_group(2));
  const Permutation swap_inner = perm_of(2, {{0, 1}});

  // identity has trivial cycle products everywhere
  CHECK(cycle_product(w, Permutation(4), 0) == Permutation(2));
  CHECK(cycle_product(w, Permutation(4), 1) == Permutation(2));

  // the flattened four-cycle (swap base; components s, 1)
  const Permutation four_cycle(std::vector<int>{3, 2, 0, 1});
  CHECK(w.contains(four_cycle));
  CHECK(four_cycle.order() == 4);
  CHECK(cycle_product(w, four_cycle, 0) == swap_inner);
  CHECK(cycle_product(w, four_cycle, 1) == swap_inner);

  // (id; (s, 1)): block 1 is fixed with trivial component
  const Permutation reflection(std::vector<int>{1, 0, 2, 3});
  CHECK(cycle_product(w, reflection, 0) == swap_inner);
  CHECK(cycle_product(w, reflection, 1) == Permutation(2));

  CHECK_THROWS_AS(cycle_product(symmetric_group(4), Permutation(4), 0), StructureError);
  CHECK_THROWS_AS(cycle_product(w, Permutation(4), 7), std::invalid_argument);
}

TEST_CASE("cycle products along one base cycle are conjugate in the inner factor") {
  const PermGroup w = wreath_product(symmetric_group(3), symmetric_group(3), 20000);
  const PermGroup& inner = w.inner();
  for (int idx = 0; idx < w.order(); idx += 7) {
    const Permutation& g = w.element(idx);
    const Permutation base = wreath_base(w, g);
    for (const auto& cycle : base.cycles(true)) {
      const Permutation reference = cycle_product(w, g, cycle.front());
      for (int j : cycle)
        CHECK(is_conjugate(inner, cycle_product(w, g, j), reference));
    }
  }
}

TEST_CASE("wreath elements decompose into base and components") {
  const PermGroup w = wreath_product(symmetric_group(3), symmetric_group(2));
  const int inner_degree = w.inner().degree();
  for (const auto& g : w.elements()) {
    const Permutation base = wreath_base(w, g);
    CHECK(w.outer().contains(base));
    for (int j = 0; j < w.outer().degree(); ++j) {
      const Permutation component = wreath_component(w, g, j);
      CHECK(w.inner().contains(component));
      for (int x = 0; x < inner_degree; ++x)
        CHECK(g(j * inner_degree + x) == base(j) * inner_degree + component(x));
    }
  }
}

TEST_CASE("product components split and recombine") {
  const PermGroup p = direct_product(symmetric_group(2), symmetric_group(3));
  for (const auto& g : p.elements()) {
    const auto [left, right] = product_components(p, g);
    CHECK(p.inner().contains(left));
    CHECK(p.outer().contains(right));
  }
}
