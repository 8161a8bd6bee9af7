#include <doctest.h>
#include <numeric>

#include "helpers.hpp"
#include "massform/expr.hpp"
#include "massform/mass.hpp"
#include "massform/reference.hpp"
#include "oracle.hpp"

using namespace massform;
using testutil::counting_of;
using testutil::group_of;
using testutil::natural_countings;

// Catalog-wide structural invariants. The acceptance suite re-runs these as
// its final criterion; here they gate ordinary development builds.

TEST_CASE("class equation across the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const PermGroup g = group_of(entry.group_text);
    long long total = 0;
    for (const auto& cls : g.classes()) {
      total += cls.size;
      CHECK(cls.size * centralizer_order(g, cls.representative) == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("counting-function invariants across the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto expr = parse_group(entry.group_text);
    const PermGroup g = build_group(*expr);
    for (const auto& counting_text : natural_countings(*expr)) {
      CAPTURE(counting_text);
      const TameCountingFunction c = counting_of(counting_text, g);

      CHECK(c.value(Permutation(g.degree())) == 0);

      for (int idx = 0; idx < g.order(); ++idx) {
        const Permutation& x = g.element(idx);
        // power invariance: the value depends only on <x>
        const int ord = x.order();
        for (int k = 1; k < ord; ++k) {
          if (std::gcd(k, ord) != 1) continue;
          CHECK(c.value(x.power(k)) == c.value(x));
        }
      }

      // conjugation invariance, exhaustively
      for (const auto& x : g.elements())
        for (const auto& y : g.elements())
          CHECK(c.value(compose(compose(y, x), y.inverse())) == c.value(x));
    }
  }
}

TEST_CASE("perm conductor vanishes only at the identity") {
  for (const auto& entry : catalog()) {
    const PermGroup g = group_of(entry.group_text);
    const TameCountingFunction c = perm_conductor(g);
    for (const auto& x : g.elements())
      CHECK((c.value(x) == 0) == x.is_identity());
  }
}

TEST_CASE("type partition and coset law across the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const PermGroup g = group_of(entry.group_text);
    const TameCountingFunction c = perm_conductor(g);
    for (long long a : invertible_residues(g.order())) {
      MassPoly sum;
      for (const auto& [key, mass] : mass_by_type(g, c, a)) {
        sum += mass;
        CHECK(key.total_degree() == g.degree());
      }
      CHECK(sum == total_mass(g, c, a));

      for (const auto& cls : g.classes()) {
        const auto sols = frobenius_solutions(g, cls.representative, a);
        CHECK((sols.empty() ||
               static_cast<long long>(sols.size()) ==
                   centralizer_order(g, cls.representative)));
      }
    }
  }
}

TEST_CASE("wreath-type partition and flattening across the wreath catalog") {
  for (const auto& entry : catalog()) {
    const auto expr = parse_group(entry.group_text);
    if (expr->kind() != GroupExpr::Kind::Wr) continue;
    CAPTURE(entry.name);
    const PermGroup w = build_group(*expr);
    const TameCountingFunction c = perm_conductor(w);
    for (long long a : invertible_residues(w.order())) {
      MassPoly sum;
      for (const auto& [sigma, mass] : mass_by_wreath_type(w, c, a)) sum += mass;
      CHECK(sum == total_mass(w, c, a));
    }

    // flattening consistency over every representative pair
    for (long long a : invertible_residues(w.order())) {
      for (const auto& cls : w.classes()) {
        for (const auto& h : frobenius_solutions(w, cls.representative, a)) {
          CHECK(wreath_type_of_pair(w, cls.representative, h).flatten() ==
                ram_type_of_pair(cls.representative, h));
        }
      }
    }
  }
}

TEST_CASE("product-type partition across the product catalog") {
  for (const auto& entry : catalog()) {
    const auto expr = parse_group(entry.group_text);
    if (expr->kind() != GroupExpr::Kind::Prod) continue;
    const PermGroup p = build_group(*expr);
    const TameCountingFunction c = counting_of("sum(perm,perm)", p);
    for (long long a : invertible_residues(p.order())) {
      MassPoly sum;
      for (const auto& [key, mass] : mass_by_product_type(p, c, a)) sum += mass;
      CHECK(sum == total_mass(p, c, a));
    }
  }
}

TEST_CASE("suborbit sizes are constant within a Galois orbit") {
  const PermGroup g18 = group_of("custom(6; (1 2 3), (4 5 6), (2 3)(5 6))");
  for (long long a : invertible_residues(18)) {
    for (const auto& cls : g18.classes()) {
      const Permutation& g = cls.representative;
      for (const auto& h : frobenius_solutions(g18, g, a)) {
        // ram_type_of_pair throws when suborbits are uneven
        CHECK_NOTHROW(ram_type_of_pair(g, h));
      }
    }
  }
}

TEST_CASE("enumerated element lists are closed under composition and inverse") {
  for (const char* text : {"wr(S3,S2)", "x(S2,S3)", "S4"}) {
    const PermGroup g = group_of(text);
    for (int i = 0; i < g.order(); i += 5) {
      CHECK(g.contains(g.element(i).inverse()));
      for (int j = 0; j < g.order(); j += 7)
        CHECK(g.contains(compose(g.element(i), g.element(j))));
    }
  }
}

TEST_CASE("inertia orbits refine Galois orbits") {
  const PermGroup g18 = group_of("custom(6; (1 2 3), (4 5 6), (2 3)(5 6))");
  for (long long a : {1LL, 5LL}) {
    for (const auto& cls : g18.classes()) {
      const Permutation& g = cls.representative;
      for (const auto& h : frobenius_solutions(g18, g, a)) {
        const auto joint = orbits({g, h}, g18.degree());
        std::vector<int> orbit_of_point(static_cast<std::size_t>(g18.degree()), -1);
        for (std::size_t oi = 0; oi < joint.size(); ++oi)
          for (int p : joint[oi]) orbit_of_point[static_cast<std::size_t>(p)] = static_cast<int>(oi);
        for (const auto& cycle : g.cycles(true))
          for (int p : cycle)
            CHECK(orbit_of_point[static_cast<std::size_t>(p)] ==
                  orbit_of_point[static_cast<std::size_t>(cycle.front())]);
      }
    }
  }
}

TEST_CASE("group expression round-trips across the catalog") {
  for (const auto& entry : catalog()) {
    const auto parsed = parse_group(entry.group_text);
    CHECK(parse_group(parsed->str())->str() == parsed->str());
  }
}

TEST_CASE("mass constant term is the group order for faithful conductors") {
  for (const auto& entry : catalog()) {
    const auto expr = parse_group(entry.group_text);
    const PermGroup g = build_group(*expr);
    for (const auto& counting_text : natural_countings(*expr)) {
      if (counting_text == "zero") continue;
      const TameCountingFunction c = counting_of(counting_text, g);
      bool faithful = true;
      for (const auto& x : g.elements())
        if (!x.is_identity() && c.value(x) == 0) faithful = false;
      if (!faithful) continue;
      CHECK(total_mass(g, c, 1).coeff(0) == g.order());
    }
  }
}
