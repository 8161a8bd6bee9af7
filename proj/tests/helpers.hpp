#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "massform/expr.hpp"
#include "massform/group.hpp"
#include "massform/masspoly.hpp"

namespace testutil {

inline massform::Permutation perm_of(int degree,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return massform::Permutation::from_cycles(degree, cs);
}

inline massform::PermGroup group_of(const std::string& text,
                                    long long max_order = massform::kDefaultMaxOrder) {
  return massform::build_group(*massform::parse_group(text), max_order);
}

inline massform::TameCountingFunction counting_of(const std::string& text,
                                                  const massform::PermGroup& g) {
  return massform::build_counting(*massform::parse_counting(text), g);
}

inline massform::MassPoly poly_of(std::initializer_list<long long> coeffs) {
  return massform::MassPoly(std::vector<long long>(coeffs));
}

// The counting expressions naturally attached to a group expression:
// perm and zero always; the fully structural composite for wr/x nodes;
// signed for wr(S2, ·).
inline std::vector<std::string> natural_countings(const massform::GroupExpr& e) {
  using Kind = massform::GroupExpr::Kind;
  std::vector<std::string> result{"perm", "zero"};
  const auto structural = [](const massform::GroupExpr& node, const auto& self) -> std::string {
    switch (node.kind()) {
      case Kind::Wr:
        return "wreath(" + self(*node.left(), self) + "," + self(*node.right(), self) + ")";
      case Kind::Prod:
        return "sum(" + self(*node.left(), self) + "," + self(*node.right(), self) + ")";
      default:
        return "perm";
    }
  };
  if (e.kind() == Kind::Wr || e.kind() == Kind::Prod)
    result.push_back(structural(e, structural));
  if (e.kind() == Kind::Wr && e.left()->kind() == Kind::Sym && e.left()->sym_n() == 2)
    result.push_back("signed");
  return result;
}

}  // namespace testutil
