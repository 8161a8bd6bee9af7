#include "massform/counting.hpp"

#include <stdexcept>

#include "massform/errors.hpp"

namespace massform {

// Evaluates eval on every element, checks constancy on conjugacy classes,
// and stores the per-class table.
template <typename Eval>
TameCountingFunction make_counting_function(const PermGroup& g, std::string name,
                                            Eval&& eval) {
  std::vector<long long> class_values(g.classes().size(), -1);
  for (int idx = 0; idx < static_cast<int>(g.order()); ++idx) {
    const long long v = eval(g.element(idx));
    if (v < 0) throw std::logic_error("counting function produced a negative value");
    auto& slot = class_values[static_cast<std::size_t>(g.class_of(idx))];
    if (slot == -1) slot = v;
    else if (slot != v)
      throw std::logic_error("counting function is not conjugation invariant");
  }
  return TameCountingFunction(std::make_shared<PermGroup>(g), std::move(name),
                              std::move(class_values));
}

TameCountingFunction perm_conductor(const PermGroup& g) {
  return make_counting_function(g, "perm", [&](const Permutation& p) {
    return static_cast<long long>(g.degree() - p.cycles(true).size());
  });
}

TameCountingFunction zero_conductor(const PermGroup& g) {
  return make_counting_function(g, "zero", [](const Permutation&) { return 0LL; });
}

namespace {

void require_wreath_factors(const TameCountingFunction& on_inner,
                            const TameCountingFunction& on_outer, const PermGroup& w) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  if (!on_inner.group().same_group_as(w.inner()))
    throw StructureError("inner counting function is hosted on a different group");
  if (!on_outer.group().same_group_as(w.outer()))
    throw StructureError("outer counting function is hosted on a different group");
}

}  // namespace

TameCountingFunction signed_conductor(const PermGroup& w) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  if (w.inner().degree() != 2 || w.inner().order() != 2)
    throw StructureError("signed conductor requires inner factor S2");
  const int block_count = w.outer().degree();
  return make_counting_function(w, "signed", [&](const Permutation& g) {
    const Permutation base = wreath_base(w, g);
    long long trivial_cycles = 0;
    for (const auto& cycle : base.cycles(true))
      if (cycle_product(w, g, cycle.front()).is_identity()) ++trivial_cycles;
    return static_cast<long long>(block_count) - trivial_cycles;
  });
}

TameCountingFunction wreath_compose(const TameCountingFunction& on_inner,
                                    const TameCountingFunction& on_outer,
                                    const PermGroup& w) {
  require_wreath_factors(on_inner, on_outer, w);
  const std::string name = "wreath(" + on_inner.name() + "," + on_outer.name() + ")";
  return make_counting_function(w, name, [&](const Permutation& g) {
    const Permutation base = wreath_base(w, g);
    long long v = on_outer.value(base);
    for (const auto& cycle : base.cycles(true))
      v += on_inner.value(cycle_product(w, g, cycle.front()));
    return v;
  });
}

TameCountingFunction sum_compose(const TameCountingFunction& on_left,
                                 const TameCountingFunction& on_right,
                                 const PermGroup& p) {
  if (!p.is_product()) throw StructureError("group is not a direct product");
  if (!on_left.group().same_group_as(p.inner()))
    throw StructureError("left counting function is hosted on a different group");
  if (!on_right.group().same_group_as(p.outer()))
    throw StructureError("right counting function is hosted on a different group");
  const std::string name = "sum(" + on_left.name() + "," + on_right.name() + ")";
  return make_counting_function(p, name, [&](const Permutation& g) {
    const auto [left, right] = product_components(p, g);
    return on_left.value(left) + on_right.value(right);
  });
}

}  // namespace massform
