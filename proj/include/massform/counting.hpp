#pragma once

#include <memory>
#include <string>
#include <vector>

#include "massform/group.hpp"

namespace massform {

class TameCountingFunction;

template <typename Eval>
TameCountingFunction make_counting_function(const PermGroup& g, std::string name,
                                            Eval&& eval);

/// A conjugation-invariant weight on group elements with values in Z>=0,
/// evaluated on the inertia generator of a tame pair. Stored as a per-class
/// table; the host group is owned so the function stays self-contained.
class TameCountingFunction {
public:
  const PermGroup& group() const { return *group_; }
  const std::string& name() const { return name_; }

  long long value(const Permutation& g) const {
    return class_values_[static_cast<std::size_t>(group_->class_of(group_->index_of(g)))];
  }
  long long value_at(int element_index) const {
    return class_values_[static_cast<std::size_t>(group_->class_of(element_index))];
  }
  long long class_value(int class_index) const {
    return class_values_[static_cast<std::size_t>(class_index)];
  }
  const std::vector<long long>& class_values() const { return class_values_; }

private:
  TameCountingFunction(std::shared_ptr<const PermGroup> group, std::string name,
                       std::vector<long long> class_values)
      : group_(std::move(group)), name_(std::move(name)),
        class_values_(std::move(class_values)) {}

  std::shared_ptr<const PermGroup> group_;
  std::string name_;
  std::vector<long long> class_values_;

  template <typename Eval>
  friend TameCountingFunction make_counting_function(const PermGroup& g,
                                                     std::string name, Eval&& eval);
};

/// Tame conductor of the permutation representation:
/// degree minus the number of orbits of <g>.
TameCountingFunction perm_conductor(const PermGroup& g);

/// The identically-zero counting function (masses count representations).
TameCountingFunction zero_conductor(const PermGroup& g);

/// Tame conductor of the signed permutation representation of S2 ≀ B:
/// degree(B) minus the number of base cycles whose cycle product is trivial.
/// Requires a wreath group whose inner factor is S2.
TameCountingFunction signed_conductor(const PermGroup& w);

/// Wreath composite on W = A ≀ B: value(g) = on_outer(base of g) plus the sum
/// over base cycles of on_inner(cycle product at the cycle's smallest block).
TameCountingFunction wreath_compose(const TameCountingFunction& on_inner,
                                    const TameCountingFunction& on_outer,
                                    const PermGroup& w);

/// Componentwise sum on P = A × B: value((g, g')) = on_left(g) + on_right(g').
TameCountingFunction sum_compose(const TameCountingFunction& on_left,
                                 const TameCountingFunction& on_right,
                                 const PermGroup& p);

}  // namespace massform
