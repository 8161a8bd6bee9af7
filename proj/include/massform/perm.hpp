#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace massform {

/// A permutation of {0..degree-1}. images()[i] is the image of point i.
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(int degree);

  /// From an image table; must be a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  /// From 0-based disjoint cycles; points may appear at most once overall.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// g^exponent; negative exponents allowed.
  Permutation power(long long exponent) const;

  /// Element order: lcm of cycle lengths.
  int order() const;

  /// Cycle decomposition, each cycle starting at its smallest point,
  /// cycles ordered by smallest point. Fixed points included on request.
  std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const;

  /// 1-based cycle notation, e.g. "(1 2 3)(4 5)"; identity prints "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// (p ∘ q)(i) = p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace massform
