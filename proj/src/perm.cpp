#include "massform/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace massform {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image table is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p < 0 || p >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[static_cast<std::size_t>(p)])
        throw std::invalid_argument("point repeated across cycles");
      used[static_cast<std::size_t>(p)] = 1;
    }
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i)
      result.images_[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % len];
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[i])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::power(long long exponent) const {
  const int ord = order();
  long long e = exponent % ord;
  if (e < 0) e += ord;
  Permutation result(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& cycle : cycles(true))
    ord = std::lcm<long long>(ord, static_cast<long long>(cycle.size()));
  return static_cast<int>(ord);
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed_points) const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      cycle.push_back(p);
      p = images_[static_cast<std::size_t>(p)];
    } while (p != start);
    if (cycle.size() > 1 || include_fixed_points) result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  const auto cyc = cycles(false);
  if (cyc.empty()) return "()";
  std::string out;
  for (const auto& cycle : cyc) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of different degrees");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(images));
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace massform
