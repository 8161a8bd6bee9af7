#include "massform/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "massform/errors.hpp"

namespace massform {

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw NotInGroup("element is not a member of the group");
  return it->second;
}

const PermGroup& PermGroup::inner() const {
  if (!inner_) throw StructureError("group carries no construction factors");
  return *inner_;
}

const PermGroup& PermGroup::outer() const {
  if (!outer_) throw StructureError("group carries no construction factors");
  return *outer_;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  if (this == &other) return true;
  return degree_ == other.degree_ && elements_ == other.elements_;
}

void PermGroup::finalize() {
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    index_.emplace(elements_[static_cast<std::size_t>(i)], i);

  // Conjugacy classes as orbits of conjugation by the generators.
  std::vector<Permutation> gen_inverses;
  gen_inverses.reserve(generators_.size());
  for (const auto& s : generators_) gen_inverses.push_back(s.inverse());

  const int n = static_cast<int>(elements_.size());
  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (class_of_[static_cast<std::size_t>(start)] != -1) continue;
    const int class_index = static_cast<int>(classes_.size());
    std::vector<int> members;
    std::deque<int> frontier{start};
    class_of_[static_cast<std::size_t>(start)] = class_index;
    while (!frontier.empty()) {
      const int idx = frontier.front();
      frontier.pop_front();
      members.push_back(idx);
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const Permutation conj =
            compose(compose(generators_[k], elements_[static_cast<std::size_t>(idx)]),
                    gen_inverses[k]);
        const int cidx = index_.at(conj);
        if (class_of_[static_cast<std::size_t>(cidx)] == -1) {
          class_of_[static_cast<std::size_t>(cidx)] = class_index;
          frontier.push_back(cidx);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(ConjClass{elements_[static_cast<std::size_t>(members.front())],
                                 static_cast<long long>(members.size()),
                                 std::move(members)});
  }
}

PermGroup generate(int degree, std::vector<Permutation> gens, long long max_order) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");

  PermGroup result;
  result.degree_ = degree;
  result.generators_ = std::move(gens);

  std::unordered_set<Permutation, PermHash> seen;
  std::deque<Permutation> frontier;
  const Permutation id(degree);
  seen.insert(id);
  frontier.push_back(id);
  result.elements_.push_back(id);
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : result.generators_) {
      Permutation next = compose(current, s);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > max_order)
          throw SizeCapError(max_order, "group closure exceeds the order cap");
        result.elements_.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  result.finalize();
  return result;
}

PermGroup symmetric_group(int n, long long max_order) {
  if (n < 1) throw std::invalid_argument("symmetric group arity must be >= 1");
  long long factorial = 1;
  for (int k = 2; k <= n; ++k) {
    factorial *= k;
    if (factorial > max_order)
      throw SizeCapError(max_order, "symmetric group order exceeds the cap");
  }

  PermGroup result;
  result.degree_ = n;
  if (n >= 2) result.generators_.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    result.generators_.push_back(Permutation::from_cycles(n, {full}));
  }

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    result.elements_.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  result.finalize();
  result.set_label("S" + std::to_string(n));
  return result;
}

PermGroup wreath_product(const PermGroup& a, const PermGroup& b, long long max_order) {
  const int inner_degree = a.degree();
  const int block_count = b.degree();

  long long order = b.order();
  for (int j = 0; j < block_count; ++j) {
    if (order > max_order / a.order() + 1) order = max_order + 1;
    else order *= a.order();
    if (order > max_order)
      throw SizeCapError(max_order, "wreath product order exceeds the cap");
  }

  PermGroup result;
  result.degree_ = inner_degree * block_count;
  result.structure_ = PermGroup::Structure::Wreath;
  result.inner_ = std::make_shared<PermGroup>(a);
  result.outer_ = std::make_shared<PermGroup>(b);

  // Generators: B's generators permuting whole blocks, A's generators in block 0.
  for (const auto& bg : b.generators()) {
    std::vector<int> images(static_cast<std::size_t>(result.degree_));
    for (int j = 0; j < block_count; ++j)
      for (int x = 0; x < inner_degree; ++x)
        images[static_cast<std::size_t>(j * inner_degree + x)] = bg(j) * inner_degree + x;
    result.generators_.emplace_back(std::move(images));
  }
  for (const auto& ag : a.generators()) {
    std::vector<int> images(static_cast<std::size_t>(result.degree_));
    std::iota(images.begin(), images.end(), 0);
    for (int x = 0; x < inner_degree; ++x) images[static_cast<std::size_t>(x)] = ag(x);
    result.generators_.emplace_back(std::move(images));
  }

  // Elements in (b; tuple) order, the last block's component varying fastest.
  std::vector<int> tuple(static_cast<std::size_t>(block_count), 0);
  result.elements_.reserve(static_cast<std::size_t>(order));
  for (const auto& base : b.elements()) {
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      std::vector<int> images(static_cast<std::size_t>(result.degree_));
      for (int j = 0; j < block_count; ++j) {
        const Permutation& component = a.element(tuple[static_cast<std::size_t>(j)]);
        for (int x = 0; x < inner_degree; ++x)
          images[static_cast<std::size_t>(j * inner_degree + x)] =
              base(j) * inner_degree + component(x);
      }
      result.elements_.emplace_back(std::move(images));

      int pos = block_count - 1;
      while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] ==
                             static_cast<int>(a.order()) - 1) {
        tuple[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++tuple[static_cast<std::size_t>(pos)];
    }
  }

  result.finalize();
  return result;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, long long max_order) {
  if (a.order() > max_order / b.order())
    throw SizeCapError(max_order, "direct product order exceeds the cap");

  PermGroup result;
  result.degree_ = a.degree() + b.degree();
  result.structure_ = PermGroup::Structure::Product;
  result.inner_ = std::make_shared<PermGroup>(a);
  result.outer_ = std::make_shared<PermGroup>(b);

  for (const auto& ag : a.generators()) {
    std::vector<int> images(static_cast<std::size_t>(result.degree_));
    std::iota(images.begin(), images.end(), 0);
    for (int x = 0; x < a.degree(); ++x) images[static_cast<std::size_t>(x)] = ag(x);
    result.generators_.emplace_back(std::move(images));
  }
  for (const auto& bg : b.generators()) {
    std::vector<int> images(static_cast<std::size_t>(result.degree_));
    std::iota(images.begin(), images.end(), 0);
    for (int x = 0; x < b.degree(); ++x)
      images[static_cast<std::size_t>(a.degree() + x)] = a.degree() + bg(x);
    result.generators_.emplace_back(std::move(images));
  }

  result.elements_.reserve(static_cast<std::size_t>(a.order() * b.order()));
  for (const auto& ga : a.elements()) {
    for (const auto& gb : b.elements()) {
      std::vector<int> images(static_cast<std::size_t>(result.degree_));
      for (int x = 0; x < a.degree(); ++x) images[static_cast<std::size_t>(x)] = ga(x);
      for (int x = 0; x < b.degree(); ++x)
        images[static_cast<std::size_t>(a.degree() + x)] = a.degree() + gb(x);
      result.elements_.emplace_back(std::move(images));
    }
  }

  result.finalize();
  return result;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

}  // namespace

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& perms, int degree) {
  UnionFind uf(degree);
  for (const auto& p : perms) {
    if (p.degree() != degree)
      throw std::invalid_argument("permutation degree does not match orbit degree");
    for (int i = 0; i < degree; ++i) uf.unite(i, p(i));
  }
  std::vector<std::vector<int>> result;
  std::vector<int> orbit_index(static_cast<std::size_t>(degree), -1);
  for (int i = 0; i < degree; ++i) {
    const int root = uf.find(i);
    if (orbit_index[static_cast<std::size_t>(root)] == -1) {
      orbit_index[static_cast<std::size_t>(root)] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<std::size_t>(orbit_index[static_cast<std::size_t>(root)])].push_back(i);
  }
  return result;
}

bool is_conjugate(const PermGroup& g, const Permutation& x, const Permutation& y) {
  return g.class_of(g.index_of(x)) == g.class_of(g.index_of(y));
}

long long centralizer_order(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw NotInGroup("element is not a member of the group");
  long long count = 0;
  for (const auto& z : g.elements())
    if (compose(z, x) == compose(x, z)) ++count;
  return count;
}

Permutation wreath_base(const PermGroup& w, const Permutation& g) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  const int inner_degree = w.inner().degree();
  const int block_count = w.outer().degree();
  std::vector<int> images(static_cast<std::size_t>(block_count));
  for (int j = 0; j < block_count; ++j)
    images[static_cast<std::size_t>(j)] = g(j * inner_degree) / inner_degree;
  return Permutation(std::move(images));
}

Permutation wreath_component(const PermGroup& w, const Permutation& g, int block) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  const int inner_degree = w.inner().degree();
  const int target = g(block * inner_degree) / inner_degree;
  std::vector<int> images(static_cast<std::size_t>(inner_degree));
  for (int x = 0; x < inner_degree; ++x)
    images[static_cast<std::size_t>(x)] = g(block * inner_degree + x) - target * inner_degree;
  return Permutation(std::move(images));
}

Permutation cycle_product(const PermGroup& w, const Permutation& g, int block) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  if (block < 0 || block >= w.outer().degree())
    throw std::invalid_argument("block index out of range");
  if (g.degree() != w.degree())
    throw std::invalid_argument("element degree does not match the wreath group");
  const int inner_degree = w.inner().degree();
  Permutation product(inner_degree);
  int j = block;
  do {
    product = compose(wreath_component(w, g, j), product);
    j = g(j * inner_degree) / inner_degree;
  } while (j != block);
  return product;
}

std::pair<Permutation, Permutation> product_components(const PermGroup& p,
                                                       const Permutation& g) {
  if (!p.is_product()) throw StructureError("group is not a direct product");
  const int left_degree = p.inner().degree();
  const int right_degree = p.outer().degree();
  std::vector<int> left(static_cast<std::size_t>(left_degree));
  std::vector<int> right(static_cast<std::size_t>(right_degree));
  for (int x = 0; x < left_degree; ++x) left[static_cast<std::size_t>(x)] = g(x);
  for (int x = 0; x < right_degree; ++x)
    right[static_cast<std::size_t>(x)] = g(left_degree + x) - left_degree;
  return {Permutation(std::move(left)), Permutation(std::move(right))};
}

}  // namespace massform
