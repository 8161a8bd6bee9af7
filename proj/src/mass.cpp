#include "massform/mass.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "massform/errors.hpp"

namespace massform {

namespace {

long long powmod(long long base, long long exponent, long long modulus) {
  if (modulus == 1) return 0;
  long long result = 1 % modulus;
  base %= modulus;
  if (base < 0) base += modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1;
  }
  return result;
}

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

// Orbits of the group generated by the given permutations, ordered by
// smallest point, points ascending.
std::vector<std::vector<int>> joint_orbits(const Permutation& g, const Permutation& h) {
  return orbits({g, h}, g.degree());
}

void check_host(const PermGroup& group, const TameCountingFunction& c) {
  if (!c.group().same_group_as(group))
    throw StructureError("counting function is hosted on a different group");
}

// Type of a pair already known to satisfy h g h^{-1} in <g>.
RamType ram_type_unchecked(const Permutation& g, const Permutation& h) {
  const int degree = g.degree();
  std::vector<int> cycle_id(static_cast<std::size_t>(degree), -1);
  std::vector<int> cycle_size;
  {
    const auto cycles = g.cycles(true);
    for (std::size_t id = 0; id < cycles.size(); ++id) {
      for (int p : cycles[id]) cycle_id[static_cast<std::size_t>(p)] = static_cast<int>(id);
      cycle_size.push_back(static_cast<int>(cycles[id].size()));
    }
  }

  std::vector<std::pair<int, int>> terms;
  for (const auto& orbit : joint_orbits(g, h)) {
    std::vector<char> seen_cycle(cycle_size.size(), 0);
    int suborbit_count = 0;
    int suborbit_size = -1;
    for (int p : orbit) {
      const int cid = cycle_id[static_cast<std::size_t>(p)];
      if (seen_cycle[static_cast<std::size_t>(cid)]) continue;
      seen_cycle[static_cast<std::size_t>(cid)] = 1;
      ++suborbit_count;
      if (suborbit_size == -1) suborbit_size = cycle_size[static_cast<std::size_t>(cid)];
      else if (suborbit_size != cycle_size[static_cast<std::size_t>(cid)])
        throw std::invalid_argument("inertia suborbits of unequal size: invalid pair");
    }
    terms.emplace_back(suborbit_size, suborbit_count);
  }
  return RamType(std::move(terms));
}

void require_tame_pair(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("pair members have different degrees");
  const Permutation conj = compose(compose(h, g), h.inverse());
  Permutation p(g.degree());
  const int ord = g.order();
  for (int k = 0; k < ord; ++k) {
    if (p == conj) return;
    p = compose(p, g);
  }
  throw std::invalid_argument("h g h^{-1} is not a power of g: invalid pair");
}

WreathType wreath_type_unchecked(const PermGroup& w, const Permutation& g,
                                 const Permutation& h) {
  const int inner_degree = w.inner().degree();
  const Permutation base_g = wreath_base(w, g);
  const Permutation base_h = wreath_base(w, h);

  std::vector<int> g_cycle_len(static_cast<std::size_t>(base_g.degree()), 0);
  for (const auto& cycle : base_g.cycles(true))
    for (int p : cycle) g_cycle_len[static_cast<std::size_t>(p)] = static_cast<int>(cycle.size());

  std::vector<WreathTypeEntry> entries;
  for (const auto& orbit : joint_orbits(base_g, base_h)) {
    const int rep = orbit.front();
    const int e = g_cycle_len[static_cast<std::size_t>(rep)];
    const int f = static_cast<int>(orbit.size()) / e;

    const Permutation* words[2] = {&g, &h};
    const Permutation* bases[2] = {&base_g, &base_h};

    // Transversal of the block orbit, as elements of the wreath group.
    std::unordered_map<int, Permutation> transversal;
    transversal.emplace(rep, Permutation(w.degree()));
    std::deque<int> frontier{rep};
    while (!frontier.empty()) {
      const int j = frontier.front();
      frontier.pop_front();
      for (int s = 0; s < 2; ++s) {
        const int k = (*bases[s])(j);
        if (!transversal.count(k)) {
          transversal.emplace(k, compose(*words[s], transversal.at(j)));
          frontier.push_back(k);
        }
      }
    }

    // Schreier generators of the block stabilizer, projected to the block.
    UnionFind uf(inner_degree);
    for (int j : orbit) {
      for (int s = 0; s < 2; ++s) {
        const Permutation schreier = compose(transversal.at((*bases[s])(j)).inverse(),
                                             compose(*words[s], transversal.at(j)));
        for (int x = 0; x < inner_degree; ++x)
          uf.unite(x, schreier(rep * inner_degree + x) - rep * inner_degree);
      }
    }

    // Component inertia image: cycles of the cycle product at the block.
    const Permutation inertia = cycle_product(w, g, rep);
    std::vector<int> inertia_cycle_id(static_cast<std::size_t>(inner_degree), -1);
    std::vector<int> inertia_cycle_size;
    for (const auto& cycle : inertia.cycles(true)) {
      for (int p : cycle)
        inertia_cycle_id[static_cast<std::size_t>(p)] = static_cast<int>(inertia_cycle_size.size());
      inertia_cycle_size.push_back(static_cast<int>(cycle.size()));
    }

    std::unordered_map<int, std::vector<int>> galois_orbits;  // root -> cycle ids
    std::vector<char> counted(inertia_cycle_size.size(), 0);
    for (int x = 0; x < inner_degree; ++x) {
      const int cid = inertia_cycle_id[static_cast<std::size_t>(x)];
      if (counted[static_cast<std::size_t>(cid)]) continue;
      counted[static_cast<std::size_t>(cid)] = 1;
      galois_orbits[uf.find(x)].push_back(cid);
    }

    std::vector<std::pair<int, int>> sub_terms;
    for (auto& [root, cycle_ids] : galois_orbits) {
      const int sub_e = inertia_cycle_size[static_cast<std::size_t>(cycle_ids.front())];
      for (int cid : cycle_ids)
        if (inertia_cycle_size[static_cast<std::size_t>(cid)] != sub_e)
          throw std::invalid_argument("inertia suborbits of unequal size: invalid pair");
      sub_terms.emplace_back(sub_e, static_cast<int>(cycle_ids.size()));
    }
    entries.push_back(WreathTypeEntry{e, f, RamType(std::move(sub_terms))});
  }
  return WreathType(std::move(entries));
}

// Calls visit(class_index, g, h, class_size) for every solution h of
// h g h^{-1} = g^a with g running over class representatives.
template <typename Visit>
void for_each_pair(const PermGroup& group, long long a, Visit&& visit) {
  for (std::size_t ci = 0; ci < group.classes().size(); ++ci) {
    const ConjClass& cls = group.classes()[ci];
    const Permutation& g = cls.representative;
    const Permutation target = g.power(a);

    const Permutation* h0 = nullptr;
    for (const auto& h : group.elements()) {
      if (compose(h, g) == compose(target, h)) {
        h0 = &h;
        break;
      }
    }
    if (h0 == nullptr) continue;

    for (const auto& z : group.elements()) {
      if (compose(z, g) != compose(g, z)) continue;
      visit(static_cast<int>(ci), g, compose(*h0, z), cls.size);
    }
  }
}

std::string cycles_of_indices(const PermGroup& group, const std::vector<int>& indices) {
  std::string out;
  for (int idx : indices) {
    if (!out.empty()) out += ',';
    out += group.element(idx).cycle_string();
  }
  return out;
}

// Closure of the given element indices inside the group.
std::vector<int> subgroup_closure(const PermGroup& group, std::vector<int> seed) {
  std::unordered_set<int> seen;
  std::deque<int> frontier;
  const int id_index = group.index_of(Permutation(group.degree()));
  seen.insert(id_index);
  frontier.push_back(id_index);
  std::vector<int> gens = std::move(seed);
  while (!frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    for (int gen : gens) {
      const int next =
          group.index_of(compose(group.element(idx), group.element(gen)));
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<int> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<long long> invertible_residues(long long modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<long long> result;
  for (long long a = 1; a <= modulus; ++a)
    if (std::gcd(a, modulus) == 1) result.push_back(a);
  return result;
}

std::vector<Permutation> frobenius_solutions(const PermGroup& group,
                                             const Permutation& g, long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  (void)group.index_of(g);
  const Permutation target = g.power(a);
  std::vector<Permutation> result;
  for (const auto& h : group.elements())
    if (compose(h, g) == compose(target, h)) result.push_back(h);
  return result;
}

RamType ram_type_of_pair(const Permutation& g, const Permutation& h) {
  require_tame_pair(g, h);
  return ram_type_unchecked(g, h);
}

WreathType wreath_type_of_pair(const PermGroup& w, const Permutation& g,
                               const Permutation& h) {
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  (void)w.index_of(g);
  (void)w.index_of(h);
  require_tame_pair(g, h);
  return wreath_type_unchecked(w, g, h);
}

MassPoly total_mass(const PermGroup& group, const TameCountingFunction& c, long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  check_host(group, c);
  MassPoly total;
  for (std::size_t ci = 0; ci < group.classes().size(); ++ci) {
    const ConjClass& cls = group.classes()[ci];
    const Permutation& g = cls.representative;
    const Permutation target = g.power(a);
    bool solvable = false;
    for (const auto& h : group.elements()) {
      if (compose(h, g) == compose(target, h)) {
        solvable = true;
        break;
      }
    }
    if (!solvable) continue;
    const long long coset = centralizer_order(group, g);
    total += MassPoly::monomial(cls.size * coset,
                                static_cast<int>(c.class_value(static_cast<int>(ci))));
  }
  return total;
}

std::map<RamType, MassPoly> mass_by_type(const PermGroup& group,
                                         const TameCountingFunction& c, long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  check_host(group, c);
  std::map<RamType, MassPoly> result;
  for_each_pair(group, a,
                [&](int ci, const Permutation& g, const Permutation& h, long long size) {
                  result[ram_type_unchecked(g, h)] +=
                      MassPoly::monomial(size, static_cast<int>(c.class_value(ci)));
                });
  return result;
}

std::map<WreathType, MassPoly> mass_by_wreath_type(const PermGroup& w,
                                                   const TameCountingFunction& c,
                                                   long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  if (!w.is_wreath()) throw StructureError("group is not a wreath product");
  check_host(w, c);
  std::map<WreathType, MassPoly> result;
  for_each_pair(w, a,
                [&](int ci, const Permutation& g, const Permutation& h, long long size) {
                  result[wreath_type_unchecked(w, g, h)] +=
                      MassPoly::monomial(size, static_cast<int>(c.class_value(ci)));
                });
  return result;
}

std::map<std::pair<RamType, RamType>, MassPoly> mass_by_product_type(
    const PermGroup& p, const TameCountingFunction& c, long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  if (!p.is_product()) throw StructureError("group is not a direct product");
  check_host(p, c);
  std::map<std::pair<RamType, RamType>, MassPoly> result;
  for_each_pair(p, a,
                [&](int ci, const Permutation& g, const Permutation& h, long long size) {
                  const auto [g_left, g_right] = product_components(p, g);
                  const auto [h_left, h_right] = product_components(p, h);
                  auto key = std::make_pair(ram_type_unchecked(g_left, h_left),
                                            ram_type_unchecked(g_right, h_right));
                  result[std::move(key)] +=
                      MassPoly::monomial(size, static_cast<int>(c.class_value(ci)));
                });
  return result;
}

// Number of distinct ways to hand the sub-types of sigma to concrete base
// orbits: base terms with equal (e, f) are interchangeable, so each maximal
// run of them contributes m! / prod(multiplicity of each distinct sub)!.
static long long sub_assignment_count(const WreathType& sigma) {
  const auto& entries = sigma.entries();
  long long count = 1;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].e == entries[i].e &&
           entries[j].f == entries[i].f)
      ++j;
    long long run = 1;
    for (std::size_t t = 2; t <= j - i; ++t) run *= static_cast<long long>(t);
    std::size_t s = i;
    while (s < j) {
      std::size_t t = s;
      while (t < j && entries[t].sub == entries[s].sub) ++t;
      for (std::size_t u = 2; u <= t - s; ++u) run /= static_cast<long long>(u);
      s = t;
    }
    count *= run;
    i = j;
  }
  return count;
}

MassPoly predicted_wreath_mass(const PermGroup& inner, const TameCountingFunction& c_inner,
                               const PermGroup& outer, const TameCountingFunction& c_outer,
                               const WreathType& sigma, long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  check_host(inner, c_inner);
  check_host(outer, c_outer);
  const int r = static_cast<int>(sigma.entries().size());
  if (r > outer.degree())
    throw std::invalid_argument("wreath type has more entries than base points");

  long long fiber = 1;
  for (int k = 0; k < outer.degree() - r; ++k) fiber *= inner.order();

  const auto outer_masses = mass_by_type(outer, c_outer, a);
  const auto outer_it = outer_masses.find(sigma.base_type());
  if (outer_it == outer_masses.end()) return MassPoly();

  MassPoly result = outer_it->second.scaled(fiber * sub_assignment_count(sigma));
  std::map<long long, std::map<RamType, MassPoly>> inner_cache;
  for (const auto& entry : sigma.entries()) {
    // The component lives over a residue-degree-f subfield: residue a^f.
    const long long residue =
        inner.order() == 1 ? 1 : powmod(a, entry.f, inner.order());
    auto cache_it = inner_cache.find(residue);
    if (cache_it == inner_cache.end())
      cache_it = inner_cache.emplace(residue, mass_by_type(inner, c_inner, residue)).first;
    const auto sub_it = cache_it->second.find(entry.sub);
    if (sub_it == cache_it->second.end()) return MassPoly();
    result = result * sub_it->second.compose_power(entry.f);
  }
  return result;
}

MassPoly predicted_product_mass(const PermGroup& left, const TameCountingFunction& c_left,
                                const PermGroup& right, const TameCountingFunction& c_right,
                                const RamType& sigma_left, const RamType& sigma_right,
                                long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  check_host(left, c_left);
  check_host(right, c_right);
  const auto left_masses = mass_by_type(left, c_left, a);
  const auto right_masses = mass_by_type(right, c_right, a);
  const auto lit = left_masses.find(sigma_left);
  const auto rit = right_masses.find(sigma_right);
  if (lit == left_masses.end() || rit == right_masses.end()) return MassPoly();
  return lit->second * rit->second;
}

FormulaReport check_mass_formula(const PermGroup& group, const TameCountingFunction& c,
                                 bool include_by_type) {
  check_host(group, c);
  FormulaReport report;
  report.group_label = group.label();
  report.counting_name = c.name();
  report.modulus = group.order();
  for (long long a : invertible_residues(report.modulus))
    report.residue_masses.emplace_back(a, total_mass(group, c, a));
  report.exists = true;
  for (const auto& [a, poly] : report.residue_masses)
    if (poly != report.residue_masses.front().second) {
      report.exists = false;
      break;
    }
  if (report.exists && !report.residue_masses.empty())
    report.polynomial = report.residue_masses.front().second;
  report.notes.push_back(
      "Tame masses only: the polynomial applies to residue sizes q coprime to " +
      std::to_string(report.modulus) +
      "; wild residue characteristics are out of scope.");
  if (include_by_type) {
    report.by_type.emplace();
    for (long long a : invertible_residues(report.modulus))
      report.by_type->emplace_back(a, mass_by_type(group, c, a));
  }
  return report;
}

bool rational_character_table(const PermGroup& group) {
  for (const auto& cls : group.classes()) {
    const Permutation& g = cls.representative;
    const int class_index = group.class_of(group.index_of(g));
    const int ord = g.order();
    Permutation p = g;
    for (int k = 2; k < ord; ++k) {
      p = compose(p, g);
      if (std::gcd(k, ord) != 1) continue;
      if (group.class_of(group.index_of(p)) != class_index) return false;
    }
  }
  return true;
}

std::map<std::vector<int>, MassPoly> mass_by_image(const PermGroup& group,
                                                   const TameCountingFunction& c,
                                                   long long a) {
  if (a < 0) throw std::invalid_argument("residue must be non-negative");
  check_host(group, c);

  std::map<std::vector<int>, std::vector<int>> canonical_cache;
  const auto canonicalize = [&](const std::vector<int>& subgroup) {
    auto it = canonical_cache.find(subgroup);
    if (it != canonical_cache.end()) return it->second;
    std::vector<int> best;
    std::vector<int> conjugated(subgroup.size());
    for (const auto& x : group.elements()) {
      const Permutation x_inv = x.inverse();
      for (std::size_t i = 0; i < subgroup.size(); ++i)
        conjugated[i] = group.index_of(
            compose(compose(x, group.element(subgroup[i])), x_inv));
      std::sort(conjugated.begin(), conjugated.end());
      if (best.empty() || conjugated < best) best = conjugated;
    }
    canonical_cache.emplace(subgroup, best);
    return best;
  };

  std::map<std::vector<int>, MassPoly> result;
  for_each_pair(group, a,
                [&](int ci, const Permutation& g, const Permutation& h, long long size) {
                  const std::vector<int> subgroup =
                      subgroup_closure(group, {group.index_of(g), group.index_of(h)});
                  result[canonicalize(subgroup)] +=
                      MassPoly::monomial(size, static_cast<int>(c.class_value(ci)));
                });
  return result;
}

std::string image_class_label(const PermGroup& group,
                              const std::vector<int>& subgroup_elements) {
  std::vector<int> gens;
  std::vector<int> closure = subgroup_closure(group, {});
  for (int idx : subgroup_elements) {
    if (std::binary_search(closure.begin(), closure.end(), idx)) continue;
    gens.push_back(idx);
    std::vector<int> seed = gens;
    closure = subgroup_closure(group, std::move(seed));
    if (closure.size() == subgroup_elements.size()) break;
  }
  const std::string gen_text = gens.empty() ? "()" : cycles_of_indices(group, gens);
  return "order=" + std::to_string(subgroup_elements.size()) + " gens=" + gen_text;
}

namespace {

void require_subgroup(const std::vector<Permutation>& elements, const PermGroup& ambient,
                      const char* which) {
  if (elements.empty())
    throw std::invalid_argument(std::string(which) + " is empty, not a subgroup");
  std::unordered_set<Permutation, PermHash> set;
  for (const auto& p : elements) {
    if (!ambient.contains(p))
      throw std::invalid_argument(std::string(which) +
                                  " contains an element outside the ambient group");
    set.insert(p);
  }
  for (const auto& p : elements)
    for (const auto& q : elements)
      if (!set.count(compose(p, q)))
        throw std::invalid_argument(std::string(which) +
                                    " is not closed under composition");
}

}  // namespace

long long conjugators_into(const std::vector<Permutation>& subgroup,
                           const std::vector<Permutation>& target,
                           const PermGroup& ambient) {
  require_subgroup(subgroup, ambient, "subgroup");
  require_subgroup(target, ambient, "target");
  std::unordered_set<Permutation, PermHash> target_set(target.begin(), target.end());
  long long count = 0;
  for (const auto& s : ambient.elements()) {
    const Permutation s_inv = s.inverse();
    bool inside = true;
    for (const auto& p : subgroup) {
      if (!target_set.count(compose(compose(s, p), s_inv))) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
  }
  return count;
}

long long ambient_centralizer_order(const std::vector<Permutation>& subgroup,
                                    const PermGroup& ambient) {
  require_subgroup(subgroup, ambient, "subgroup");
  long long count = 0;
  for (const auto& s : ambient.elements()) {
    bool centralizes = true;
    for (const auto& p : subgroup) {
      if (compose(s, p) != compose(p, s)) {
        centralizes = false;
        break;
      }
    }
    if (centralizes) ++count;
  }
  return count;
}

}  // namespace massform
