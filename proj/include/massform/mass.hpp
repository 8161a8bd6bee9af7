#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massform/counting.hpp"
#include "massform/group.hpp"
#include "massform/masspoly.hpp"
#include "massform/types.hpp"

namespace massform {

/// {a in [1..m] : gcd(a,m) = 1}, ascending. For m = 1 this is {1}.
std::vector<long long> invertible_residues(long long modulus);

/// All h in the group with h g h^{-1} = g^a, in element order. The result is
/// empty or a full coset of the centralizer of g, so its size is either 0 or
/// centralizer_order(group, g). Any a >= 0 is accepted; residues a with
/// gcd(a, order(g)) > 1 admit no solutions for that g.
std::vector<Permutation> frobenius_solutions(const PermGroup& group,
                                             const Permutation& g, long long a);

/// Type of the tame pair: orbits of <g,h> split into orbits of <g>, each
/// Galois orbit contributing a term f^e (f suborbits of size e). Requires
/// h g h^{-1} to be a power of g; throws std::invalid_argument otherwise.
RamType ram_type_of_pair(const Permutation& g, const Permutation& h);

/// Type of a pair in A ≀ B: the base type of the projected pair, each base
/// orbit carrying the type of the component representation at its smallest
/// block (component Galois image = block stabilizer projected to the block;
/// component inertia image = the cycle product of g there).
WreathType wreath_type_of_pair(const PermGroup& w, const Permutation& g,
                               const Permutation& h);

/// Total mass: sum over pairs (g,h) with hgh^{-1} = g^a of x^{c(g)},
/// where x stands for 1/q. Enumerated per conjugacy class of g.
MassPoly total_mass(const PermGroup& group, const TameCountingFunction& c, long long a);

std::map<RamType, MassPoly> mass_by_type(const PermGroup& group,
                                         const TameCountingFunction& c, long long a);

std::map<WreathType, MassPoly> mass_by_wreath_type(const PermGroup& w,
                                                   const TameCountingFunction& c,
                                                   long long a);

std::map<std::pair<RamType, RamType>, MassPoly> mass_by_product_type(
    const PermGroup& p, const TameCountingFunction& c, long long a);

/// Right-hand side of the wreath factorization for one wreath type:
///   |A|^(|B's set| - r) * N * M_B(base type)(x) * prod_i M_A(sub_i)(x^{f_i}),
/// with the factor masses taken at the residues induced on the factors
/// (a for B; a^{f_i} for the component over a residue-f_i subfield).
/// N counts the distinct assignments of the sub-types to concrete base
/// orbits: entries with equal (e, f) are interchangeable, so sigma being a
/// multiset collapses N ordered tuples into one stratum.
MassPoly predicted_wreath_mass(const PermGroup& inner, const TameCountingFunction& c_inner,
                               const PermGroup& outer, const TameCountingFunction& c_outer,
                               const WreathType& sigma, long long a);

/// Product factorization: M_left(sigma_left)(x) * M_right(sigma_right)(x).
MassPoly predicted_product_mass(const PermGroup& left, const TameCountingFunction& c_left,
                                const PermGroup& right, const TameCountingFunction& c_right,
                                const RamType& sigma_left, const RamType& sigma_right,
                                long long a);

/// Per-residue masses over all invertible residues mod |group|, with the
/// existence verdict (all residues agree) and the common polynomial if so.
struct FormulaReport {
  std::string group_label;
  std::string counting_name;
  long long modulus = 1;
  std::vector<std::pair<long long, MassPoly>> residue_masses;  // residues ascending
  bool exists = false;
  std::optional<MassPoly> polynomial;
  std::vector<std::string> notes;
  // Per-type breakdown per residue, present on request.
  std::optional<std::vector<std::pair<long long, std::map<RamType, MassPoly>>>> by_type;
};

FormulaReport check_mass_formula(const PermGroup& group, const TameCountingFunction& c,
                                 bool include_by_type = false);

/// Power-map criterion: every g is conjugate to g^k for all k coprime to
/// the order of g.
bool rational_character_table(const PermGroup& group);

/// Masses keyed by the conjugacy class of the image subgroup <g,h>. Keys are
/// canonical element-index sets: the lexicographically smallest sorted index
/// vector among all conjugates of the subgroup. Brute force; intended for
/// small groups.
std::map<std::vector<int>, MassPoly> mass_by_image(const PermGroup& group,
                                                   const TameCountingFunction& c,
                                                   long long a);

/// Printable label for an image class, e.g. "order=4 gens=(1 3),(2 4)".
std::string image_class_label(const PermGroup& group,
                              const std::vector<int>& subgroup_elements);

/// |{s in ambient : s I s^{-1} ⊆ target}|. Both element sets must be
/// subgroups of the ambient group; throws std::invalid_argument otherwise.
long long conjugators_into(const std::vector<Permutation>& subgroup,
                           const std::vector<Permutation>& target,
                           const PermGroup& ambient);

/// |Centralizer_ambient(subgroup)|.
long long ambient_centralizer_order(const std::vector<Permutation>& subgroup,
                                    const PermGroup& ambient);

}  // namespace massform
