#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "massform/perm.hpp"

namespace massform {

/// Default cap on enumerated group order (overridable per construction).
inline constexpr long long kDefaultMaxOrder = 20000;

struct ConjClass {
  Permutation representative;  // the member with the smallest element index
  long long size = 0;
  std::vector<int> members;  // element indices, ascending
};

/// A finite permutation group with its elements fully enumerated.
///
/// Immutable after construction. Element 0 is always the identity; the
/// enumeration order is deterministic for each constructor, so two groups
/// built the same way compare equal element-for-element.
class PermGroup {
public:
  // How the group was built; Wreath/Product carry their factors.
  enum class Structure { Plain, Wreath, Product };

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int index) const {
    return elements_[static_cast<std::size_t>(index)];
  }
  const Permutation& identity() const { return elements_.front(); }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int element_index) const {
    return class_of_[static_cast<std::size_t>(element_index)];
  }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

  /// Index of p in elements(); throws NotInGroup if absent.
  int index_of(const Permutation& p) const;

  Structure structure() const { return structure_; }
  bool is_wreath() const { return structure_ == Structure::Wreath; }
  bool is_product() const { return structure_ == Structure::Product; }

  /// Inner factor A of A≀B, or left factor of A×B. Throws StructureError
  /// when the group carries no construction tag.
  const PermGroup& inner() const;
  /// Outer factor B of A≀B, or right factor of A×B.
  const PermGroup& outer() const;

  /// Printable construction label, e.g. "wr(S2,S2)". May be empty.
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Same degree and identical element enumeration.
  bool same_group_as(const PermGroup& other) const;

  friend PermGroup generate(int degree, std::vector<Permutation> gens,
                            long long max_order);
  friend PermGroup symmetric_group(int n, long long max_order);
  friend PermGroup wreath_product(const PermGroup& a, const PermGroup& b,
                                  long long max_order);
  friend PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                                  long long max_order);

private:
  PermGroup() = default;
  void finalize();  // builds the index map, conjugacy classes, class_of_

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
  std::unordered_map<Permutation, int, PermHash> index_;
  Structure structure_ = Structure::Plain;
  std::shared_ptr<const PermGroup> inner_;
  std::shared_ptr<const PermGroup> outer_;
  std::string label_;
};

/// Closure of the generators under composition, breadth-first from the
/// identity. Throws SizeCapError when the closure exceeds max_order.
PermGroup generate(int degree, std::vector<Permutation> gens,
                   long long max_order = kDefaultMaxOrder);

/// S_n in its natural action, elements in lexicographic order.
PermGroup symmetric_group(int n, long long max_order = kDefaultMaxOrder);

/// A ≀ B acting on degree(A)·degree(B) points, block-major: point
/// j·degree(A)+x is point x of the copy of A's set at block j. An element
/// (b; (a_j)) sends j·|𝒜|+x to b(j)·|𝒜|+a_j(x). Order |A|^degree(B)·|B|.
PermGroup wreath_product(const PermGroup& a, const PermGroup& b,
                         long long max_order = kDefaultMaxOrder);

/// A × B acting on the disjoint union (B's points shifted by degree(A)).
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         long long max_order = kDefaultMaxOrder);

/// Orbit partition of {0..degree-1} under the group generated by perms.
/// Points ascending within each orbit; orbits ordered by smallest point.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& perms, int degree);

/// Whether x and y are conjugate in g. Throws NotInGroup if either is absent.
bool is_conjugate(const PermGroup& g, const Permutation& x, const Permutation& y);

/// |{z in g : zx = xz}| by direct count.
long long centralizer_order(const PermGroup& g, const Permutation& x);

inline int element_order(const Permutation& p) { return p.order(); }

/// Base permutation on outer()'s points induced by g in A≀B.
Permutation wreath_base(const PermGroup& w, const Permutation& g);

/// Component of g at `block`: the A-part applied inside that block.
Permutation wreath_component(const PermGroup& w, const Permutation& g, int block);

/// Product of g's components along the base cycle through `block`:
/// a_{b^{e-1}(j)} ··· a_{b(j)} a_j, the component of g^e at the block,
/// where e is the base-cycle length. Requires the wreath tag.
Permutation cycle_product(const PermGroup& w, const Permutation& g, int block);

/// Split an element of A×B into its two factor permutations.
std::pair<Permutation, Permutation> product_components(const PermGroup& p,
                                                       const Permutation& g);

}  // namespace massform
