#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace massform {

/// Ramification type: a multiset of terms f^e, one per Galois orbit family
/// (f suborbits of size e under inertia). Multiplicity is expressed by
/// repetition. Terms are kept sorted descending by (e*f, e, f), which makes
/// the term vector the canonical form usable as a map key.
class RamType {
public:
  RamType() = default;

  /// terms are (e, f) pairs; the constructor normalizes the order.
  explicit RamType(std::vector<std::pair<int, int>> terms);

  const std::vector<std::pair<int, int>>& terms() const { return terms_; }

  /// Sum of e*f over all terms: the degree of the underlying action.
  int total_degree() const;

  /// Canonical string, e.g. "1^3 2^1 1^1".
  std::string str() const;

  friend bool operator==(const RamType&, const RamType&) = default;
  friend std::strong_ordering operator<=>(const RamType&, const RamType&) = default;

private:
  std::vector<std::pair<int, int>> terms_;  // (e, f)
};

/// One wreath-type entry f^e(sub): a base-orbit family carrying the
/// component type of its canonical block.
struct WreathTypeEntry {
  int e = 1;
  int f = 1;
  RamType sub;

  friend bool operator==(const WreathTypeEntry&, const WreathTypeEntry&) = default;
  friend std::strong_ordering operator<=>(const WreathTypeEntry&,
                                          const WreathTypeEntry&) = default;
};

/// A ramification type for the base action whose entries each carry the
/// component sub-type. Canonical entry order: descending by (e*f, e, f),
/// ties broken by ascending sub-type.
class WreathType {
public:
  WreathType() = default;
  explicit WreathType(std::vector<WreathTypeEntry> entries);

  const std::vector<WreathTypeEntry>& entries() const { return entries_; }

  /// The base type, forgetting the sub-types.
  RamType base_type() const;

  /// Composition rule: entry f^e with sub-term f'^e' yields (f f')^(e e').
  RamType flatten() const;

  /// Canonical string, e.g. "1^2(1^2)" or "1^1(1^1 1^1) 1^1(1^1 1^1)".
  std::string str() const;

  friend bool operator==(const WreathType&, const WreathType&) = default;
  friend std::strong_ordering operator<=>(const WreathType&, const WreathType&) = default;

private:
  std::vector<WreathTypeEntry> entries_;
};

}  // namespace massform
