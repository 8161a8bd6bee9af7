#pragma once

#include <string>
#include <utility>
#include <vector>

#include "massform/masspoly.hpp"

namespace massform {

/// A named group from the built-in catalog with its expected properties.
struct CatalogEntry {
  std::string name;        // stable CLI identifier
  std::string group_text;  // DSL expression
  long long expected_order = 0;
  bool rational = false;   // expected rational-character-table verdict
  // Known total-mass polynomials as (counting DSL text, polynomial) pairs.
  std::vector<std::pair<std::string, MassPoly>> reference_polys;
};

/// Number of partitions of k into at most m parts.
/// p(0, m) = 1, p(k, 0) = 0 for k > 0, and p(k, m) = 0 for k < 0, so the
/// recurrence p(k, m) = p(k, m-1) + p(k-m, m) holds without guards.
long long partition_p(long long k, long long m);

/// sum_{k=0}^{n-1} p(k, n-k) x^k, unscaled (multiply by n! to
/// compare with total masses).
MassPoly bhargava_rhs(int n);

/// Built-in groups used by the acceptance suite and the CLI.
const std::vector<CatalogEntry>& catalog();

}  // namespace massform
