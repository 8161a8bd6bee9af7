#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "massform/counting.hpp"
#include "massform/group.hpp"

namespace massform {

/// Group construction tree. Grammar:
///   expr := S<digits> | wr(expr,expr) | x(expr,expr) | custom(<digits>; <cycles>)
/// where custom generators are comma-separated products of 1-based cycles,
/// e.g. custom(6; (1 2 3), (4 5 6), (2 3)(5 6)). Whitespace-insensitive.
class GroupExpr {
public:
  enum class Kind { Sym, Wr, Prod, Custom };
  using Ptr = std::shared_ptr<const GroupExpr>;

  static Ptr sym(int n);
  static Ptr wr(Ptr left, Ptr right);
  static Ptr prod(Ptr left, Ptr right);
  /// Generators as 0-based cycle lists.
  static Ptr custom(int degree, std::vector<std::vector<std::vector<int>>> generators,
                    std::optional<std::string> name = std::nullopt);

  Kind kind() const { return kind_; }
  int sym_n() const { return sym_n_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }
  int custom_degree() const { return custom_degree_; }
  const std::vector<std::vector<std::vector<int>>>& custom_generators() const {
    return custom_generators_;
  }
  const std::optional<std::string>& name() const { return name_; }

  /// Canonical text; parsing it back yields an equal tree.
  std::string str() const;

private:
  GroupExpr() = default;
  Kind kind_ = Kind::Sym;
  int sym_n_ = 1;
  Ptr left_, right_;
  int custom_degree_ = 0;
  std::vector<std::vector<std::vector<int>>> custom_generators_;  // 0-based cycles
  std::optional<std::string> name_;
};

/// Counting-function tree. Grammar:
///   c := perm | zero | signed | wreath(c,c) | sum(c,c)
class CountingExpr {
public:
  enum class Kind { Perm, Zero, Signed, Wreath, Sum };
  using Ptr = std::shared_ptr<const CountingExpr>;

  static Ptr perm();
  static Ptr zero();
  static Ptr sign();
  static Ptr wreath(Ptr inner, Ptr outer);
  static Ptr sum(Ptr left, Ptr right);

  Kind kind() const { return kind_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }

  std::string str() const;

private:
  CountingExpr() = default;
  Kind kind_ = Kind::Perm;
  Ptr left_, right_;
};

/// Throws ParseError with the offending offset.
GroupExpr::Ptr parse_group(std::string_view text);
CountingExpr::Ptr parse_counting(std::string_view text);

/// Builds the group, attaching construction tags and the pretty-printed label.
PermGroup build_group(const GroupExpr& e, long long max_order = kDefaultMaxOrder);

/// Structural compatibility: Perm and Zero match anything; Wreath needs a
/// wr node, Sum an x node, Signed a wr(S2, ·) node; children recurse.
bool check_compat(const GroupExpr& g, const CountingExpr& c);

/// Builds the counting function on a group built from a matching expression.
/// Throws StructureError when the group lacks the required construction tags.
TameCountingFunction build_counting(const CountingExpr& c, const PermGroup& g);

}  // namespace massform
