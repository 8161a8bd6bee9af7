#include "massform/expr.hpp"

#include <cctype>

#include "massform/errors.hpp"

namespace massform {

GroupExpr::Ptr GroupExpr::sym(int n) {
  if (n < 1) throw std::invalid_argument("symmetric arity must be >= 1");
  auto e = std::shared_ptr<GroupExpr>(new GroupExpr());
  e->kind_ = Kind::Sym;
  e->sym_n_ = n;
  return e;
}

GroupExpr::Ptr GroupExpr::wr(Ptr left, Ptr right) {
  if (!left || !right) throw std::invalid_argument("wr requires two children");
  auto e = std::shared_ptr<GroupExpr>(new GroupExpr());
  e->kind_ = Kind::Wr;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

GroupExpr::Ptr GroupExpr::prod(Ptr left, Ptr right) {
  if (!left || !right) throw std::invalid_argument("x requires two children");
  auto e = std::shared_ptr<GroupExpr>(new GroupExpr());
  e->kind_ = Kind::Prod;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

GroupExpr::Ptr GroupExpr::custom(int degree,
                                 std::vector<std::vector<std::vector<int>>> generators,
                                 std::optional<std::string> name) {
  if (degree < 1) throw std::invalid_argument("custom degree must be >= 1");
  for (const auto& gen : generators) {
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    for (const auto& cycle : gen)
      for (int p : cycle) {
        if (p < 0 || p >= degree)
          throw std::invalid_argument("cycle point out of range");
        if (used[static_cast<std::size_t>(p)])
          throw std::invalid_argument("point repeated within a generator");
        used[static_cast<std::size_t>(p)] = 1;
      }
  }
  auto e = std::shared_ptr<GroupExpr>(new GroupExpr());
  e->kind_ = Kind::Custom;
  e->custom_degree_ = degree;
  e->custom_generators_ = std::move(generators);
  e->name_ = std::move(name);
  return e;
}

std::string GroupExpr::str() const {
  switch (kind_) {
    case Kind::Sym:
      return "S" + std::to_string(sym_n_);
    case Kind::Wr:
      return "wr(" + left_->str() + "," + right_->str() + ")";
    case Kind::Prod:
      return "x(" + left_->str() + "," + right_->str() + ")";
    case Kind::Custom: {
      std::string out = "custom(" + std::to_string(custom_degree_) + ";";
      bool first_gen = true;
      for (const auto& gen : custom_generators_) {
        out += first_gen ? " " : ", ";
        first_gen = false;
        std::string gen_text;
        for (const auto& cycle : gen) {
          if (cycle.size() < 2) continue;  // fixed points are implicit
          gen_text += '(';
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) gen_text += ' ';
            gen_text += std::to_string(cycle[i] + 1);
          }
          gen_text += ')';
        }
        out += gen_text.empty() ? "(1)" : gen_text;
      }
      out += ")";
      return out;
    }
  }
  return {};
}

CountingExpr::Ptr CountingExpr::perm() {
  auto e = std::shared_ptr<CountingExpr>(new CountingExpr());
  e->kind_ = Kind::Perm;
  return e;
}

CountingExpr::Ptr CountingExpr::zero() {
  auto e = std::shared_ptr<CountingExpr>(new CountingExpr());
  e->kind_ = Kind::Zero;
  return e;
}

CountingExpr::Ptr CountingExpr::sign() {
  auto e = std::shared_ptr<CountingExpr>(new CountingExpr());
  e->kind_ = Kind::Signed;
  return e;
}

CountingExpr::Ptr CountingExpr::wreath(Ptr inner, Ptr outer) {
  if (!inner || !outer) throw std::invalid_argument("wreath requires two children");
  auto e = std::shared_ptr<CountingExpr>(new CountingExpr());
  e->kind_ = Kind::Wreath;
  e->left_ = std::move(inner);
  e->right_ = std::move(outer);
  return e;
}

CountingExpr::Ptr CountingExpr::sum(Ptr left, Ptr right) {
  if (!left || !right) throw std::invalid_argument("sum requires two children");
  auto e = std::shared_ptr<CountingExpr>(new CountingExpr());
  e->kind_ = Kind::Sum;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

std::string CountingExpr::str() const {
  switch (kind_) {
    case Kind::Perm:
      return "perm";
    case Kind::Zero:
      return "zero";
    case Kind::Signed:
      return "signed";
    case Kind::Wreath:
      return "wreath(" + left_->str() + "," + right_->str() + ")";
    case Kind::Sum:
      return "sum(" + left_->str() + "," + right_->str() + ")";
  }
  return {};
}

namespace {

// Shared cursor for both little recursive-descent parsers.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t pos() const { return pos_; }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  bool try_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    // Keywords must not run into further identifier characters.
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }

  int parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected a number");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(pos_, "number too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GroupExpr::Ptr parse_group_expr(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos();
  if (cur.try_keyword("wr")) {
    cur.expect('(');
    auto left = parse_group_expr(cur);
    cur.expect(',');
    auto right = parse_group_expr(cur);
    cur.expect(')');
    return GroupExpr::wr(std::move(left), std::move(right));
  }
  if (cur.try_keyword("x")) {
    cur.expect('(');
    auto left = parse_group_expr(cur);
    cur.expect(',');
    auto right = parse_group_expr(cur);
    cur.expect(')');
    return GroupExpr::prod(std::move(left), std::move(right));
  }
  if (cur.try_keyword("custom")) {
    cur.expect('(');
    const int degree = cur.parse_int();
    if (degree < 1) throw ParseError(start, "custom degree must be >= 1");
    cur.expect(';');
    std::vector<std::vector<std::vector<int>>> generators;
    if (cur.peek() != ')') {
      while (true) {
        std::vector<std::vector<int>> cycles;
        if (cur.peek() != '(')
          throw ParseError(cur.pos(), "expected a cycle");
        while (cur.peek() == '(') {
          cur.expect('(');
          std::vector<int> cycle;
          while (cur.peek() != ')') {
            const std::size_t at = cur.pos();
            const int point = cur.parse_int();
            if (point < 1 || point > degree)
              throw ParseError(at, "cycle point out of range 1.." +
                                       std::to_string(degree));
            cycle.push_back(point - 1);
          }
          cur.expect(')');
          if (cycle.empty()) throw ParseError(cur.pos(), "empty cycle");
          cycles.push_back(std::move(cycle));
        }
        generators.push_back(std::move(cycles));
        if (!cur.try_consume(',')) break;
      }
    }
    cur.expect(')');
    try {
      return GroupExpr::custom(degree, std::move(generators));
    } catch (const std::invalid_argument& e) {
      throw ParseError(start, e.what());
    }
  }
  if (cur.peek() == 'S') {
    cur.try_consume('S');
    const int n = cur.parse_int();
    if (n < 1) throw ParseError(start, "symmetric arity must be >= 1");
    return GroupExpr::sym(n);
  }
  throw ParseError(cur.pos(), "expected S<n>, wr(...), x(...) or custom(...)");
}

CountingExpr::Ptr parse_counting_expr(Cursor& cur) {
  if (cur.try_keyword("perm")) return CountingExpr::perm();
  if (cur.try_keyword("zero")) return CountingExpr::zero();
  if (cur.try_keyword("signed")) return CountingExpr::sign();
  if (cur.try_keyword("wreath")) {
    cur.expect('(');
    auto inner = parse_counting_expr(cur);
    cur.expect(',');
    auto outer = parse_counting_expr(cur);
    cur.expect(')');
    return CountingExpr::wreath(std::move(inner), std::move(outer));
  }
  if (cur.try_keyword("sum")) {
    cur.expect('(');
    auto left = parse_counting_expr(cur);
    cur.expect(',');
    auto right = parse_counting_expr(cur);
    cur.expect(')');
    return CountingExpr::sum(std::move(left), std::move(right));
  }
  throw ParseError(cur.pos(), "expected perm, zero, signed, wreath(...) or sum(...)");
}

}  // namespace

GroupExpr::Ptr parse_group(std::string_view text) {
  Cursor cur(text);
  auto expr = parse_group_expr(cur);
  if (!cur.at_end()) throw ParseError(cur.pos(), "unexpected trailing input");
  return expr;
}

CountingExpr::Ptr parse_counting(std::string_view text) {
  Cursor cur(text);
  auto expr = parse_counting_expr(cur);
  if (!cur.at_end()) throw ParseError(cur.pos(), "unexpected trailing input");
  return expr;
}

PermGroup build_group(const GroupExpr& e, long long max_order) {
  switch (e.kind()) {
    case GroupExpr::Kind::Sym:
      return symmetric_group(e.sym_n(), max_order);
    case GroupExpr::Kind::Wr: {
      const PermGroup left = build_group(*e.left(), max_order);
      const PermGroup right = build_group(*e.right(), max_order);
      PermGroup result = wreath_product(left, right, max_order);
      result.set_label(e.str());
      return result;
    }
    case GroupExpr::Kind::Prod: {
      const PermGroup left = build_group(*e.left(), max_order);
      const PermGroup right = build_group(*e.right(), max_order);
      PermGroup result = direct_product(left, right, max_order);
      result.set_label(e.str());
      return result;
    }
    case GroupExpr::Kind::Custom: {
      std::vector<Permutation> gens;
      gens.reserve(e.custom_generators().size());
      for (const auto& cycles : e.custom_generators())
        gens.push_back(Permutation::from_cycles(e.custom_degree(), cycles));
      PermGroup result = generate(e.custom_degree(), std::move(gens), max_order);
      result.set_label(e.name().value_or(e.str()));
      return result;
    }
  }
  throw std::logic_error("unreachable");
}

bool check_compat(const GroupExpr& g, const CountingExpr& c) {
  switch (c.kind()) {
    case CountingExpr::Kind::Perm:
    case CountingExpr::Kind::Zero:
      return true;
    case CountingExpr::Kind::Signed:
      return g.kind() == GroupExpr::Kind::Wr &&
             g.left()->kind() == GroupExpr::Kind::Sym && g.left()->sym_n() == 2;
    case CountingExpr::Kind::Wreath:
      return g.kind() == GroupExpr::Kind::Wr && check_compat(*g.left(), *c.left()) &&
             check_compat(*g.right(), *c.right());
    case CountingExpr::Kind::Sum:
      return g.kind() == GroupExpr::Kind::Prod && check_compat(*g.left(), *c.left()) &&
             check_compat(*g.right(), *c.right());
  }
  return false;
}

TameCountingFunction build_counting(const CountingExpr& c, const PermGroup& g) {
  switch (c.kind()) {
    case CountingExpr::Kind::Perm:
      return perm_conductor(g);
    case CountingExpr::Kind::Zero:
      return zero_conductor(g);
    case CountingExpr::Kind::Signed:
      return signed_conductor(g);
    case CountingExpr::Kind::Wreath: {
      if (!g.is_wreath()) throw StructureError("wreath counting needs a wreath group");
      return wreath_compose(build_counting(*c.left(), g.inner()),
                            build_counting(*c.right(), g.outer()), g);
    }
    case CountingExpr::Kind::Sum: {
      if (!g.is_product()) throw StructureError("sum counting needs a direct product");
      return sum_compose(build_counting(*c.left(), g.inner()),
                         build_counting(*c.right(), g.outer()), g);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace massform
