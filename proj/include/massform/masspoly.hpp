#pragma once

#include <string>
#include <vector>

namespace massform {

/// Exact rational, always reduced, denominator positive.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(long long n, long long d);

  Rational operator+(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  friend bool operator==(const Rational&, const Rational&) = default;

  bool is_integer() const { return den == 1; }
  std::string str() const;  // "17" or "121/8"
};

/// Polynomial in x = 1/q with integer coefficients, stored densely in
/// ascending powers with trailing zeros trimmed. All arithmetic is exact.
class MassPoly {
public:
  MassPoly() = default;
  explicit MassPoly(std::vector<long long> coeffs);

  static MassPoly constant(long long c);
  static MassPoly monomial(long long coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero
  long long coeff(int k) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  MassPoly& operator+=(const MassPoly& other);
  friend MassPoly operator+(MassPoly lhs, const MassPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MassPoly operator*(const MassPoly& lhs, const MassPoly& rhs);

  MassPoly scaled(long long factor) const;

  /// Substitute x -> x^f (exact; f >= 1).
  MassPoly compose_power(int f) const;

  Rational evaluate(const Rational& x) const;

  /// Value at x = 1/q.
  Rational value_at_q(long long q) const { return evaluate(Rational(1, q)); }

  /// "8 + 16x + 16x^2"; the zero polynomial prints "0".
  std::string str() const;

  friend bool operator==(const MassPoly&, const MassPoly&) = default;

private:
  void trim();
  std::vector<long long> coeffs_;
};

}  // namespace massform
