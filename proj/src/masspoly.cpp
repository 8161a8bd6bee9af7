#include "massform/masspoly.hpp"

#include <numeric>
#include <stdexcept>

namespace massform {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num * other.den + other.num * den, den * other.den);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num * other.num, den * other.den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

MassPoly::MassPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

MassPoly MassPoly::constant(long long c) { return MassPoly(std::vector<long long>{c}); }

MassPoly MassPoly::monomial(long long coeff, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<long long> coeffs(static_cast<std::size_t>(power) + 1, 0);
  coeffs.back() = coeff;
  return MassPoly(std::move(coeffs));
}

long long MassPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

MassPoly& MassPoly::operator+=(const MassPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

MassPoly operator*(const MassPoly& lhs, const MassPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return MassPoly();
  std::vector<long long> coeffs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      coeffs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return MassPoly(std::move(coeffs));
}

MassPoly MassPoly::scaled(long long factor) const {
  std::vector<long long> coeffs = coeffs_;
  for (auto& c : coeffs) c *= factor;
  return MassPoly(std::move(coeffs));
}

MassPoly MassPoly::compose_power(int f) const {
  if (f < 1) throw std::invalid_argument("substitution power must be >= 1");
  if (is_zero()) return MassPoly();
  std::vector<long long> coeffs((coeffs_.size() - 1) * static_cast<std::size_t>(f) + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs[k * static_cast<std::size_t>(f)] = coeffs_[k];
  return MassPoly(std::move(coeffs));
}

Rational MassPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

std::string MassPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(coeffs_[k]);
    } else {
      if (coeffs_[k] != 1) out += std::to_string(coeffs_[k]);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

void MassPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace massform
