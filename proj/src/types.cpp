#include "massform/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace massform {

namespace {

// Canonical term order: descending by (e*f, e, f).
bool term_before(const std::pair<int, int>& lhs, const std::pair<int, int>& rhs) {
  return std::make_tuple(lhs.first * lhs.second, lhs.first, lhs.second) >
         std::make_tuple(rhs.first * rhs.second, rhs.first, rhs.second);
}

bool entry_before(const WreathTypeEntry& lhs, const WreathTypeEntry& rhs) {
  const auto lk = std::make_tuple(lhs.e * lhs.f, lhs.e, lhs.f);
  const auto rk = std::make_tuple(rhs.e * rhs.f, rhs.e, rhs.f);
  if (lk != rk) return lk > rk;
  return lhs.sub < rhs.sub;
}

}  // namespace

RamType::RamType(std::vector<std::pair<int, int>> terms) : terms_(std::move(terms)) {
  for (const auto& [e, f] : terms_)
    if (e < 1 || f < 1) throw std::invalid_argument("type terms must be positive");
  std::sort(terms_.begin(), terms_.end(), term_before);
}

int RamType::total_degree() const {
  int total = 0;
  for (const auto& [e, f] : terms_) total += e * f;
  return total;
}

std::string RamType::str() const {
  std::string out;
  for (const auto& [e, f] : terms_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(f) + "^" + std::to_string(e);
  }
  return out;
}

WreathType::WreathType(std::vector<WreathTypeEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto& entry : entries_)
    if (entry.e < 1 || entry.f < 1)
      throw std::invalid_argument("type terms must be positive");
  std::sort(entries_.begin(), entries_.end(), entry_before);
}

RamType WreathType::base_type() const {
  std::vector<std::pair<int, int>> terms;
  terms.reserve(entries_.size());
  for (const auto& entry : entries_) terms.emplace_back(entry.e, entry.f);
  return RamType(std::move(terms));
}

RamType WreathType::flatten() const {
  std::vector<std::pair<int, int>> terms;
  for (const auto& entry : entries_)
    for (const auto& [se, sf] : entry.sub.terms())
      terms.emplace_back(entry.e * se, entry.f * sf);
  return RamType(std::move(terms));
}

std::string WreathType::str() const {
  std::string out;
  for (const auto& entry : entries_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(entry.f) + "^" + std::to_string(entry.e) + "(" +
           entry.sub.str() + ")";
  }
  return out;
}

}  // namespace massform
