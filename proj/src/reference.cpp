#include "massform/reference.hpp"

#include <stdexcept>

namespace massform {

long long partition_p(long long k, long long m) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (m <= 0) return 0;
  // p(k, m) = p(k, m-1) + p(k-m, m)
  std::vector<long long> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (long long parts = 1; parts <= m; ++parts)
    for (long long total = parts; total <= k; ++total)
      row[static_cast<std::size_t>(total)] +=
          row[static_cast<std::size_t>(total - parts)];
  return row[static_cast<std::size_t>(k)];
}

MassPoly bhargava_rhs(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<long long> coeffs(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k)
    coeffs[static_cast<std::size_t>(k)] = partition_p(k, n - k);
  return MassPoly(std::move(coeffs));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    for (int n = 2; n <= 5; ++n) {
      CatalogEntry e;
      e.name = "S" + std::to_string(n);
      e.group_text = e.name;
      long long order = 1;
      for (int k = 2; k <= n; ++k) order *= k;
      e.expected_order = order;
      e.rational = true;
      e.reference_polys.emplace_back("perm", bhargava_rhs(n).scaled(order));
      list.push_back(std::move(e));
    }

    CatalogEntry d4;
    d4.name = "D4";
    d4.group_text = "wr(S2,S2)";
    d4.expected_order = 8;
    d4.rational = true;
    d4.reference_polys.emplace_back("wreath(perm,perm)",
                                    MassPoly({8, 16, 16}));
    d4.reference_polys.emplace_back("perm", MassPoly({8, 8, 16, 8}));
    list.push_back(std::move(d4));

    CatalogEntry wb3;
    wb3.name = "WB3";
    wb3.group_text = "wr(S2,S3)";
    wb3.expected_order = 48;
    wb3.rational = true;
    list.push_back(std::move(wb3));

    CatalogEntry wb4;
    wb4.name = "WB4";
    wb4.group_text = "wr(S2,S4)";
    wb4.expected_order = 384;
    wb4.rational = true;
    list.push_back(std::move(wb4));

    CatalogEntry s3wrs2;
    s3wrs2.name = "S3wrS2";
    s3wrs2.group_text = "wr(S3,S2)";
    s3wrs2.expected_order = 72;
    s3wrs2.rational = true;
    list.push_back(std::move(s3wrs2));

    CatalogEntry iter;
    iter.name = "S2wrD4";
    iter.group_text = "wr(S2,wr(S2,S2))";
    iter.expected_order = 128;
    iter.rational = true;
    list.push_back(std::move(iter));

    CatalogEntry wg2;
    wg2.name = "WG2";
    wg2.group_text = "x(S2,S3)";
    wg2.expected_order = 12;
    wg2.rational = true;
    wg2.reference_polys.emplace_back("sum(perm,perm)",
                                     MassPoly({12, 24, 24, 12}));
    list.push_back(std::move(wg2));

    // (C3 x C3) : C2 on two blocks of three, the component flips applied jointly.
    CatalogEntry g18;
    g18.name = "G18";
    g18.group_text = "custom(6; (1 2 3), (4 5 6), (2 3)(5 6))";
    g18.expected_order = 18;
    g18.rational = true;
    list.push_back(std::move(g18));

    CatalogEntry c3;
    c3.name = "C3";
    c3.group_text = "custom(3; (1 2 3))";
    c3.expected_order = 3;
    c3.rational = false;
    list.push_back(std::move(c3));

    CatalogEntry c4;
    c4.name = "C4";
    c4.group_text = "custom(4; (1 2 3 4))";
    c4.expected_order = 4;
    c4.rational = false;
    list.push_back(std::move(c4));

    CatalogEntry a4;
    a4.name = "A4";
    a4.group_text = "custom(4; (1 2 3), (2 3 4))";
    a4.expected_order = 12;
    a4.rational = false;
    list.push_back(std::move(a4));

    return list;
  }();
  return entries;
}

}  // namespace massform
