#include "pgx/group.hpp"

namespace pgx {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elt>> table) : table_(std::move(table)) {
  std::uint32_t n = order();
  inverse_.assign(n, 0);
  for (Elt a = 0; a < n; ++a) {
    bool found = false;
    for (Elt b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("group element without inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elt>> table) {
  std::uint32_t n = static_cast<std::uint32_t>(table.size());
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table not square");
    for (Elt x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  FiniteGroup g(std::move(table));
  ValidationReport rep = g.validate();
  if (!rep.ok()) throw std::invalid_argument("invalid group table: " + rep.summary());
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::uint32_t n = a.order() * b.order();
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      Elt xa = x / b.order(), xb = x % b.order();
      Elt ya = y / b.order(), yb = y % b.order();
      t[x][y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  return FiniteGroup(std::move(t));
}

ValidationReport FiniteGroup::validate() const {
  ValidationReport rep;
  std::uint32_t n = order();
  bool latin = true, ident = true, assoc = true;
  std::string w;
  for (Elt a = 0; a < n && latin; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Elt b = 0; b < n; ++b) {
      if (row[table_[a][b]]) {
        latin = false;
        w = "row " + std::to_string(a);
      }
      row[table_[a][b]] = true;
      if (col[table_[b][a]]) {
        latin = false;
        w = "col " + std::to_string(a);
      }
      col[table_[b][a]] = true;
    }
  }
  for (Elt a = 0; a < n; ++a) ident &= table_[0][a] == a && table_[a][0] == a;
  for (Elt a = 0; a < n && assoc; ++a)
    for (Elt b = 0; b < n && assoc; ++b)
      for (Elt c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          assoc = false;
          w = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
          break;
        }
  rep.require("latin square", latin, w);
  rep.require("identity is element 0", ident);
  rep.require("associativity", assoc, w);
  bool invs = true;
  for (Elt a = 0; a < n; ++a) invs &= mul(a, inv(a)) == 0 && mul(inv(a), a) == 0;
  rep.require("inverses", invs);
  return rep;
}

}  // namespace pgx
