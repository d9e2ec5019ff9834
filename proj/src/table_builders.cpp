#include "invconj/table_builders.hpp"

#include <algorithm>
#include <numeric>

namespace invconj {

CayleyTable symmetric_inverse_table(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  const GroundSet ground = make_ground(std::move(names));
  const std::vector<Chart> charts = all_charts(ground);

  CayleyTable t;
  for (const Chart& c : charts) t.elements.push_back(to_string(c));
  const int m = static_cast<int>(charts.size());
  t.table.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Chart prod = compose(charts[i], charts[j]);
      t.table[i][j] = static_cast<int>(
          std::find(charts.begin(), charts.end(), prod) - charts.begin());
    }
  }
  return t;
}

CayleyTable brandt_b2() {
  // Matrix units e(i,j) plus zero: e(i,j) e(k,l) = e(i,l) when j = k.
  CayleyTable t;
  t.elements = {"0", "e11", "e12", "e21", "e22"};
  auto row = [](int i) { return (i - 1) / 2 + 1; };
  auto col = [](int i) { return (i - 1) % 2 + 1; };
  const int m = 5;
  t.table.assign(m, std::vector<int>(m, 0));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j)
      t.table[i][j] = col(i) == row(j) ? (row(i) - 1) * 2 + col(j) : 0;
  return t;
}

CayleyTable symmetric_group_table(int n) {
  if (n < 1 || n > 5) throw Error("BadInput", "symmetric group cap is 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  CayleyTable t;
  for (const auto& perm : perms) {
    std::string name;
    for (int v : perm) name += std::to_string(v + 1);
    t.elements.push_back(name);
  }
  const int m = static_cast<int>(perms.size());
  t.table.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> prod(n);
      for (int x = 0; x < n; ++x) prod[x] = perms[j][perms[i][x]];
      t.table[i][j] = static_cast<int>(
          std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  }
  return t;
}

CayleyTable cyclic_group_table(int n) {
  if (n < 1) throw Error("BadInput", "cyclic group needs n >= 1");
  CayleyTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("g" + std::to_string(i));
  t.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
  return t;
}

CayleyTable chain_semilattice_table(int n) {
  if (n < 1) throw Error("BadInput", "chain needs n >= 1");
  CayleyTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("e" + std::to_string(i));
  t.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[i][j] = std::min(i, j);
  return t;
}

CayleyTable antichain_bottom_semilattice() {
  CayleyTable t;
  t.elements = {"bot", "p", "q"};
  t.table = {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  return t;
}

CayleyTable left_zero_table(int n) {
  if (n < 1) throw Error("BadInput", "left zero needs n >= 1");
  CayleyTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("x" + std::to_string(i));
  t.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[i][j] = i;
  return t;
}

CayleyTable direct_product(const CayleyTable& s, const CayleyTable& t) {
  CayleyTable out;
  const int ns = s.size(), nt = t.size();
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j)
      out.elements.push_back("(" + s.elements[i] + "," + t.elements[j] + ")");
  out.table.assign(ns * nt, std::vector<int>(ns * nt, -1));
  for (int i = 0; i < ns * nt; ++i)
    for (int j = 0; j < ns * nt; ++j)
      out.table[i][j] = s.table[i / nt][j / nt] * nt + t.table[i % nt][j % nt];
  return out;
}

}  // namespace invconj
