#include "invconj/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace invconj {

int CayleyTable::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i] == name) return i;
  }
  throw Error("UnknownElement", "no element named '" + name + "'");
}

void check_shape(const CayleyTable& t) {
  const int n = t.size();
  if (n == 0) throw Error("BadTable", "empty table: no empty semigroups accepted");
  if (static_cast<int>(t.table.size()) != n)
    throw Error("BadTable", "table must have one row per element");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t.table[i].size()) != n)
      throw Error("BadTable", "row " + std::to_string(i) + " has wrong width");
    for (int j = 0; j < n; ++j) {
      if (t.table[i][j] < 0 || t.table[i][j] >= n)
        throw Error("BadTable", "entry out of range at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
  }
  std::vector<std::string> names = t.elements;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw Error("BadTable", "duplicate element names");
}

ValidationReport validate_inverse(const CayleyTable& t) {
  check_shape(t);
  ValidationReport report;
  const int n = t.size();

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = t.table[i][j];
      for (int k = 0; k < n; ++k) {
        if (t.table[ij][k] != t.table[i][t.table[j][k]]) {
          // one witnessing k per (i,j) keeps the report bounded
          report.violations.push_back({"NonAssociative", {i, j, k}});
          break;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    bool regular = false;
    for (int j = 0; j < n; ++j) {
      if (t.table[t.table[i][j]][i] == i && t.table[t.table[j][i]][j] == j) {
        regular = true;
        break;
      }
    }
    if (!regular) report.violations.push_back({"NotRegular", {i}});
  }

  std::vector<int> idems;
  for (int i = 0; i < n; ++i)
    if (t.table[i][i] == i) idems.push_back(i);
  for (int e : idems) {
    for (int f : idems) {
      if (e < f && t.table[e][f] != t.table[f][e])
        report.violations.push_back({"IdempotentsDontCommute", {e, f}});
    }
  }

  report.valid = report.violations.empty();
  return report;
}

std::optional<int> identity_index(const CayleyTable& t) {
  const int n = t.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t.table[e][x] == x && t.table[x][e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

namespace {

std::string fresh_identity_name(const CayleyTable& t) {
  std::string name = "1";
  while (std::find(t.elements.begin(), t.elements.end(), name) !=
         t.elements.end())
    name += "'";
  return name;
}

}  // namespace

CayleyTable adjoin_identity(const CayleyTable& t) {
  if (identity_index(t)) return t;
  CayleyTable out = t;
  const int n = t.size();
  out.elements.push_back(fresh_identity_name(t));
  for (int i = 0; i < n; ++i) out.table[i].push_back(i);
  std::vector<int> last(n + 1);
  std::iota(last.begin(), last.end(), 0);
  out.table.push_back(last);
  out.has_adjoined_identity = true;
  return out;
}

Partition partition_from_labels(const std::vector<int>& labels) {
  Partition p;
  p.class_of.assign(labels.size(), -1);
  std::map<int, int> seen;  // label -> class id, in least-member order
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    auto it = seen.find(labels[i]);
    if (it == seen.end()) {
      it = seen.emplace(labels[i], static_cast<int>(p.classes.size())).first;
      p.classes.emplace_back();
    }
    p.class_of[i] = it->second;
    p.classes[it->second].push_back(i);
  }
  return p;
}

int default_max_table_size() { return 300; }

InverseSemigroup InverseSemigroup::from_table(CayleyTable t, int max_size) {
  check_shape(t);
  if (t.size() > max_size)
    throw Error("TableTooLarge", "table has " + std::to_string(t.size()) +
                                     " elements, cap is " +
                                     std::to_string(max_size));
  ValidationReport report = validate_inverse(t);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "table is not an inverse semigroup:";
    for (const auto& v : report.violations) {
      msg << " " << v.kind << "(";
      for (size_t i = 0; i < v.elements.size(); ++i)
        msg << (i ? "," : "") << t.elements[v.elements[i]];
      msg << ")";
    }
    throw Error("ValidationFailed", msg.str());
  }

  InverseSemigroup s;
  s.s_ = std::move(t);
  s.n_ = s.s_.size();
  s.idem_.assign(s.n_, false);
  for (int i = 0; i < s.n_; ++i) s.idem_[i] = s.s_.table[i][i] == i;
  s.inv_.assign(s.n_, -1);
  for (int i = 0; i < s.n_; ++i) {
    for (int j = 0; j < s.n_; ++j) {
      if (s.s_.table[s.s_.table[i][j]][i] == i &&
          s.s_.table[s.s_.table[j][i]][j] == j) {
        s.inv_[i] = j;
        break;  // unique in an inverse semigroup
      }
    }
  }

  CayleyTable s1 = adjoin_identity(s.s_);
  s.n1_ = s1.size();
  s.id1_ = *identity_index(s1);
  s.t1_ = s1.table;
  s.idem1_.assign(s.n1_, false);
  for (int i = 0; i < s.n1_; ++i) s.idem1_[i] = s.t1_[i][i] == i;
  s.inv1_ = s.inv_;
  if (s.n1_ > s.n_) s.inv1_.push_back(s.n_);
  return s;
}

std::vector<int> InverseSemigroup::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (idem_[i]) out.push_back(i);
  return out;
}

std::string InverseSemigroup::name1(int a) const {
  return a < n_ ? s_.elements[a] : std::string("1");
}

bool InverseSemigroup::natural_leq(int a, int b) const {
  // b^-1 a = a^-1 a
  return prod(inv_[b], a) == prod(inv_[a], a);
}

bool InverseSemigroup::natural_leq1(int a, int b) const {
  return prod1(inv1_[b], a) == prod1(inv1_[a], a);
}

namespace {

// Labels elements by their principal-ideal sets.
std::vector<int> labels_by_sets(const std::vector<std::vector<bool>>& sets) {
  const int n = static_cast<int>(sets.size());
  std::vector<int> labels(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (labels[i] >= 0) continue;
    labels[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (labels[j] < 0 && sets[j] == sets[i]) labels[j] = next;
    ++next;
  }
  return labels;
}

}  // namespace

GreenData InverseSemigroup::green_relations() const {
  const int n = n_;
  std::vector<std::vector<bool>> lsets(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> rsets(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> jsets(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    lsets[a][a] = rsets[a][a] = jsets[a][a] = true;
    for (int x = 0; x < n; ++x) {
      lsets[a][s_.table[x][a]] = true;
      rsets[a][s_.table[a][x]] = true;
      jsets[a][s_.table[x][a]] = true;
      jsets[a][s_.table[a][x]] = true;
      for (int y = 0; y < n; ++y) jsets[a][s_.table[s_.table[x][a]][y]] = true;
    }
  }

  GreenData g;
  g.l = partition_from_labels(labels_by_sets(lsets));
  g.r = partition_from_labels(labels_by_sets(rsets));
  g.j = partition_from_labels(labels_by_sets(jsets));

  std::vector<int> hlabels(n);
  for (int a = 0; a < n; ++a)
    hlabels[a] = g.l.class_of[a] * n + g.r.class_of[a];
  g.h = partition_from_labels(hlabels);

  // D as the join of L and R via union-find.
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  auto unite = [&](int x, int y) { up[find(x)] = find(y); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.l.class_of[a] == g.l.class_of[b] ||
          g.r.class_of[a] == g.r.class_of[b])
        unite(a, b);
  std::vector<int> dlabels(n);
  for (int a = 0; a < n; ++a) dlabels[a] = find(a);
  g.d = partition_from_labels(dlabels);
  return g;
}

bool is_e_unitary(const InverseSemigroup& s) {
  for (int e = 0; e < s.size(); ++e) {
    if (!s.idempotent(e)) continue;
    for (int a = 0; a < s.size(); ++a)
      if (s.idempotent(s.prod(e, a)) && !s.idempotent(a)) return false;
  }
  return true;
}

bool natural_leq_all_forms_agree(const InverseSemigroup& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a) {
    const int ia = s.inv(a);
    for (int b = 0; b < n; ++b) {
      const int ib = s.inv(b);
      bool by_idem = false;
      for (int e = 0; e < n && !by_idem; ++e)
        by_idem = s.idempotent(e) && s.prod(e, b) == a;
      const bool f1 = s.prod(ib, a) == s.prod(ia, a);
      const bool f2 = s.prod(ia, b) == s.prod(ia, a);
      const bool f3 = s.prod(a, ib) == s.prod(a, ia);
      const bool f4 = s.prod(b, ia) == s.prod(a, ia);
      if (f1 != by_idem || f2 != by_idem || f3 != by_idem || f4 != by_idem)
        return false;
    }
  }
  return true;
}

}  // namespace invconj
