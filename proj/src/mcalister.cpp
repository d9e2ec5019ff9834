#include "invconj/mcalister.hpp"

#include <algorithm>
#include <sstream>

namespace invconj {

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  throw Error("UnknownElement", "no poset element named '" + name + "'");
}

namespace {

// Greatest lower bound of a set of poset elements, -1 when missing.
int glb(const Poset& p, const std::vector<int>& xs) {
  std::vector<int> lower;
  for (int c = 0; c < p.size(); ++c) {
    bool below_all = true;
    for (int x : xs) below_all &= static_cast<bool>(p.leq[c][x]);
    if (below_all) lower.push_back(c);
  }
  for (int c : lower) {
    bool greatest = true;
    for (int d : lower) greatest &= static_cast<bool>(p.leq[d][c]);
    if (greatest) return c;
  }
  return -1;
}

void check_poset(const Poset& p, TripleValidation& out) {
  const int n = p.size();
  if (n == 0) {
    out.violations.push_back({"BadPoset", "empty poset"});
    return;
  }
  if (static_cast<int>(p.leq.size()) != n) {
    out.violations.push_back({"BadPoset", "leq matrix has wrong shape"});
    return;
  }
  for (const auto& row : p.leq) {
    if (static_cast<int>(row.size()) != n) {
      out.violations.push_back({"BadPoset", "leq matrix has wrong shape"});
      return;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!p.leq[i][i])
      out.violations.push_back({"BadPoset", p.elements[i] + " not <= itself"});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i])
        out.violations.push_back(
            {"BadPoset", "antisymmetry fails on " + p.elements[i] + "," +
                             p.elements[j]});
      for (int k = 0; k < n; ++k)
        if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k])
          out.violations.push_back(
              {"BadPoset", "transitivity fails on " + p.elements[i] + "," +
                               p.elements[j] + "," + p.elements[k]});
    }
}

}  // namespace

TripleValidation validate_triple(const McAlisterTriple& t) {
  TripleValidation out;
  check_poset(t.poset, out);
  if (!out.violations.empty()) {
    out.valid = false;
    return out;
  }

  const int nx = t.poset.size();
  const int ng = t.group.size();

  ValidationReport group_report = validate_inverse(t.group);
  bool group_ok = group_report.valid;
  if (group_ok) {
    int idems = 0;
    for (int i = 0; i < ng; ++i) idems += t.group.table[i][i] == i;
    group_ok = idems == 1;
  }
  if (!group_ok)
    out.violations.push_back({"NotGroup", "the group table is not a group"});

  if (t.ideal.empty())
    out.violations.push_back({"BadPoset", "the ideal Y may not be empty"});
  std::vector<bool> in_ideal(nx, false);
  for (int y : t.ideal) {
    if (y < 0 || y >= nx) {
      out.violations.push_back({"BadPoset", "ideal member out of range"});
      out.valid = false;
      return out;
    }
    in_ideal[y] = true;
  }

  if (static_cast<int>(t.action.size()) != ng)
    out.violations.push_back({"NotOrderAutomorphism", "action missing rows"});
  for (const auto& row : t.action)
    if (static_cast<int>(row.size()) != nx)
      out.violations.push_back({"NotOrderAutomorphism", "action row has wrong width"});
  if (!out.violations.empty()) {
    out.valid = false;
    return out;
  }

  // (1) Y is a meet-subsemilattice.
  for (int a : t.ideal) {
    for (int b : t.ideal) {
      const int m = glb(t.poset, {a, b});
      if (m < 0 || !in_ideal[m])
        out.violations.push_back(
            {"MeetMissing", t.poset.elements[a] + " ^ " + t.poset.elements[b]});
    }
  }

  // (2) Y is an order ideal of X.
  for (int a : t.ideal)
    for (int b = 0; b < nx; ++b)
      if (t.poset.leq[b][a] && !in_ideal[b])
        out.violations.push_back(
            {"NotOrderIdeal", t.poset.elements[b] + " <= " +
                                  t.poset.elements[a] + " but outside Y"});

  // (3) G acts on X by order-automorphisms.
  for (int g = 0; g < ng; ++g) {
    std::vector<bool> hit(nx, false);
    for (int x = 0; x < nx; ++x) {
      const int gx = t.action[g][x];
      if (gx < 0 || gx >= nx) {
        out.violations.push_back({"NotOrderAutomorphism",
                                  "action value out of range"});
        out.valid = false;
        return out;
      }
      if (hit[gx])
        out.violations.push_back(
            {"NotOrderAutomorphism", t.group.elements[g] + " is not injective"});
      hit[gx] = true;
    }
    for (int h = 0; h < ng; ++h)
      for (int x = 0; x < nx; ++x)
        if (t.action[g][t.action[h][x]] != t.action[t.group.table[g][h]][x])
          out.violations.push_back(
              {"NotOrderAutomorphism",
               "composition fails on " + t.group.elements[g] + "," +
                   t.group.elements[h] + "," + t.poset.elements[x]});
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b)
        if (t.poset.leq[a][b] !=
            t.poset.leq[t.action[g][a]][t.action[g][b]])
          out.violations.push_back(
              {"NotOrderAutomorphism",
               t.group.elements[g] + " does not preserve order on " +
                   t.poset.elements[a] + "," + t.poset.elements[b]});
  }

  // (4) GY = X and gY n Y is never empty.
  for (int x = 0; x < nx; ++x) {
    bool covered = false;
    for (int g = 0; g < ng && !covered; ++g)
      for (int y : t.ideal)
        if (t.action[g][y] == x) {
          covered = true;
          break;
        }
    if (!covered)
      out.violations.push_back(
          {"CoverageFailure", "GY misses " + t.poset.elements[x]});
  }
  for (int g = 0; g < ng; ++g) {
    bool meets = false;
    for (int y : t.ideal)
      if (in_ideal[t.action[g][y]]) {
        meets = true;
        break;
      }
    if (!meets)
      out.violations.push_back(
          {"CoverageFailure", "gY n Y empty for " + t.group.elements[g]});
  }

  out.valid = out.violations.empty();
  return out;
}

PSemigroup PSemigroup::build(const McAlisterTriple& t) {
  TripleValidation check = validate_triple(t);
  if (!check.valid) {
    std::ostringstream msg;
    msg << "triple fails validation:";
    for (const auto& v : check.violations)
      msg << " " << v.kind << "(" << v.detail << ")";
    throw Error("InvalidTriple", msg.str());
  }

  PSemigroup p;
  p.t_ = t;
  const int nx = t.poset.size();
  const int ng = t.group.size();

  p.group_id_ = *identity_index(t.group);
  p.group_inv_.assign(ng, -1);
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      if (t.group.table[g][h] == p.group_id_) p.group_inv_[g] = h;

  p.meet_.assign(nx, std::vector<int>(nx, -1));
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b) p.meet_[a][b] = glb(t.poset, {a, b});

  std::vector<bool> in_ideal(nx, false);
  for (int y : t.ideal) in_ideal[y] = true;
  for (int y : t.ideal)
    for (int g = 0; g < ng; ++g)
      if (in_ideal[t.action[p.group_inv_[g]][y]])
        p.elems_.push_back(PElement{y, g});

  const int n = static_cast<int>(p.elems_.size());
  p.mul_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& [A, g] = p.elems_[i];
      const auto& [B, h] = p.elems_[j];
      const int gB = t.action[g][B];
      const int m = p.meet_[A][gB];
      const int gh = t.group.table[g][h];
      if (m < 0 || !in_ideal[m] ||
          !in_ideal[t.action[p.group_inv_[gh]][m]])
        throw Error("ClosureFailure",
                    "product " + p.name(i) + p.name(j) + " leaves P");
      const int idx = p.index_of(PElement{m, gh});
      if (idx < 0)
        throw Error("ClosureFailure",
                    "product " + p.name(i) + p.name(j) + " leaves P");
      p.mul_[i][j] = idx;
    }
  }
  return p;
}

int PSemigroup::index_of(const PElement& e) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[i] == e) return i;
  return -1;
}

int PSemigroup::inv(int i) const {
  const auto& [A, g] = elems_[i];
  const int gi = group_inv_[g];
  return index_of(PElement{t_.action[gi][A], gi});
}

std::string PSemigroup::name(int i) const {
  const auto& [A, g] = elems_[i];
  return "(" + t_.poset.elements[A] + "," + t_.group.elements[g] + ")";
}

std::optional<int> PSemigroup::conjugating_witness(int u, int v) const {
  const auto& [A, g] = elems_[u];
  const auto& [B, h] = elems_[v];
  for (int w = 0; w < size(); ++w) {
    const auto& [C, k] = elems_[w];
    if (t_.group.table[t_.group.table[k][h]][group_inv_[k]] != g) continue;
    if (t_.action[k][B] != A) continue;
    // A = C ^ gC ^ A holds exactly when A is below both C and gC.
    const int gC = t_.action[g][C];
    if (t_.poset.leq[A][C] && t_.poset.leq[A][gC]) return w;
  }
  return std::nullopt;
}

bool PSemigroup::p_conjugate(int u, int v) const {
  // When P is not a monoid, equal elements may be conjugate only via the
  // adjoined identity, which the (C,k) scan cannot see.
  return u == v || conjugating_witness(u, v).has_value();
}

CayleyTable PSemigroup::export_table() const {
  CayleyTable out;
  for (int i = 0; i < size(); ++i) out.elements.push_back(name(i));
  out.table = mul_;
  return out;
}

}  // namespace invconj
