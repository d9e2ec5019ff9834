#include "invconj/chart.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace invconj {

bool point_less(const std::string& a, const std::string& b) {
  auto numeric = [](const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (numeric(a) && numeric(b)) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

GroundSet make_ground(std::vector<std::string> points) {
  if (points.empty()) throw Error("BadGround", "ground set may not be empty");
  std::sort(points.begin(), points.end(), point_less);
  for (size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] == points[i + 1])
      throw Error("BadGround", "duplicate ground point '" + points[i] + "'");
  return points;
}

GroundSet parse_ground(const std::string& text) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    int a = 0, b = 0;
    try {
      a = std::stoi(lo);
      b = std::stoi(hi);
    } catch (const std::exception&) {
      throw Error("BadGround", "range endpoints must be integers: '" + text + "'");
    }
    if (a > b) throw Error("BadGround", "empty range '" + text + "'");
    std::vector<std::string> points;
    for (int i = a; i <= b; ++i) points.push_back(std::to_string(i));
    return make_ground(std::move(points));
  }
  std::vector<std::string> points;
  std::string tok;
  for (char c : text + " ") {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!tok.empty()) points.push_back(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  return make_ground(std::move(points));
}

Chart::Chart(GroundSet ground)
    : ground_(std::move(ground)), img_(ground_.size(), -1) {}

Chart::Chart(GroundSet ground, std::vector<int> img)
    : ground_(std::move(ground)), img_(std::move(img)) {
  if (img_.size() != ground_.size())
    throw Error("BadChart", "image vector does not match the ground set");
  std::vector<bool> hit(ground_.size(), false);
  for (int v : img_) {
    if (v < -1 || v >= static_cast<int>(ground_.size()))
      throw Error("BadChart", "image index out of range");
    if (v >= 0) {
      if (hit[v]) throw Error("NotInjective", "two points share an image");
      hit[v] = true;
    }
  }
}

int Chart::rank() const {
  return static_cast<int>(std::count_if(img_.begin(), img_.end(),
                                        [](int v) { return v >= 0; }));
}

std::vector<int> Chart::domain() const {
  std::vector<int> out;
  for (int i = 0; i < points(); ++i)
    if (img_[i] >= 0) out.push_back(i);
  return out;
}

std::vector<int> Chart::image() const {
  std::vector<int> out;
  for (int i = 0; i < points(); ++i)
    if (img_[i] >= 0) out.push_back(img_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Chart::span() const {
  std::vector<bool> in(points(), false);
  for (int i = 0; i < points(); ++i) {
    if (img_[i] >= 0) {
      in[i] = true;
      in[img_[i]] = true;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < points(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

Chart parse_chart(const std::string& text, const GroundSet& ground) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
      trimmed += c;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.empty() || trimmed == "0") return Chart(ground);

  auto point_index = [&](const std::string& name) {
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
      if (ground[i] == name) return i;
    throw Error("BadSyntax", "point '" + name + "' is not in the ground set");
  };

  std::vector<int> img(ground.size(), -1);
  std::vector<bool> used(ground.size(), false);
  size_t pos = 0;
  while (pos < trimmed.size()) {
    const char open = trimmed[pos];
    if (std::isspace(static_cast<unsigned char>(open))) {
      ++pos;
      continue;
    }
    if (open != '(' && open != '[')
      throw Error("BadSyntax", "expected '(' or '[' at position " +
                                   std::to_string(pos));
    const char close = open == '(' ? ')' : ']';
    const size_t end = trimmed.find(close, pos + 1);
    if (end == std::string::npos)
      throw Error("BadSyntax", std::string("unterminated '") + open + "' group");
    std::istringstream body(trimmed.substr(pos + 1, end - pos - 1));
    std::vector<int> pts;
    std::string tok;
    while (body >> tok) {
      const int p = point_index(tok);
      if (used[p]) throw Error("DuplicatePoint", "point '" + tok + "' repeated");
      used[p] = true;
      pts.push_back(p);
    }
    if (pts.empty()) throw Error("BadSyntax", "empty group");
    if (open == '[') {
      if (pts.size() < 2)
        throw Error("ChainTooShort", "a chain needs at least 2 points");
      for (size_t i = 0; i + 1 < pts.size(); ++i) img[pts[i]] = pts[i + 1];
    } else {
      for (size_t i = 0; i < pts.size(); ++i)
        img[pts[i]] = pts[(i + 1) % pts.size()];
    }
    pos = end + 1;
  }
  return Chart(ground, std::move(img));
}

Chart identity_chart(const GroundSet& g) {
  std::vector<int> img(g.size());
  std::iota(img.begin(), img.end(), 0);
  return Chart(g, std::move(img));
}

Chart compose(const Chart& a, const Chart& b) {
  if (a.ground() != b.ground())
    throw Error("GroundMismatch", "charts live on different ground sets");
  std::vector<int> img(a.points(), -1);
  for (int i = 0; i < a.points(); ++i) {
    const int mid = a.apply(i);
    if (mid >= 0) img[i] = b.apply(mid);
  }
  return Chart(a.ground(), std::move(img));
}

Chart inverse(const Chart& a) {
  std::vector<int> img(a.points(), -1);
  for (int i = 0; i < a.points(); ++i)
    if (a.apply(i) >= 0) img[a.apply(i)] = i;
  return Chart(a.ground(), std::move(img));
}

std::vector<BasicComponent> decompose(const Chart& a) {
  const int n = a.points();
  std::vector<bool> in_image(n, false);
  for (int i = 0; i < n; ++i)
    if (a.apply(i) >= 0) in_image[a.apply(i)] = true;

  std::vector<BasicComponent> comps;
  std::vector<bool> seen(n, false);

  // Chains start at domain points that are not images.
  for (int i = 0; i < n; ++i) {
    if (a.apply(i) < 0 || in_image[i]) continue;
    BasicComponent c;
    c.kind = ComponentKind::Chain;
    int x = i;
    c.points.push_back(x);
    seen[x] = true;
    while (a.apply(x) >= 0) {
      x = a.apply(x);
      c.points.push_back(x);
      seen[x] = true;
    }
    comps.push_back(std::move(c));
  }

  // What remains of the span consists of cycles.
  for (int i = 0; i < n; ++i) {
    if (seen[i] || a.apply(i) < 0) continue;
    BasicComponent c;
    c.kind = ComponentKind::Cycle;
    int x = i;
    do {
      c.points.push_back(x);
      seen[x] = true;
      x = a.apply(x);
    } while (x != i);
    // Rotate so the least point leads.
    const auto least =
        std::min_element(c.points.begin(), c.points.end()) - c.points.begin();
    std::rotate(c.points.begin(), c.points.begin() + least, c.points.end());
    comps.push_back(std::move(c));
  }

  std::sort(comps.begin(), comps.end(), [](const BasicComponent& x,
                                           const BasicComponent& y) {
    if (x.kind != y.kind) return x.kind == ComponentKind::Cycle;
    return x.points.front() < y.points.front();
  });
  return comps;
}

Chart join_components(const GroundSet& g,
                      const std::vector<BasicComponent>& comps) {
  std::vector<int> img(g.size(), -1);
  std::vector<bool> used(g.size(), false);
  for (const auto& c : comps) {
    for (int p : c.points) {
      if (p < 0 || p >= static_cast<int>(g.size()))
        throw Error("BadChart", "component point out of range");
      if (used[p])
        throw Error("BadChart", "components are not completely disjoint");
      used[p] = true;
    }
    if (c.kind == ComponentKind::Cycle) {
      if (c.points.empty()) throw Error("BadChart", "empty cycle");
      for (size_t i = 0; i < c.points.size(); ++i)
        img[c.points[i]] = c.points[(i + 1) % c.points.size()];
    } else {
      if (c.points.size() < 2) throw Error("BadChart", "chain too short");
      for (size_t i = 0; i + 1 < c.points.size(); ++i)
        img[c.points[i]] = c.points[i + 1];
    }
  }
  return Chart(g, std::move(img));
}

CycleChainType cycle_chain_type(const Chart& a) {
  CycleChainType t;
  for (const auto& c : decompose(a)) {
    if (c.kind == ComponentKind::Cycle)
      ++t.cycle_counts[static_cast<int>(c.points.size())];
    else
      ++t.chain_counts[static_cast<int>(c.points.size()) - 1];
  }
  return t;
}

std::string to_string(const Chart& c) {
  const auto comps = decompose(c);
  if (comps.empty()) return "0";
  std::ostringstream out;
  for (const auto& comp : comps) {
    out << (comp.kind == ComponentKind::Cycle ? '(' : '[');
    for (size_t i = 0; i < comp.points.size(); ++i)
      out << (i ? " " : "") << c.ground()[comp.points[i]];
    out << (comp.kind == ComponentKind::Cycle ? ')' : ']');
  }
  return out.str();
}

std::string to_string(const CycleChainType& t) {
  std::ostringstream out;
  auto emit = [&out](const std::map<int, int>& counts) {
    out << "{";
    bool first = true;
    for (const auto& [len, cnt] : counts) {
      out << (first ? "" : ", ") << len << ":" << cnt;
      first = false;
    }
    out << "}";
  };
  out << "cycles ";
  emit(t.cycle_counts);
  out << " chains ";
  emit(t.chain_counts);
  return out.str();
}

bool conjugate_charts(const Chart& a, const Chart& b) {
  if (a.ground() != b.ground())
    throw Error("GroundMismatch", "charts live on different ground sets");
  return cycle_chain_type(a) == cycle_chain_type(b);
}

std::optional<Chart> build_conjugator(const Chart& a, const Chart& b) {
  if (!conjugate_charts(a, b)) return std::nullopt;

  // decompose() sorts by kind, then least point: pairing the lists
  // positionally matches components of equal kind and, within a kind and
  // length, in canonical order.
  auto group_key = [](const BasicComponent& c) {
    return std::pair<int, int>(c.kind == ComponentKind::Cycle ? 0 : 1,
                               static_cast<int>(c.points.size()));
  };
  auto ca = decompose(a);
  auto cb = decompose(b);
  std::stable_sort(ca.begin(), ca.end(), [&](const auto& x, const auto& y) {
    return group_key(x) < group_key(y);
  });
  std::stable_sort(cb.begin(), cb.end(), [&](const auto& x, const auto& y) {
    return group_key(x) < group_key(y);
  });

  std::vector<int> img(a.points(), -1);
  for (size_t k = 0; k < ca.size(); ++k) {
    for (size_t i = 0; i < ca[k].points.size(); ++i)
      img[ca[k].points[i]] = cb[k].points[i];
  }
  Chart tau(a.ground(), std::move(img));
  if (compose(compose(inverse(tau), a), tau) == b &&
      compose(compose(tau, b), inverse(tau)) == a)
    return tau;
  return std::nullopt;
}

std::optional<Chart> build_permutation_conjugator(const Chart& a,
                                                  const Chart& b) {
  auto tau = build_conjugator(a, b);
  if (!tau) return std::nullopt;
  std::vector<int> img(a.points(), -1);
  for (int i = 0; i < a.points(); ++i) img[i] = tau->apply(i);
  std::vector<bool> covered(a.points(), false);
  for (int v : img)
    if (v >= 0) covered[v] = true;
  std::vector<int> free_targets;
  for (int i = 0; i < a.points(); ++i)
    if (!covered[i]) free_targets.push_back(i);
  size_t next = 0;
  for (int i = 0; i < a.points(); ++i)
    if (img[i] < 0) img[i] = free_targets[next++];
  Chart sigma(a.ground(), std::move(img));
  if (compose(compose(inverse(sigma), a), sigma) == b) return sigma;
  return std::nullopt;
}

bool conjugate_in_ideal(const Chart& a, const Chart& b, int r) {
  if (a.ground() != b.ground())
    throw Error("GroundMismatch", "charts live on different ground sets");
  if (r < 1) throw Error("NotInIdeal", "ideal rank bound must be positive");
  if (a.rank() >= r || b.rank() >= r)
    throw Error("NotInIdeal", "chart of rank >= " + std::to_string(r));
  return conjugate_charts(a, b) &&
         static_cast<int>(a.span().size()) < r;
}

int max_brute_force_ground() { return 6; }

std::vector<Chart> all_charts(const GroundSet& g) {
  if (static_cast<int>(g.size()) > max_brute_force_ground())
    throw Error("GroundTooLarge",
                "chart enumeration is capped at " +
                    std::to_string(max_brute_force_ground()) + " points");
  const int n = static_cast<int>(g.size());
  std::vector<Chart> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(g, img);
      return;
    }
    img[i] = -1;
    self(self, i + 1);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      img[i] = v;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
      img[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Chart> brute_force_conjugators(const Chart& a, const Chart& b) {
  if (a.ground() != b.ground())
    throw Error("GroundMismatch", "charts live on different ground sets");
  std::vector<Chart> out;
  for (const Chart& tau : all_charts(a.ground())) {
    if (compose(compose(inverse(tau), a), tau) == b &&
        compose(compose(tau, b), inverse(tau)) == a)
      out.push_back(tau);
  }
  return out;
}

}  // namespace invconj
