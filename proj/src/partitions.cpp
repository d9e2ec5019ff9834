#include "invconj/partitions.hpp"

#include <sstream>

namespace invconj {

int PartitionSignature::total() const {
  int n = 0;
  for (const auto& [mult, part] : pairs) n += mult * part;
  return n;
}

std::string to_string(const PartitionSignature& s) {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < s.pairs.size(); ++i)
    out << (i ? "," : "") << "(" << s.pairs[i].first << ","
        << s.pairs[i].second << ")";
  out << ">";
  return out.str();
}

bigint partition_count(int n) {
  if (n < 0) throw Error("BadInput", "partition_count needs n >= 0");
  std::vector<bigint> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) dp[k] += dp[k - part];
  return dp[n];
}

std::vector<PartitionSignature> enumerate_signatures(int n) {
  if (n < 0) throw Error("BadInput", "enumerate_signatures needs n >= 0");
  std::vector<PartitionSignature> out;
  PartitionSignature cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      for (int mult = 1; mult * part <= remaining; ++mult) {
        cur.pairs.emplace_back(mult, part);
        self(self, remaining - mult * part, part + 1);
        cur.pairs.pop_back();
      }
    }
  };
  rec(rec, n, 1);
  return out;
}

bigint class_count(int n) {
  if (n < 0) throw Error("BadInput", "class_count needs n >= 0");
  std::vector<bigint> p(n + 1);
  for (int r = 0; r <= n; ++r) p[r] = partition_count(r);
  bigint total = 0;
  for (int r = 0; r <= n; ++r) total += p[r] * p[n - r];
  return total;
}

std::vector<Chart> enumerate_class_representatives(int n) {
  if (n < 1) throw Error("BadInput", "representatives need n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  const GroundSet ground = make_ground(std::move(names));

  std::vector<Chart> reps;
  for (int r = 0; r <= n; ++r) {
    for (const auto& cyc_sig : enumerate_signatures(r)) {
      for (const auto& chn_sig : enumerate_signatures(n - r)) {
        std::vector<BasicComponent> comps;
        int next = 0;  // points handed out in ascending order
        for (const auto& [mult, len] : cyc_sig.pairs) {
          for (int m = 0; m < mult; ++m) {
            BasicComponent c;
            c.kind = ComponentKind::Cycle;
            for (int i = 0; i < len; ++i) c.points.push_back(next++);
            comps.push_back(std::move(c));
          }
        }
        // A chain-side part of size l >= 2 is a chain spanning l points;
        // parts of size 1 are points left off the span.
        for (const auto& [mult, len] : chn_sig.pairs) {
          if (len < 2) continue;
          for (int m = 0; m < mult; ++m) {
            BasicComponent c;
            c.kind = ComponentKind::Chain;
            for (int i = 0; i < len; ++i) c.points.push_back(next++);
            comps.push_back(std::move(c));
          }
        }
        reps.push_back(join_components(ground, comps));
      }
    }
  }
  return reps;
}

}  // namespace invconj
