#ifndef INVCONJ_PARTITIONS_HPP_
#define INVCONJ_PARTITIONS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "invconj/chart.hpp"

namespace invconj {

using bigint = boost::multiprecision::cpp_int;

// A partition of n written as (multiplicity, part) pairs with the parts
// strictly increasing; the empty signature stands for n = 0.
struct PartitionSignature {
  std::vector<std::pair<int, int>> pairs;

  int total() const;
  bool operator==(const PartitionSignature&) const = default;
};

std::string to_string(const PartitionSignature& s);

bigint partition_count(int n);  // p(n), p(0) = 1

// All signatures of n in lexicographic order of their pair lists; the count
// equals partition_count(n).
std::vector<PartitionSignature> enumerate_signatures(int n);

// sum_{r=0..n} p(r) p(n-r): the number of conjugacy classes of the partial
// injections on an n-point set.
bigint class_count(int n);

// One chart per conjugacy class on ground {1..n}, built from each pair of
// a cycle signature of r and a chain-side signature of n-r whose parts of
// size 1 are spent on off-span points. Points are assigned in ascending
// order, cycles first by increasing length, then chains.
std::vector<Chart> enumerate_class_representatives(int n);

}  // namespace invconj

#endif  // INVCONJ_PARTITIONS_HPP_
