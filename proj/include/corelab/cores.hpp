#pragma once

#include "corelab/affine.hpp"

#include <functional>
#include <string>
#include <vector>

namespace corelab {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

std::string to_string(const Partition& p);

struct CorePartition {
  Partition partition;
  int a = 2;

  CorePartition(Partition p, int modulus);  // validates the hook condition
  int size() const { return partition.size(); }
  bool operator==(const CorePartition& o) const { return a == o.a && partition == o.partition; }
};

// row-major over cells (i, j), 1-indexed; content j - i
std::vector<int> hook_lengths(const Partition& p);
bool is_a_core(const Partition& p, int a);

CorePartition simple_action_on_core(int a, int i, const CorePartition& c);
// letters applied right to left
CorePartition apply_word_to_core(int a, const Word& w, const CorePartition& c);

CorePartition core_from_coroot(const RootSystem& rs, const CorootVector& lambda);
CorePartition core_from_coroot(int a, const CorootVector& lambda);

std::vector<CorePartition> enumerate_simultaneous_cores(int a, int b);

void for_each_partition(int k, const std::function<void(const Partition&)>& fn);
std::vector<BigInt> core_counting_coefficients(int a, int N);

}  // namespace corelab
