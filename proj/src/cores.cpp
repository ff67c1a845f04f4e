#include "corelab/cores.hpp"

#include "corelab/lattice.hpp"
#include "corelab/stats.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace corelab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts.empty())
    for (int j = 1; j <= parts[0]; ++j) {
      int len = 0;
      while (len < length() && parts[len] >= j) ++len;
      c.push_back(len);
    }
  return Partition(c);
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
  os << ")";
  return os.str();
}

CorePartition::CorePartition(Partition p, int modulus) : partition(std::move(p)), a(modulus) {
  if (!is_a_core(partition, a)) throw std::invalid_argument(to_string(partition) + " is not an a-core");
}

std::vector<int> hook_lengths(const Partition& p) {
  Partition c = p.conjugate();
  std::vector<int> out;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.parts[i]; ++j) out.push_back((p.parts[i] - j - 1) + (c.parts[j] - i - 1) + 1);
  return out;
}

bool is_a_core(const Partition& p, int a) {
  if (a < 2) throw std::invalid_argument("core modulus must be at least 2");
  for (int h : hook_lengths(p))
    if (h % a == 0) return false;
  return true;
}

namespace {

int residue(int content, int a) { return ((content % a) + a) % a; }

}  // namespace

CorePartition simple_action_on_core(int a, int i, const CorePartition& c) {
  if (c.a != a) throw std::invalid_argument("core modulus mismatch");
  if (i < 0 || i >= a) throw std::out_of_range("residue out of range");
  const auto& parts = c.partition.parts;
  const int len = c.partition.length();
  std::vector<int> add_rows, remove_rows;
  for (int r = 0; r <= len; ++r) {
    int cur = r < len ? parts[r] : 0;
    bool addable = r == 0 || parts[r - 1] > cur;
    if (addable && residue(cur - r, a) == i) add_rows.push_back(r);
    if (r < len) {
      bool removable = r == len - 1 || parts[r + 1] < parts[r];
      if (removable && residue(parts[r] - 1 - r, a) == i) remove_rows.push_back(r);
    }
  }
  if (!add_rows.empty() && !remove_rows.empty())
    throw ConsistencyError("addable and removable boxes of one residue on an a-core");
  std::vector<int> next = parts;
  for (int r : add_rows) {
    if (r == static_cast<int>(next.size())) next.push_back(0);
    next[r] += 1;
  }
  for (int r : remove_rows) next[r] -= 1;
  while (!next.empty() && next.back() == 0) next.pop_back();
  return CorePartition(Partition(next), a);
}

CorePartition apply_word_to_core(int a, const Word& w, const CorePartition& c) {
  CorePartition out = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = simple_action_on_core(a, *it, out);
  return out;
}

CorePartition core_from_coroot(const RootSystem& rs, const CorootVector& lambda) {
  if (rs.rstype.family != Family::A) throw std::invalid_argument("cores need type A");
  if (lambda.size() != rs.rank) throw std::invalid_argument("dimension mismatch");
  if (!is_integral(lambda)) throw std::invalid_argument("not a coroot point");
  const int a = rs.rank + 1;
  AlcoveWalk walk = minimal_coset_representative(rs, lambda);
  CorePartition core = apply_word_to_core(a, walk.word, CorePartition(Partition(), a));
  if (Rational(core.size()) != size_point(rs, lambda)) throw ConsistencyError("core size differs from size(lambda)");
  return core;
}

CorePartition core_from_coroot(int a, const CorootVector& lambda) {
  return core_from_coroot(build_root_system(Family::A, a - 1), lambda);
}

std::vector<CorePartition> enumerate_simultaneous_cores(int a, int b) {
  if (a < 2 || b < 1) throw std::invalid_argument("need a >= 2 and b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
  RootSystem rs = build_root_system(Family::A, a - 1);
  AffineElement wb_inv = compute_w_b(rs, b).inverse();
  std::vector<CorePartition> out;
  for (const auto& y : coroot_points_in_bA(rs, b).points) {
    CorePartition c = core_from_coroot(rs, wb_inv(y));
    if (b >= 2 && !is_a_core(c.partition, b)) throw ConsistencyError(to_string(c.partition) + " is not a b-core");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const CorePartition& x, const CorePartition& y) { return x.partition < y.partition; });
  return out;
}

void for_each_partition(int k, const std::function<void(const Partition&)>& fn) {
  if (k < 0) return;
  std::vector<int> parts;
  // largest-part-first recursion
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = parts;
      fn(p);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(k, k);
}

std::vector<BigInt> core_counting_coefficients(int a, int N) {
  if (a < 2 || N < 0) throw std::invalid_argument("need a >= 2 and N >= 0");
  std::vector<BigInt> out(N + 1, BigInt(0));
  for (int k = 0; k <= N; ++k) {
    std::int64_t count = 0;
    for_each_partition(k, [&](const Partition& p) { count += is_a_core(p, a); });
    out[k] = count;
  }
  return out;
}

}  // namespace corelab
