#pragma once

#include "corelab/affine.hpp"
#include "corelab/quadform.hpp"

#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace corelab {

enum class Lattice { coweight, coroot };

std::string to_string(Lattice l);
Lattice parse_lattice(const std::string& s);

struct LatticePointSet {
  const RootSystem* rs = nullptr;
  std::int64_t b = 0;
  Lattice lattice = Lattice::coweight;
  std::vector<VectorZ> coweights;      // pairings with the simple roots
  std::vector<CorootVector> points;
  std::size_t count() const { return points.size(); }
};

// Solutions of sum_{i>=0} c_i x_i = b with c_0 = 1, visited as (x_1..x_n).
// Shard s fixes the slack x_0 = s.
class AlcoveEnumerator {
 public:
  AlcoveEnumerator(const RootSystem& rs, std::int64_t b, Lattice lattice);

  std::int64_t num_shards() const { return b_ + 1; }
  std::int64_t b() const { return b_; }
  int rank() const { return n_; }

  template <typename Visit>
  void run_shard(std::int64_t x0, Visit&& visit) const {
    if (x0 < 0 || x0 > b_) return;
    std::vector<std::int64_t> x(n_, 0), res((n_ + 1) * n_, 0);
    recurse(0, b_ - x0, x.data(), res.data(), visit);
  }

  template <typename Visit>
  void run(Visit&& visit) const {
    for (std::int64_t s = 0; s <= b_; ++s) run_shard(s, visit);
  }

 private:
  template <typename Visit>
  void recurse(int i, std::int64_t rem, std::int64_t* x, std::int64_t* res, Visit& visit) const {
    const std::int64_t* cur = res + i * n_;
    std::int64_t* nxt = res + (i + 1) * n_;
    const std::int64_t c = marks_[i];
    if (i == n_ - 1) {
      if (rem % c != 0) return;
      const std::int64_t v = rem / c;
      x[i] = v;
      if (coroot_) {
        for (int r = 0; r < n_; ++r)
          if ((cur[r] + v * k_[r * n_ + i]) % f_ != 0) return;
      }
      visit(static_cast<const std::int64_t*>(x));
      return;
    }
    for (std::int64_t v = 0; v * c <= rem; ++v) {
      x[i] = v;
      if (coroot_)
        for (int r = 0; r < n_; ++r) nxt[r] = (cur[r] + v * k_[r * n_ + i]) % f_;
      recurse(i + 1, rem - v * c, x, res, visit);
    }
  }

  int n_;
  std::int64_t b_;
  bool coroot_;
  std::int64_t f_;
  std::vector<std::int64_t> marks_;
  std::vector<std::int64_t> k_;  // f A^{-T} mod f, row-major
};

// Parallel fold over shards; acc = make() per worker, visit(acc, x), merge(into, from).
template <typename Make, typename Visit, typename Merge>
auto fold_points(const AlcoveEnumerator& en, int jobs, Make make, Visit visit, Merge merge) {
  using Acc = decltype(make());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(en.num_shards())));
  std::vector<Acc> accs;
  for (int j = 0; j < jobs; ++j) accs.push_back(make());
  std::atomic<std::int64_t> next{0};
  auto worker = [&](int j) {
    Acc& acc = accs[j];
    auto v = [&](const std::int64_t* x) { visit(acc, x); };
    for (std::int64_t s; (s = next.fetch_add(1)) < en.num_shards();) en.run_shard(s, v);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& t : threads) t.join();
  }
  for (int j = 1; j < jobs; ++j) merge(accs[0], accs[j]);
  return std::move(accs[0]);
}

// coefficient of q^b in prod_{i=0}^n 1/(1 - q^{c_i})
BigInt coweight_count(const RootSystem& rs, std::int64_t b);

LatticePointSet coweight_points_in_bA(const RootSystem& rs, std::int64_t b, int jobs = 1);
LatticePointSet coroot_points_in_bA(const RootSystem& rs, std::int64_t b, int jobs = 1);
LatticePointSet core_points_in_sommers(const RootSystem& rs, std::int64_t b, int jobs = 1);

struct SizedPoint {
  CorootVector point;
  Rational size;
};

std::vector<SizedPoint> coroot_points_in_size_ellipsoid(const RootSystem& rs, std::int64_t N);
// histogram[k] = number of coroot points of size k, k <= N
std::vector<BigInt> size_histogram(const RootSystem& rs, std::int64_t N);

}  // namespace corelab
