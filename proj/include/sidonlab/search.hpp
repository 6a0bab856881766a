#pragma once
// Depth-first extremal witness search over integer grids.
//
// search_extremal enumerates the canonical integer sets
//   0 = a_1 < a_2 < ... < a_n <= M
// with gcd 1 that are lexicographically no larger than their own reflection
// x -> max(A) - x, prunes every prefix that already violates the requested
// property (weak Sidon / (4,5)), solves each surviving candidate for h, and
// returns the candidate minimizing h (ties broken toward the
// lexicographically smallest witness).
//
// Results are certified *upper* bounds for the extremal quantities: every
// witness is a genuine set of the requested kind, so min h over candidates
// bounds the true minimum over all real sets from above. Lower bounds come
// exclusively from the proven inequalities (h >= (n+1)/2 for weak Sidon,
// h >= 9n/17 for (4,5)); a candidate beating its floor is reported as a
// fatal inconsistency, never as a new record.
//
// Work splitting: the tree is sharded deterministically at prefix length
// min(n, 3) by the key a_2 * 1000003 + a_3 (missing coordinates count as 0)
// reduced modulo shard.count. Shards partition the candidate set, so the
// union of the shards' candidates equals the unsharded enumeration and the
// best over shards equals the unsharded best.
//
// Budget: one node is one attempted placement of a value at a position
// (whether or not the property check admits it). When a positive node budget
// is exhausted the search stops where it stands and returns the best
// candidate seen so far, flagged incomplete.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sidonlab/errors.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/predicates.hpp"
#include "sidonlab/rational.hpp"
#include "sidonlab/solver.hpp"

namespace sidonlab {

struct Shard {
  int index = 0;
  int count = 1;
};

struct SearchSpec {
  int size = 0;                          // target |A|
  Integer max_coord = 0;                 // search within {0, ..., max_coord}
  PropertyMode mode = PropertyMode::WeakSidon;
  Shard shard{};                         // deterministic work splitting
  long long node_budget = 0;             // 0 = unlimited
  int solver_cap = default_solver_cap;   // forwarded to max_sidon_subset
  std::optional<PointSet> seed;          // known witness of the same size and
                                         // mode; initializes the incumbent
  std::function<void(const PointSet&, int)> candidate_hook;  // (candidate, h)
};

struct SearchResult {
  int best_h = -1;                 // -1: no candidate seen
  std::optional<PointSet> witness; // canonical form of the best candidate
  bool complete = false;           // false iff the node budget ran out
  long long nodes = 0;             // attempted placements
  long long candidates = 0;        // canonical candidates solved for h
  int lower_bound = 0;             // proven floor for (mode, size)
};

// Proven floor for h over sets of the given size with the given property:
// weak Sidon gives h >= ceil((n+1)/2), (4,5) gives h >= ceil(9n/17).
inline int property_floor(PropertyMode mode, int size) {
  if (size <= 0) return 0;
  if (mode == PropertyMode::WeakSidon) return (size + 2) / 2;
  return (9 * size + 16) / 17;
}

namespace detail {

// Enumeration engine working in 64-bit coordinates (the canonical frame is
// integral, and max_coord is capped well below the overflow threshold for
// pairwise sums).
class SearchEngine {
 public:
  SearchEngine(const SearchSpec& spec, long long max_coord)
      : spec_(spec),
        max_(max_coord),
        gate_depth_(std::min(spec.size, 3)),
        vals_(static_cast<std::size_t>(spec.size), 0) {}

  SearchResult run() {
    result_.lower_bound = property_floor(spec_.mode, spec_.size);
    if (spec_.seed.has_value()) adopt_seed(*spec_.seed);
    dfs(0);
    result_.complete = !aborted_;
    return result_;
  }

 private:
  void adopt_seed(const PointSet& seed) {
    if (static_cast<int>(seed.size()) != spec_.size)
      throw std::invalid_argument(
          "seed has " + std::to_string(seed.size()) +
          " points but the search targets size " + std::to_string(spec_.size));
    if (!holds_property(spec_.mode, seed))
      throw std::invalid_argument("seed does not satisfy the " +
                                  std::string(mode_name(spec_.mode)) +
                                  " property");
    PointSet canon = normalize(seed).first;
    int h = max_sidon_subset(canon, spec_.solver_cap).h;
    update_best(canon, h);
  }

  void dfs(std::size_t len) {
    if (static_cast<int>(len) == spec_.size) {
      consider();
      return;
    }
    const long long lo = (len == 0) ? 0 : vals_[len - 1] + 1;
    const long long hi =
        (len == 0) ? 0  // the canonical minimum is pinned to 0
                   : max_ - (spec_.size - 1 - static_cast<long long>(len));
    for (long long v = lo; v <= hi; ++v) {
      if (spec_.node_budget > 0 && nodes() >= spec_.node_budget) {
        aborted_ = true;
        return;
      }
      ++result_.nodes;
      if (!admits(len, v)) continue;
      vals_[len] = v;
      apply(len, v);
      if (!gated(len + 1)) dfs(len + 1);
      retract(len, v);
      if (aborted_) return;
    }
  }

  long long nodes() const { return result_.nodes; }

  // True if the subtree below a prefix of the given length belongs to a
  // different shard. Only the gate depth is tested; deeper prefixes inherit
  // their fate from it.
  bool gated(std::size_t len) const {
    if (spec_.shard.count <= 1) return false;
    if (static_cast<int>(len) != gate_depth_) return false;
    const std::uint64_t a2 = len >= 2 ? static_cast<std::uint64_t>(vals_[1]) : 0;
    const std::uint64_t a3 = len >= 3 ? static_cast<std::uint64_t>(vals_[2]) : 0;
    const std::uint64_t key = a2 * 1000003ULL + a3;
    return key % static_cast<std::uint64_t>(spec_.shard.count) !=
           static_cast<std::uint64_t>(spec_.shard.index);
  }

  // Would appending v to the current prefix of the given length keep the
  // property intact? Stateless for (4,5); membership-only for weak Sidon.
  bool admits(std::size_t len, long long v) const {
    if (spec_.mode == PropertyMode::WeakSidon) {
      for (std::size_t i = 0; i < len; ++i)
        if (sums_.count(vals_[i] + v)) return false;
      return true;
    }
    // (4,5): every 4-subset ending at v needs >= 5 distinct differences.
    for (std::size_t a = 0; a + 2 < len; ++a)
      for (std::size_t b = a + 1; b + 1 < len; ++b)
        for (std::size_t c = b + 1; c < len; ++c) {
          long long d[6] = {vals_[b] - vals_[a], vals_[c] - vals_[a],
                            vals_[c] - vals_[b], v - vals_[a],
                            v - vals_[b],        v - vals_[c]};
          std::sort(d, d + 6);
          int distinct = 1;
          for (int t = 1; t < 6; ++t)
            if (d[t] != d[t - 1]) ++distinct;
          if (distinct < 5) return false;
        }
    return true;
  }

  void apply(std::size_t len, long long v) {
    if (spec_.mode != PropertyMode::WeakSidon) return;
    for (std::size_t i = 0; i < len; ++i) sums_.insert(vals_[i] + v);
  }

  void retract(std::size_t len, long long v) {
    if (spec_.mode != PropertyMode::WeakSidon) return;
    for (std::size_t i = 0; i < len; ++i) sums_.erase(vals_[i] + v);
  }

  // A full-length prefix: admit it iff it is canonical (gcd 1 and no larger
  // than its own reflection), then solve for h and fold into the incumbent.
  void consider() {
    const std::size_t n = vals_.size();
    if (n > 1) {
      long long g = 0;
      for (long long v : vals_) g = std::gcd(g, v);
      if (g != 1) return;
    }
    const long long top = vals_.back();
    for (std::size_t t = 0; t < n; ++t) {
      const long long r = top - vals_[n - 1 - t];
      if (vals_[t] != r) {
        if (vals_[t] > r) return;  // reflection is lexicographically smaller
        break;
      }
    }
    ++result_.candidates;
    std::vector<Rational> points;
    points.reserve(n);
    for (long long v : vals_) points.emplace_back(static_cast<long>(v));
    PointSet candidate = PointSet::from_sorted(std::move(points));
    const int h = max_sidon_subset(candidate, spec_.solver_cap).h;
    if (spec_.candidate_hook) spec_.candidate_hook(candidate, h);
    update_best(candidate, h);
  }

  void update_best(const PointSet& candidate, int h) {
    if (h < result_.lower_bound)
      throw FatalInconsistency(
          "witness " + candidate.to_text() + " has h = " + std::to_string(h) +
          " below the proven lower bound " +
          std::to_string(result_.lower_bound) + " for " +
          std::string(mode_name(spec_.mode)) + " sets of size " +
          std::to_string(spec_.size));
    if (result_.best_h < 0 || h < result_.best_h ||
        (h == result_.best_h && result_.witness.has_value() &&
         candidate < *result_.witness)) {
      result_.best_h = h;
      result_.witness = candidate;
    }
  }

  const SearchSpec& spec_;
  long long max_;
  int gate_depth_;
  std::vector<long long> vals_;
  std::unordered_set<long long> sums_;  // pairwise sums of the prefix (weak)
  SearchResult result_;
  bool aborted_ = false;
};

}  // namespace detail

inline SearchResult search_extremal(const SearchSpec& spec) {
  if (spec.size < 1)
    throw std::invalid_argument("search size must be positive");
  if (spec.solver_cap < 1)
    throw std::invalid_argument("solver cap must be positive");
  if (spec.size > spec.solver_cap)
    throw std::length_error("search size " + std::to_string(spec.size) +
                            " is above the solver cap " +
                            std::to_string(spec.solver_cap));
  if (spec.shard.count < 1 || spec.shard.index < 0 ||
      spec.shard.index >= spec.shard.count)
    throw std::invalid_argument("shard index must satisfy 0 <= index < count");
  if (spec.node_budget < 0)
    throw std::invalid_argument("node budget must be nonnegative");
  if (spec.max_coord < spec.size - 1)
    throw std::invalid_argument(
        "coordinate bound " + to_string(spec.max_coord) + " cannot hold " +
        std::to_string(spec.size) + " distinct values from 0");
  // Pairwise sums must stay inside long long; 2^60 leaves ample headroom.
  if (!spec.max_coord.fits_slong_p() ||
      spec.max_coord > Integer(1) << 60)
    throw std::length_error("coordinate bound " + to_string(spec.max_coord) +
                            " is too large for the integer search engine");
  detail::SearchEngine engine(spec, spec.max_coord.get_si());
  return engine.run();
}

}  // namespace sidonlab
