#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "sidonlab/ap_hypergraph.hpp"
#include "sidonlab/errors.hpp"
#include "sidonlab/predicates.hpp"

namespace sidonlab {

// Exact solvers are exponential in the worst case; refuse inputs beyond this
// size unless the caller raises the cap explicitly.
inline constexpr int default_solver_cap = 64;

enum class SolveMethod { GeneralSidonDfs, ApIndependenceBnb, ExhaustiveOracle };

inline std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::GeneralSidonDfs: return "general-sidon-dfs";
    case SolveMethod::ApIndependenceBnb: return "ap-independence-bnb";
    case SolveMethod::ExhaustiveOracle: return "exhaustive-oracle";
  }
  return "unknown";
}

namespace detail {

// Exact maximum independent set in a 3-uniform hypergraph, two phases:
// phase 1 computes alpha by branch-and-bound (branch on a vertex of an
// uncovered edge with fewest undecided vertices; admissible bound from a
// greedy matching of vertex-disjoint uncovered edges, each of which forces
// at least one exclusion); phase 2 re-runs an include-first DFS in vertex
// order at the known target, whose first solution is the lexicographically
// smallest maximum independent set.
class IndependentSetSolver {
 public:
  explicit IndependentSetSolver(const TripleSystem& ts)
      : n_(ts.vertex_count()), edges_(ts.edges()), incident_(n_) {
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (int v : edges_[e]) incident_[v].push_back(e);
  }

  int alpha() {
    state_.assign(n_, kUndecided);
    best_ = 0;
    search_alpha(0, n_);
    return best_;
  }

  // Requires target to be achievable (call alpha() first).
  std::vector<int> lex_smallest(int target) {
    state_.assign(n_, kUndecided);
    in_count_.assign(edges_.size(), 0);
    chosen_.clear();
    if (!extend_lex(0, target))
      throw FatalInconsistency(
          "independent-set extraction failed to reach alpha");
    return chosen_;
  }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;

  // Greedy count of pairwise vertex-disjoint edges not yet covered by an
  // excluded vertex. Any completion must exclude one further (undecided)
  // vertex per such edge, so the count is an admissible deduction.
  int disjoint_uncovered() const {
    std::vector<char> used(n_, 0);
    int count = 0;
    for (const Edge& e : edges_) {
      bool covered = false, clash = false;
      for (int v : e) {
        covered = covered || state_[v] == kOut;
        clash = clash || used[v];
      }
      if (covered || clash) continue;
      for (int v : e) used[v] = 1;
      ++count;
    }
    return count;
  }

  void search_alpha(int in_count, int undecided) {
    int branch_edge = -1, branch_und = 4;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      int ins = 0, outs = 0;
      for (int v : edges_[e]) {
        ins += state_[v] == kIn;
        outs += state_[v] == kOut;
      }
      if (outs > 0) continue;
      if (ins == 3) return;  // an edge lies fully inside: infeasible
      int und = 3 - ins;
      if (und < branch_und) {
        branch_und = und;
        branch_edge = static_cast<int>(e);
      }
    }
    if (branch_edge < 0) {  // every edge already covered by an exclusion
      best_ = std::max(best_, in_count + undecided);
      return;
    }
    if (in_count + undecided - disjoint_uncovered() <= best_) return;
    int v = -1;
    for (int u : edges_[branch_edge])
      if (state_[u] == kUndecided) {
        v = u;
        break;
      }
    state_[v] = kIn;
    search_alpha(in_count + 1, undecided - 1);
    state_[v] = kOut;
    search_alpha(in_count, undecided - 1);
    state_[v] = kUndecided;
  }

  bool extend_lex(int v, int target) {
    int in_count = static_cast<int>(chosen_.size());
    if (in_count + (n_ - v) < target) return false;
    if (v == n_) return in_count == target;
    if (in_count + (n_ - v) - disjoint_uncovered() < target) return false;
    bool can_include = true;
    for (std::size_t e : incident_[v])
      if (in_count_[e] == 2) {  // v would complete an edge
        can_include = false;
        break;
      }
    if (can_include) {
      state_[v] = kIn;
      for (std::size_t e : incident_[v]) ++in_count_[e];
      chosen_.push_back(v);
      if (extend_lex(v + 1, target)) return true;
      chosen_.pop_back();
      for (std::size_t e : incident_[v]) --in_count_[e];
    }
    state_[v] = kOut;
    bool ok = extend_lex(v + 1, target);
    state_[v] = kUndecided;
    return ok;
  }

  int n_;
  const std::vector<Edge>& edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> state_;
  std::vector<int> in_count_;
  std::vector<int> chosen_;
  int best_ = 0;
};

// Maximum Sidon subset by include-first DFS over indices with incremental
// pairwise-sum collision checking. Because branches that include smaller
// indices are explored first and pruning is admissible, the first subset
// recorded at each new size is the lexicographically smallest of that size;
// in particular the final witness is the lex-smallest maximum one.
inline std::pair<int, std::vector<std::size_t>> general_sidon_dfs(
    const PointSet& a) {
  const int n = static_cast<int>(a.size());
  std::set<Rational> sums;
  std::vector<std::size_t> chosen, best_witness;
  int best = -1;

  auto dfs = [&](auto&& self, int i) -> void {
    if (static_cast<int>(chosen.size()) + (n - i) <= best) return;
    if (i == n) {
      best = static_cast<int>(chosen.size());
      best_witness = chosen;
      return;
    }
    // Sums gained by including a[i]: a[j] + a[i] for chosen j, plus 2 a[i].
    // They are pairwise distinct already, so only clashes with `sums` matter.
    std::vector<Rational> gained;
    gained.reserve(chosen.size() + 1);
    bool ok = true;
    for (std::size_t j : chosen) {
      gained.push_back(a[j] + a[i]);
      if (sums.count(gained.back())) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gained.push_back(a[i] + a[i]);
      ok = !sums.count(gained.back());
    }
    if (ok) {
      for (const Rational& s : gained) sums.insert(s);
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      for (const Rational& s : gained) sums.erase(s);
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return {best, best_witness};
}

}  // namespace detail

struct AlphaTau {
  int alpha = 0;
  int tau = 0;
  std::vector<int> max_independent_set;  // lexicographically smallest
};

// Exact independence and transversal numbers. tau = n - alpha because
// transversals are exactly complements of independent sets.
inline AlphaTau alpha_and_tau(const TripleSystem& h,
                              int cap = default_solver_cap) {
  if (h.vertex_count() > cap)
    throw std::length_error("hypergraph has " +
                            std::to_string(h.vertex_count()) +
                            " vertices, above the solver cap " +
                            std::to_string(cap));
  detail::IndependentSetSolver solver(h);
  AlphaTau result;
  result.alpha = solver.alpha();
  result.tau = h.vertex_count() - result.alpha;
  result.max_independent_set = solver.lex_smallest(result.alpha);
  return result;
}

struct SolveResult {
  int h = 0;           // maximum Sidon subset size
  PointSet witness;    // lexicographically smallest maximum Sidon subset
  int alpha = 0;       // independence number of H(A)
  int tau = 0;         // transversal number of H(A)
  SolveMethod method = SolveMethod::GeneralSidonDfs;
};

enum class SolverPath { Auto, GeneralDfs, ApBnb };

// h(A) with witness. Auto dispatch: weak Sidon inputs go through maximum
// independent set on H(A) (valid because Sidon subsets of a weak Sidon set
// are exactly the progression-free index sets); everything else through the
// general DFS. Both paths produce the lex-smallest maximum witness.
inline SolveResult max_sidon_subset(const PointSet& a,
                                    int cap = default_solver_cap,
                                    SolverPath path = SolverPath::Auto) {
  if (static_cast<int>(a.size()) > cap)
    throw std::length_error("point set has " + std::to_string(a.size()) +
                            " points, above the solver cap " +
                            std::to_string(cap));
  const bool weak = is_weak_sidon(a).first;
  if (path == SolverPath::ApBnb && !weak)
    throw std::invalid_argument(
        "ap-independence path requires a weak Sidon input");
  TripleSystem h = build_ap_hypergraph(a);
  AlphaTau at = alpha_and_tau(h, cap);
  SolveResult res;
  res.alpha = at.alpha;
  res.tau = at.tau;
  if (weak && path != SolverPath::GeneralDfs) {
    std::vector<std::size_t> idx(at.max_independent_set.begin(),
                                 at.max_independent_set.end());
    res.h = at.alpha;
    res.witness = a.subset(idx);
    res.method = SolveMethod::ApIndependenceBnb;
  } else {
    auto [best, wit] = detail::general_sidon_dfs(a);
    res.h = best;
    res.witness = a.subset(wit);
    res.method = SolveMethod::GeneralSidonDfs;
  }
  return res;
}

// Independent ground truth: enumerates all subsets with an inline Sidon
// check, sharing no code with the solvers above. Only for |A| <= 20.
inline int exhaustive_h_oracle(const PointSet& a) {
  const int n = static_cast<int>(a.size());
  if (n > 20)
    throw std::length_error(
        "exhaustive oracle accepts at most 20 points, got " +
        std::to_string(n));

  // Fast path: all values integers comfortably inside 64 bits.
  bool small_ints = a.all_integers();
  std::array<long long, 20> v{};
  if (small_ints)
    for (int i = 0; i < n; ++i) {
      const Integer& z = a[i].get_num();
      if (!z.fits_slong_p() || std::abs(z.get_si()) > (1ll << 60)) {
        small_ints = false;
        break;
      }
      v[i] = z.get_si();
    }

  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits <= best) continue;
    bool sidon = true;
    if (small_ints) {
      std::array<long long, 210> sums{};  // 20*21/2 pairs at most
      int count = 0;
      for (int i = 0; i < n && sidon; ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i; j < n; ++j)
          if (mask >> j & 1) sums[count++] = v[i] + v[j];
      }
      std::sort(sums.begin(), sums.begin() + count);
      for (int t = 1; t < count; ++t)
        if (sums[t] == sums[t - 1]) {
          sidon = false;
          break;
        }
    } else {
      std::set<Rational> sums;
      for (int i = 0; i < n && sidon; ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i; j < n && sidon; ++j)
          if (mask >> j & 1) sidon = sums.insert(a[i] + a[j]).second;
      }
    }
    if (sidon) best = bits;
  }
  return best;
}

struct BoundCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;  // lhs <= rhs
  bool tight = false;  // lhs == rhs
};

namespace detail {

inline BoundCheck make_check(long long lhs, long long rhs) {
  return BoundCheck{lhs, rhs, lhs <= rhs, lhs == rhs};
}

}  // namespace detail

// Every theorem-backed inequality applicable to A, each evaluated only when
// its hypotheses hold:
//   cmt          4 tau <= n + m            (any 3-uniform hypergraph)
//   hy           17 tau <= 5 n + 3 m       (linear and F7-free)
//   edge_bound   m <= n - 2                (weak Sidon, n >= 2)
//   weak_lower   ceil((n+1)/2) <= h        (weak Sidon)
//   ff_lower     ceil(9 n / 17) <= h       ((4,5)-set)
// A present-but-violated bound falsifies a theorem: callers should treat
// !consistent() as a fatal inconsistency.
struct BoundsReport {
  int n = 0;
  int m = 0;
  int h = 0;
  int tau = 0;
  bool sidon = false;
  bool weak_sidon = false;
  bool four_five = false;
  bool linear = false;
  // Evaluated only when H is linear and small enough for the F7 matcher;
  // those are the only cases the HY bound could apply to.
  std::optional<bool> f7_free;
  BoundCheck cmt;
  std::optional<BoundCheck> hy;
  std::optional<BoundCheck> edge_bound;
  std::optional<BoundCheck> weak_lower;
  std::optional<BoundCheck> ff_lower;

  bool consistent() const {
    auto ok = [](const std::optional<BoundCheck>& c) {
      return !c.has_value() || c->holds;
    };
    return cmt.holds && ok(hy) && ok(edge_bound) && ok(weak_lower) &&
           ok(ff_lower);
  }
};

inline BoundsReport bounds_report(const PointSet& a,
                                  int cap = default_solver_cap) {
  if (a.empty())
    throw std::invalid_argument("bounds_report requires a nonempty point set");
  Classification cls = classify(a);
  TripleSystem hg = build_ap_hypergraph(a);
  SolveResult sr = max_sidon_subset(a, cap);

  BoundsReport rep;
  rep.n = static_cast<int>(a.size());
  rep.m = hg.edge_count();
  rep.h = sr.h;
  rep.tau = sr.tau;
  rep.sidon = cls.sidon;
  rep.weak_sidon = cls.weak_sidon;
  rep.four_five = cls.four_five;
  rep.linear = is_linear(hg).first;
  if (rep.linear && rep.m <= 64) rep.f7_free = !contains_f7(hg).first;
  rep.cmt = detail::make_check(4ll * rep.tau, rep.n + rep.m);
  if (rep.linear && rep.f7_free.value_or(false))
    rep.hy = detail::make_check(17ll * rep.tau, 5ll * rep.n + 3ll * rep.m);
  if (rep.weak_sidon && rep.n >= 2)
    rep.edge_bound = detail::make_check(rep.m, rep.n - 2);
  if (rep.weak_sidon)
    rep.weak_lower = detail::make_check((rep.n + 2) / 2, rep.h);
  if (rep.four_five)
    rep.ff_lower = detail::make_check((9ll * rep.n + 16) / 17, rep.h);
  return rep;
}

}  // namespace sidonlab
