#include <doctest.h>

#include <set>

#include "sidonlab/solver.hpp"
#include "support/corpus.hpp"

using namespace sidonlab;

namespace {

PointSet ps(const std::string& text) { return parse_point_set(text); }

const char* kBaseBlock =
    "0 136 200 243 246 249 272 286 298 323 400 528 596 1056";

// Independent validity recheck for an independent set / transversal pair.
bool independent_in(const TripleSystem& h, const std::vector<int>& verts) {
  std::set<int> s(verts.begin(), verts.end());
  for (const Edge& e : h.edges())
    if (s.count(e[0]) && s.count(e[1]) && s.count(e[2])) return false;
  return true;
}

}  // namespace

TEST_CASE("alpha_and_tau on frozen instances") {
  SUBCASE("H(A_5): alpha 3, tau 2") {
    TripleSystem h = build_ap_hypergraph(ps("4 6 8 12 18"));
    AlphaTau at = alpha_and_tau(h);
    CHECK(at.alpha == 3);
    CHECK(at.tau == 2);
    CHECK(at.max_independent_set == std::vector<int>{0, 1, 3});  // {4,6,12}
    CHECK(independent_in(h, at.max_independent_set));
  }
  SUBCASE("F7: alpha 4, tau 3") {
    AlphaTau at = alpha_and_tau(f7_pattern());
    CHECK(at.alpha == 4);
    CHECK(at.tau == 3);
    CHECK(at.max_independent_set == std::vector<int>{0, 1, 3, 6});
    CHECK(independent_in(f7_pattern(), at.max_independent_set));
  }
  SUBCASE("edgeless: alpha n, tau 0") {
    AlphaTau at = alpha_and_tau(TripleSystem(5, {}));
    CHECK(at.alpha == 5);
    CHECK(at.tau == 0);
    CHECK(at.max_independent_set == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("H(A_base): alpha 8, tau 6") {
    AlphaTau at = alpha_and_tau(build_ap_hypergraph(ps(kBaseBlock)));
    CHECK(at.alpha == 8);
    CHECK(at.tau == 6);
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(alpha_and_tau(TripleSystem(65, {})), std::length_error);
    CHECK(alpha_and_tau(TripleSystem(65, {}), 65).alpha == 65);
  }
}

TEST_CASE("transversal complements hit every edge") {
  corpus::Rng rng;
  for (int trial = 0; trial < 150; ++trial) {
    PointSet a = corpus::to_set(
        corpus::random_set(rng, 3 + static_cast<int>(rng.gen() % 7u), 0, 60));
    TripleSystem h = build_ap_hypergraph(a);
    AlphaTau at = alpha_and_tau(h);
    CHECK(at.alpha + at.tau == h.vertex_count());
    std::set<int> inside(at.max_independent_set.begin(),
                         at.max_independent_set.end());
    for (const Edge& e : h.edges()) {
      bool hit = !inside.count(e[0]) || !inside.count(e[1]) ||
                 !inside.count(e[2]);
      CHECK(hit);  // the complement is a transversal of size tau
    }
  }
}

TEST_CASE("max_sidon_subset on frozen instances") {
  SUBCASE("base block: h = 8 with the canonical witness") {
    SolveResult r = max_sidon_subset(ps(kBaseBlock));
    CHECK(r.h == 8);
    CHECK(r.witness.to_text() == "0 136 200 243 246 298 323 528");
    CHECK(r.alpha == 8);
    CHECK(r.tau == 6);
    CHECK(r.method == SolveMethod::ApIndependenceBnb);
    CHECK(is_sidon(r.witness).first);
  }
  SUBCASE("weak Sidon family member") {
    SolveResult r = max_sidon_subset(ps("4 6 8 12 18"));
    CHECK(r.h == 3);
    CHECK(r.witness.to_text() == "4 6 12");
    CHECK(r.method == SolveMethod::ApIndependenceBnb);
  }
  SUBCASE("(4,5) example") {
    SolveResult r = max_sidon_subset(ps("1 2 3 6"));
    CHECK(r.h == 3);
    CHECK(r.witness.to_text() == "1 2 6");
  }
  SUBCASE("weak-only example") {
    SolveResult r = max_sidon_subset(ps("1 2 3 5"));
    CHECK(r.h == 3);
    CHECK(r.witness.to_text() == "1 2 5");
  }
  SUBCASE("non weak Sidon input takes the general path") {
    SolveResult r = max_sidon_subset(ps("0 1 2 3 4"));
    CHECK(r.h == 3);
    CHECK(r.witness.to_text() == "0 1 3");
    CHECK(r.method == SolveMethod::GeneralSidonDfs);
    // alpha/tau of H(A) are still reported, and here h < alpha: without the
    // weak Sidon hypothesis, independent sets need not be Sidon subsets
    // ({0,1,3,4} is progression-free yet 0 + 4 = 1 + 3).
    CHECK(r.alpha == 4);
    CHECK(r.tau == 1);
  }
  SUBCASE("degenerate sizes") {
    SolveResult r0 = max_sidon_subset(PointSet());
    CHECK(r0.h == 0);
    CHECK(r0.witness.empty());
    SolveResult r1 = max_sidon_subset(ps("7/3"));
    CHECK(r1.h == 1);
    CHECK(r1.witness.to_text() == "7/3");
  }
  SUBCASE("forcing paths") {
    SolveResult g = max_sidon_subset(ps(kBaseBlock), default_solver_cap,
                                     SolverPath::GeneralDfs);
    CHECK(g.h == 8);
    CHECK(g.witness.to_text() == "0 136 200 243 246 298 323 528");
    CHECK(g.method == SolveMethod::GeneralSidonDfs);
    CHECK_THROWS_AS(max_sidon_subset(ps("0 1 2 3 4"), default_solver_cap,
                                     SolverPath::ApBnb),
                    std::invalid_argument);
  }
  SUBCASE("cap is enforced and overridable") {
    std::vector<Rational> many;  // powers of two form a Sidon set
    for (unsigned i = 0; i < 65; ++i) many.emplace_back(Rational(pow_ui(2, i)));
    PointSet big(std::move(many));
    CHECK_THROWS_AS(max_sidon_subset(big), std::length_error);
    CHECK(max_sidon_subset(big, 70).h == 65);
  }
}

TEST_CASE("both solver paths agree on weak Sidon inputs") {
  corpus::Rng rng;
  int weak_seen = 0;
  for (int trial = 0; trial < 250; ++trial) {
    PointSet a = corpus::to_set(
        corpus::random_set(rng, 2 + static_cast<int>(rng.gen() % 8u), 0, 90));
    if (!is_weak_sidon(a).first) continue;
    ++weak_seen;
    SolveResult bnb = max_sidon_subset(a, default_solver_cap,
                                       SolverPath::ApBnb);
    SolveResult dfs = max_sidon_subset(a, default_solver_cap,
                                       SolverPath::GeneralDfs);
    CHECK(bnb.h == dfs.h);
    CHECK(bnb.witness == dfs.witness);
  }
  CHECK(weak_seen > 60);
}

TEST_CASE("exhaustive_h_oracle is exact and independent") {
  CHECK(exhaustive_h_oracle(ps(kBaseBlock)) == 8);
  CHECK(exhaustive_h_oracle(ps("1 2 3 5")) == 3);
  CHECK(exhaustive_h_oracle(ps("0 1 2 3 4")) == 3);
  CHECK(exhaustive_h_oracle(PointSet()) == 0);
  CHECK(exhaustive_h_oracle(ps("5")) == 1);
  // Rational fallback path.
  CHECK(exhaustive_h_oracle(ps("0 1/2 1 3/2 2")) == 3);
  // Values outside the int64 fast path.
  CHECK(exhaustive_h_oracle(ps("0 1152921504606846976 2305843009213693952")) ==
        2);
  std::vector<Rational> many;
  for (int i = 0; i < 21; ++i) many.emplace_back(i);
  CHECK_THROWS_AS(exhaustive_h_oracle(PointSet(std::move(many))),
                  std::length_error);
}

TEST_CASE("solver equals oracle across random corpora") {
  corpus::Rng rng;
  for (int trial = 0; trial < 150; ++trial) {
    PointSet a = corpus::to_set(
        corpus::random_set(rng, 1 + static_cast<int>(rng.gen() % 9u), 0, 70));
    SolveResult r = max_sidon_subset(a);
    CHECK(r.h == exhaustive_h_oracle(a));
    CHECK(is_sidon(r.witness).first);
    CHECK(static_cast<int>(r.witness.size()) == r.h);
  }
}

TEST_CASE("h is monotone and affine invariant") {
  corpus::Rng rng;
  for (int trial = 0; trial < 80; ++trial) {
    auto vals = corpus::random_set(rng, 4 + static_cast<int>(rng.gen() % 5u),
                                   0, 60);
    PointSet a = corpus::to_set(vals);
    int h_full = max_sidon_subset(a).h;
    // Dropping a point lowers h by at most one and never raises it.
    auto reduced = vals;
    reduced.erase(reduced.begin() + static_cast<long>(rng.gen() % vals.size()));
    int h_red = max_sidon_subset(corpus::to_set(reduced)).h;
    CHECK(h_red <= h_full);
    CHECK(h_red >= h_full - 1);
    // Affine invariance.
    AffineMap m(Rational(rng.next(1, 6), rng.next(1, 3)),
                Rational(rng.next(-25, 25)));
    CHECK(max_sidon_subset(apply_affine(a, m)).h == h_full);
  }
}

TEST_CASE("bounds_report on frozen instances") {
  SUBCASE("A_5: CMT tight, weak lower bound tight") {
    BoundsReport r = bounds_report(ps("4 6 8 12 18"));
    CHECK(r.n == 5);
    CHECK(r.m == 3);
    CHECK(r.h == 3);
    CHECK(r.tau == 2);
    CHECK(r.weak_sidon);
    CHECK_FALSE(r.four_five);
    // Weak Sidon alone does not force linearity: the first two progressions
    // {4,6,8} and {4,8,12} share two points.
    CHECK_FALSE(r.linear);
    CHECK_FALSE(r.f7_free.has_value());
    CHECK(r.cmt.lhs == 8);
    CHECK(r.cmt.rhs == 8);
    CHECK(r.cmt.tight);
    CHECK_FALSE(r.hy.has_value());
    REQUIRE(r.edge_bound.has_value());
    CHECK(r.edge_bound->tight);  // 3 == 5 - 2
    REQUIRE(r.weak_lower.has_value());
    CHECK(r.weak_lower->lhs == 3);
    CHECK(r.weak_lower->tight);
    CHECK_FALSE(r.ff_lower.has_value());
    CHECK(r.consistent());
  }
  SUBCASE("base block: all five bounds evaluated") {
    BoundsReport r = bounds_report(ps(kBaseBlock));
    CHECK(r.n == 14);
    CHECK(r.m == 12);
    CHECK(r.h == 8);
    CHECK(r.tau == 6);
    CHECK(r.four_five);
    CHECK(r.weak_sidon);
    CHECK_FALSE(r.sidon);
    CHECK(r.linear);
    CHECK(r.f7_free == true);
    CHECK(r.cmt.lhs == 24);
    CHECK(r.cmt.rhs == 26);
    REQUIRE(r.hy.has_value());
    CHECK(r.hy->lhs == 102);
    CHECK(r.hy->rhs == 106);
    REQUIRE(r.edge_bound.has_value());
    CHECK(r.edge_bound->tight);  // 12 == 14 - 2
    REQUIRE(r.weak_lower.has_value());
    CHECK(r.weak_lower->lhs == 8);  // ceil(15/2)
    CHECK(r.weak_lower->tight);
    REQUIRE(r.ff_lower.has_value());
    CHECK(r.ff_lower->lhs == 8);  // ceil(126/17)
    CHECK(r.ff_lower->tight);
    CHECK(r.consistent());
  }
  SUBCASE("non weak Sidon set still gets CMT") {
    BoundsReport r = bounds_report(ps("0 1 2 3 4"));
    CHECK_FALSE(r.weak_sidon);
    CHECK(r.cmt.lhs == 4);  // tau = 1: vertex 2 meets every progression
    CHECK(r.cmt.rhs == 9);
    CHECK_FALSE(r.linear);
    CHECK_FALSE(r.f7_free.has_value());
    CHECK_FALSE(r.hy.has_value());
    CHECK_FALSE(r.edge_bound.has_value());
    CHECK(r.consistent());
  }
  SUBCASE("empty input is an error") {
    CHECK_THROWS_AS(bounds_report(PointSet()), std::invalid_argument);
  }
}

TEST_CASE("bounds_report is consistent across the random corpus") {
  corpus::Rng rng;
  for (int trial = 0; trial < 120; ++trial) {
    PointSet a = corpus::to_set(
        corpus::random_set(rng, 1 + static_cast<int>(rng.gen() % 9u), 0, 80));
    CHECK(bounds_report(a).consistent());
  }
}
