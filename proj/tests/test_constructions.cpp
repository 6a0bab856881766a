#include <doctest.h>

#include <algorithm>

#include "sidonlab/constructions.hpp"
#include "sidonlab/solver.hpp"
#include "support/corpus.hpp"

using namespace sidonlab;

namespace {

PointSet ps(const std::string& text) { return parse_point_set(text); }

std::pair<Integer, Integer> ipair(long a, long b) {
  return {Integer(a), Integer(b)};
}

}  // namespace

TEST_CASE("build_a2n1 reproduces the small family members") {
  A2n1Family f2 = build_a2n1(2);
  CHECK(f2.set.to_text() == "4 6 8 12 18");
  CHECK(f2.x == std::vector<Integer>{4, 6});
  CHECK(f2.y == std::vector<Integer>{8, 12, 18});

  A2n1Family f3 = build_a2n1(3);
  CHECK(f3.set.to_text() == "8 12 16 18 24 36 54");

  CHECK_THROWS_AS(build_a2n1(1), std::invalid_argument);
  CHECK_THROWS_AS(build_a2n1(0), std::invalid_argument);
  CHECK_THROWS_AS(build_a2n1(-3), std::invalid_argument);
}

TEST_CASE("the family is weak Sidon with exactly 2n-1 progressions and "
          "h = n + 1") {
  for (int n = 2; n <= 8; ++n) {
    A2n1Family fam = build_a2n1(n);
    CHECK(fam.set.size() == static_cast<std::size_t>(2 * n + 1));
    CHECK(is_weak_sidon(fam.set).first);
    auto triples = enumerate_a2n1_aps(fam);  // cross-checks internally
    CHECK(triples.size() == static_cast<std::size_t>(2 * n - 1));
    SolveResult r = max_sidon_subset(fam.set);
    CHECK(r.h == n + 1);
    // The Y side is progression-free, so it is always a valid witness set;
    // the solver's witness must be exactly as large.
    PointSet ys(std::vector<Rational>(fam.y.begin(), fam.y.end()));
    CHECK(is_sidon(ys).first);
    CHECK(ys.size() == static_cast<std::size_t>(r.h));
  }
}

TEST_CASE("enumerate_a2n1_aps lists the documented triples for n = 2") {
  auto triples = enumerate_a2n1_aps(build_a2n1(2));
  // {X_0, X_1, Y_0} = {4,6,8}; {X_0, Y_0, Y_1} = {4,8,12};
  // {X_1, Y_1, Y_2} = {6,12,18}.
  REQUIRE(triples.size() == 3);
  CHECK(triples[0] == std::array<Integer, 3>{4, 6, 8});
  CHECK(triples[1] == std::array<Integer, 3>{4, 8, 12});
  CHECK(triples[2] == std::array<Integer, 3>{6, 12, 18});
}

TEST_CASE("recover_pair_from_sum inverts the sum map") {
  A2n1Family f2 = build_a2n1(2);
  CHECK(recover_pair_from_sum(f2, Integer(22)) == ipair(4, 18));
  CHECK(recover_pair_from_sum(f2, Integer(12)) == ipair(4, 8));
  CHECK(recover_pair_from_sum(f2, Integer(30)) == ipair(12, 18));
  CHECK(recover_pair_from_sum(f2, Integer(12 + 6)) == ipair(6, 12));
  CHECK_FALSE(recover_pair_from_sum(f2, Integer(7)).has_value());
  CHECK_FALSE(recover_pair_from_sum(f2, Integer(8)).has_value());
  CHECK_FALSE(recover_pair_from_sum(f2, Integer(-5)).has_value());
  CHECK_FALSE(recover_pair_from_sum(f2, Integer(0)).has_value());
  // 16 = 4 + 12; the valuation-0 element (4) happens to be the smaller one.
  CHECK(recover_pair_from_sum(f2, Integer(16)) == ipair(4, 12));
}

TEST_CASE("pair recovery agrees with enumeration across whole families") {
  for (int n = 2; n <= 6; ++n) {
    A2n1Family fam = build_a2n1(n);
    const auto& vals = fam.set.values();
    // Expected: the sum of each pair maps back to exactly that pair.
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) {
        Integer s = vals[i].get_num() + vals[j].get_num();
        auto rec = recover_pair_from_sum(fam, s);
        REQUIRE(rec.has_value());
        CHECK(rec->first == vals[i].get_num());
        CHECK(rec->second == vals[j].get_num());
      }
    // A sweep including non-sums: recover_pair_from_sum's internal
    // cross-check (constructive vs enumerated) must never trip.
    Integer top = 2 * fam.set.max().get_num();
    for (Integer s(1); s <= top; s += 1) (void)recover_pair_from_sum(fam, s);
  }
}

TEST_CASE("plan_concat computes the documented plans") {
  SUBCASE("two-point blocks, weak mode") {
    ConcatPlan p = plan_concat(ps("0 1"), ps("0 1"), PropertyMode::WeakSidon);
    CHECK(p.scale == 2);
    CHECK(p.separation == 4);
    // R = {(a-a')/(b-b')} over differences {-1,0,1} = {-1, 0, 1}.
    CHECK(p.forbidden_ratios ==
          std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    PointSet c = concat(ps("0 1"), ps("0 1"), p);
    CHECK(c.to_text() == "0 1 4 6");
    CHECK(is_weak_sidon(c).first);
  }
  SUBCASE("singleton left operand gives q = 1") {
    ConcatPlan p = plan_concat(ps("0"), ps("0 1 3"), PropertyMode::WeakSidon);
    CHECK(p.scale == 1);
    CHECK(p.separation == 4);  // D_A = 0, q D_B = 3 -> t = 0 + 3 + 1
    CHECK(concat(ps("0"), ps("0 1 3"), p).to_text() == "0 4 5 7");
  }
  SUBCASE("(4,5) mode Sidon blocks") {
    ConcatPlan p = plan_concat(ps("0 1 3"), ps("0 1 3"),
                               PropertyMode::FourFive);
    CHECK(p.scale == 4);  // positive integers 1, 2, 3 all occur as ratios
    CHECK(p.separation == 16);
    PointSet c = concat(ps("0 1 3"), ps("0 1 3"), p);
    CHECK(c.to_text() == "0 1 3 16 20 28");
    CHECK(is_45_set(c).first);
    CHECK(max_sidon_subset(c).h == 6);
  }
  SUBCASE("operands away from zero and rational") {
    PointSet a = ps("5 7 11");
    PointSet b = ps("1/3 2/3 4/3");
    ConcatPlan p = plan_concat(a, b, PropertyMode::WeakSidon);
    CHECK(p.scale == 1);
    CHECK(p.separation == 13);
    PointSet c = concat(a, b, p);
    CHECK(c.to_text() == "5 7 11 18 55/3 19");
    CHECK(c.size() == 6);
    CHECK(is_weak_sidon(c).first);
    CHECK(a.max() < Rational(18));  // blocks ordered
  }
}

TEST_CASE("plan_concat validates inputs") {
  CHECK_THROWS_AS(plan_concat(PointSet(), ps("0 1"), PropertyMode::WeakSidon),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_concat(ps("0 1"), PointSet(), PropertyMode::WeakSidon),
                  std::invalid_argument);
  // {1,2,3,5} is weak Sidon but not (4,5).
  CHECK_THROWS_AS(plan_concat(ps("1 2 3 5"), ps("0 1"),
                              PropertyMode::FourFive),
                  std::invalid_argument);
  CHECK_THROWS_AS(plan_concat(ps("0 1"), ps("0 1 2 3"),
                              PropertyMode::WeakSidon),
                  std::invalid_argument);
  // A plan for other operands is rejected.
  ConcatPlan p = plan_concat(ps("0 1"), ps("0 1"), PropertyMode::WeakSidon);
  CHECK_THROWS_AS(concat(ps("0 2"), ps("0 1"), p), std::invalid_argument);
}

TEST_CASE("concatenation preserves the mode and is h-subadditive") {
  corpus::Rng rng;
  auto random_mode_set = [&](PropertyMode mode) {
    for (;;) {
      PointSet a = corpus::to_set(corpus::random_set(
          rng, 2 + static_cast<int>(rng.gen() % 4u), 0, 30));
      if (holds_property(mode, a)) return a;
    }
  };
  for (PropertyMode mode : {PropertyMode::WeakSidon, PropertyMode::FourFive}) {
    for (int trial = 0; trial < 30; ++trial) {
      PointSet a = random_mode_set(mode);
      PointSet b = random_mode_set(mode);
      ConcatPlan plan = plan_concat(a, b, mode);
      PointSet c = concat(a, b, plan);  // postconditions assert inside
      CHECK(c.size() == a.size() + b.size());
      CHECK(holds_property(mode, c));
      CHECK(max_sidon_subset(c).h <=
            max_sidon_subset(a).h + max_sidon_subset(b).h);
    }
  }
}

TEST_CASE("concatenated blocks separate sums and differences") {
  // The structural reason concat works: within-A sums, mixed sums, and
  // within-block sums occupy disjoint ranges, and no mixed difference
  // collides with a within-block difference (q avoids the ratio set R).
  PointSet a = ps("0 1 3");
  ConcatPlan plan = plan_concat(a, a, PropertyMode::FourFive);
  PointSet block = apply_affine(a, plan.block_map());
  std::set<Rational> a_diffs, block_diffs, mixed_diffs;
  for (const Rational& x : a)
    for (const Rational& y : a)
      if (x < y) a_diffs.insert(y - x);
  for (const Rational& x : block)
    for (const Rational& y : block)
      if (x < y) block_diffs.insert(y - x);
  for (const Rational& x : a)
    for (const Rational& y : block) mixed_diffs.insert(y - x);
  for (const Rational& d : mixed_diffs) {
    CHECK_FALSE(a_diffs.count(d));
    CHECK_FALSE(block_diffs.count(d));
  }
  // q kills difference collisions between the blocks themselves.
  for (const Rational& d : block_diffs) CHECK_FALSE(a_diffs.count(d));
}

TEST_CASE("base_block is the documented 14-point (4,5)-set") {
  PointSet base = base_block();
  CHECK(base.size() == 14);
  CHECK(base.min() == 0);
  CHECK(base.max() == 1056);
  CHECK(is_45_set(base).first);
  CHECK_FALSE(is_sidon(base).first);
  SolveResult r = max_sidon_subset(base);
  CHECK(r.h == 8);
  CHECK(r.witness.to_text() == "0 136 200 243 246 298 323 528");
}
