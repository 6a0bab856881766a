#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sidonlab/ap_hypergraph.hpp"
#include "sidonlab/errors.hpp"
#include "sidonlab/predicates.hpp"

namespace sidonlab {

// The extremal weak Sidon family on 2n+1 points built from powers of 2 and 3:
//   X_i = 2^(n-i) 3^i        for 0 <= i <= n-1,
//   Y_i = 2^(n-i+1) 3^i      for 0 <= i <= n.
// Its A.P.-hypergraph has exactly 2n-1 edges and h = n + 1.
struct A2n1Family {
  int n = 0;
  PointSet set;             // the 2n+1 values, sorted
  std::vector<Integer> x;   // X_0..X_{n-1}
  std::vector<Integer> y;   // Y_0..Y_n
};

inline A2n1Family build_a2n1(int n) {
  if (n < 2)
    throw std::invalid_argument("family requires n >= 2, got " +
                                std::to_string(n));
  A2n1Family fam;
  fam.n = n;
  const unsigned un = static_cast<unsigned>(n);
  for (unsigned i = 0; i + 1 <= un; ++i)
    fam.x.push_back(pow_ui(2, un - i) * pow_ui(3, i));
  for (unsigned i = 0; i <= un; ++i)
    fam.y.push_back(pow_ui(2, un - i + 1) * pow_ui(3, i));
  std::vector<Rational> values;
  for (const Integer& v : fam.x) values.emplace_back(v);
  for (const Integer& v : fam.y) values.emplace_back(v);
  fam.set = PointSet(std::move(values));  // throws on any coincidence

  // Structural invariants of the construction.
  bool ok = fam.set.size() == static_cast<std::size_t>(2 * n + 1);
  for (unsigned i = 0; ok && i < fam.x.size(); ++i)
    ok = v3(fam.x[i]) == i && fam.y[i] == 2 * fam.x[i];
  for (unsigned i = 0; ok && i < fam.y.size(); ++i) ok = v3(fam.y[i]) == i;
  if (!ok)
    throw FatalInconsistency("power family invariants failed for n = " +
                             std::to_string(n));
  return fam;
}

// The 2n-1 progressions of the family, as increasing value triples:
//   {X_i, X_{i+1}, Y_i}  for 0 <= i <= n-2  (X_i + Y_i = 2 X_{i+1})
//   {X_i, Y_i, Y_{i+1}}  for 0 <= i <= n-1  (X_i + Y_{i+1} = 2 Y_i)
// Cross-checked against the generic hypergraph builder on every call.
inline std::vector<std::array<Integer, 3>> enumerate_a2n1_aps(
    const A2n1Family& fam) {
  std::vector<std::array<Integer, 3>> triples;
  for (int i = 0; i + 2 <= fam.n; ++i)
    triples.push_back({fam.x[i], fam.x[i + 1], fam.y[i]});
  for (int i = 0; i + 1 <= fam.n; ++i)
    triples.push_back({fam.x[i], fam.y[i], fam.y[i + 1]});
  for (auto& t : triples) std::sort(t.begin(), t.end());
  std::sort(triples.begin(), triples.end());

  std::vector<std::array<Integer, 3>> from_graph;
  TripleSystem graph = build_ap_hypergraph(fam.set);
  for (const Edge& e : graph.edges())
    from_graph.push_back({fam.set[e[0]].get_num(), fam.set[e[1]].get_num(),
                          fam.set[e[2]].get_num()});
  std::sort(from_graph.begin(), from_graph.end());
  if (triples != from_graph)
    throw FatalInconsistency(
        "enumerated progressions disagree with the hypergraph for n = " +
        std::to_string(fam.n));
  return triples;
}

namespace detail {

// All pairs a < b from the family with a + b = s, by direct enumeration.
inline std::vector<std::pair<Integer, Integer>> pairs_with_sum(
    const A2n1Family& fam, const Integer& s) {
  std::vector<std::pair<Integer, Integer>> out;
  const auto& vals = fam.set.values();
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      if (vals[i].get_num() + vals[j].get_num() == s)
        out.emplace_back(vals[i].get_num(), vals[j].get_num());
  return out;
}

}  // namespace detail

// Reconstructs the unique pair {a, b}, a < b, with a + b = s, if one exists,
// from the 3-adic valuation of s alone:
//  - equal-valuation pairs are exactly {X_i, Y_i} with sum 3 X_i, recognized
//    by s / 3 being some X_i (then v3(s) = i + 1);
//  - otherwise exactly one element has the minimal valuation i = v3(s), so
//    it is X_i or Y_i, and the partner s - a must be a family member of
//    larger valuation (it may be numerically smaller: X_{i+1} < Y_i).
// The constructive answer is cross-checked against full enumeration; any
// disagreement (or a non-unique sum, impossible for a weak Sidon set) is a
// fatal inconsistency.
inline std::optional<std::pair<Integer, Integer>> recover_pair_from_sum(
    const A2n1Family& fam, const Integer& s) {
  std::optional<std::pair<Integer, Integer>> constructive;
  if (s > 0) {
    const unsigned i = v3(s);
    // Equal-valuation candidate {X_{i-1}, Y_{i-1}}: s = 3 X_{i-1}.
    if (i >= 1 && i - 1 < fam.x.size() && s == 3 * fam.x[i - 1])
      constructive = std::make_pair(fam.x[i - 1], fam.y[i - 1]);
    // Unequal-valuation candidates: one element has valuation exactly i.
    auto try_member = [&](const Integer& a) {
      Integer b = s - a;
      if (b <= 0 || !fam.set.contains(Rational(b)) || v3(b) <= i) return;
      auto pair = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (constructive.has_value() && *constructive != pair)
        throw FatalInconsistency("two reconstructions for sum " +
                                 to_string(s));
      constructive = pair;
    };
    if (i < fam.x.size()) try_member(fam.x[i]);
    if (i < fam.y.size()) try_member(fam.y[i]);
  }

  auto enumerated = detail::pairs_with_sum(fam, s);
  if (enumerated.size() > 1)
    throw FatalInconsistency("sum " + to_string(s) +
                             " has multiple pairs in a weak Sidon set");
  std::optional<std::pair<Integer, Integer>> truth;
  if (!enumerated.empty()) truth = enumerated.front();
  if (constructive != truth)
    throw FatalInconsistency("pair reconstruction mismatch for sum " +
                             to_string(s));
  return truth;
}

// Scale-separation concatenation plan. Computed in the translated frame
// where both operands start at 0: R is the set of cross ratios
// (a - a') / (b - b'), q the least positive integer avoiding R, and
// t = D_A + max(D_A, q D_B) + 1 the separating shift. q and t are reported
// in that frame; block_map() converts to the operands' original frame.
struct ConcatPlan {
  PropertyMode mode = PropertyMode::WeakSidon;
  Rational scale;              // q
  Rational separation;        // t, in the min-0 frame
  std::vector<Rational> forbidden_ratios;  // R, sorted
  Rational shift_a;            // min(A)
  Rational shift_b;            // min(B)
  Rational diameter_a;
  Rational diameter_b;

  ConcatPlan() : scale(1), separation(0), shift_a(0), shift_b(0),
                 diameter_a(0), diameter_b(0) {}

  // Affine map sending the original B onto the concatenated block.
  AffineMap block_map() const {
    return AffineMap(scale, separation + shift_a - scale * shift_b);
  }
};

inline ConcatPlan plan_concat(const PointSet& a, const PointSet& b,
                              PropertyMode mode) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("concatenation requires nonempty operands");
  if (!holds_property(mode, a))
    throw std::invalid_argument(std::string("left operand is not a ") +
                                std::string(mode_name(mode)) + " set");
  if (!holds_property(mode, b))
    throw std::invalid_argument(std::string("right operand is not a ") +
                                std::string(mode_name(mode)) + " set");
  ConcatPlan plan;
  plan.mode = mode;
  plan.shift_a = a.min();
  plan.shift_b = b.min();
  plan.diameter_a = a.max() - a.min();
  plan.diameter_b = b.max() - b.min();

  std::set<Rational> ratios;
  for (const Rational& ai : a)
    for (const Rational& aj : a)
      for (const Rational& bi : b)
        for (const Rational& bj : b)
          if (bi != bj) ratios.insert((ai - aj) / (bi - bj));
  plan.forbidden_ratios.assign(ratios.begin(), ratios.end());

  // Least positive integer not a forbidden ratio. With |B| = 1 the ratio set
  // is empty and with |A| = 1 it is {0}, so q = 1 falls out unchanged.
  Rational q(1);
  while (ratios.count(q)) q += 1;
  plan.scale = q;
  plan.separation =
      plan.diameter_a +
      std::max(plan.diameter_a, Rational(q * plan.diameter_b)) + 1;
  return plan;
}

// A union q B' + t placed strictly to the right of A (in the plan's frame),
// realized in the operands' original frame. Postconditions: the blocks are
// disjoint and ordered, |C| = |A| + |B|, and C retains the plan's mode
// property; violations are fatal inconsistencies, not error returns.
inline PointSet concat(const PointSet& a, const PointSet& b,
                       const ConcatPlan& plan) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("concatenation requires nonempty operands");
  if (a.min() != plan.shift_a || b.min() != plan.shift_b ||
      a.max() - a.min() != plan.diameter_a ||
      b.max() - b.min() != plan.diameter_b)
    throw std::invalid_argument("plan does not match the operands");
  PointSet block = apply_affine(b, plan.block_map());
  if (!(a.max() < block.min()))
    throw FatalInconsistency("concatenated blocks are not separated");
  std::vector<Rational> values(a.values());
  values.insert(values.end(), block.values().begin(), block.values().end());
  PointSet c = PointSet::from_sorted(std::move(values));
  if (c.size() != a.size() + b.size())
    throw FatalInconsistency("concatenation lost points");
  if (!holds_property(plan.mode, c))
    throw FatalInconsistency(std::string("concatenation broke the ") +
                             std::string(mode_name(plan.mode)) + " property");
  return c;
}

// The 14-point (4,5)-set with h = 8 that pins the upper bound f(14) <= 8
// (and hence the 4/7 ratio).
inline PointSet base_block() {
  return parse_point_set(
      "0 136 200 243 246 249 272 286 298 323 400 528 596 1056");
}

}  // namespace sidonlab
