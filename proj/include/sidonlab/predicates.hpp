#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "sidonlab/errors.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

// The two set properties the constructions and searches are parameterized
// over. (Sidon is checked too, but nothing is constructed "in Sidon mode".)
enum class PropertyMode { WeakSidon, FourFive };

inline std::string_view mode_name(PropertyMode m) {
  return m == PropertyMode::WeakSidon ? "weak-sidon" : "four-five";
}

// Two unordered pairs {x,y} != {u,v} (x <= y, u <= v) with x + y == u + v.
struct SidonWitness {
  Rational x, y, u, v;
};

// Two pairs x < y, u < v, {x,y} != {u,v}, with x + y == u + v.
struct WeakSidonWitness {
  Rational x, y, u, v;
};

// A 4-point subset whose six pairwise differences take < 5 distinct values.
struct FourFiveWitness {
  std::array<Rational, 4> quad;          // increasing
  std::array<Rational, 6> differences;   // |q[j]-q[i]| in pair order
  std::size_t distinct_count = 0;
};

// All witnesses below are the first counterexample in lexicographic order of
// the index tuples scanned, so repeated runs (and reruns on affine images)
// pick structurally identical witnesses.

inline std::pair<bool, std::optional<SidonWitness>> is_sidon(
    const PointSet& a) {
  std::map<Rational, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) {
      Rational s = a[i] + a[j];
      auto [it, inserted] = seen.emplace(s, std::make_pair(i, j));
      if (!inserted)
        return {false, SidonWitness{a[it->second.first], a[it->second.second],
                                    a[i], a[j]}};
    }
  return {true, std::nullopt};
}

inline std::pair<bool, std::optional<WeakSidonWitness>> is_weak_sidon(
    const PointSet& a) {
  std::map<Rational, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Rational s = a[i] + a[j];
      auto [it, inserted] = seen.emplace(s, std::make_pair(i, j));
      if (!inserted)
        return {false,
                WeakSidonWitness{a[it->second.first], a[it->second.second],
                                 a[i], a[j]}};
    }
  return {true, std::nullopt};
}

// (4,5)-set: every 4-point subset determines at least 5 distinct values among
// its six pairwise absolute differences.
inline std::pair<bool, std::optional<FourFiveWitness>> is_45_set(
    const PointSet& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const std::array<Rational, 4> q{a[i], a[j], a[k], a[l]};
          const std::array<Rational, 6> d{q[1] - q[0], q[2] - q[0],
                                          q[3] - q[0], q[2] - q[1],
                                          q[3] - q[1], q[3] - q[2]};
          std::set<Rational> distinct(d.begin(), d.end());
          if (distinct.size() < 5)
            return {false, FourFiveWitness{q, d, distinct.size()}};
        }
  return {true, std::nullopt};
}

inline bool holds_property(PropertyMode mode, const PointSet& a) {
  return mode == PropertyMode::WeakSidon ? is_weak_sidon(a).first
                                         : is_45_set(a).first;
}

struct Classification {
  bool sidon = false;
  bool four_five = false;
  bool weak_sidon = false;
  std::optional<SidonWitness> sidon_witness;
  std::optional<FourFiveWitness> four_five_witness;
  std::optional<WeakSidonWitness> weak_sidon_witness;
};

// Runs all three predicates and asserts the inclusion chain
// Sidon => (4,5) => weak Sidon on every call.
inline Classification classify(const PointSet& a) {
  Classification c;
  auto [s, sw] = is_sidon(a);
  auto [f, fw] = is_45_set(a);
  auto [w, ww] = is_weak_sidon(a);
  c.sidon = s;
  c.four_five = f;
  c.weak_sidon = w;
  c.sidon_witness = std::move(sw);
  c.four_five_witness = std::move(fw);
  c.weak_sidon_witness = std::move(ww);
  if ((c.sidon && !c.four_five) || (c.four_five && !c.weak_sidon))
    throw FatalInconsistency(
        "inclusion chain Sidon => (4,5) => weak Sidon violated on {" +
        a.to_text() + "}");
  return c;
}

}  // namespace sidonlab
