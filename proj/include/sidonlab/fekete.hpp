#pragma once
// Inf-prefix reports for subadditive sequences.
//
// The extremal quantities tracked here (minimum h over weak Sidon sets of
// size n, and over (4,5)-sets of size n) are subadditive in n, so by
// Fekete's lemma the ratio v(n)/n converges to its infimum. A FeketeTable
// holds the finitely many values (or certified upper bounds) available, and
// fekete_report computes the running infimum of v(k)/k in exact arithmetic.
// Since every table value bounds the true one from above, the reported
// infimum is a certified upper bound on the limit constant.
//
// An entry is marked `exact` when its value is the true sequence value, not
// merely an upper bound. Subadditivity v(i+j) <= v(i) + v(j) is asserted for
// every index pair whose three participating entries are all exact (with a
// loose upper bound on either side the inequality carries no information);
// a violation among exact values is a fatal inconsistency in the data.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidonlab/errors.hpp"
#include "sidonlab/rational.hpp"

namespace sidonlab {

struct FeketeEntry {
  long long index = 0;  // sequence position k >= 1
  Rational value;       // v(k), an exact value or certified upper bound
  bool exact = true;
};

using FeketeTable = std::vector<FeketeEntry>;

struct FeketeReport {
  Rational infimum;                // min over entries of v(k)/k
  long long attained_at = 0;       // smallest k attaining the infimum
  std::vector<Rational> running;   // running infimum, entries in index order
};

inline FeketeReport fekete_report(const FeketeTable& table) {
  if (table.empty())
    throw std::invalid_argument("fekete report needs at least one entry");
  std::map<long long, FeketeEntry> by_index;
  for (const FeketeEntry& e : table) {
    if (e.index < 1)
      throw std::invalid_argument("fekete index must be >= 1, got " +
                                  std::to_string(e.index));
    FeketeEntry canon = e;
    canon.value.canonicalize();
    if (!by_index.emplace(canon.index, canon).second)
      throw std::invalid_argument("duplicate fekete index " +
                                  std::to_string(e.index));
  }
  for (const auto& [i, ei] : by_index) {
    if (!ei.exact) continue;
    for (const auto& [j, ej] : by_index) {
      if (j < i || !ej.exact) continue;
      auto sum = by_index.find(i + j);
      if (sum == by_index.end() || !sum->second.exact) continue;
      if (sum->second.value > ei.value + ej.value)
        throw FatalInconsistency(
            "subadditivity fails on exact entries: v(" + std::to_string(i + j) +
            ") = " + to_string(sum->second.value) + " > v(" +
            std::to_string(i) + ") + v(" + std::to_string(j) + ") = " +
            to_string(Rational(ei.value + ej.value)));
    }
  }
  FeketeReport report;
  bool first = true;
  for (const auto& [k, e] : by_index) {
    Rational ratio = e.value / Rational(static_cast<long>(k));
    ratio.canonicalize();
    if (first || ratio < report.infimum) {
      report.infimum = ratio;
      report.attained_at = k;
      first = false;
    }
    report.running.push_back(report.infimum);
  }
  return report;
}

}  // namespace sidonlab
