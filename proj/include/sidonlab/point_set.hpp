#pragma once

#include <algorithm>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sidonlab/rational.hpp"

namespace sidonlab {

// A finite set of rational points, stored strictly increasing. Immutable
// after construction; all set-level operations return new instances.
class PointSet {
 public:
  PointSet() = default;

  // Sorts the input; duplicate values are an error, never merged silently.
  // Values are canonicalized first: GMP's equality assumes lowest terms.
  explicit PointSet(std::vector<Rational> values) : values_(std::move(values)) {
    for (Rational& v : values_) v.canonicalize();
    std::sort(values_.begin(), values_.end());
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (values_[i - 1] == values_[i])
        throw std::invalid_argument("duplicate value in point set: " +
                                    to_string(values_[i]));
  }

  // Adopts an already strictly increasing sequence (still verified).
  static PointSet from_sorted(std::vector<Rational> values) {
    for (Rational& v : values) v.canonicalize();
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i - 1] < values[i]))
        throw std::logic_error("from_sorted: sequence not strictly increasing");
    PointSet p;
    p.values_ = std::move(values);
    return p;
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  const Rational& min() const { return require_nonempty(), values_.front(); }
  const Rational& max() const { return require_nonempty(), values_.back(); }

  bool contains(const Rational& x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
  }

  // Index of x in the sorted order, if present.
  std::optional<std::size_t> index_of(const Rational& x) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    if (it == values_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - values_.begin());
  }

  // Subset by (not necessarily sorted) indices; indices must be distinct.
  PointSet subset(const std::vector<std::size_t>& indices) const {
    std::vector<Rational> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(values_.at(i));
    return PointSet(std::move(out));
  }

  bool all_integers() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& x) { return x.get_den() == 1; });
  }

  // Space-separated canonical text, e.g. "0 1/2 3".
  std::string to_text() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ' ';
      out += to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) {
    return !(a == b);
  }
  // Lexicographic on the increasing value sequence; the tie-break order used
  // for every witness in the library.
  friend bool operator<(const PointSet& a, const PointSet& b) {
    return std::lexicographical_compare(a.values_.begin(), a.values_.end(),
                                        b.values_.begin(), b.values_.end());
  }

 private:
  void require_nonempty() const {
    if (values_.empty())
      throw std::invalid_argument("operation requires a nonempty point set");
  }

  std::vector<Rational> values_;
};

// x |-> scale*x + shift with scale > 0, so order (and every sum/difference
// coincidence pattern) is preserved.
struct AffineMap {
  Rational scale;
  Rational shift;

  AffineMap(Rational q, Rational t) : scale(std::move(q)), shift(std::move(t)) {
    scale.canonicalize();  // inputs may arrive in non-lowest terms
    shift.canonicalize();
    if (!(scale > 0))
      throw std::invalid_argument("affine map requires positive scale, got " +
                                  to_string(scale));
  }
};

inline PointSet apply_affine(const PointSet& a, const AffineMap& m) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& x : a) out.push_back(m.scale * x + m.shift);
  return PointSet::from_sorted(std::move(out));
}

// Canonical form: integer values, minimum 0, content gcd 1 (the gcd of {0}
// is taken to be 1, so a singleton normalizes to {0}). Returns (B, m) with
// apply_affine(B, m) == A. Idempotent: a set already in canonical form maps
// to itself under the identity.
inline std::pair<PointSet, AffineMap> normalize(const PointSet& a) {
  if (a.empty())
    throw std::invalid_argument("cannot normalize an empty point set");
  const Rational lo = a.min();
  Integer denom_lcm = 1;
  for (const Rational& x : a) {
    Rational d = x - lo;
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            d.get_den().get_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(a.size());
  Integer content = 0;
  for (const Rational& x : a) {
    Rational d = (x - lo) * Rational(denom_lcm);
    d.canonicalize();
    scaled.push_back(d.get_num());  // exact integer by choice of denom_lcm
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            scaled.back().get_mpz_t());
  }
  if (content == 0) content = 1;
  std::vector<Rational> canon;
  canon.reserve(a.size());
  for (const Integer& z : scaled) canon.emplace_back(Rational(z / content));
  Rational scale(content, denom_lcm);
  scale.canonicalize();
  return {PointSet::from_sorted(std::move(canon)), AffineMap(scale, lo)};
}

// Parses either whitespace-separated rational tokens ("0 1/2 3") or a JSON
// array (["0", "1/2", 3]). JSON numbers must be integers; fractions are
// passed as strings so nothing is ever parsed through floating point.
inline PointSet parse_point_set(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return PointSet();
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("invalid JSON point set: ") +
                                  e.what());
    }
    if (!j.is_array())
      throw std::invalid_argument("JSON point set must be an array");
    std::vector<Rational> values;
    values.reserve(j.size());
    for (const auto& el : j) {
      if (el.is_string())
        values.push_back(parse_rational(el.get<std::string>()));
      else if (el.is_number_unsigned())
        values.push_back(Rational(
            Integer(std::to_string(el.get<unsigned long long>()))));
      else if (el.is_number_integer())
        values.push_back(
            Rational(Integer(std::to_string(el.get<long long>()))));
      else if (el.is_number_float())
        throw std::invalid_argument(
            "floating-point values are not exact; pass fractions as \"p/q\" "
            "strings");
      else
        throw std::invalid_argument(
            "JSON point set entries must be integers or \"p/q\" strings");
    }
    return PointSet(std::move(values));
  }
  std::istringstream in{std::string(text)};
  std::vector<Rational> values;
  std::string token;
  while (in >> token) values.push_back(parse_rational(token));
  return PointSet(std::move(values));
}

}  // namespace sidonlab
