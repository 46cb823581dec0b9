#pragma once

// Random generators and independent oracles shared by the test binaries.

#include "mexcl/catalog.hpp"
#include "mexcl/kronecker.hpp"
#include "mexcl/series.hpp"

#include <random>
#include <utility>
#include <vector>

namespace support {

using namespace mexcl;

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat small_rat(std::mt19937_64& rng) {
  long num = uniform(rng, -9, 9);
  if (num == 0) num = 1;
  return Rat(num, uniform(rng, 1, 4));
}

/// Random nonnegative exponent of Z^2 with first coordinate in [0, xmax]
/// and second in [-ymax, ymax] (second >= 0 when the first is 0).
inline GroupElement plane_exponent(std::mt19937_64& rng, long xmax, long ymax) {
  long x = uniform(rng, 0, xmax);
  long y = x == 0 ? uniform(rng, 0, ymax) : uniform(rng, -ymax, ymax);
  return GroupElement::of(integer_lattice(2), {x, y});
}

inline Series random_plane_series(std::mt19937_64& rng, std::size_t max_terms, Field f = Field::Q()) {
  std::vector<Series::Term> terms;
  auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < n; ++k) terms.emplace_back(plane_exponent(rng, 3, 4), small_rat(rng));
  return Series(integer_lattice(2), f, std::move(terms));
}

inline Series random_line_series(std::mt19937_64& rng, std::size_t max_terms, long emax, Field f = Field::Q()) {
  std::vector<Series::Term> terms;
  auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < n; ++k)
    terms.emplace_back(GroupElement::of(integer_lattice(1), {uniform(rng, 0, emax)}), small_rat(rng));
  return Series(integer_lattice(1), f, std::move(terms));
}

/// Coordinates of an element of Z^n as plain integers.
inline std::vector<long> plain(const GroupElement& g) {
  std::vector<long> out;
  for (const auto& c : g.coords()) out.push_back(numerator(c.p).convert_to<long>());
  return out;
}

/// Oracle for the value of a series under a coordinate-order valuation,
/// computed from plain integer vectors.
inline std::vector<long> plain_value(const Series& f, const std::vector<std::size_t>& order, std::size_t keep) {
  std::vector<long> best;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto e = plain(t.first);
    std::vector<long> v;
    for (std::size_t k = 0; k < keep; ++k) v.push_back(e[order[k]]);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

}  // namespace support
