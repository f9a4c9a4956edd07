#pragma once

// Random inputs shared by the unit tests and the acceptance binary.

#include <random>
#include <vector>

#include "contact_census/contfrac.hpp"
#include "contact_census/farey.hpp"
#include "contact_census/slices.hpp"

namespace support {

using namespace contact_census;

inline Matrix2 random_sl2(std::mt19937& rng, int steps) {
  const Matrix2 gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, -1, 1, 0}};
  Matrix2 m;
  for (int i = 0; i < steps; ++i) m = m * gens[rng() % 5];
  return m;
}

inline std::pair<std::int64_t, std::int64_t> random_coprime(std::mt19937& rng, std::int64_t max_p) {
  while (true) {
    std::int64_t p = 2 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_p - 1));
    std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(p - 1));
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

// A shortest chain between two random slopes: a continued-fraction path moved
// by an orientation-preserving matrix.
inline std::vector<Slope> random_shortest_chain(std::mt19937& rng, std::int64_t max_p = 40) {
  auto [p, q] = random_coprime(rng, max_p);
  Matrix2 m = random_sl2(rng, 4);
  std::vector<Slope> chain;
  for (const Slope& s : path_via_cf(p, q)) chain.push_back(sl2_apply(m, s));
  return chain;
}

inline std::vector<int> random_signs(std::mt19937& rng, std::size_t n) {
  std::vector<int> out(n);
  for (int& s : out) s = (rng() & 1) ? 1 : -1;
  return out;
}

}  // namespace support
