#pragma once

// Random instances shared by the property tests and the acceptance binary.

#include <random>
#include <vector>

#include "brick/coxeter.hpp"

namespace brick::fixtures {

/// Data of rank <= 3, mixing simply and doubly laced, G2 and reducible ones.
inline std::vector<CoxeterDatum> small_data() {
  return {CoxeterDatum::parse("A1"), CoxeterDatum::parse("A2"), CoxeterDatum::parse("A3"),
          CoxeterDatum::parse("B2"), CoxeterDatum::parse("C3"), CoxeterDatum::parse("B3"),
          CoxeterDatum::parse("G2"), CoxeterDatum::parse("custom:[[2,0],[0,2]]"),
          CoxeterDatum::parse("custom:[[2,0,0],[0,2,-1],[0,-1,2]]")};
}

inline Word random_word(const CoxeterDatum& datum, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> letter(0, datum.rank() - 1);
  std::vector<std::size_t> letters(length);
  for (auto& l : letters) l = letter(rng);
  return Word(datum, std::move(letters));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A word of length in [lo, hi] over a uniformly chosen datum of `pool`.
inline Word random_instance(const std::vector<CoxeterDatum>& pool, std::size_t lo, std::size_t hi,
                            std::mt19937_64& rng) {
  const CoxeterDatum& d = pool[uniform(rng, 0, pool.size() - 1)];
  return random_word(d, uniform(rng, lo, hi), rng);
}

/// Random element as the evaluation of a random word.
inline GroupElement random_element(const CoxeterDatum& datum, std::mt19937_64& rng, std::size_t max_len = 12) {
  return evaluate(random_word(datum, uniform(rng, 0, max_len), rng));
}

}  // namespace brick::fixtures
