#ifndef HYPERQ_RANDOM_GEN_HPP
#define HYPERQ_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "hyperq/grade.hpp"
#include "hyperq/ifs.hpp"
#include "hyperq/hyperstructures.hpp"

namespace hyperq {

// Seeded generators for test corpora and the `random` subcommand.
// mt19937_64 with explicit modular draws, so identical seeds give
// identical structures on every platform.

struct RandomHqgResult {
  Hypergroupoid hqg;
  int attempts;  // rejection-sampling rounds until the axioms held
};

/// Fills every cell with a uniformly random non-empty subset and rejects
/// until reproducibility (and, when required, regularity) holds.
RandomHqgResult random_hyperquasigroup(int order, std::uint64_t seed,
                                       bool regular = false,
                                       int max_attempts = 1000000);

/// Random regular hyperquasigroup: draws a random table, closes it under
/// the regularity implication (cells only grow, so the closure is a fixed
/// point), and rejects until the result is reproducible. Much cheaper
/// than plain rejection at order 4, where random tables are almost never
/// regular.
RandomHqgResult random_regular_hyperquasigroup(int order, std::uint64_t seed,
                                               int max_attempts = 100000);

/// Uniform grade p/q with q in [1,max_den], p in [0,q].
Grade random_grade(std::mt19937_64 &rng, int max_den);

/// Random valid IFS: mu free, lambda drawn below each complement.
IntuitionisticFuzzySet random_ifs(std::mt19937_64 &rng, int order,
                                  int max_den);

}  // namespace hyperq

#endif
