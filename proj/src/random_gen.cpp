#include "hyperq/random_gen.hpp"

namespace hyperq {

namespace {

std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t bound) {
  // bound is tiny relative to 2^64; modulo bias is negligible and the
  // result stays platform-independent (uniform_int_distribution is not).
  return rng() % bound;
}

}  // namespace

RandomHqgResult random_hyperquasigroup(int order, std::uint64_t seed,
                                       bool regular, int max_attempts) {
  std::mt19937_64 rng(seed);
  const std::uint64_t cell_max = (1u << order) - 1u;  // non-empty masks
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<CarrierSubset> table(static_cast<std::size_t>(order) * order);
    for (auto &cell : table)
      cell.bits = static_cast<std::uint32_t>(draw(rng, cell_max) + 1);
    Hypergroupoid h(order, std::move(table));
    const AxiomReport r = check_axioms(h);
    if (r.is_hyperquasigroup && (!regular || r.is_regular))
      return {std::move(h), attempt};
  }
  throw Error("no hyperquasigroup found in " + std::to_string(max_attempts) +
              " attempts for seed " + std::to_string(seed));
}

RandomHqgResult random_regular_hyperquasigroup(int order, std::uint64_t seed,
                                               int max_attempts) {
  std::mt19937_64 rng(seed);
  const std::uint64_t cell_max = (1u << order) - 1u;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<CarrierSubset> table(static_cast<std::size_t>(order) * order);
    for (auto &cell : table)
      cell.bits = static_cast<std::uint32_t>(draw(rng, cell_max) + 1);
    // x in y∘z forces y in x∘z and z in y∘x; iterate to the fixed point.
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
          for (int z = 0; z < order; ++z) {
            if (!table[y * order + z].contains(x)) continue;
            if (!table[x * order + z].contains(y)) {
              table[x * order + z].add(y);
              grew = true;
            }
            if (!table[y * order + x].contains(z)) {
              table[y * order + x].add(z);
              grew = true;
            }
          }
    }
    Hypergroupoid h(order, std::move(table));
    const AxiomReport r = check_axioms(h);
    if (r.is_hyperquasigroup && r.is_regular) return {std::move(h), attempt};
  }
  throw Error("no regular hyperquasigroup found in " +
              std::to_string(max_attempts) + " attempts for seed " +
              std::to_string(seed));
}

Grade random_grade(std::mt19937_64 &rng, int max_den) {
  const auto q = static_cast<std::int64_t>(draw(rng, max_den)) + 1;
  const auto p = static_cast<std::int64_t>(draw(rng, q + 1));
  return Grade::of(p, q);
}

IntuitionisticFuzzySet random_ifs(std::mt19937_64 &rng, int order,
                                  int max_den) {
  FuzzySet mu(order), lambda(order);
  for (int x = 0; x < order; ++x) {
    mu[x] = random_grade(rng, max_den);
    // lambda below 1 - mu: draw until the sum fits.
    do {
      lambda[x] = random_grade(rng, max_den);
    } while (!sum_at_most_one(mu[x], lambda[x]));
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

}  // namespace hyperq
