#ifndef HYPERQ_IFSH_HPP
#define HYPERQ_IFSH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperq/ifs.hpp"

namespace hyperq {

struct IfshVerdict {
  bool holds = false;
  /// 1..4 for the definitional conditions (1..3 for the fuzzy variant);
  /// absent when holds.
  std::optional<int> failed_condition;
  /// (x,y) for conditions 1/3, (x,a) for conditions 2/4.
  std::optional<std::pair<int, int>> witness;
  std::string detail;
};

/// Direct test of the four-condition IFSH definition. Conditions are
/// checked in the order 1, 3, 2, 4; existential witnesses (y,z) are found
/// by exhaustive scan, independently for conditions 2 and 4. With
/// shared_witness a single pair (y,z) must satisfy both inequalities,
/// a strictly stronger reading.
IfshVerdict check_ifsh(const Hypergroupoid &h, const IntuitionisticFuzzySet &a,
                       bool shared_witness = false);

/// Three-condition fuzzy sub-hyperquasigroup test on a single fuzzy set.
IfshVerdict check_fuzzy_subhq(const Hypergroupoid &h, const FuzzySet &f);

/// Cut-based decision: every non-empty upper cut of mu and lower cut of
/// lambda at thresholds in Im(mu) ∪ Im(lambda) ∪ {0,1} must be a
/// sub-hyperquasigroup. Agrees with check_ifsh on every input.
IfshVerdict check_ifsh_via_cuts(const Hypergroupoid &h,
                                const IntuitionisticFuzzySet &a);

/// Two-level IFSH over a sub-hyperquasigroup K: grades (a0,b0) on K and
/// (a1,b1) off K, with a1 < a0, b0 < b1 and both sums <= 1.
IntuitionisticFuzzySet build_two_level(const Hypergroupoid &h, CarrierSubset k,
                                       const Grade &a0, const Grade &a1,
                                       const Grade &b0, const Grade &b1);

/// (chi_K, chi_K^c) for a sub-hyperquasigroup K.
IntuitionisticFuzzySet build_characteristic(const Hypergroupoid &h,
                                            CarrierSubset k);

/// Strictly descending thresholds with a strictly increasing chain of
/// sub-hyperquasigroups covering the carrier.
struct LevelChain {
  std::vector<Grade> omega;
  std::vector<CarrierSubset> sets;
};

/// mu(x) = max{a in Omega : x in K_a}, lambda(x) = min{a in Omega : x in
/// K_a}. Throws ChainHypothesisViolated when the chain hypotheses fail,
/// ConstraintViolated when the constructed pair has mu + lambda > 1
/// somewhere (the hypotheses do not rule this out).
IntuitionisticFuzzySet build_from_chain(const Hypergroupoid &h,
                                        const LevelChain &chain);

}  // namespace hyperq

#endif
