#ifndef HYPERQ_IFS_HPP
#define HYPERQ_IFS_HPP

#include <vector>

#include "hyperq/grade.hpp"
#include "hyperq/hyperstructures.hpp"

namespace hyperq {

/// Map from the carrier into [0,1]: one Grade per element.
using FuzzySet = std::vector<Grade>;

/// Membership/non-membership pair with pointwise mu + lambda <= 1.
/// Construct via ifs_validate; the invariant is assumed everywhere else.
struct IntuitionisticFuzzySet {
  FuzzySet mu;
  FuzzySet lambda;

  int size() const { return static_cast<int>(mu.size()); }
  friend bool operator==(const IntuitionisticFuzzySet &,
                         const IntuitionisticFuzzySet &) = default;
};

/// Checks lengths and the pointwise sum constraint.
/// Throws LengthMismatch or ConstraintViolated (carrying the first
/// offending element).
IntuitionisticFuzzySet ifs_validate(FuzzySet mu, FuzzySet lambda);

enum class SetOp { kIntersect, kUnion };

IntuitionisticFuzzySet ifs_combine(const IntuitionisticFuzzySet &a,
                                   const IntuitionisticFuzzySet &b, SetOp op);

/// A ⊆ B iff mu_A <= mu_B and lambda_A >= lambda_B pointwise.
bool ifs_subset(const IntuitionisticFuzzySet &a,
                const IntuitionisticFuzzySet &b);

enum class ModalOp { kComplement, kBox, kDiamond };

/// complement -> (lambda, mu); box -> (mu, mu^c); diamond -> (lambda^c, lambda).
IntuitionisticFuzzySet ifs_modal(const IntuitionisticFuzzySet &a, ModalOp op);

enum class CutKind { kUpper, kLower };

/// Upper: {x : f(x) >= t}. Lower: {x : f(x) <= t}. May be empty.
CarrierSubset level_cut(const FuzzySet &f, const Grade &t, CutKind kind);

/// Recovers f from its own cuts: x -> max{a in Im(f) ∪ {0} : x in upper
/// cut at a} (dually min with {1} for lower). Exact on finite carriers,
/// where the sup over [0,1] is attained at an image value.
FuzzySet reconstruct(const FuzzySet &f, CutKind kind);

IntuitionisticFuzzySet constant_ifs(int n, const Grade &mu,
                                    const Grade &lambda);

/// (chi_K, chi_K^c) on a carrier of the given order.
IntuitionisticFuzzySet characteristic_ifs(int n, CarrierSubset k);

/// 0_~ = (0, 1).
inline IntuitionisticFuzzySet zero_ifs(int n) {
  return constant_ifs(n, Grade::zero(), Grade::one());
}

}  // namespace hyperq

#endif
