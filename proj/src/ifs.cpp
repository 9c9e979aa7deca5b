#include "hyperq/ifs.hpp"

#include <algorithm>

namespace hyperq {

IntuitionisticFuzzySet ifs_validate(FuzzySet mu, FuzzySet lambda) {
  if (mu.size() != lambda.size())
    throw LengthMismatch("mu has " + std::to_string(mu.size()) +
                         " grades, lambda has " +
                         std::to_string(lambda.size()));
  for (std::size_t x = 0; x < mu.size(); ++x)
    if (!sum_at_most_one(mu[x], lambda[x]))
      throw ConstraintViolated(
          static_cast<int>(x),
          "mu + lambda > 1 at element " + std::to_string(x) + " (" +
              mu[x].str() + " + " + lambda[x].str() + ")");
  return {std::move(mu), std::move(lambda)};
}

IntuitionisticFuzzySet ifs_combine(const IntuitionisticFuzzySet &a,
                                   const IntuitionisticFuzzySet &b, SetOp op) {
  if (a.size() != b.size()) throw LengthMismatch("carrier sizes differ");
  FuzzySet mu(a.mu.size()), lambda(a.mu.size());
  for (std::size_t x = 0; x < a.mu.size(); ++x) {
    if (op == SetOp::kIntersect) {
      mu[x] = std::min(a.mu[x], b.mu[x]);
      lambda[x] = std::max(a.lambda[x], b.lambda[x]);
    } else {
      mu[x] = std::max(a.mu[x], b.mu[x]);
      lambda[x] = std::min(a.lambda[x], b.lambda[x]);
    }
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

bool ifs_subset(const IntuitionisticFuzzySet &a,
                const IntuitionisticFuzzySet &b) {
  if (a.size() != b.size()) throw LengthMismatch("carrier sizes differ");
  for (std::size_t x = 0; x < a.mu.size(); ++x)
    if (a.mu[x] > b.mu[x] || a.lambda[x] < b.lambda[x]) return false;
  return true;
}

IntuitionisticFuzzySet ifs_modal(const IntuitionisticFuzzySet &a, ModalOp op) {
  FuzzySet mu, lambda;
  switch (op) {
    case ModalOp::kComplement:
      mu = a.lambda;
      lambda = a.mu;
      break;
    case ModalOp::kBox:
      mu = a.mu;
      lambda.reserve(a.mu.size());
      for (const Grade &g : a.mu) lambda.push_back(g.complement());
      break;
    case ModalOp::kDiamond:
      lambda = a.lambda;
      mu.reserve(a.lambda.size());
      for (const Grade &g : a.lambda) mu.push_back(g.complement());
      break;
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

CarrierSubset level_cut(const FuzzySet &f, const Grade &t, CutKind kind) {
  CarrierSubset out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const bool in = kind == CutKind::kUpper ? f[x] >= t : f[x] <= t;
    if (in) out.add(static_cast<int>(x));
  }
  return out;
}

FuzzySet reconstruct(const FuzzySet &f, CutKind kind) {
  std::vector<Grade> thresholds(f.begin(), f.end());
  thresholds.push_back(kind == CutKind::kUpper ? Grade::zero() : Grade::one());
  FuzzySet out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    Grade best = thresholds.back();
    for (const Grade &t : thresholds) {
      if (!level_cut(f, t, kind).contains(static_cast<int>(x))) continue;
      if (kind == CutKind::kUpper ? t > best : t < best) best = t;
    }
    out[x] = best;
  }
  return out;
}

IntuitionisticFuzzySet constant_ifs(int n, const Grade &mu,
                                    const Grade &lambda) {
  return ifs_validate(FuzzySet(n, mu), FuzzySet(n, lambda));
}

IntuitionisticFuzzySet characteristic_ifs(int n, CarrierSubset k) {
  FuzzySet mu(n), lambda(n);
  for (int x = 0; x < n; ++x) {
    mu[x] = k.contains(x) ? Grade::one() : Grade::zero();
    lambda[x] = mu[x].complement();
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

}  // namespace hyperq
