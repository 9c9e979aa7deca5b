#include "hyperq/ifsh.hpp"

#include <algorithm>
#include <set>

namespace hyperq {

namespace {

void require_hyperquasigroup(const Hypergroupoid &h) {
  if (!check_axioms(h).is_hyperquasigroup)
    throw NotAHyperquasigroup("input is not reproducible");
}

Grade min_over(const FuzzySet &f, CarrierSubset s) {
  Grade best = Grade::one();
  for (int z : s.elements()) best = std::min(best, f[z]);
  return best;
}

Grade max_over(const FuzzySet &f, CarrierSubset s) {
  Grade best = Grade::zero();
  for (int z : s.elements()) best = std::max(best, f[z]);
  return best;
}

}  // namespace

IfshVerdict check_ifsh(const Hypergroupoid &h, const IntuitionisticFuzzySet &a,
                       bool shared_witness) {
  require_hyperquasigroup(h);
  if (a.size() != h.order()) throw LengthMismatch("IFS/carrier size mismatch");
  const int n = h.order();
  const FuzzySet &mu = a.mu;
  const FuzzySet &la = a.lambda;
  IfshVerdict v;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (std::min(mu[x], mu[y]) > min_over(mu, h.cell(x, y))) {
        v.failed_condition = 1;
        v.witness = {x, y};
        v.detail = "condition 1 at x=" + std::to_string(x) +
                   " y=" + std::to_string(y);
        return v;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (max_over(la, h.cell(x, y)) > std::max(la[x], la[y])) {
        v.failed_condition = 3;
        v.witness = {x, y};
        v.detail = "condition 3 at x=" + std::to_string(x) +
                   " y=" + std::to_string(y);
        return v;
      }
    }

  // Conditions 2 and 4: for every (x,a) a pair (y,z) with
  // x in (a∘y) ∩ (z∘a) and the respective inequality.
  auto divisible = [&](int aa, int y, int z, int x) {
    return h.cell(aa, y).contains(x) && h.cell(z, aa).contains(x);
  };
  auto scan = [&](int x, int aa, bool want_mu, bool want_la) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!divisible(aa, y, z, x)) continue;
        const bool mu_ok =
            std::min(mu[aa], mu[x]) <= std::min(mu[y], mu[z]);
        const bool la_ok =
            std::max(la[y], la[z]) <= std::max(la[aa], la[x]);
        if ((!want_mu || mu_ok) && (!want_la || la_ok)) return true;
      }
    return false;
  };

  if (shared_witness) {
    for (int x = 0; x < n; ++x)
      for (int aa = 0; aa < n; ++aa)
        if (!scan(x, aa, true, true)) {
          v.failed_condition = 2;
          v.witness = {x, aa};
          v.detail = "conditions 2+4 (shared witness) at x=" +
                     std::to_string(x) + " a=" + std::to_string(aa);
          return v;
        }
  } else {
    for (int x = 0; x < n; ++x)
      for (int aa = 0; aa < n; ++aa)
        if (!scan(x, aa, true, false)) {
          v.failed_condition = 2;
          v.witness = {x, aa};
          v.detail = "condition 2 at x=" + std::to_string(x) +
                     " a=" + std::to_string(aa);
          return v;
        }
    for (int x = 0; x < n; ++x)
      for (int aa = 0; aa < n; ++aa)
        if (!scan(x, aa, false, true)) {
          v.failed_condition = 4;
          v.witness = {x, aa};
          v.detail = "condition 4 at x=" + std::to_string(x) +
                     " a=" + std::to_string(aa);
          return v;
        }
  }
  v.holds = true;
  return v;
}

IfshVerdict check_fuzzy_subhq(const Hypergroupoid &h, const FuzzySet &f) {
  require_hyperquasigroup(h);
  if (static_cast<int>(f.size()) != h.order())
    throw LengthMismatch("fuzzy set/carrier size mismatch");
  const int n = h.order();
  IfshVerdict v;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (std::min(f[x], f[y]) > min_over(f, h.cell(x, y))) {
        v.failed_condition = 1;
        v.witness = {x, y};
        v.detail = "condition 1 at x=" + std::to_string(x) +
                   " y=" + std::to_string(y);
        return v;
      }
  for (int x = 0; x < n; ++x)
    for (int aa = 0; aa < n; ++aa) {
      bool found = false;
      for (int y = 0; y < n && !found; ++y)
        found = h.cell(aa, y).contains(x) &&
                std::min(f[aa], f[x]) <= f[y];
      if (!found) {
        v.failed_condition = 2;
        v.witness = {x, aa};
        v.detail = "condition 2 at x=" + std::to_string(x) +
                   " a=" + std::to_string(aa);
        return v;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int aa = 0; aa < n; ++aa) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z)
        found = h.cell(z, aa).contains(x) &&
                std::min(f[aa], f[x]) <= f[z];
      if (!found) {
        v.failed_condition = 3;
        v.witness = {x, aa};
        v.detail = "condition 3 at x=" + std::to_string(x) +
                   " a=" + std::to_string(aa);
        return v;
      }
    }
  v.holds = true;
  return v;
}

IfshVerdict check_ifsh_via_cuts(const Hypergroupoid &h,
                                const IntuitionisticFuzzySet &a) {
  require_hyperquasigroup(h);
  if (a.size() != h.order()) throw LengthMismatch("IFS/carrier size mismatch");
  // Cuts are piecewise constant in t, changing only at image values.
  std::set<Grade> critical(a.mu.begin(), a.mu.end());
  critical.insert(a.lambda.begin(), a.lambda.end());
  critical.insert(Grade::zero());
  critical.insert(Grade::one());
  IfshVerdict v;
  for (const Grade &t : critical) {
    const CarrierSubset up = level_cut(a.mu, t, CutKind::kUpper);
    if (!up.empty() && !is_sub_hyperquasigroup(h, up).holds) {
      v.detail = "U(mu;" + t.str() + ")={" + up.str() +
                 "} is not a sub-hyperquasigroup";
      return v;
    }
    const CarrierSubset lo = level_cut(a.lambda, t, CutKind::kLower);
    if (!lo.empty() && !is_sub_hyperquasigroup(h, lo).holds) {
      v.detail = "L(lambda;" + t.str() + ")={" + lo.str() +
                 "} is not a sub-hyperquasigroup";
      return v;
    }
  }
  v.holds = true;
  return v;
}

namespace {

CarrierSubset require_sub(const Hypergroupoid &h, CarrierSubset k) {
  if (!is_sub_hyperquasigroup(h, k).holds)
    throw NotASubHyperquasigroup("subset " + k.str() +
                                 " is not a sub-hyperquasigroup");
  return k;
}

}  // namespace

IntuitionisticFuzzySet build_two_level(const Hypergroupoid &h, CarrierSubset k,
                                       const Grade &a0, const Grade &a1,
                                       const Grade &b0, const Grade &b1) {
  require_sub(h, k);
  if (!(a1 < a0) || !(b0 < b1))
    throw ParameterOrderViolated("need a1 < a0 and b0 < b1");
  if (!sum_at_most_one(a0, b0) || !sum_at_most_one(a1, b1))
    throw ConstraintViolated(-1, "level parameters must sum to at most 1");
  FuzzySet mu(h.order()), lambda(h.order());
  for (int x = 0; x < h.order(); ++x) {
    mu[x] = k.contains(x) ? a0 : a1;
    lambda[x] = k.contains(x) ? b0 : b1;
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

IntuitionisticFuzzySet build_characteristic(const Hypergroupoid &h,
                                            CarrierSubset k) {
  require_sub(h, k);
  return characteristic_ifs(h.order(), k);
}

IntuitionisticFuzzySet build_from_chain(const Hypergroupoid &h,
                                        const LevelChain &chain) {
  if (chain.omega.empty() || chain.omega.size() != chain.sets.size())
    throw ChainHypothesisViolated("chain is empty or misaligned");
  for (std::size_t i = 0; i + 1 < chain.omega.size(); ++i) {
    if (!(chain.omega[i] > chain.omega[i + 1]))
      throw ChainHypothesisViolated("thresholds not strictly descending");
    // alpha > beta must mean K_alpha ⊊ K_beta.
    if (!(chain.sets[i].subset_of(chain.sets[i + 1]) &&
          chain.sets[i] != chain.sets[i + 1]))
      throw ChainHypothesisViolated("sets do not form a strict chain");
  }
  CarrierSubset all;
  for (CarrierSubset k : chain.sets) {
    if (!is_sub_hyperquasigroup(h, k).holds)
      throw ChainHypothesisViolated("chain member " + k.str() +
                                    " is not a sub-hyperquasigroup");
    all = all | k;
  }
  if (all != h.carrier())
    throw ChainHypothesisViolated("chain does not cover the carrier");

  FuzzySet mu(h.order()), lambda(h.order());
  for (int x = 0; x < h.order(); ++x) {
    Grade hi = Grade::zero(), lo = Grade::one();
    bool seen = false;
    for (std::size_t i = 0; i < chain.sets.size(); ++i) {
      if (!chain.sets[i].contains(x)) continue;
      if (!seen || chain.omega[i] > hi) hi = chain.omega[i];
      if (!seen || chain.omega[i] < lo) lo = chain.omega[i];
      seen = true;
    }
    mu[x] = hi;
    lambda[x] = lo;
  }
  return ifs_validate(std::move(mu), std::move(lambda));
}

}  // namespace hyperq
