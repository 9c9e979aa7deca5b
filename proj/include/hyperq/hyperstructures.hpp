#ifndef HYPERQ_HYPERSTRUCTURES_HPP
#define HYPERQ_HYPERSTRUCTURES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperq/errors.hpp"

namespace hyperq {

/// Subset of a carrier {0,..,n-1}, as a bitmask. Orders stay small
/// (enumeration caps at 12), so 32 bits are plenty.
struct CarrierSubset {
  std::uint32_t bits = 0;

  static CarrierSubset full(int n) {
    return {static_cast<std::uint32_t>((1u << n) - 1u)};
  }
  static CarrierSubset single(int i) {
    return {static_cast<std::uint32_t>(1u << i)};
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= (1u << i); }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }
  bool subset_of(CarrierSubset other) const {
    return (bits & ~other.bits) == 0;
  }

  std::vector<int> elements() const;
  /// "0,2,3"; "{}" when empty.
  std::string str() const;

  friend bool operator==(CarrierSubset, CarrierSubset) = default;
  friend CarrierSubset operator|(CarrierSubset a, CarrierSubset b) {
    return {a.bits | b.bits};
  }
  friend CarrierSubset operator&(CarrierSubset a, CarrierSubset b) {
    return {a.bits & b.bits};
  }
};

/// Finite carrier {0,..,n-1} with an n x n table of non-empty subsets.
/// Immutable once constructed; the constructor rejects empty cells and
/// out-of-range bits.
class Hypergroupoid {
 public:
  Hypergroupoid(int order, std::vector<CarrierSubset> table);

  int order() const { return order_; }
  CarrierSubset cell(int x, int y) const { return table_[x * order_ + y]; }
  const std::vector<CarrierSubset> &table() const { return table_; }
  CarrierSubset carrier() const { return CarrierSubset::full(order_); }

  /// Set-extended hyperoperation: union of x∘y over x in a, y in b.
  CarrierSubset product(CarrierSubset a, CarrierSubset b) const;

  friend bool operator==(const Hypergroupoid &, const Hypergroupoid &) =
      default;

 private:
  int order_;
  std::vector<CarrierSubset> table_;
};

struct AxiomReport {
  bool is_hypergroupoid = false;
  bool is_hyperquasigroup = false;
  bool is_hypergroup = false;
  bool is_regular = false;
  // First counterexample in lexicographic scan order, per axiom.
  std::optional<int> reproducibility_witness;            // x with x∘G ≠ G or G∘x ≠ G
  std::optional<std::array<int, 3>> associativity_witness;
  std::optional<std::array<int, 3>> regularity_witness;
};

AxiomReport check_axioms(const Hypergroupoid &h);

struct SubHqVerdict {
  bool holds = false;
  // First failure found: either a closure pair (x,y in K with x∘y ⊄ K)
  // or an internal-reproducibility element a with a∘K ≠ K or K∘a ≠ K.
  std::optional<std::pair<int, int>> closure_witness;
  std::optional<int> reproducibility_witness;
};

/// Closure plus internal reproducibility: x∘y ⊆ K for x,y in K, and
/// a∘K = K = K∘a for every a in K. Throws EmptySubset on empty K.
SubHqVerdict is_sub_hyperquasigroup(const Hypergroupoid &h, CarrierSubset k);

inline constexpr int kDefaultOrderLimit = 12;

/// All sub-hyperquasigroups of h, in ascending bitmask order.
/// Throws OrderLimitExceeded when h.order() > limit.
std::vector<CarrierSubset> enumerate_subs(const Hypergroupoid &h,
                                          int limit = kDefaultOrderLimit);

/// Induced hyperquasigroup on K, carrier re-indexed by ascending element.
/// Throws NotASubHyperquasigroup unless K passes is_sub_hyperquasigroup.
Hypergroupoid restrict(const Hypergroupoid &h, CarrierSubset k);

}  // namespace hyperq

#endif
