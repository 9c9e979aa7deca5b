#ifndef HYPERQ_FUNDAMENTAL_HPP
#define HYPERQ_FUNDAMENTAL_HPP

#include <utility>
#include <vector>

#include "hyperq/ifsh.hpp"

namespace hyperq {

/// All values of finite parenthesized products: singletons plus the
/// closure under (u,v) -> u∘v.
struct ProductFamily {
  std::vector<CarrierSubset> subsets;  // ascending bitmask order
};

ProductFamily finite_products(const Hypergroupoid &h);

/// Partition of the carrier, classes indexed by least member, ascending.
struct Partition {
  std::vector<int> class_of;              // element -> class index
  std::vector<std::vector<int>> classes;  // each ascending
};

/// beta relates x,y iff they co-occur in some finite product; beta* is
/// the transitive closure (union-find over product members).
Partition beta_star(const Hypergroupoid &h);

/// Latin square with derived left/right divisions:
/// x\y = z <=> x·z = y, x/y = z <=> z·y = x.
struct Quasigroup {
  int order = 0;
  std::vector<int> mult;  // row-major
  std::vector<int> ldiv;
  std::vector<int> rdiv;

  int m(int x, int y) const { return mult[x * order + y]; }
  int ld(int x, int y) const { return ldiv[x * order + y]; }
  int rd(int x, int y) const { return rdiv[x * order + y]; }

  /// Builds a quasigroup from a multiplication table, deriving the
  /// divisions. Throws NotALatinSquare.
  static Quasigroup from_mult(int order, std::vector<int> mult);

  friend bool operator==(const Quasigroup &, const Quasigroup &) = default;
};

struct FundamentalResult {
  Partition partition;
  Quasigroup quasigroup;  // on class indices
};

/// Quotient of h by beta*. The class product is verified to be
/// well-defined (all elementwise products of two classes inside one
/// class) and the quotient table to be a Latin square; failures throw
/// IllDefinedProduct / NotALatinSquare rather than being assumed away.
FundamentalResult fundamental_quasigroup(const Hypergroupoid &h);

/// Def of intuitionistic fuzzy subquasigroup on a binary quasigroup:
/// min{mu(x),mu(y)} <= mu(x*y) and lambda(x*y) <= max{lambda(x),lambda(y)}
/// for all x,y and * in {·, \, /}.
IfshVerdict check_if_subquasigroup(const Quasigroup &q,
                                   const IntuitionisticFuzzySet &a);

/// Pushes an IFS onto the fundamental quasigroup: classwise max of mu,
/// classwise min of lambda (the inf dual; the source text defines only
/// the mu side).
std::pair<FundamentalResult, IntuitionisticFuzzySet> pushforward(
    const Hypergroupoid &h, const IntuitionisticFuzzySet &a);

}  // namespace hyperq

#endif
