#ifndef HYPERQ_RELATIONS_HPP
#define HYPERQ_RELATIONS_HPP

#include <vector>

#include "hyperq/ifsh.hpp"

namespace hyperq {

enum class LevelMapKind { kU, kL, kI };

/// U -> upper cut of mu at alpha; L -> lower cut of lambda at alpha;
/// I -> their intersection. Codomain S(G) ∪ {∅} for IFSH members.
CarrierSubset level_map(const IntuitionisticFuzzySet &a, const Grade &alpha,
                        LevelMapKind kind);

/// Finite stand-in for IFSH(G); every member shares one carrier and
/// passes check_ifsh.
struct IfshFamily {
  std::vector<IntuitionisticFuzzySet> members;
};

struct FamilyPartition {
  std::vector<int> class_of;             // member index -> class index
  std::vector<std::vector<int>> classes; // first-seen order
  /// Shared level image of each class.
  std::vector<CarrierSubset> images;
};

/// Members share a class iff their level_map images are equal.
/// U realizes the mu-cut relation, L the lambda-cut relation, I the
/// intersected relation.
FamilyPartition classify(const IfshFamily &fam, const Grade &alpha,
                         LevelMapKind rel);

/// {0_~} ∪ {K_~ : K a sub-hyperquasigroup of h}. These are exactly the
/// witnesses the surjectivity arguments exhibit, so the family realizes
/// every level image once.
IfshFamily canonical_family(const Hypergroupoid &h,
                            int limit = kDefaultOrderLimit);

struct EquipotenceReport {
  int sub_count = 0;  // |S(G)|
  struct PerRelation {
    LevelMapKind rel;
    int class_count = 0;
    bool surjective = false;  // images cover S(G) ∪ {∅}
    bool pass = false;        // class_count == sub_count + 1 and surjective
  };
  std::vector<PerRelation> relations;
  bool pass = false;
};

/// Checks that each of the three quotient sets of the canonical family is
/// equipotent to S(G) ∪ {∅}. Requires alpha strictly inside (0,1);
/// throws AlphaOnBoundary otherwise.
EquipotenceReport verify_equipotence(const Hypergroupoid &h,
                                     const Grade &alpha,
                                     int limit = kDefaultOrderLimit);

}  // namespace hyperq

#endif
