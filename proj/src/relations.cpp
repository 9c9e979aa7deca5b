#include "hyperq/relations.hpp"

#include <map>
#include <set>

namespace hyperq {

CarrierSubset level_map(const IntuitionisticFuzzySet &a, const Grade &alpha,
                        LevelMapKind kind) {
  switch (kind) {
    case LevelMapKind::kU:
      return level_cut(a.mu, alpha, CutKind::kUpper);
    case LevelMapKind::kL:
      return level_cut(a.lambda, alpha, CutKind::kLower);
    case LevelMapKind::kI:
      return level_cut(a.mu, alpha, CutKind::kUpper) &
             level_cut(a.lambda, alpha, CutKind::kLower);
  }
  return {};
}

FamilyPartition classify(const IfshFamily &fam, const Grade &alpha,
                         LevelMapKind rel) {
  FamilyPartition p;
  p.class_of.resize(fam.members.size());
  std::map<std::uint32_t, int> by_image;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const CarrierSubset img = level_map(fam.members[i], alpha, rel);
    auto [it, inserted] =
        by_image.try_emplace(img.bits, static_cast<int>(p.classes.size()));
    if (inserted) {
      p.classes.emplace_back();
      p.images.push_back(img);
    }
    p.class_of[i] = it->second;
    p.classes[it->second].push_back(static_cast<int>(i));
  }
  return p;
}

IfshFamily canonical_family(const Hypergroupoid &h, int limit) {
  IfshFamily fam;
  fam.members.push_back(zero_ifs(h.order()));
  for (CarrierSubset k : enumerate_subs(h, limit))
    fam.members.push_back(characteristic_ifs(h.order(), k));
  return fam;
}

EquipotenceReport verify_equipotence(const Hypergroupoid &h,
                                     const Grade &alpha, int limit) {
  if (alpha == Grade::zero() || alpha == Grade::one())
    throw AlphaOnBoundary("equipotence requires alpha in the open interval "
                          "(0,1)");
  EquipotenceReport rep;
  const std::vector<CarrierSubset> subs = enumerate_subs(h, limit);
  rep.sub_count = static_cast<int>(subs.size());
  const IfshFamily fam = canonical_family(h, limit);

  std::set<std::uint32_t> target;  // S(G) ∪ {∅}
  target.insert(0);
  for (CarrierSubset k : subs) target.insert(k.bits);

  rep.pass = true;
  for (LevelMapKind rel :
       {LevelMapKind::kU, LevelMapKind::kL, LevelMapKind::kI}) {
    const FamilyPartition p = classify(fam, alpha, rel);
    EquipotenceReport::PerRelation pr;
    pr.rel = rel;
    pr.class_count = static_cast<int>(p.classes.size());
    std::set<std::uint32_t> images;
    for (CarrierSubset img : p.images) images.insert(img.bits);
    pr.surjective = images == target;
    pr.pass = pr.surjective && pr.class_count == rep.sub_count + 1;
    rep.pass = rep.pass && pr.pass;
    rep.relations.push_back(pr);
  }
  return rep;
}

}  // namespace hyperq
