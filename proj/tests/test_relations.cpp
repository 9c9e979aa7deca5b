#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "hyperq/fixtures.hpp"
#include "hyperq/random_gen.hpp"
#include "hyperq/relations.hpp"

using namespace hyperq;

namespace {
Grade g(std::int64_t p, std::int64_t q) { return Grade::of(p, q); }
}  // namespace

TEST_CASE("level_map") {
  CHECK(level_map(zero_ifs(2), g(1, 2), LevelMapKind::kU).empty());
  CHECK(level_map(zero_ifs(2), g(1, 2), LevelMapKind::kL).empty());
  const auto k = characteristic_ifs(2, {0b01});
  CHECK(level_map(k, g(1, 2), LevelMapKind::kI) == CarrierSubset{0b01});
  std::mt19937_64 rng(3);
  CHECK(level_map(random_ifs(rng, 4, 6), Grade::zero(), LevelMapKind::kU) ==
        CarrierSubset::full(4));
}

TEST_CASE("classify") {
  SUBCASE("singleton family") {
    const IfshFamily fam{{zero_ifs(2)}};
    CHECK(classify(fam, g(1, 2), LevelMapKind::kU).classes.size() == 1);
  }
  SUBCASE("canonical family of PAIR(2) splits into singletons") {
    const FamilyPartition p =
        classify(canonical_family(pair_hqg(2)), g(1, 2), LevelMapKind::kU);
    CHECK(p.classes.size() == 4);
    CHECK(p.images[0].empty());  // 0_~ first
  }
  SUBCASE("box preserves the U-class") {
    std::mt19937_64 rng(17);
    const Hypergroupoid h = pair_hqg(3);
    const auto a = random_ifs(rng, 3, 5);
    REQUIRE(check_ifsh(h, a).holds);
    const IfshFamily fam{{a, ifs_modal(a, ModalOp::kBox)}};
    CHECK(classify(fam, g(1, 2), LevelMapKind::kU).classes.size() == 1);
    const IfshFamily fam2{{a, ifs_modal(a, ModalOp::kDiamond)}};
    CHECK(classify(fam2, g(1, 2), LevelMapKind::kL).classes.size() == 1);
  }
}

TEST_CASE("classify yields a genuine partition") {
  std::mt19937_64 rng(41);
  const Hypergroupoid h = pair_hqg(3);
  IfshFamily fam;
  for (int i = 0; i < 10; ++i) fam.members.push_back(random_ifs(rng, 3, 3));
  const FamilyPartition p = classify(fam, g(1, 2), LevelMapKind::kI);
  std::vector<bool> seen(fam.members.size(), false);
  for (const auto &cls : p.classes) {
    CHECK_FALSE(cls.empty());
    for (int m : cls) {
      CHECK_FALSE(seen[m]);
      seen[m] = true;
      CHECK(p.class_of[m] == static_cast<int>(&cls - p.classes.data()));
    }
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("equal U and L cuts imply equal I cuts") {
  std::mt19937_64 rng(43);
  IfshFamily fam;
  for (int i = 0; i < 12; ++i) fam.members.push_back(random_ifs(rng, 3, 4));
  const Grade alpha = g(1, 2);
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      const bool same_u = level_map(fam.members[i], alpha, LevelMapKind::kU) ==
                          level_map(fam.members[j], alpha, LevelMapKind::kU);
      const bool same_l = level_map(fam.members[i], alpha, LevelMapKind::kL) ==
                          level_map(fam.members[j], alpha, LevelMapKind::kL);
      if (same_u && same_l)
        CHECK(level_map(fam.members[i], alpha, LevelMapKind::kI) ==
              level_map(fam.members[j], alpha, LevelMapKind::kI));
    }
}

TEST_CASE("canonical_family") {
  CHECK(canonical_family(zgroup_hqg(2)).members.size() == 3);
  CHECK(canonical_family(pair_hqg(2)).members.size() == 4);
  CHECK(canonical_family(total_hqg(2)).members.size() == 2);
  for (const Hypergroupoid &h : {zgroup_hqg(3), pair_hqg(3), block4_hqg()})
    for (const auto &m : canonical_family(h).members)
      CHECK(check_ifsh(h, m).holds);
}

TEST_CASE("level_map on the canonical family covers S(G) ∪ {∅}") {
  for (const Hypergroupoid &h : {pair_hqg(3), zgroup_hqg(4), block4_hqg()}) {
    const auto subs = enumerate_subs(h);
    const IfshFamily fam = canonical_family(h);
    for (LevelMapKind kind :
         {LevelMapKind::kU, LevelMapKind::kL, LevelMapKind::kI}) {
      std::set<std::uint32_t> images;
      for (const auto &m : fam.members)
        images.insert(level_map(m, g(1, 2), kind).bits);
      CHECK(images.size() == subs.size() + 1);
      CHECK(images.count(0) == 1);
      for (CarrierSubset k : subs) CHECK(images.count(k.bits) == 1);
    }
  }
}

TEST_CASE("verify_equipotence") {
  SUBCASE("PAIR(2) at 1/2: 4 classes everywhere") {
    const EquipotenceReport rep = verify_equipotence(pair_hqg(2), g(1, 2));
    CHECK(rep.pass);
    CHECK(rep.sub_count == 3);
    for (const auto &pr : rep.relations) CHECK(pr.class_count == 4);
  }
  SUBCASE("ZGROUP(2) at 1/2: 3 classes") {
    const EquipotenceReport rep = verify_equipotence(zgroup_hqg(2), g(1, 2));
    CHECK(rep.pass);
    for (const auto &pr : rep.relations) CHECK(pr.class_count == 3);
  }
  SUBCASE("boundary alpha is refused") {
    CHECK_THROWS_AS(verify_equipotence(zgroup_hqg(2), Grade::one()),
                    AlphaOnBoundary);
    CHECK_THROWS_AS(verify_equipotence(zgroup_hqg(2), Grade::zero()),
                    AlphaOnBoundary);
  }
}
