// Command-line workbench for finite hyperquasigroups and intuitionistic
// fuzzy sub-hyperquasigroups.
//
// Exit codes: 0 = property holds / success, 1 = input is valid but the
// checked property fails (a witness is printed), 2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperq/fixtures.hpp"
#include "hyperq/fundamental.hpp"
#include "hyperq/io.hpp"
#include "hyperq/random_gen.hpp"
#include "hyperq/relations.hpp"

using namespace hyperq;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Hypergroupoid load_hqg(const std::string &path) {
  return parse_hqg(slurp(path));
}

IntuitionisticFuzzySet load_ifs(const std::string &path) {
  auto [mu, lambda] = parse_ifs(slurp(path));
  return ifs_validate(std::move(mu), std::move(lambda));
}

const char *flag(bool b) { return b ? "true" : "false"; }

int effective_limit(int cli_limit) {
  if (cli_limit > 0) return cli_limit;
  if (const char *env = std::getenv("HYPERQ_LIMIT")) return std::atoi(env);
  return kDefaultOrderLimit;
}

int cmd_check(const std::string &hqg_path) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const AxiomReport r = check_axioms(h);
  std::cout << "order: " << h.order() << "\n"
            << "hypergroupoid:   " << flag(r.is_hypergroupoid) << "\n"
            << "hyperquasigroup: " << flag(r.is_hyperquasigroup) << "\n"
            << "hypergroup:      " << flag(r.is_hypergroup) << "\n"
            << "regular:         " << flag(r.is_regular) << "\n";
  if (r.reproducibility_witness)
    std::cout << "reproducibility fails at x=" << *r.reproducibility_witness
              << "\n";
  if (r.associativity_witness) {
    const auto &w = *r.associativity_witness;
    std::cout << "associativity fails at x=" << w[0] << " y=" << w[1]
              << " z=" << w[2] << "\n";
  }
  if (r.regularity_witness) {
    const auto &w = *r.regularity_witness;
    std::cout << "regularity fails at x=" << w[0] << " y=" << w[1]
              << " z=" << w[2] << "\n";
  }
  std::cout << "RESULT: hypergroupoid=" << flag(r.is_hypergroupoid)
            << " hyperquasigroup=" << flag(r.is_hyperquasigroup)
            << " hypergroup=" << flag(r.is_hypergroup)
            << " regular=" << flag(r.is_regular) << "\n";
  return r.is_hyperquasigroup ? kExitHolds : kExitFails;
}

int cmd_subs(const std::string &hqg_path, int limit) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const auto subs = enumerate_subs(h, effective_limit(limit));
  for (CarrierSubset k : subs) std::cout << "{" << k.str() << "}\n";
  std::cout << "RESULT: count=" << subs.size() << "\n";
  return kExitHolds;
}

int cmd_ifsh_check(const std::string &hqg_path, const std::string &ifs_path,
                   const std::string &method, bool shared) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const IntuitionisticFuzzySet a = load_ifs(ifs_path);
  bool holds = true;
  std::string detail;
  if (method == "direct" || method == "both") {
    const IfshVerdict v = check_ifsh(h, a, shared);
    holds = holds && v.holds;
    if (!v.holds && detail.empty()) detail = v.detail;
  }
  if (method == "cuts" || method == "both") {
    const IfshVerdict v = check_ifsh_via_cuts(h, a);
    holds = holds && v.holds;
    if (!v.holds && detail.empty()) detail = v.detail;
  }
  if (!detail.empty()) std::cout << detail << "\n";
  std::cout << "RESULT: method=" << method << " ifsh=" << flag(holds) << "\n";
  return holds ? kExitHolds : kExitFails;
}

int cmd_cuts(const std::string &hqg_path, const std::string &ifs_path) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const IntuitionisticFuzzySet a = load_ifs(ifs_path);
  std::set<Grade> critical(a.mu.begin(), a.mu.end());
  critical.insert(a.lambda.begin(), a.lambda.end());
  critical.insert(Grade::zero());
  critical.insert(Grade::one());
  for (const Grade &t : critical) {
    const CarrierSubset up = level_cut(a.mu, t, CutKind::kUpper);
    const CarrierSubset lo = level_cut(a.lambda, t, CutKind::kLower);
    auto status = [&](CarrierSubset s) -> std::string {
      if (s.empty()) return "empty";
      return is_sub_hyperquasigroup(h, s).holds ? "sub" : "NOT-sub";
    };
    std::cout << "t=" << t.str() << "  U(mu)={" << up.str() << "} "
              << status(up) << "  L(lambda)={" << lo.str() << "} "
              << status(lo) << "\n";
  }
  const IfshVerdict v = check_ifsh_via_cuts(h, a);
  std::cout << "RESULT: ifsh=" << flag(v.holds) << "\n";
  return v.holds ? kExitHolds : kExitFails;
}

LevelChain parse_levels(const std::vector<std::string> &specs) {
  LevelChain chain;
  for (const std::string &spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw Error("--level expects <grade>:<comma-separated indices>, got " +
                  spec);
    chain.omega.push_back(Grade::parse(spec.substr(0, colon)));
    CarrierSubset k;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      k.add(std::stoi(item));
    chain.sets.push_back(k);
  }
  return chain;
}

int cmd_chain(const std::string &hqg_path,
              const std::vector<std::string> &levels) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const LevelChain chain = parse_levels(levels);
  try {
    const IntuitionisticFuzzySet a = build_from_chain(h, chain);
    std::cout << serialize_ifs(a);
    std::cout << "RESULT: ifsh=" << flag(check_ifsh(h, a).holds) << "\n";
    return kExitHolds;
  } catch (const ConstraintViolated &e) {
    // the chain hypotheses hold but the constructed pair is not an IFS
    std::cout << e.what() << "\n";
    std::cout << "RESULT: constraint=violated element=" << e.element << "\n";
    return kExitFails;
  }
}

const char *rel_name(LevelMapKind k) {
  switch (k) {
    case LevelMapKind::kU: return "U";
    case LevelMapKind::kL: return "L";
    case LevelMapKind::kI: return "R";
  }
  return "?";
}

int cmd_classify(const std::string &hqg_path, const std::string &alpha_text,
                 const std::string &rel, const std::vector<std::string> &ifs) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const Grade alpha = Grade::parse(alpha_text);
  const LevelMapKind kind = rel == "U"   ? LevelMapKind::kU
                            : rel == "L" ? LevelMapKind::kL
                                         : LevelMapKind::kI;
  IfshFamily fam;
  for (const std::string &path : ifs) {
    IntuitionisticFuzzySet a = load_ifs(path);
    if (!check_ifsh(h, a).holds)
      throw Error(path + " is not an IFSH of the given hyperquasigroup");
    fam.members.push_back(std::move(a));
  }
  const FamilyPartition p = classify(fam, alpha, kind);
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    std::cout << "class " << c << " image={" << p.images[c].str()
              << "} members:";
    for (int m : p.classes[c]) std::cout << " " << ifs[m];
    std::cout << "\n";
  }
  std::cout << "RESULT: rel=" << rel << " classes=" << p.classes.size()
            << "\n";
  return kExitHolds;
}

int cmd_equipotence(const std::string &hqg_path, const std::string &alpha_text,
                    int limit) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const EquipotenceReport rep =
      verify_equipotence(h, Grade::parse(alpha_text), effective_limit(limit));
  std::cout << "|S(G)| = " << rep.sub_count << "\n";
  for (const auto &pr : rep.relations)
    std::cout << "relation " << rel_name(pr.rel) << ": classes="
              << pr.class_count << " surjective=" << flag(pr.surjective)
              << " -> " << (pr.pass ? "pass" : "FAIL") << "\n";
  std::cout << "RESULT: equipotence=" << flag(rep.pass)
            << " classes=" << rep.relations[0].class_count
            << " subs=" << rep.sub_count << "\n";
  return rep.pass ? kExitHolds : kExitFails;
}

int cmd_fundamental(const std::string &hqg_path) {
  const Hypergroupoid h = load_hqg(hqg_path);
  try {
    const FundamentalResult fr = fundamental_quasigroup(h);
    for (std::size_t c = 0; c < fr.partition.classes.size(); ++c) {
      std::cout << "class " << c << ":";
      for (int x : fr.partition.classes[c]) std::cout << " " << x;
      std::cout << "\n";
    }
    std::cout << serialize_quasigroup(fr.quasigroup);
    std::cout << "RESULT: classes=" << fr.partition.classes.size()
              << " quasigroup=true\n";
    return kExitHolds;
  } catch (const IllDefinedProduct &e) {
    std::cout << e.what() << "\n";
    std::cout << "RESULT: quasigroup=false reason=ill-defined-product\n";
    return kExitFails;
  } catch (const NotALatinSquare &e) {
    std::cout << e.what() << "\n";
    std::cout << "RESULT: quasigroup=false reason=not-latin\n";
    return kExitFails;
  }
}

int cmd_pushforward(const std::string &hqg_path, const std::string &ifs_path) {
  const Hypergroupoid h = load_hqg(hqg_path);
  const IntuitionisticFuzzySet a = load_ifs(ifs_path);
  const auto [fr, pushed] = pushforward(h, a);
  for (std::size_t c = 0; c < fr.partition.classes.size(); ++c) {
    std::cout << "class " << c << ":";
    for (int x : fr.partition.classes[c]) std::cout << " " << x;
    std::cout << "\n";
  }
  std::cout << serialize_ifs(pushed);
  const bool holds = check_if_subquasigroup(fr.quasigroup, pushed).holds;
  // lambda on the quotient is the classwise infimum (a dual choice, the
  // mu side being the classwise supremum)
  std::cout << "RESULT: classes=" << fr.partition.classes.size()
            << " if_subquasigroup=" << flag(holds) << "\n";
  return holds ? kExitHolds : kExitFails;
}

int cmd_random(int order, std::uint64_t seed, bool regular) {
  const RandomHqgResult r = random_hyperquasigroup(order, seed, regular);
  std::cout << serialize_hqg(r.hqg);
  std::cout << "RESULT: order=" << order << " seed=" << seed
            << " attempts=" << r.attempts << "\n";
  return kExitHolds;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"workbench for finite hyperquasigroups and intuitionistic "
               "fuzzy sub-hyperquasigroups"};
  app.require_subcommand(1);
  int limit = 0;
  app.add_option("--limit", limit, "override the enumeration order cap");

  std::string hqg_path, ifs_path, alpha, rel = "U", method = "both";
  bool shared = false, regular = false;
  int order = 3;
  std::uint64_t seed = 0;
  std::vector<std::string> levels, ifs_files;

  auto *check = app.add_subcommand("check", "decide the axioms of a table");
  check->add_option("hqg", hqg_path)->required();

  auto *subs = app.add_subcommand("subs", "enumerate sub-hyperquasigroups");
  subs->add_option("hqg", hqg_path)->required();

  auto *ifsh = app.add_subcommand("ifsh-check",
                                  "decide the IFSH property of an IF set");
  ifsh->add_option("hqg", hqg_path)->required();
  ifsh->add_option("ifs", ifs_path)->required();
  ifsh->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "cuts", "both"}));
  ifsh->add_flag("--shared-witness", shared,
                 "require one witness pair for conditions 2 and 4");

  auto *cuts = app.add_subcommand("cuts", "show level cuts at critical "
                                          "thresholds");
  cuts->add_option("hqg", hqg_path)->required();
  cuts->add_option("ifs", ifs_path)->required();

  auto *chain = app.add_subcommand("chain", "build an IFSH from a chain of "
                                            "sub-hyperquasigroups");
  chain->add_option("hqg", hqg_path)->required();
  chain->add_option("--level", levels, "<grade>:<comma-separated indices>")
      ->required();

  auto *classify_cmd = app.add_subcommand("classify",
                                          "partition IF sets by level image");
  classify_cmd->add_option("hqg", hqg_path)->required();
  classify_cmd->add_option("--alpha", alpha)->required();
  classify_cmd->add_option("--rel", rel)->check(CLI::IsMember({"U", "L", "R"}));
  classify_cmd->add_option("ifs", ifs_files)->required();

  auto *equip = app.add_subcommand("equipotence",
                                   "check the quotient cardinality theorems");
  equip->add_option("hqg", hqg_path)->required();
  equip->add_option("--alpha", alpha)->required();

  auto *fund = app.add_subcommand("fundamental",
                                  "quotient by the fundamental relation");
  fund->add_option("hqg", hqg_path)->required();

  auto *push = app.add_subcommand("pushforward",
                                  "push an IF set onto the fundamental "
                                  "quasigroup");
  push->add_option("hqg", hqg_path)->required();
  push->add_option("ifs", ifs_path)->required();

  auto *rnd = app.add_subcommand("random", "emit a seeded random "
                                           "hyperquasigroup");
  rnd->add_option("--order", order)->required()->check(CLI::Range(1, 5));
  rnd->add_option("--seed", seed)->required();
  rnd->add_flag("--regular", regular, "also require regularity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (*check) return cmd_check(hqg_path);
    if (*subs) return cmd_subs(hqg_path, limit);
    if (*ifsh) return cmd_ifsh_check(hqg_path, ifs_path, method, shared);
    if (*cuts) return cmd_cuts(hqg_path, ifs_path);
    if (*chain) return cmd_chain(hqg_path, levels);
    if (*classify_cmd) return cmd_classify(hqg_path, alpha, rel, ifs_files);
    if (*equip) return cmd_equipotence(hqg_path, alpha, limit);
    if (*fund) return cmd_fundamental(hqg_path);
    if (*push) return cmd_pushforward(hqg_path, ifs_path);
    if (*rnd) return cmd_random(order, seed, regular);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
