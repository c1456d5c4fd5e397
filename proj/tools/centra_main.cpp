// centra: command-line front end for the centralizer analyses.
//
//   centra analyze  <group-spec>
//   centra classify <group-spec>
//   centra verify   theorem1|theorem2|small-n [--max-order N] [--format json|csv] [--out PATH]
//   centra corpus   list [--max-order N]
//
// Exit codes: 0 pass, 1 counterexample or runtime failure, 2 usage, 3 pass with skips.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "centra/centralizers.hpp"
#include "centra/corpus.hpp"
#include "centra/error.hpp"
#include "centra/expr.hpp"
#include "centra/iso.hpp"
#include "centra/structure.hpp"
#include "centra/verify.hpp"
#include "json.hpp"

namespace {

constexpr int kExitUsage = 2;

struct Options {
  centra::Limits limits;
  std::size_t threads = 0;
  bool no_cache = false;
  bool dedup = false;
  std::vector<std::string> families;
  std::size_t max_order = 343;
  std::string format = "json";
  std::string out;
  std::string theorem;
  std::string spec;
};

centra::CorpusSpec corpus_spec(const Options& o) {
  centra::CorpusSpec spec;
  spec.max_order = o.max_order;
  spec.dedup = o.dedup;
  if (!o.families.empty()) {
    spec.families.clear();
    for (const auto& name : o.families) {
      if (name == "products") continue;
      auto f = centra::corpus_family_from_string(name);
      if (!f) throw centra::Error(centra::Errc::InvalidParam, "unknown family '" + name + "'");
      spec.families.push_back(*f);
    }
    spec.include_products =
        std::find(o.families.begin(), o.families.end(), "products") != o.families.end();
  }
  return spec;
}

int run_analyze(const Options& o) {
  const centra::FiniteGroup g = centra::eval(o.spec, o.limits);
  nlohmann::ordered_json j;
  j["spec"] = g.name();
  j["order"] = g.order();
  j["center_order"] = centra::center(g).size();
  if (g.is_abelian()) {
    j["cent_count"] = 1;
    j["abelian"] = true;
  } else {
    const auto profile = centra::cover_profile(g, o.limits);
    auto p = nlohmann::ordered_json::parse(centra::profile_json(profile));
    for (auto it = p.begin(); it != p.end(); ++it) j[it.key()] = it.value();
  }
  j["quotient_class"] = std::string(centra::to_string(centra::classify_central_quotient(g, o.limits)));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_classify(const Options& o) {
  const centra::FiniteGroup g = centra::eval(o.spec, o.limits);
  std::cout << centra::to_string(centra::classify_central_quotient(g, o.limits)) << "\n";
  return 0;
}

int run_corpus_list(const Options& o) {
  for (const auto& e : centra::generate_corpus(corpus_spec(o), o.limits))
    std::cout << e.order << "\t" << e.spec << "\n";
  return 0;
}

int run_verify(const Options& o) {
  centra::RunOptions run;
  run.limits = o.limits;
  run.threads = o.threads;
  if (!o.no_cache) run.cache_dir = centra::AnalysisCache::default_dir();

  const auto spec = corpus_spec(o);
  std::optional<centra::VerificationReport> report;
  if (o.theorem == "theorem1") {
    report = centra::verify_theorem1(spec, run);
  } else if (o.theorem == "theorem2") {
    report = centra::verify_theorem2(spec, run);
  } else {
    report = centra::verify_small_n(spec, run);
  }

  const auto format = o.format == "csv" ? centra::ReportFormat::csv : centra::ReportFormat::json;
  if (o.out.empty()) {
    std::cout << centra::render_report(*report, format);
  } else {
    centra::emit_report(*report, format, o.out);
  }
  std::cerr << o.theorem << ": " << (report->passed() ? "pass" : "fail") << " ("
            << report->count(centra::Status::pass) << " pass, "
            << report->count(centra::Status::fail) << " fail, "
            << report->count(centra::Status::skipped) << " skipped)\n";
  return report->exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizer counts and central-quotient classification of finite groups"};
  app.set_version_flag("--version", std::string(centra::kVersion));
  app.require_subcommand(1);

  Options o;
  app.add_flag("--debug-checks", o.limits.debug_checks, "Re-verify construction shortcuts");
  app.add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--clique-limit", o.limits.clique, "Max |G/Z| for the clique search");
  app.add_option("--iso-limit", o.limits.iso, "Max order for isomorphism tests");
  app.add_option("--subgroup-limit", o.limits.subgroup_enum, "Max order for subgroup enumeration");

  auto* analyze = app.add_subcommand("analyze", "Print the centralizer profile of a group");
  analyze->add_option("spec", o.spec, "Group expression, e.g. C7:C3(k=2)xC5")->required();

  auto* classify = app.add_subcommand("classify", "Classify G/Z(G)");
  classify->add_option("spec", o.spec, "Group expression")->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem over the generated corpus");
  verify->add_option("theorem", o.theorem)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "small-n"}));
  verify->add_option("--max-order", o.max_order, "Largest group order in the corpus")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", o.out, "Write the report here instead of stdout");
  verify->add_flag("--no-cache", o.no_cache, "Ignore and do not write the analysis cache");
  verify->add_flag("--dedup", o.dedup, "Drop isomorphic duplicates (small orders only)");
  verify->add_option("--families", o.families,
                     "Subset of cyclic,dihedral,dicyclic,symmetric,heisenberg,semidirect,products")
      ->delimiter(',');

  auto* corpus = app.add_subcommand("corpus", "Corpus utilities");
  auto* list = corpus->add_subcommand("list", "Print the corpus, one group per line");
  corpus->require_subcommand(1);
  list->add_option("--max-order", o.max_order)->check(CLI::PositiveNumber);
  list->add_flag("--dedup", o.dedup);
  list->add_option("--families", o.families)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*classify) return run_classify(o);
    if (*verify) return run_verify(o);
    return run_corpus_list(o);
  } catch (const centra::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << o.spec << "\n  "
              << std::string(e.offset(), ' ') << "^\n";
    return kExitUsage;
  } catch (const centra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool bad_input = e.code() == centra::Errc::InvalidParam ||
                           e.code() == centra::Errc::InvalidTwist ||
                           e.code() == centra::Errc::ExceedsCap;
    return bad_input ? kExitUsage : 1;
  }
}
