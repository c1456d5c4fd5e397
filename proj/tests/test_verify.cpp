#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "centra/corpus.hpp"
#include "centra/error.hpp"
#include "centra/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace centra;

namespace {

bool has(const std::vector<CorpusEntry>& corpus, const std::string& spec) {
  return std::any_of(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.spec == spec; });
}

const GroupAnalysis& find(const std::vector<GroupAnalysis>& as, const std::string& spec) {
  const auto it = std::find_if(as.begin(), as.end(), [&](const GroupAnalysis& a) { return a.spec == spec; });
  REQUIRE(it != as.end());
  return *it;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("centra-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("canonical twists") {
  CHECK(canonical_twists(7, 2) == std::vector<std::size_t>{6});
  CHECK(canonical_twists(7, 3) == std::vector<std::size_t>{2});
  CHECK(canonical_twists(7, 6) == std::vector<std::size_t>{2, 3, 6});
  CHECK(canonical_twists(8, 2) == std::vector<std::size_t>{3, 5, 7});
  CHECK(canonical_twists(5, 3).empty());
}

TEST_CASE("corpus contents") {
  CorpusSpec spec;
  spec.max_order = 14;
  const auto c14 = generate_corpus(spec);
  for (int n = 1; n <= 14; ++n) CHECK(has(c14, "C" + std::to_string(n)));
  for (int n = 4; n <= 14; n += 2) CHECK(has(c14, "D" + std::to_string(n)));
  for (const char* s : {"Q4", "Q8", "Q12", "S3", "C3:C2(k=2)", "C7:C2(k=6)", "C2xC2", "D6xC2"})
    CHECK(has(c14, s));
  CHECK_FALSE(has(c14, "S4"));
  CHECK_FALSE(has(c14, "C2xD6"));
  CHECK(std::is_sorted(c14.begin(), c14.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.order != b.order ? a.order < b.order : a.spec < b.spec;
  }));
  std::set<std::string> unique;
  for (const auto& e : c14) unique.insert(e.spec);
  CHECK(unique.size() == c14.size());

  spec.max_order = 42;
  CHECK(has(generate_corpus(spec), "C7:C6(k=3)"));
  spec.max_order = 343;
  const auto full = generate_corpus(spec);
  CHECK(has(full, "Heis7"));
  CHECK(has(full, "D14xC5"));

  spec.max_order = 10000;
  CHECK_THROWS_AS(generate_corpus(spec), Error);
}

TEST_CASE("corpus is deterministic") {
  CorpusSpec spec;
  spec.max_order = 60;
  const auto a = generate_corpus(spec);
  const auto b = generate_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].spec == b[i].spec);
}

TEST_CASE("dedup keeps one group per isomorphism class") {
  CorpusSpec spec;
  spec.max_order = 12;
  spec.dedup = true;
  const auto c = generate_corpus(spec);
  std::map<std::size_t, std::size_t> per_order;
  for (const auto& e : c) ++per_order[e.order];
  // order 8: all five classes, with C2^3 reached as D4xC2
  CHECK(per_order[8] == 5);
  // order 12: C12, C6xC2, D12, Q12 (A4 is not a corpus family)
  CHECK(per_order[12] == 4);
  CHECK(per_order[6] == 2);
  CHECK(per_order[4] == 2);
}

TEST_CASE("analysis of the witnesses") {
  const GroupAnalysis d14 = analyze_spec("D14");
  CHECK(d14.cent_count == 9);
  CHECK(d14.quotient_class == QuotientClass::Q14_C7xC2);
  CHECK(d14.quotient_cent_count == std::size_t{9});
  REQUIRE(d14.facts.has_value());
  CHECK(proof_fact_failures(*d14.facts).empty());
  CHECK(d14.facts->quotient_frobenius);

  const GroupAnalysis h7 = analyze_spec("Heis7");
  CHECK(h7.quotient_class == QuotientClass::Q49_C7xC7);
  CHECK(h7.quotient_cent_count == std::size_t{1});
  REQUIRE(h7.facts.has_value());
  CHECK(h7.facts->quotient_seven_group);
  CHECK(proof_fact_failures(*h7.facts).empty());

  const GroupAnalysis d18 = analyze_spec("D18");
  CHECK(d18.cent_count == 11);
  CHECK_FALSE(d18.facts.has_value());

  const GroupAnalysis c5 = analyze_spec("C5");
  CHECK(c5.quotient_class == QuotientClass::ABELIAN);
  CHECK(c5.quotient_order == 1);
}

TEST_CASE("analysis JSON round trip") {
  for (const char* s : {"D14xC5", "S4", "C12", "Heis7"}) {
    const GroupAnalysis a = analyze_spec(s);
    const auto text = to_json(a).dump();
    CHECK(analysis_from_json(nlohmann::json::parse(text)) == a);
  }
}

TEST_CASE("thresholds become skips") {
  Limits tight;
  tight.clique = 10;
  const GroupAnalysis a = analyze_spec("D14xC5", tight);
  CHECK_FALSE(a.skip_reason.empty());

  CorpusSpec spec;
  spec.max_order = 42;
  RunOptions options;
  options.limits = tight;
  const auto report = verify_theorem1(spec, options);
  CHECK(report.passed());
  CHECK(report.count(Status::skipped) > 0);
  CHECK(report.exit_code() == 3);
  CHECK(report.records().size() == generate_corpus(spec).size());
}

TEST_CASE("theorem1 on a small corpus") {
  CorpusSpec spec;
  spec.max_order = 70;
  const auto report = verify_theorem1(spec);
  CHECK(report.passed());
  CHECK(report.exit_code() == 0);
  std::vector<GroupAnalysis> as;
  for (const auto& r : report.records()) as.push_back(r.analysis);
  for (const char* s : {"D14", "C7:C3(k=2)", "C7:C6(k=3)", "D14xC5"}) {
    CHECK(find(as, s).cent_count == 9);
  }
  CHECK(find(as, "D18").cent_count == 11);
}

TEST_CASE("theorem2 and small-n on a small corpus") {
  CorpusSpec spec;
  spec.max_order = 60;
  const auto t2 = verify_theorem2(spec);
  CHECK(t2.passed());
  const auto sn = verify_small_n(spec);
  CHECK(sn.passed());
  CHECK(sn.observations.contains("5"));
}

TEST_CASE("a fabricated record fails the check") {
  CorpusSpec spec;
  GroupAnalysis fake = analyze_spec("D18");
  fake.cent_count = 9;  // claims nine centralizers with quotient class OTHER
  const auto report = check_theorem1(spec, {fake});
  CHECK_FALSE(report.passed());
  REQUIRE(report.counterexamples().size() == 1);
  CHECK(report.counterexamples()[0].spec == "D18");
  CHECK(report.exit_code() == 1);
  const auto j = nlohmann::json::parse(render_report(report, ReportFormat::json));
  CHECK(j["verdict"] == "fail");
  CHECK(j["counterexamples"].size() == 1);

  GroupAnalysis three = analyze_spec("S3");
  three.cent_count = 3;
  CHECK_FALSE(check_small_n(spec, {three}).passed());

  GroupAnalysis bad_facts = analyze_spec("D14");
  bad_facts.facts->r = 7;
  CHECK_FALSE(check_theorem1(spec, {bad_facts}).passed());

  GroupAnalysis h = analyze_spec("Heis7");
  h.quotient_cent_count = 9;
  CHECK_FALSE(check_theorem2(spec, {h}).passed());
}

TEST_CASE("empty corpus passes vacuously") {
  CorpusSpec spec;
  spec.families.clear();
  const auto report = verify_theorem1(spec);
  CHECK(report.records().empty());
  CHECK(report.passed());
  const auto j = nlohmann::json::parse(render_report(report, ReportFormat::json));
  CHECK(j["verdict"] == "pass");
  CHECK(j["records"].empty());
}

TEST_CASE("report schema") {
  CorpusSpec spec;
  spec.max_order = 21;
  const auto report = verify_theorem1(spec);
  const auto j = nlohmann::json::parse(render_report(report, ReportFormat::json));
  for (const char* key : {"theorem", "corpus", "records", "verdict", "counterexamples", "version"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "pass");
  CHECK(j["corpus"]["exhaustive"] == false);

  const std::string csv = render_report(report, ReportFormat::csv);
  CHECK(csv.rfind("spec,order,cent_count,quotient_class,r,is_ca,covers,pairwise_central,verdict\n", 0) == 0);
  CHECK(csv.find("D14,14,9,Q14_C7xC2,8,true,true,true,PASS\n") != std::string::npos);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == report.records().size() + 1);
}

TEST_CASE("emit_report writes files and reports IO failures") {
  TempDir dir;
  CorpusSpec spec;
  spec.max_order = 8;
  const auto report = verify_small_n(spec);
  emit_report(report, ReportFormat::csv, dir.path / "r.csv");
  std::ifstream in(dir.path / "r.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "spec,order,cent_count,quotient_class,r,is_ca,covers,pairwise_central,verdict");
  try {
    emit_report(report, ReportFormat::json, dir.path / "missing" / "r.json");
    FAIL("write into a missing directory succeeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}

TEST_CASE("cached and fresh analyses agree") {
  TempDir dir;
  CorpusSpec spec;
  spec.max_order = 50;
  const auto corpus = generate_corpus(spec);

  RunOptions fresh;
  fresh.threads = 2;
  const auto a = analyze_corpus(corpus, fresh);

  RunOptions cached = fresh;
  cached.cache_dir = dir.path;
  const auto b = analyze_corpus(corpus, cached);  // fills the cache
  const auto c = analyze_corpus(corpus, cached);  // reads it back
  CHECK(a == b);
  CHECK(a == c);

  AnalysisCache cache(dir.path / "analysis-cache.json", Limits{});
  CHECK(cache.size() == corpus.size());
  Limits other;
  other.clique = 100;
  CHECK(AnalysisCache(dir.path / "analysis-cache.json", other).size() == 0);
}

TEST_CASE("cache directory comes from the environment") {
  ::setenv("CENTRA_CACHE_DIR", "/tmp/centra-env-test", 1);
  CHECK(AnalysisCache::default_dir() == std::filesystem::path("/tmp/centra-env-test"));
  ::unsetenv("CENTRA_CACHE_DIR");
}

TEST_CASE("thread count does not change results") {
  CorpusSpec spec;
  spec.max_order = 40;
  const auto corpus = generate_corpus(spec);
  RunOptions one;
  one.threads = 1;
  RunOptions four;
  four.threads = 4;
  CHECK(analyze_corpus(corpus, one) == analyze_corpus(corpus, four));
}
