#include "centra/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "centra/centralizers.hpp"
#include "centra/error.hpp"
#include "centra/expr.hpp"
#include "centra/structure.hpp"

namespace centra {

std::vector<std::string> proof_fact_failures(const ProofFacts& f) {
  std::vector<std::string> out;
  if (f.r != 8) out.push_back("r = " + std::to_string(f.r) + ", expected 8");
  if (!f.is_ca) out.push_back("not a CA-group");
  if (!f.covers) out.push_back("proper centralizers do not cover G");
  if (!f.pairwise_central) out.push_back("some pairwise intersection differs from Z(G)");
  const auto& ix = f.indices;
  const bool indices_ok =
      ix.size() == 8 && std::all_of(ix.begin() + 1, ix.end(), [](std::size_t i) { return i == 7; }) &&
      (ix[0] == 2 || ix[0] == 3 || ix[0] == 6 || ix[0] == 7);
  if (!indices_ok) out.push_back("index multiset is not seven 7s plus one of {2,3,6,7}");
  if (!f.product_full) out.push_back("X1*X2 != G");
  if (!f.solvable) out.push_back("not solvable");
  if (!f.quotient_seven_group && !f.quotient_frobenius)
    out.push_back("G/Z is neither a 7-group nor Frobenius");
  return out;
}

GroupAnalysis analyze_group(const FiniteGroup& g, const Limits& limits) {
  GroupAnalysis a;
  a.spec = g.name();
  a.order = g.order();
  const Subgroup z = center(g);
  a.center_order = z.size();
  a.cent_count = cent_count(g);

  if (z.size() == g.order()) {
    a.quotient_class = QuotientClass::ABELIAN;
    a.quotient_order = 1;
    a.quotient_exponent = 1;
    a.quotient_abelian = true;
    return a;
  }

  try {
    // With a trivial centre the quotient is G itself.
    const FiniteGroup q = z.size() == 1 ? FiniteGroup(g) : quotient(g, z, "Z").group;
    a.quotient_order = q.order();
    a.quotient_exponent = exponent(q);
    a.quotient_abelian = q.is_abelian();
    a.quotient_class = classify_quotient(q, limits);

    if (a.cent_count == 9 || is_target_class(a.quotient_class)) {
      a.quotient_cent_count = cent_count(q);
      const CentProfile p = cover_profile(g, limits);
      ProofFacts f;
      f.r = p.r;
      f.is_ca = p.is_ca;
      f.covers = p.covers_group;
      f.pairwise_central = p.pairwise_intersections_central;
      f.indices = p.index_multiset;
      f.product_full = p.product_is_group;
      f.solvable = is_solvable(g);
      f.quotient_seven_group = prime_power_base(q.order()) == 7;
      f.quotient_frobenius = is_frobenius(q, limits).has_value();
      a.facts = std::move(f);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::ExceedsThreshold) throw;
    a.skip_reason = e.what();
  }
  return a;
}

GroupAnalysis analyze_spec(const std::string& spec, const Limits& limits) {
  return analyze_group(eval(spec, limits), limits);
}

nlohmann::ordered_json to_json(const GroupAnalysis& a) {
  nlohmann::ordered_json j;
  j["spec"] = a.spec;
  j["order"] = a.order;
  j["center_order"] = a.center_order;
  j["cent_count"] = a.cent_count;
  j["quotient_class"] = std::string(to_string(a.quotient_class));
  j["quotient_order"] = a.quotient_order;
  j["quotient_exponent"] = a.quotient_exponent;
  j["quotient_abelian"] = a.quotient_abelian;
  j["quotient_cent_count"] =
      a.quotient_cent_count ? nlohmann::ordered_json(*a.quotient_cent_count) : nullptr;
  if (a.facts) {
    const ProofFacts& f = *a.facts;
    j["properties"] = {{"r", f.r},
                       {"is_ca", f.is_ca},
                       {"covers", f.covers},
                       {"pairwise_central", f.pairwise_central},
                       {"indices", f.indices},
                       {"product_full", f.product_full},
                       {"solvable", f.solvable},
                       {"quotient_7_group", f.quotient_seven_group},
                       {"quotient_frobenius", f.quotient_frobenius}};
  } else {
    j["properties"] = nullptr;
  }
  j["skip_reason"] = a.skip_reason;
  return j;
}

GroupAnalysis analysis_from_json(const nlohmann::json& j) {
  GroupAnalysis a;
  a.spec = j.at("spec").get<std::string>();
  a.order = j.at("order").get<std::size_t>();
  a.center_order = j.at("center_order").get<std::size_t>();
  a.cent_count = j.at("cent_count").get<std::size_t>();
  const auto cls = quotient_class_from_string(j.at("quotient_class").get<std::string>());
  if (!cls) throw Error(Errc::IoError, "unknown quotient class in cached analysis");
  a.quotient_class = *cls;
  a.quotient_order = j.at("quotient_order").get<std::size_t>();
  a.quotient_exponent = j.at("quotient_exponent").get<std::size_t>();
  a.quotient_abelian = j.at("quotient_abelian").get<bool>();
  if (!j.at("quotient_cent_count").is_null())
    a.quotient_cent_count = j["quotient_cent_count"].get<std::size_t>();
  if (const auto& p = j.at("properties"); !p.is_null()) {
    ProofFacts f;
    f.r = p.at("r").get<std::size_t>();
    f.is_ca = p.at("is_ca").get<bool>();
    f.covers = p.at("covers").get<bool>();
    f.pairwise_central = p.at("pairwise_central").get<bool>();
    f.indices = p.at("indices").get<std::vector<std::size_t>>();
    f.product_full = p.at("product_full").get<bool>();
    f.solvable = p.at("solvable").get<bool>();
    f.quotient_seven_group = p.at("quotient_7_group").get<bool>();
    f.quotient_frobenius = p.at("quotient_frobenius").get<bool>();
    a.facts = std::move(f);
  }
  a.skip_reason = j.at("skip_reason").get<std::string>();
  return a;
}

// ---------------------------------------------------------------- cache

namespace {

std::string cache_key(const Limits& l) {
  std::ostringstream s;
  s << kVersion << ";cap=" << l.order_cap << ";assoc=" << l.full_assoc_check
    << ";sub=" << l.subgroup_enum << ";clique=" << l.clique << ";iso=" << l.iso
    << ";debug=" << l.debug_checks;
  return s.str();
}

}  // namespace

AnalysisCache::AnalysisCache(std::filesystem::path file, const Limits& limits)
    : file_(std::move(file)), key_(cache_key(limits)) {
  std::ifstream in(file_);
  if (!in) return;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.value("key", std::string()) != key_) return;
    for (const auto& e : j.at("entries")) {
      GroupAnalysis a = analysis_from_json(e);
      entries_.emplace(a.spec, std::move(a));
    }
  } catch (const std::exception& e) {
    // unreadable or stale cache: start empty
    entries_.clear();
  }
}

std::optional<std::filesystem::path> AnalysisCache::default_dir() {
  if (const char* dir = std::getenv("CENTRA_CACHE_DIR"); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0')
    return std::filesystem::path(xdg) / "centra";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
    return std::filesystem::path(home) / ".cache" / "centra";
  return std::nullopt;
}

const GroupAnalysis* AnalysisCache::find(const std::string& spec) const {
  const auto it = entries_.find(spec);
  return it == entries_.end() ? nullptr : &it->second;
}

void AnalysisCache::put(const GroupAnalysis& a) {
  entries_[a.spec] = a;
  dirty_ = true;
}

void AnalysisCache::save() {
  std::vector<const GroupAnalysis*> sorted;
  sorted.reserve(entries_.size());
  for (const auto& [spec, a] : entries_) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(),
            [](const GroupAnalysis* x, const GroupAnalysis* y) { return x->spec < y->spec; });
  nlohmann::ordered_json j;
  j["key"] = key_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const GroupAnalysis* a : sorted) j["entries"].push_back(to_json(*a));

  std::error_code ec;
  std::filesystem::create_directories(file_.parent_path(), ec);
  const auto tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write cache file " + tmp);
    out << j.dump();
    if (!out) throw Error(Errc::IoError, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, file_, ec);
  if (ec) throw Error(Errc::IoError, "cannot replace " + file_.string() + ": " + ec.message());
  dirty_ = false;
}

// ---------------------------------------------------------------- corpus runs

std::vector<GroupAnalysis> analyze_corpus(const std::vector<CorpusEntry>& corpus,
                                          const RunOptions& options) {
  std::optional<AnalysisCache> cache;
  if (options.cache_dir) cache.emplace(*options.cache_dir / "analysis-cache.json", options.limits);

  std::vector<GroupAnalysis> results(corpus.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (cache) {
      if (const GroupAnalysis* hit = cache->find(corpus[i].spec)) {
        results[i] = *hit;
        continue;
      }
    }
    todo.push_back(i);
  }

  std::size_t workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(todo.size(), 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t t = next++; t < todo.size(); t = next++) {
      try {
        const std::size_t i = todo[t];
        results[i] = analyze_spec(corpus[i].spec, options.limits);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = todo.size();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  if (cache && !todo.empty()) {
    for (std::size_t i : todo) cache->put(results[i]);
    try {
      cache->save();
    } catch (const Error& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  return results;
}

// ---------------------------------------------------------------- reports

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "FAIL";
}

void VerificationReport::add(Record r) {
  if (r.status == Status::fail) counterexamples_.push_back({r.analysis.spec, r.reason});
  records_.push_back(std::move(r));
}

std::size_t VerificationReport::count(Status s) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
}

int VerificationReport::exit_code() const noexcept {
  if (!passed()) return 1;
  return count(Status::skipped) > 0 ? 3 : 0;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

std::vector<GroupAnalysis> run_corpus(const CorpusSpec& spec, const RunOptions& options) {
  return analyze_corpus(generate_corpus(spec, options.limits), options);
}

}  // namespace

VerificationReport check_theorem1(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as) {
  VerificationReport report("theorem1", spec);
  for (const GroupAnalysis& a : as) {
    Record r{a, Status::pass, ""};
    if (!a.skip_reason.empty()) {
      r.status = Status::skipped;
      r.reason = a.skip_reason;
      report.add(std::move(r));
      continue;
    }
    std::vector<std::string> problems;
    const bool nine = a.cent_count == 9;
    const bool target = is_target_class(a.quotient_class);
    if (nine != target) {
      problems.push_back("cent_count " + std::to_string(a.cent_count) + " with quotient class " +
                         std::string(to_string(a.quotient_class)));
    }
    if (nine) {
      if (!a.facts) {
        problems.push_back("proof facts missing");
      } else {
        for (auto& p : proof_fact_failures(*a.facts)) problems.push_back(std::move(p));
      }
    }
    if (!problems.empty()) {
      r.status = Status::fail;
      r.reason = join(problems);
    }
    report.add(std::move(r));
  }
  return report;
}

VerificationReport check_theorem2(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as) {
  VerificationReport report("theorem2", spec);
  for (const GroupAnalysis& a : as) {
    Record r{a, Status::pass, ""};
    if (!a.skip_reason.empty()) {
      r.status = Status::skipped;
      r.reason = a.skip_reason;
      report.add(std::move(r));
      continue;
    }
    std::vector<std::string> problems;
    if (a.cent_count == 9 && !a.quotient_cent_count) problems.push_back("cent_count(G/Z) missing");
    const bool primitive = a.cent_count == 9 && a.quotient_cent_count == std::size_t{9};
    const bool expected = a.quotient_class == QuotientClass::Q14_C7xC2 ||
                          a.quotient_class == QuotientClass::Q21_C7xC3 ||
                          a.quotient_class == QuotientClass::Q42_Frob67;
    if (primitive != expected) {
      problems.push_back(std::string(primitive ? "primitive" : "not primitive") +
                         " but quotient class " + std::string(to_string(a.quotient_class)));
    }
    if (a.quotient_class == QuotientClass::Q49_C7xC7 && a.quotient_cent_count != std::size_t{1}) {
      problems.push_back("Q49 group with cent_count(G/Z) != 1");
    }
    if (!problems.empty()) {
      r.status = Status::fail;
      r.reason = join(problems);
    }
    report.add(std::move(r));
  }
  return report;
}

VerificationReport check_small_n(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as) {
  VerificationReport report("small-n", spec);
  // cent_count -> quotient description -> number of corpus groups
  std::map<std::size_t, std::map<std::string, std::size_t>> seen;
  for (const GroupAnalysis& a : as) {
    Record r{a, Status::pass, ""};
    if (a.cent_count == 2 || a.cent_count == 3) {
      r.status = Status::fail;
      r.reason = "group with " + std::to_string(a.cent_count) + " distinct centralizers";
    }
    if (a.cent_count >= 4 && a.cent_count <= 8) {
      const std::string desc = "|G/Z|=" + std::to_string(a.quotient_order) +
                               " exponent=" + std::to_string(a.quotient_exponent) +
                               (a.quotient_abelian ? " abelian" : " nonabelian");
      ++seen[a.cent_count][desc];
    }
    report.add(std::move(r));
  }
  for (const auto& [n, descs] : seen) {
    auto& slot = report.observations[std::to_string(n)];
    for (const auto& [desc, count] : descs) slot[desc] = count;
  }
  return report;
}

VerificationReport verify_theorem1(const CorpusSpec& spec, const RunOptions& options) {
  return check_theorem1(spec, run_corpus(spec, options));
}

VerificationReport verify_theorem2(const CorpusSpec& spec, const RunOptions& options) {
  return check_theorem2(spec, run_corpus(spec, options));
}

VerificationReport verify_small_n(const CorpusSpec& spec, const RunOptions& options) {
  return check_small_n(spec, run_corpus(spec, options));
}

namespace {

std::vector<const Record*> sorted_records(const VerificationReport& report) {
  std::vector<const Record*> out;
  for (const Record& r : report.records()) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const Record* a, const Record* b) {
    if (a->analysis.order != b->analysis.order) return a->analysis.order < b->analysis.order;
    return a->analysis.spec < b->analysis.spec;
  });
  return out;
}

std::string render_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem();
  const CorpusSpec& c = report.corpus();
  std::vector<std::string> families;
  for (auto f : c.families) families.emplace_back(to_string(f));
  j["corpus"] = {{"max_order", c.max_order},
                 {"families", families},
                 {"include_products", c.include_products},
                 {"dedup", c.dedup},
                 {"group_count", report.records().size()},
                 {"exhaustive", false},
                 {"note",
                  "family-generated corpus (cyclic, dihedral, dicyclic, symmetric, heisenberg, "
                  "cyclic semidirect products and pairwise direct products); not exhaustive over "
                  "isomorphism classes"}};
  j["verdict"] = report.passed() ? "pass" : "fail";
  j["summary"] = {{"pass", report.count(Status::pass)},
                  {"fail", report.count(Status::fail)},
                  {"skipped", report.count(Status::skipped)}};
  j["records"] = nlohmann::ordered_json::array();
  for (const Record* r : sorted_records(report)) {
    auto rec = to_json(r->analysis);
    rec.erase("skip_reason");
    rec["status"] = std::string(to_string(r->status));
    rec["reason"] = r->reason;
    j["records"].push_back(std::move(rec));
  }
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const Counterexample& c : report.counterexamples())
    j["counterexamples"].push_back({{"spec", c.spec}, {"reason", c.reason}});
  if (!report.observations.empty()) j["observations"] = report.observations;
  j["version"] = "centra " + std::string(kVersion);
  return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::string out = "spec,order,cent_count,quotient_class,r,is_ca,covers,pairwise_central,verdict\n";
  const auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  for (const Record* r : sorted_records(report)) {
    const GroupAnalysis& a = r->analysis;
    out += a.spec + "," + std::to_string(a.order) + "," + std::to_string(a.cent_count) + "," +
           std::string(to_string(a.quotient_class)) + ",";
    if (a.facts) {
      out += std::to_string(a.facts->r) + "," + flag(a.facts->is_ca) + "," + flag(a.facts->covers) +
             "," + flag(a.facts->pairwise_central);
    } else {
      out += ",,,";
    }
    out += "," + std::string(to_string(r->status)) + "\n";
  }
  return out;
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::json ? render_json(report) : render_csv(report);
}

void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  out << render_report(report, format);
  if (!out) throw Error(Errc::IoError, "write to " + path.string() + " failed");
}

}  // namespace centra
