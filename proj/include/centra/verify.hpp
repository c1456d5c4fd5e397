#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/config.hpp"
#include "centra/corpus.hpp"
#include "centra/group.hpp"
#include "centra/iso.hpp"
#include "json.hpp"

namespace centra {

/// Structural facts checked on every 9-centralizer group.
struct ProofFacts {
  std::size_t r = 0;
  bool is_ca = false;
  bool covers = false;
  bool pairwise_central = false;
  std::vector<std::size_t> indices;
  bool product_full = false;
  bool solvable = false;
  bool quotient_seven_group = false;
  bool quotient_frobenius = false;

  friend bool operator==(const ProofFacts&, const ProofFacts&) = default;
};

/// Human-readable list of the facts that do not hold (empty when all do).
std::vector<std::string> proof_fact_failures(const ProofFacts& facts);

/// Everything the three verifiers need to know about one group.
struct GroupAnalysis {
  std::string spec;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t cent_count = 0;
  QuotientClass quotient_class = QuotientClass::OTHER;
  std::size_t quotient_order = 0;
  std::size_t quotient_exponent = 0;
  bool quotient_abelian = false;
  // Only computed when cent_count = 9 or the class is one of the four targets.
  std::optional<std::size_t> quotient_cent_count;
  std::optional<ProofFacts> facts;
  // Set when a size threshold stopped the analysis.
  std::string skip_reason;

  friend bool operator==(const GroupAnalysis&, const GroupAnalysis&) = default;
};

GroupAnalysis analyze_group(const FiniteGroup& g, const Limits& limits = {});
GroupAnalysis analyze_spec(const std::string& spec, const Limits& limits = {});

nlohmann::ordered_json to_json(const GroupAnalysis& a);
GroupAnalysis analysis_from_json(const nlohmann::json& j);

/// Per-group analysis cache stored as one JSON file. The file records the
/// tool version and the limits; either changing discards every entry.
class AnalysisCache {
 public:
  AnalysisCache(std::filesystem::path file, const Limits& limits);

  /// CENTRA_CACHE_DIR, else $XDG_CACHE_HOME/centra, else $HOME/.cache/centra.
  static std::optional<std::filesystem::path> default_dir();

  const GroupAnalysis* find(const std::string& spec) const;
  void put(const GroupAnalysis& a);
  std::size_t size() const noexcept { return entries_.size(); }
  bool dirty() const noexcept { return dirty_; }

  /// Writes atomically (temp file + rename); throws IoError.
  void save();

 private:
  std::filesystem::path file_;
  std::string key_;
  std::unordered_map<std::string, GroupAnalysis> entries_;
  bool dirty_ = false;
};

struct RunOptions {
  Limits limits;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::optional<std::filesystem::path> cache_dir;
};

/// Analyses every entry on a worker pool; the result is in corpus order
/// regardless of completion order.
std::vector<GroupAnalysis> analyze_corpus(const std::vector<CorpusEntry>& corpus,
                                          const RunOptions& options);

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct Record {
  GroupAnalysis analysis;
  Status status = Status::pass;
  std::string reason;
};

struct Counterexample {
  std::string spec;
  std::string reason;
};

class VerificationReport {
 public:
  VerificationReport(std::string theorem, CorpusSpec corpus)
      : theorem_(std::move(theorem)), corpus_(std::move(corpus)) {}

  /// FAIL records are also listed as counterexamples.
  void add(Record r);

  const std::string& theorem() const noexcept { return theorem_; }
  const CorpusSpec& corpus() const noexcept { return corpus_; }
  const std::vector<Record>& records() const noexcept { return records_; }
  const std::vector<Counterexample>& counterexamples() const noexcept { return counterexamples_; }

  bool passed() const noexcept { return counterexamples_.empty(); }
  std::size_t count(Status s) const noexcept;

  /// 0 pass, 1 counterexamples, 3 pass with skipped groups.
  int exit_code() const noexcept;

  /// Informational, not part of the verdict.
  nlohmann::ordered_json observations = nlohmann::ordered_json::object();

 private:
  std::string theorem_;
  CorpusSpec corpus_;
  std::vector<Record> records_;
  std::vector<Counterexample> counterexamples_;
};

/// cent_count = 9 iff G/Z is one of the four target classes, plus the proof
/// facts for every 9-centralizer group.
VerificationReport verify_theorem1(const CorpusSpec& spec, const RunOptions& options = {});

/// Primitive (|Cent(G)| = |Cent(G/Z)| = 9) iff G/Z is Q14, Q21 or Q42.
VerificationReport verify_theorem2(const CorpusSpec& spec, const RunOptions& options = {});

/// No group has 2 or 3 distinct centralizers; tabulates n = 4..8.
VerificationReport verify_small_n(const CorpusSpec& spec, const RunOptions& options = {});

// The same checks on precomputed analyses.
VerificationReport check_theorem1(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as);
VerificationReport check_theorem2(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as);
VerificationReport check_small_n(const CorpusSpec& spec, const std::vector<GroupAnalysis>& as);

enum class ReportFormat { json, csv };

/// Records sorted by (order, spec); byte-stable for a fixed corpus and version.
std::string render_report(const VerificationReport& report, ReportFormat format);

/// Throws IoError.
void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace centra
