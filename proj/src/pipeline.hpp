#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codec.hpp"
#include "graph.hpp"
#include "pruning.hpp"
#include "scgc.hpp"

namespace indexcode {

// "l* = 2; components: 1 (size 3); residual arcs: 0"
std::string length_summary(const PruneResult& pr);

// Structured documents. All vertex labels are the input file's labels.
nlohmann::json prune_json(const PruneResult& pr, const LabelMap& labels);
nlohmann::json code_json(const IndexCode& code, const LabelMap& labels);
nlohmann::json certificate_json(const LowerBoundCertificate& cert, const PruneResult& pr,
                                const LabelMap& labels, const std::string& defect);

struct VerifyOptions {
  bool nonlinear = false;
  // Oracle search bound; defaults to the compacted vertex count.
  std::optional<std::size_t> max_length;
};

struct Verdict {
  std::size_t claimed = 0;
  std::size_t certificate_length = 0;
  std::string certificate_defect;  // empty when the certificate checks out
  bool linear_ran = false;
  std::optional<std::size_t> linear;  // nullopt after a run: exceeds the bound
  bool nonlinear_ran = false;
  std::optional<std::size_t> nonlinear;
  std::size_t max_length = 0;
  bool agree = false;
};

// Checks the scale guards before doing any work (Errc::ScaleGuard).
Verdict verify(const PreprocessedGraph& input, const VerifyOptions& options);
nlohmann::json verdict_json(const Verdict& v, const PreprocessedGraph& input);

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

// Everything the pipeline knows about one input.
struct RunReport {
  PreprocessedGraph input;
  PruneResult prune;
  std::size_t optimal_length = 0;
  IndexCode code;
  LowerBoundCertificate certificate;
  std::string certificate_defect;
  std::optional<Verdict> verdict;
  std::vector<StageTiming> timings;
};

RunReport run_pipeline(const PreprocessedGraph& input, const std::optional<VerifyOptions>& oracles);
nlohmann::json report_json(const RunReport& report, bool include_timings);

}  // namespace indexcode
