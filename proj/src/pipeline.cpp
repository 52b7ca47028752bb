#include "pipeline.hpp"

#include <chrono>

#include "error.hpp"
#include "oracle.hpp"

namespace indexcode {
namespace {

nlohmann::json arc_json(const Arc& a, const LabelMap& labels) {
  return nlohmann::json::array({labels.to_original(a.tail), labels.to_original(a.head)});
}

nlohmann::json arcs_json(const std::vector<Arc>& arcs, const LabelMap& labels) {
  auto out = nlohmann::json::array();
  for (const Arc& a : arcs) out.push_back(arc_json(a, labels));
  return out;
}

nlohmann::json vertices_json(const std::vector<Vertex>& vs, const LabelMap& labels) {
  auto out = nlohmann::json::array();
  for (Vertex v : vs) out.push_back(labels.to_original(v));
  return out;
}

nlohmann::json oracle_value(bool ran, const std::optional<std::size_t>& value) {
  if (!ran) return nullptr;
  if (!value) return "exceeds max_l";
  return *value;
}

template <typename F>
auto timed(std::vector<StageTiming>& timings, std::string stage, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  auto result = body();
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  timings.push_back({std::move(stage), took.count()});
  return result;
}

}  // namespace

std::string length_summary(const PruneResult& pr) {
  std::string out = "l* = " + std::to_string(optimal_codelength(pr)) +
                    "; components: " + std::to_string(pr.components.size());
  if (!pr.components.empty()) {
    out += pr.components.size() == 1 ? " (size " : " (sizes ";
    for (std::size_t i = 0; i < pr.components.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(pr.components[i].vertices.size());
    }
    out += ")";
  }
  out += "; residual arcs: " + std::to_string(pr.residual_arcs.size());
  return out;
}

nlohmann::json prune_json(const PruneResult& pr, const LabelMap& labels) {
  auto components = nlohmann::json::array();
  for (const Subgraph& c : pr.components) {
    components.push_back({{"vertices", vertices_json(c.vertices, labels)}, {"arcs", arcs_json(c.arcs, labels)}});
  }
  auto removed = nlohmann::json::array();
  for (const RemovedArc& r : pr.removed_arcs) {
    removed.push_back({{"arc", arc_json(r.removed, labels)}, {"kept", arc_json(r.kept, labels)}});
  }
  return {{"components", components},
          {"residual_arcs", arcs_json(pr.residual_arcs, labels)},
          {"removed_arcs", removed}};
}

nlohmann::json code_json(const IndexCode& code, const LabelMap& labels) {
  auto rows = nlohmann::json::array();
  auto row_labels = nlohmann::json::array();
  for (std::size_t r = 0; r < code.length(); ++r) {
    rows.push_back(vertices_json(code.row_vertices(r), labels));
    row_labels.push_back(code.row_label(r, labels));
  }
  auto decoders = nlohmann::json::array();
  for (std::size_t i = 0; i < code.decoders.size(); ++i) {
    if (code.decoders[i].empty()) continue;
    auto wants = nlohmann::json::array();
    for (const Decoder& d : code.decoders[i]) {
      auto bits = nlohmann::json::array();
      for (std::size_t r : d.coefficients.ones()) {
        if (r < code.length()) bits.push_back(r);
      }
      wants.push_back({{"message", labels.to_original(d.message)},
                       {"codeword_bits", bits},
                       {"own_bit", d.uses_own_bit()}});
    }
    decoders.push_back({{"receiver", labels.to_original(static_cast<Vertex>(i) + 1)}, {"wants", wants}});
  }
  std::vector<Vertex> message_order;
  for (int v = 1; v <= labels.internal_vertex_count(); ++v) message_order.push_back(v);
  return {{"schema", "indexcode.code/1"},
          {"length", code.length()},
          {"messages", vertices_json(message_order, labels)},
          {"rows", rows},
          {"row_labels", row_labels},
          {"decoders", decoders}};
}

nlohmann::json certificate_json(const LowerBoundCertificate& cert, const PruneResult& pr,
                                const LabelMap& labels, const std::string& defect) {
  auto witness = nlohmann::json::array();
  for (const WitnessArc& w : cert.witness) {
    witness.push_back({{"arc", arc_json(w.arc, labels)}, {"provenance", std::string(to_string(w.provenance))}});
  }
  nlohmann::json out = {{"schema", "indexcode.certificate/1"},
                        {"claimed_length", cert.claimed_length},
                        {"witness", witness},
                        {"prune", prune_json(pr, labels)},
                        {"valid", defect.empty()}};
  if (!defect.empty()) out["defect"] = defect;
  return out;
}

Verdict verify(const PreprocessedGraph& input, const VerifyOptions& options) {
  const auto n = static_cast<std::size_t>(input.graph.vertex_count());
  if (n > oracle::kMaxLinearMessages) {
    throw Error(Errc::ScaleGuard, "verify refuses n = " + std::to_string(n) +
                                      ": the linear oracle is limited to n <= " +
                                      std::to_string(oracle::kMaxLinearMessages));
  }
  if (options.nonlinear && n > oracle::kMaxAnyMessages) {
    throw Error(Errc::ScaleGuard, "--nonlinear refuses n = " + std::to_string(n) +
                                      ": the unrestricted oracle is limited to n <= " +
                                      std::to_string(oracle::kMaxAnyMessages));
  }

  Verdict v;
  v.max_length = options.max_length.value_or(n);
  const auto pr = prune(input.graph);
  v.claimed = optimal_codelength(pr);
  const auto cert = certificate_for(input.graph, pr);
  v.certificate_length = cert.claimed_length;
  v.certificate_defect = check_certificate(input.graph, cert);

  const auto inst = oracle::DecodabilityInstance::from_graph(input.graph);
  v.linear_ran = true;
  v.linear = oracle::min_linear_length(inst, v.max_length);
  if (options.nonlinear) {
    // For n <= 3 the optimum never exceeds n - 1 = 2, so the cap loses nothing.
    v.nonlinear_ran = true;
    v.nonlinear = oracle::min_any_length(inst, std::min(v.max_length, oracle::kMaxAnyLength));
  }
  v.agree = v.certificate_defect.empty() && v.certificate_length == v.claimed && v.linear == v.claimed &&
            (!v.nonlinear_ran || v.nonlinear == v.claimed);
  return v;
}

nlohmann::json verdict_json(const Verdict& v, const PreprocessedGraph& input) {
  return {{"schema", "indexcode.verdict/1"},
          {"graph",
           {{"n", input.labels.original_vertex_count()}, {"arcs", arcs_json(input.graph.arcs(), input.labels)}}},
          {"claimed", v.claimed},
          {"certificate_length", v.certificate_length},
          {"certificate_valid", v.certificate_defect.empty()},
          {"max_l", v.max_length},
          {"linear_oracle", oracle_value(v.linear_ran, v.linear)},
          {"nonlinear_oracle", oracle_value(v.nonlinear_ran, v.nonlinear)},
          {"agree", v.agree}};
}

RunReport run_pipeline(const PreprocessedGraph& input, const std::optional<VerifyOptions>& oracles) {
  RunReport report;
  report.input = input;
  report.prune = timed(report.timings, "prune", [&] { return prune(input.graph); });
  report.optimal_length = optimal_codelength(report.prune);
  report.code = timed(report.timings, "construct", [&] {
    IndexCode code = construct_code(report.prune);
    derive_decoders(input.graph, code);
    return code;
  });
  report.certificate =
      timed(report.timings, "certificate", [&] { return certificate_for(input.graph, report.prune); });
  report.certificate_defect = check_certificate(input.graph, report.certificate);
  if (oracles) {
    report.verdict = timed(report.timings, "oracle", [&] { return verify(input, *oracles); });
  }
  if (report.code.length() != report.optimal_length || report.certificate.claimed_length != report.optimal_length) {
    throw Error(Errc::Internal, "code length, certificate and formula disagree");
  }
  return report;
}

nlohmann::json report_json(const RunReport& report, bool include_timings) {
  const auto& labels = report.input.labels;
  // [original, compacted] pairs.
  auto label_map = nlohmann::json::array();
  for (int v = 1; v <= labels.internal_vertex_count(); ++v) {
    label_map.push_back({labels.to_original(v), v});
  }
  nlohmann::json out = {
      {"schema", "indexcode.report/1"},
      {"input",
       {{"n", labels.original_vertex_count()},
        {"n_compacted", report.input.graph.vertex_count()},
        {"arcs", report.input.graph.arc_count()},
        {"label_map", label_map}}},
      {"prune", prune_json(report.prune, labels)},
      {"optimal_length", report.optimal_length},
      {"summary", length_summary(report.prune)},
      {"code", code_json(report.code, labels)},
      {"certificate", certificate_json(report.certificate, report.prune, labels, report.certificate_defect)},
      {"verdict", report.verdict ? verdict_json(*report.verdict, report.input) : nlohmann::json(nullptr)}};
  if (include_timings) {
    auto t = nlohmann::json::array();
    for (const auto& s : report.timings) t.push_back({{"stage", s.stage}, {"ms", s.milliseconds}});
    out["timings"] = t;
  }
  return out;
}

}  // namespace indexcode
