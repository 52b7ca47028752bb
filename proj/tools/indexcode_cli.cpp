// Command-line front end over the indexcode C API.
//
// Exit codes: 0 success / agreement, 1 input error, 2 verification
// disagreement, 3 oracle scale guard refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "indexcode/indexcode.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitScaleGuard = 3;

struct GraphDeleter {
  void operator()(ic_graph* g) const { ic_graph_free(g); }
};
struct CodeDeleter {
  void operator()(ic_code* c) const { ic_code_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { ic_string_free(s); }
};
using GraphPtr = std::unique_ptr<ic_graph, GraphDeleter>;
using CodePtr = std::unique_ptr<ic_code, CodeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(ic_status status) {
  std::cerr << "error: " << ic_last_error() << "\n";
  return status == IC_ERR_SCALE_GUARD ? kExitScaleGuard : kExitInput;
}

int load(const std::string& path, GraphPtr& out) {
  ic_graph* g = nullptr;
  const ic_status st = ic_graph_load(path.c_str(), IC_FORMAT_AUTO, &g);
  if (st != IC_OK) return report_error(st);
  out.reset(g);
  return kExitOk;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

int cmd_length(const std::string& path) {
  ic_graph* raw = nullptr;
  const ic_status st = ic_graph_load(path.c_str(), IC_FORMAT_AUTO, &raw);
  if (st == IC_ERR_TRIVIAL) {
    std::cout << "l* = 0; components: 0; residual arcs: 0 (no arcs)\n";
    return kExitOk;
  }
  if (st != IC_OK) return report_error(st);
  GraphPtr g(raw);
  char* text = nullptr;
  if (auto s = ic_length_summary(g.get(), &text); s != IC_OK) return report_error(s);
  StringPtr owned(text);
  std::cout << owned.get() << "\n";
  return kExitOk;
}

int cmd_construct(const std::string& path, const std::string& out) {
  GraphPtr g;
  if (int rc = load(path, g); rc != kExitOk) return rc;
  ic_code* raw = nullptr;
  if (auto s = ic_code_construct(g.get(), &raw); s != IC_OK) return report_error(s);
  CodePtr code(raw);
  char* json = nullptr;
  if (auto s = ic_code_json(code.get(), &json); s != IC_OK) return report_error(s);
  StringPtr doc(json);
  if (out.empty()) return write_output("", std::string(doc.get()) + "\n");

  if (int rc = write_output(out, std::string(doc.get()) + "\n"); rc != kExitOk) return rc;
  std::cout << "l = " << ic_code_length(code.get()) << "\n";
  for (size_t r = 0; r < ic_code_length(code.get()); ++r) {
    char* label = nullptr;
    if (auto s = ic_code_row_label(code.get(), r, &label); s != IC_OK) return report_error(s);
    StringPtr owned(label);
    std::cout << owned.get() << "\n";
  }
  return kExitOk;
}

int cmd_certificate(const std::string& path, const std::string& out) {
  GraphPtr g;
  if (int rc = load(path, g); rc != kExitOk) return rc;
  char* json = nullptr;
  int valid = 0;
  if (auto s = ic_certificate_json(g.get(), &valid, &json); s != IC_OK) return report_error(s);
  StringPtr doc(json);
  if (int rc = write_output(out, std::string(doc.get()) + "\n"); rc != kExitOk) return rc;
  return valid ? kExitOk : kExitDisagree;
}

int cmd_verify(const std::string& path, bool nonlinear, size_t max_l, bool as_json) {
  GraphPtr g;
  if (int rc = load(path, g); rc != kExitOk) return rc;
  ic_verify_options opts{nonlinear ? 1 : 0, max_l};
  ic_verdict v{};
  char* json = nullptr;
  if (auto s = ic_verify(g.get(), &opts, &v, &json); s != IC_OK) return report_error(s);
  StringPtr doc(json);
  if (as_json) {
    std::cout << doc.get() << "\n";
  } else {
    auto oracle = [](int64_t value) {
      return value == -1 ? std::string("exceeds max_l") : std::to_string(value);
    };
    std::cout << (v.agree ? "agree" : "disagree") << ": l* = " << v.claimed
              << "; certificate = " << v.certificate_length << (v.certificate_valid ? " (valid)" : " (INVALID)")
              << "; linear oracle = " << oracle(v.linear_oracle);
    if (v.nonlinear_oracle != -2) std::cout << "; nonlinear oracle = " << oracle(v.nonlinear_oracle);
    std::cout << "\n";
  }
  return v.agree ? kExitOk : kExitDisagree;
}

int cmd_report(const std::string& path, bool timings) {
  GraphPtr g;
  if (int rc = load(path, g); rc != kExitOk) return rc;
  char* json = nullptr;
  if (auto s = ic_report_json(g.get(), timings ? 1 : 0, &json); s != IC_OK) return report_error(s);
  StringPtr doc(json);
  std::cout << doc.get() << "\n";
  return kExitOk;
}

int cmd_generate(const std::string& kind, int n, uint64_t seed, const std::string& out) {
  char* text = nullptr;
  if (auto s = ic_generate(kind.c_str(), n, seed, &text); s != IC_OK) return report_error(s);
  StringPtr owned(text);
  return write_output(out, owned.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal index codes for single-uniprior broadcast problems"};
  app.set_version_flag("--version", std::string(ic_version()));
  app.require_subcommand(1);

  std::string file, out, kind;
  bool nonlinear = false, as_json = false, timings = false;
  size_t max_l = 0;
  int n = 0;
  uint64_t seed = 0;

  auto* length = app.add_subcommand("length", "Print the optimal codelength and decomposition summary");
  length->add_option("file", file, "Graph file (.json for structured, edge list otherwise)")->required();

  auto* construct = app.add_subcommand("construct", "Build an optimal code with per-receiver decoders");
  construct->add_option("file", file, "Graph file")->required();
  construct->add_option("-o,--out", out, "Write the code document here and print rows to stdout");

  auto* verify = app.add_subcommand("verify", "Check the optimal length against brute-force oracles");
  verify->add_option("file", file, "Graph file")->required();
  verify->add_flag("--nonlinear", nonlinear, "Also search all encoding functions (n <= 3)");
  verify->add_option("--max-l", max_l, "Oracle search bound (default: vertex count)")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Print the verdict record as JSON");

  auto* certificate = app.add_subcommand("certificate", "Print the pruning report and lower-bound witness");
  certificate->add_option("file", file, "Graph file")->required();
  certificate->add_option("-o,--out", out, "Output file");

  auto* report = app.add_subcommand("report", "Run the whole pipeline and print a JSON report");
  report->add_option("file", file, "Graph file")->required();
  report->add_flag("--timings", timings, "Include per-stage timings (output no longer reproducible)");

  auto* generate = app.add_subcommand("generate", "Write a random instance as an edge list");
  generate->add_option("--kind", kind, "acyclic-od1 | strongly-connected | general")->required();
  generate->add_option("--n", n, "Vertex count (>= 2)")->required();
  generate->add_option("--seed", seed, "Generator seed")->required();
  generate->add_option("-o,--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (*length) return cmd_length(file);
  if (*construct) return cmd_construct(file, out);
  if (*verify) return cmd_verify(file, nonlinear, max_l, as_json);
  if (*certificate) return cmd_certificate(file, out);
  if (*report) return cmd_report(file, timings);
  if (*generate) return cmd_generate(kind, n, seed, out);
  return kExitInput;
}
