// Exercises the shared library through its public C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "indexcode/indexcode.h"

namespace {

struct Graph {
  ic_graph* g = nullptr;
  ~Graph() { ic_graph_free(g); }
};

struct Code {
  ic_code* c = nullptr;
  ~Code() { ic_code_free(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  ic_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ic_version()) == "1.0.0");
  CHECK(std::string(ic_status_name(IC_OK)) == "ok");
  CHECK(std::string(ic_status_name(IC_ERR_SCALE_GUARD)) == "scale guard");
}

TEST_CASE("parse, analyse and summarise a three-cycle") {
  Graph h;
  REQUIRE(ic_graph_parse("3\n1 2\n2 3\n3 1\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_OK);
  CHECK(ic_graph_vertex_count(h.g) == 3);
  CHECK(ic_graph_arc_count(h.g) == 3);
  size_t len = 0;
  REQUIRE(ic_optimal_length(h.g, &len) == IC_OK);
  CHECK(len == 2);
  char* text = nullptr;
  REQUIRE(ic_length_summary(h.g, &text) == IC_OK);
  CHECK(take(text) == "l* = 2; components: 1 (size 3); residual arcs: 0");
}

TEST_CASE("errors carry a status and a message") {
  Graph h;
  CHECK(ic_graph_parse("2\n1 1\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_ERR_VALIDATION);
  CHECK(h.g == nullptr);
  CHECK(std::string(ic_last_error()) == "self-loop at vertex 1");
  CHECK(ic_graph_parse("2\n1 2 3\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_ERR_PARSE);
  CHECK(ic_graph_parse("4\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_ERR_TRIVIAL);
  CHECK(ic_graph_parse("{\"n\":2,\"arcs\":[[1,2]]}", IC_FORMAT_JSON, &h.g) == IC_OK);
  CHECK(std::string(ic_last_error()).empty());
  Graph missing;
  CHECK(ic_graph_load("/nonexistent/graph.txt", IC_FORMAT_AUTO, &missing.g) == IC_ERR_IO);
  CHECK(ic_optimal_length(nullptr, nullptr) == IC_ERR_ARGUMENT);
}

TEST_CASE("labels survive preprocessing") {
  Graph h;
  const int32_t tails[] = {1, 4};
  const int32_t heads[] = {4, 1};
  REQUIRE(ic_graph_from_arcs(5, tails, heads, 2, &h.g) == IC_OK);
  CHECK(ic_graph_input_vertex_count(h.g) == 5);
  CHECK(ic_graph_vertex_count(h.g) == 2);
  CHECK(ic_graph_vertex_label(h.g, 0) == 1);
  CHECK(ic_graph_vertex_label(h.g, 1) == 4);
  CHECK(ic_graph_vertex_label(h.g, 2) == -1);

  Code code;
  REQUIRE(ic_code_construct(h.g, &code.c) == IC_OK);
  char* label = nullptr;
  REQUIRE(ic_code_row_label(code.c, 0, &label) == IC_OK);
  CHECK(take(label) == "x1+x4");
  size_t wants = 0;
  CHECK(ic_code_wanted_count(code.c, 4, &wants) == IC_OK);
  CHECK(wants == 1);
  CHECK(ic_code_wanted_count(code.c, 3, &wants) == IC_ERR_RANGE);
}

TEST_CASE("encode and decode round trip for every word") {
  Graph h;
  REQUIRE(ic_graph_parse("4\n1 2\n2 1\n1 3\n3 4\n4 3\n2 4\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_OK);
  Code code;
  REQUIRE(ic_code_construct(h.g, &code.c) == IC_OK);
  const size_t n = ic_code_message_count(code.c), ell = ic_code_length(code.c);
  size_t expected = 0;
  REQUIRE(ic_optimal_length(h.g, &expected) == IC_OK);
  CHECK(ell == expected);

  // wanted[r] lists messages receiver r+1 wants.
  const std::vector<std::vector<int32_t>> wanted = {{2}, {1}, {1, 4}, {2, 3}};
  int failures = 0;
  for (unsigned w = 0; w < (1U << n); ++w) {
    std::vector<uint8_t> msg(n), cw(ell);
    for (size_t i = 0; i < n; ++i) msg[i] = (w >> i) & 1U;
    REQUIRE(ic_code_encode(code.c, msg.data(), n, cw.data(), ell) == IC_OK);
    for (int32_t r = 1; r <= static_cast<int32_t>(n); ++r) {
      int32_t ids[8];
      uint8_t bits[8];
      size_t count = 0;
      REQUIRE(ic_code_decode(code.c, r, msg[static_cast<size_t>(r - 1)], cw.data(), ell, ids, bits, 8, &count) ==
              IC_OK);
      const auto& want = wanted[static_cast<size_t>(r - 1)];
      if (count != want.size()) {
        ++failures;
        continue;
      }
      for (size_t k = 0; k < count; ++k) {
        failures += ids[k] != want[k];
        failures += bits[k] != msg[static_cast<size_t>(want[k] - 1)];
      }
    }
  }
  CHECK(failures == 0);

  std::vector<uint8_t> msg(n), small(ell + 1);
  CHECK(ic_code_encode(code.c, msg.data(), n, small.data(), ell + 1) == IC_ERR_ARGUMENT);
  CHECK(ic_code_encode(code.c, msg.data(), n - 1, small.data(), ell) == IC_ERR_ARGUMENT);
  int32_t one_id;
  size_t count = 0;
  CHECK(ic_code_decode(code.c, 3, 0, small.data(), ell, &one_id, nullptr, 1, &count) == IC_ERR_ARGUMENT);
  CHECK(ic_code_decode(code.c, 3, 0, small.data(), ell, nullptr, nullptr, 0, &count) == IC_OK);
  CHECK(count == 2);
}

TEST_CASE("certificate and verification") {
  Graph h;
  REQUIRE(ic_graph_parse("5\n1 2\n2 1\n3 4\n4 3\n5 3\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_OK);
  int valid = 0;
  char* json = nullptr;
  REQUIRE(ic_certificate_json(h.g, &valid, &json) == IC_OK);
  CHECK(valid == 1);
  CHECK(take(json).find("\"claimed_length\": 3") != std::string::npos);

  ic_verdict v{};
  REQUIRE(ic_verify(h.g, nullptr, &v, nullptr) == IC_OK);
  CHECK(v.agree == 1);
  CHECK(v.claimed == 3);
  CHECK(v.certificate_length == 3);
  CHECK(v.linear_oracle == 3);
  CHECK(v.nonlinear_oracle == -2);

  ic_verify_options tight{0, 2};
  REQUIRE(ic_verify(h.g, &tight, &v, &json) == IC_OK);
  CHECK(v.agree == 0);
  CHECK(v.linear_oracle == -1);
  CHECK(take(json).find("exceeds max_l") != std::string::npos);

  ic_verify_options nonlinear{1, 0};
  CHECK(ic_verify(h.g, &nonlinear, &v, nullptr) == IC_ERR_SCALE_GUARD);
  CHECK(std::string(ic_last_error()).find("n = 5") != std::string::npos);
}

TEST_CASE("nonlinear verification on a small graph") {
  Graph h;
  REQUIRE(ic_graph_parse("3\n1 2\n2 1\n1 3\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_OK);
  ic_verify_options opts{1, 0};
  ic_verdict v{};
  REQUIRE(ic_verify(h.g, &opts, &v, nullptr) == IC_OK);
  CHECK(v.agree == 1);
  CHECK(v.nonlinear_oracle == 2);
}

TEST_CASE("report document") {
  Graph h;
  REQUIRE(ic_graph_parse("2\n1 2\n", IC_FORMAT_EDGE_LIST, &h.g) == IC_OK);
  char* json = nullptr;
  REQUIRE(ic_report_json(h.g, 0, &json) == IC_OK);
  const auto doc = take(json);
  CHECK(doc.find("indexcode.report/1") != std::string::npos);
  CHECK(doc.find("timings") == std::string::npos);
}

TEST_CASE("generator output loads back and is reproducible") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ic_generate("strongly-connected", 6, 42, &a) == IC_OK);
  REQUIRE(ic_generate("strongly-connected", 6, 42, &b) == IC_OK);
  const auto ta = take(a), tb = take(b);
  CHECK(ta == tb);

  const auto path = std::filesystem::temp_directory_path() / "indexcode_capi_test.txt";
  std::ofstream(path) << ta;
  Graph h;
  REQUIRE(ic_graph_load(path.string().c_str(), IC_FORMAT_AUTO, &h.g) == IC_OK);
  size_t len = 0;
  REQUIRE(ic_optimal_length(h.g, &len) == IC_OK);
  CHECK(len == 5);
  std::filesystem::remove(path);

  char* c = nullptr;
  CHECK(ic_generate("tree", 4, 1, &c) == IC_ERR_ARGUMENT);
  CHECK(ic_generate("general", 1, 1, &c) == IC_ERR_ARGUMENT);
}
