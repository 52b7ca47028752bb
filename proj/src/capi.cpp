#include "indexcode/indexcode.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "codec.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "pipeline.hpp"
#include "pruning.hpp"
#include "scgc.hpp"

struct ic_graph {
  indexcode::PreprocessedGraph data;
};

struct ic_code {
  indexcode::IndexCode code;
  indexcode::LabelMap labels;
};

namespace {

thread_local std::string g_last_error;

ic_status to_status(indexcode::Errc code) {
  using indexcode::Errc;
  switch (code) {
    case Errc::Parse:
      return IC_ERR_PARSE;
    case Errc::Validation:
      return IC_ERR_VALIDATION;
    case Errc::Trivial:
      return IC_ERR_TRIVIAL;
    case Errc::Range:
      return IC_ERR_RANGE;
    case Errc::ScaleGuard:
      return IC_ERR_SCALE_GUARD;
    case Errc::Argument:
      return IC_ERR_ARGUMENT;
    case Errc::Io:
      return IC_ERR_IO;
    case Errc::Internal:
      return IC_ERR_INTERNAL;
  }
  return IC_ERR_INTERNAL;
}

ic_status fail(ic_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ic_status guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return IC_OK;
  } catch (const indexcode::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw indexcode::Error(indexcode::Errc::Argument, what);
}

indexcode::Vertex internal_receiver(const indexcode::LabelMap& labels, int32_t receiver) {
  auto v = labels.to_internal(receiver);
  if (!v) {
    throw indexcode::Error(indexcode::Errc::Range,
                           "receiver " + std::to_string(receiver) + " is not a vertex of the problem");
  }
  return *v;
}

}  // namespace

extern "C" {

const char* ic_version(void) { return "1.0.0"; }

const char* ic_status_name(ic_status status) {
  switch (status) {
    case IC_OK:
      return "ok";
    case IC_ERR_PARSE:
      return "parse error";
    case IC_ERR_VALIDATION:
      return "validation error";
    case IC_ERR_TRIVIAL:
      return "trivial problem";
    case IC_ERR_RANGE:
      return "out of range";
    case IC_ERR_SCALE_GUARD:
      return "scale guard";
    case IC_ERR_ARGUMENT:
      return "invalid argument";
    case IC_ERR_IO:
      return "i/o error";
    case IC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ic_last_error(void) { return g_last_error.c_str(); }

void ic_string_free(char* s) { std::free(s); }

ic_status ic_graph_parse(const char* text, ic_format format, ic_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    require(format != IC_FORMAT_AUTO, "format must be explicit when parsing text");
    *out = nullptr;
    auto parsed = indexcode::parse_graph(
        text, format == IC_FORMAT_JSON ? indexcode::GraphFormat::Json : indexcode::GraphFormat::EdgeList);
    *out = new ic_graph{std::move(parsed)};
  });
}

ic_status ic_graph_load(const char* path, ic_format format, ic_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    indexcode::GraphFormat fmt = indexcode::format_for_path(path);
    if (format == IC_FORMAT_EDGE_LIST) fmt = indexcode::GraphFormat::EdgeList;
    if (format == IC_FORMAT_JSON) fmt = indexcode::GraphFormat::Json;
    auto parsed = indexcode::parse_graph(indexcode::read_text_file(path), fmt);
    *out = new ic_graph{std::move(parsed)};
  });
}

ic_status ic_graph_from_arcs(int32_t n, const int32_t* tails, const int32_t* heads, size_t arc_count,
                             ic_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(arc_count == 0 || (tails != nullptr && heads != nullptr), "null arc arrays");
    require(n >= 1, "vertex count must be positive");
    *out = nullptr;
    std::vector<indexcode::Arc> arcs(arc_count);
    for (size_t i = 0; i < arc_count; ++i) arcs[i] = {tails[i], heads[i]};
    auto parsed = indexcode::preprocess(indexcode::FlowGraph(n, std::move(arcs)));
    *out = new ic_graph{std::move(parsed)};
  });
}

void ic_graph_free(ic_graph* graph) { delete graph; }

size_t ic_graph_input_vertex_count(const ic_graph* graph) {
  return graph ? static_cast<size_t>(graph->data.labels.original_vertex_count()) : 0;
}

size_t ic_graph_vertex_count(const ic_graph* graph) {
  return graph ? static_cast<size_t>(graph->data.graph.vertex_count()) : 0;
}

size_t ic_graph_arc_count(const ic_graph* graph) { return graph ? graph->data.graph.arc_count() : 0; }

int32_t ic_graph_vertex_label(const ic_graph* graph, size_t index) {
  if (graph == nullptr || index >= static_cast<size_t>(graph->data.graph.vertex_count())) return -1;
  return graph->data.labels.to_original(static_cast<indexcode::Vertex>(index) + 1);
}

ic_status ic_optimal_length(const ic_graph* graph, size_t* out_length) {
  return guarded([&] {
    require(graph != nullptr && out_length != nullptr, "null argument");
    *out_length = indexcode::optimal_codelength(graph->data.graph);
  });
}

ic_status ic_length_summary(const ic_graph* graph, char** out_text) {
  return guarded([&] {
    require(graph != nullptr && out_text != nullptr, "null argument");
    *out_text = copy_string(indexcode::length_summary(indexcode::prune(graph->data.graph)));
  });
}

ic_status ic_certificate_json(const ic_graph* graph, int* out_valid, char** out_json) {
  return guarded([&] {
    require(graph != nullptr && out_json != nullptr, "null argument");
    const auto& g = graph->data.graph;
    const auto pr = indexcode::prune(g);
    const auto cert = indexcode::certificate_for(g, pr);
    const auto defect = indexcode::check_certificate(g, cert);
    if (out_valid != nullptr) *out_valid = defect.empty() ? 1 : 0;
    *out_json = copy_string(indexcode::certificate_json(cert, pr, graph->data.labels, defect).dump(2));
  });
}

ic_status ic_report_json(const ic_graph* graph, int include_timings, char** out_json) {
  return guarded([&] {
    require(graph != nullptr && out_json != nullptr, "null argument");
    const auto report = indexcode::run_pipeline(graph->data, std::nullopt);
    *out_json = copy_string(indexcode::report_json(report, include_timings != 0).dump(2));
  });
}

ic_status ic_verify(const ic_graph* graph, const ic_verify_options* options, ic_verdict* out_verdict,
                    char** out_json) {
  return guarded([&] {
    require(graph != nullptr && out_verdict != nullptr, "null argument");
    indexcode::VerifyOptions opts;
    if (options != nullptr) {
      opts.nonlinear = options->nonlinear != 0;
      if (options->max_length > 0) opts.max_length = options->max_length;
    }
    const auto v = indexcode::verify(graph->data, opts);
    out_verdict->claimed = v.claimed;
    out_verdict->certificate_length = v.certificate_length;
    out_verdict->certificate_valid = v.certificate_defect.empty() ? 1 : 0;
    out_verdict->linear_oracle = v.linear ? static_cast<int64_t>(*v.linear) : -1;
    out_verdict->nonlinear_oracle = !v.nonlinear_ran ? -2 : v.nonlinear ? static_cast<int64_t>(*v.nonlinear) : -1;
    out_verdict->agree = v.agree ? 1 : 0;
    if (out_json != nullptr) *out_json = copy_string(indexcode::verdict_json(v, graph->data).dump(2));
  });
}

ic_status ic_code_construct(const ic_graph* graph, ic_code** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new ic_code{indexcode::build_optimal_code(graph->data.graph), graph->data.labels};
  });
}

void ic_code_free(ic_code* code) { delete code; }

size_t ic_code_length(const ic_code* code) { return code ? code->code.length() : 0; }

size_t ic_code_message_count(const ic_code* code) { return code ? code->code.message_count : 0; }

ic_status ic_code_row_label(const ic_code* code, size_t row, char** out_text) {
  return guarded([&] {
    require(code != nullptr && out_text != nullptr, "null argument");
    if (row >= code->code.length()) throw indexcode::Error(indexcode::Errc::Range, "row index out of range");
    *out_text = copy_string(code->code.row_label(row, code->labels));
  });
}

ic_status ic_code_json(const ic_code* code, char** out_json) {
  return guarded([&] {
    require(code != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(indexcode::code_json(code->code, code->labels).dump(2));
  });
}

ic_status ic_code_encode(const ic_code* code, const uint8_t* message, size_t message_len, uint8_t* codeword,
                         size_t codeword_len) {
  return guarded([&] {
    require(code != nullptr, "null code");
    require(message_len == 0 || message != nullptr, "null message");
    require(codeword_len == 0 || codeword != nullptr, "null codeword buffer");
    if (codeword_len != code->code.length()) {
      throw indexcode::Error(indexcode::Errc::Argument, "codeword buffer must hold exactly " +
                                                            std::to_string(code->code.length()) + " bits");
    }
    indexcode::BitVector m(message_len);
    for (size_t i = 0; i < message_len; ++i) m.set(i, message[i] != 0);
    const auto c = indexcode::encode(code->code, m);
    for (size_t r = 0; r < codeword_len; ++r) codeword[r] = c.get(r) ? 1 : 0;
  });
}

ic_status ic_code_wanted_count(const ic_code* code, int32_t receiver, size_t* out_count) {
  return guarded([&] {
    require(code != nullptr && out_count != nullptr, "null argument");
    const auto v = internal_receiver(code->labels, receiver);
    *out_count = code->code.decoders[static_cast<size_t>(v - 1)].size();
  });
}

ic_status ic_code_decode(const ic_code* code, int32_t receiver, uint8_t own_bit, const uint8_t* codeword,
                         size_t codeword_len, int32_t* out_messages, uint8_t* out_bits, size_t capacity,
                         size_t* out_count) {
  return guarded([&] {
    require(code != nullptr && out_count != nullptr, "null argument");
    require(codeword_len == 0 || codeword != nullptr, "null codeword");
    const auto v = internal_receiver(code->labels, receiver);
    indexcode::BitVector cw(codeword_len);
    for (size_t i = 0; i < codeword_len; ++i) cw.set(i, codeword[i] != 0);
    const auto bits = indexcode::decode(code->code, v, own_bit != 0, cw);
    const auto& decoders = code->code.decoders[static_cast<size_t>(v - 1)];
    *out_count = decoders.size();
    if (decoders.size() > capacity && (out_messages != nullptr || out_bits != nullptr)) {
      throw indexcode::Error(indexcode::Errc::Argument,
                             "output capacity " + std::to_string(capacity) + " below wanted count " +
                                 std::to_string(decoders.size()));
    }
    for (size_t k = 0; k < decoders.size(); ++k) {
      if (out_messages != nullptr) out_messages[k] = code->labels.to_original(decoders[k].message);
      if (out_bits != nullptr) out_bits[k] = bits.get(k) ? 1 : 0;
    }
  });
}

ic_status ic_generate(const char* kind, int32_t n, uint64_t seed, char** out_text) {
  return guarded([&] {
    require(kind != nullptr && out_text != nullptr, "null argument");
    const auto parsed = indexcode::parse_graph_kind(kind);
    if (!parsed) {
      throw indexcode::Error(indexcode::Errc::Argument, std::string("unknown graph kind '") + kind +
                                                            "' (acyclic-od1, strongly-connected, general)");
    }
    *out_text = copy_string(indexcode::to_edge_list(indexcode::generate_graph(*parsed, n, seed)));
  });
}

}  // extern "C"
