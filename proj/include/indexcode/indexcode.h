/*
 * indexcode: optimal linear index codes for single-uniprior broadcast
 * problems.
 *
 * A problem is an information-flow graph on receivers 1..n: receiver i knows
 * message bit x_i, and an arc (i, j) says receiver j wants x_i. The library
 * computes the shortest broadcast length l*, builds an XOR code achieving it
 * with one decoder per receiver, and produces a lower-bound certificate that
 * can be checked against brute-force oracles on small inputs.
 *
 * Conventions
 *   - Every function returns ic_status; on failure ic_last_error() gives a
 *     message for the calling thread.
 *   - Handles are opaque and immutable after creation; a handle may be read
 *     from several threads at once.
 *   - Strings returned through char** are owned by the caller and released
 *     with ic_string_free().
 *   - Vertex labels passed in or out are the labels of the input file.
 *     Isolated vertices are dropped on load; message words and codewords are
 *     bit arrays (one uint8_t per bit, 0 or 1) over the remaining vertices in
 *     ascending label order.
 */
#ifndef INDEXCODE_INDEXCODE_H
#define INDEXCODE_INDEXCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef INDEXCODE_BUILDING
#    define INDEXCODE_API __declspec(dllexport)
#  else
#    define INDEXCODE_API __declspec(dllimport)
#  endif
#else
#  define INDEXCODE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ic_status {
  IC_OK = 0,
  IC_ERR_PARSE = 1,       /* malformed input text */
  IC_ERR_VALIDATION = 2,  /* self-loop, duplicate arc, cycle where none allowed */
  IC_ERR_TRIVIAL = 3,     /* no arcs: nothing to send, l* = 0 */
  IC_ERR_RANGE = 4,       /* vertex or index out of range */
  IC_ERR_SCALE_GUARD = 5, /* brute-force oracle refused the input size */
  IC_ERR_ARGUMENT = 6,    /* bad argument (null pointer, length mismatch, ...) */
  IC_ERR_IO = 7,
  IC_ERR_INTERNAL = 8
} ic_status;

typedef enum ic_format {
  IC_FORMAT_AUTO = 0, /* ic_graph_load only: ".json" selects JSON */
  IC_FORMAT_EDGE_LIST = 1,
  IC_FORMAT_JSON = 2
} ic_format;

typedef struct ic_graph ic_graph;
typedef struct ic_code ic_code;

INDEXCODE_API const char* ic_version(void);
INDEXCODE_API const char* ic_status_name(ic_status status);
/* Message for the most recent failure on this thread ("" if none). */
INDEXCODE_API const char* ic_last_error(void);
INDEXCODE_API void ic_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

INDEXCODE_API ic_status ic_graph_parse(const char* text, ic_format format, ic_graph** out);
INDEXCODE_API ic_status ic_graph_load(const char* path, ic_format format, ic_graph** out);
/* Arcs given as parallel tail/head arrays over labels 1..n. */
INDEXCODE_API ic_status ic_graph_from_arcs(int32_t n, const int32_t* tails, const int32_t* heads,
                                           size_t arc_count, ic_graph** out);
INDEXCODE_API void ic_graph_free(ic_graph* graph);

/* Vertex count of the input, before isolated vertices were dropped. */
INDEXCODE_API size_t ic_graph_input_vertex_count(const ic_graph* graph);
/* Vertex count after dropping isolated vertices; also the message count. */
INDEXCODE_API size_t ic_graph_vertex_count(const ic_graph* graph);
INDEXCODE_API size_t ic_graph_arc_count(const ic_graph* graph);
/* Input label of the index-th kept vertex (0-based), or -1 when out of range. */
INDEXCODE_API int32_t ic_graph_vertex_label(const ic_graph* graph, size_t index);

/* ---- analysis ---------------------------------------------------------- */

INDEXCODE_API ic_status ic_optimal_length(const ic_graph* graph, size_t* out_length);
/* One line: "l* = 2; components: 1 (size 3); residual arcs: 0". */
INDEXCODE_API ic_status ic_length_summary(const ic_graph* graph, char** out_text);
/* Pruning report plus lower-bound witness, as a JSON document. out_valid
 * (may be NULL) receives 1 when the witness checks out as a lower bound. */
INDEXCODE_API ic_status ic_certificate_json(const ic_graph* graph, int* out_valid, char** out_json);
/* Full pipeline report as JSON; timings are included only when asked. */
INDEXCODE_API ic_status ic_report_json(const ic_graph* graph, int include_timings, char** out_json);

typedef struct ic_verify_options {
  int nonlinear;     /* also run the unrestricted-function oracle (n <= 3) */
  size_t max_length; /* oracle search bound; 0 means the vertex count */
} ic_verify_options;

typedef struct ic_verdict {
  size_t claimed;
  size_t certificate_length;
  int certificate_valid;
  int64_t linear_oracle;    /* -1: exceeds max_length */
  int64_t nonlinear_oracle; /* -1: exceeds max_length, -2: not run */
  int agree;
} ic_verdict;

/* Compares the pruning formula, the certificate and brute-force oracles.
 * Returns IC_ERR_SCALE_GUARD without doing any work when an oracle would be
 * too large. out_json may be NULL. */
INDEXCODE_API ic_status ic_verify(const ic_graph* graph, const ic_verify_options* options,
                                  ic_verdict* out_verdict, char** out_json);

/* ---- codes ------------------------------------------------------------- */

INDEXCODE_API ic_status ic_code_construct(const ic_graph* graph, ic_code** out);
INDEXCODE_API void ic_code_free(ic_code* code);
INDEXCODE_API size_t ic_code_length(const ic_code* code);
INDEXCODE_API size_t ic_code_message_count(const ic_code* code);
/* Human form of one transmitted bit, e.g. "x1+x2". */
INDEXCODE_API ic_status ic_code_row_label(const ic_code* code, size_t row, char** out_text);
INDEXCODE_API ic_status ic_code_json(const ic_code* code, char** out_json);

INDEXCODE_API ic_status ic_code_encode(const ic_code* code, const uint8_t* message, size_t message_len,
                                       uint8_t* codeword, size_t codeword_len);
/* Number of messages `receiver` (input label) wants. */
INDEXCODE_API ic_status ic_code_wanted_count(const ic_code* code, int32_t receiver, size_t* out_count);
/* Writes the wanted message labels (ascending) and their decoded bits.
 * Either output array may be NULL; both hold `capacity` entries. */
INDEXCODE_API ic_status ic_code_decode(const ic_code* code, int32_t receiver, uint8_t own_bit,
                                       const uint8_t* codeword, size_t codeword_len, int32_t* out_messages,
                                       uint8_t* out_bits, size_t capacity, size_t* out_count);

/* ---- instance generation ----------------------------------------------- */

/* kind: "acyclic-od1", "strongly-connected" or "general". Writes an edge
 * list; identical arguments give identical text. */
INDEXCODE_API ic_status ic_generate(const char* kind, int32_t n, uint64_t seed, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* INDEXCODE_INDEXCODE_H */
