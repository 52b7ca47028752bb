#include <doctest.h>

#include <random>

#include "codec.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "pruning.hpp"
#include "support.hpp"

using namespace indexcode;
using testing::make_graph;

namespace {

std::vector<std::string> labels_of(const IndexCode& code) {
  const auto labels = LabelMap::identity(static_cast<int>(code.message_count));
  std::vector<std::string> out;
  for (std::size_t r = 0; r < code.length(); ++r) out.push_back(code.row_label(r, labels));
  return out;
}

// e_j lies in span(encoder rows, e_i).
bool can_recover(const IndexCode& code, Vertex receiver, Vertex message) {
  const auto n = code.message_count;
  Gf2Matrix m = code.encoder;
  m.append_row(BitVector::unit(n, static_cast<std::size_t>(receiver - 1)));
  return gf2_solve(m, BitVector::unit(n, static_cast<std::size_t>(message - 1))).has_value();
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("two-cycle code") {
  const auto g = make_graph(2, {{1, 2}, {2, 1}});
  const auto code = build_optimal_code(g);
  CHECK(code.encoder == Gf2Matrix::from_strings({"11"}));
  CHECK(labels_of(code) == std::vector<std::string>{"x1+x2"});

  // Receiver 1 wants x2 = (x1+x2) + x1.
  REQUIRE(code.decoders[0].size() == 1);
  CHECK(code.decoders[0][0].message == 2);
  CHECK(code.decoders[0][0].coefficients == BitVector::from_string("11"));

  CHECK(encode(code, BitVector::from_string("00")) == BitVector::from_string("0"));
  CHECK(encode(code, BitVector::from_string("10")) == BitVector::from_string("1"));
  CHECK(decode(code, 1, true, BitVector::from_string("1")) == BitVector::from_string("0"));
}

TEST_CASE("three-cycle chain") {
  const auto g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto code = build_optimal_code(g);
  CHECK(labels_of(code) == std::vector<std::string>{"x1+x2", "x2+x3"});
  CHECK(encode(code, BitVector::from_string("110")) == BitVector::from_string("01"));
  // Receiver 2 wants x1 only.
  CHECK(decode(code, 2, true, BitVector::from_string("01")) == BitVector::from_string("1"));
  // Receiver 3 wants x2 = x3 + (x2+x3).
  REQUIRE(code.decoders[2].size() == 1);
  CHECK(code.decoders[2][0].message == 2);
  CHECK(code.decoders[2][0].coefficients == BitVector::from_string("011"));
}

TEST_CASE("pruned request is served by the uncoded row") {
  const auto g = make_graph(3, {{1, 2}, {2, 1}, {1, 3}});
  const auto code = build_optimal_code(g);
  CHECK(labels_of(code) == std::vector<std::string>{"x1", "x2"});
  // Receiver 2 wants x1 through the pruned arc (1,2): row 0 alone.
  REQUIRE(code.decoders[1].size() == 1);
  CHECK(code.decoders[1][0].message == 1);
  CHECK(code.decoders[1][0].coefficients == BitVector::from_string("100"));
  CHECK(testing::decode_failures(g, code) == 0);
}

TEST_CASE("receiver without wants decodes nothing") {
  const auto g = make_graph(2, {{1, 2}});
  const auto code = build_optimal_code(g);
  CHECK(decode(code, 1, false, BitVector::from_string("1")).size() == 0);
  CHECK(decode(code, 2, false, BitVector::from_string("1")) == BitVector::from_string("1"));
}

TEST_CASE("argument checks") {
  const auto code = build_optimal_code(make_graph(2, {{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(encode(code, BitVector::from_string("1")), Error);
  CHECK_THROWS_AS(decode(code, 1, false, BitVector::from_string("11")), Error);
  CHECK_THROWS_AS(decode(code, 3, false, BitVector::from_string("1")), Error);
  IndexCode bare = construct_code(prune(make_graph(2, {{1, 2}, {2, 1}})));
  CHECK_THROWS_AS(decode(bare, 1, false, BitVector::from_string("1")), Error);
}

TEST_CASE("encoding is linear") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const auto g = generate_graph(GraphKind::General, n, rng());
    const auto code = build_optimal_code(g);
    for (int k = 0; k < 10; ++k) {
      BitVector a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < a.size(); ++i) {
        a.set(i, rng() & 1U);
        b.set(i, rng() & 1U);
      }
      CHECK(encode(code, a ^ b) == (encode(code, a) ^ encode(code, b)));
    }
  }
}

TEST_CASE("length equals the formula and every receiver decodes") {
  std::mt19937_64 rng(67);
  std::size_t failures = 0;
  int length_mismatch = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto g = testing::random_graph(n, 0.1 + 0.05 * static_cast<double>(rng() % 8), rng);
    if (g.arc_count() == 0) continue;
    const auto pr = prune(g);
    IndexCode code = construct_code(pr);
    length_mismatch += code.length() != optimal_codelength(pr);
    derive_decoders(g, code);
    failures += testing::decode_failures(g, code);
  }
  CHECK(length_mismatch == 0);
  CHECK(failures == 0);
}

TEST_CASE("each receiver in a component can recover the whole component") {
  std::mt19937_64 rng(71);
  int bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto g = testing::random_graph(n, 0.3, rng);
    const auto pr = prune(g);
    const auto code = construct_code(pr);
    for (const auto& c : pr.components) {
      for (Vertex i : c.vertices) {
        for (Vertex j : c.vertices) bad += !can_recover(code, i, j);
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("every pruned request stays decodable") {
  std::mt19937_64 rng(73);
  int bad = 0, removed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const auto g = testing::random_graph(n, 0.3, rng);
    const auto pr = prune(g);
    const auto code = construct_code(pr);
    for (const auto& r : pr.removed_arcs) {
      ++removed;
      bad += !can_recover(code, r.removed.head, r.removed.tail);
    }
  }
  CHECK(removed > 0);
  CHECK(bad == 0);
}

}  // TEST_SUITE
