#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "error.hpp"
#include "generate.hpp"
#include "pruning.hpp"
#include "scgc.hpp"
#include "support.hpp"

using namespace indexcode;
using testing::make_graph;

namespace {

// Replays the trace step by step and counts growth-rule violations: each
// trail starts and ends in the grown set, and its inner vertices are new.
int growth_violations(const ScgcTrace& trace) {
  int bad = 0;
  std::set<Vertex> grown(trace.initial_cycle.begin(), trace.initial_cycle.end());
  bad += grown.size() != trace.initial_cycle.size();
  for (const Trail& t : trace.trails) {
    bad += t.vertices.size() < 2;
    bad += !grown.contains(t.vertices.front());
    bad += !grown.contains(t.vertices.back());
    bad += t.is_cycle != (t.vertices.front() == t.vertices.back());
    for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) {
      bad += grown.contains(t.vertices[i]);
      grown.insert(t.vertices[i]);
    }
  }
  return bad;
}

int witness_violations(const FlowGraph& g, const LowerBoundCertificate& cert) {
  int bad = 0;
  const auto arcs = cert.witness_arcs();
  for (const Arc& a : arcs) bad += !g.has_arc(a);
  const FlowGraph w(g.vertex_count(), arcs);
  bad += w.max_out_degree() > 1;
  bad += !is_acyclic(w);
  bad += arcs.size() != cert.claimed_length;
  return bad;
}

}  // namespace

TEST_SUITE("scgc") {

TEST_CASE("two-cycle has no trails") {
  const auto t = scgc_decompose(make_graph(2, {{1, 2}, {2, 1}}));
  CHECK(t.initial_cycle == std::vector<Vertex>{1, 2});
  CHECK(t.trails.empty());
  const auto cert = reverse_prune(t);
  CHECK(cert.witness.size() == 1);
  CHECK(cert.claimed_length == 1);
}

TEST_CASE("three-cycle with a chord needs one trail") {
  const auto g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}, {1, 3}});
  const auto t = scgc_decompose(g);
  CHECK(t.trails.size() == 1);
  CHECK(t.replay() == as_subgraph(g));
  CHECK(witness_violations(g, reverse_prune(t)) == 0);
}

TEST_CASE("two-cycle extended by a path") {
  const auto g = make_graph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}});
  const auto t = scgc_decompose(g);
  CHECK(t.initial_cycle == std::vector<Vertex>{1, 2});
  REQUIRE(t.trails.size() == 1);
  CHECK(t.trails[0].vertices == std::vector<Vertex>{2, 3, 1});
  CHECK_FALSE(t.trails[0].is_cycle);
  CHECK(t.replay() == as_subgraph(g));
  const auto cert = reverse_prune(t);
  CHECK(cert.witness.size() == 2);
  CHECK(witness_violations(g, cert) == 0);
}

TEST_CASE("three-cycle witness is a path") {
  const auto g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto cert = reverse_prune(scgc_decompose(g));
  CHECK(cert.witness.size() == 2);
  CHECK(witness_violations(g, cert) == 0);
  for (const auto& w : cert.witness) CHECK(w.provenance == Provenance::InitialCycle);
}

TEST_CASE("a trail may close on its own start") {
  // 1<->2 plus 1 -> 3 -> 4 -> 1 returns to vertex 1.
  const auto g = make_graph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 1}});
  const auto t = scgc_decompose(g);
  REQUIRE(t.trails.size() == 1);
  CHECK(t.trails[0].is_cycle);
  CHECK(t.replay() == as_subgraph(g));
}

TEST_CASE("input must be strongly connected") {
  CHECK_THROWS_AS(scgc_decompose(make_graph(2, {{1, 2}})), Error);
  CHECK_THROWS_AS(scgc_decompose(make_graph(3, {{1, 2}, {2, 1}, {1, 3}})), Error);
  CHECK_THROWS_AS(scgc_decompose(Subgraph{{1}, {}}), Error);
}

TEST_CASE("decomposition and witness on generated strongly connected graphs") {
  int replay_bad = 0, growth_bad = 0, witness_bad = 0, length_bad = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const auto g = generate_graph(GraphKind::StronglyConnected, n, seed);
    const auto t = scgc_decompose(g);
    replay_bad += t.replay() != as_subgraph(g);
    growth_bad += growth_violations(t);
    const auto cert = reverse_prune(t);
    witness_bad += witness_violations(g, cert);
    length_bad += cert.claimed_length != static_cast<std::size_t>(n - 1);
  }
  CHECK(replay_bad == 0);
  CHECK(growth_bad == 0);
  CHECK(witness_bad == 0);
  CHECK(length_bad == 0);
}

TEST_CASE("certificate examples") {
  const auto c3 = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(certificate_for(c3, prune(c3)).claimed_length == 2);

  const auto arc = make_graph(2, {{1, 2}});
  const auto ca = certificate_for(arc, prune(arc));
  CHECK(ca.claimed_length == 1);
  CHECK(ca.witness_arcs() == arc.arcs());
  CHECK(ca.witness[0].provenance == Provenance::Residual);

  const auto two = make_graph(5, {{1, 2}, {2, 1}, {3, 4}, {4, 3}, {5, 3}});
  const auto ct = certificate_for(two, prune(two));
  CHECK(ct.claimed_length == 3);
  CHECK(check_certificate(two, ct).empty());
}

TEST_CASE("certificate matches the formula on random graphs") {
  std::mt19937_64 rng(8);
  int bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto g = testing::random_graph(n, 0.3, rng);
    const auto pr = prune(g);
    const auto cert = certificate_for(g, pr);
    bad += cert.claimed_length != optimal_codelength(pr);
    bad += !check_certificate(g, cert).empty();
  }
  CHECK(bad == 0);
}

TEST_CASE("tampered certificates are rejected") {
  const auto g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto good = certificate_for(g, prune(g));
  REQUIRE(check_certificate(g, good).empty());

  auto longer = good;
  longer.claimed_length = 3;
  CHECK_FALSE(check_certificate(g, longer).empty());

  auto cyclic = good;
  cyclic.witness.push_back({{3, 1}, Provenance::InitialCycle});
  cyclic.witness.push_back({{1, 2}, Provenance::InitialCycle});
  cyclic.claimed_length = cyclic.witness.size();
  CHECK_FALSE(check_certificate(g, cyclic).empty());

  auto foreign = good;
  foreign.witness[0].arc = {2, 1};
  CHECK(check_certificate(g, foreign).find("not an arc") != std::string::npos);

  const auto fan = make_graph(3, {{1, 2}, {1, 3}, {2, 1}, {3, 1}});
  LowerBoundCertificate wide{{1, 2, 3}, {{{1, 2}, Provenance::Trail}, {{1, 3}, Provenance::Trail}}, 2};
  CHECK(check_certificate(fan, wide).find("outdegree") != std::string::npos);
}

}  // TEST_SUITE
