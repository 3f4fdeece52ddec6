#include "doctest.h"

#include <deque>
#include <map>
#include <random>
#include <set>

#include "igtn/contact_graph.hpp"
#include "igtn/errors.hpp"
#include "test_helpers.hpp"

using namespace igtn;
using namespace igtn::test;

namespace {
  // Closed-walk labels at v, by BFS over (vertex, label) states.
  std::set<PairPerm> closed_walk_labels(ContactGraph const& g, std::size_t v) {
    std::set<std::pair<std::size_t, PairPerm>>       seen;
    std::deque<std::pair<std::size_t, PairPerm>>     queue;
    std::vector<std::vector<std::pair<std::size_t, PairPerm>>> adj(g.vertices().size());
    for (auto const& e : g.edges()) {
      adj[e.src].emplace_back(e.dst, e.label);
      adj[e.dst].emplace_back(e.src, e.label.inverse());
    }
    queue.emplace_back(v, PairPerm::identity(g.m(), g.r()));
    seen.insert(queue.back());
    while (!queue.empty()) {
      auto [u, x] = queue.front();
      queue.pop_front();
      for (auto const& [w, l] : adj[u]) {
        std::pair<std::size_t, PairPerm> next{w, x * l};
        if (seen.insert(next).second) {
          queue.push_back(next);
        }
      }
    }
    std::set<PairPerm> out;
    for (auto const& [u, x] : seen) {
      if (u == v) {
        out.insert(x);
      }
    }
    return out;
  }

  // Vertices grouped by component id.
  std::set<std::set<std::size_t>> component_sets(ContactGraph const& g) {
    std::map<std::size_t, std::set<std::size_t>> by_id;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      by_id[g.component_id(i)].insert(i);
    }
    std::set<std::set<std::size_t>> out;
    for (auto& [id, s] : by_id) {
      out.insert(s);
    }
    return out;
  }
}  // namespace

TEST_CASE("edge from an idempotent") {
  int const  n = 4;
  auto const P = part(n, {{1, 2}, {3}, {4}});
  auto const e = edge_from(eps(1, 2, n), sub(n, {2, 3}), P);
  REQUIRE(e);
  CHECK(e->src == Vertex{sub(n, {1, 3}), P});
  CHECK(e->dst == Vertex{sub(n, {2, 3}), P});
  CHECK(e->label == PairPerm::identity(2, 3));
  // ker ε12 does not separate {1,2}.
  CHECK_FALSE(edge_from(eps(1, 2, n), sub(n, {1, 2}), P).has_value());
}

TEST_CASE("graph sizes and lookup") {
  auto const g = ContactGraph::build(4, 2, 2);
  CHECK(g.vertices().size() == 6 * 7);
  CHECK(std::is_sorted(g.vertices().begin(), g.vertices().end()));
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    CHECK(g.index_of(g.vertex(i)) == i);
  }
  CHECK_FALSE(g.index_of(Vertex{sub(4, {1}), part(4, {{1, 2}, {3, 4}})}).has_value());
  CHECK_THROWS_AS(ContactGraph::build(4, 5, 2), InvalidArgument);
}

TEST_CASE("both generator policies give the same components") {
  for (int n = 3; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int r = 1; r <= n; ++r) {
        auto const a = ContactGraph::build(n, m, r, EdgePolicy::rank_n_minus_1);
        auto const b = ContactGraph::build(n, m, r, EdgePolicy::all_idempotents);
        CHECK(a.vertices() == b.vertices());
        CHECK(component_sets(a) == component_sets(b));
      }
    }
  }
}

TEST_CASE("stationary vertices only carry loops") {
  for (auto policy : {EdgePolicy::rank_n_minus_1, EdgePolicy::all_idempotents}) {
    auto const g = ContactGraph::build(5, 2, 3, policy);
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      if (is_stationary(g.vertex(i).A, g.vertex(i).P)) {
        for (auto s : g.incident(i)) {
          CHECK(g.step_target(s) == i);
        }
      }
    }
  }
}

TEST_CASE("homeomorphic non-stationary vertices are connected") {
  auto const g = ContactGraph::build(5, 2, 3);
  for (std::size_t i = 0; i < g.vertices().size(); i += 7) {
    for (std::size_t j = 0; j < g.vertices().size(); j += 5) {
      auto const& v = g.vertex(i);
      auto const& w = g.vertex(j);
      if (i == j || is_stationary(v.A, v.P) || is_stationary(w.A, w.P)) {
        continue;
      }
      CHECK(g.connected(v, w) == (pair_type(v.A, v.P) == pair_type(w.A, w.P)));
    }
  }
}

TEST_CASE("forward walks satisfy the label equations") {
  int const       n = 5;
  auto const      g = ContactGraph::build(n, 2, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, g.vertices().size() - 1)(rng);
    std::size_t const              start = v;
    std::vector<ContactGraph::Step> walk;
    Transformation                 f = Transformation::identity(n);
    for (int k = 0; k < 4; ++k) {
      std::vector<ContactGraph::Step> fwd;
      for (auto s : g.incident(v)) {
        if (s.forward) {
          fwd.push_back(s);
        }
      }
      if (fwd.empty()) {
        break;
      }
      auto const s = fwd[std::uniform_int_distribution<std::size_t>(0, fwd.size() - 1)(rng)];
      walk.push_back(s);
      // Witnesses compose right to left.
      f = compose(g.generators()[g.edges()[s.edge].witness].transformation(), f);
      v = g.step_target(s);
    }
    if (walk.empty()) {
      continue;
    }
    auto const  x = g.walk_label(walk);
    auto const& A = g.vertex(start);
    auto const& B = g.vertex(v);
    auto const  a = A.A.elements();
    auto const  b = B.A.elements();
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(f[b[static_cast<std::size_t>(x.first[static_cast<int>(i)])]] == a[i]);
    }
    for (int j = 0; j < A.P.size(); ++j) {
      std::uint32_t pre = 0;
      for (int y = 0; y < n; ++y) {
        if ((A.P.block_mask(j) >> f[y]) & 1u) {
          pre |= 1u << y;
        }
      }
      CHECK(pre == B.P.block_mask(x.second[j]));
    }
  }
}

TEST_CASE("vertex groups") {
  int const  n = 5;
  auto const v = Vertex{sub(n, {1, 3, 5}), part(n, {{1, 3}, {2, 4}, {5}})};
  CHECK(vertex_group_theorem(v).size() == 2);
  auto& cache = default_graph_cache();
  CHECK(cache.vertex_group(v, GroupMethod::oracle)->size() == 2);
  CHECK(*cache.vertex_group(v, GroupMethod::oracle)
        == *cache.vertex_group(v, GroupMethod::theorem));

  auto const s = Vertex{sub(n, {1, 2}), part(n, {{1, 2}, {3}, {4}, {5}})};
  CHECK(vertex_group_theorem(s).size() == 1);
  CHECK(cache.vertex_group(s, GroupMethod::oracle)->size() == 1);

  CHECK_THROWS_AS(vertex_group_theorem(Vertex{sub(n, {1, 2, 3, 4}),
                                              part(n, {{1, 5}, {2}, {3}, {4}})}),
                  Unsupported);
}

TEST_CASE("vertex group oracle equals closed-walk enumeration") {
  for (auto [n, m, r] : {std::tuple{4, 1, 2}, {4, 2, 2}, {4, 2, 1}, {5, 2, 2}, {4, 3, 3}}) {
    auto const              g = ContactGraph::build(n, m, r);
    VertexGroupOracle const oracle(g);
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      auto const  W   = oracle.group(i);
      auto const  ref = closed_walk_labels(g, i);
      CHECK(std::set<PairPerm>(W.elements().begin(), W.elements().end()) == ref);
      for (auto const& x : W.elements()) {
        CHECK(ahom_group(g.vertex(i).A, g.vertex(i).P).contains(x));
      }
    }
  }
}

TEST_CASE("coset representatives agree with oracle walks") {
  auto& cache = default_graph_cache();
  auto  g     = cache.graph(5, 2, 3);
  for (std::size_t i = 0; i < g->vertices().size(); i += 3) {
    for (std::size_t j = 0; j < g->vertices().size(); j += 11) {
      auto const& v   = g->vertex(i);
      auto const& w   = g->vertex(j);
      auto const  rep = cache.representative(v, w, GroupMethod::theorem);
      auto const  orc = cache.representative(v, w, GroupMethod::oracle);
      if (is_stationary(v.A, v.P) || is_stationary(w.A, w.P)) {
        CHECK(rep.has_value() == (i == j));
        continue;
      }
      REQUIRE(rep.has_value() == orc.has_value());
      if (rep) {
        CHECK(cache.vertex_group(v, GroupMethod::oracle)->contains(*rep * orc->inverse()));
      }
    }
  }
}
