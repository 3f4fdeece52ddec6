#include "igtn/contact_graph.hpp"

#include <algorithm>  // for sort, reverse
#include <bit>        // for countr_zero
#include <deque>      // for deque
#include <mutex>      // for unique_lock, shared_lock
#include <string>     // for string, to_string

#include "igtn/errors.hpp"

namespace igtn {

  namespace {
    // Partition labels take 4 bits each, so keys are exact for n <= 12.
    constexpr int kMaxGraphGround = 12;

    std::uint64_t vertex_key(Subset const& A, SetPartition const& P) {
      std::uint64_t key = A.mask();
      for (int x = 0; x < P.n(); ++x) {
        key |= static_cast<std::uint64_t>(P.class_of(x)) << (kMaxGraphGround + 4 * x);
      }
      return key;
    }
  }  // namespace

  std::uint64_t vertex_key(Vertex const& v) {
    if (v.A.n() > kMaxGraphGround) {
      throw InvalidArgument("vertex_key: n above " + std::to_string(kMaxGraphGround));
    }
    return vertex_key(v.A, v.P);
  }

  ////////////////////////////////////////////////////////////////////////
  // Edges
  ////////////////////////////////////////////////////////////////////////

  std::optional<LabelledEdge> edge_from(Idempotent const&   e,
                                        Subset const&       B,
                                        SetPartition const& P) {
    detail::check_same_n(B.n(), P.n(), "edge_from");
    detail::check_same_n(B.n(), e.n(), "edge_from");
    auto A = right_action(B, e);
    if (!A) {
      return std::nullopt;
    }
    auto Q = left_action(e, P);
    if (!Q) {
      return std::nullopt;
    }
    auto const& t = e.transformation();
    auto const  b = B.elements();
    int const   m = B.size();
    int const   r = P.size();

    std::vector<std::uint8_t> pi(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      pi[static_cast<std::size_t>(A->index_of(t[b[static_cast<std::size_t>(k)]]))]
          = static_cast<std::uint8_t>(k);
    }
    Subset const              im = t.image();
    std::vector<std::uint8_t> pi2(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      int const p = std::countr_zero(P.block_mask(j) & im.mask());
      pi2[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(Q->class_of(p));
    }
    return LabelledEdge{Vertex{*A, P},
                        Vertex{B, *Q},
                        e,
                        PairPerm{Permutation(std::move(pi)), Permutation(std::move(pi2))}};
  }

  std::string_view to_string(EdgePolicy p) {
    return p == EdgePolicy::all_idempotents ? "all" : "eps";
  }

  EdgePolicy edge_policy_from_string(std::string_view s) {
    if (s == "eps" || s == "rank-n-1") {
      return EdgePolicy::rank_n_minus_1;
    }
    if (s == "all") {
      return EdgePolicy::all_idempotents;
    }
    throw InvalidArgument("unknown edge policy \"" + std::string(s)
                          + "\" (expected eps or all)");
  }

  ////////////////////////////////////////////////////////////////////////
  // ContactGraph
  ////////////////////////////////////////////////////////////////////////

  ContactGraph ContactGraph::build(int         n,
                                   int         m,
                                   int         r,
                                   EdgePolicy  policy,
                                   std::size_t max_vertices) {
    validate_ground_size(n, kMaxGraphGround);
    if (m < 1 || m > n || r < 1 || r > n) {
      throw InvalidArgument("ContactGraph::build: need 1 <= m, r <= n, got m = "
                            + std::to_string(m) + ", r = " + std::to_string(r));
    }
    ContactGraph g;
    g._n      = n;
    g._m      = m;
    g._r      = r;
    g._policy = policy;

    auto const subsets    = enumerate_subsets(n, m);
    auto const partitions = enumerate_partitions(n, r);
    if (subsets.size() * partitions.size() > max_vertices) {
      throw CapExceeded("ContactGraph::build: |Λ_" + std::to_string(m) + " x I_"
                            + std::to_string(r) + "| = "
                            + std::to_string(subsets.size() * partitions.size()),
                        max_vertices);
    }
    g._vertices.reserve(subsets.size() * partitions.size());
    for (auto const& A : subsets) {
      for (auto const& P : partitions) {
        g._index.emplace(vertex_key(A, P), g._vertices.size());
        g._vertices.push_back(Vertex{A, P});
      }
    }

    if (policy == EdgePolicy::all_idempotents) {
      g._gens = all_idempotents(n);
    } else {
      g._gens = rank_n_minus_1_idempotents(n);
      if (m == n || r == n) {
        // Only the identity acts on rank-n classes.
        g._gens.push_back(Idempotent::identity(n));
      }
    }

    g._incident.resize(g._vertices.size());
    for (std::size_t w = 0; w < g._gens.size(); ++w) {
      for (std::size_t s = 0; s < g._vertices.size(); ++s) {
        // Iterate over (B, P): the edge leaves (Be, P) and enters (B, e·P).
        auto const& v    = g._vertices[s];
        auto        edge = edge_from(g._gens[w], v.A, v.P);
        if (!edge) {
          continue;
        }
        std::size_t const src = g.require_index(edge->src);
        std::size_t const dst = g.require_index(edge->dst);
        g._edges.push_back(Edge{src, dst, w, std::move(edge->label)});
      }
    }
    for (std::size_t i = 0; i < g._edges.size(); ++i) {
      auto const& e = g._edges[i];
      g._incident[e.src].push_back(Step{i, true});
      if (e.dst != e.src) {
        g._incident[e.dst].push_back(Step{i, false});
      }
    }

    g._component_of.assign(g._vertices.size(), static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < g._vertices.size(); ++s) {
      if (g._component_of[s] != static_cast<std::size_t>(-1)) {
        continue;
      }
      std::size_t const        c = g._components.size();
      std::vector<std::size_t> members{s};
      g._component_of[s] = c;
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (auto step : g._incident[members[k]]) {
          auto const t = g.step_target(step);
          if (g._component_of[t] == static_cast<std::size_t>(-1)) {
            g._component_of[t] = c;
            members.push_back(t);
          }
        }
      }
      std::sort(members.begin(), members.end());
      g._components.push_back(std::move(members));
    }
    return g;
  }

  std::optional<std::size_t> ContactGraph::index_of(Vertex const& v) const {
    if (v.A.n() != _n || v.P.n() != _n || v.A.size() != _m || v.P.size() != _r) {
      return std::nullopt;
    }
    auto it = _index.find(vertex_key(v.A, v.P));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t ContactGraph::require_index(Vertex const& v) const {
    auto i = index_of(v);
    if (!i) {
      throw InvalidArgument("not a vertex of A(D_" + std::to_string(_m) + ", D_"
                            + std::to_string(_r) + ") over n = " + std::to_string(_n));
    }
    return *i;
  }

  LabelledEdge ContactGraph::labelled_edge(std::size_t i) const {
    auto const& e = _edges.at(i);
    return LabelledEdge{_vertices[e.src], _vertices[e.dst], _gens[e.witness], e.label};
  }

  std::vector<Vertex> ContactGraph::component_of(Vertex const& v) const {
    std::vector<Vertex> out;
    for (auto i : _components[_component_of[require_index(v)]]) {
      out.push_back(_vertices[i]);
    }
    return out;
  }

  bool ContactGraph::connected(Vertex const& v, Vertex const& w) const {
    return _component_of[require_index(v)] == _component_of[require_index(w)];
  }

  std::size_t ContactGraph::step_source(Step s) const {
    auto const& e = _edges.at(s.edge);
    return s.forward ? e.src : e.dst;
  }

  std::size_t ContactGraph::step_target(Step s) const {
    auto const& e = _edges.at(s.edge);
    return s.forward ? e.dst : e.src;
  }

  PairPerm ContactGraph::walk_label(std::vector<Step> const& walk) const {
    PairPerm out = PairPerm::identity(_m, _r);
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (k > 0 && step_source(walk[k]) != step_target(walk[k - 1])) {
        throw InvalidArgument("walk_label: step " + std::to_string(k)
                              + " does not start where the previous one ends");
      }
      auto const& label = _edges.at(walk[k].edge).label;
      out               = out * (walk[k].forward ? label : label.inverse());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // VertexGroupOracle
  ////////////////////////////////////////////////////////////////////////

  VertexGroupOracle::VertexGroupOracle(ContactGraph const& g, std::size_t cap)
      : _graph(&g) {
    auto const id = PairPerm::identity(g.m(), g.r());
    _tree_label.assign(g.vertices().size(), id);
    _parent.assign(g.vertices().size(), std::nullopt);

    std::vector<bool> tree_edge(g.edges().size(), false);
    std::vector<bool> seen(g.vertices().size(), false);
    for (std::size_t c = 0; c < g.component_count(); ++c) {
      auto const&       members = g.component(c);
      std::size_t const root    = members.front();
      std::deque<std::size_t> queue{root};
      seen[root] = true;
      while (!queue.empty()) {
        auto const u = queue.front();
        queue.pop_front();
        for (auto step : g.incident(u)) {
          auto const v = g.step_target(step);
          if (seen[v]) {
            continue;
          }
          seen[v]              = true;
          tree_edge[step.edge] = true;
          _parent[v]           = step;
          auto const& lab      = g.edges()[step.edge].label;
          _tree_label[v] = _tree_label[u] * (step.forward ? lab : lab.inverse());
          queue.push_back(v);
        }
      }

      // Every non-tree edge u -> v closes the loop t_u · label · t_v^{-1}.
      std::vector<PairPerm> gens;
      PairSubgroup          W = PairSubgroup::trivial(id);
      for (auto u : members) {
        for (auto step : g.incident(u)) {
          if (!step.forward || tree_edge[step.edge]) {
            continue;
          }
          auto const& e = g.edges()[step.edge];
          PairPerm    x = _tree_label[e.src] * e.label * _tree_label[e.dst].inverse();
          if (!W.contains(x)) {
            gens.push_back(std::move(x));
            W = PairSubgroup::closure(id, gens, cap);
          }
        }
      }
      _root_groups.push_back(std::move(W));
    }
  }

  PairSubgroup VertexGroupOracle::group(std::size_t v) const {
    return conjugate(_root_groups[_graph->component_id(v)], _tree_label[v]);
  }

  std::optional<PairPerm> VertexGroupOracle::walk_label(std::size_t v,
                                                        std::size_t w) const {
    if (_graph->component_id(v) != _graph->component_id(w)) {
      return std::nullopt;
    }
    return _tree_label[v].inverse() * _tree_label[w];
  }

  std::vector<ContactGraph::Step> VertexGroupOracle::tree_path(std::size_t v) const {
    std::vector<ContactGraph::Step> path;
    while (_parent[v]) {
      path.push_back(*_parent[v]);
      v = _graph->step_source(*_parent[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closed-form route
  ////////////////////////////////////////////////////////////////////////

  PairSubgroup vertex_group_theorem(Vertex const& v) {
    detail::check_same_n(v.A.n(), v.P.n(), "vertex_group_theorem");
    int const m = v.A.size();
    int const r = v.P.size();
    if (is_stationary(v.A, v.P)) {
      return PairSubgroup::trivial(PairPerm::identity(m, r));
    }
    if (m > v.A.n() - 2 || r > v.A.n() - 2) {
      throw Unsupported("vertex_group_theorem: non-stationary pair with m = "
                        + std::to_string(m) + ", r = " + std::to_string(r)
                        + " above n - 2");
    }
    return ahom_group(v.A, v.P);
  }

  std::optional<PairPerm> coset_representative(Vertex const& v, Vertex const& w) {
    detail::check_same_n(v.A.n(), w.A.n(), "coset_representative");
    if (v.A.size() != w.A.size() || v.P.size() != w.P.size()) {
      throw SizeMismatch("coset_representative: vertices from different graphs");
    }
    if (v == w) {
      return PairPerm::identity(v.A.size(), v.P.size());
    }
    if (is_stationary(v.A, v.P) || is_stationary(w.A, w.P)) {
      return std::nullopt;
    }
    auto h = find_homeomorphism(v.A, v.P, w.A, w.P);
    if (!h) {
      return std::nullopt;
    }
    return h->label();
  }

  ////////////////////////////////////////////////////////////////////////
  // GraphCache
  ////////////////////////////////////////////////////////////////////////

  std::shared_ptr<ContactGraph const>
  GraphCache::graph(int n, int m, int r, EdgePolicy policy) {
    Key const key{n, m, r, policy};
    {
      std::shared_lock lock(_mutex);
      auto             it = _entries.find(key);
      if (it != _entries.end() && it->second.graph) {
        return it->second.graph;
      }
    }
    auto built = std::make_shared<ContactGraph const>(ContactGraph::build(n, m, r, policy));
    std::unique_lock lock(_mutex);
    auto&            entry = _entries[key];
    if (!entry.graph) {
      entry.graph = std::move(built);
    }
    return entry.graph;
  }

  std::shared_ptr<VertexGroupOracle const>
  GraphCache::oracle(int n, int m, int r, EdgePolicy policy) {
    Key const key{n, m, r, policy};
    {
      std::shared_lock lock(_mutex);
      auto             it = _entries.find(key);
      if (it != _entries.end() && it->second.oracle) {
        return it->second.oracle;
      }
    }
    auto g = graph(n, m, r, policy);
    // The oracle keeps a raw pointer into the graph, so share ownership.
    struct Owned {
      std::shared_ptr<ContactGraph const> graph;
      VertexGroupOracle                   oracle;
    };
    auto owned = std::make_shared<Owned const>(Owned{g, VertexGroupOracle(*g)});
    std::shared_ptr<VertexGroupOracle const> built(owned, &owned->oracle);
    std::unique_lock lock(_mutex);
    auto&            entry = _entries[key];
    if (!entry.oracle) {
      entry.oracle = std::move(built);
    }
    return entry.oracle;
  }

  std::shared_ptr<PairSubgroup const> GraphCache::theorem_group(Vertex const& v) {
    auto const key = std::make_pair(v.A.n(), vertex_key(v));
    {
      std::shared_lock lock(_mutex);
      auto             it = _groups.find(key);
      if (it != _groups.end()) {
        return it->second;
      }
    }
    auto             built = std::make_shared<PairSubgroup const>(vertex_group_theorem(v));
    std::unique_lock lock(_mutex);
    return _groups.try_emplace(key, std::move(built)).first->second;
  }

  std::shared_ptr<PairSubgroup const> GraphCache::vertex_group(Vertex const& v,
                                                               GroupMethod   method) {
    if (method == GroupMethod::theorem) {
      return theorem_group(v);
    }
    auto const key = std::make_tuple(v.A.n(), v.A.size(), v.P.size(), vertex_key(v));
    {
      std::shared_lock lock(_mutex);
      auto             it = _oracle_groups.find(key);
      if (it != _oracle_groups.end()) {
        return it->second;
      }
    }
    auto o     = oracle(v.A.n(), v.A.size(), v.P.size());
    auto g     = graph(v.A.n(), v.A.size(), v.P.size());
    auto built = std::make_shared<PairSubgroup const>(o->group(g->require_index(v)));
    std::unique_lock lock(_mutex);
    return _oracle_groups.try_emplace(key, std::move(built)).first->second;
  }

  std::optional<PairPerm> GraphCache::representative(Vertex const& v,
                                                     Vertex const& w,
                                                     GroupMethod   method) {
    if (method == GroupMethod::theorem) {
      return coset_representative(v, w);
    }
    auto o = oracle(v.A.n(), v.A.size(), v.P.size());
    auto g = graph(v.A.n(), v.A.size(), v.P.size());
    return o->walk_label(g->require_index(v), g->require_index(w));
  }

  GraphCache& default_graph_cache() {
    static GraphCache cache;
    return cache;
  }

}  // namespace igtn
