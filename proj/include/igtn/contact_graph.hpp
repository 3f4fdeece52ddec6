// Contact graphs A(D_m, D_r) of two regular D-classes of T_n.
//
// Vertices are pairs (A, P) with |A| = m and |P| = r.  An idempotent e
// gives an edge (Be, P) -> (B, e·P) whenever ker e separates B and im e
// saturates P; the edge carries the label (π, π') with
//
//   b_{iπ} e = a_i        and        P_j e^{-1} = Q_{jπ'}.
//
// Walking an edge backwards inverts its label, and the label of a walk is
// the product of its edge labels in order.

#ifndef IGTN_CONTACT_GRAPH_HPP_
#define IGTN_CONTACT_GRAPH_HPP_

#include <compare>        // for strong_ordering
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, uint64_t
#include <map>            // for map
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <shared_mutex>   // for shared_mutex
#include <string_view>    // for string_view
#include <tuple>          // for tuple
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "combinatorics.hpp"
#include "permgroups.hpp"
#include "permutation.hpp"
#include "transformations.hpp"

namespace igtn {

  struct Vertex {
    Subset       A;
    SetPartition P;

    bool operator==(Vertex const&) const = default;
    std::strong_ordering operator<=>(Vertex const& that) const {
      if (auto c = A <=> that.A; c != 0) {
        return c;
      }
      return P <=> that.P;
    }
  };

  struct LabelledEdge {
    Vertex     src;
    Vertex     dst;
    Idempotent witness;
    PairPerm   label;
  };

  //! The edge (Be, P) -> (B, e·P), or nullopt if it does not exist.
  std::optional<LabelledEdge> edge_from(Idempotent const&   e,
                                        Subset const&       B,
                                        SetPartition const& P);

  enum class EdgePolicy {
    //! Only the ε_{ij}; enough for reachability and walk labels.
    rank_n_minus_1,
    all_idempotents
  };

  std::string_view to_string(EdgePolicy p);
  //! Accepts "eps" / "rank-n-1" and "all"; throws InvalidArgument.
  EdgePolicy edge_policy_from_string(std::string_view s);

  inline constexpr std::size_t kDefaultMaxVertices = 2'000'000;

  class ContactGraph {
   public:
    struct Edge {
      std::size_t src;
      std::size_t dst;
      //! Index into generators().
      std::size_t witness;
      PairPerm    label;
    };

    //! One step of a walk: an edge traversed forwards or backwards.
    struct Step {
      std::size_t edge;
      bool        forward = true;
    };

    //! Throws CapExceeded if the vertex set is too large and InvalidArgument
    //! unless 1 <= m, r <= n.
    static ContactGraph build(int         n,
                              int         m,
                              int         r,
                              EdgePolicy  policy = EdgePolicy::rank_n_minus_1,
                              std::size_t max_vertices = kDefaultMaxVertices);

    [[nodiscard]] int n() const noexcept {
      return _n;
    }
    [[nodiscard]] int m() const noexcept {
      return _m;
    }
    [[nodiscard]] int r() const noexcept {
      return _r;
    }
    [[nodiscard]] EdgePolicy policy() const noexcept {
      return _policy;
    }

    //! Sorted ascending.
    [[nodiscard]] std::vector<Vertex> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] Vertex const& vertex(std::size_t i) const {
      return _vertices[i];
    }
    [[nodiscard]] std::optional<std::size_t> index_of(Vertex const& v) const;
    //! Throws InvalidArgument if \p v is not a vertex.
    [[nodiscard]] std::size_t require_index(Vertex const& v) const;

    [[nodiscard]] std::vector<Idempotent> const& generators() const noexcept {
      return _gens;
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] LabelledEdge labelled_edge(std::size_t i) const;
    //! Edges at vertex i as steps leaving i, in edge order; loops appear once.
    [[nodiscard]] std::vector<Step> const& incident(std::size_t i) const {
      return _incident[i];
    }

    //! Components numbered in order of their least vertex.
    [[nodiscard]] std::size_t component_count() const noexcept {
      return _components.size();
    }
    [[nodiscard]] std::size_t component_id(std::size_t v) const {
      return _component_of[v];
    }
    //! Vertex indices, ascending.
    [[nodiscard]] std::vector<std::size_t> const& component(std::size_t c) const {
      return _components[c];
    }
    [[nodiscard]] std::vector<Vertex> component_of(Vertex const& v) const;
    [[nodiscard]] bool connected(Vertex const& v, Vertex const& w) const;

    //! Throws InvalidArgument if consecutive steps do not meet.
    [[nodiscard]] PairPerm walk_label(std::vector<Step> const& walk) const;
    [[nodiscard]] std::size_t step_source(Step s) const;
    [[nodiscard]] std::size_t step_target(Step s) const;

   private:
    int                                   _n      = 0;
    int                                   _m      = 0;
    int                                   _r      = 0;
    EdgePolicy                            _policy = EdgePolicy::rank_n_minus_1;
    std::vector<Vertex>                   _vertices;
    std::unordered_map<std::uint64_t, std::size_t> _index;
    std::vector<Idempotent>               _gens;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<Step>>        _incident;
    std::vector<std::size_t>              _component_of;
    std::vector<std::vector<std::size_t>> _components;
  };

  //! Brute-force vertex groups: a BFS spanning tree per component rooted at
  //! its least vertex, Schreier labels of all non-tree edges, and their
  //! closure at the root.  W at any other vertex v is t_v^{-1} W_root t_v
  //! where t_v is the tree-path label root -> v.
  class VertexGroupOracle {
   public:
    explicit VertexGroupOracle(ContactGraph const& g,
                               std::size_t         cap = kDefaultSubgroupCap);

    [[nodiscard]] PairSubgroup group(std::size_t v) const;
    [[nodiscard]] PairSubgroup const& root_group(std::size_t component) const {
      return _root_groups[component];
    }
    //! Label of the tree path from the root of v's component to v.
    [[nodiscard]] PairPerm const& tree_label(std::size_t v) const {
      return _tree_label[v];
    }
    //! Label of some walk v -> w, or nullopt if they are not connected.
    [[nodiscard]] std::optional<PairPerm> walk_label(std::size_t v,
                                                     std::size_t w) const;
    //! The tree path from the root of v's component to v.
    [[nodiscard]] std::vector<ContactGraph::Step> tree_path(std::size_t v) const;

   private:
    ContactGraph const*                        _graph;
    std::vector<PairPerm>                      _tree_label;
    std::vector<std::optional<ContactGraph::Step>> _parent;
    std::vector<PairSubgroup>                  _root_groups;
  };

  enum class GroupMethod { theorem, oracle };

  //! Trivial at stationary pairs, AHom(A, P) otherwise.  Throws Unsupported
  //! for non-stationary pairs with m or r above n - 2.
  PairSubgroup vertex_group_theorem(Vertex const& v);

  //! The label of a walk v -> w read off a homeomorphism, (id, id) when
  //! v = w, nullopt when no such walk exists.
  std::optional<PairPerm> coset_representative(Vertex const& v, Vertex const& w);

  //! Shared, lazily built graphs and oracles keyed by (n, m, r, policy).
  //! Safe for concurrent use.
  class GraphCache {
   public:
    std::shared_ptr<ContactGraph const> graph(int        n,
                                              int        m,
                                              int        r,
                                              EdgePolicy policy
                                              = EdgePolicy::rank_n_minus_1);
    std::shared_ptr<VertexGroupOracle const> oracle(int        n,
                                                    int        m,
                                                    int        r,
                                                    EdgePolicy policy
                                                    = EdgePolicy::rank_n_minus_1);
    //! vertex_group_theorem(v), memoised.
    std::shared_ptr<PairSubgroup const> theorem_group(Vertex const& v);

    //! W at \p v by either route; the oracle route builds the graph with
    //! the default policy.
    std::shared_ptr<PairSubgroup const> vertex_group(Vertex const& v, GroupMethod method);
    //! A walk label v -> w by either route, nullopt if none exists.
    std::optional<PairPerm> representative(Vertex const& v,
                                           Vertex const& w,
                                           GroupMethod   method);

   private:
    using Key = std::tuple<int, int, int, EdgePolicy>;
    struct Entry {
      std::shared_ptr<ContactGraph const>      graph;
      std::shared_ptr<VertexGroupOracle const> oracle;
    };
    std::shared_mutex    _mutex;
    std::map<Key, Entry> _entries;
    std::map<std::pair<int, std::uint64_t>, std::shared_ptr<PairSubgroup const>> _groups;
    std::map<std::tuple<int, int, int, std::uint64_t>, std::shared_ptr<PairSubgroup const>>
        _oracle_groups;
  };

  //! Injective for n <= 12.
  std::uint64_t vertex_key(Vertex const& v);

  GraphCache& default_graph_cache();

}  // namespace igtn

#endif  // IGTN_CONTACT_GRAPH_HPP_
