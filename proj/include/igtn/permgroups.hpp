// Finite permutation groups inside S_m and S_m x S_r, stored as explicit
// element sets.  The degrees that occur here are at most n - 2, so plain
// enumeration is exact and fast enough; every group is materialised once
// and is immutable afterwards.

#ifndef IGTN_PERMGROUPS_HPP_
#define IGTN_PERMGROUPS_HPP_

#include <algorithm>      // for sort, unique
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <deque>          // for deque
#include <optional>       // for optional
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "combinatorics.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace igtn {

  inline constexpr std::size_t kDefaultSubgroupCap = 10'000'000;

  template <typename Element>
  class Subgroup {
   public:
    //! Breadth-first product closure of \p generators.
    static Subgroup closure(Element              identity,
                            std::vector<Element> generators,
                            std::size_t          cap = kDefaultSubgroupCap) {
      Subgroup g;
      g._identity = identity;
      for (auto& x : generators) {
        if (!(x == identity)) {
          g._gens.push_back(std::move(x));
        }
      }
      g._index.insert(identity);
      std::deque<Element> queue{identity};
      while (!queue.empty()) {
        Element x = std::move(queue.front());
        queue.pop_front();
        for (auto const& s : g._gens) {
          Element y = x * s;
          if (g._index.insert(y).second) {
            if (g._index.size() > cap) {
              throw CapExceeded("Subgroup::closure: too many elements", cap);
            }
            queue.push_back(std::move(y));
          }
        }
      }
      g._elements.assign(g._index.begin(), g._index.end());
      std::sort(g._elements.begin(), g._elements.end());
      return g;
    }

    //! \p elements must already form a group; a generating set is
    //! recovered greedily.
    static Subgroup from_elements(Element identity, std::vector<Element> elements) {
      Subgroup g;
      g._identity = identity;
      std::sort(elements.begin(), elements.end());
      elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
      g._elements = std::move(elements);
      g._index.insert(g._elements.begin(), g._elements.end());
      if (!g._index.count(identity)) {
        throw InvalidArgument("Subgroup::from_elements: identity missing");
      }
      std::unordered_set<Element, ElementHash> reached{identity};
      for (auto const& x : g._elements) {
        if (reached.count(x)) {
          continue;
        }
        g._gens.push_back(x);
        reached = closure(identity, g._gens)._index;
      }
      return g;
    }

    static Subgroup trivial(Element identity) {
      return closure(std::move(identity), {});
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] bool contains(Element const& x) const {
      return _index.count(x) != 0;
    }
    //! Sorted ascending.
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::vector<Element> const& generators() const noexcept {
      return _gens;
    }
    [[nodiscard]] Element const& identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] bool is_subset_of(Subgroup const& that) const {
      return std::all_of(_elements.begin(), _elements.end(),
                         [&that](Element const& x) { return that.contains(x); });
    }

    bool operator==(Subgroup const& that) const {
      return _elements == that._elements;
    }

   private:
    Element                                  _identity;
    std::vector<Element>                     _gens;
    std::vector<Element>                     _elements;
    std::unordered_set<Element, ElementHash> _index;
  };

  using PermSubgroup = Subgroup<Permutation>;
  using PairSubgroup = Subgroup<PairPerm>;

  //! H t.  Two representatives are interchangeable iff their quotient
  //! lies in the subgroup.
  template <typename Element>
  struct RightCoset {
    Subgroup<Element> subgroup;
    Element           representative;

    [[nodiscard]] bool contains(Element const& x) const {
      return subgroup.contains(x * representative.inverse());
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return subgroup.size();
    }
    //! Sorted ascending.
    [[nodiscard]] std::vector<Element> elements() const {
      std::vector<Element> out;
      out.reserve(subgroup.size());
      for (auto const& h : subgroup.elements()) {
        out.push_back(h * representative);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  };

  using PermCoset = RightCoset<Permutation>;

  //! x^{-1} H x, elementwise.
  template <typename Element>
  Subgroup<Element> conjugate(Subgroup<Element> const& H, Element const& x) {
    std::vector<Element> gens;
    for (auto const& g : H.generators()) {
      gens.push_back(g.conjugated_by(x));
    }
    return Subgroup<Element>::closure(H.identity(), std::move(gens));
  }

  //! Throws InvalidArgument unless N ⊆ G.
  template <typename Element>
  bool normal_in(Subgroup<Element> const& N, Subgroup<Element> const& G) {
    if (!N.is_subset_of(G)) {
      throw InvalidArgument("normal_in: N is not a subgroup of G");
    }
    for (auto const& g : G.generators()) {
      for (auto const& x : N.generators()) {
        if (!N.contains(x.conjugated_by(g))) {
          return false;
        }
      }
    }
    return true;
  }

  //! |G| / |N|; throws InvalidArgument unless N ⊆ G.
  template <typename Element>
  std::size_t quotient_order(Subgroup<Element> const& G, Subgroup<Element> const& N) {
    if (!N.is_subset_of(G)) {
      throw InvalidArgument("quotient_order: N is not a subgroup of G");
    }
    return G.size() / N.size();
  }

  PermSubgroup symmetric_group(int degree);

  //! One step of coset propagation.  With W ≤ G_k x G_{k+1} and rep = (g, h)
  //! this is the second projection of
  //!   (L x G_{k+1})(z, 1) ∩ W (g, h),
  //! returned as a right coset of the projection of (L x G_{k+1}) ∩ W, or
  //! nullopt if the intersection is empty.  rep = nullopt stands for the
  //! empty relation.
  std::optional<PermCoset> coset_step(PermSubgroup const&            L,
                                      Permutation const&             z,
                                      PairSubgroup const&            W,
                                      std::optional<PairPerm> const& rep);

  //! The generators of the auto-homeomorphism group of (A, P): swaps of
  //! two A-points in one class; monotone swaps of two classes meeting A in
  //! the same number of points; swaps of two classes missing A.
  std::vector<PairPerm> ahom_generators(Subset const& A, SetPartition const& P);

  PairSubgroup ahom_group(Subset const& A, SetPartition const& P);

  //! (Π_s (m_s!)^{μ_s} μ_s!) ν!, read off the pair type.
  std::uint64_t ahom_order_formula(Subset const& A, SetPartition const& P);

  //! The class permutation induced by a P-preserving permutation of the
  //! A-indices, as a permutation of [0, |P|) fixing the classes that miss
  //! A.  Throws InvalidArgument if \p pi does not preserve the partition
  //! P induces on A.
  Permutation bar_map(Permutation const& pi, Subset const& A, SetPartition const& P);

}  // namespace igtn

#endif  // IGTN_PERMGROUPS_HPP_
