// Subsets and set partitions of the ground set [1,n], and the relations
// between a subset A and a partition P that drive everything else:
// saturation, separation, transversality, pair types, stationarity and
// homeomorphisms of pairs.
//
// Points are 0-based in memory.  Partition classes are always kept in
// ascending order of their minimum element.

#ifndef IGTN_COMBINATORICS_HPP_
#define IGTN_COMBINATORICS_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint8_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "permutation.hpp"

namespace igtn {

  //! Default upper bound on n for enumerations.
  inline constexpr int kDefaultGroundCap = 10;
  //! Subsets are bitmasks, so n can never exceed this.
  inline constexpr int kMaxGround = 32;

  //! Throws InvalidArgument unless 1 <= n <= min(cap, kMaxGround).
  void validate_ground_size(int n, int cap = kDefaultGroundCap);

  class Subset {
   public:
    Subset() = default;
    Subset(int n, std::uint32_t mask);

    //! \p points are 0-based, any order, no duplicates.
    static Subset from_points(int n, std::span<int const> points);
    static Subset full(int n);

    [[nodiscard]] int n() const noexcept {
      return _n;
    }
    [[nodiscard]] std::uint32_t mask() const noexcept {
      return _mask;
    }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] bool empty() const noexcept {
      return _mask == 0;
    }
    [[nodiscard]] bool contains(int x) const noexcept {
      return (_mask >> x) & 1u;
    }
    //! Ascending.
    [[nodiscard]] std::vector<int> elements() const;
    //! Position of \p x in the ascending list; x must be a member.
    [[nodiscard]] int index_of(int x) const noexcept;

    bool operator==(Subset const&) const = default;
    std::strong_ordering operator<=>(Subset const& that) const;

   private:
    int           _n    = 0;
    std::uint32_t _mask = 0;
  };

  class SetPartition {
   public:
    SetPartition() = default;

    //! \p labels[x] is any class label for point x; the result is
    //! canonicalised (classes numbered by ascending minimum).
    static SetPartition from_labels(std::span<int const> labels);
    //! Throws InvalidArgument unless \p classes are disjoint, nonempty and
    //! cover [0,n).
    static SetPartition from_classes(int                                  n,
                                     std::vector<std::vector<int>> const& classes);
    static SetPartition discrete(int n);
    static SetPartition trivial(int n);

    [[nodiscard]] int n() const noexcept {
      return static_cast<int>(_class_of.size());
    }
    //! Number of classes.
    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_classes.size());
    }
    [[nodiscard]] int class_of(int x) const noexcept {
      return _class_of[static_cast<std::size_t>(x)];
    }
    [[nodiscard]] Subset block(int j) const {
      return Subset(n(), _classes[static_cast<std::size_t>(j)]);
    }
    [[nodiscard]] std::uint32_t block_mask(int j) const noexcept {
      return _classes[static_cast<std::size_t>(j)];
    }
    [[nodiscard]] std::vector<std::vector<int>> blocks() const;

    bool operator==(SetPartition const& that) const {
      return _class_of == that._class_of;
    }
    std::strong_ordering operator<=>(SetPartition const& that) const {
      return _class_of <=> that._class_of;
    }

   private:
    // Restricted growth string: the canonical labelling.
    std::vector<std::uint8_t>  _class_of;
    std::vector<std::uint32_t> _classes;
  };

  //! The multiset of |A ∩ P_j| sorted non-increasingly, with the derived
  //! counts used by the auto-homeomorphism group order.
  struct PairType {
    std::vector<int> sizes;

    //! Distinct nonzero intersection sizes, decreasing.
    [[nodiscard]] std::vector<int> distinct_sizes() const;
    //! Multiplicity of each entry of distinct_sizes().
    [[nodiscard]] std::vector<int> multiplicities() const;
    //! Number of classes missing A.
    [[nodiscard]] int empty_count() const;

    bool operator==(PairType const&) const = default;
    std::strong_ordering operator<=>(PairType const&) const = default;
  };

  //! A pair of bijections between (A,P) and (B,Q): a_i -> b_{elem[i]} and
  //! P_j -> Q_{cls[j]}.  This is the same data as a walk label (π, π').
  struct Homeomorphism {
    Permutation elem;
    Permutation cls;

    [[nodiscard]] PairPerm label() const {
      return {elem, cls};
    }
  };

  bool saturates(Subset const& A, SetPartition const& P);
  bool separates(SetPartition const& P, Subset const& A);
  bool is_transversal(Subset const& A, SetPartition const& P);
  //! Regular in the sense that A saturates P or P separates A.
  bool is_regular_pair(Subset const& A, SetPartition const& P);
  bool is_stationary(Subset const& A, SetPartition const& P);
  //! Points outside A lying in a non-singleton class.
  Subset   free_points(Subset const& A, SetPartition const& P);
  PairType pair_type(Subset const& A, SetPartition const& P);

  //! Class j -> |A ∩ P_j|, in class order.
  std::vector<int> intersection_sizes(Subset const& A, SetPartition const& P);

  //! Checks a_i ∈ P_j  <=>  b_{π(i)} ∈ Q_{π'(j)} for all i, j.
  bool is_homeomorphism(Subset const&       A,
                        SetPartition const& P,
                        Subset const&       B,
                        SetPartition const& Q,
                        PairPerm const&     label);

  //! The canonical homeomorphism (A,P) -> (B,Q), or nullopt when the pair
  //! types differ.  Classes are matched by intersection size, ties in class
  //! order; elements by the monotone bijection between matched classes.
  std::optional<Homeomorphism> find_homeomorphism(Subset const&       A,
                                                  SetPartition const& P,
                                                  Subset const&       B,
                                                  SetPartition const& Q);

  //! All m-subsets of [0,n) in lexicographic order of their sorted
  //! element lists.
  std::vector<Subset> enumerate_subsets(int n, int m);
  //! All partitions of [0,n) into r classes in lexicographic order of their
  //! restricted growth strings.
  std::vector<SetPartition> enumerate_partitions(int n, int r);

}  // namespace igtn

#endif  // IGTN_COMBINATORICS_HPP_
