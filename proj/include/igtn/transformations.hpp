// Arithmetic in the full transformation monoid T_n.
//
// Maps act on the right and compose left to right: x(fg) = (xf)g.  A
// regular element of rank m is coordinatised as a triple (P, g, A) with
// P = ker f, A = im f and g in S_m, realised as the map sending the class
// P_j to a_{j g} (classes and elements in canonical order).  Under this
// convention the principal factor multiplies as
//
//   (P, g, A)(P', g', A') = (P, g λ(P',A)^{-1} g', A')   if A ⊥ P',
//                           0                            otherwise,
//
// i.e. the sandwich entry at (A, P') is the inverse of the label λ(P',A).

#ifndef IGTN_TRANSFORMATIONS_HPP_
#define IGTN_TRANSFORMATIONS_HPP_

#include <compare>   // for strong_ordering
#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "combinatorics.hpp"
#include "permutation.hpp"

namespace igtn {

  class Transformation {
   public:
    Transformation() = default;

    //! 0-based images; throws InvalidArgument if any image is out of range.
    explicit Transformation(std::vector<std::uint8_t> images);

    static Transformation identity(int n);

    [[nodiscard]] int n() const noexcept {
      return static_cast<int>(_images.size());
    }
    [[nodiscard]] int operator[](int x) const noexcept {
      return _images[static_cast<std::size_t>(x)];
    }
    [[nodiscard]] std::vector<std::uint8_t> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] SetPartition kernel() const;
    [[nodiscard]] Subset       image() const;
    [[nodiscard]] int          rank() const;
    [[nodiscard]] bool         is_idempotent() const noexcept;
    [[nodiscard]] bool         is_identity() const noexcept;

    bool operator==(Transformation const&) const = default;
    std::strong_ordering operator<=>(Transformation const&) const = default;

    [[nodiscard]] std::size_t hash() const noexcept;

   private:
    std::vector<std::uint8_t> _images;
  };

  //! A transformation known to satisfy e e = e.
  class Idempotent {
   public:
    //! Throws InvalidArgument unless \p e is idempotent.
    explicit Idempotent(Transformation e);

    static Idempotent identity(int n) {
      return Idempotent(Transformation::identity(n));
    }

    [[nodiscard]] Transformation const& transformation() const noexcept {
      return _value;
    }
    [[nodiscard]] int n() const noexcept {
      return _value.n();
    }
    [[nodiscard]] int rank() const {
      return _value.rank();
    }

    bool operator==(Idempotent const&) const = default;
    std::strong_ordering operator<=>(Idempotent const&) const = default;

   private:
    Transformation _value;
  };

  enum class GreenRelation { R, L, J, H, D };

  //! Rees coordinates (P, g, A) of a regular element of T_n.
  struct RegularTriple {
    SetPartition kernel;
    Permutation  group;
    Subset       image;

    [[nodiscard]] int rank() const noexcept {
      return image.size();
    }
    //! Group arithmetic in the matching D-class of the free
    //! idempotent-generated semigroup is only modelled up to rank n-2.
    [[nodiscard]] bool supported() const noexcept {
      return rank() <= image.n() - 2;
    }

    bool operator==(RegularTriple const&) const = default;
  };

  //! nullopt stands for the zero of the principal factor.
  using ReesProduct = std::optional<RegularTriple>;

  //! x -> (x f) g.
  Transformation compose(Transformation const& f, Transformation const& g);

  bool green_related(Transformation const& f,
                     Transformation const& g,
                     GreenRelation         rel);

  //! ε_{ij}: moves j to i, fixes everything else (0-based i, j).
  Idempotent epsilon(int i, int j, int n);

  //! All ε_{ij}, ordered by (i, j).
  std::vector<Idempotent> rank_n_minus_1_idempotents(int n);

  //! All of E(T_n), in lexicographic order of image arrays.
  std::vector<Idempotent> all_idempotents(int n);

  //! {ef, fe} ∩ {e, f} nonempty.
  bool is_basic_pair(Idempotent const& e, Idempotent const& f);

  //! ef when {e, f} is a basic pair.
  std::optional<Idempotent> biorder_product(Idempotent const& e,
                                            Idempotent const& f);

  //! The permutation i -> r_i where a_{r_i} ∈ P_i.  Throws InvalidArgument
  //! unless A ⊥ P.
  Permutation lambda_label(SetPartition const& P, Subset const& A);

  //! Throws SizeMismatch unless both triples have the same rank.
  ReesProduct rees_multiply(RegularTriple const& t1, RegularTriple const& t2);

  //! Throws InvalidArgument if the triple is malformed.
  Transformation triple_to_transformation(RegularTriple const& t);

  //! Rees coordinates of any transformation, with no rank restriction.
  RegularTriple rees_coordinates(Transformation const& f);

  //! As rees_coordinates, but throws Unsupported when rank f > n - 2.
  RegularTriple transformation_to_triple(Transformation const& f);

  //! B·e = Be when ker e separates B.
  std::optional<Subset> right_action(Subset const& B, Idempotent const& e);

  //! e·P, the partition into preimages of the classes of P, when im e
  //! saturates P.
  std::optional<SetPartition> left_action(Idempotent const&   e,
                                          SetPartition const& P);

}  // namespace igtn

#endif  // IGTN_TRANSFORMATIONS_HPP_
