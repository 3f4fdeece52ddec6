// Permutations of [0,k) acting on the right, and pairs of them.
//
// Points are stored 0-based; serialisation (see io.hpp) is 1-based.  The
// product p * q means "apply p, then q", matching the left-to-right
// composition of transformations.

#ifndef IGTN_PERMUTATION_HPP_
#define IGTN_PERMUTATION_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <string>   // for string
#include <vector>   // for vector

namespace igtn {

  class Permutation {
   public:
    Permutation() = default;

    //! Throws InvalidArgument unless \p images is a bijection of [0,k).
    explicit Permutation(std::vector<std::uint8_t> images);

    static Permutation identity(int degree);
    static Permutation transposition(int degree, int a, int b);
    //! The cycle 0 -> 1 -> ... -> degree-1 -> 0.
    static Permutation long_cycle(int degree);

    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(_images.size());
    }

    [[nodiscard]] int operator[](int i) const noexcept {
      return _images[static_cast<std::size_t>(i)];
    }

    [[nodiscard]] std::vector<std::uint8_t> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] Permutation inverse() const;

    //! Apply *this first, then \p that.
    [[nodiscard]] Permutation operator*(Permutation const& that) const;

    //! x^(-1) * this * x
    [[nodiscard]] Permutation conjugated_by(Permutation const& x) const;

    //! Direct sum: acts as *this on [0,deg) and as \p that shifted by deg.
    [[nodiscard]] Permutation direct_sum(Permutation const& that) const;

    bool operator==(Permutation const&) const = default;
    std::strong_ordering operator<=>(Permutation const&) const = default;

    [[nodiscard]] std::size_t hash() const noexcept;

   private:
    std::vector<std::uint8_t> _images;
  };

  //! An element of S_m x S_r; edge and walk labels in contact graphs.
  struct PairPerm {
    Permutation first;
    Permutation second;

    static PairPerm identity(int m, int r) {
      return {Permutation::identity(m), Permutation::identity(r)};
    }

    [[nodiscard]] PairPerm operator*(PairPerm const& that) const {
      return {first * that.first, second * that.second};
    }

    [[nodiscard]] PairPerm inverse() const {
      return {first.inverse(), second.inverse()};
    }

    [[nodiscard]] PairPerm conjugated_by(PairPerm const& x) const {
      return {first.conjugated_by(x.first), second.conjugated_by(x.second)};
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return first.is_identity() && second.is_identity();
    }

    bool operator==(PairPerm const&) const = default;
    std::strong_ordering operator<=>(PairPerm const&) const = default;

    [[nodiscard]] std::size_t hash() const noexcept {
      return first.hash() * 1000003u ^ second.hash();
    }
  };

  struct ElementHash {
    template <typename T>
    std::size_t operator()(T const& x) const noexcept {
      return x.hash();
    }
  };

  //! 1-based cycle notation, e.g. "(1 2)(3 5)" or "()".
  std::string cycle_string(Permutation const& p);

}  // namespace igtn

#endif  // IGTN_PERMUTATION_HPP_
