// Exception types used throughout igtn.

#ifndef IGTN_ERRORS_HPP_
#define IGTN_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error, invalid_argument
#include <string>     // for string

namespace igtn {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed arguments: wrong degree, non-idempotent letter, bad index.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! Two values defined over different ground sets [1,n] were combined.
  class SizeMismatch : public Error {
   public:
    using Error::Error;
  };

  //! The request needs group coordinates in a maximal subgroup of rank n-1
  //! (a free group) or n, which this library does not model.
  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  //! Two words were fed to the coset propagation with different
  //! D-fingerprints.
  class FingerprintMismatch : public Error {
   public:
    using Error::Error;
  };

  //! An enumeration would exceed its configured cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), _cap(cap) {}

    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  namespace detail {
    inline void check_same_n(int n1, int n2, char const* where) {
      if (n1 != n2) {
        throw SizeMismatch(std::string(where) + ": ground sizes differ ("
                           + std::to_string(n1) + " vs " + std::to_string(n2)
                           + ")");
      }
    }
  }  // namespace detail

}  // namespace igtn

#endif  // IGTN_ERRORS_HPP_
