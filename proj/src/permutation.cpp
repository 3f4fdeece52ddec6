#include "igtn/permutation.hpp"

#include <numeric>  // for iota
#include <sstream>  // for ostringstream

#include "igtn/errors.hpp"

namespace igtn {

  Permutation::Permutation(std::vector<std::uint8_t> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw InvalidArgument("Permutation: images do not form a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(int degree) {
    Permutation p;
    p._images.resize(static_cast<std::size_t>(degree));
    std::iota(p._images.begin(), p._images.end(), std::uint8_t(0));
    return p;
  }

  Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 0 || b < 0 || a >= degree || b >= degree) {
      throw InvalidArgument("Permutation::transposition: point out of range");
    }
    Permutation p = identity(degree);
    std::swap(p._images[static_cast<std::size_t>(a)],
              p._images[static_cast<std::size_t>(b)]);
    return p;
  }

  Permutation Permutation::long_cycle(int degree) {
    Permutation p;
    p._images.resize(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
      p._images[static_cast<std::size_t>(i)]
          = static_cast<std::uint8_t>((i + 1) % degree);
    }
    return p;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    Permutation p;
    p._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      p._images[_images[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (that.degree() != degree()) {
      throw SizeMismatch("Permutation::operator*: degrees differ");
    }
    Permutation p;
    p._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      p._images[i] = that._images[_images[i]];
    }
    return p;
  }

  Permutation Permutation::conjugated_by(Permutation const& x) const {
    return x.inverse() * (*this) * x;
  }

  Permutation Permutation::direct_sum(Permutation const& that) const {
    Permutation p = *this;
    auto const shift = static_cast<std::uint8_t>(_images.size());
    for (auto y : that._images) {
      p._images.push_back(static_cast<std::uint8_t>(y + shift));
    }
    return p;
  }

  std::size_t Permutation::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : _images) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string cycle_string(Permutation const& p) {
    std::ostringstream os;
    std::vector<bool> done(static_cast<std::size_t>(p.degree()), false);
    bool any = false;
    for (int i = 0; i < p.degree(); ++i) {
      if (done[static_cast<std::size_t>(i)] || p[i] == i) {
        continue;
      }
      any = true;
      os << '(';
      int j = i;
      bool first = true;
      while (!done[static_cast<std::size_t>(j)]) {
        done[static_cast<std::size_t>(j)] = true;
        os << (first ? "" : " ") << j + 1;
        first = false;
        j = p[j];
      }
      os << ')';
    }
    if (!any) {
      os << "()";
    }
    return os.str();
  }

}  // namespace igtn
