#include "igtn/transformations.hpp"

#include <algorithm>  // for sort
#include <bit>        // for countr_zero
#include <numeric>    // for iota
#include <string>     // for to_string

#include "igtn/errors.hpp"

namespace igtn {

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<std::uint8_t> images)
      : _images(std::move(images)) {
    if (_images.size() > static_cast<std::size_t>(kMaxGround)) {
      throw InvalidArgument("Transformation: degree exceeds "
                            + std::to_string(kMaxGround));
    }
    for (auto y : _images) {
      if (y >= _images.size()) {
        throw InvalidArgument("Transformation: image " + std::to_string(y + 1)
                              + " outside [1," + std::to_string(_images.size())
                              + "]");
      }
    }
  }

  Transformation Transformation::identity(int n) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), std::uint8_t(0));
    return Transformation(std::move(img));
  }

  SetPartition Transformation::kernel() const {
    std::vector<int> labels(_images.begin(), _images.end());
    return SetPartition::from_labels(labels);
  }

  Subset Transformation::image() const {
    std::uint32_t mask = 0;
    for (auto y : _images) {
      mask |= 1u << y;
    }
    return Subset(n(), mask);
  }

  int Transformation::rank() const {
    return image().size();
  }

  bool Transformation::is_idempotent() const noexcept {
    for (auto y : _images) {
      if (_images[y] != y) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != x) {
        return false;
      }
    }
    return true;
  }

  std::size_t Transformation::hash() const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (auto x : _images) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  Idempotent::Idempotent(Transformation e) : _value(std::move(e)) {
    if (!_value.is_idempotent()) {
      throw InvalidArgument("Idempotent: transformation is not idempotent");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and Green's relations
  ////////////////////////////////////////////////////////////////////////

  Transformation compose(Transformation const& f, Transformation const& g) {
    detail::check_same_n(f.n(), g.n(), "compose");
    std::vector<std::uint8_t> img(f.images().size());
    for (std::size_t x = 0; x < img.size(); ++x) {
      img[x] = g.images()[f.images()[x]];
    }
    return Transformation(std::move(img));
  }

  bool green_related(Transformation const& f,
                     Transformation const& g,
                     GreenRelation         rel) {
    detail::check_same_n(f.n(), g.n(), "green_related");
    switch (rel) {
      case GreenRelation::R:
        return f.kernel() == g.kernel();
      case GreenRelation::L:
        return f.image() == g.image();
      case GreenRelation::H:
        return f.kernel() == g.kernel() && f.image() == g.image();
      case GreenRelation::J:
      case GreenRelation::D:
        return f.rank() == g.rank();
    }
    return false;
  }

  Idempotent epsilon(int i, int j, int n) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
      throw InvalidArgument("epsilon: need distinct i, j in [1," + std::to_string(n)
                            + "]");
    }
    auto img = Transformation::identity(n).images();
    img[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i);
    return Idempotent(Transformation(std::move(img)));
  }

  std::vector<Idempotent> rank_n_minus_1_idempotents(int n) {
    std::vector<Idempotent> out;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          out.push_back(epsilon(i, j, n));
        }
      }
    }
    return out;
  }

  std::vector<Idempotent> all_idempotents(int n) {
    validate_ground_size(n, kMaxGround);
    std::vector<Transformation> found;
    std::uint32_t const         top = (n == kMaxGround) ? ~0u : (1u << n) - 1;
    // An idempotent is a subset A together with an arbitrary map from the
    // complement into A.
    for (std::uint32_t mask = 1; mask != 0 && mask <= top; ++mask) {
      std::vector<int> inside, outside;
      for (int x = 0; x < n; ++x) {
        ((mask >> x) & 1u ? inside : outside).push_back(x);
      }
      std::vector<std::size_t> choice(outside.size(), 0);
      while (true) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        for (int x : inside) {
          img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
        }
        for (std::size_t k = 0; k < outside.size(); ++k) {
          img[static_cast<std::size_t>(outside[k])]
              = static_cast<std::uint8_t>(inside[choice[k]]);
        }
        found.emplace_back(std::move(img));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == inside.size()) {
          choice[k++] = 0;
        }
        if (k == choice.size()) {
          break;
        }
      }
      if (mask == top) {
        break;
      }
    }
    std::sort(found.begin(), found.end());
    std::vector<Idempotent> out;
    out.reserve(found.size());
    for (auto& t : found) {
      out.emplace_back(std::move(t));
    }
    return out;
  }

  bool is_basic_pair(Idempotent const& e, Idempotent const& f) {
    auto const& a  = e.transformation();
    auto const& b  = f.transformation();
    auto const  ef = compose(a, b);
    auto const  fe = compose(b, a);
    return ef == a || ef == b || fe == a || fe == b;
  }

  std::optional<Idempotent> biorder_product(Idempotent const& e,
                                            Idempotent const& f) {
    if (!is_basic_pair(e, f)) {
      return std::nullopt;
    }
    return Idempotent(compose(e.transformation(), f.transformation()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees coordinates
  ////////////////////////////////////////////////////////////////////////

  Permutation lambda_label(SetPartition const& P, Subset const& A) {
    if (!is_transversal(A, P)) {
      throw InvalidArgument("lambda_label: A is not a transversal of P");
    }
    std::vector<std::uint8_t> img(static_cast<std::size_t>(P.size()));
    for (int i = 0; i < P.size(); ++i) {
      int const a = std::countr_zero(A.mask() & P.block_mask(i));
      img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(A.index_of(a));
    }
    return Permutation(std::move(img));
  }

  ReesProduct rees_multiply(RegularTriple const& t1, RegularTriple const& t2) {
    detail::check_same_n(t1.image.n(), t2.image.n(), "rees_multiply");
    if (t1.rank() != t2.rank()) {
      throw SizeMismatch("rees_multiply: triples lie in different D-classes");
    }
    if (!is_transversal(t1.image, t2.kernel)) {
      return std::nullopt;
    }
    auto const sandwich = lambda_label(t2.kernel, t1.image).inverse();
    return RegularTriple{t1.kernel, t1.group * sandwich * t2.group, t2.image};
  }

  Transformation triple_to_transformation(RegularTriple const& t) {
    detail::check_same_n(t.kernel.n(), t.image.n(), "triple_to_transformation");
    if (t.kernel.size() != t.image.size() || t.group.degree() != t.image.size()) {
      throw InvalidArgument("triple_to_transformation: |P|, |A| and deg g differ");
    }
    auto const                a = t.image.elements();
    std::vector<std::uint8_t> img(static_cast<std::size_t>(t.kernel.n()));
    for (int x = 0; x < t.kernel.n(); ++x) {
      img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(
          a[static_cast<std::size_t>(t.group[t.kernel.class_of(x)])]);
    }
    return Transformation(std::move(img));
  }

  RegularTriple rees_coordinates(Transformation const& f) {
    auto P = f.kernel();
    auto A = f.image();
    std::vector<std::uint8_t> g(static_cast<std::size_t>(P.size()));
    for (int j = 0; j < P.size(); ++j) {
      int const rep = std::countr_zero(P.block_mask(j));
      g[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(A.index_of(f[rep]));
    }
    return RegularTriple{std::move(P), Permutation(std::move(g)), std::move(A)};
  }

  RegularTriple transformation_to_triple(Transformation const& f) {
    if (f.rank() > f.n() - 2) {
      throw Unsupported("transformation_to_triple: rank "
                        + std::to_string(f.rank()) + " > n - 2 = "
                        + std::to_string(f.n() - 2));
    }
    return rees_coordinates(f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial actions
  ////////////////////////////////////////////////////////////////////////

  std::optional<Subset> right_action(Subset const& B, Idempotent const& e) {
    auto const& t = e.transformation();
    detail::check_same_n(B.n(), t.n(), "right_action");
    if (!separates(t.kernel(), B)) {
      return std::nullopt;
    }
    std::uint32_t mask = 0;
    for (int b : B.elements()) {
      mask |= 1u << t[b];
    }
    return Subset(B.n(), mask);
  }

  std::optional<SetPartition> left_action(Idempotent const&   e,
                                          SetPartition const& P) {
    auto const& t = e.transformation();
    detail::check_same_n(P.n(), t.n(), "left_action");
    if (!saturates(t.image(), P)) {
      return std::nullopt;
    }
    std::vector<int> labels(static_cast<std::size_t>(P.n()));
    for (int x = 0; x < P.n(); ++x) {
      labels[static_cast<std::size_t>(x)] = P.class_of(t[x]);
    }
    return SetPartition::from_labels(labels);
  }

}  // namespace igtn
