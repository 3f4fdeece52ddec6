#include "igtn/permgroups.hpp"

#include <set>     // for set
#include <string>  // for to_string

namespace igtn {

  PermSubgroup symmetric_group(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
      gens.push_back(Permutation::transposition(degree, 0, 1));
      gens.push_back(Permutation::long_cycle(degree));
    }
    return PermSubgroup::closure(Permutation::identity(degree), std::move(gens));
  }

  std::optional<PermCoset> coset_step(PermSubgroup const&            L,
                                      Permutation const&             z,
                                      PairSubgroup const&            W,
                                      std::optional<PairPerm> const& rep) {
    if (!rep) {
      return std::nullopt;
    }
    auto const& wid = W.identity();
    if (L.identity().degree() != wid.first.degree() || z.degree() != wid.first.degree()
        || rep->first.degree() != wid.first.degree()
        || rep->second.degree() != wid.second.degree()) {
      throw SizeMismatch("coset_step: degrees do not match");
    }
    Permutation const        z_inv = z.inverse();
    std::vector<Permutation> projection;
    std::set<Permutation>    values;
    for (auto const& w : W.elements()) {
      if (L.contains(w.first)) {
        projection.push_back(w.second);
      }
      if (L.contains(w.first * rep->first * z_inv)) {
        values.insert(w.second * rep->second);
      }
    }
    if (values.empty()) {
      return std::nullopt;
    }
    return PermCoset{PermSubgroup::from_elements(wid.second, std::move(projection)),
                     *values.begin()};
  }

  std::vector<PairPerm> ahom_generators(Subset const& A, SetPartition const& P) {
    detail::check_same_n(A.n(), P.n(), "ahom_generators");
    int const  m     = A.size();
    int const  r     = P.size();
    auto const a     = A.elements();
    auto const sizes = intersection_sizes(A, P);
    auto const id_m  = Permutation::identity(m);
    auto const id_r  = Permutation::identity(r);

    auto cls = [&](int i) { return P.class_of(a[static_cast<std::size_t>(i)]); };

    std::vector<PairPerm> out;
    for (int i = 0; i < m; ++i) {
      for (int ii = i + 1; ii < m; ++ii) {
        if (cls(i) == cls(ii)) {
          out.push_back({Permutation::transposition(m, i, ii), id_r});
        }
      }
    }
    for (int j = 0; j < r; ++j) {
      for (int jj = j + 1; jj < r; ++jj) {
        auto const q = sizes[static_cast<std::size_t>(j)];
        if (q == 0 || q != sizes[static_cast<std::size_t>(jj)]) {
          continue;
        }
        auto const from = Subset(A.n(), A.mask() & P.block_mask(j)).elements();
        auto const to   = Subset(A.n(), A.mask() & P.block_mask(jj)).elements();
        auto       img  = id_m.images();
        for (std::size_t t = 0; t < from.size(); ++t) {
          auto const x = static_cast<std::size_t>(A.index_of(from[t]));
          auto const y = static_cast<std::size_t>(A.index_of(to[t]));
          std::swap(img[x], img[y]);
        }
        out.push_back({Permutation(std::move(img)), Permutation::transposition(r, j, jj)});
      }
    }
    for (int j = 0; j < r; ++j) {
      for (int jj = j + 1; jj < r; ++jj) {
        if (sizes[static_cast<std::size_t>(j)] == 0
            && sizes[static_cast<std::size_t>(jj)] == 0) {
          out.push_back({id_m, Permutation::transposition(r, j, jj)});
        }
      }
    }
    return out;
  }

  PairSubgroup ahom_group(Subset const& A, SetPartition const& P) {
    return PairSubgroup::closure(PairPerm::identity(A.size(), P.size()),
                                 ahom_generators(A, P));
  }

  namespace {
    std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
      std::uint64_t z;
      if (__builtin_mul_overflow(x, y, &z)) {
        throw CapExceeded("ahom_order_formula: order overflows 64 bits",
                          static_cast<std::size_t>(-1));
      }
      return z;
    }

    std::uint64_t factorial(int k) {
      std::uint64_t f = 1;
      for (int i = 2; i <= k; ++i) {
        f = checked_mul(f, static_cast<std::uint64_t>(i));
      }
      return f;
    }
  }  // namespace

  std::uint64_t ahom_order_formula(Subset const& A, SetPartition const& P) {
    auto const    type = pair_type(A, P);
    auto const    ms   = type.distinct_sizes();
    auto const    mus  = type.multiplicities();
    std::uint64_t out  = factorial(type.empty_count());
    for (std::size_t s = 0; s < ms.size(); ++s) {
      for (int k = 0; k < mus[s]; ++k) {
        out = checked_mul(out, factorial(ms[s]));
      }
      out = checked_mul(out, factorial(mus[s]));
    }
    return out;
  }

  Permutation bar_map(Permutation const& pi, Subset const& A, SetPartition const& P) {
    detail::check_same_n(A.n(), P.n(), "bar_map");
    if (pi.degree() != A.size()) {
      throw SizeMismatch("bar_map: degree of pi differs from |A|");
    }
    auto const       a = A.elements();
    std::vector<int> img(static_cast<std::size_t>(P.size()), -1);
    for (int i = 0; i < A.size(); ++i) {
      int const j  = P.class_of(a[static_cast<std::size_t>(i)]);
      int const jj = P.class_of(a[static_cast<std::size_t>(pi[i])]);
      auto&     slot = img[static_cast<std::size_t>(j)];
      if (slot != -1 && slot != jj) {
        throw InvalidArgument("bar_map: permutation does not preserve the "
                              "partition induced on A");
      }
      slot = jj;
    }
    std::vector<bool> hit(img.size(), false);
    std::vector<std::uint8_t> out(img.size());
    for (std::size_t j = 0; j < img.size(); ++j) {
      int const jj = img[j] == -1 ? static_cast<int>(j) : img[j];
      if (hit[static_cast<std::size_t>(jj)]) {
        throw InvalidArgument("bar_map: permutation does not preserve the "
                              "partition induced on A");
      }
      hit[static_cast<std::size_t>(jj)] = true;
      out[j]                            = static_cast<std::uint8_t>(jj);
    }
    return Permutation(std::move(out));
  }

}  // namespace igtn
