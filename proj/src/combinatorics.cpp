#include "igtn/combinatorics.hpp"

#include <algorithm>  // for sort, stable_sort
#include <bit>        // for popcount, countr_zero
#include <functional> // for greater
#include <string>     // for to_string

#include "igtn/errors.hpp"

namespace igtn {

  void validate_ground_size(int n, int cap) {
    if (n < 1 || n > std::min(cap, kMaxGround)) {
      throw InvalidArgument("ground size n = " + std::to_string(n)
                            + " outside [1, " + std::to_string(std::min(cap, kMaxGround))
                            + "]");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(int n, std::uint32_t mask) : _n(n), _mask(mask) {
    if (n < 0 || n > kMaxGround) {
      throw InvalidArgument("Subset: ground size out of range");
    }
    if (n < kMaxGround && (mask >> n) != 0) {
      throw InvalidArgument("Subset: element outside [1,n]");
    }
  }

  Subset Subset::from_points(int n, std::span<int const> points) {
    std::uint32_t mask = 0;
    for (int x : points) {
      if (x < 0 || x >= n) {
        throw InvalidArgument("Subset: element " + std::to_string(x + 1)
                              + " outside [1," + std::to_string(n) + "]");
      }
      if ((mask >> x) & 1u) {
        throw InvalidArgument("Subset: duplicate element "
                              + std::to_string(x + 1));
      }
      mask |= 1u << x;
    }
    return Subset(n, mask);
  }

  Subset Subset::full(int n) {
    return Subset(n, n == kMaxGround ? ~0u : (1u << n) - 1);
  }

  int Subset::size() const noexcept {
    return std::popcount(_mask);
  }

  std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t m = _mask; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  int Subset::index_of(int x) const noexcept {
    return std::popcount(_mask & ((1u << x) - 1));
  }

  std::strong_ordering Subset::operator<=>(Subset const& that) const {
    if (auto c = _n <=> that._n; c != 0) {
      return c;
    }
    return elements() <=> that.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // SetPartition
  ////////////////////////////////////////////////////////////////////////

  SetPartition SetPartition::from_labels(std::span<int const> labels) {
    if (labels.size() > static_cast<std::size_t>(kMaxGround)) {
      throw InvalidArgument("SetPartition: ground size out of range");
    }
    SetPartition     p;
    std::vector<int> seen_labels;
    p._class_of.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it  = std::find(seen_labels.begin(), seen_labels.end(), labels[x]);
      auto idx = static_cast<std::size_t>(it - seen_labels.begin());
      if (it == seen_labels.end()) {
        seen_labels.push_back(labels[x]);
        p._classes.push_back(0);
      }
      p._class_of[x] = static_cast<std::uint8_t>(idx);
      p._classes[idx] |= 1u << x;
    }
    return p;
  }

  SetPartition
  SetPartition::from_classes(int n, std::vector<std::vector<int>> const& classes) {
    validate_ground_size(n, kMaxGround);
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (classes[j].empty()) {
        throw InvalidArgument("SetPartition: empty class");
      }
      for (int x : classes[j]) {
        if (x < 0 || x >= n) {
          throw InvalidArgument("SetPartition: element " + std::to_string(x + 1)
                                + " outside [1," + std::to_string(n) + "]");
        }
        if (labels[static_cast<std::size_t>(x)] != -1) {
          throw InvalidArgument("SetPartition: classes are not disjoint at "
                                + std::to_string(x + 1));
        }
        labels[static_cast<std::size_t>(x)] = static_cast<int>(j);
      }
    }
    for (int x = 0; x < n; ++x) {
      if (labels[static_cast<std::size_t>(x)] == -1) {
        throw InvalidArgument("SetPartition: point " + std::to_string(x + 1)
                              + " is not covered");
      }
    }
    return from_labels(labels);
  }

  SetPartition SetPartition::discrete(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      labels[static_cast<std::size_t>(x)] = x;
    }
    return from_labels(labels);
  }

  SetPartition SetPartition::trivial(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    return from_labels(labels);
  }

  std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out;
    out.reserve(_classes.size());
    for (int j = 0; j < size(); ++j) {
      out.push_back(block(j).elements());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PairType
  ////////////////////////////////////////////////////////////////////////

  std::vector<int> PairType::distinct_sizes() const {
    std::vector<int> out;
    for (int s : sizes) {
      if (s != 0 && (out.empty() || out.back() != s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<int> PairType::multiplicities() const {
    std::vector<int> out;
    int              prev = -1;
    for (int s : sizes) {
      if (s == 0) {
        break;
      }
      if (s != prev) {
        out.push_back(0);
        prev = s;
      }
      ++out.back();
    }
    return out;
  }

  int PairType::empty_count() const {
    return static_cast<int>(std::count(sizes.begin(), sizes.end(), 0));
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations between a subset and a partition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check(Subset const& A, SetPartition const& P, char const* where) {
      detail::check_same_n(A.n(), P.n(), where);
    }
  }  // namespace

  std::vector<int> intersection_sizes(Subset const& A, SetPartition const& P) {
    check(A, P, "intersection_sizes");
    std::vector<int> out(static_cast<std::size_t>(P.size()));
    for (int j = 0; j < P.size(); ++j) {
      out[static_cast<std::size_t>(j)] = std::popcount(A.mask() & P.block_mask(j));
    }
    return out;
  }

  bool saturates(Subset const& A, SetPartition const& P) {
    check(A, P, "saturates");
    for (int j = 0; j < P.size(); ++j) {
      if ((A.mask() & P.block_mask(j)) == 0) {
        return false;
      }
    }
    return true;
  }

  bool separates(SetPartition const& P, Subset const& A) {
    check(A, P, "separates");
    for (int j = 0; j < P.size(); ++j) {
      if (std::popcount(A.mask() & P.block_mask(j)) > 1) {
        return false;
      }
    }
    return true;
  }

  bool is_transversal(Subset const& A, SetPartition const& P) {
    return saturates(A, P) && separates(P, A);
  }

  bool is_regular_pair(Subset const& A, SetPartition const& P) {
    return saturates(A, P) || separates(P, A);
  }

  Subset free_points(Subset const& A, SetPartition const& P) {
    check(A, P, "free_points");
    std::uint32_t out = 0;
    for (int j = 0; j < P.size(); ++j) {
      std::uint32_t b = P.block_mask(j);
      if (std::popcount(b) >= 2) {
        out |= b & ~A.mask();
      }
    }
    return Subset(A.n(), out);
  }

  bool is_stationary(Subset const& A, SetPartition const& P) {
    return free_points(A, P).empty();
  }

  PairType pair_type(Subset const& A, SetPartition const& P) {
    PairType t{intersection_sizes(A, P)};
    std::sort(t.sizes.begin(), t.sizes.end(), std::greater<>());
    return t;
  }

  bool is_homeomorphism(Subset const&       A,
                        SetPartition const& P,
                        Subset const&       B,
                        SetPartition const& Q,
                        PairPerm const&     label) {
    check(A, P, "is_homeomorphism");
    check(B, Q, "is_homeomorphism");
    if (label.first.degree() != A.size() || A.size() != B.size()
        || label.second.degree() != P.size() || P.size() != Q.size()) {
      return false;
    }
    auto const a = A.elements();
    auto const b = B.elements();
    for (int i = 0; i < A.size(); ++i) {
      int const pa = P.class_of(a[static_cast<std::size_t>(i)]);
      int const qb = Q.class_of(b[static_cast<std::size_t>(label.first[i])]);
      // a_i lies in exactly one class, so the biconditional over all j
      // reduces to: the class of a_i maps to the class of its image.
      if (label.second[pa] != qb) {
        return false;
      }
    }
    return true;
  }

  std::optional<Homeomorphism> find_homeomorphism(Subset const&       A,
                                                  SetPartition const& P,
                                                  Subset const&       B,
                                                  SetPartition const& Q) {
    check(A, P, "find_homeomorphism");
    check(B, Q, "find_homeomorphism");
    detail::check_same_n(A.n(), B.n(), "find_homeomorphism");
    if (A.size() != B.size() || P.size() != Q.size()) {
      throw SizeMismatch("find_homeomorphism: |A| != |B| or |P| != |Q|");
    }
    auto const sp = intersection_sizes(A, P);
    auto const sq = intersection_sizes(B, Q);

    auto by_size = [](std::vector<int> const& s) {
      std::vector<int> order(s.size());
      for (std::size_t j = 0; j < s.size(); ++j) {
        order[j] = static_cast<int>(j);
      }
      std::stable_sort(order.begin(), order.end(), [&s](int x, int y) {
        return s[static_cast<std::size_t>(x)] > s[static_cast<std::size_t>(y)];
      });
      return order;
    };
    auto const op = by_size(sp);
    auto const oq = by_size(sq);
    for (std::size_t k = 0; k < op.size(); ++k) {
      if (sp[static_cast<std::size_t>(op[k])] != sq[static_cast<std::size_t>(oq[k])]) {
        return std::nullopt;
      }
    }

    std::vector<std::uint8_t> cls(op.size());
    std::vector<std::uint8_t> elem(static_cast<std::size_t>(A.size()));
    for (std::size_t k = 0; k < op.size(); ++k) {
      int const j  = op[k];
      int const jj = oq[k];
      cls[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(jj);
      auto const from = Subset(A.n(), A.mask() & P.block_mask(j)).elements();
      auto const to   = Subset(B.n(), B.mask() & Q.block_mask(jj)).elements();
      for (std::size_t t = 0; t < from.size(); ++t) {
        elem[static_cast<std::size_t>(A.index_of(from[t]))]
            = static_cast<std::uint8_t>(B.index_of(to[t]));
      }
    }
    return Homeomorphism{Permutation(std::move(elem)), Permutation(std::move(cls))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<Subset> enumerate_subsets(int n, int m) {
    validate_ground_size(n, kMaxGround);
    if (m < 1 || m > n) {
      throw InvalidArgument("enumerate_subsets: m = " + std::to_string(m)
                            + " outside [1," + std::to_string(n) + "]");
    }
    std::vector<Subset> out;
    std::vector<int>    idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      idx[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
      out.push_back(Subset::from_points(n, idx));
      int i = m - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++idx[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < m; ++k) {
        idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
      }
    }
    return out;
  }

  namespace {
    void rgs(int                        n,
             int                        r,
             int                        pos,
             int                        used,
             std::vector<int>&          labels,
             std::vector<SetPartition>& out) {
      if (pos == n) {
        if (used == r) {
          out.push_back(SetPartition::from_labels(labels));
        }
        return;
      }
      if (used + (n - pos) < r) {
        return;
      }
      int const top = std::min(used, r - 1);
      for (int c = 0; c <= top; ++c) {
        labels[static_cast<std::size_t>(pos)] = c;
        rgs(n, r, pos + 1, std::max(used, c + 1), labels, out);
      }
    }
  }  // namespace

  std::vector<SetPartition> enumerate_partitions(int n, int r) {
    validate_ground_size(n, kMaxGround);
    if (r < 1 || r > n) {
      throw InvalidArgument("enumerate_partitions: r = " + std::to_string(r)
                            + " outside [1," + std::to_string(n) + "]");
    }
    std::vector<SetPartition> out;
    std::vector<int>          labels(static_cast<std::size_t>(n), 0);
    rgs(n, r, 0, 0, labels, out);
    return out;
  }

}  // namespace igtn
