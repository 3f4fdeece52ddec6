#include "doctest.h"

#include <algorithm>

#include "igtn/errors.hpp"
#include "igtn/permgroups.hpp"
#include "test_helpers.hpp"

using namespace igtn;
using namespace igtn::test;

namespace {
  // Every pair (π, π') compatible with (A,P) -> (A,P).
  std::vector<PairPerm> ahom_by_enumeration(Subset const& A, SetPartition const& P) {
    std::vector<PairPerm> out;
    for (auto const& p : all_perms(A.size())) {
      for (auto const& q : all_perms(P.size())) {
        if (compatible(A, P, A, P, {p, q})) {
          out.push_back({p, q});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool contains(std::vector<PairPerm> const& v, PairPerm const& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  }
}  // namespace

TEST_CASE("symmetric and alternating groups") {
  auto const S3 = symmetric_group(3);
  CHECK(S3.size() == 6);
  CHECK(symmetric_group(5).size() == 120);
  auto const A3 = PermSubgroup::closure(Permutation::identity(3), {Permutation::long_cycle(3)});
  CHECK(A3.size() == 3);
  CHECK(normal_in(A3, S3));
  CHECK(quotient_order(S3, A3) == 2);
  auto const C2 = PermSubgroup::closure(Permutation::identity(3),
                                        {Permutation::transposition(3, 0, 1)});
  CHECK_FALSE(normal_in(C2, S3));
  CHECK(conjugate(C2, Permutation::long_cycle(3)).size() == 2);
  CHECK_FALSE(conjugate(C2, Permutation::long_cycle(3)) == C2);
}

TEST_CASE("permutation products apply left to right") {
  auto const p = perm({2, 1, 3});
  auto const q = perm({1, 3, 2});
  CHECK(p * q == perm({3, 1, 2}));  // 1 -> 2 -> 3
  CHECK(p.conjugated_by(q) == q.inverse() * p * q);
  CHECK((p * p).is_identity());
}

TEST_CASE("subgroup closure from elements") {
  auto const S4 = symmetric_group(4);
  auto const G  = PermSubgroup::from_elements(Permutation::identity(4), S4.elements());
  CHECK(G == S4);
  CHECK_THROWS_AS(PermSubgroup::from_elements(Permutation::identity(3), {perm({2, 1, 3})}),
                  InvalidArgument);
  CHECK_THROWS_AS(PermSubgroup::closure(Permutation::identity(6),
                                        {Permutation::long_cycle(6),
                                         Permutation::transposition(6, 0, 1)},
                                        100),
                  CapExceeded);
}

TEST_CASE("cosets") {
  auto const A3 = PermSubgroup::closure(Permutation::identity(3), {Permutation::long_cycle(3)});
  PermCoset const c{A3, perm({2, 1, 3})};
  CHECK(c.size() == 3);
  CHECK(c.contains(perm({1, 3, 2})));
  CHECK_FALSE(c.contains(Permutation::identity(3)));
}

TEST_CASE("coset_step") {
  auto const id  = Permutation::identity(2);
  auto const tau = perm({2, 1});
  auto const triv = PermSubgroup::trivial(id);
  auto const full = PairSubgroup::closure(PairPerm::identity(2, 2),
                                          {PairPerm{tau, id}, PairPerm{id, tau}});
  auto const diag = PairSubgroup::closure(PairPerm::identity(2, 2), {PairPerm{tau, tau}});

  auto a = coset_step(triv, id, full, PairPerm::identity(2, 2));
  REQUIRE(a);
  CHECK(a->size() == 2);

  auto b = coset_step(triv, tau, diag, PairPerm::identity(2, 2));
  REQUIRE(b);
  CHECK(b->size() == 1);
  CHECK(b->contains(tau));

  auto c = coset_step(triv, id, diag, PairPerm{tau, id});
  REQUIRE(c);
  CHECK(c->elements() == std::vector<Permutation>{tau});

  CHECK_FALSE(coset_step(triv, id, diag, std::nullopt).has_value());
}

TEST_CASE("AHom generator families") {
  {
    auto const gens = ahom_generators(sub(4, {1, 2}), part(4, {{1, 2}, {3, 4}}));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == PairPerm{perm({2, 1}), perm({1, 2})});
  }
  {
    auto const gens
        = ahom_generators(sub(6, {1, 4}), part(6, {{1, 2}, {3, 4}, {5}, {6}}));
    CHECK(gens.size() == 2);
    CHECK(contains(gens, PairPerm{perm({2, 1}), perm({2, 1, 3, 4})}));
    CHECK(contains(gens, PairPerm{perm({1, 2}), perm({1, 2, 4, 3})}));
  }
}

TEST_CASE("AHom orders") {
  auto const A = sub(5, {1, 3, 5});
  auto const P = part(5, {{1, 3}, {2, 4}, {5}});
  CHECK(ahom_group(A, P).size() == 2);
  CHECK(ahom_order_formula(A, P) == 2);
  CHECK(ahom_order_formula(sub(5, {1, 2}), part(5, {{1, 2}, {3}, {4}, {5}})) == 12);
  CHECK(ahom_group(sub(5, {1, 2}), part(5, {{1, 2}, {3}, {4}, {5}})).size() == 12);
}

TEST_CASE("AHom closure equals enumeration of compatible pairs") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int r = 1; r <= n; ++r) {
        for (auto const& A : enumerate_subsets(n, m)) {
          for (auto const& P : enumerate_partitions(n, r)) {
            auto const G = ahom_group(A, P);
            CHECK(G.elements() == ahom_by_enumeration(A, P));
            CHECK(G.size() == ahom_order_formula(A, P));
          }
        }
      }
    }
  }
}

TEST_CASE("bar map") {
  CHECK(bar_map(perm({2, 1, 3}), sub(5, {1, 2, 4}), part(5, {{1, 2}, {3, 4}, {5}}))
        == Permutation::identity(3));
  CHECK(bar_map(perm({2, 1}), sub(5, {1, 3}), part(5, {{1, 2}, {3, 4}, {5}}))
        == perm({2, 1, 3}));
  CHECK_THROWS_AS(bar_map(perm({1, 3, 2}), sub(3, {1, 2, 3}), part(3, {{1, 2}, {3}})),
                  InvalidArgument);
}
