#include "doctest.h"

#include "igtn/errors.hpp"
#include "igtn/transformations.hpp"
#include "test_helpers.hpp"

using namespace igtn;
using namespace igtn::test;

namespace {
  std::size_t count_idempotents_by_brute_force(int n) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n), 0);
    std::size_t               count = 0;
    while (true) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        ok = img[img[static_cast<std::size_t>(x)]] == img[static_cast<std::size_t>(x)];
      }
      count += ok ? 1 : 0;
      int k = 0;
      while (k < n && ++img[static_cast<std::size_t>(k)] == n) {
        img[static_cast<std::size_t>(k++)] = 0;
      }
      if (k == n) {
        return count;
      }
    }
  }
}  // namespace

TEST_CASE("composition acts on the right") {
  int const n = 4;
  CHECK(eps(1, 2, n).transformation() == tr({1, 1, 3, 4}));
  CHECK(compose(eps(1, 2, n).transformation(), eps(2, 1, n).transformation())
        == eps(2, 1, n).transformation());
  CHECK(compose(tr({2, 3, 1}), tr({1, 1, 3})) == tr({1, 3, 1}));
}

TEST_CASE("kernel, image, rank") {
  auto const f = tr({1, 1, 1, 4, 5});
  CHECK(f.kernel() == part(5, {{1, 2, 3}, {4}, {5}}));
  CHECK(f.image() == sub(5, {1, 4, 5}));
  CHECK(f.rank() == 3);
  CHECK(f.is_idempotent());
  CHECK_FALSE(tr({2, 3, 1}).is_idempotent());
  CHECK_THROWS_AS(tr({1, 5}), InvalidArgument);
}

TEST_CASE("Green relations in T_n") {
  CHECK(green_related(tr({1, 1, 3, 4}), tr({3, 3, 1, 4}), GreenRelation::L));
  CHECK(green_related(tr({1, 1, 3, 4}), tr({2, 2, 3, 4}), GreenRelation::R));
  CHECK_FALSE(green_related(tr({1, 1, 3, 4}), tr({1, 2, 2, 4}), GreenRelation::R));
  CHECK(green_related(tr({1, 1, 3, 4}), tr({1, 2, 2, 4}), GreenRelation::D));
}

TEST_CASE("idempotent counts match brute force") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(all_idempotents(n).size() == count_idempotents_by_brute_force(n));
  }
  CHECK(all_idempotents(5).size() == 196);
  CHECK(rank_n_minus_1_idempotents(4).size() == 12);
}

TEST_CASE("basic pairs") {
  int const n = 4;
  CHECK(is_basic_pair(eps(1, 2, n), eps(2, 1, n)));
  CHECK(biorder_product(eps(1, 2, n), eps(2, 1, n)) == eps(2, 1, n));
  // Some pair in E(T_4) is not basic.
  auto const E     = all_idempotents(n);
  bool       found = false;
  for (auto const& e : E) {
    for (auto const& f : E) {
      auto const ef = compose(e.transformation(), f.transformation());
      auto const fe = compose(f.transformation(), e.transformation());
      bool const basic
          = ef == e.transformation() || ef == f.transformation() || fe == e.transformation()
            || fe == f.transformation();
      CHECK(is_basic_pair(e, f) == basic);
      CHECK(biorder_product(e, f).has_value() == basic);
      found = found || !basic;
    }
  }
  CHECK(found);
}

TEST_CASE("sandwich labels") {
  CHECK(lambda_label(part(4, {{1, 3}, {2, 4}}), sub(4, {2, 3})) == perm({2, 1}));
  CHECK(lambda_label(part(5, {{1, 4}, {2}, {3, 5}}), sub(5, {2, 4, 5})) == perm({2, 1, 3}));
  CHECK_THROWS_AS(lambda_label(part(4, {{1, 3}, {2, 4}}), sub(4, {1, 3})), InvalidArgument);
}

TEST_CASE("Rees coordinates") {
  auto const t = rees_coordinates(tr({1, 1, 1, 4, 5}));
  CHECK(t.kernel == part(5, {{1, 2, 3}, {4}, {5}}));
  CHECK(t.image == sub(5, {1, 4, 5}));
  CHECK(t.group.is_identity());

  // Every idempotent has the form (P, λ(P, A), A) and squares to itself.
  for (auto const& e : all_idempotents(5)) {
    auto const& f  = e.transformation();
    auto const  te = rees_coordinates(f);
    CHECK(te.group == lambda_label(f.kernel(), f.image()));
    CHECK(rees_multiply(te, te) == te);
    CHECK(triple_to_transformation(te) == f);
  }
  CHECK_THROWS_AS(transformation_to_triple(tr({1, 2, 3, 3})), Unsupported);
}

TEST_CASE("Rees products") {
  auto const t1 = rees_coordinates(tr({1, 1, 3, 3, 5}));
  auto const t2 = rees_coordinates(tr({1, 2, 2, 4, 4}));
  auto const p  = rees_multiply(t1, t2);
  REQUIRE(p);
  CHECK(triple_to_transformation(*p) == tr({1, 1, 2, 2, 4}));

  // {1,3,5} meets the class {1,3} twice.
  CHECK_FALSE(rees_multiply(t1, rees_coordinates(tr({1, 2, 1, 2, 5}))).has_value());
  CHECK_THROWS_AS(rees_multiply(t1, rees_coordinates(tr({1, 1, 1, 1, 5}))), SizeMismatch);
}

TEST_CASE("actions on vertices") {
  int const n = 4;
  CHECK(right_action(sub(n, {2, 3}), eps(1, 2, n)) == sub(n, {1, 3}));
  CHECK_FALSE(right_action(sub(n, {1, 2}), eps(1, 2, n)).has_value());
  auto const P = part(n, {{1, 2}, {3}, {4}});
  CHECK(left_action(eps(1, 2, n), P) == P);
  CHECK_FALSE(left_action(eps(1, 2, n), part(n, {{1, 3}, {2}, {4}})).has_value());
}
