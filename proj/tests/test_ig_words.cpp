#include "doctest.h"

#include <algorithm>
#include <random>

#include "igtn/errors.hpp"
#include "igtn/ig_words.hpp"
#include "igtn/parallel.hpp"
#include "test_helpers.hpp"

using namespace igtn;
using namespace igtn::test;

namespace {
  std::vector<Idempotent> letters_of(int n) {
    std::vector<Idempotent> out;
    for (auto const& e : all_idempotents(n)) {
      if (!e.transformation().is_identity()) {
        out.push_back(e);
      }
    }
    return out;
  }

  IgWord random_word(int n, std::size_t max_len, std::mt19937_64& rng) {
    static auto const L5 = letters_of(5);
    static auto const L4 = letters_of(4);
    auto const&       L  = n == 5 ? L5 : L4;
    IgWord            w{n, {}};
    auto const len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      w.letters.push_back(L[std::uniform_int_distribution<std::size_t>(0, L.size() - 1)(rng)]);
    }
    return w;
  }

  // Idempotents with a prescribed image and a prescribed kernel.
  Transformation onto(Subset const& A) {
    std::vector<std::uint8_t> img;
    int const                 a0 = A.elements().front();
    for (int x = 0; x < A.n(); ++x) {
      img.push_back(static_cast<std::uint8_t>(A.contains(x) ? x : a0));
    }
    return Transformation(img);
  }

  Transformation with_kernel(SetPartition const& P) {
    std::vector<std::uint8_t> img;
    for (int x = 0; x < P.n(); ++x) {
      img.push_back(static_cast<std::uint8_t>(P.block(P.class_of(x)).elements().front()));
    }
    return Transformation(img);
  }

  PermCoset trivial_coset(int m) {
    return {PermSubgroup::trivial(Permutation::identity(m)), Permutation::identity(m)};
  }

  IgWord const two_factor = word(5, {idem({1, 1, 3, 3, 5}), idem({1, 2, 1, 2, 5})});
}  // namespace

TEST_CASE("normalize and evaluate") {
  auto const w = word(4, {eps(1, 2, 4), Idempotent::identity(4), eps(2, 1, 4)});
  CHECK(normalize(w).size() == 2);
  CHECK(evaluate(w) == eps(2, 1, 4).transformation());
  CHECK(evaluate(word(4, {})) == Transformation::identity(4));
  CHECK_THROWS_AS(IgWord::make(4, {eps(1, 2, 5)}), SizeMismatch);
}

TEST_CASE("regularity of a product is decided by its rank") {
  int const n = 5;
  for (int m = 1; m <= n; ++m) {
    for (int r = 1; r <= n; ++r) {
      for (auto const& A : enumerate_subsets(n, m)) {
        for (auto const& P : enumerate_partitions(n, r)) {
          int const rank = compose(onto(A), with_kernel(P)).rank();
          CHECK(product_is_regular(A, P) == (rank == std::min(m, r)));
        }
      }
    }
  }
}

TEST_CASE("regular_product") {
  auto const t1 = rees_coordinates(tr({1, 1, 3, 3, 5}));
  auto const p  = regular_product(t1, rees_coordinates(tr({1, 2, 2, 4, 4})));
  REQUIRE(p);
  CHECK(triple_to_transformation(*p) == tr({1, 1, 2, 2, 4}));
  CHECK_FALSE(regular_product(t1, rees_coordinates(tr({1, 2, 1, 2, 5}))).has_value());
}

TEST_CASE("factorisation examples") {
  auto const a = minimal_r_factorisation(word(4, {eps(1, 2, 4), eps(2, 1, 4)}));
  CHECK(a.factors.size() == 1);
  CHECK(a.fingerprint().ranks == std::vector<int>{3});
  CHECK_FALSE(a.supported());

  auto const b = minimal_r_factorisation(two_factor);
  REQUIRE(b.factors.size() == 2);
  CHECK(b.fingerprint().ranks == std::vector<int>{3, 3});
  CHECK(b.supported());
  CHECK(fingerprint(two_factor).ranks == std::vector<int>{3, 3});

  CHECK(fingerprint(word(5, {})).ranks == std::vector<int>{5});
  auto const e = idem({1, 1, 3, 4, 5});
  CHECK(minimal_r_factorisation(word(5, {e, e})).factors.size() == 1);
}

TEST_CASE("factorisation invariants on random words") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    auto const w = random_word(5, 8, rng);
    auto const x = minimal_r_factorisation(w);
    REQUIRE_FALSE(x.factors.empty());
    CHECK(x.factors.front().begin == 0);
    CHECK(x.factors.back().end == x.word.size());
    Transformation total = Transformation::identity(5);
    for (std::size_t k = 0; k < x.factors.size(); ++k) {
      auto const& f = x.factors[k];
      IgWord      seg{5, {x.word.letters.begin() + static_cast<std::ptrdiff_t>(f.begin),
                      x.word.letters.begin() + static_cast<std::ptrdiff_t>(f.end)}};
      CHECK(evaluate(seg) == f.value);
      total = compose(total, f.value);
      if (k > 0) {
        CHECK(x.factors[k - 1].end == f.begin);
        CHECK_FALSE(product_is_regular(x.factors[k - 1].image(), f.kernel()));
      }
    }
    CHECK(total == evaluate(w));
  }
}

TEST_CASE("basic rewrites") {
  auto const w  = word(4, {eps(1, 2, 4), eps(2, 1, 4)});
  auto const cs = contractions(w);
  CHECK(std::find(cs.begin(), cs.end(), word(4, {eps(2, 1, 4)})) != cs.end());
  auto const closure = contraction_closure(w);
  CHECK(std::find(closure.begin(), closure.end(), word(4, {eps(2, 1, 4)})) != closure.end());
  for (auto const& [e, f] : expansions_of(eps(2, 1, 4))) {
    CHECK(biorder_product(e, f) == eps(2, 1, 4));
  }
  CHECK_THROWS_AS(expansions_of(epsilon(0, 1, 7)), CapExceeded);
}

TEST_CASE("word problem examples") {
  CHECK(ig_equal(word(4, {eps(1, 2, 4), eps(2, 1, 4)}), word(4, {eps(2, 1, 4)})).equal());
  CHECK(ig_equal(two_factor, two_factor).equal());
  CHECK(ig_equal(word(5, {}), word(5, {Idempotent::identity(5)})).equal());
  auto const v = ig_equal(two_factor, word(5, {idem({1, 1, 3, 3, 5})}));
  CHECK(v.kind == Verdict::Kind::not_equal);
  CHECK_THROWS_AS(ig_equal(word(4, {}), word(5, {})), SizeMismatch);
}

TEST_CASE("contraction then expansion is judged equal") {
  std::mt19937_64 rng(5);
  int             checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto const w  = normalize(random_word(5, 6, rng));
    auto const cs = contractions(w);
    if (cs.empty()) {
      continue;
    }
    auto const& c = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)];
    for (auto const& u : basic_rewrites(c)) {
      auto const v = ig_equal(w, u);
      CHECK(v.kind != Verdict::Kind::not_equal);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("theta routes agree and carry chain witnesses") {
  std::mt19937_64 rng(9);
  int             runs = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto const x = minimal_r_factorisation(random_word(5, 8, rng));
    auto       w = x.word;
    if (w.is_identity() || x.factors.size() < 2 || !x.supported()) {
      continue;
    }
    w.letters[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)]
        = random_word(5, 1, rng).letters[0];
    auto const y = minimal_r_factorisation(w);
    if (!y.supported() || !(x.fingerprint() == y.fingerprint())) {
      continue;
    }
    ++runs;
    int const  m1 = x.factors[0].rank();
    auto const a  = theta(trivial_coset(m1), x, y, {GroupMethod::theorem, nullptr});
    auto const b  = theta(trivial_coset(m1), x, y, {GroupMethod::oracle, nullptr});
    REQUIRE(a.coset.has_value() == b.coset.has_value());
    if (!a.coset) {
      continue;
    }
    CHECK(a.coset->elements() == b.coset->elements());
    auto const c = chain_witness(a);
    REQUIRE(c);
    std::vector<PairSubgroup const*> W;
    for (std::size_t k = 0; k + 1 < a.stages.size(); ++k) {
      W.push_back(b.stages[k].W.get());
    }
    CHECK(check_chain_witness(*c, a, W));
  }
  CHECK(runs > 100);
}

TEST_CASE("Green relations") {
  auto const x = two_factor;
  for (auto rel : {GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::D,
                   GreenRelation::J}) {
    CHECK(ig_green(x, x, rel).related());
  }
  // Single-factor words: R by kernels, L by images.
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    auto const u = random_word(5, 3, rng);
    auto const v = random_word(5, 3, rng);
    auto const a = minimal_r_factorisation(u);
    auto const b = minimal_r_factorisation(v);
    if (a.factors.size() != 1 || b.factors.size() != 1 || !(a.fingerprint() == b.fingerprint())) {
      continue;
    }
    CHECK(ig_green(u, v, GreenRelation::R).related()
          == (a.factors[0].kernel() == b.factors[0].kernel()));
    CHECK(ig_green(u, v, GreenRelation::L).related()
          == (a.factors[0].image() == b.factors[0].image()));
    CHECK(ig_green(u, v, GreenRelation::D).related());
  }
}

TEST_CASE("Schutzenberger groups") {
  auto const s = schutzenberger(two_factor);
  CHECK(2 % s.inner.size() == 0);
  CHECK(s.normal);
  CHECK(s.outer.size() == s.quotient_order * s.inner.size());
  CHECK_THROWS_AS(schutzenberger(word(5, {idem({1, 1, 3, 3, 5})})), InvalidArgument);
  CHECK_THROWS_AS(schutzenberger(word(5, {idem({1, 1, 3, 4, 5}), idem({1, 2, 3, 4, 4})})),
                  Unsupported);
}
