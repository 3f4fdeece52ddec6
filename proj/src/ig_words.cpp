#include "igtn/ig_words.hpp"

#include <algorithm>  // for any_of
#include <deque>      // for deque
#include <map>        // for map
#include <mutex>      // for mutex, lock_guard
#include <set>        // for set
#include <string>     // for to_string

#include "igtn/errors.hpp"

namespace igtn {

  namespace {
    constexpr int         kMaxExpansionGround = 6;
    constexpr std::size_t kMaxClosureWords    = 200'000;

    GraphCache& cache_of(ThetaOptions const& options) {
      return options.cache != nullptr ? *options.cache : default_graph_cache();
    }

    std::string junction(std::size_t k) {
      return "junction " + std::to_string(k + 1) + "|" + std::to_string(k + 2);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  IgWord IgWord::make(int n, std::vector<Idempotent> letters) {
    for (auto const& e : letters) {
      detail::check_same_n(n, e.n(), "IgWord::make");
    }
    return IgWord{n, std::move(letters)};
  }

  IgWord normalize(IgWord const& w) {
    IgWord out{w.n, {}};
    for (auto const& e : w.letters) {
      if (!e.transformation().is_identity()) {
        out.letters.push_back(e);
      }
    }
    return out;
  }

  Transformation evaluate(IgWord const& w) {
    Transformation f = Transformation::identity(w.n);
    for (auto const& e : w.letters) {
      f = compose(f, e.transformation());
    }
    return f;
  }

  bool product_is_regular(Subset const& A, SetPartition const& P2) {
    detail::check_same_n(A.n(), P2.n(), "product_is_regular");
    int const m = A.size();
    int const r = P2.size();
    return (m >= r && saturates(A, P2)) || (m <= r && separates(P2, A));
  }

  std::optional<RegularTriple> regular_product(RegularTriple const& t1,
                                               RegularTriple const& t2) {
    if (!product_is_regular(t1.image, t2.kernel)) {
      return std::nullopt;
    }
    return transformation_to_triple(
        compose(triple_to_transformation(t1), triple_to_transformation(t2)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorisation
  ////////////////////////////////////////////////////////////////////////

  Fingerprint RFactorisation::fingerprint() const {
    if (factors.empty()) {
      return Fingerprint{{word.n}};
    }
    Fingerprint out;
    for (auto const& f : factors) {
      out.ranks.push_back(f.rank());
    }
    return out;
  }

  bool RFactorisation::supported() const {
    return std::all_of(
        factors.begin(), factors.end(), [](Factor const& f) { return f.supported(); });
  }

  RFactorisation minimal_r_factorisation(IgWord const& w) {
    RFactorisation out{normalize(w), {}};
    auto const&    letters = out.word.letters;
    auto&          fs      = out.factors;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto const& e = letters[i].transformation();
      if (!fs.empty() && product_is_regular(fs.back().image(), e.kernel())) {
        fs.back().value = compose(fs.back().value, e);
        fs.back().end   = i + 1;
      } else {
        fs.push_back(Factor{i, i + 1, e, std::nullopt});
      }
    }
    // Absorbing letters can make an earlier junction regular.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
        if (product_is_regular(fs[k].image(), fs[k + 1].kernel())) {
          fs[k].value = compose(fs[k].value, fs[k + 1].value);
          fs[k].end   = fs[k + 1].end;
          fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(k) + 1);
          changed = true;
          break;
        }
      }
    }
    for (auto& f : fs) {
      if (f.rank() <= out.word.n - 2) {
        f.triple = rees_coordinates(f.value);
      }
    }
    return out;
  }

  Fingerprint fingerprint(IgWord const& w) {
    return minimal_r_factorisation(w).fingerprint();
  }

  ////////////////////////////////////////////////////////////////////////
  // θ
  ////////////////////////////////////////////////////////////////////////

  ThetaResult theta(PermCoset const&      start,
                    RFactorisation const& x,
                    RFactorisation const& y,
                    ThetaOptions const&   options) {
    detail::check_same_n(x.word.n, y.word.n, "theta");
    if (!(x.fingerprint() == y.fingerprint())) {
      throw FingerprintMismatch("theta: the words have different D-fingerprints");
    }
    std::size_t const K = x.factors.size();
    if (K < 2) {
      throw InvalidArgument("theta: needs at least two factors");
    }
    if (!x.supported() || !y.supported()) {
      throw Unsupported("theta: a factor has rank above n - 2 = "
                        + std::to_string(x.word.n - 2));
    }
    if (start.representative.degree() != x.factors[0].rank()
        || start.subgroup.identity().degree() != x.factors[0].rank()) {
      throw InvalidArgument("theta: start coset is not in S_"
                            + std::to_string(x.factors[0].rank()));
    }
    auto&       cache = cache_of(options);
    ThetaResult out;
    PermSubgroup H = start.subgroup;
    Permutation  t = start.representative;
    for (std::size_t k = 0; k < K; ++k) {
      ThetaStage st;
      st.a = x.factors[k].triple->group;
      st.b = y.factors[k].triple->group;
      st.L = conjugate(H, st.a);
      st.z = st.a.inverse() * t * st.b;
      st.H = std::move(H);
      st.t = std::move(t);
      if (k + 1 == K) {
        out.coset = PermCoset{st.L, st.z};
        out.stages.push_back(std::move(st));
        break;
      }
      st.x_vertex = Vertex{x.factors[k].image(), x.factors[k + 1].kernel()};
      st.y_vertex = Vertex{y.factors[k].image(), y.factors[k + 1].kernel()};
      st.W        = cache.vertex_group(*st.x_vertex, options.method);
      st.rep      = cache.representative(*st.x_vertex, *st.y_vertex, options.method);
      auto next   = coset_step(st.L, st.z, *st.W, st.rep);
      out.stages.push_back(std::move(st));
      if (!next) {
        return out;
      }
      H = std::move(next->subgroup);
      t = std::move(next->representative);
    }
    return out;
  }

  std::optional<ChainWitness> chain_witness(ThetaResult const& result) {
    if (!result.coset || result.stages.empty() || result.stages.front().H.size() != 1) {
      return std::nullopt;
    }
    auto const&  S = result.stages;
    std::size_t  K = S.size();
    ChainWitness out;
    out.h = result.coset->representative;
    out.x.resize(K);
    out.x[K - 1] = S[K - 1].a * out.h * S[K - 1].b.inverse();
    for (std::size_t k = K - 1; k-- > 0;) {
      auto const&                st    = S[k];
      Permutation const          z_inv = st.z.inverse();
      std::optional<Permutation> found;
      for (auto const& w : st.W->elements()) {
        if (w.second * st.rep->second != out.x[k + 1]) {
          continue;
        }
        Permutation u = w.first * st.rep->first;
        if (st.L.contains(u * z_inv)) {
          found = st.a * u * st.b.inverse();
          break;
        }
      }
      if (!found) {
        return std::nullopt;
      }
      out.x[k] = std::move(*found);
    }
    return out;
  }

  bool check_chain_witness(ChainWitness const&                     witness,
                           ThetaResult const&                      result,
                           std::vector<PairSubgroup const*> const& W) {
    auto const& S = result.stages;
    std::size_t K = S.size();
    if (witness.x.size() != K || W.size() + 1 < K || witness.x[0] != S[0].t) {
      return false;
    }
    for (std::size_t k = 0; k + 1 < K; ++k) {
      if (!S[k].rep) {
        return false;
      }
      PairPerm const pair{S[k].a.inverse() * witness.x[k] * S[k].b, witness.x[k + 1]};
      if (!W[k]->contains(pair * S[k].rep->inverse())) {
        return false;
      }
    }
    return S[K - 1].a.inverse() * witness.x[K - 1] * S[K - 1].b == witness.h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decisions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // When some factor sits above rank n - 2: a junction whose interface
    // vertices are not connected empties θ for every start.
    std::optional<std::size_t> disconnected_junction(RFactorisation const& x,
                                                     RFactorisation const& y) {
      for (std::size_t k = 0; k + 1 < x.factors.size(); ++k) {
        Vertex const v{x.factors[k].image(), x.factors[k + 1].kernel()};
        Vertex const w{y.factors[k].image(), y.factors[k + 1].kernel()};
        if (!coset_representative(v, w)) {
          return k;
        }
      }
      return std::nullopt;
    }

    bool share_contraction(IgWord const& u, IgWord const& v) {
      auto const cu = contraction_closure(u);
      auto const cv = contraction_closure(v);
      std::set<IgWord> const su(cu.begin(), cu.end());
      return std::any_of(
          cv.begin(), cv.end(), [&su](IgWord const& w) { return su.count(w) != 0; });
    }

    PermCoset trivial_start(int m) {
      return PermCoset{PermSubgroup::trivial(Permutation::identity(m)),
                       Permutation::identity(m)};
    }

    PermCoset full_start(int m) {
      return PermCoset{symmetric_group(m), Permutation::identity(m)};
    }

    bool contains_identity(std::optional<PermCoset> const& c) {
      return c && c->contains(Permutation::identity(c->representative.degree()));
    }
  }  // namespace

  Verdict ig_equal(IgWord const& w1, IgWord const& w2, ThetaOptions const& options) {
    using K = Verdict::Kind;
    detail::check_same_n(w1.n, w2.n, "ig_equal");
    IgWord const u = normalize(w1);
    IgWord const v = normalize(w2);
    if (u.is_identity() || v.is_identity()) {
      return u.is_identity() && v.is_identity()
                 ? Verdict{K::equal, "both words are the identity"}
                 : Verdict{K::not_equal, "only one word is the identity"};
    }
    if (evaluate(u) != evaluate(v)) {
      return {K::not_equal, "images in T_n differ"};
    }
    auto const x = minimal_r_factorisation(u);
    auto const y = minimal_r_factorisation(v);
    if (!(x.fingerprint() == y.fingerprint())) {
      return {K::not_equal, "D-fingerprints differ"};
    }
    if (x.factors.front().kernel() != y.factors.front().kernel()) {
      return {K::not_equal, "first factors have different kernels"};
    }
    if (x.factors.back().image() != y.factors.back().image()) {
      return {K::not_equal, "last factors have different images"};
    }
    if (x.supported() && y.supported()) {
      if (x.factors.size() == 1) {
        return x.factors[0].triple == y.factors[0].triple
                   ? Verdict{K::equal, "same Rees coordinates"}
                   : Verdict{K::not_equal, "different Rees coordinates"};
      }
      auto const r = theta(trivial_start(x.factors[0].rank()), x, y, options);
      return contains_identity(r.coset) ? Verdict{K::equal, "1 lies in theta"}
                                        : Verdict{K::not_equal, "1 does not lie in theta"};
    }
    if (auto k = disconnected_junction(x, y)) {
      return {K::not_equal, junction(*k) + ": interface vertices are not connected"};
    }
    if (share_contraction(u, v)) {
      return {K::equal, "the words contract to a common word"};
    }
    return {K::unsupported, "a factor has rank above n - 2 and no structural argument applies"};
  }

  GreenVerdict ig_green(IgWord const&       w1,
                        IgWord const&       w2,
                        GreenRelation       rel,
                        ThetaOptions const& options) {
    using K = GreenVerdict::Kind;
    detail::check_same_n(w1.n, w2.n, "ig_green");
    if (rel == GreenRelation::J) {
      rel = GreenRelation::D;
    }
    auto yes = [](std::string why) { return GreenVerdict{K::related, std::move(why)}; };
    auto no  = [](std::string why) { return GreenVerdict{K::not_related, std::move(why)}; };

    auto const x = minimal_r_factorisation(w1);
    auto const y = minimal_r_factorisation(w2);
    if (x.word.is_identity() || y.word.is_identity()) {
      return x.word.is_identity() && y.word.is_identity()
                 ? yes("both words are the identity")
                 : no("only one word is the identity");
    }
    if (!(x.fingerprint() == y.fingerprint())) {
      return no("D-fingerprints differ");
    }
    bool const same_kernel = x.factors.front().kernel() == y.factors.front().kernel();
    bool const same_image  = x.factors.back().image() == y.factors.back().image();

    if (x.factors.size() == 1) {
      switch (rel) {
        case GreenRelation::R:
          return same_kernel ? yes("same kernel") : no("different kernels");
        case GreenRelation::L:
          return same_image ? yes("same image") : no("different images");
        case GreenRelation::H:
          return same_kernel && same_image ? yes("same kernel and image")
                                           : no("different kernel or image");
        default:
          return yes("same regular D-class");
      }
    }
    if ((rel == GreenRelation::R || rel == GreenRelation::H) && !same_kernel) {
      return no("first factors have different kernels");
    }
    if ((rel == GreenRelation::L || rel == GreenRelation::H) && !same_image) {
      return no("last factors have different images");
    }

    if (!x.supported() || !y.supported()) {
      if (auto k = disconnected_junction(x, y)) {
        return no(junction(*k) + ": interface vertices are not connected");
      }
      if (share_contraction(x.word, y.word)) {
        return yes("the words contract to a common word");
      }
      return {K::unsupported, "a factor has rank above n - 2 and no structural argument applies"};
    }

    int const m1 = x.factors[0].rank();
    if (rel == GreenRelation::R || rel == GreenRelation::H) {
      auto const r = theta(trivial_start(m1), x, y, options);
      if (!r.coset) {
        return no("theta of {1} is empty");
      }
      if (rel == GreenRelation::R) {
        return yes("theta of {1} is nonempty");
      }
    }
    auto const r = theta(full_start(m1), x, y, options);
    if (rel == GreenRelation::D) {
      return r.coset ? yes("theta of G_1 is nonempty") : no("theta of G_1 is empty");
    }
    return contains_identity(r.coset) ? yes("1 lies in theta of G_1")
                                      : no("1 does not lie in theta of G_1");
  }

  Schutzenberger schutzenberger(IgWord const& w, ThetaOptions const& options) {
    auto const x = minimal_r_factorisation(w);
    if (x.factors.size() < 2) {
      throw InvalidArgument("schutzenberger: needs at least two factors");
    }
    if (!x.supported()) {
      throw Unsupported("schutzenberger: a factor has rank above n - 2");
    }
    int const  m1    = x.factors[0].rank();
    auto const inner = theta(trivial_start(m1), x, x, options);
    auto const outer = theta(full_start(m1), x, x, options);
    if (!contains_identity(inner.coset) || !contains_identity(outer.coset)) {
      throw Error("schutzenberger: theta of a subgroup is not a subgroup");
    }
    Schutzenberger out;
    out.inner               = inner.coset->subgroup;
    out.outer               = outer.coset->subgroup;
    out.trivial_start_order = out.inner.size();
    out.full_start_order    = out.outer.size();
    out.normal              = out.inner.is_subset_of(out.outer)
                 && normal_in(out.inner, out.outer);
    out.quotient_order = out.normal ? quotient_order(out.outer, out.inner) : 0;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::pair<Idempotent, Idempotent>> const& expansions_of(Idempotent const& g) {
    using Table = std::map<Transformation, std::vector<std::pair<Idempotent, Idempotent>>>;
    static std::mutex           mutex;
    static std::map<int, Table> tables;
    static std::vector<std::pair<Idempotent, Idempotent>> const none;

    int const n = g.n();
    if (n > kMaxExpansionGround) {
      throw CapExceeded("expansions_of: E(T_n) x E(T_n) scan for n = " + std::to_string(n),
                        kMaxExpansionGround);
    }
    std::lock_guard lock(mutex);
    auto            it = tables.find(n);
    if (it == tables.end()) {
      Table      table;
      auto const E = all_idempotents(n);
      for (auto const& e : E) {
        if (e.transformation().is_identity()) {
          continue;
        }
        for (auto const& f : E) {
          if (f.transformation().is_identity()) {
            continue;
          }
          if (auto p = biorder_product(e, f)) {
            table[p->transformation()].emplace_back(e, f);
          }
        }
      }
      it = tables.emplace(n, std::move(table)).first;
    }
    auto jt = it->second.find(g.transformation());
    return jt == it->second.end() ? none : jt->second;
  }

  std::vector<IgWord> contractions(IgWord const& w) {
    std::vector<IgWord> out;
    auto const&         l = w.letters;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
      if (auto p = biorder_product(l[i], l[i + 1])) {
        IgWord next{w.n, {}};
        next.letters.insert(next.letters.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
        next.letters.push_back(*p);
        next.letters.insert(next.letters.end(), l.begin() + static_cast<std::ptrdiff_t>(i) + 2, l.end());
        out.push_back(normalize(next));
      }
    }
    return out;
  }

  std::vector<IgWord> basic_rewrites(IgWord const& w) {
    auto        out = contractions(w);
    auto const& l   = w.letters;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (auto const& [e, f] : expansions_of(l[i])) {
        IgWord next{w.n, l};
        next.letters[i] = e;
        next.letters.insert(next.letters.begin() + static_cast<std::ptrdiff_t>(i) + 1, f);
        out.push_back(std::move(next));
      }
    }
    return out;
  }

  std::vector<IgWord> contraction_closure(IgWord const& w) {
    IgWord const       start = normalize(w);
    std::set<IgWord>   seen{start};
    std::deque<IgWord> queue{start};
    while (!queue.empty()) {
      IgWord cur = std::move(queue.front());
      queue.pop_front();
      for (auto& next : contractions(cur)) {
        if (seen.insert(next).second) {
          if (seen.size() > kMaxClosureWords) {
            throw CapExceeded("contraction_closure: too many words", kMaxClosureWords);
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

}  // namespace igtn
