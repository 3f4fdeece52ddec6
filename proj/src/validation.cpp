#include "igtn/validation.hpp"

#include <algorithm>  // for shuffle
#include <bit>        // for popcount
#include <chrono>     // for steady_clock
#include <cstdio>     // for snprintf
#include <map>        // for map
#include <memory>     // for shared_ptr
#include <random>     // for uniform_int_distribution
#include <set>        // for set

#include "igtn/contact_graph.hpp"
#include "igtn/ig_words.hpp"
#include "igtn/parallel.hpp"
#include "igtn/permgroups.hpp"
#include "igtn/transformations.hpp"

namespace igtn {

  namespace {
    using Clock = std::chrono::steady_clock;

    class Timer {
     public:
      double seconds() const {
        return std::chrono::duration<double>(Clock::now() - _start).count();
      }

     private:
      Clock::time_point _start = Clock::now();
    };

    SuiteReport make_report(int id, std::string name) {
      SuiteReport rep;
      rep.id   = id;
      rep.name = std::move(name);
      return rep;
    }

    bool full(SuiteConfig const& cfg) {
      return cfg.level == SuiteLevel::full;
    }

    std::uint32_t preimage(Transformation const& f, std::uint32_t mask) {
      std::uint32_t out = 0;
      for (int x = 0; x < f.n(); ++x) {
        if ((mask >> f[x]) & 1u) {
          out |= 1u << x;
        }
      }
      return out;
    }

    // a_i ∈ P_j  <=>  b_{iπ} ∈ Q_{jπ'}, written out pointwise.
    bool compatible(Vertex const& v, Vertex const& w, PairPerm const& label) {
      auto const a = v.A.elements();
      auto const b = w.A.elements();
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (int j = 0; j < v.P.size(); ++j) {
          bool const lhs = (v.P.block_mask(j) >> a[i]) & 1u;
          bool const rhs = (w.P.block_mask(label.second[j])
                            >> b[static_cast<std::size_t>(label.first[static_cast<int>(i)])])
                           & 1u;
          if (lhs != rhs) {
            return false;
          }
        }
      }
      return true;
    }

    std::string fmt(char const* f, double x) {
      char buf[64];
      std::snprintf(buf, sizeof buf, f, x);
      return buf;
    }

    Permutation random_permutation(int k, std::mt19937_64& rng) {
      std::vector<std::uint8_t> img(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
      }
      std::shuffle(img.begin(), img.end(), rng);
      return Permutation(std::move(img));
    }

    template <typename T>
    T const& pick(std::vector<T> const& v, std::mt19937_64& rng) {
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    }

    std::vector<Idempotent> non_identity_idempotents(int n) {
      std::vector<Idempotent> out;
      for (auto& e : all_idempotents(n)) {
        if (!e.transformation().is_identity()) {
          out.push_back(e);
        }
      }
      return out;
    }

    IgWord random_word(int                            n,
                       std::vector<Idempotent> const& letters,
                       std::size_t                    max_len,
                       std::mt19937_64&               rng) {
      IgWord    w{n, {}};
      auto const len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
      for (std::size_t i = 0; i < len; ++i) {
        w.letters.push_back(pick(letters, rng));
      }
      return w;
    }

    std::uint64_t factorial(int k) {
      std::uint64_t f = 1;
      for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::uint64_t>(i);
      }
      return f;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // 1. Vertex groups
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_vertex_groups(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(1, "vertex groups: oracle = theorem (n = 4, 5; m, r <= n - 2)");
    std::size_t nontrivial = 0;
    for (int n : {4, 5}) {
      for (int m = 1; m <= n - 2; ++m) {
        for (int r = 1; r <= n - 2; ++r) {
          auto const              g = ContactGraph::build(n, m, r);
          VertexGroupOracle const oracle(g);
          std::vector<char>       bad(g.vertices().size(), 0);
          std::vector<char>       big(g.vertices().size(), 0);
          parallel_for(
              g.vertices().size(),
              [&](std::size_t i) {
                auto const W = oracle.group(i);
                bad[i]       = !(W == vertex_group_theorem(g.vertex(i)));
                big[i]       = W.size() > 1;
              },
              cfg.threads);
          rep.checked += g.vertices().size();
          rep.violations += static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
          nontrivial += static_cast<std::size_t>(std::count(big.begin(), big.end(), 1));
        }
      }
    }
    rep.detail  = std::to_string(nontrivial) + " vertices with a nontrivial group";
    rep.seconds = timer.seconds();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. AHom orders
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_ahom_orders(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(2, "AHom order = product formula (n <= 6; m, r <= n - 2)");
    int const   top = full(cfg) ? 6 : 5;
    for (int n = 3; n <= top; ++n) {
      for (int m = 1; m <= n - 2; ++m) {
        auto const subsets = enumerate_subsets(n, m);
        for (int r = 1; r <= n - 2; ++r) {
          auto const        parts = enumerate_partitions(n, r);
          std::size_t const total = subsets.size() * parts.size();
          std::vector<char> bad(total, 0);
          parallel_for(
              total,
              [&](std::size_t i) {
                auto const& A    = subsets[i / parts.size()];
                auto const& P    = parts[i % parts.size()];
                auto const  gens = ahom_generators(A, P);
                bool        ok   = true;
                for (auto const& x : gens) {
                  ok = ok && compatible(Vertex{A, P}, Vertex{A, P}, x);
                }
                ok     = ok && ahom_group(A, P).size() == ahom_order_formula(A, P);
                bad[i] = !ok;
              },
              cfg.threads);
          rep.checked += total;
          rep.violations += static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
        }
      }
    }
    rep.seconds = timer.seconds();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Components
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_components(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(3, "components = stationary singletons + pair-type classes (n <= 5)");
    std::size_t graphs = 0;
    for (int n = 2; n <= 5; ++n) {
      for (int m = 1; m <= n - 1; ++m) {
        for (int r = 1; r <= n - 1; ++r) {
          auto const g = ContactGraph::build(n, m, r);
          ++graphs;
          // Class key: the pair type, or the vertex itself when stationary.
          std::map<std::pair<std::vector<int>, std::size_t>, std::set<std::size_t>> comps;
          for (std::size_t i = 0; i < g.vertices().size(); ++i) {
            auto const& v   = g.vertex(i);
            bool const  st  = is_stationary(v.A, v.P);
            auto const  key = std::make_pair(pair_type(v.A, v.P).sizes,
                                            st ? i : static_cast<std::size_t>(-1));
            comps[key].insert(g.component_id(i));
          }
          std::set<std::size_t> used;
          for (auto const& [key, ids] : comps) {
            if (ids.size() != 1 || !used.insert(*ids.begin()).second) {
              ++rep.violations;
            }
          }
          rep.violations += used.size() == g.component_count() ? 0 : 1;
          rep.checked += g.vertices().size();
        }
      }
    }
    rep.detail  = std::to_string(graphs) + " graphs";
    rep.seconds = timer.seconds();
    (void) cfg;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Edge labels
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_edge_labels(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(4, "edge labels satisfy both equations and are homeomorphisms (n <= 5)");
    int const   top = full(cfg) ? 5 : 4;
    for (auto policy : {EdgePolicy::rank_n_minus_1, EdgePolicy::all_idempotents}) {
      for (int n = 2; n <= top; ++n) {
        for (int m = 1; m <= n; ++m) {
          for (int r = 1; r <= n; ++r) {
            auto const        g = ContactGraph::build(n, m, r, policy);
            std::vector<char> bad(g.edges().size(), 0);
            parallel_for(
                g.edges().size(),
                [&](std::size_t i) {
                  auto const  edge = g.labelled_edge(i);
                  auto const& e    = edge.witness.transformation();
                  auto const  a    = edge.src.A.elements();
                  auto const  b    = edge.dst.A.elements();
                  auto const& pi   = edge.label.first;
                  auto const& pi2  = edge.label.second;
                  bool        ok   = true;
                  for (std::size_t k = 0; k < a.size(); ++k) {
                    ok = ok
                         && e[b[static_cast<std::size_t>(pi[static_cast<int>(k)])]] == a[k];
                  }
                  for (int j = 0; j < edge.src.P.size(); ++j) {
                    ok = ok
                         && preimage(e, edge.src.P.block_mask(j))
                                == edge.dst.P.block_mask(pi2[j]);
                  }
                  ok     = ok && compatible(edge.src, edge.dst, edge.label);
                  bad[i] = !ok;
                },
                cfg.threads);
            rep.checked += g.edges().size();
            rep.violations += static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
          }
        }
      }
    }
    rep.detail        = std::to_string(rep.checked) + " edges over both generator policies";
    rep.seconds       = timer.seconds();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Rees products
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // A1 ⊥ P2, written out: every class of P2 holds exactly one point of A1.
    bool transversal_by_count(Subset const& A, SetPartition const& P) {
      for (int j = 0; j < P.size(); ++j) {
        if (std::popcount(A.mask() & P.block_mask(j)) != 1) {
          return false;
        }
      }
      return A.size() == P.size();
    }

    bool rees_agrees(RegularTriple const& t1, RegularTriple const& t2) {
      auto const prod = compose(triple_to_transformation(t1), triple_to_transformation(t2));
      auto const res  = rees_multiply(t1, t2);
      bool const zero = !transversal_by_count(t1.image, t2.kernel);
      if (zero) {
        return !res && prod.rank() < t1.rank();
      }
      return res && triple_to_transformation(*res) == prod;
    }

    std::vector<RegularTriple> all_triples(int n, int m) {
      std::vector<RegularTriple> out;
      auto                       perms = symmetric_group(m).elements();
      for (auto const& P : enumerate_partitions(n, m)) {
        for (auto const& A : enumerate_subsets(n, m)) {
          for (auto const& g : perms) {
            out.push_back(RegularTriple{P, g, A});
          }
        }
      }
      return out;
    }
  }  // namespace

  SuiteReport check_rees_products(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(5, "Rees products = composition (n = 4 exhaustive, n = 5 random)");
    for (int m = 1; m <= 2; ++m) {
      auto const ts = all_triples(4, m);
      for (auto const& t1 : ts) {
        for (auto const& t2 : ts) {
          rep.violations += rees_agrees(t1, t2) ? 0 : 1;
          ++rep.checked;
        }
      }
    }
    std::size_t const samples = full(cfg) ? 100'000 : 10'000;
    std::vector<std::vector<SetPartition>> parts;
    std::vector<std::vector<Subset>>       subs;
    for (int m = 0; m <= 3; ++m) {
      parts.push_back(m ? enumerate_partitions(5, m) : std::vector<SetPartition>{});
      subs.push_back(m ? enumerate_subsets(5, m) : std::vector<Subset>{});
    }
    std::vector<char> bad(samples, 0);
    parallel_for(
        samples,
        [&](std::size_t i) {
          auto      rng = rng_for(cfg.seed ^ 5u, i);
          int const m   = std::uniform_int_distribution<int>(1, 3)(rng);
          auto      t   = [&] {
            return RegularTriple{pick(parts[static_cast<std::size_t>(m)], rng),
                                 random_permutation(m, rng),
                                 pick(subs[static_cast<std::size_t>(m)], rng)};
          };
          auto const t1 = t();
          auto const t2 = t();
          bad[i]        = !rees_agrees(t1, t2);
        },
        cfg.threads);
    rep.checked += samples;
    rep.violations += static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    rep.threshold_met = !full(cfg) || samples >= 100'000;
    rep.detail        = std::to_string(samples) + " random pairs at n = 5";
    rep.seconds       = timer.seconds();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Degenerate rank
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_degenerate_rank(SuiteConfig const& cfg) {
    Timer       timer;
    SuiteReport rep = make_report(6, "m or r = n - 1: non-regular => stationary and isolated (n <= 5)");
    std::size_t nonregular = 0;
    for (auto policy : {EdgePolicy::rank_n_minus_1, EdgePolicy::all_idempotents}) {
      for (int n = 2; n <= 5; ++n) {
        for (int m = 1; m <= n - 1; ++m) {
          for (int r = 1; r <= n - 1; ++r) {
            if (m != n - 1 && r != n - 1) {
              continue;
            }
            auto const g = ContactGraph::build(n, m, r, policy);
            for (std::size_t i = 0; i < g.vertices().size(); ++i) {
              auto const& v = g.vertex(i);
              if (is_regular_pair(v.A, v.P)) {
                continue;
              }
              ++nonregular;
              ++rep.checked;
              bool isolated = true;
              for (auto step : g.incident(i)) {
                isolated = isolated && g.step_target(step) == i;
              }
              if (!is_stationary(v.A, v.P) || !isolated) {
                ++rep.violations;
              }
            }
          }
        }
      }
    }
    rep.detail  = std::to_string(nonregular) + " non-regular vertices over both policies";
    rep.seconds = timer.seconds();
    (void) cfg;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Word problem
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct WordTally {
      std::size_t violations  = 0;
      std::size_t comparisons = 0;
      std::size_t unsupported = 0;
      std::size_t equal       = 0;
      std::size_t theta_runs  = 0;
      std::size_t witnesses   = 0;
      std::string first_failure;
    };
  }  // namespace

  namespace {
    std::vector<Permutation> coset_elements(std::optional<PermCoset> const& c) {
      return c ? c->elements() : std::vector<Permutation>{};
    }

    // θ({1}, x, y) by both routes: the results must agree, be empty or a
    // coset of a genuine subgroup, and carry a chain witness that checks
    // out against the oracle vertex groups.
    void check_theta(RFactorisation const& x,
                     RFactorisation const& y,
                     WordTally&            tally) {
      if (x.factors.size() < 2 || !x.supported() || !y.supported()
          || !(x.fingerprint() == y.fingerprint())) {
        return;
      }
      ++tally.theta_runs;
      int const  m1 = x.factors[0].rank();
      PermCoset  start{PermSubgroup::trivial(Permutation::identity(m1)),
                      Permutation::identity(m1)};
      auto const rt = theta(start, x, y, {GroupMethod::theorem, nullptr});
      auto const ro = theta(start, x, y, {GroupMethod::oracle, nullptr});
      auto       fail = [&](std::string why) {
        if (tally.first_failure.empty()) {
          tally.first_failure = std::move(why);
        }
        ++tally.violations;
      };
      if (coset_elements(rt.coset) != coset_elements(ro.coset)) {
        fail("theta differs between theorem and oracle routes");
        return;
      }
      if (!rt.coset) {
        return;
      }
      auto const& H = rt.coset->subgroup;
      if (!(PermSubgroup::closure(H.identity(), H.generators()) == H)) {
        fail("theta subgroup is not closed");
        return;
      }
      auto const w = chain_witness(rt);
      if (!w) {
        fail("no chain witness");
        return;
      }
      std::vector<std::shared_ptr<PairSubgroup const>> keep;
      std::vector<PairSubgroup const*>                 W;
      for (std::size_t k = 0; k + 1 < rt.stages.size(); ++k) {
        keep.push_back(
            default_graph_cache().vertex_group(*rt.stages[k].x_vertex, GroupMethod::oracle));
        W.push_back(keep.back().get());
      }
      if (!check_chain_witness(*w, rt, W)) {
        fail("chain witness fails against oracle vertex groups");
        return;
      }
      ++tally.witnesses;
    }
  }  // namespace

  SuiteReport check_word_problem(SuiteConfig const& cfg) {
    Timer             timer;
    SuiteReport       rep = make_report(7, "word problem: rewrite invariance and soundness (n = 5)");
    int const         n       = 5;
    std::size_t const count   = full(cfg) ? 10'000 : 1'500;
    auto const        letters = non_identity_idempotents(n);
    std::vector<WordTally> tallies(count);

    parallel_for(
        count,
        [&](std::size_t i) {
          auto        rng = rng_for(cfg.seed ^ 7u, i);
          WordTally&  t   = tallies[i];
          auto        fail = [&](std::string why) {
            if (t.first_failure.empty()) {
              t.first_failure = std::move(why);
            }
            ++t.violations;
          };
          IgWord const w0 = normalize(random_word(n, letters, 8, rng));
          if (w0.is_identity()) {
            return;
          }
          auto const fp0 = fingerprint(w0);

          std::vector<IgWord> chain;
          IgWord              cur   = w0;
          int const           steps = std::uniform_int_distribution<int>(1, 5)(rng);
          for (int s = 0; s < steps; ++s) {
            // Keep words short: only contract once they get long.
            auto next = cur.size() >= 10 ? contractions(cur) : basic_rewrites(cur);
            if (next.empty()) {
              break;
            }
            cur = pick(next, rng);
            chain.push_back(cur);
          }

          // A nearby word: one letter swapped for a random one.
          IgWord u = w0;
          u.letters[std::uniform_int_distribution<std::size_t>(0, u.size() - 1)(rng)]
              = pick(letters, rng);
          u                    = normalize(u);
          auto const base_vs_u = ig_equal(w0, u).kind;

          for (auto const& wk : chain) {
            ++t.comparisons;
            if (!(fingerprint(wk) == fp0)) {
              fail("fingerprint changed under a rewrite: " + std::to_string(i));
            }
            auto const v = ig_equal(w0, wk);
            if (v.kind != ig_equal(wk, w0).kind) {
              fail("ig_equal is not symmetric");
            }
            if (v.kind == Verdict::Kind::not_equal) {
              fail("rewrite judged NotEqual: " + v.reason);
            } else if (v.kind == Verdict::Kind::unsupported) {
              ++t.unsupported;
            } else {
              ++t.equal;
              if (evaluate(w0) != evaluate(wk)) {
                fail("Equal but images in T_n differ");
              }
            }
            auto const vu = ig_equal(wk, u).kind;
            if (vu != Verdict::Kind::unsupported && base_vs_u != Verdict::Kind::unsupported
                && vu != base_vs_u) {
              fail("verdict against a third word changed under a rewrite");
            }
          }
          auto const x = minimal_r_factorisation(w0);
          if (!chain.empty()) {
            check_theta(x, minimal_r_factorisation(chain.back()), t);
          }
          check_theta(x, minimal_r_factorisation(u), t);
        },
        cfg.threads);

    WordTally total;
    for (auto const& t : tallies) {
      total.violations += t.violations;
      total.comparisons += t.comparisons;
      total.unsupported += t.unsupported;
      total.equal += t.equal;
      total.theta_runs += t.theta_runs;
      total.witnesses += t.witnesses;
      if (total.first_failure.empty()) {
        total.first_failure = t.first_failure;
      }
    }
    rep.checked       = count;
    rep.violations    = total.violations;
    rep.threshold_met = !full(cfg) || count >= 10'000;
    double const rate
        = total.comparisons ? 100.0 * static_cast<double>(total.unsupported)
                                  / static_cast<double>(total.comparisons)
                            : 0.0;
    rep.detail = std::to_string(total.comparisons) + " rewrite comparisons, "
                 + std::to_string(total.equal) + " Equal, " + std::to_string(total.unsupported)
                 + " Unsupported (" + fmt("%.2f", rate) + "%), "
                 + std::to_string(total.theta_runs) + " theta runs, "
                 + std::to_string(total.witnesses) + " witnesses verified";
    if (!total.first_failure.empty()) {
      rep.detail += "; first failure: " + total.first_failure;
    }
    rep.seconds = timer.seconds();
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. Schützenberger groups
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_schutzenberger(SuiteConfig const& cfg) {
    Timer             timer;
    SuiteReport       rep = make_report(8, "({1},x,x)theta normal in (G_1,x,x)theta (n = 5, two factors)");
    int const         n       = 5;
    std::size_t const count   = full(cfg) ? 200 : 100;
    auto const        letters = non_identity_idempotents(n);
    std::vector<char>        bad(count, 0);
    std::vector<std::size_t> quotients(count, 0);

    parallel_for(
        count,
        [&](std::size_t i) {
          auto rng = rng_for(cfg.seed ^ 8u, i);
          // Rejection sampling for supported two-factor words.
          while (true) {
            IgWord const w = random_word(n, letters, 6, rng);
            auto const   x = minimal_r_factorisation(w);
            if (x.factors.size() != 2 || !x.supported()) {
              continue;
            }
            auto const s  = schutzenberger(w);
            // θ lands in the group of the last factor.
            auto const id = Permutation::identity(x.factors.back().rank());
            bool       ok = s.inner.contains(id)
                      && PermSubgroup::closure(id, s.inner.generators()) == s.inner
                      && s.normal && s.outer.size() % s.inner.size() == 0
                      && factorial(x.factors[0].rank()) % s.quotient_order == 0;
            auto const so = schutzenberger(w, {GroupMethod::oracle, nullptr});
            ok            = ok && so.inner == s.inner && so.outer == s.outer;
            bad[i]        = !ok;
            quotients[i]  = s.quotient_order;
            return;
          }
        },
        cfg.threads);

    std::map<std::size_t, std::size_t> histogram;
    for (auto q : quotients) {
      ++histogram[q];
    }
    rep.checked    = count;
    rep.violations = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    rep.detail     = "quotient orders:";
    for (auto [q, k] : histogram) {
      rep.detail += " " + std::to_string(q) + "x" + std::to_string(k);
    }
    rep.seconds = timer.seconds();
    return rep;
  }

  std::vector<SuiteReport> run_all_suites(SuiteConfig const& cfg) {
    return {check_vertex_groups(cfg),  check_ahom_orders(cfg),
            check_components(cfg),     check_edge_labels(cfg),
            check_rees_products(cfg),  check_degenerate_rank(cfg),
            check_word_problem(cfg),   check_schutzenberger(cfg)};
  }

}  // namespace igtn
