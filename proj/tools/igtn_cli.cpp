// igtn: word problem, Green's relations and contact graphs of IG(E_Tn).
//
// Exit status: 0 Equal / related / ok, 1 NotEqual / not related / a failed
// self-test, 2 Unsupported, 3 usage or input error, 4 any other failure.

#include <iostream>  // for cout
#include <map>       // for map
#include <string>    // for string

#include "CLI11.hpp"

#include "igtn/contact_graph.hpp"
#include "igtn/errors.hpp"
#include "igtn/ig_words.hpp"
#include "igtn/io.hpp"
#include "igtn/validation.hpp"

using namespace igtn;

namespace {

  constexpr int kExitOk          = 0;
  constexpr int kExitNo          = 1;
  constexpr int kExitUnsupported = 2;
  constexpr int kExitUsage       = 3;
  constexpr int kExitFailure     = 4;

  constexpr int kQueryCap = 10;
  constexpr int kSweepCap = 8;

  struct Options {
    std::string format = "text";
    bool        accept_cost = false;
    unsigned    threads     = 0;

    int         n = 0;
    int         m = 0;
    int         r = 0;
    std::string w1, w2, A, P, rel = "R", policy = "eps", level = "quick";
    bool        oracle   = false;
    bool        trace    = false;
    bool        dot      = false;
    bool        json_out = false;
    bool        elements = false;
    std::uint64_t seed   = SuiteConfig{}.seed;
  };

  class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool as_json(Options const& o) {
    return o.format == "json";
  }

  void check_cap(Options const& o, int cap, char const* what) {
    if (o.n > cap && !o.accept_cost) {
      throw UsageError("n = " + std::to_string(o.n) + " exceeds the " + what + " cap "
                       + std::to_string(cap) + " (pass --accept-cost to override)");
    }
  }

  json envelope(std::string const& command, Options const& o) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"n", o.n}};
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  ThetaOptions theta_options(Options const& o) {
    return {o.oracle ? GroupMethod::oracle : GroupMethod::theorem, nullptr};
  }

  // θ({1}, x, y) when both words are multi-factor, supported and share a
  // fingerprint; nullopt otherwise.
  std::optional<ThetaResult> trace_of(IgWord const& u, IgWord const& v, Options const& o) {
    auto const x = minimal_r_factorisation(u);
    auto const y = minimal_r_factorisation(v);
    if (x.word.is_identity() || y.word.is_identity() || x.factors.size() < 2
        || !x.supported() || !y.supported() || !(x.fingerprint() == y.fingerprint())) {
      return std::nullopt;
    }
    int const m1 = x.factors[0].rank();
    PermCoset start{PermSubgroup::trivial(Permutation::identity(m1)),
                    Permutation::identity(m1)};
    return theta(start, x, y, theta_options(o));
  }

  void print_trace(ThetaResult const& t) {
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
      auto const& st = t.stages[k];
      std::cout << "  stage " << k + 1 << ": |H| = " << st.H.size()
                << ", t = " << format_permutation(st.t) << ", |L| = " << st.L.size();
      if (st.x_vertex) {
        std::cout << ", x at " << format_vertex(*st.x_vertex) << ", y at "
                  << format_vertex(*st.y_vertex) << ", |W| = " << st.W->size()
                  << ", rep = "
                  << (st.rep ? format_permutation(st.rep->first) + " x "
                                   + format_permutation(st.rep->second)
                             : std::string("none"));
      }
      std::cout << '\n';
    }
    if (t.coset) {
      std::cout << "  result: coset of order " << t.coset->size() << " with representative "
                << format_permutation(t.coset->representative) << '\n';
    } else {
      std::cout << "  result: empty\n";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_equal(Options const& o) {
    check_cap(o, kQueryCap, "query");
    auto const u = parse_word(o.w1, o.n);
    auto const v = parse_word(o.w2, o.n);
    auto const verdict = ig_equal(u, v, theta_options(o));
    auto const trace   = o.trace ? trace_of(u, v, o) : std::nullopt;
    if (as_json(o)) {
      json j = envelope("equal", o);
      j["words"] = json::array({to_json(u), to_json(v)});
      j.update(to_json(verdict));
      if (trace) {
        j["theta"] = to_json(*trace);
      }
      emit(j);
    } else {
      std::cout << to_string(verdict.kind) << ": " << verdict.reason << '\n';
      if (trace) {
        print_trace(*trace);
      }
    }
    switch (verdict.kind) {
      case Verdict::Kind::equal:
        return kExitOk;
      case Verdict::Kind::not_equal:
        return kExitNo;
      default:
        return kExitUnsupported;
    }
  }

  int cmd_green(Options const& o) {
    check_cap(o, kQueryCap, "query");
    auto const rel     = green_relation_from_string(o.rel);
    auto const u       = parse_word(o.w1, o.n);
    auto const v       = parse_word(o.w2, o.n);
    auto const verdict = ig_green(u, v, rel, theta_options(o));
    if (as_json(o)) {
      json j        = envelope("green", o);
      j["relation"] = to_string(rel);
      j["words"]    = json::array({to_json(u), to_json(v)});
      j.update(to_json(verdict));
      emit(j);
    } else {
      std::cout << to_string(rel) << ' ' << to_string(verdict.kind) << ": " << verdict.reason
                << '\n';
    }
    switch (verdict.kind) {
      case GreenVerdict::Kind::related:
        return kExitOk;
      case GreenVerdict::Kind::not_related:
        return kExitNo;
      default:
        return kExitUnsupported;
    }
  }

  int cmd_rfactor(Options const& o, bool fingerprint_only) {
    check_cap(o, kQueryCap, "query");
    auto const x = minimal_r_factorisation(parse_word(o.w1, o.n));
    auto const fp = x.fingerprint().ranks;
    if (as_json(o)) {
      json j = envelope(fingerprint_only ? "fingerprint" : "rfactor", o);
      if (fingerprint_only) {
        j["word"]        = to_json(x.word);
        j["fingerprint"] = fp;
      } else {
        j.update(to_json(x));
      }
      emit(j);
      return kExitOk;
    }
    std::string fps = "(";
    for (std::size_t i = 0; i < fp.size(); ++i) {
      fps += (i ? "," : "") + std::to_string(fp[i]);
    }
    fps += ")";
    if (fingerprint_only) {
      std::cout << fps << '\n';
      return kExitOk;
    }
    std::cout << "word: " << format_word(x.word) << "\nfingerprint: " << fps << '\n';
    for (std::size_t k = 0; k < x.factors.size(); ++k) {
      auto const& f = x.factors[k];
      std::cout << "factor " << k + 1 << ": letters " << f.begin + 1 << ".." << f.end
                << ", rank " << f.rank() << ", value " << format_transformation(f.value);
      if (f.triple) {
        std::cout << ", triple (" << format_partition(f.triple->kernel) << ", "
                  << format_permutation(f.triple->group) << ", "
                  << format_subset(f.triple->image) << ")";
      } else {
        std::cout << ", unsupported rank";
      }
      std::cout << '\n';
    }
    return kExitOk;
  }

  Vertex read_vertex(Options const& o) {
    Vertex v{parse_subset(o.A, o.n), parse_partition(o.P, o.n)};
    if (v.A.empty()) {
      throw InvalidArgument("A must be nonempty");
    }
    return v;
  }

  int cmd_vertex_group(Options const& o) {
    check_cap(o, kQueryCap, "query");
    auto const v          = read_vertex(o);
    bool const stationary = is_stationary(v.A, v.P);
    json       j          = envelope("vertex-group", o);
    j["vertex"]           = to_json(v);
    j["stationary"]       = stationary;
    j["type"]             = to_json(pair_type(v.A, v.P));
    std::optional<PairSubgroup> theorem;
    std::string                 unsupported;
    try {
      theorem = vertex_group_theorem(v);
    } catch (Unsupported const& e) {
      unsupported = e.what();
    }
    std::optional<PairSubgroup> oracle;
    if (o.oracle) {
      check_cap(o, kSweepCap, "sweep");
      oracle = *default_graph_cache().vertex_group(v, GroupMethod::oracle);
    }
    auto const& shown = theorem ? theorem : oracle;
    std::string note;
    if (stationary) {
      note = "stationary; AHom order " + std::to_string(ahom_order_formula(v.A, v.P));
    }
    if (as_json(o)) {
      if (shown) {
        j["group"] = to_json(*shown, o.elements);
      }
      j["method"] = theorem ? "theorem" : (oracle ? "oracle" : "none");
      if (!note.empty()) {
        j["note"] = note;
      }
      if (!unsupported.empty()) {
        j["unsupported"] = unsupported;
      }
      if (theorem && oracle) {
        j["methods_agree"] = *theorem == *oracle;
      }
      emit(j);
    } else {
      std::cout << "vertex " << format_vertex(v) << ", type " << format_type(pair_type(v.A, v.P))
                << '\n';
      if (shown) {
        std::cout << "order " << shown->size();
        if (!note.empty()) {
          std::cout << " (" << note << ")";
        }
        std::cout << '\n';
        for (auto const& g : shown->generators()) {
          std::cout << "  generator " << format_permutation(g.first) << " x "
                    << format_permutation(g.second) << '\n';
        }
      }
      if (!unsupported.empty()) {
        std::cout << "theorem route: " << unsupported << '\n';
      }
      if (theorem && oracle) {
        std::cout << "oracle " << (*theorem == *oracle ? "agrees" : "DISAGREES") << '\n';
      }
    }
    if (theorem && oracle && !(*theorem == *oracle)) {
      return kExitFailure;
    }
    return shown ? kExitOk : kExitUnsupported;
  }

  int cmd_ahom(Options const& o) {
    check_cap(o, kQueryCap, "query");
    auto const v       = read_vertex(o);
    auto const G       = ahom_group(v.A, v.P);
    auto const formula = ahom_order_formula(v.A, v.P);
    if (as_json(o)) {
      json j       = envelope("ahom", o);
      j["vertex"]  = to_json(v);
      j["type"]    = to_json(pair_type(v.A, v.P));
      j["group"]   = to_json(G, o.elements);
      j["formula"] = formula;
      emit(j);
    } else {
      std::cout << "AHom" << format_vertex(v) << ": order " << G.size() << " (formula "
                << formula << ")\n";
      for (auto const& g : G.generators()) {
        std::cout << "  generator " << format_permutation(g.first) << " x "
                  << format_permutation(g.second) << '\n';
      }
    }
    return G.size() == formula ? kExitOk : kExitFailure;
  }

  int cmd_graph(Options const& o) {
    check_cap(o, kSweepCap, "sweep");
    auto const g = ContactGraph::build(o.n, o.m, o.r, edge_policy_from_string(o.policy));
    if (o.dot) {
      std::cout << graph_to_dot(g);
    } else if (o.json_out || as_json(o)) {
      json j = envelope("graph", o);
      j.update(graph_to_json(g));
      emit(j);
    } else {
      std::cout << "A(D" << o.m << ",D" << o.r << ") for n = " << o.n << " ("
                << to_string(g.policy()) << "): " << g.vertices().size() << " vertices, "
                << g.edges().size() << " edges, " << g.component_count() << " components\n";
    }
    return kExitOk;
  }

  int cmd_components(Options const& o) {
    check_cap(o, kSweepCap, "sweep");
    auto const g = ContactGraph::build(o.n, o.m, o.r, edge_policy_from_string(o.policy));
    std::map<PairType, std::vector<std::size_t>> by_type;
    std::vector<std::size_t>                     stationary;
    for (std::size_t c = 0; c < g.component_count(); ++c) {
      auto const& v = g.vertex(g.component(c).front());
      if (is_stationary(v.A, v.P)) {
        stationary.push_back(c);
      } else {
        by_type[pair_type(v.A, v.P)].push_back(c);
      }
    }
    if (as_json(o)) {
      json j = envelope("components", o);
      j["m"] = o.m;
      j["r"] = o.r;
      j["component_count"] = g.component_count();
      json types = json::array();
      for (auto const& [t, cs] : by_type) {
        json vs = json::array();
        for (auto c : cs) {
          for (auto i : g.component(c)) {
            vs.push_back(to_json(g.vertex(i)));
          }
        }
        types.push_back({{"type", to_json(t)}, {"components", cs.size()}, {"vertices", vs}});
      }
      json st = json::array();
      for (auto c : stationary) {
        st.push_back(to_json(g.vertex(g.component(c).front())));
      }
      j["non_stationary"] = std::move(types);
      j["stationary"]     = std::move(st);
      emit(j);
    } else {
      std::cout << g.component_count() << " components\n";
      for (auto const& [t, cs] : by_type) {
        std::size_t size = 0;
        for (auto c : cs) {
          size += g.component(c).size();
        }
        std::cout << "type " << format_type(t) << ": " << cs.size() << " component(s), " << size
                  << " vertices\n";
      }
      std::cout << stationary.size() << " stationary singletons:";
      for (auto c : stationary) {
        std::cout << ' ' << format_vertex(g.vertex(g.component(c).front()));
      }
      std::cout << '\n';
    }
    return kExitOk;
  }

  int cmd_schutz(Options const& o) {
    check_cap(o, kQueryCap, "query");
    auto const w = parse_word(o.w1, o.n);
    auto const s = schutzenberger(w, theta_options(o));
    if (as_json(o)) {
      json j                   = envelope("schutz", o);
      j["word"]                = to_json(w);
      j["trivial_start_order"] = s.trivial_start_order;
      j["full_start_order"]    = s.full_start_order;
      j["normal"]              = s.normal;
      j["quotient_order"]      = s.quotient_order;
      emit(j);
    } else {
      std::cout << "|({1},x,x)theta| = " << s.trivial_start_order
                << "\n|(G_1,x,x)theta| = " << s.full_start_order
                << "\nnormal: " << (s.normal ? "yes" : "no")
                << "\nquotient order: " << s.quotient_order << '\n';
    }
    return kExitOk;
  }

  int cmd_selftest(Options const& o) {
    SuiteConfig cfg;
    cfg.level   = o.level == "full" ? SuiteLevel::full : SuiteLevel::quick;
    cfg.seed    = o.seed;
    cfg.threads = o.threads;
    auto const reports = run_all_suites(cfg);
    std::size_t passed = 0;
    json        suites = json::array();
    for (auto const& r : reports) {
      passed += r.passed() ? 1 : 0;
      if (as_json(o)) {
        suites.push_back({{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed()},
                          {"checked", r.checked},
                          {"violations", r.violations},
                          {"detail", r.detail}});
      } else {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << ". " << r.name << " ["
                  << r.checked << " checked, " << r.violations << " violations]";
        if (!r.detail.empty()) {
          std::cout << " " << r.detail;
        }
        std::cout << '\n';
      }
    }
    if (as_json(o)) {
      json j = {{"schema_version", kSchemaVersion},
                {"command", "selftest"},
                {"level", o.level},
                {"seed", o.seed},
                {"passed", passed},
                {"failed", reports.size() - passed},
                {"suites", std::move(suites)}};
      emit(j);
    } else {
      std::cout << passed << " of " << reports.size() << " suites passed\n";
    }
    return passed == reports.size() ? kExitOk : kExitNo;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"igtn: the free idempotent-generated semigroup over T_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--accept-cost", o.accept_cost, "Lift the default caps on n");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "Degree of T_n")->required()->check(CLI::Range(1, 12));
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_flag("--oracle", o.oracle, "Use brute-force vertex groups");
  };

  auto* equal = app.add_subcommand("equal", "Decide w1 = w2 in IG(E_Tn)");
  add_n(equal);
  add_oracle(equal);
  equal->add_option("w1", o.w1)->required();
  equal->add_option("w2", o.w2)->required();
  equal->add_flag("--trace", o.trace, "Show the theta stages");

  auto* green = app.add_subcommand("green", "Decide a Green relation between two words");
  add_n(green);
  add_oracle(green);
  green->add_option("--rel", o.rel, "R, L, H, D or J");
  green->add_option("w1", o.w1)->required();
  green->add_option("w2", o.w2)->required();

  auto* rfactor = app.add_subcommand("rfactor", "Minimal r-factorisation of a word");
  add_n(rfactor);
  rfactor->add_option("w", o.w1)->required();

  auto* fp = app.add_subcommand("fingerprint", "D-fingerprint of a word");
  add_n(fp);
  fp->add_option("w", o.w1)->required();

  auto* vg = app.add_subcommand("vertex-group", "Vertex group of (A, P)");
  add_n(vg);
  add_oracle(vg);
  vg->add_option("-A", o.A, "Subset, e.g. {1,3,5}")->required();
  vg->add_option("-P", o.P, "Partition, e.g. {{1,3},{2,4},{5}}")->required();
  vg->add_flag("--elements", o.elements, "List all elements (json)");

  auto* ahom = app.add_subcommand("ahom", "Auto-homeomorphism group of (A, P)");
  add_n(ahom);
  ahom->add_option("-A", o.A)->required();
  ahom->add_option("-P", o.P)->required();
  ahom->add_flag("--elements", o.elements, "List all elements (json)");

  auto add_mr = [&](CLI::App* sub) {
    add_n(sub);
    sub->add_option("-m", o.m, "Rank of the image side")->required();
    sub->add_option("-r", o.r, "Rank of the kernel side")->required();
    sub->add_option("--policy", o.policy, "eps or all")->check(CLI::IsMember({"eps", "all"}));
  };
  auto* graph = app.add_subcommand("graph", "Export a contact graph");
  add_mr(graph);
  auto* dot  = graph->add_flag("--dot", o.dot, "DOT output");
  auto* jopt = graph->add_flag("--json", o.json_out, "JSON output");
  dot->excludes(jopt);

  auto* comps = app.add_subcommand("components", "Components of a contact graph");
  add_mr(comps);

  auto* schutz = app.add_subcommand("schutz", "Schutzenberger quotient of a word");
  add_n(schutz);
  add_oracle(schutz);
  schutz->add_option("w", o.w1)->required();

  auto* self = app.add_subcommand("selftest", "Run the validation suites");
  self->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}));
  self->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*equal) return cmd_equal(o);
    if (*green) return cmd_green(o);
    if (*rfactor) return cmd_rfactor(o, false);
    if (*fp) return cmd_rfactor(o, true);
    if (*vg) return cmd_vertex_group(o);
    if (*ahom) return cmd_ahom(o);
    if (*graph) return cmd_graph(o);
    if (*comps) return cmd_components(o);
    if (*schutz) return cmd_schutz(o);
    if (*self) return cmd_selftest(o);
  } catch (UsageError const& e) {
    std::cerr << "igtn: " << e.what() << '\n';
    return kExitUsage;
  } catch (Unsupported const& e) {
    std::cerr << "igtn: unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (InvalidArgument const& e) {
    std::cerr << "igtn: " << e.what() << '\n';
    return kExitUsage;
  } catch (SizeMismatch const& e) {
    std::cerr << "igtn: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "igtn: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
