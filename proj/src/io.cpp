#include "igtn/io.hpp"

#include <algorithm>  // for replace
#include <cctype>     // for isspace
#include <regex>      // for regex, regex_match
#include <sstream>    // for ostringstream

#include "igtn/errors.hpp"

namespace igtn {

  namespace {
    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return std::string(s.substr(b, e - b + 1));
    }

    json parse_json(std::string_view s, char const* what) {
      std::string text = trim(s);
      std::replace(text.begin(), text.end(), '{', '[');
      std::replace(text.begin(), text.end(), '}', ']');
      try {
        return json::parse(text);
      } catch (json::exception const&) {
        throw InvalidArgument(std::string("cannot parse ") + what + " \"" + std::string(s)
                              + "\"");
      }
    }

    int point(json const& x, int n) {
      if (!x.is_number_integer()) {
        throw InvalidArgument("expected an integer, got " + x.dump());
      }
      int const k = x.get<int>();
      if (k < 1 || k > n) {
        throw InvalidArgument("point " + std::to_string(k) + " outside [1,"
                              + std::to_string(n) + "]");
      }
      return k - 1;
    }

    std::vector<int> points(json const& arr, int n) {
      if (!arr.is_array()) {
        throw InvalidArgument("expected an array, got " + arr.dump());
      }
      std::vector<int> out;
      for (auto const& x : arr) {
        out.push_back(point(x, n));
      }
      return out;
    }

    Idempotent letter_from_json(json const& x, int n) {
      if (x.is_string()) {
        return parse_letter(x.get<std::string>(), n);
      }
      auto const img = points(x, n);
      if (img.size() != static_cast<std::size_t>(n)) {
        throw InvalidArgument("letter " + x.dump() + " does not have " + std::to_string(n)
                              + " entries");
      }
      return Idempotent(Transformation(std::vector<std::uint8_t>(img.begin(), img.end())));
    }

    template <typename Container>
    std::string join_points(Container const& c, char open, char close) {
      std::string out(1, open);
      bool        first = true;
      for (auto x : c) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += std::to_string(static_cast<int>(x) + 1);
      }
      out += close;
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string format_subset(Subset const& A) {
    return join_points(A.elements(), '{', '}');
  }

  std::string format_partition(SetPartition const& P) {
    std::string out = "{";
    for (int j = 0; j < P.size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += format_subset(P.block(j));
    }
    return out + "}";
  }

  std::string format_transformation(Transformation const& f) {
    return join_points(f.images(), '[', ']');
  }

  std::string format_permutation(Permutation const& p) {
    return join_points(p.images(), '[', ']');
  }

  std::string format_vertex(Vertex const& v) {
    return format_subset(v.A) + "|" + format_partition(v.P);
  }

  std::string format_letter(Idempotent const& e) {
    auto const& t = e.transformation();
    if (t.is_identity()) {
      return "id";
    }
    if (t.rank() == t.n() - 1) {
      for (int j = 0; j < t.n(); ++j) {
        if (t[j] != j) {
          return "e(" + std::to_string(t[j] + 1) + "," + std::to_string(j + 1) + ")";
        }
      }
    }
    return format_transformation(t);
  }

  std::string format_word(IgWord const& w) {
    if (w.letters.empty()) {
      return "id";
    }
    std::string out;
    for (auto const& e : w.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += format_letter(e);
    }
    return out;
  }

  std::string format_type(PairType const& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.sizes.size(); ++i) {
      out += (i ? "," : "") + std::to_string(t.sizes[i]);
    }
    return out + ")";
  }

  Subset parse_subset(std::string_view s, int n) {
    auto const pts = points(parse_json(s, "subset"), n);
    return Subset::from_points(n, pts);
  }

  SetPartition parse_partition(std::string_view s, int n) {
    auto const j = parse_json(s, "partition");
    if (!j.is_array()) {
      throw InvalidArgument("partition must be an array of classes");
    }
    std::vector<std::vector<int>> classes;
    for (auto const& c : j) {
      classes.push_back(points(c, n));
    }
    return SetPartition::from_classes(n, classes);
  }

  Idempotent parse_letter(std::string_view s, int n) {
    std::string const text = trim(s);
    if (text == "id") {
      return Idempotent::identity(n);
    }
    static std::regex const eps(R"(e\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::smatch             m;
    if (std::regex_match(text, m, eps)) {
      return epsilon(std::stoi(m[1]) - 1, std::stoi(m[2]) - 1, n);
    }
    if (!text.empty() && text.front() == '[') {
      return letter_from_json(parse_json(text, "letter"), n);
    }
    throw InvalidArgument("cannot parse letter \"" + text
                          + "\" (expected e(i,j), id or an image array)");
  }

  IgWord parse_word(std::string_view s, int n) {
    std::string const text = trim(s);
    IgWord            w{n, {}};
    if (text.empty()) {
      throw InvalidArgument("empty word (use \"id\" for the identity)");
    }
    // "id" letters are dropped: the empty word is the identity.
    if (text.front() == '[' && json::accept(text)) {
      json const j = json::parse(text);
      if (!j.is_array() || j.empty()) {
        throw InvalidArgument("a word must be a nonempty array of letters");
      }
      if (std::all_of(j.begin(), j.end(), [](json const& x) { return x.is_number(); })) {
        w.letters.push_back(letter_from_json(j, n));
        return normalize(w);
      }
      for (auto const& x : j) {
        w.letters.push_back(letter_from_json(x, n));
      }
      return normalize(w);
    }
    // Tokens split on white space or commas outside brackets.
    std::string tok;
    int         depth = 0;
    auto        flush = [&] {
      if (!tok.empty()) {
        w.letters.push_back(parse_letter(tok, n));
        tok.clear();
      }
    };
    for (char c : text) {
      if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        --depth;
      }
      if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == ',')) {
        flush();
      } else {
        tok += c;
      }
    }
    flush();
    return normalize(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(Subset const& A) {
    json out = json::array();
    for (int x : A.elements()) {
      out.push_back(x + 1);
    }
    return out;
  }

  json to_json(SetPartition const& P) {
    json out = json::array();
    for (int j = 0; j < P.size(); ++j) {
      out.push_back(to_json(P.block(j)));
    }
    return out;
  }

  json to_json(Permutation const& p) {
    json out = json::array();
    for (auto x : p.images()) {
      out.push_back(static_cast<int>(x) + 1);
    }
    return out;
  }

  json to_json(PairPerm const& p) {
    return json::array({to_json(p.first), to_json(p.second)});
  }

  json to_json(Transformation const& f) {
    json out = json::array();
    for (auto x : f.images()) {
      out.push_back(static_cast<int>(x) + 1);
    }
    return out;
  }

  json to_json(Vertex const& v) {
    return {{"A", to_json(v.A)}, {"P", to_json(v.P)}};
  }

  json to_json(PairType const& t) {
    return t.sizes;
  }

  json to_json(IgWord const& w) {
    json out = json::array();
    for (auto const& e : w.letters) {
      out.push_back(format_letter(e));
    }
    return out;
  }

  json to_json(RegularTriple const& t) {
    return {{"kernel", to_json(t.kernel)}, {"group", to_json(t.group)},
            {"image", to_json(t.image)}};
  }

  json to_json(RFactorisation const& f) {
    json factors = json::array();
    for (auto const& x : f.factors) {
      json item = {{"letters", {x.begin + 1, x.end}},
                   {"rank", x.rank()},
                   {"value", to_json(x.value)},
                   {"supported", x.supported()}};
      if (x.triple) {
        item["triple"] = to_json(*x.triple);
      }
      factors.push_back(std::move(item));
    }
    return {{"word", to_json(f.word)},
            {"factors", std::move(factors)},
            {"fingerprint", f.fingerprint().ranks}};
  }

  json to_json(PairSubgroup const& G, bool with_elements) {
    json gens = json::array();
    for (auto const& g : G.generators()) {
      gens.push_back(to_json(g));
    }
    json out = {{"order", G.size()}, {"generators", std::move(gens)}};
    if (with_elements) {
      json el = json::array();
      for (auto const& g : G.elements()) {
        el.push_back(to_json(g));
      }
      out["elements"] = std::move(el);
    }
    return out;
  }

  json to_json(PermSubgroup const& G, bool with_elements) {
    json gens = json::array();
    for (auto const& g : G.generators()) {
      gens.push_back(to_json(g));
    }
    json out = {{"order", G.size()}, {"generators", std::move(gens)}};
    if (with_elements) {
      json el = json::array();
      for (auto const& g : G.elements()) {
        el.push_back(to_json(g));
      }
      out["elements"] = std::move(el);
    }
    return out;
  }

  json to_json(ThetaResult const& r) {
    json stages = json::array();
    for (std::size_t k = 0; k < r.stages.size(); ++k) {
      auto const& st   = r.stages[k];
      json        item = {{"k", k + 1},
                          {"H_order", st.H.size()},
                          {"t", to_json(st.t)},
                          {"a", to_json(st.a)},
                          {"b", to_json(st.b)},
                          {"L_order", st.L.size()},
                          {"z", to_json(st.z)}};
      if (st.x_vertex) {
        item["x_vertex"] = to_json(*st.x_vertex);
        item["y_vertex"] = to_json(*st.y_vertex);
        item["W_order"]  = st.W->size();
        item["rep"]      = st.rep ? to_json(*st.rep) : json(nullptr);
      }
      stages.push_back(std::move(item));
    }
    json out = {{"empty", !r.coset.has_value()}, {"stages", std::move(stages)}};
    if (r.coset) {
      out["coset"] = {{"subgroup", to_json(r.coset->subgroup)},
                      {"representative", to_json(r.coset->representative)}};
    }
    return out;
  }

  std::string to_string(Verdict::Kind k) {
    switch (k) {
      case Verdict::Kind::equal:
        return "Equal";
      case Verdict::Kind::not_equal:
        return "NotEqual";
      default:
        return "Unsupported";
    }
  }

  std::string to_string(GreenVerdict::Kind k) {
    switch (k) {
      case GreenVerdict::Kind::related:
        return "Related";
      case GreenVerdict::Kind::not_related:
        return "NotRelated";
      default:
        return "Unsupported";
    }
  }

  std::string to_string(GreenRelation rel) {
    switch (rel) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::H:
        return "H";
      case GreenRelation::J:
        return "J";
      default:
        return "D";
    }
  }

  GreenRelation green_relation_from_string(std::string_view s) {
    if (s == "R") {
      return GreenRelation::R;
    }
    if (s == "L") {
      return GreenRelation::L;
    }
    if (s == "H") {
      return GreenRelation::H;
    }
    if (s == "D") {
      return GreenRelation::D;
    }
    if (s == "J") {
      return GreenRelation::J;
    }
    throw InvalidArgument("unknown Green relation \"" + std::string(s)
                          + "\" (expected R, L, H, D or J)");
  }

  json to_json(Verdict const& v) {
    return {{"verdict", to_string(v.kind)}, {"reason", v.reason}};
  }

  json to_json(GreenVerdict const& v) {
    return {{"verdict", to_string(v.kind)}, {"reason", v.reason}};
  }

  json graph_to_json(ContactGraph const& g) {
    json vertices = json::array();
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      auto const& v = g.vertex(i);
      vertices.push_back({{"id", i},
                          {"A", to_json(v.A)},
                          {"P", to_json(v.P)},
                          {"component", g.component_id(i)},
                          {"stationary", is_stationary(v.A, v.P)},
                          {"type", to_json(pair_type(v.A, v.P))}});
    }
    json edges = json::array();
    for (auto const& e : g.edges()) {
      edges.push_back({{"src", e.src},
                       {"dst", e.dst},
                       {"witness", format_letter(g.generators()[e.witness])},
                       {"label", to_json(e.label)}});
    }
    return {{"n", g.n()},
            {"m", g.m()},
            {"r", g.r()},
            {"policy", std::string(to_string(g.policy()))},
            {"component_count", g.component_count()},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
  }

  std::string graph_to_dot(ContactGraph const& g) {
    std::ostringstream out;
    out << "digraph \"A(D" << g.m() << ",D" << g.r() << ") n=" << g.n() << "\" {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      out << "  v" << i << " [label=\"" << format_vertex(g.vertex(i)) << "\"];\n";
    }
    for (auto const& e : g.edges()) {
      out << "  v" << e.src << " -> v" << e.dst << " [label=\""
          << format_letter(g.generators()[e.witness]) << " ("
          << format_permutation(e.label.first) << ","
          << format_permutation(e.label.second) << ")\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace igtn
