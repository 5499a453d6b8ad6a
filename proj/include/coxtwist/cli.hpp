#pragma once

// Command-line front end.  run() never touches std::cout or std::cerr
// directly, so it can be driven from tests.
//
// Exit codes: 0 ok / yes, 1 usage, 2 computation failure or undecided,
// 3 negative decision.

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxgraph.hpp"
#include "fusion.hpp"
#include "geometry.hpp"
#include "homotopy.hpp"
#include "lattice.hpp"
#include "unfolding.hpp"
#include "words.hpp"
#include "zigzag.hpp"

namespace coxtwist::cli {

enum Exit : int { ok = 0, usage = 1, failure = 2, negative = 3 };

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits so JSON output is stable across libms.
inline double round15(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CoxeterGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline std::string format_fusion(const FusionRing& r, const FusionElement& e) {
  std::string out;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(e[i]) + "[" + r.label(i) + "]";
  }
  return out.empty() ? "0" : out;
}

inline std::string format_entry(const FusionRing& r, const LaurentFusion& entry) {
  std::string out;
  for (const auto& [exp, coeff] : entry)
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (coeff[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(coeff[i]) + "[" + r.label(i) + "]q^" + std::to_string(exp);
    }
  return out.empty() ? "0" : out;
}

/// "s", "s,Pi2" or an unfolded vertex name such as "(s,Pi2)".
inline std::size_t resolve_unfolded_vertex(const UnfoldedGraph& u, const std::string& text) {
  if (auto v = u.index_of(text)) return *v;
  const auto comma = text.find(',');
  const auto base = text.substr(0, comma);
  const auto s = u.base().require_index(base);
  if (comma == std::string::npos) return u.index(s, u.ring().unit_index());
  const auto simple = u.ring().index_of(text.substr(comma + 1));
  if (!simple) throw GraphError("unknown simple '" + text.substr(comma + 1) + "'");
  return u.index(s, *simple);
}

/// Reads {"vertex": [re, im] | number, ...} over the vertices of g.
inline CentralCharge load_charge(const CoxeterGraph& g, const std::string& path) {
  const auto doc = nlohmann::json::parse(read_file(path));
  if (!doc.is_object()) throw std::runtime_error("charge file must be a JSON object");
  CentralCharge Z(g.size());
  std::vector<bool> seen(g.size(), false);
  for (const auto& [key, value] : doc.items()) {
    const auto s = g.require_index(key);
    if (value.is_number())
      Z[s] = {value.get<double>(), 0.0};
    else if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
      Z[s] = {value[0].get<double>(), value[1].get<double>()};
    else
      throw std::runtime_error("charge value for '" + key + "' must be [re, im] or a number");
    seen[s] = true;
  }
  for (std::size_t s = 0; s < g.size(); ++s)
    if (!seen[s]) throw std::runtime_error("charge has no value for '" + g.name(s) + "'");
  return Z;
}

inline Json complex_json(Complexd z) { return Json::array({round15(z.real()), round15(z.imag())}); }

struct Context {
  std::ostream& out;
  std::ostream& err;
};

/// The graph and ring that geometry commands work on: the base graph with
/// C(Gamma), or with --full the unfolded graph with the trivial ring.
struct GeometrySetting {
  CoxeterGraph graph;
  FusionRing ring;
};

inline GeometrySetting geometry_setting(const CoxeterGraph& g, bool full) {
  if (!full) return {g, coxeter_fusion_ring(g)};
  auto u = unfold(g).as_coxeter_graph();
  auto r = coxeter_fusion_ring(u);
  return {std::move(u), std::move(r)};
}

inline int cmd_fusion_table(Context& c, const std::string& path) {
  const auto g = load_graph(path);
  const auto r = coxeter_fusion_ring(g);
  Json doc;
  doc["simples"] = r.labels();
  Json table = Json::object();
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j) {
      Json prod = Json::object();
      for (std::size_t k = 0; k < r.rank(); ++k)
        if (r.N(i, j, k) != 0) prod[r.label(k)] = r.N(i, j, k);
      table[r.label(i) + "*" + r.label(j)] = std::move(prod);
    }
  doc["products"] = std::move(table);
  Json dims = Json::object();
  for (std::size_t i = 0; i < r.rank(); ++i) dims[r.label(i)] = round15(r.fpdim(i));
  doc["fpdims"] = std::move(dims);
  c.out << doc.dump(2) << '\n';
  return ok;
}

inline int cmd_unfold(Context& c, const std::string& path, bool emit_folding) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  auto doc = to_json(u.as_coxeter_graph());
  if (emit_folding) {
    Json folding = Json::object();
    for (std::size_t v = 0; v < u.size(); ++v) folding[u.name(v)] = g.name(u.base_vertex(v));
    doc["folding"] = std::move(folding);
  }
  c.out << doc.dump(2) << '\n';
  return ok;
}

inline int cmd_zigzag_info(Context& c, const std::string& path) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  Json doc;
  doc["dimension"] = A.dimension();
  Json basis = Json::array();
  for (std::size_t b = 0; b < A.dimension(); ++b)
    basis.push_back(Json{{"path", A.path_name(b)}, {"degree", A.path(b).degree}});
  doc["basis"] = std::move(basis);
  Json products = Json::array();
  for (std::size_t x = 0; x < A.dimension(); ++x)
    for (std::size_t y = 0; y < A.dimension(); ++y)
      if (auto p = A.multiply_basis(x, y))
        products.push_back(Json::array({A.path_name(x), A.path_name(y), A.path_name(*p)}));
  doc["products"] = std::move(products);
  c.out << doc.dump(2) << '\n';
  return ok;
}

inline int cmd_burau(Context& c, const std::string& path, const std::string& word,
                     std::optional<int> q_eval) {
  const auto g = load_graph(path);
  const auto r = coxeter_fusion_ring(g);
  const auto m = burau_word(g, r, parse_braid_word(g, word));
  Json doc;
  if (q_eval) {
    const auto u = unfold(g);
    const auto s = specialize_q(r, m, *q_eval);
    doc["q"] = *q_eval;
    doc["basis"] = u.names();
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < s.cols(); ++j) row.push_back(s(i, j));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  } else {
    doc["basis"] = g.vertices();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_entry(r, m(i, j)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  c.out << doc.dump(2) << '\n';
  return ok;
}

inline int cmd_roots(Context& c, const std::string& path, int depth) {
  const auto g = load_graph(path);
  const auto r = coxeter_fusion_ring(g);
  const auto roots = enumerate_positive_roots(g, r, depth);
  Json doc;
  doc["depth"] = depth;
  doc["complete"] = roots.complete;
  doc["truncated"] = !roots.complete;
  doc["count"] = roots.roots.size();
  doc["lattice_lifts"] = roots.lattice_lifts;
  doc["basis"] = unfold(g).names();
  Json list = Json::array();
  for (const auto& a : roots.roots) list.push_back(a);
  doc["roots"] = std::move(list);
  c.out << doc.dump(2) << '\n';
  return ok;
}

inline int cmd_coxeter_eq(Context& c, const std::string& path, const std::string& w1, const std::string& w2) {
  const auto g = load_graph(path);
  const bool eq = coxeter_word_equal(g, parse_coxeter_word(g, w1), parse_coxeter_word(g, w2));
  c.out << (eq ? "equal in W" : "not equal in W") << '\n';
  return eq ? ok : negative;
}

inline int cmd_act(Context& c, const std::string& path, const std::string& word, const std::string& on,
                   int shift, int degree) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  const auto x = resolve_unfolded_vertex(u, on);
  const auto result = apply_braid_word(A, u, parse_braid_word(g, word), projective_complex(A, x, shift, degree));
  c.out << format_complex(A, result);
  return ok;
}

inline int cmd_word_eq(Context& c, const std::string& path, const std::string& w1, const std::string& w2) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  const bool eq = words_equal(A, u, parse_braid_word(g, w1), parse_braid_word(g, w2));
  c.out << (eq ? "equal in Br^ST" : "not equal in Br^ST") << '\n';
  return eq ? ok : negative;
}

inline int cmd_is_identity(Context& c, const std::string& path, const std::string& word) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  const bool id = is_identity_word(A, u, parse_braid_word(g, word));
  c.out << (id ? "identity in Br^ST" : "not the identity in Br^ST") << '\n';
  return id ? ok : negative;
}

inline int cmd_shift_type(Context& c, const std::string& path, const std::string& word, bool cohomological) {
  const auto g = load_graph(path);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  const auto w = parse_braid_word(g, word);
  if (cohomological) {
    const auto a = recognize_cohomological_shift(A, u, w);
    if (!a) {
      c.out << "not a shift\n";
      return negative;
    }
    c.out << "shift [" << *a << "]\n";
    return ok;
  }
  const auto s = recognize_shift(A, u, w);
  if (!s) {
    c.out << "not a shift\n";
    return negative;
  }
  c.out << "shift [" << s->first << "]<" << s->second << ">\n";
  return ok;
}

inline Json verdict_json(const Verdict& v) {
  return Json{{"answer", to_string(v.answer)}, {"exhaustive", v.exhaustive}, {"reason", v.reason}};
}

inline int verdict_exit(const Verdict& v) {
  switch (v.answer) {
    case TriState::yes:
      return ok;
    case TriState::no:
      return negative;
    case TriState::inconclusive:
      break;
  }
  return failure;
}

inline int cmd_chamber(Context& c, const std::string& path, const std::string& charge, bool full, int depth) {
  const auto g = load_graph(path);
  const auto set = geometry_setting(g, full);
  const auto Z = load_charge(set.graph, charge);
  const auto rep = locate_chamber(set.graph, set.ring, Z, kTolerance, default_max_iter(set.graph, set.ring, depth),
                                  depth);
  Json doc;
  doc["status"] = to_string(rep.status);
  doc["k"] = complex_json(rep.k);
  Json word = Json::array();
  for (auto s : rep.word) word.push_back(set.graph.name(s));
  doc["word"] = std::move(word);
  Json values = Json::object();
  for (std::size_t s = 0; s < set.graph.size(); ++s) values[set.graph.name(s)] = complex_json(rep.charge[s]);
  doc["charge"] = std::move(values);
  doc["phase"] = rep.phase ? Json(round15(*rep.phase)) : Json(nullptr);
  doc["reason"] = rep.reason;
  c.out << doc.dump(2) << '\n';
  return rep.status == ChamberStatus::located ? ok : failure;
}

inline int cmd_regular_check(Context& c, const std::string& path, const std::string& charge, bool full, int depth) {
  const auto g = load_graph(path);
  const auto set = geometry_setting(g, full);
  const auto v = in_regular_set(set.graph, set.ring, load_charge(set.graph, charge), depth);
  c.out << verdict_json(v).dump(2) << '\n';
  return verdict_exit(v);
}

/// The functional is the real part of each value, or the imaginary part with
/// --imaginary (the relevant functional for chamber location).
inline int cmd_tits_check(Context& c, const std::string& path, const std::string& charge, bool full, int depth,
                          bool imaginary) {
  const auto g = load_graph(path);
  const auto set = geometry_setting(g, full);
  const auto Z = load_charge(set.graph, charge);
  RealVector x;
  for (const auto& z : Z) x.push_back(imaginary ? z.imag() : z.real());
  const auto v = in_tits_interior(set.graph, set.ring, x, depth, default_max_iter(set.graph, set.ring, depth));
  c.out << verdict_json(v).dump(2) << '\n';
  return verdict_exit(v);
}

inline BraidWord alternating(std::size_t s, std::size_t t, int length) {
  BraidWord w;
  for (int i = 0; i < length; ++i) w.letters.push_back({i % 2 == 0 ? s : t, 1});
  return w;
}

inline int cmd_check_relations(Context& c, const std::string& path) {
  const auto g = load_graph(path);
  const auto r = coxeter_fusion_ring(g);
  const auto u = unfold(g);
  const ZigzagAlgebra A(u);
  bool all = true;
  auto report = [&](bool pass, const std::string& name) {
    c.out << (pass ? "PASS " : "FAIL ") << name << '\n';
    all = all && pass;
  };
  const auto id = IntMatrix::identity(lattice_rank(g, r));
  for (std::size_t s = 0; s < g.size(); ++s) {
    c.err << "checking " << g.name(s) << '\n';
    const BraidWord plus{{{s, 1}}}, minus{{{s, -1}}};
    report(is_identity_word(A, u, plus * minus), "inverse " + g.name(s) + " " + g.name(s) + "^-1");
    report(is_identity_word(A, u, minus * plus), "inverse " + g.name(s) + "^-1 " + g.name(s));
    const auto M = simple_reflection_matrix(g, r, s);
    report(M * M == id, "involution " + g.name(s));
    report(specialize_q(r, burau_generator(g, r, s, false)) == M, "specialisation " + g.name(s));
  }
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      const int m = g.label(s, t);
      const std::string pair = g.name(s) + " " + g.name(t);
      c.err << "checking " << pair << '\n';
      if (m == kInfinity) {
        bool distinct = true;
        for (int len = 1; len <= 6; ++len)
          distinct = distinct && !words_equal(A, u, alternating(s, t, len), alternating(t, s, len));
        report(distinct, "no braid relation up to length 6 " + pair);
        continue;
      }
      report(words_equal(A, u, alternating(s, t, m), alternating(t, s, m)),
             "braid " + pair + " m=" + std::to_string(m));
      report(burau_word(g, r, alternating(s, t, m)) == burau_word(g, r, alternating(t, s, m)),
             "burau braid " + pair + " m=" + std::to_string(m));
      CoxeterWord power;
      for (int i = 0; i < m; ++i) power.insert(power.end(), {s, t});
      report(coxeter_word_matrix(g, r, power) == id, "coxeter order " + pair + " m=" + std::to_string(m));
    }
  return all ? ok : failure;
}

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Coxeter graphs, fusion rings, zigzag algebras and spherical twist actions", "coxtwist"};
  app.require_subcommand(1);

  std::string graph, word, word2, on, charge;
  int depth = 12, shift = 0, degree = 0;
  bool emit_folding = false, full = false, cohomological = false, imaginary = false;
  std::optional<int> q_eval;
  std::function<int()> action;

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", graph, "graph JSON file")->required(); };
  auto word_arg = [&](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "whitespace-separated letters, suffix ^-1 for inverses")->required();
  };

  auto* fusion = app.add_subcommand("fusion-table", "simples, multiplication table and FP dimensions of C(Gamma)");
  graph_arg(fusion);
  fusion->callback([&] { action = [&] { return cmd_fusion_table(ctx, graph); }; });

  auto* unf = app.add_subcommand("unfold", "the unfolded graph as graph JSON");
  graph_arg(unf);
  unf->add_flag("--emit-folding", emit_folding, "add the folding map to the output");
  unf->callback([&] { action = [&] { return cmd_unfold(ctx, graph, emit_folding); }; });

  auto* zz = app.add_subcommand("zigzag-info", "basis and multiplication table of the zigzag algebra");
  graph_arg(zz);
  zz->callback([&] { action = [&] { return cmd_zigzag_info(ctx, graph); }; });

  auto* burau = app.add_subcommand("burau", "Burau matrix of a braid word (columns are images of [P_t])");
  graph_arg(burau);
  word_arg(burau, word, "word");
  burau->add_option("--q-eval", q_eval, "specialise q to -1 or 1 and expand over the lattice")
      ->check(CLI::IsMember({-1, 1}));
  burau->callback([&] { action = [&] { return cmd_burau(ctx, graph, word, q_eval); }; });

  auto* roots = app.add_subcommand("roots", "positive roots reachable by at most D reflections");
  graph_arg(roots);
  roots->add_option("--depth", depth, "maximum number of reflections")->required()->check(CLI::NonNegativeNumber);
  roots->callback([&] { action = [&] { return cmd_roots(ctx, graph, depth); }; });

  auto* coxeq = app.add_subcommand("coxeter-eq", "equality of two words in the Coxeter group: <w1> -- <w2>");
  graph_arg(coxeq);
  word_arg(coxeq, word, "w1");
  word_arg(coxeq, word2, "w2");
  coxeq->callback([&] { action = [&] { return cmd_coxeter_eq(ctx, graph, word, word2); }; });

  auto* act = app.add_subcommand("act", "minimal complex of a braid word applied to a graded projective");
  graph_arg(act);
  word_arg(act, word, "word");
  act->add_option("--on", on, "vertex, vertex,simple or an unfolded vertex name")->required();
  act->add_option("--shift", shift, "internal grading shift");
  act->add_option("--deg", degree, "cohomological degree");
  act->callback([&] { action = [&] { return cmd_act(ctx, graph, word, on, shift, degree); }; });

  auto* weq = app.add_subcommand(
      "word-eq", "equality of two braid words in the spherical twist group Br^ST: <w1> -- <w2>");
  graph_arg(weq);
  word_arg(weq, word, "w1");
  word_arg(weq, word2, "w2");
  weq->callback([&] { action = [&] { return cmd_word_eq(ctx, graph, word, word2); }; });

  auto* isid = app.add_subcommand("is-identity",
                                  "whether a braid word acts as the identity (decides Br^ST; exit 0 yes, 3 no)");
  graph_arg(isid);
  word_arg(isid, word, "word");
  isid->callback([&] { action = [&] { return cmd_is_identity(ctx, graph, word); }; });

  auto* shiftcmd = app.add_subcommand("shift-type", "whether a braid word acts as a shift [a]<b>");
  graph_arg(shiftcmd);
  word_arg(shiftcmd, word, "word");
  shiftcmd->add_flag("--cohomological", cohomological, "only require a common cohomological shift [a]");
  shiftcmd->callback([&] { action = [&] { return cmd_shift_type(ctx, graph, word, cohomological); }; });

  auto geometry_options = [&](CLI::App* sub) {
    graph_arg(sub);
    sub->add_option("--charge", charge, "JSON object: vertex -> [re, im]")->required();
    sub->add_flag("--full", full, "charge lives on the unfolded graph");
    sub->add_option("--depth", depth, "root enumeration depth")->check(CLI::PositiveNumber);
  };
  auto* chamber = app.add_subcommand("chamber", "locate the chamber of a central charge");
  geometry_options(chamber);
  chamber->callback([&] { action = [&] { return cmd_chamber(ctx, graph, charge, full, depth); }; });

  auto* reg = app.add_subcommand("regular-check", "whether a charge avoids every root and the imaginary cone");
  geometry_options(reg);
  reg->callback([&] { action = [&] { return cmd_regular_check(ctx, graph, charge, full, depth); }; });

  auto* tits = app.add_subcommand("tits-check", "whether a real functional lies in the Tits cone interior");
  geometry_options(tits);
  tits->add_flag("--imaginary", imaginary, "use the imaginary parts instead of the real parts");
  tits->callback([&] { action = [&] { return cmd_tits_check(ctx, graph, charge, full, depth, imaginary); }; });

  auto* rel = app.add_subcommand("check-relations", "braid, inverse and Coxeter relations, one line each");
  graph_arg(rel);
  rel->callback([&] { action = [&] { return cmd_check_relations(ctx, graph); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto* sub : app.get_subcommands())
      if (sub->parsed()) {
        out << sub->help();
        return ok;
      }
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return usage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace coxtwist::cli
