#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "steenrod/chains.hpp"
#include "steenrod/diagonal.hpp"
#include "steenrod/io.hpp"
#include "steenrod/pi1.hpp"
#include "steenrod/reconstruct.hpp"
#include "steenrod/simplicial.hpp"

namespace steenrod::cli {

namespace {

using Json = nlohmann::ordered_json;

// Early exit with a finished result.
struct Stop {
  int code;
  std::string message;
  Json detail;
};

struct Output {
  std::ostringstream text;
  Json doc = Json::object();
};

std::string counts_text(const std::vector<std::size_t>& counts) {
  std::string s = "(";
  for (std::size_t k = 0; k < counts.size(); ++k) s += (k ? ", " : "") + std::to_string(counts[k]);
  return s + ")";
}

Json report_json(const ValidationReport& r) {
  Json list = Json::array();
  for (const auto& v : r.items()) list.push_back({{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
  return list;
}

struct Loaded {
  ParsedComplex parsed;
  /// The delta-complex the pipeline runs on: the file itself, or 𝔣 of the
  /// simplicial set it describes.
  ComplexPtr delta;
  int max_dim = 0;
};

Loaded load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw Stop{kParseError, e.what(), {}};
  }
  Loaded out;
  try {
    out.parsed = parse_complex(text);
  } catch (const ParseError& e) {
    throw Stop{kParseError, path + ": " + e.what(), {{"line", e.line()}, {"column", e.column()}}};
  }
  const auto report = validate_delta(out.parsed.complex);
  if (!report.ok()) {
    throw Stop{kFailure,
               path + ": invalid complex '" + out.parsed.complex.name() + "', " + std::to_string(report.size()) +
                   " violation(s)\n" + report.to_string(),
               report_json(report)};
  }
  auto core = std::make_shared<const DeltaComplex>(out.parsed.complex);
  out.max_dim = std::max(out.parsed.max_dim, core->dimension());
  if (out.parsed.simplicial) {
    out.delta = std::make_shared<const DeltaComplex>(forget(SimplicialSet(core, out.max_dim), out.max_dim));
  } else {
    out.delta = core;
  }
  return out;
}

std::string text_of_abelian(const DegreeHomology& h) { return AbelianInvariants{h.betti, h.torsion}.render(); }

void cmd_validate(const Command& cmd, Output& o) {
  const Loaded l = load(cmd.inputs.at(0));
  const auto& x = l.parsed.complex;
  if (l.parsed.simplicial) {
    o.text << "valid simplicial set '" << x.name() << "': core counts " << counts_text(x.counts()) << ", max_dim "
           << l.max_dim << ", counts up to max_dim " << counts_text(l.delta->counts()) << "\n";
  } else {
    o.text << "valid delta-complex '" << x.name() << "': counts " << counts_text(x.counts()) << "\n";
  }
  o.doc["valid"] = true;
  o.doc["name"] = x.name();
  o.doc["kind"] = l.parsed.simplicial ? "simplicial" : "delta";
  o.doc["counts"] = x.counts();
}

void cmd_chain(const Command& cmd, Output& o) {
  const Loaded l = load(cmd.inputs.at(0));
  const ChainComplex c = normalized_chains(*l.delta);
  Json degrees = Json::array();
  for (int d = 0; d <= c.top_degree(); ++d) {
    o.text << "C" << d << ": rank " << c.rank(d) << "\n";
    Json gens = Json::array();
    for (std::size_t g = 0; g < c.rank(d); ++g) {
      const std::string b = render(c, c.boundary(d, g));
      o.text << "  ∂" << c.id(d, g) << " = " << b << "\n";
      gens.push_back({{"id", c.id(d, g)}, {"boundary", b}});
    }
    degrees.push_back({{"degree", d}, {"generators", gens}});
  }
  o.doc["name"] = c.name();
  o.doc["chains"] = degrees;
  if (cmd.homology) {
    const auto h = homology(c);
    Json hs = Json::array();
    for (std::size_t d = 0; d < h.degrees.size(); ++d) {
      o.text << "H" << d << ": " << text_of_abelian(h.degrees[d]) << "\n";
      hs.push_back({{"degree", d}, {"betti", h.degrees[d].betti}, {"torsion", h.degrees[d].torsion}});
    }
    o.doc["homology"] = hs;
  }
}

void cmd_diagonal(const Command& cmd, Output& o) {
  if (!cmd.simplex || !cmd.i) throw Stop{kParseError, "diagonal needs --simplex and --i", {}};
  if (*cmd.i < 0) throw Stop{kParseError, "--i must be a natural number", {}};
  const Loaded l = load(cmd.inputs.at(0));
  const auto cell = l.delta->find(*cmd.simplex);
  if (!cell) throw Stop{kParseError, "no simplex named '" + *cmd.simplex + "'", {}};
  const auto s = canonical_structure(*l.delta);
  const TensorChain value = evaluate(s, *cmd.i, cmd.twist, Chain(cell->dim, cell->index, 1));
  const std::string lhs = std::string("ξ(") + (cmd.twist ? "T·" : "") + "e" + std::to_string(*cmd.i) + "⊗" + *cmd.simplex + ")";
  const std::string rhs = render(s.carrier(), value);
  o.text << lhs << " = " << rhs << "\n";
  Json terms = Json::array();
  for (const auto& [b, k] : value.terms()) {
    terms.push_back({{"left", s.carrier().id(b.left_degree, b.left)}, {"right", s.carrier().id(b.right_degree, b.right)}, {"coeff", k}});
  }
  o.doc["simplex"] = *cmd.simplex;
  o.doc["i"] = *cmd.i;
  o.doc["twist"] = cmd.twist;
  o.doc["value"] = rhs;
  o.doc["terms"] = terms;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Stop{kParseError, "cannot write '" + path + "'", {}};
  out << content;
}

std::string faces_text(const DeltaComplex& x, Cell c) {
  std::string s;
  for (const auto& f : x.face_ids(c)) s += (s.empty() ? "" : " ") + f;
  return s;
}

void cmd_reconstruct(const Command& cmd, Output& o) {
  const Loaded l = load(cmd.inputs.at(0));
  const auto s = canonical_structure(*l.delta);
  const auto r = reconstruct_2_skeleton(s);
  const auto& y = *r.complex;
  o.text << "hom(★, N(" << l.delta->name() << ")) counts " << counts_text(y.counts()) << "\n";
  Json simplices = Json::array();
  for (int d = 0; d <= y.dimension(); ++d) {
    for (const Cell c : y.cells(d)) {
      o.text << "  " << y.id(c) << " (dim " << d << ")";
      if (d > 0) o.text << " faces " << faces_text(y, c);
      o.text << "\n";
      simplices.push_back({{"id", y.id(c)}, {"dim", d}, {"faces", y.face_ids(c)}});
    }
  }
  o.text << "rejected candidates: " << r.rejected.size() << "\n";
  Json rejected = Json::array();
  for (const auto& rc : r.rejected) {
    o.text << "  " << (rc.sign < 0 ? "-" : "+") << rc.target_id << " (dim " << rc.dim << "): " << rc.reason << "\n";
    rejected.push_back({{"target", rc.target_id}, {"sign", rc.sign}, {"dim", rc.dim}, {"reason", rc.reason}});
  }
  ValidationReport problems = r.issues;
  problems.append(unit_comparison(*l.delta));
  if (problems.ok()) {
    o.text << "unit comparison: identity on the 2-skeleton\n";
  } else {
    o.text << "unit comparison: " << problems.size() << " problem(s)\n" << problems.to_string();
  }
  o.doc["counts"] = y.counts();
  o.doc["simplices"] = simplices;
  o.doc["rejected"] = rejected;
  o.doc["unit_comparison"] = report_json(problems);
  if (cmd.out) write_file(*cmd.out, complex_to_json(y));
  if (!problems.ok()) throw Stop{kFailure, "reconstruction does not match the 2-skeleton", report_json(problems)};
}

void print_presentation(Output& o, Json& doc, const GroupPresentation& p) {
  const auto ab = abelianization(p);
  std::string tree;
  for (std::size_t g : p.tree) tree += (tree.empty() ? "" : " ") + p.generators[g];
  o.text << "basepoint: " << p.base << "\n";
  o.text << "tree: " << (tree.empty() ? "(empty)" : tree) << "\n";
  o.text << "presentation: " << p.render() << "\n";
  o.text << "abelianization: " << ab.render() << "\n";
  o.text << ab.summary() << "\n";
  Json relators = Json::array();
  for (const auto& w : p.relators) relators.push_back(p.render(w));
  Json tree_json = Json::array();
  for (std::size_t g : p.tree) tree_json.push_back(p.generators[g]);
  doc = {{"basepoint", p.base}, {"generators", p.generators}, {"tree", tree_json}, {"relators", relators},
         {"rank", ab.rank}, {"torsion", ab.torsion}};
}

void cmd_pi1(const Command& cmd, Output& o) {
  const Loaded l = load(cmd.inputs.at(0));
  GroupPresentation p;
  try {
    p = cmd.base ? presentation(*l.delta, *cmd.base) : presentation(*l.delta);
  } catch (const MissingBasepoint& e) {
    throw Stop{kParseError, e.what(), {}};
  }
  Json doc;
  print_presentation(o, doc, p);
  o.doc = doc;
}

void cmd_convert(const Command& cmd, Output& o) {
  if (!cmd.to || !cmd.max_dim) throw Stop{kParseError, "convert needs --to and --max-dim", {}};
  if (*cmd.to != "simplicial" && *cmd.to != "delta") throw Stop{kParseError, "--to must be 'simplicial' or 'delta'", {}};
  const Loaded l = load(cmd.inputs.at(0));
  auto core = std::make_shared<const DeltaComplex>(l.parsed.complex);
  if (*cmd.max_dim < core->dimension()) {
    throw Stop{kParseError, "--max-dim " + std::to_string(*cmd.max_dim) + " is below the core dimension " +
                                std::to_string(core->dimension()), {}};
  }
  const SimplicialSet s(core, *cmd.max_dim);
  const std::string text = *cmd.to == "simplicial" ? simplicial_to_json(s, *cmd.max_dim)
                                                   : complex_to_json(forget(s, *cmd.max_dim));
  if (cmd.out) {
    write_file(*cmd.out, text);
    o.text << "wrote " << *cmd.out << "\n";
  } else {
    o.text << text;
  }
  o.doc = Json::parse(text);
}

std::string matrix_text(const IntMatrix& m) { return to_string(m); }

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

void cmd_compare(const Command& cmd, Output& o) {
  if (cmd.inputs.size() != 3) throw Stop{kParseError, "compare needs SRC TGT MAPFILE", {}};
  const Loaded src = load(cmd.inputs[0]);
  const Loaded tgt = load(cmd.inputs[1]);
  std::string map_text;
  try {
    map_text = read_file(cmd.inputs[2]);
  } catch (const std::exception& e) {
    throw Stop{kParseError, e.what(), {}};
  }
  auto nsrc = std::make_shared<const ChainComplex>(normalized_chains(*src.delta));
  auto ntgt = std::make_shared<const ChainComplex>(normalized_chains(*tgt.delta));
  std::optional<ChainMap> f;
  try {
    if (is_chain_map_text(map_text)) {
      f = parse_chain_map(map_text, nsrc, ntgt);
    } else {
      const DeltaMap g = parse_delta_map(map_text, src.delta, tgt.delta);
      const auto report = validate_map(g);
      if (!report.ok()) {
        throw Stop{kFailure, "delta map is invalid, " + std::to_string(report.size()) + " violation(s)\n" + report.to_string(),
                   report_json(report)};
      }
      f = chains_of_map(g, nsrc, ntgt);
    }
  } catch (const ParseError& e) {
    throw Stop{kParseError, cmd.inputs[2] + ": " + e.what(), {{"line", e.line()}, {"column", e.column()}}};
  }
  const int i_max = cmd.i_max.value_or(std::max(default_i_max(*nsrc), default_i_max(*ntgt)));
  if (i_max < 0) throw Stop{kParseError, "--i-max must be a natural number", {}};

  const auto chain_report = verify_chain_map(*f);
  if (!chain_report.ok()) {
    o.text << "chain map: " << chain_report.size() << " violation(s)\n" << chain_report.to_string();
    o.doc["chain_map"] = report_json(chain_report);
    throw Stop{kFailure, "not a chain map", report_json(chain_report)};
  }
  o.text << "chain map: ok\n";
  o.doc["chain_map"] = Json::array();

  const auto s_src = canonical_structure(*src.delta, nsrc);
  const auto s_tgt = canonical_structure(*tgt.delta, ntgt);
  const auto cert = verify_morphism(*f, s_src, s_tgt, i_max);
  Json violations = Json::array();
  for (const auto& v : cert.violations) {
    violations.push_back({{"generator", v.generator}, {"degree", v.degree}, {"i", v.i}, {"lhs", v.lhs_text}, {"rhs", v.rhs_text}});
  }
  o.doc["i_max"] = i_max;
  o.doc["morphism"] = violations;
  if (!cert.ok()) {
    o.text << "steenrod morphism (i <= " << i_max << "): " << cert.violations.size() << " violation(s), first at i = "
           << cert.first_failing_i() << "\n"
           << cert.to_string();
    throw Stop{kFailure, "not a Steenrod coalgebra morphism", violations};
  }
  o.text << "steenrod morphism (i <= " << i_max << "): ok\n";

  const auto r_src = reconstruct_2_skeleton(s_src);
  const auto r_tgt = reconstruct_2_skeleton(s_tgt);
  DeltaMap g_hat(r_src.complex, r_tgt.complex);
  try {
    g_hat = induced_map(*f, r_src, r_tgt);
  } catch (const NonSimplexImage& e) {
    throw Stop{kFailure, e.what(), {}};
  }
  o.text << "induced map ĝ:\n";
  Json assignment = Json::array();
  for (int d = 0; d <= g_hat.source().dimension(); ++d) {
    for (const Cell c : g_hat.source().cells(d)) {
      const auto& from = g_hat.source().id(c);
      const auto& to = g_hat.target().id(g_hat.at(c));
      o.text << "  " << from << " ↦ " << to << "\n";
      assignment.push_back({{"from", from}, {"to", to}});
    }
  }
  o.doc["induced_map"] = assignment;

  if (g_hat.source().count(0) == 0) return;
  const auto p_src = presentation(g_hat.source());
  const auto p_tgt = presentation(g_hat.target(), g_hat.target().id(g_hat.at({0, 0})));
  const auto hom = induced_homomorphism(g_hat, p_src, p_tgt);
  o.text << "π1(source) = " << p_src.render() << " ≅_ab " << hom.source.render() << "\n";
  o.text << "π1(target) = " << p_tgt.render() << " ≅_ab " << hom.target.render() << "\n";
  o.text << "π1(ĝ):\n";
  Json images = Json::array();
  for (std::size_t k = 0; k < hom.images.size(); ++k) {
    o.text << "  " << p_src.generators[k] << " ↦ " << p_tgt.render(hom.images[k]) << "\n";
    images.push_back({{"generator", p_src.generators[k]}, {"word", p_tgt.render(hom.images[k])}});
  }
  o.text << "abelianized matrix: " << matrix_text(hom.abelian) << "\n";
  o.text << "free block: " << matrix_text(hom.free_block);
  if (hom.free_block.rows() == hom.free_block.cols()) o.text << ", determinant " << determinant(hom.free_block);
  o.text << "\n";
  o.doc["pi1"] = {{"source", p_src.render()},
                  {"target", p_tgt.render()},
                  {"images", images},
                  {"abelian", matrix_json(hom.abelian)},
                  {"free_block", matrix_json(hom.free_block)}};
}

}  // namespace

Result run(const Command& cmd) {
  Result result;
  Output o;
  int code = kOk;
  std::string message;
  Json detail;
  try {
    if (cmd.inputs.empty()) throw Stop{kParseError, "missing input file", {}};
    if (cmd.name == "validate") {
      cmd_validate(cmd, o);
    } else if (cmd.name == "chain") {
      cmd_chain(cmd, o);
    } else if (cmd.name == "diagonal") {
      cmd_diagonal(cmd, o);
    } else if (cmd.name == "reconstruct") {
      cmd_reconstruct(cmd, o);
    } else if (cmd.name == "compare") {
      cmd_compare(cmd, o);
    } else if (cmd.name == "pi1") {
      cmd_pi1(cmd, o);
    } else if (cmd.name == "convert") {
      cmd_convert(cmd, o);
    } else {
      throw Stop{kParseError, "unknown subcommand '" + cmd.name + "'", {}};
    }
  } catch (const Stop& s) {
    code = s.code;
    message = s.message;
    detail = s.detail;
  } catch (const std::exception& e) {
    code = kFailure;
    message = e.what();
  }
  result.exit_code = code;
  if (cmd.json) {
    Json doc = o.doc;
    doc["command"] = cmd.name;
    doc["exit_code"] = code;
    if (code != kOk) {
      doc["error"] = message;
      if (!detail.is_null()) doc["violations"] = detail;
    }
    result.out = doc.dump(2) + "\n";
  } else {
    result.out = o.text.str();
    if (code != kOk) {
      // Failure reports go to stdout as well so the violation list is never lost.
      if (code == kFailure) result.out += message + (message.ends_with("\n") ? "" : "\n");
      result.err = (code == kParseError ? "error: " : "failed: ") + message.substr(0, message.find('\n')) + "\n";
    }
  }
  return result;
}

}  // namespace steenrod::cli
