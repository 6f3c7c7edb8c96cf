#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "witt/design_checks.hpp"
#include "witt/design_file.hpp"
#include "witt/symmetry.hpp"
#include "witt/syntax.hpp"
#include "witt/witt_design.hpp"

namespace witt::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string u_spec = "#4";
  std::string format;  // empty: table on terminals, structured otherwise
  std::string out_path;
  std::string method = "solve";
  std::string line_spec;
  std::string file;
  std::vector<std::string> points;
  bool witnesses = false;
  int t = 5;
};

struct Context {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;
  bool out_is_terminal;

  bool structured() const {
    if (cfg.format == "structured") return true;
    if (cfg.format == "table") return false;
    return !out_is_terminal || !cfg.out_path.empty();
  }

  void emit(const std::string& text) const {
    if (cfg.out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg.out_path + "'");
    f << text;
  }

  void report(const std::string& command, const json& body, const std::string& table) const {
    emit(structured() ? json{{command, body}}.dump(2) + "\n" : table);
  }
};

int parse_u(const RunConfig& cfg) {
  try {
    return parse_point(cfg.u_spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--u: ") + e.what());
  }
}

std::string braces(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::vector<int> lines_for(const RunConfig& cfg, int u, bool require_u) {
  const PlaneModel& plane = PlaneModel::get();
  if (cfg.line_spec.empty()) {
    const auto through = plane.lines_through(u);
    return {through.begin(), through.end()};
  }
  int line = 0;
  try {
    line = parse_line(cfg.line_spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--line: ") + e.what());
  }
  if (require_u && !plane.line(line).contains(u)) throw UsageError("--line: the line does not pass through U");
  return {line};
}

int cmd_construct(const Context& ctx) {
  const WittModel m = WittModel::construct(parse_u(ctx.cfg));
  const DesignFile f = DesignFile::from_model(m);
  ctx.emit(ctx.structured() ? to_structured(f) : to_table(f));
  return kOk;
}

int cmd_verify(const Context& ctx) {
  std::ifstream in(ctx.cfg.file, std::ios::binary);
  if (!in) {
    ctx.err << "error: cannot read '" << ctx.cfg.file << "'\n";
    return kUsageError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  DesignFile f;
  try {
    f = parse_structured(buffer.str());
  } catch (const ParseError& e) {
    ctx.err << "parse error: " << e.what() << '\n';
    return kUsageError;
  }

  IncidenceStructure s;
  for (int p = 0; p < kNumPoints; ++p)
    if (p != f.u) s.points.push_back(p);
  s.blocks = f.blocks;

  json body;
  std::ostringstream text;
  bool ok = true;
  try {
    const DesignVerdict verdict = verify_t_design(s, ctx.cfg.t);
    if (verdict.ok()) {
      const DesignParams& p = *verdict.params;
      const std::vector<std::uint64_t> cascade = lambda_cascade(p);
      std::vector<std::uint64_t> counted;
      for (int i = 0; i <= p.t; ++i) counted.push_back(uniform_count(s, i).value_or(0));
      const bool cascade_ok = counted == cascade;
      ok = cascade_ok;
      body["params"] = {{"t", p.t}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}};
      body["lambda_cascade"] = cascade;
      body["counted_cascade"] = counted;
      text << p.t << "-(" << p.v << ',' << p.k << ',' << p.lambda << "), \xCE\xBB-cascade ";
      for (std::size_t i = 0; i < cascade.size(); ++i) text << (i ? "/" : "") << cascade[i];
      text << '\n';
      if (!cascade_ok) text << "direct block counts disagree with the cascade\n";
    } else {
      ok = false;
      const Violation& v = *verdict.violation;
      const bool size = v.kind == Violation::Kind::BlockSize;
      body["violation"] = {{"kind", size ? "block_size" : "coverage"},
                           {"subset", v.subset},
                           {"observed", v.observed},
                           {"expected", v.expected}};
      if (size)
        text << "violation: block " << braces(v.subset) << " has " << v.observed << " points (expected " << v.expected
             << ")\n";
      else
        text << "violation: " << ctx.cfg.t << "-subset " << braces(v.subset) << " lies in " << v.observed
             << " blocks (expected " << v.expected << ")\n";
    }
  } catch (const std::domain_error& e) {
    ok = false;
    body["error"] = e.what();
    text << "not a design: " << e.what() << '\n';
  }

  if (!f.classes.empty()) {
    std::size_t good = 0;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
      try {
        good += rederive(f.classes[i], f.u) == mask_of(f.blocks[i]) && f.blocks[i].size() == kBlockSize;
      } catch (const std::exception&) {
        // A malformed witness counts as not re-deriving.
      }
    }
    body["witnesses"] = {{"total", f.blocks.size()}, {"rederived", good}};
    text << "witnesses: " << good << '/' << f.blocks.size() << " re-derive their blocks\n";
    ok = ok && good == f.blocks.size();
  }
  body["ok"] = ok;
  text << (ok ? "OK" : "FAILED") << '\n';
  ctx.report("verify", body, text.str());
  return ok ? kOk : kVerificationFailed;
}

int cmd_block(const Context& ctx) {
  const int u = parse_u(ctx.cfg);
  std::vector<int> d;
  try {
    for (const std::string& s : ctx.cfg.points) d.push_back(parse_point(s));
    validate_five_set(d, u);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  json body;
  std::ostringstream text;
  body["method"] = ctx.cfg.method;
  if (ctx.cfg.method == "lookup") {
    const WittModel m = WittModel::construct(u);
    const Block& b = m.block_through(d);
    const std::vector<int> pts(b.points.begin(), b.points.end());
    body["block"] = pts;
    text << braces(pts) << '\n';
  } else {
    const SolveResult r = solve_block_through(d, u);
    const std::vector<int> pts(r.block.points.begin(), r.block.points.end());
    body["block"] = pts;
    body["case"] = to_string(r.proof_case);
    body["form"] = to_string(r.form);
    body["solution_dim"] = r.solution_dim;
    body["exclusion_det"] = r.exclusion_det.value();
    text << braces(pts) << '\n';
    text << "case " << to_string(r.proof_case) << '\n';
    if (r.proof_case == ProofCase::A)
      text << "exclusion determinant: " << r.exclusion_det << '\n';
    else
      text << "line pair through U: form " << to_string(r.form) << '\n';
    text << "solution space dimension: " << r.solution_dim << '\n';
  }
  ctx.report("block", body, text.str());
  return kOk;
}

int cmd_table(const Context& ctx) {
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(18) << "form" << "#Q0  #Q1  #Q2\n";
  for (const TableRow& row : canonical_table()) {
    rows.push_back({{"form", row.form}, {"q0", row.counts[0]}, {"q1", row.counts[1]}, {"q2", row.counts[2]}});
    text << std::left << std::setw(18) << row.form << std::setw(5) << row.counts[0] << std::setw(5) << row.counts[1]
         << row.counts[2] << '\n';
  }
  ctx.report("table", rows, text.str());
  return kOk;
}

int cmd_classify(const Context& ctx) {
  const int u = parse_u(ctx.cfg);
  const WittModel m = WittModel::construct(u);
  std::map<std::string, int> census{{"conic_exterior", 0}, {"symmetric_difference", 0}, {"line_pair_minus_u", 0}};
  std::size_t rederived = 0;
  for (std::size_t i = 0; i < m.blocks().size(); ++i) {
    ++census[class_name(m.class_at(i))];
    rederived += rederive(m.class_at(i), u) == m.blocks()[i].mask();
  }
  const bool ok = rederived == m.blocks().size();

  json body{{"census", census}, {"total", m.blocks().size()}, {"rederived", rederived}};
  std::ostringstream text;
  text << "conic_exterior        " << census["conic_exterior"] << '\n';
  text << "symmetric_difference  " << census["symmetric_difference"] << '\n';
  text << "line_pair_minus_u     " << census["line_pair_minus_u"] << '\n';
  text << "total                 " << m.blocks().size() << '\n';
  text << "witnesses re-deriving their block: " << rederived << '/' << m.blocks().size() << '\n';
  if (ctx.cfg.witnesses) {
    const std::string listing = to_table(DesignFile::from_model(m));
    text << '\n' << listing.substr(listing.find("blocks ("));
    json list = json::array();
    for (std::size_t i = 0; i < m.blocks().size(); ++i)
      list.push_back({{"block", m.blocks()[i].points}, {"class", class_name(m.class_at(i))}});
    body["blocks"] = list;
  }
  ctx.report("classify", body, text.str());
  return ok ? kOk : kVerificationFailed;
}

int cmd_derive(const Context& ctx) {
  const int u = parse_u(ctx.cfg);
  const PlaneModel& plane = PlaneModel::get();
  const WittModel m = WittModel::construct(u);
  const IncidenceStructure design = IncidenceStructure::from_model(m);

  bool ok = true;
  json lines = json::array();
  std::ostringstream text;
  for (int line : lines_for(ctx.cfg, u, true)) {
    std::vector<int> fixed;
    for (int p : plane.line(line).points)
      if (p != u) fixed.push_back(p);
    const IncidenceStructure derived = derived_design(design, fixed);
    const DesignVerdict verdict = verify_t_design(derived, 2);
    const bool affine = verdict.ok() && *verdict.params == DesignParams{2, 9, 3, 1};
    const bool equal = same_structure(derived, affine_residue(plane, line));
    ok = ok && affine && equal;
    lines.push_back({{"line", format_line(line)},
                     {"fixed", fixed},
                     {"blocks", derived.blocks.size()},
                     {"is_2_9_3_1", affine},
                     {"equals_affine_residue", equal}});
    text << "line " << format_line(line) << "  fixed " << braces(fixed) << ": ";
    if (verdict.ok()) {
      const DesignParams& p = *verdict.params;
      text << p.t << "-(" << p.v << ',' << p.k << ',' << p.lambda << ")";
    } else {
      text << "not a 2-design";
    }
    text << ", " << (equal ? "equals" : "differs from") << " the affine residue\n";
  }
  ctx.report("derive", json{{"lines", lines}, {"ok", ok}}, text.str());
  return ok ? kOk : kVerificationFailed;
}

int cmd_aut(const Context& ctx) {
  const int u = parse_u(ctx.cfg);
  const WittModel m = WittModel::construct(u);
  const AutomorphismGroup group = automorphism_group(m);
  const std::vector<Collineation> stabilizer = stabilizer_of_u(PlaneModel::get(), u);
  std::size_t induced = 0;
  for (const Collineation& c : stabilizer) induced += preserves_blocks(c.action, m) && group.contains(c.action);
  const std::size_t regenerated = closure_order(group.summary.generators);
  const bool ok = induced == stabilizer.size() && regenerated == group.summary.order;

  json gens = json::array();
  for (const Perm& g : group.summary.generators) gens.push_back(g.on(m.w_mask()));
  json body{{"order", group.summary.order},
            {"stabilizer_order", stabilizer.size()},
            {"stabilizer_in_group", induced},
            {"sharply_5_transitive", group.summary.sharply_5_transitive},
            {"generators", gens},
            {"generated_order", regenerated}};
  std::ostringstream text;
  text << "automorphism group order: " << group.summary.order << '\n';
  text << "collineations fixing U: " << stabilizer.size() << ", inducing automorphisms: " << induced << '\n';
  text << "sharply 5-transitive: " << (group.summary.sharply_5_transitive ? "yes" : "no") << '\n';
  text << "generators (images of " << braces(indices_of(m.w_mask())) << "):\n";
  for (const Perm& g : group.summary.generators) text << "  " << braces(g.on(m.w_mask())) << '\n';
  text << "order generated: " << regenerated << '\n';
  ctx.report("aut", body, text.str());
  return ok ? kOk : kVerificationFailed;
}

int cmd_involution(const Context& ctx) {
  const int u = parse_u(ctx.cfg);
  const PlaneModel& plane = PlaneModel::get();
  const std::vector<int> lines = lines_for(ctx.cfg, u, true);
  const WittModel m = WittModel::construct(u);
  const AutomorphismGroup group = automorphism_group(m);

  bool ok = true;
  json reports = json::array();
  std::ostringstream text;
  for (int line : lines) {
    const InvolutionReport r = verify_involution_formula(plane, m, group, line);
    ok = ok && r.failures == 0 && r.first_difference.has_value();
    json entry{{"line", format_line(line)},
               {"affinities", r.affinities},
               {"checks", r.checks},
               {"failures", r.failures},
               {"kappa_beta_differ", r.kappa_beta_differ}};
    text << "line " << format_line(line) << ": " << r.checks - r.failures << '/' << r.checks
         << " checks passed over " << r.affinities << " affinities; X^kappa != X^beta in " << r.kappa_beta_differ
         << " cases\n";
    if (r.first_difference) {
      const InvolutionInstance& d = *r.first_difference;
      const PointMask affine = static_cast<PointMask>(((1u << kNumPoints) - 1) & ~plane.line(line).mask);
      entry["instance"] = {{"alpha", d.alpha.on(affine)}, {"x", d.x}, {"x_kappa", d.x_kappa}, {"x_beta", d.x_beta}};
      text << "  e.g. alpha on " << braces(indices_of(affine)) << " -> " << braces(d.alpha.on(affine)) << ": X = #"
           << d.x << ", X^kappa = #" << d.x_kappa << ", X^beta = #" << d.x_beta << '\n';
    }
    reports.push_back(entry);
  }
  ctx.report("involution", json{{"lines", reports}, {"ok", ok}}, text.str());
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal) {
  RunConfig cfg;
  CLI::App app{"Witt's 5-(12,6,1) design from quadrics of PG(2,3)", "witt"};
  app.require_subcommand(1);

  auto add_u = [&](CLI::App* sub) {
    sub->add_option("--u", cfg.u_spec, "Point U, as #k or x0:x1:x2")->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--out", cfg.out_path, "Write output to a file");
  };

  auto* construct = app.add_subcommand("construct", "Build the design and emit the design file");
  add_u(construct);
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Verify a structured design file");
  verify->add_option("file", cfg.file, "Design file")->required();
  verify->add_option("--t", cfg.t, "Strength to verify")->capture_default_str();
  add_common(verify);

  auto* block = app.add_subcommand("block", "Find the block through five points");
  block->add_option("points", cfg.points, "Five points")->required()->expected(5);
  block->add_option("--method", cfg.method, "solve (linear system) or lookup")
      ->check(CLI::IsMember({"solve", "lookup"}))
      ->capture_default_str();
  add_u(block);
  add_common(block);

  auto* table = app.add_subcommand("table", "Level-set sizes of the canonical quadrics");
  add_common(table);

  auto* classify = app.add_subcommand("classify", "Block census by geometric class");
  classify->add_flag("--witnesses", cfg.witnesses, "List every block with its witness");
  add_u(classify);
  add_common(classify);

  auto* derive = app.add_subcommand("derive", "Derived designs at the lines through U");
  derive->add_option("--line", cfg.line_spec, "Line through U, as #k or d0:d1:d2 (default: all)");
  add_u(derive);
  add_common(derive);

  auto* aut = app.add_subcommand("aut", "Automorphism group of the design");
  add_u(aut);
  add_common(aut);

  auto* involution = app.add_subcommand("involution", "Check X^beta = U^(kappa^-1 gamma_X kappa) for all affinities");
  involution->add_option("--line", cfg.line_spec, "Line through U, as #k or d0:d1:d2 (default: all)");
  add_u(involution);
  add_common(involution);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  const Context ctx{cfg, out, err, out_is_terminal};
  try {
    if (construct->parsed()) return cmd_construct(ctx);
    if (verify->parsed()) return cmd_verify(ctx);
    if (block->parsed()) return cmd_block(ctx);
    if (table->parsed()) return cmd_table(ctx);
    if (classify->parsed()) return cmd_classify(ctx);
    if (derive->parsed()) return cmd_derive(ctx);
    if (aut->parsed()) return cmd_aut(ctx);
    if (involution->parsed()) return cmd_involution(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace witt::cli
