#include "packing/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "packing/bounds.hpp"
#include "packing/codes.hpp"
#include "packing/construct.hpp"
#include "packing/design_io.hpp"
#include "packing/direct.hpp"
#include "packing/solve.hpp"

namespace packing::cli {

namespace {

struct ParamFlags {
  int v = 0;
  int k = 0;
  int t = 2;
  int lambda = 1;

  void add_to(CLI::App* app) {
    app->add_option("--v", v, "number of points")->required();
    app->add_option("--k", k, "block size")->required();
    app->add_option("--t", t, "tuple size")->capture_default_str();
    app->add_option("--lambda", lambda, "maximum multiplicity")->capture_default_str();
  }
  DesignParams params() const { return DesignParams(v, k, t, lambda); }
};

std::string join_detail(const BoundReport& b) {
  std::string out;
  for (const auto& [key, value] : b.detail) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

std::string kind_of(const BoundReport& b) { return b.exact ? "exact" : "upper"; }

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw FormatError("cannot write " + path);
  file << text;
}

int cmd_bounds(const ParamFlags& flags, bool directed, bool tsv, std::ostream& out) {
  const auto params = flags.params();
  const auto reports = all_bounds(params, directed);
  std::vector<std::array<std::string, 4>> rows;
  for (const auto& b : reports) {
    if (!b.applicable()) continue;
    std::string name(to_string(b.provenance));
    if (b.provenance == Provenance::DirectedViaLemma13) name += "(" + b.get("via") + ")";
    rows.push_back({name, std::to_string(*b.value), kind_of(b), join_detail(b)});
    if (b.provenance == Provenance::SecondJohnson && b.get("closed_form") != "n/a") {
      rows.push_back({"SecondJohnsonClosedForm", b.get("closed_form"), "upper", ""});
    }
  }
  const auto best = best_upper_bound(params, directed);
  if (tsv) {
    out << "provenance\tvalue\tkind\tdetail\n";
    for (const auto& r : rows) out << r[0] << '\t' << r[1] << '\t' << r[2] << '\t' << r[3] << '\n';
    return kOk;
  }
  out << (directed ? "directed " : "") << "bounds for (v,k,t,lambda) = (" << params.v << "," << params.k << ","
      << params.t << "," << params.lambda << ")\n";
  for (const auto& r : rows) {
    out << "  " << std::left << std::setw(42) << r[0] << std::setw(6) << r[1] << std::setw(7) << r[2] << r[3]
        << '\n';
  }
  out << "best: " << *best.value << " (" << to_string(best.provenance) << ")\n";
  return kOk;
}

int cmd_construct(const ParamFlags& flags, const std::string& output, std::ostream& out) {
  const auto params = flags.params();
  auto [design, report] = construct_optimal(params);
  DesignDocument doc{params.k, params.t, params.lambda, design};
  if (output.empty()) {
    out << serialize_design(doc);
  } else {
    write_design(doc, output);
    out << "constructed " << design.size() << " blocks; PDN = " << *report.value << " ("
        << to_string(report.provenance) << ")\n";
  }
  return kOk;
}

int cmd_direct(const std::string& input, const std::string& output, std::ostream& out) {
  const auto doc = read_design(input);
  if (doc.directed()) throw std::invalid_argument("input design is already directed");
  const auto directed = direct_packing(std::get<PackingDesign>(doc.design));
  DesignDocument result{doc.k, 2, 1, directed};
  emit(out, serialize_design(result), output);
  return kOk;
}

void print_diagnostics(std::ostream& out, const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    out << "check " << d.check << ": " << (d.passed ? "pass" : "FAIL");
    if (!d.witness.empty()) out << "  " << d.witness;
    out << '\n';
  }
}

int cmd_verify(const std::string& input, std::ostream& out, std::ostream& err) {
  const auto doc = read_design(input);
  const auto params = doc.params();
  const auto mode = doc.k ? BlockSizeMode::Uniform : BlockSizeMode::AtMost;
  ValidationReport report;
  if (doc.directed()) {
    const auto& design = std::get<DirectedPackingDesign>(doc.design);
    report = validate_directed(design, params, mode);
  } else {
    report = validate_packing(std::get<PackingDesign>(doc.design), params, mode);
  }
  out << (doc.directed() ? "directed design, " : "design, ") << std::visit([](const auto& d) { return d.size(); }, doc.design)
      << " blocks on " << params.v << " points\n";
  out << "valid: " << (report.valid ? "yes" : "no") << '\n';
  print_diagnostics(out, report.diagnostics);
  if (report.valid && !doc.directed() && doc.k) {
    const auto& design = std::get<PackingDesign>(doc.design);
    if (!design.blocks().empty()) print_diagnostics(out, structural_diagnostics(design, params));
  }
  if (!report.valid) {
    err << "error: design violates the multiplicity bound lambda = " << params.lambda << '\n';
    return kInvalidInput;
  }
  return kOk;
}

int cmd_solve(const ParamFlags& flags, bool directed, std::optional<std::int64_t> budget, const std::string& output,
              std::ostream& out) {
  const auto params = flags.params();
  SearchConfig config;
  config.node_budget = budget;
  std::int64_t n = 0;
  Certificate certificate{};
  DesignDocument doc{params.k, params.t, params.lambda, PackingDesign{}};
  if (directed) {
    if (params.t != 2 || params.lambda != 1) throw std::invalid_argument("directed solve needs t = 2, lambda = 1");
    auto result = dpdn_exact(params.v, params.k, config);
    n = result.n;
    certificate = result.certificate;
    doc.design = std::move(result.witness);
  } else {
    auto result = pdn_exact(params, config);
    n = result.n;
    certificate = result.certificate;
    doc.design = std::move(result.witness);
  }
  const char* name = directed ? "DPDN" : "PDN";
  if (certificate == Certificate::Optimal) {
    out << name << " = " << n << " (optimal)\n";
  } else {
    out << name << " >= " << n << " (" << to_string(certificate) << ")\n";
  }
  if (!output.empty()) write_design(doc, output);
  return certificate == Certificate::Optimal ? kOk : kBudgetExhausted;
}

int cmd_export(const std::string& input, const std::string& format, std::optional<int> check,
               const std::string& output, std::ostream& out, std::ostream& err) {
  const auto doc = read_design(input);
  const auto params = doc.params();
  if (format == "cw") {
    if (doc.directed()) throw std::invalid_argument("constant-weight export needs an undirected design");
    const auto code = to_constant_weight(std::get<PackingDesign>(doc.design), params);
    emit(out, serialize_code(code), output);
    return kOk;
  }
  if (!doc.directed()) throw std::invalid_argument("indel export needs a directed design");
  const auto code = to_indel_code(std::get<DirectedPackingDesign>(doc.design), params);
  emit(out, serialize_code(code), output);
  if (check) {
    const bool ok = deletion_channel_check(code, *check);
    const auto lcs = max_pairwise_lcs(code);
    out << "deletion-check s=" << *check << ": " << (ok ? "pass" : "fail")
        << " (max pairwise LCS " << (lcs ? std::to_string(*lcs) : "undefined") << ")\n";
    if (!ok) {
      err << "error: codewords collide after " << *check << " deletions\n";
      return kInvalidInput;
    }
  }
  return kOk;
}

int cmd_table(int v_min, int v_max, int k_min, int k_max, int t, int lambda, bool directed, bool tsv,
              std::optional<std::int64_t> oracle_budget, std::ostream& out) {
  if (tsv) {
    out << "v\tk\tvalue\tkind\tprovenance\n";
  } else {
    out << std::left << std::setw(5) << "v" << std::setw(5) << "k" << std::setw(8) << "value" << std::setw(7)
        << "kind" << "provenance\n";
  }
  for (int v = v_min; v <= v_max; ++v) {
    for (int k = std::max(k_min, t); k <= std::min(k_max, v); ++k) {
      const DesignParams params(v, k, t, lambda);
      std::int64_t value = 0;
      std::string kind = "upper";
      std::string provenance;
      const auto exact = directed ? (t == 2 && lambda == 1 ? exact_dpdn_by_theorem(v, k) : BoundReport{})
                                  : exact_by_theorems(params);
      if (exact.applicable()) {
        value = *exact.value;
        kind = "exact";
        provenance = to_string(exact.provenance);
      } else {
        const auto best = best_upper_bound(params, directed);
        value = *best.value;
        provenance = to_string(best.provenance);
        if (best.provenance == Provenance::DirectedViaLemma13) provenance += "(" + best.get("via") + ")";
        if (oracle_budget) {
          SearchConfig config;
          config.node_budget = oracle_budget;
          std::optional<std::int64_t> solved;
          if (!directed) {
            const auto r = pdn_exact(params, config);
            if (r.certificate == Certificate::Optimal) solved = r.n;
          } else if (t == 2 && lambda == 1 && v <= 16) {
            const auto r = dpdn_exact(v, k, config);
            if (r.certificate == Certificate::Optimal) solved = r.n;
          }
          if (solved) {
            value = *solved;
            kind = "exact";
            provenance = "oracle";
          }
        }
      }
      if (tsv) {
        out << v << '\t' << k << '\t' << value << '\t' << kind << '\t' << provenance << '\n';
      } else {
        out << std::left << std::setw(5) << v << std::setw(5) << k << std::setw(8) << value << std::setw(7) << kind
            << provenance << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing designs: bounds, constructions, directing, exact search and code export", "packdesign"};
  app.require_subcommand(1);

  ParamFlags bounds_flags;
  bool bounds_directed = false;
  bool bounds_tsv = false;
  auto* bounds = app.add_subcommand("bounds", "print every applicable upper bound with provenance");
  bounds_flags.add_to(bounds);
  bounds->add_flag("--directed", bounds_directed, "bound the directed packing number");
  bounds->add_flag("--tsv", bounds_tsv, "tab-separated output");

  ParamFlags construct_flags;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "build an optimal design in the large-block regime");
  construct_flags.add_to(construct);
  construct->add_option("-o,--output", construct_out, "write the design here instead of stdout");

  std::string direct_in, direct_out;
  auto* direct = app.add_subcommand("direct", "order the blocks of a 2-fold packing with frequencies <= 3");
  direct->add_option("-i,--input", direct_in, "input design (JSON)")->required();
  direct->add_option("-o,--output", direct_out, "output directed design (JSON)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "validate a design file and print diagnostics");
  verify->add_option("-i,--input", verify_in, "design (JSON)")->required();

  ParamFlags solve_flags;
  bool solve_directed = false;
  std::optional<std::int64_t> solve_budget;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "exact packing number by exhaustive search");
  solve_flags.add_to(solve);
  solve->add_flag("--directed", solve_directed, "directed packing number (t = 2, lambda = 1)");
  solve->add_option("--budget", solve_budget, "node budget");
  solve->add_option("-o,--output", solve_out, "write the witness design here");

  std::string export_in, export_format, export_out;
  std::optional<int> export_check;
  auto* export_code = app.add_subcommand("export-code", "export a design as a code");
  export_code->add_option("-i,--input", export_in, "design (JSON)")->required();
  export_code->add_option("--format", export_format, "cw or indel")->required()->check(CLI::IsMember({"cw", "indel"}));
  export_code->add_option("--check-deletions", export_check, "verify the code survives s deletions");
  export_code->add_option("-o,--output", export_out, "write the code here instead of stdout");

  int v_min = 0, v_max = 0, k_min = 0, k_max = 0, table_t = 2, table_lambda = 1;
  bool table_tsv = false, table_directed = false;
  std::optional<std::int64_t> table_oracle;
  auto* table = app.add_subcommand("table", "best bound or exact value over a (v, k) grid");
  table->add_option("--v-min", v_min)->required();
  table->add_option("--v-max", v_max)->required();
  table->add_option("--k-min", k_min)->required();
  table->add_option("--k-max", k_max)->required();
  table->add_option("--t", table_t)->capture_default_str();
  table->add_option("--lambda", table_lambda)->capture_default_str();
  table->add_flag("--directed", table_directed);
  table->add_flag("--tsv", table_tsv);
  table->add_option("--oracle", table_oracle, "run the exact search with this node budget where no theorem applies");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*bounds) return cmd_bounds(bounds_flags, bounds_directed, bounds_tsv, out);
    if (*construct) return cmd_construct(construct_flags, construct_out, out);
    if (*direct) return cmd_direct(direct_in, direct_out, out);
    if (*verify) return cmd_verify(verify_in, out, err);
    if (*solve) return cmd_solve(solve_flags, solve_directed, solve_budget, solve_out, out);
    if (*export_code) return cmd_export(export_in, export_format, export_check, export_out, out, err);
    if (*table) {
      return cmd_table(v_min, v_max, k_min, k_max, table_t, table_lambda, table_directed, table_tsv, table_oracle,
                       out);
    }
  } catch (const NotApplicableError& e) {
    err << "error: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace packing::cli
