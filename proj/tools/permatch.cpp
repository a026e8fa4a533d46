// permatch: permutation and involution matchings of finite regular semigroups.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "permatch/commands.hpp"
#include "permatch/error.hpp"
#include "permatch/io.hpp"

namespace {

  using namespace permatch;

  void emit(cli::Outcome const& out, bool as_json, std::string const& report_path) {
    if (as_json) {
      std::cout << out.report.dump(2) << '\n';
    } else {
      std::cout << out.text;
    }
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      if (!f) {
        throw Error(ErrorCode::parse, "cannot write report file '" + report_path + "'");
      }
      f << out.report.dump(2) << '\n';
    }
  }

  void write_file(std::string const& path, std::string const& content) {
    std::ofstream f(path);
    if (!f) {
      throw Error(ErrorCode::parse, "cannot write '" + path + "'");
    }
    f << content;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation and involution matchings of finite regular semigroups"};
  app.require_subcommand(1);

  cli::Options opts;
  bool         as_json = false;
  std::string  report_path;
  app.add_option("--seed", opts.seed, "Seed for sampled searches")->capture_default_str();
  app.add_option("--budget", opts.budget, "Node budget of the colour solver")->capture_default_str();
  app.add_flag("--json", as_json, "Print the JSON report instead of the summary");
  app.add_flag("--oracle", opts.oracle, "Cross-check against exhaustive backtracking oracles");
  app.add_flag("--timing", opts.timing, "Record wall-clock time in the report");
  app.add_option("--report", report_path, "Also write the JSON report to this file");

  int exit_code = 0;

  std::string input_path;
  auto        add_input_cmd = [&](std::string const& name, std::string const& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input_path, "Cayley table or band file ('-' for stdin)")->required();
    sub->callback([&, fn] {
      auto const out = fn(io::slurp(input_path), opts);
      emit(out, as_json, report_path);
      exit_code = out.exit_code;
    });
  };
  add_input_cmd("analyze", "Structure, Green's relations and matching criteria", cli::analyze);
  add_input_cmd("match", "Permutation matching or a Hall violator", cli::match);
  add_input_cmd("involution", "Involution matching via the two-copy gadget", cli::involution);
  add_input_cmd("factors", "Principal factors and their H-quotient bands", cli::factors);

  auto* band = app.add_subcommand("band", "0-rectangular band tools");
  band->require_subcommand(1);
  auto add_band_cmd = [&](std::string const& name, std::string const& help, auto fn) {
    auto* sub = band->add_subcommand(name, help);
    sub->add_option("band", input_path, "Band pattern file")->required();
    sub->callback([&, fn] {
      auto const out = fn(io::slurp(input_path), opts);
      emit(out, as_json, report_path);
      exit_code = out.exit_code;
    });
  };
  add_band_cmd("check", "Regularity, row expansion and similarity", cli::band_check);
  add_band_cmd("harem", "Disjoint injections covering all columns", cli::band_harem);
  add_band_cmd("involution", "Involution built from the harem family", cli::band_involution);

  auto* colour = app.add_subcommand("colour", "Colour alignment");
  colour->require_subcommand(1);
  auto* solve_cmd = colour->add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", input_path, "Instance file")->required();
  solve_cmd->callback([&] {
    auto const out = cli::colour_solve(io::slurp(input_path), opts);
    emit(out, as_json, report_path);
    exit_code = out.exit_code;
  });
  std::string matching_path;
  auto*       reduce_cmd = colour->add_subcommand("reduce", "Derive from a band and solve");
  reduce_cmd->add_option("band", input_path, "Band pattern file")->required();
  reduce_cmd->add_option("--matching", matching_path, "Matching file (default: computed)");
  reduce_cmd->callback([&] {
    std::optional<std::string> m;
    if (!matching_path.empty()) {
      m = io::slurp(matching_path);
    }
    auto const out = cli::colour_reduce(io::slurp(input_path), m, opts);
    emit(out, as_json, report_path);
    exit_code = out.exit_code;
  });

  std::string family_name;
  std::size_t degree = 0, cap = kDefaultEnumerationCap;
  std::string out_path;
  auto*       gen_cmd = app.add_subcommand("gen", "Cayley table of a transformation family");
  gen_cmd->add_option("family", family_name, "Tn, PTn, On, OPn or Pn")->required();
  gen_cmd->add_option("n", degree, "Degree")->required();
  gen_cmd->add_option("--cap", cap, "Largest order to enumerate")->capture_default_str();
  gen_cmd->add_option("-o,--output", out_path, "Table file; the dictionary goes to <file>.dict");
  gen_cmd->callback([&] {
    auto const family = parse_family(family_name);
    if (!family) {
      throw Error(ErrorCode::parameter_out_of_range, "unknown family '" + family_name + "'");
    }
    auto const g = cli::gen(*family, degree, cap);
    if (out_path.empty()) {
      std::cout << g.table;
    } else {
      write_file(out_path, g.table);
      write_file(out_path + ".dict", g.dictionary);
    }
  });

  cli::SeparatorSearch separators;
  auto*                separator_cmd = app.add_subcommand("search-q4", "Hunt for bands with a matching but no involution");
  separator_cmd->add_option("--m-min", separators.m_min)->capture_default_str();
  separator_cmd->add_option("--m-max", separators.m_max)->capture_default_str();
  separator_cmd->add_option("--n-min", separators.n_min)->capture_default_str();
  separator_cmd->add_option("--n-max", separators.n_max)->capture_default_str();
  separator_cmd->add_option("--exhaustive-cells", separators.exhaustive_cells, "Enumerate shapes with m*n up to this")
      ->capture_default_str();
  separator_cmd->add_option("--densities", separators.densities, "Idempotent densities for sampled shapes")
      ->delimiter(',');
  separator_cmd->add_option("--samples", separators.samples, "Samples per shape and density")->capture_default_str();
  separator_cmd->callback([&] {
    auto const out = cli::search_separators(separators, opts);
    emit(out, as_json, report_path);
    exit_code = out.exit_code;
  });

  cli::FamilySearch family_search;
  std::string          family_arg = "On";
  auto*                family_cmd = app.add_subcommand("search-on", "Matching existence across a transformation family");
  family_cmd->add_option("--family", family_arg, "Family to probe")->capture_default_str();
  family_cmd->add_option("--n-min", family_search.n_min)->capture_default_str();
  family_cmd->add_option("--n-max", family_search.n_max)->capture_default_str();
  family_cmd->add_option("--oracle-max-n", family_search.oracle_max_n)->capture_default_str();
  family_cmd->add_option("--involution-max-n", family_search.involution_max_n)->capture_default_str();
  family_cmd->callback([&] {
    auto const parsed = parse_family(family_arg);
    if (!parsed) {
      throw Error(ErrorCode::parameter_out_of_range, "unknown family '" + family_arg + "'");
    }
    family_search.family = *parsed;
    auto const out       = cli::search_family(family_search, opts);
    emit(out, as_json, report_path);
    exit_code = out.exit_code;
  });

  std::string report_in;
  auto*       verify_cmd = app.add_subcommand("verify", "Re-check every witness in a saved report");
  verify_cmd->add_option("report", report_in, "JSON report")->required();
  verify_cmd->add_option("input", input_path, "Input the report was produced from");
  verify_cmd->callback([&] {
    auto const out = cli::verify(io::slurp(report_in), input_path.empty() ? "" : io::slurp(input_path));
    emit(out, as_json, report_path);
    exit_code = out.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return permatch::exit_code(e.code());
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: Parse: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
