// agw: array grammar workbench command line.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "agw/constructions.hpp"
#include "agw/engine.hpp"
#include "agw/error.hpp"
#include "agw/oracles.hpp"
#include "agw/psystem.hpp"
#include "agw/textio.hpp"

using namespace agw;

namespace {

constexpr int kOk = 0, kInputError = 1, kDiffer = 2, kInconclusive = 3;

struct BudgetFlags {
  Budget budget;
  unsigned jobs = 1;

  // verify supplies its own cell and extent options.
  void add_to(CLI::App* cmd, bool with_region = true) {
    cmd->add_option("--max-steps", budget.max_steps, "derivation depth cap")->capture_default_str();
    if (with_region) {
      cmd->add_option("--max-cells", budget.max_cells, "occupied-cell cap")->capture_default_str();
      cmd->add_option("--max-extent", budget.max_extent, "extent cap")->capture_default_str();
    }
    cmd->add_option("--max-results", budget.max_results, "result cap")->capture_default_str();
    cmd->add_flag_callback("--no-prune", [this] { budget.prune_dead = false; }, "explore dead-end states too");
    cmd->add_option("--jobs", jobs, "worker threads for frontier expansion")->capture_default_str()->check(
        CLI::Range(1u, 1024u));
  }
};

bool looks_like_psystem(const std::string& text) {
  for (const auto& line : content_lines(text))
    if (split_key(line.text).first == "membranes") return true;
  return false;
}

// A verify side: a grammar or P system file, `star:<file>`, an oracle, or
// `empty`.
LangResult evaluate_side(const std::string& side, const Budget& b, unsigned jobs) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string> {
    if (side.rfind(prefix, 0) == 0) return side.substr(prefix.size());
    return std::nullopt;
  };
  if (side == "empty") {
    LangResult r;
    r.cell_cap = Budget::kUnlimited;
    return r;
  }
  if (auto f = after("oracle:tm:")) return tm_generate(parse_tm(read_text_file(*f)), b);
  if (auto f = after("oracle:arba:")) return arba_language(parse_grammar(read_text_file(*f)), b);
  if (auto f = after("oracle:pcp:")) return pcp_language(parse_pcp(read_text_file(*f)), b);
  if (auto f = after("star:")) return language(parse_grammar(read_text_file(*f)), Mode::star, b, jobs);
  if (side.rfind("oracle:", 0) == 0) throw ParseError("unknown oracle in '" + side + "'");
  const std::string text = read_text_file(side);
  if (looks_like_psystem(text)) return run_t_bounded(parse_psystem(text), b, jobs).lang;
  return language(parse_grammar(text), Mode::t, b, jobs);
}

std::string halting_lines(const PsRun& run) {
  std::string out;
  for (const auto& h : run.halting)
    out += "halting: " + h.membrane + (h.terminal ? " terminal" : " nonterminal") +
           (h.array.empty() ? std::string() : " " + render_array(h.array)) + '\n';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Array grammar workbench: enumerate, compile and verify array insertion/deletion systems"};
  app.require_subcommand(1);

  // lang
  auto* lang_cmd = app.add_subcommand("lang", "enumerate the bounded language of a grammar or P system");
  std::string lang_grammar, lang_ps, lang_mode = "t";
  bool lang_verbose = false;
  BudgetFlags lang_budget;
  auto* g_opt = lang_cmd->add_option("--grammar", lang_grammar, "grammar file");
  auto* p_opt = lang_cmd->add_option("--ps", lang_ps, "P-system file");
  g_opt->excludes(p_opt);
  lang_cmd->add_option("--mode", lang_mode, "star or t")->check(CLI::IsMember({"star", "t"}))->capture_default_str();
  lang_cmd->add_flag("--verbose", lang_verbose, "search statistics on stderr");
  lang_budget.add_to(lang_cmd);

  // run-ps
  auto* run_cmd = app.add_subcommand("run-ps", "run a P system and report halting configurations");
  std::string run_file;
  BudgetFlags run_budget;
  run_cmd->add_option("file", run_file, "P-system file")->required();
  run_budget.add_to(run_cmd);

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "compile a PCP instance, ARBA grammar or Turing machine");
  std::string compile_kind, compile_in, compile_out;
  compile_cmd->add_option("kind", compile_kind, "pcp | arba2ps | tm2g")
      ->required()
      ->check(CLI::IsMember({"pcp", "arba2ps", "tm2g"}));
  compile_cmd->add_option("--in", compile_in, "input file")->required();
  compile_cmd->add_option("--out", compile_out, "output file (stdout when omitted)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "compare two bounded languages");
  std::string left_side, right_side;
  std::uint64_t region = Budget{}.max_cells;
  std::optional<std::uint64_t> explore_cells, explore_extent;
  bool strict = false;
  BudgetFlags verify_budget;
  verify_cmd->add_option("--left", left_side, "<file> | star:<file> | oracle:tm|arba|pcp:<file> | empty")->required();
  verify_cmd->add_option("--right", right_side, "same forms as --left")->required();
  verify_cmd->add_option("--max-cells", region, "comparison region: arrays with at most this many cells")
      ->capture_default_str();
  verify_cmd->add_option("--explore-cells", explore_cells, "cell cap for both searches (default: region + 4)");
  verify_cmd->add_option("--max-extent", explore_extent, "extent cap for both searches (default: 2 * explore cells)");
  verify_cmd->add_flag("--strict", strict, "exit 3 on INCONCLUSIVE");
  verify_budget.add_to(verify_cmd, false);

  // render
  auto* render_cmd = app.add_subcommand("render", "canonical form of an array literal");
  std::string render_text;
  bool render_positioned = false, render_shape = false;
  render_cmd->add_option("array", render_text, "array literal (compact or @-positioned)")->required();
  render_cmd->add_flag("--positioned", render_positioned, "print @<pos> <token> pairs");
  render_cmd->add_flag("--shape", render_shape, "print size and extent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*lang_cmd) {
      if (lang_grammar.empty() == lang_ps.empty()) throw ParseError("give exactly one of --grammar or --ps");
      LangResult r;
      if (!lang_grammar.empty()) {
        const Grammar g = parse_grammar(read_text_file(lang_grammar));
        r = language(g, lang_mode == "star" ? Mode::star : Mode::t, lang_budget.budget, lang_budget.jobs);
      } else {
        if (lang_mode != "t") throw ParseError("P systems only have a t-mode language");
        r = run_t_bounded(parse_psystem(read_text_file(lang_ps)), lang_budget.budget, lang_budget.jobs).lang;
      }
      std::cout << serialize_lang(r);
      if (lang_verbose) std::cerr << describe_search(r);
      return kOk;
    }
    if (*run_cmd) {
      const PSystem p = parse_psystem(read_text_file(run_file));
      const PsRun run = run_t_bounded(p, run_budget.budget, run_budget.jobs);
      for (const auto& a : run.lang.arrays) std::cout << "result: " << render_array(a) << '\n';
      std::cout << halting_lines(run) << describe_search(run.lang);
      return kOk;
    }
    if (*compile_cmd) {
      const std::string in = read_text_file(compile_in);
      std::string text, report;
      if (compile_kind == "pcp") {
        const PSystem p = compile_pcp(parse_pcp(in));
        text = serialize_psystem(p);
        report = describe_audit(audit(p), true);
      } else if (compile_kind == "arba2ps") {
        const PSystem p = compile_arba_to_psystem(parse_grammar(in));
        text = serialize_psystem(p);
        report = describe_audit(audit(p), true);
      } else {
        const Grammar g = compile_tm_to_grammar(parse_tm(in));
        text = serialize_grammar(g);
        report = describe_audit(audit(g), false);
      }
      if (compile_out.empty()) {
        std::cout << text;
        std::cerr << report;
      } else {
        write_text_file(compile_out, text);
        std::cout << report;
      }
      return kOk;
    }
    if (*verify_cmd) {
      Budget b = verify_budget.budget;
      b.max_cells = explore_cells.value_or(region + 4);
      b.max_extent = explore_extent.value_or(2 * b.max_cells);
      const LangResult left = evaluate_side(left_side, b, verify_budget.jobs);
      const LangResult right = evaluate_side(right_side, b, verify_budget.jobs);
      const EquivalenceReport rep = compare_languages(left, right, region);
      std::cout << serialize_report(rep);
      switch (rep.verdict) {
        case EquivalenceReport::Verdict::equal: return kOk;
        case EquivalenceReport::Verdict::differ: return kDiffer;
        case EquivalenceReport::Verdict::inconclusive: return strict ? kInconclusive : kOk;
      }
    }
    if (*render_cmd) {
      const Array1D a = parse_array(render_text);
      if (render_positioned) {
        std::string line;
        for (const auto& [pos, s] : a.cells())
          line += (line.empty() ? "@" : " @") + std::to_string(pos) + " " + std::string(s.token());
        std::cout << line << '\n';
      } else {
        std::cout << render_array(a) << '\n';
      }
      if (render_shape) {
        const ShapeMetrics m = shape_of(a);
        std::cout << "size: " << m.size << "\nextent: " << m.extent << '\n';
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
