// bglab: command-line front end for the block-group representation library.
//
// Exit status: 0 on success, 1 when a checked property fails, 2 when the input
// cannot be parsed or does not meet a command's preconditions.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bglab/automata.hpp"
#include "bglab/certify.hpp"
#include "bglab/corpus.hpp"
#include "bglab/error.hpp"
#include "bglab/report.hpp"
#include "bglab/table_io.hpp"
#include "bglab/variety.hpp"

namespace {

  using namespace bglab;

  struct Options {
    std::string table;
    std::string named;
    std::string format = "text";
    std::size_t max_order = default_congruence_order_cap;
    std::size_t max_variables = default_variable_cap;
    // Accepted for forward compatibility; the checks are all exhaustive.
    std::optional<unsigned long> seed;
    std::string identity;
    std::string dfa;
    std::string maps;
    std::size_t all_orders = 0;
    bool        use_corpus = false;
  };

  enum class ExitCode : int { ok = 0, violation = 1, bad_input = 2 };

  bool is_input_error(ErrorCode code) {
    switch (code) {
      case ErrorCode::parse_error:
      case ErrorCode::malformed_input:
      case ErrorCode::index_out_of_range:
      case ErrorCode::not_associative:
      case ErrorCode::not_block_group:
      case ErrorCode::order_too_large:
      case ErrorCode::unbound_variable:
      case ErrorCode::too_many_variables:
      case ErrorCode::closure_too_large:
      case ErrorCode::empty_alphabet:
      case ErrorCode::universe_mismatch: return true;
      default: return false;
    }
  }

  FiniteSemigroup load_input(Options const& o) {
    if (!o.table.empty() && !o.named.empty()) {
      throw Error(ErrorCode::malformed_input, "give either --table or --named, not both");
    }
    if (!o.table.empty()) {
      return parse_table_file(read_file(o.table));
    }
    if (!o.named.empty()) {
      if (auto s = find_in_corpus(o.named)) {
        return *s;
      }
      throw Error(ErrorCode::malformed_input, "no corpus member named '" + o.named + "'");
    }
    throw Error(ErrorCode::malformed_input, "an input is required: --table FILE or --named NAME");
  }

  void emit(Options const& o, json const& report, FiniteSemigroup const* s) {
    if (o.format == "structured") {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << render_text(report, s);
    }
  }

  ExitCode run_certify(Options const& o) {
    CertifyOptions const opts{o.max_order};
    json                 results = json::array();
    bool                 all_ok  = true;
    std::size_t          checked = 0;
    auto                 add     = [&](FiniteSemigroup const& s, std::string const& name) {
      auto const r = certify(s, name, opts);
      all_ok       = all_ok && r.passed();
      ++checked;
      results.push_back(certification_json(r));
    };
    if (o.all_orders > 0) {
      for (std::size_t n = 1; n <= o.all_orders; ++n) {
        std::size_t i = 0;
        for (auto const& s : all_associative_tables(n)) {
          add(s, "order" + std::to_string(n) + "-table" + std::to_string(i++));
        }
      }
    } else if (o.use_corpus) {
      for (auto const& m : corpus()) {
        add(m.semigroup, m.name);
      }
    } else {
      add(load_input(o), o.table.empty() ? o.named : o.table);
    }
    json const summary{{"checked", checked}, {"passed", all_ok}, {"results", results}};
    if (o.format == "structured") {
      std::cout << summary.dump(2) << '\n';
    } else if (o.all_orders > 0 || o.use_corpus) {
      // Only failures in detail; one line per semigroup otherwise.
      for (auto const& r : results) {
        if (r["passed"].get<bool>()) {
          std::cout << "PASS " << r["target"].get<std::string>() << '\n';
        } else {
          std::cout << render_text(r);
        }
      }
      std::cout << checked << " semigroups certified, " << (all_ok ? "all passed" : "FAILURES") << '\n';
    } else {
      std::cout << render_text(results[0]);
    }
    return all_ok ? ExitCode::ok : ExitCode::violation;
  }

  ExitCode run_generated(Options const& o, FiniteSemigroup const& s) {
    json report{{"semigroup", semigroup_json(s)},
                {"table", render_table_file(s)},
                {"block_group", block_group_json(s)}};
    if (o.format == "structured") {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << render_table_file(s);
      report.erase("table");
      std::cout << render_text(report, &s);
    }
    return ExitCode::ok;
  }

  void add_input_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--table", o.table, "Multiplication-table file");
    cmd->add_option("--named", o.named, "Corpus member, e.g. B2 or null2");
  }

  void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--max-order", o.max_order, "Largest order for congruence lattice enumeration");
    cmd->add_option("--seed", o.seed, "Reserved; all checks are exhaustive");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite block-groups and their Vagner-Preston and Munn representations"};
  app.require_subcommand(1);
  Options o;

  auto* analyze     = app.add_subcommand("analyze", "Full report on one semigroup");
  auto* check_bg    = app.add_subcommand("check-bg", "Block-group test with witness");
  auto* vp          = app.add_subcommand("vp", "Print the Vagner-Preston representation");
  auto* munn        = app.add_subcommand("munn", "Print the Munn representation");
  auto* congruences = app.add_subcommand("congruences", "Congruence lattice and separating oracles");
  auto* variety     = app.add_subcommand("variety", "Check a pseudoidentity");
  auto* syn         = app.add_subcommand("syn", "Syntactic monoid of a DFA");
  auto* gen         = app.add_subcommand("gen", "Semigroup generated by transformations");
  auto* certify_cmd = app.add_subcommand("certify", "Re-check every property and oracle");

  for (auto* cmd : {analyze, check_bg, vp, munn, congruences, variety, certify_cmd}) {
    add_input_options(cmd, o);
  }
  for (auto* cmd : {analyze, check_bg, vp, munn, congruences, variety, syn, gen, certify_cmd}) {
    add_common_options(cmd, o);
  }
  variety->add_option("--identity", o.identity, "e.g. \"(x^w y^w)^w = (y^w x^w)^w\"")->required();
  variety->add_option("--max-variables", o.max_variables, "Largest number of variables to enumerate");
  syn->add_option("--dfa", o.dfa, "DFA file")->required();
  gen->add_option("--maps", o.maps, "Generator file")->required();
  auto* all_orders = certify_cmd->add_option("--all-orders", o.all_orders, "Every associative table up to this order");
  auto* use_corpus = certify_cmd->add_flag("--corpus", o.use_corpus, "Every corpus member");
  all_orders->excludes(use_corpus);

  CLI11_PARSE(app, argc, argv);

  ReportOptions const report_options{o.max_order};
  try {
    if (analyze->parsed()) {
      auto const s = load_input(o);
      emit(o, analysis_report(s, report_options), &s);
      return 0;
    }
    if (check_bg->parsed()) {
      auto const s = load_input(o);
      emit(o, {{"block_group", block_group_json(s)}}, &s);
      return 0;
    }
    if (vp->parsed()) {
      auto const s = load_input(o);
      emit(o, {{"vagner_preston", representation_json(s, vp_representation(s))}}, &s);
      return 0;
    }
    if (munn->parsed()) {
      auto const s = load_input(o);
      emit(o, {{"munn", representation_json(s, munn_representation(s))}}, &s);
      return 0;
    }
    if (congruences->parsed()) {
      auto const s = load_input(o);
      if (s.order() > o.max_order) {
        throw Error(ErrorCode::order_too_large,
                    "order " + std::to_string(s.order()) + " exceeds --max-order "
                        + std::to_string(o.max_order));
      }
      emit(o, {{"congruences", congruences_json(s, report_options)}}, &s);
      return 0;
    }
    if (variety->parsed()) {
      auto const s      = load_input(o);
      auto const ids    = parse_pseudoidentities(o.identity);
      auto const result = satisfies(s, ids, o.max_variables);
      json       report{{"identity", o.identity}, {"holds", result.holds}, {"counterexample", nullptr}};
      if (result.counterexample) {
        report["counterexample"] = *result.counterexample;
      }
      if (o.format == "structured") {
        std::cout << report.dump(2) << '\n';
      } else {
        std::cout << o.identity << ": " << (result.holds ? "holds" : "fails") << '\n';
        if (result.counterexample) {
          for (auto const& [var, value] : *result.counterexample) {
            std::cout << "  " << var << " = " << s.label(value) << '\n';
          }
        }
      }
      return 0;
    }
    if (syn->parsed()) {
      return int(run_generated(o, syntactic_monoid(parse_dfa_file(read_file(o.dfa)))));
    }
    if (gen->parsed()) {
      auto const spec = parse_maps_file(read_file(o.maps));
      return int(run_generated(o, generate_from_transformations(spec.points, spec.generators)));
    }
    if (certify_cmd->parsed()) {
      return int(run_certify(o));
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return int(is_input_error(e.code()) ? ExitCode::bad_input : ExitCode::violation);
  }
  return 0;
}
