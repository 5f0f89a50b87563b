// Command-line front end: parse -> ground -> solve -> verify, with
// machine-readable JSON output (or --format text for a human table).
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input error,
// 3 resource guard tripped.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivlp/engine.hpp"
#include "ivlp/grounder.hpp"
#include "ivlp/json_io.hpp"
#include "ivlp/oracle.hpp"
#include "ivlp/parser.hpp"
#include "ivlp/wfs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuardTripped = 3;

struct Options {
  std::string input;  // empty: stdin
  std::string interp_path;
  std::string format = "json";
  bool trace = false;
  std::optional<std::uint32_t> k_override;
  std::uint64_t max_candidates = ivlp::kDefaultCandidateGuard;
  // generation (used when --seed is given instead of an input file)
  std::optional<std::uint64_t> seed;
  std::uint32_t gen_atoms = 4;
  std::uint32_t gen_clauses = 6;
  std::uint32_t gen_body = 2;
  double gen_neg_prob = 0.3;
};

std::string read_input(const Options& opt) {
  if (opt.input.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open " + opt.input);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ivlp::Program load_program(const Options& opt) {
  if (opt.seed)
    return ivlp::random_program(*opt.seed, opt.gen_atoms, opt.gen_clauses,
                                opt.gen_body, opt.gen_neg_prob);
  return ivlp::ground(ivlp::parse_program(read_input(opt)));
}

void print_table(const ivlp::Program& p, const ivlp::json& model) {
  std::size_t width = 0;
  for (const auto& a : p.base) width = std::max(width, a.to_string().size());
  for (const auto& [atom, value] : model.items())
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << atom
              << value.get<std::string>() << "\n";
}

void emit(const Options& opt, const ivlp::Program& p, const ivlp::json& out) {
  if (opt.format == "text" && out.contains("model") && out["model"].is_object())
    print_table(p, out["model"]);
  else
    std::cout << out.dump(2) << "\n";
}

int cmd_ground(const Options& opt) {
  ivlp::Program p = load_program(opt);
  std::cout << p.to_string();
  return kExitOk;
}

int cmd_solve(const Options& opt) {
  ivlp::Program p = load_program(opt);
  ivlp::SolveTrace tr = ivlp::solve(p, {.trace = opt.trace});
  emit(opt, p, ivlp::solve_trace_to_json(p, tr, opt.trace));
  return kExitOk;
}

int cmd_wfm(const Options& opt) {
  ivlp::Program p = load_program(opt);
  ivlp::SolveTrace tr = ivlp::solve(p);
  auto collapsed = ivlp::collapse_model(tr.model);
  auto wf = ivlp::well_founded(p);
  bool agree = collapsed == wf;
  ivlp::json out;
  out["collapsed"] = ivlp::three_valued_to_json(p, collapsed);
  out["alternating_fixpoint"] = ivlp::three_valued_to_json(p, wf);
  out["agree"] = agree;
  std::cout << out.dump(2) << "\n";
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_check(const Options& opt) {
  ivlp::Program p = load_program(opt);
  std::ifstream in(opt.interp_path);
  if (!in) throw std::runtime_error("cannot open " + opt.interp_path);
  ivlp::json raw = ivlp::json::parse(in);
  ivlp::Interpretation i = ivlp::interpretation_from_json(p, raw);
  bool model = ivlp::is_model(p, i);
  ivlp::json out;
  out["model"] = model;
  std::cout << out.dump(2) << "\n";
  return model ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& opt) {
  ivlp::Program p = load_program(opt);
  ivlp::SolveTrace tr = ivlp::solve(p);
  std::uint32_t k = opt.k_override
                        ? *opt.k_override
                        : static_cast<std::uint32_t>(tr.depth) + 2;
  ivlp::ModelSet ms = ivlp::enumerate_models(p, k, opt.max_candidates);
  ivlp::MinimalityResult res{true, std::nullopt};
  for (const auto& n : ms.models)
    if (!ivlp::le_infty(tr.model, n)) {
      res = {false, n};
      break;
    }
  ivlp::json out;
  out["k"] = k;
  out["model_count"] = ms.models.size();
  out["minimal"] = res.minimal;
  out["counterexample"] = res.counterexample
                              ? ivlp::interpretation_to_json(p, *res.counterexample)
                              : ivlp::json(nullptr);
  std::cout << out.dump(2) << "\n";
  return res.minimal ? kExitOk : kExitVerificationFailed;
}

int cmd_intersect(const Options& opt) {
  ivlp::Program p = load_program(opt);
  ivlp::SolveTrace tr = ivlp::solve(p);
  std::uint32_t k = opt.k_override
                        ? *opt.k_override
                        : static_cast<std::uint32_t>(tr.depth) + 2;
  ivlp::IntersectionResult res =
      ivlp::intersection_sequence(p, k, opt.max_candidates);
  ivlp::json out;
  out["k"] = k;
  out["model_count"] = res.model_count;
  ivlp::json inter;
  inter["singleton"] = res.singleton();
  inter["model"] = res.singleton()
                       ? ivlp::interpretation_to_json(p, res.final_models[0])
                       : ivlp::json(nullptr);
  out["intersection"] = std::move(inter);
  std::cout << out.dump(2) << "\n";
  return res.singleton() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite-valued minimum-model solver for normal logic "
               "programs with negation-as-failure"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "program file (stdin if omitted)");
    sub->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed,
                    "generate a random program instead of reading input");
    sub->add_option("--atoms", opt.gen_atoms, "generated atom count");
    sub->add_option("--clauses", opt.gen_clauses, "generated clause count");
    sub->add_option("--body-len", opt.gen_body, "generated max body length");
    sub->add_option("--neg-prob", opt.gen_neg_prob,
                    "generated negation probability");
    return sub;
  };

  add_common(app.add_subcommand("ground", "print the ground instantiation"));
  auto* solve = add_common(
      app.add_subcommand("solve", "compute the infinite-valued minimum model"));
  solve->add_flag("--trace", opt.trace, "retain per-stage iterates");
  add_common(app.add_subcommand(
      "wfm", "compare the collapsed model with the alternating fixpoint"));
  auto* check = add_common(
      app.add_subcommand("check", "test whether an interpretation is a model"));
  check->add_option("--interp", opt.interp_path, "interpretation JSON file")
      ->required();
  auto* verify = add_common(app.add_subcommand(
      "verify", "brute-force minimality certificate at a truncation"));
  auto* intersect = add_common(app.add_subcommand(
      "intersect", "model-intersection sequence down to a singleton"));
  for (CLI::App* sub : {verify, intersect}) {
    sub->add_option("--k", opt.k_override, "truncation order (default depth+2)");
    sub->add_option("--max-candidates", opt.max_candidates,
                    "enumeration guard");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("ground")) return cmd_ground(opt);
    if (app.got_subcommand("solve")) return cmd_solve(opt);
    if (app.got_subcommand("wfm")) return cmd_wfm(opt);
    if (app.got_subcommand("check")) return cmd_check(opt);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
    if (app.got_subcommand("intersect")) return cmd_intersect(opt);
  } catch (const ivlp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ivlp::GroundingError& e) {
    std::cerr << "grounding error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ivlp::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuardTripped;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
