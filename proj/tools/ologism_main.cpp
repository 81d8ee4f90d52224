#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "ologism/cli.hpp"

using namespace ologism;

int main(int argc, char** argv) {
  CLI::App app{"Check ologisms: syllogistic closure, proofs, models and path equations."};
  app.require_subcommand(1);

  std::string format = "text";
  bool no_color = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-color", no_color, "Disable ANSI colors");

  std::string path, model_path;

  auto* check = app.add_subcommand("check", "Close the premisses and report derived propositions and contradictions");
  check->add_option("file", path, "Ologism document (.olgm)")->required();

  std::vector<std::string> premisses;
  std::string conclusion, import_term;
  auto* prove = app.add_subcommand("prove", "Prove a syllogism diagrammatically");
  prove->add_option("--premiss", premisses, "Premiss literal, e.g. E:M,P")->required()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  prove->add_option("--import", import_term, "Add the existential import premiss I(X,X)");
  prove->add_option("--conclusion", conclusion, "Conclusion literal, e.g. E:S,P")->required();

  bool with_import = false;
  auto* enumerate = app.add_subcommand("enumerate", "Classify all 256 syllogistic forms");
  enumerate->add_flag("--import", with_import, "Also accept forms valid under existential import");

  std::string against = "closure";
  auto* model_check = app.add_subcommand("model-check", "Check a model against an ologism");
  model_check->add_option("ologism", path, "Ologism document (.olgm)")->required();
  model_check->add_option("model", model_path, "Model document (.olgmodel)")->required();
  model_check->add_option("--against", against, "Prescriptions to check")
      ->check(CLI::IsMember({"premisses", "closure"}));

  cli::OracleArgs oracle_args;
  std::string mode = "soundness";
  auto* oracle = app.add_subcommand("oracle", "Compare the closure with finite models");
  oracle->add_option("file", path, "Ologism document (.olgm)")->required();
  oracle->add_option("--universe", oracle_args.universe, "Universe size")->check(CLI::Range(1, 16));
  oracle->add_option("--mode", mode, "What to check")
      ->check(CLI::IsMember({"soundness", "completeness", "models"}));
  oracle->add_option("--seed", oracle_args.seed, "Seed for rejection sampling");
  oracle->add_option("--samples", oracle_args.samples, "Samples for ologisms outside the is-only fragment");
  oracle->add_option("--limit", oracle_args.list_limit, "Models listed in models mode");

  bool derived = false;
  auto* dot = app.add_subcommand("export-dot", "Write the ologism as Graphviz DOT");
  dot->add_option("file", path, "Ologism document (.olgm)")->required();
  dot->add_flag("--derived", derived, "Add derived propositions as dashed edges");

  auto* repl = app.add_subcommand("repl", "Interactive edit and check loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  cli::Options opt;
  opt.format = format == "json" ? cli::Format::Json : cli::Format::Text;
  opt.color = !no_color && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);

  if (*check) return cli::cmd_check(path, opt, std::cout, std::cerr);
  if (*prove) {
    std::optional<std::string> imp;
    if (!import_term.empty()) imp = import_term;
    return cli::cmd_prove(premisses, imp, conclusion, opt, std::cout, std::cerr);
  }
  if (*enumerate) return cli::cmd_enumerate(with_import, opt, std::cout);
  if (*model_check)
    return cli::cmd_model_check(path, model_path,
                                against == "premisses" ? model::Against::Premisses : model::Against::Closure,
                                opt, std::cout, std::cerr);
  if (*oracle) {
    oracle_args.mode = mode == "completeness" ? cli::OracleMode::Completeness
                       : mode == "models"     ? cli::OracleMode::Models
                                              : cli::OracleMode::Soundness;
    return cli::cmd_oracle(path, oracle_args, opt, std::cout, std::cerr);
  }
  if (*dot) return cli::cmd_export_dot(path, derived, std::cout, std::cerr);
  if (*repl) {
    cli::ReplOptions r;
    r.output = opt;
    r.prompt = isatty(STDIN_FILENO);
    return cli::cmd_repl(std::cin, std::cout, r);
  }
  return cli::kExitUsage;
}
