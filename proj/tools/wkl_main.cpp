// wkl: Whittaker Kazhdan-Lusztig polynomials and character formulas.
//
//   wkl --type A3 --theta α,β --lambda "-5-4*t1, -5+4*t1, -5" klpolys
//   wkl --type A2 --theta "" --lambda "-1,-1" characters --verma

#include "wkl/job.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Whittaker Kazhdan-Lusztig polynomials and character formulas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string type = "A1";
  std::string theta;
  std::string lambda;
  std::string format = "text";
  std::string seed_order = "fixed";
  int max_rank = wkl::RootSystem::kMaxRank;
  app.add_option("--type", type, "Root system, e.g. A3, B2, G2")->required();
  app.add_option("--theta", theta, "Simple roots in Theta: α,β or alpha,beta or 0,1");
  app.add_option("--lambda", lambda, "Coroot values of λ, e.g. \"-5-4*t1, -5+4*t1, -5\"")->required();
  app.add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed-order", seed_order, "Enumeration order; only 'fixed' is supported")
      ->check(CLI::IsMember({"fixed"}));
  app.add_option("--max-rank", max_rank, "Refuse root systems above this rank")->check(CLI::Range(1, 6));

  bool invert = false;
  bool verma = false;
  app.add_subcommand("info", "Weight flags, integral roots, cross-sections and models");
  app.add_subcommand("cosets", "Right W_Θ-cosets, their order and the integral models");
  app.add_subcommand("klpolys", "Whittaker Kazhdan-Lusztig polynomials per integral model");
  auto* characters = app.add_subcommand("characters", "Character formulas for irreducible modules");
  characters->add_flag("--invert", invert, "Also print multiplicities of irreducibles in standards");
  characters->add_flag("--verma", verma, "Use Θ = ∅ (Verma modules)");
  app.add_subcommand("verify", "Check the tables against brute-force oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? wkl::kExitOk : wkl::kExitInput;
  }

  wkl::JobSpec job;
  try {
    std::tie(job.type_letter, job.rank) = wkl::parse_type(type);
    job.theta = wkl::parse_theta(theta, job.rank);
    job.lambda = wkl::parse_lambda(lambda);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wkl::kExitInput;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.format = format;
  job.invert = invert;
  job.verma = verma;
  job.max_rank = max_rank;
  return wkl::run(job, std::cout, std::cerr);
}
