// seplat: property lattices of finite orthogonality spaces, separated
// products and coproducts, with axiom checkers.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seplat/commands.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int finish(const seplat::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property lattices of finite orthogonality spaces"};
  app.require_subcommand(1);

  seplat::CommandOptions opts;
  app.add_option("--cap", opts.cap, "Maximum number of lattice elements")->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Machine-readable JSON report");
  app.add_flag("--expect-violations", opts.expect_violations, "Exit 0 iff some check is violated");
  app.add_flag("--timing", opts.timing, "Include wall-clock time in reports");

  std::string file;
  auto* check = app.add_subcommand("check", "Run the full axiom suite");
  check->add_option("file", file, "Space file")->required();
  auto* lattice = app.add_subcommand("lattice", "Lattice statistics and element listing");
  lattice->add_option("file", file, "Space file")->required();
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as a DOT digraph");
  hasse->add_option("file", file, "Space file")->required();
  auto* coproduct = app.add_subcommand("coproduct", "Checks on a coproduct definition");
  coproduct->add_option("file", file, "Space file")->required();

  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t max_states = 6;
  auto* sasaki = app.add_subcommand("sasaki", "Sasaki regularity scan, or a randomized product run with --seed");
  sasaki->add_option("file", file, "Space file");
  auto* seed_opt = sasaki->add_option("--seed", seed, "Seed for randomized product regularity trials");
  sasaki->add_option("--trials", trials, "Number of random space pairs")->needs(seed_opt);
  sasaki->add_option("--max-states", max_states, "States per random component")->needs(seed_opt);

  std::size_t m = 0;
  std::size_t n = 0;
  auto* oracle = app.add_subcommand("oracle", "Compare symbolic and brute-force MO(m) x MO(n)");
  oracle->add_option("m", m)->required();
  oracle->add_option("n", n)->required();

  // Options given after a subcommand name belong to the main app too.
  for (auto* sub : {check, lattice, hasse, coproduct, sasaki, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : seplat::kExitUsage;
  }

  if (*oracle) return finish(seplat::cmd_oracle(m, n, opts));
  if (*sasaki && seed_opt->count() > 0) {
    if (!file.empty()) {
      std::cerr << "sasaki: give either a file or --seed\n";
      return seplat::kExitUsage;
    }
    return finish(seplat::cmd_sasaki_random(seed, trials, max_states, opts));
  }
  if (file.empty()) {
    std::cerr << "missing space file\n";
    return seplat::kExitUsage;
  }

  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "cannot read " << file << "\n";
    return seplat::kExitUsage;
  }
  if (*check) return finish(seplat::cmd_check(text, opts));
  if (*lattice) return finish(seplat::cmd_lattice(text, opts));
  if (*hasse) return finish(seplat::cmd_hasse(text, opts));
  if (*coproduct) return finish(seplat::cmd_coproduct(text, opts));
  return finish(seplat::cmd_sasaki(text, opts));
}
