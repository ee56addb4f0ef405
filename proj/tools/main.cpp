#include <iostream>

#include "CLI11.hpp"
#include "cli_commands.hpp"
#include "gelgamal/errors.hpp"

int main(int argc, char** argv) {
  using namespace gelgamal::cli;

  CLI::App app{"Generalized ElGamal cipher over GL(d, F_251)"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string seed_hex;
  std::uint64_t iterations = 0;
  std::string format = "text";
  app.add_option("--dim", cfg.dim, "Matrix dimension (8 or 16 for protocol commands, 2..16 for analyze)");
  app.add_option("--seed", seed_hex, "Hex seed for a deterministic, replayable run");
  auto* iter_opt = app.add_option("--iterations", iterations, "bench iterations / analyze Monte-Carlo trials");
  app.add_option("--in", cfg.in, "Input file");
  app.add_option("--out", cfg.out, "Output file");
  app.add_option("--state", cfg.state, "State file (keyexchange: base path for .alice/.bob)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));

  app.add_subcommand("demo", "Run the full two-party sequence in-process and print the transcript");
  app.add_subcommand("keyexchange", "Run the key exchange and write both parties' state files");
  app.add_subcommand("encrypt", "Encrypt --in to --out with the peer token stored in --state");
  app.add_subcommand("decrypt", "Decrypt --in to --out with the private key in --state");
  app.add_subcommand("bench", "Time setup, first key, session update and cipher cycle");
  app.add_subcommand("analyze", "Print group cardinalities and security estimates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (*iter_opt) cfg.iterations = iterations;
  cfg.format = format == "kv" ? OutputFormat::kv : OutputFormat::text;
  if (!seed_hex.empty()) {
    try {
      cfg.seed = parse_hex(seed_hex);
    } catch (const gelgamal::ContractViolation& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return dispatch(cfg, std::cout, std::cerr);
}
