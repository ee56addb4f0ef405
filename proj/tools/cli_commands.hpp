#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gelgamal/random.hpp"

namespace gelgamal::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kProtocol = 4,
  kIo = 5,
};

enum class OutputFormat { text, kv };

struct CliConfig {
  std::string subcommand;
  std::size_t dim = 8;
  std::optional<std::vector<std::uint8_t>> seed;
  std::filesystem::path in;
  std::filesystem::path out;
  std::filesystem::path state;
  std::optional<std::uint64_t> iterations;
  OutputFormat format = OutputFormat::text;
};

/// Hex string (even length, optional 0x prefix) to bytes. Throws ContractViolation.
std::vector<std::uint8_t> parse_hex(std::string_view hex);

/// Seeded deterministic source when cfg.seed is set, cryptographic otherwise.
RandomSource make_rng(const CliConfig& cfg);

/// Paths written by keyexchange for a --state base path.
std::filesystem::path initiator_state_path(const std::filesystem::path& base);
std::filesystem::path responder_state_path(const std::filesystem::path& base);

int run_demo(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_keyexchange(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_encrypt(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_decrypt(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs cfg.subcommand and maps exceptions onto exit codes.
int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gelgamal::cli
