#include "cli_commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include "gelgamal/analysis.hpp"
#include "gelgamal/errors.hpp"
#include "gelgamal/order.hpp"
#include "gelgamal/polynomial.hpp"
#include "gelgamal/protocol.hpp"
#include "gelgamal/state_file.hpp"
#include "gelgamal/wire.hpp"

namespace gelgamal::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Timings quoted for the reference interpreted implementation, in ms.
constexpr double kRefSetupMs = 0.12;
constexpr double kRefFirstKeyMs = 29.56;
constexpr double kRefSessionUpdateMs = 52.94;
constexpr double kRefCipherCycleMs = 32.36;
constexpr double kRefFullSessionMs = 85.0;

void require_protocol_dim(const CliConfig& cfg) {
  if (cfg.dim != 8 && cfg.dim != 16) {
    throw ContractViolation("protocol subcommands support --dim 8 or 16, got " + std::to_string(cfg.dim));
  }
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

void require_path(const std::filesystem::path& p, const char* flag) {
  if (p.empty()) throw ContractViolation(std::string("missing required ") + flag);
}

void print_matrix(std::ostream& out, std::string_view label, const Matrix& m) {
  out << label << ":\n" << m;
}

void print_exponents(std::ostream& out, SessionExponents e) {
  out << "m=" << e.m << ", n=" << e.n << ", m·n=" << session_update_exponent(e) << '\n';
}

void print_diagonal(std::ostream& out, std::string_view label, const DiagonalSpec& d) {
  out << label << " = (";
  for (std::size_t i = 0; i < d.dim(); ++i) out << (i ? " " : "") << d.lambdas()[i];
  out << ")\n";
}

struct Pair {
  EntityState alice;
  EntityState bob;
};

// Runs setup, token exchange and one open/ack so both sides can encrypt.
Pair full_exchange(RandomSource& rng, std::size_t dim) {
  const SharedSetup setup = setup_shared(rng, dim);
  Pair pair{EntityState(Role::initiator, setup), EntityState(Role::responder, setup)};
  const Matrix a_token = pair.alice.keygen(rng);
  const Matrix b_token = pair.bob.keygen(rng);
  pair.alice.derive_session_key(b_token);
  pair.bob.derive_session_key(a_token);
  const Matrix open = pair.alice.open_session();
  pair.alice.accept_ack(pair.bob.ack_session(open));
  return pair;
}

}  // namespace

std::vector<std::uint8_t> parse_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || hex.size() % 2 != 0) throw ContractViolation("seed must be a non-empty even-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ContractViolation(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

RandomSource make_rng(const CliConfig& cfg) {
  if (cfg.seed) return RandomSource::deterministic(*cfg.seed);
  return RandomSource::cryptographic();
}

std::filesystem::path initiator_state_path(const std::filesystem::path& base) {
  return std::filesystem::path(base.string() + ".alice");
}

std::filesystem::path responder_state_path(const std::filesystem::path& base) {
  return std::filesystem::path(base.string() + ".bob");
}

int run_demo(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_protocol_dim(cfg);
  RandomSource rng = make_rng(cfg);
  const std::size_t d = cfg.dim;

  out << "# Generalized ElGamal over GL(" << d << ", F_251)\n\n";
  out << "## Setup: shared public matrices\n";
  const SharedSetup setup = setup_shared(rng, d);
  print_matrix(out, "P", setup.basis);
  print_matrix(out, "G", setup.generator);

  EntityState alice(Role::initiator, setup);
  EntityState bob(Role::responder, setup);

  out << "\n## Alice: private keys\n";
  const Matrix a_token = alice.keygen(rng);
  out << "k1=" << alice.initial_exponents().m << ", k2=" << alice.initial_exponents().n << '\n';
  print_diagonal(out, "D_A", alice.private_diagonal());
  print_matrix(out, "A = P D_A P^-1", alice.private_element());

  out << "\n## Bob: private keys\n";
  const Matrix b_token = bob.keygen(rng);
  out << "r1=" << bob.initial_exponents().m << ", r2=" << bob.initial_exponents().n << '\n';
  print_diagonal(out, "D_B", bob.private_diagonal());
  print_matrix(out, "B = P D_B P^-1", bob.private_element());

  out << "\n## Token exchange\n";
  print_matrix(out, "A' = A^k1 G A^k2", a_token);
  print_matrix(out, "B' = B^r1 G B^r2", b_token);

  out << "\n## First common key\n";
  alice.derive_session_key(b_token);
  bob.derive_session_key(a_token);
  print_matrix(out, "K", alice.session_key());
  print_exponents(out, alice.exponents());
  if (alice.shared_view() != bob.shared_view()) {
    err << "error: Alice and Bob derived different keys\n";
    return kProtocol;
  }
  out << "K agreement: Alice == Bob\n";

  out << "\n## Alice opens a new session, Bob acknowledges\n";
  out << "K <- K^" << session_update_exponent(alice.exponents()) << '\n';
  const Matrix a_session = alice.open_session();
  const Matrix b_session = bob.ack_session(a_session);
  alice.accept_ack(b_session);
  print_matrix(out, "K", alice.session_key());
  print_exponents(out, alice.exponents());
  print_matrix(out, "P", alice.basis());
  print_matrix(out, "G", alice.generator());
  print_matrix(out, "A' = A^m G A^n", a_session);
  print_matrix(out, "B' = B^m G B^n", b_session);
  if (alice.shared_view() != bob.shared_view()) {
    err << "error: session parameters diverged after the update\n";
    return kProtocol;
  }
  out << "session parameters: Alice == Bob\n";

  out << "\n## Alice ciphers H for Bob\n";
  const Matrix h = random_matrix(rng, d);
  print_matrix(out, "H", h);
  const CipherBlock c = alice.encrypt_block(h, b_session, rng);
  print_matrix(out, "y1 = J^m G J^n", c.y1);
  print_matrix(out, "y2 = H (J^m B' J^n)", c.y2);

  out << "\n## Bob deciphers\n";
  const Matrix recovered = bob.decrypt_block(c);
  print_matrix(out, "H = y2 (B^m y1 B^n)^-1", recovered);
  if (recovered != h) {
    out << "round-trip: FAILED\n";
    return kProtocol;
  }
  out << "round-trip: OK\n";
  return kOk;
}

int run_keyexchange(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_protocol_dim(cfg);
  require_path(cfg.state, "--state");
  RandomSource rng = make_rng(cfg);
  const Pair pair = full_exchange(rng, cfg.dim);
  const auto alice_path = initiator_state_path(cfg.state);
  const auto bob_path = responder_state_path(cfg.state);
  wire::save_state(alice_path, pair.alice);
  wire::save_state(bob_path, pair.bob);
  err << "warning: state files hold private keys in clear; simulation use only\n";
  out << "initiator state: " << alice_path.string() << '\n';
  out << "responder state: " << bob_path.string() << '\n';
  print_exponents(out, pair.alice.exponents());
  return kOk;
}

int run_encrypt(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_path(cfg.state, "--state");
  require_path(cfg.in, "--in");
  require_path(cfg.out, "--out");
  const EntityState state = wire::load_state(cfg.state);
  RandomSource rng = make_rng(cfg);
  const auto plaintext = read_file(cfg.in);
  const auto blocks = wire::encode_plaintext(plaintext, state.dim());

  std::vector<std::uint8_t> cipher = wire::frame(wire::context_message(state.dim(), state.modulus()));
  for (const Matrix& h : blocks) {
    const auto framed = wire::frame(wire::cipher_message(state.encrypt_block(h, rng)));
    cipher.insert(cipher.end(), framed.begin(), framed.end());
  }
  write_file(cfg.out, cipher);
  out << "encrypted " << plaintext.size() << " bytes into " << blocks.size() << " blocks (" << cipher.size()
      << " bytes)\n";
  return kOk;
}

int run_decrypt(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_path(cfg.state, "--state");
  require_path(cfg.in, "--in");
  require_path(cfg.out, "--out");
  const EntityState state = wire::load_state(cfg.state);
  const auto cipher = read_file(cfg.in);
  std::span<const std::uint8_t> rest(cipher);

  auto head = wire::parse_prefix(rest);
  rest = rest.subspan(head.consumed);
  if (head.message.type != wire::MessageType::context_params || head.message.dim != state.dim() ||
      head.message.payload[0] != state.modulus()) {
    throw wire::WireError(wire::WireErrc::bad_state, "ciphertext context does not match the state file");
  }
  std::vector<Matrix> blocks;
  while (!rest.empty()) {
    auto f = wire::parse_prefix(rest);
    rest = rest.subspan(f.consumed);
    blocks.push_back(state.decrypt_block(wire::message_cipher(f.message)));
  }
  const auto plaintext = wire::decode_plaintext(blocks);
  write_file(cfg.out, plaintext);
  out << "decrypted " << blocks.size() << " blocks into " << plaintext.size() << " bytes\n";
  return kOk;
}

int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_protocol_dim(cfg);
  const std::uint64_t iterations = cfg.iterations.value_or(1000);
  if (iterations == 0) throw ContractViolation("--iterations must be positive");
  RandomSource rng = make_rng(cfg);
  double total[4] = {};
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  for (std::uint64_t it = 0; it < iterations; ++it) {
    auto t0 = Clock::now();
    const SharedSetup setup = setup_shared(rng, cfg.dim);
    total[0] += ms_since(t0);

    EntityState alice(Role::initiator, setup);
    EntityState bob(Role::responder, setup);
    t0 = Clock::now();
    const Matrix a_token = alice.keygen(rng);
    const Matrix b_token = bob.keygen(rng);
    alice.derive_session_key(b_token);
    bob.derive_session_key(a_token);
    total[1] += ms_since(t0);

    t0 = Clock::now();
    alice.accept_ack(bob.ack_session(alice.open_session()));
    total[2] += ms_since(t0);

    const Matrix h = random_matrix(rng, cfg.dim);
    t0 = Clock::now();
    const Matrix back = bob.decrypt_block(alice.encrypt_block(h, rng));
    total[3] += ms_since(t0);
    if (back != h) throw ProtocolError("bench: cipher round-trip failed");
  }

  double mean[4];
  for (int i = 0; i < 4; ++i) mean[i] = total[i] / static_cast<double>(iterations);
  const double session = mean[1] + mean[2] + mean[3];
  const bool over = session > kRefFullSessionMs;

  if (cfg.format == OutputFormat::kv) {
    out << std::setprecision(6);
    out << "dim=" << cfg.dim << "\niterations=" << iterations << '\n';
    out << "setup_mean_ms=" << mean[0] << "\nfirst_key_mean_ms=" << mean[1]
        << "\nsession_update_mean_ms=" << mean[2] << "\ncipher_cycle_mean_ms=" << mean[3] << '\n';
    out << "key_session_cipher_total_ms=" << session << "\nexceeds_85ms=" << (over ? "yes" : "no") << '\n';
    return kOk;
  }
  out << "mean over " << iterations << " iterations, d=" << cfg.dim << "\n\n";
  out << std::left << std::setw(36) << "phase" << std::right << std::setw(14) << "mean ms" << std::setw(16)
      << "reference ms" << '\n';
  const char* names[4] = {"(a) setup P, G", "(b) tokens to first K and (m, n)", "(c) session update",
                          "(d) encipher-decipher cycle"};
  const double refs[4] = {kRefSetupMs, kRefFirstKeyMs, kRefSessionUpdateMs, kRefCipherCycleMs};
  for (int i = 0; i < 4; ++i) {
    out << std::left << std::setw(36) << names[i] << std::right << std::setw(14) << std::fixed
        << std::setprecision(4) << mean[i] << std::setw(16) << std::setprecision(2) << refs[i] << '\n';
  }
  out << "\n(b)+(c)+(d) = " << std::setprecision(4) << session << " ms"
      << (over ? "  WARNING: above the 85 ms reference session" : "  (under the 85 ms reference session)")
      << '\n';
  return kOk;
}

int run_analyze(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.dim < 2 || cfg.dim > 16) throw ContractViolation("analyze supports 2 <= --dim <= 16");
  const auto d = static_cast<unsigned>(cfg.dim);
  const unsigned p = kDefaultModulus;
  const std::uint64_t trials = cfg.iterations.value_or(100000);
  if (trials == 0) throw ContractViolation("--iterations must be positive");
  RandomSource rng = make_rng(cfg);

  const auto gl = analysis::order_gl(d, p);
  const auto ambient = analysis::count_ambient(d, p);
  const auto sub = analysis::order_commutative_subgroup(d, p);
  const auto sing = analysis::singular_probability(d, p, trials, rng);
  const Natural irreducibles = count_irreducibles(d, p);
  const Natural monic = count_monic_nontrivial(d, p);
  const Polynomial f = rand_irreducible(rng, d, p);
  std::string order_text = "unsupported (p^d - 1 exceeds 64 bits)";
  if (field_unit_group_order(p, d)) order_text = std::to_string(element_order(companion_matrix(f)));

  std::ostringstream fstr;
  fstr << f;

  out << std::setprecision(6) << std::fixed;
  if (cfg.format == OutputFormat::kv) {
    out << "dim=" << d << "\nprime=" << p << '\n';
    out << "order_gl=" << gl.value << "\norder_gl_log10=" << gl.log10 << '\n';
    out << "ambient=" << ambient.all.value << "\nambient_log10=" << ambient.all.log10 << '\n';
    out << "nilpotent=" << ambient.nilpotent.value << "\nnilpotent_log10=" << ambient.nilpotent.log10 << '\n';
    out << "subgroup_order_excl_one=" << sub.distinct_excluding_one.value
        << "\nsubgroup_order_excl_one_log2=" << sub.distinct_excluding_one.log2 << '\n';
    out << "subgroup_order_distinct=" << sub.distinct_nonzero.value
        << "\nsubgroup_order_distinct_log2=" << sub.distinct_nonzero.log2 << '\n';
    out << "security_bits=" << sub.distinct_excluding_one.log2 << '\n';
    out << "singular_closed_form=" << sing.closed_form << "\nsingular_monte_carlo=" << sing.monte_carlo
        << "\nsingular_trials=" << sing.trials << '\n';
    out << "irreducible_count=" << irreducibles << "\nmonic_nontrivial_count=" << monic << '\n';
    out << "companion_poly=" << fstr.str() << "\ncompanion_order=" << order_text << '\n';
    return kOk;
  }
  out << "GL(" << d << ", F_" << p << ")\n";
  out << "  |GL|                       " << gl.value << "\n  log10 |GL|                 " << gl.log10 << '\n';
  out << "  all matrices p^(d^2)       " << ambient.all.value << "\n  log10                      "
      << ambient.all.log10 << '\n';
  out << "  nilpotent p^(d^2-d)        " << ambient.nilpotent.value << '\n';
  out << "commutative subgroup search space\n";
  out << "  (p-2)...(p-1-d)            " << sub.distinct_excluding_one.value << "  (log2 " << sub.distinct_excluding_one.log2
      << ")\n";
  out << "  (p-1)...(p-d)              " << sub.distinct_nonzero.value << "  (log2 " << sub.distinct_nonzero.log2
      << ")\n";
  out << "  security estimate          " << std::setprecision(1) << sub.distinct_excluding_one.log2 << " bits\n"
      << std::setprecision(6);
  out << "singular matrix probability\n";
  out << "  closed form                " << sing.closed_form << "\n  monte carlo                "
      << sing.monte_carlo << "  (" << sing.singular << "/" << sing.trials << ")\n";
  out << "polynomials of degree " << d << '\n';
  out << "  monic irreducible N_p(d)   " << irreducibles << "\n  non-trivial monic p^d - 2  " << monic << '\n';
  out << "companion subgroup\n  f                          " << fstr.str() << "\n  order of companion(f)      "
      << order_text << '\n';
  return kOk;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "demo") return run_demo(cfg, out, err);
    if (cfg.subcommand == "keyexchange") return run_keyexchange(cfg, out, err);
    if (cfg.subcommand == "encrypt") return run_encrypt(cfg, out, err);
    if (cfg.subcommand == "decrypt") return run_decrypt(cfg, out, err);
    if (cfg.subcommand == "bench") return run_bench(cfg, out, err);
    if (cfg.subcommand == "analyze") return run_analyze(cfg, out, err);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kUsage;
  } catch (const wire::WireError& e) {
    err << "parse error (" << wire::to_string(e.code()) << "): " << e.what() << '\n';
    return kParse;
  } catch (const ProtocolError& e) {
    err << "protocol error: " << e.what() << '\n';
    return kProtocol;
  } catch (const MalformedCiphertext& e) {
    err << "protocol error: " << e.what() << '\n';
    return kProtocol;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace gelgamal::cli
