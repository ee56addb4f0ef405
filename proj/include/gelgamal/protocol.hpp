#pragma once

#include <cstdint>
#include <optional>

#include "gelgamal/commuting.hpp"
#include "gelgamal/field.hpp"
#include "gelgamal/matrix.hpp"
#include "gelgamal/random.hpp"

namespace gelgamal {

enum class Role : std::uint8_t { initiator = 0, responder = 1 };

/// fresh -> keyed (first common key) -> session_open (after an open/ack update).
enum class Phase : std::uint8_t { fresh = 0, keyed = 1, session_open = 2 };

/// Public parameters chosen by either party and sent in clear.
struct SharedSetup {
  Matrix basis;      // P
  Matrix generator;  // G
};

/// Two independent uniform elements of GL(d, F_p).
SharedSetup setup_shared(RandomSource& rng, std::size_t dim, std::uint8_t p = kDefaultModulus);

struct SessionExponents {
  FieldElement m;
  FieldElement n;

  friend bool operator==(const SessionExponents&, const SessionExponents&) = default;
};

/// Derives the exponent pair from the common key. With 1-based (row, col):
///
///   s1 = first nonzero anti-diagonal entry scanning from (d,1) toward (1,d)
///   s2 = first nonzero anti-diagonal entry scanning from (1,d) toward (d,1)
///   t1 = first nonzero main-diagonal entry scanning from (1,1) toward (d,d)
///   t2 = first nonzero main-diagonal entry scanning from (d,d) toward (1,1)
///
///   m = s1 * s2,  n = t1 * t2
///
/// A diagonal with no nonzero entry contributes the pair (1, 1). Both
/// results are therefore always in [1, p-1].
SessionExponents extract_mn(const Matrix& key);

/// Exponent applied to K at each session update: m * n mod p, never zero.
FieldElement session_update_exponent(SessionExponents e);

/// ElGamal pair for one message matrix.
struct CipherBlock {
  Matrix y1;
  Matrix y2;

  friend bool operator==(const CipherBlock&, const CipherBlock&) = default;
};

/// The values both parties must hold identically after every exchange.
struct SharedView {
  Matrix key;
  SessionExponents exponents;
  Matrix basis;
  Matrix generator;

  friend bool operator==(const SharedView&, const SharedView&) = default;
};

/// Complete serialisable state of one party.
struct EntitySnapshot {
  Role role = Role::initiator;
  Phase phase = Phase::fresh;
  Matrix basis;
  Matrix generator;
  Matrix key;
  SessionExponents exponents;
  std::optional<DiagonalSpec> diagonal;
  FieldElement k1;
  FieldElement k2;
  std::optional<Matrix> own_token;
  std::optional<Matrix> peer_token;
};

/// One party of the two-party protocol.
///
/// Steps, in order:
///
///   keygen               choose D, k1, k2; emit A' = A^k1 G A^k2
///   derive_session_key   K = A^k1 B' A^k2, (m, n) = extract_mn(K)
///   open_session /       K <- K^(m n); (m, n) <- extract_mn(K);
///   ack_session          P <- K^m P K^n; G <- K^m G K^n; A <- P D P^-1;
///                        emit A^m G A^n
///   encrypt_block / decrypt_block, any number of times
///   open_session again for the next session
///
/// Both parties run the same deterministic update, so as long as every open
/// is matched by exactly one ack they hold identical (K, m, n, P, G). A lost
/// ack desynchronises them silently; decryption then yields garbage.
class EntityState {
 public:
  EntityState(Role role, const SharedSetup& setup);

  static EntityState restore(const EntitySnapshot& snapshot);
  EntitySnapshot snapshot() const;

  Role role() const noexcept { return role_; }
  Phase phase() const noexcept { return phase_; }
  std::size_t dim() const noexcept { return generator_.dim(); }
  std::uint8_t modulus() const noexcept { return generator_.modulus(); }

  /// Requires phase fresh and no earlier keygen. Initial exponents are drawn
  /// from [1, p-1]; zero would collapse a factor of the token to I.
  Matrix keygen(RandomSource& rng);

  /// Requires phase fresh after keygen. Throws ProtocolError for a singular
  /// or mis-shaped peer token.
  void derive_session_key(const Matrix& peer_token);

  /// Starts a new session. Requires phase keyed or session_open.
  Matrix open_session();

  /// Answers the peer's open with the identical update and returns this
  /// party's token. Requires phase keyed or session_open.
  Matrix ack_session(const Matrix& peer_token);

  /// Records the token the peer sent back in its ack.
  void accept_ack(const Matrix& peer_token);

  /// y1 = J^m G J^n, y2 = H (J^m B' J^n) with a fresh J for every block.
  /// H may be singular. Requires phase session_open.
  CipherBlock encrypt_block(const Matrix& message, const Matrix& peer_token, RandomSource& rng) const;
  /// Same, using the stored peer token from ack_session / accept_ack.
  CipherBlock encrypt_block(const Matrix& message, RandomSource& rng) const;

  /// H = y2 (B^m y1 B^n)^-1. Throws MalformedCiphertext when the mask is singular.
  Matrix decrypt_block(const CipherBlock& block) const;

  const Matrix& basis() const noexcept { return context_.basis(); }
  const Matrix& generator() const noexcept { return generator_; }
  const Matrix& session_key() const noexcept { return key_; }
  SessionExponents exponents() const noexcept { return exponents_; }
  SharedView shared_view() const;

  /// P D P^-1 under the current basis. Requires keygen.
  const Matrix& private_element() const;
  const DiagonalSpec& private_diagonal() const;
  /// (k1, k2). Requires keygen.
  SessionExponents initial_exponents() const;

  const std::optional<Matrix>& own_token() const noexcept { return own_token_; }
  const std::optional<Matrix>& peer_token() const noexcept { return peer_token_; }

 private:
  void require_keys() const;
  void require_peer_token_shape(const Matrix& token) const;
  void advance_session();

  Role role_;
  Phase phase_ = Phase::fresh;
  CommutingContext context_;
  Matrix generator_;
  Matrix key_;
  SessionExponents exponents_;
  std::optional<DiagonalSpec> diagonal_;
  FieldElement k1_;
  FieldElement k2_;
  std::optional<Matrix> self_element_;
  std::optional<Matrix> own_token_;
  std::optional<Matrix> peer_token_;
};

}  // namespace gelgamal
