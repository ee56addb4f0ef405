#include "gelgamal/protocol.hpp"

#include <utility>

#include "gelgamal/errors.hpp"

namespace gelgamal {

namespace {

// Scans d positions starting at (row, col) and stepping by (drow, dcol);
// returns the first nonzero value, or 1 if there is none.
std::uint8_t first_nonzero(const Matrix& k, std::size_t row, std::size_t col, int drow, int dcol) {
  for (std::size_t step = 0; step < k.dim(); ++step) {
    const std::uint8_t v = k.raw(row, col);
    if (v != 0) return v;
    row = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(row) + drow);
    col = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(col) + dcol);
  }
  return 1;
}

}  // namespace

SharedSetup setup_shared(RandomSource& rng, std::size_t dim, std::uint8_t p) {
  Matrix basis = random_invertible(rng, dim, p);
  Matrix generator = random_invertible(rng, dim, p);
  return {std::move(basis), std::move(generator)};
}

SessionExponents extract_mn(const Matrix& key) {
  const std::size_t last = key.dim() - 1;
  const std::uint8_t p = key.modulus();

  // An all-zero diagonal yields 1 from both scans.
  const std::uint8_t s1 = first_nonzero(key, last, 0, -1, +1);  // bottom-left, moving up-right
  const std::uint8_t s2 = first_nonzero(key, 0, last, +1, -1);  // top-right, moving down-left
  const std::uint8_t t1 = first_nonzero(key, 0, 0, +1, +1);        // top-left, moving down
  const std::uint8_t t2 = first_nonzero(key, last, last, -1, -1);  // bottom-right, moving up
  return {FieldElement::from_canonical(mul_mod(s1, s2, p), p),
          FieldElement::from_canonical(mul_mod(t1, t2, p), p)};
}

FieldElement session_update_exponent(SessionExponents e) { return e.m * e.n; }

EntityState::EntityState(Role role, const SharedSetup& setup)
    : role_(role),
      context_(setup.basis),
      generator_(setup.generator),
      key_(Matrix::identity(setup.generator.dim(), setup.generator.modulus())),
      exponents_{FieldElement(1, setup.generator.modulus()), FieldElement(1, setup.generator.modulus())},
      k1_(FieldElement(1, setup.generator.modulus())),
      k2_(FieldElement(1, setup.generator.modulus())) {
  require_same_shape(setup.basis, setup.generator);
  if (!is_invertible(generator_)) throw ContractViolation("shared generator G must be invertible");
}

Matrix EntityState::keygen(RandomSource& rng) {
  if (phase_ != Phase::fresh || diagonal_) throw ProtocolError("keygen: keys already generated");
  const std::uint8_t p = modulus();
  k1_ = rng.uniform_nonzero(p);
  k2_ = rng.uniform_nonzero(p);
  diagonal_ = DiagonalSpec::random(rng, dim(), p);
  self_element_ = conjugate_diagonal(context_, *diagonal_);
  own_token_ = conjugate_diagonal_power(context_, *diagonal_, k1_.value()) * generator_ *
               conjugate_diagonal_power(context_, *diagonal_, k2_.value());
  return *own_token_;
}

void EntityState::require_keys() const {
  if (!diagonal_) throw ProtocolError("no private keys: keygen has not run");
}

void EntityState::require_peer_token_shape(const Matrix& token) const {
  if (token.dim() != dim() || token.modulus() != modulus()) {
    throw ProtocolError("peer token has the wrong dimension or modulus");
  }
  if (!is_invertible(token)) throw ProtocolError("peer token is singular");
}

void EntityState::derive_session_key(const Matrix& peer_token) {
  if (phase_ != Phase::fresh) throw ProtocolError("derive_session_key: common key already derived");
  require_keys();
  require_peer_token_shape(peer_token);
  key_ = conjugate_diagonal_power(context_, *diagonal_, k1_.value()) * peer_token *
         conjugate_diagonal_power(context_, *diagonal_, k2_.value());
  exponents_ = extract_mn(key_);
  phase_ = Phase::keyed;
}

void EntityState::advance_session() {
  if (phase_ == Phase::fresh) throw ProtocolError("session update before the common key exists");
  key_ = power(key_, session_update_exponent(exponents_).value());
  exponents_ = extract_mn(key_);
  const Matrix km = power(key_, exponents_.m.value());
  const Matrix kn = power(key_, exponents_.n.value());
  context_ = CommutingContext(km * context_.basis() * kn);
  generator_ = km * generator_ * kn;
  self_element_ = conjugate_diagonal(context_, *diagonal_);
  own_token_ = conjugate_diagonal_power(context_, *diagonal_, exponents_.m.value()) * generator_ *
               conjugate_diagonal_power(context_, *diagonal_, exponents_.n.value());
  peer_token_.reset();
  phase_ = Phase::session_open;
}

Matrix EntityState::open_session() {
  advance_session();
  return *own_token_;
}

Matrix EntityState::ack_session(const Matrix& peer_token) {
  if (phase_ == Phase::fresh) throw ProtocolError("ack_session before the common key exists");
  require_peer_token_shape(peer_token);
  advance_session();
  peer_token_ = peer_token;
  return *own_token_;
}

void EntityState::accept_ack(const Matrix& peer_token) {
  if (phase_ != Phase::session_open) throw ProtocolError("accept_ack: no open session");
  require_peer_token_shape(peer_token);
  peer_token_ = peer_token;
}

CipherBlock EntityState::encrypt_block(const Matrix& message, const Matrix& peer_token,
                                       RandomSource& rng) const {
  if (phase_ != Phase::session_open) throw ProtocolError("encrypt_block: no open session");
  require_same_shape(message, generator_);
  require_peer_token_shape(peer_token);
  const DiagonalSpec ephemeral = DiagonalSpec::random(rng, dim(), modulus());
  const Matrix jm = conjugate_diagonal_power(context_, ephemeral, exponents_.m.value());
  const Matrix jn = conjugate_diagonal_power(context_, ephemeral, exponents_.n.value());
  return {jm * generator_ * jn, message * (jm * peer_token * jn)};
}

CipherBlock EntityState::encrypt_block(const Matrix& message, RandomSource& rng) const {
  if (!peer_token_) throw ProtocolError("encrypt_block: no peer token for the current session");
  return encrypt_block(message, *peer_token_, rng);
}

Matrix EntityState::decrypt_block(const CipherBlock& block) const {
  if (phase_ != Phase::session_open) throw ProtocolError("decrypt_block: no open session");
  if (block.y1.dim() != dim() || block.y2.dim() != dim() || block.y1.modulus() != modulus() ||
      block.y2.modulus() != modulus()) {
    throw MalformedCiphertext("cipher block shape does not match the session");
  }
  const Matrix mask = conjugate_diagonal_power(context_, *diagonal_, exponents_.m.value()) * block.y1 *
                      conjugate_diagonal_power(context_, *diagonal_, exponents_.n.value());
  auto mask_inv = try_inverse(mask);
  if (!mask_inv) throw MalformedCiphertext("cipher block mask is singular");
  return block.y2 * *mask_inv;
}

SharedView EntityState::shared_view() const { return {key_, exponents_, context_.basis(), generator_}; }

const Matrix& EntityState::private_element() const {
  require_keys();
  return *self_element_;
}

const DiagonalSpec& EntityState::private_diagonal() const {
  require_keys();
  return *diagonal_;
}

SessionExponents EntityState::initial_exponents() const {
  require_keys();
  return {k1_, k2_};
}

EntitySnapshot EntityState::snapshot() const {
  return {role_,     phase_, context_.basis(), generator_, key_,       exponents_,
          diagonal_, k1_,    k2_,              own_token_, peer_token_};
}

EntityState EntityState::restore(const EntitySnapshot& s) {
  EntityState state(s.role, SharedSetup{s.basis, s.generator});
  require_same_shape(s.key, s.generator);
  if (!is_invertible(s.key)) throw ProtocolError("restored session key is singular");
  if (s.phase != Phase::fresh && !s.diagonal) throw ProtocolError("restored keyed state lacks private keys");
  if (s.exponents.m.is_zero() || s.exponents.n.is_zero() || s.k1.is_zero() || s.k2.is_zero()) {
    throw ProtocolError("restored exponents must be nonzero");
  }
  if (s.phase != Phase::fresh && extract_mn(s.key) != s.exponents) {
    throw ProtocolError("restored exponents do not match the session key");
  }
  if (s.diagonal && s.diagonal->dim() != s.generator.dim()) {
    throw ProtocolError("restored diagonal has the wrong dimension");
  }
  state.phase_ = s.phase;
  state.key_ = s.key;
  state.exponents_ = s.exponents;
  state.diagonal_ = s.diagonal;
  state.k1_ = s.k1;
  state.k2_ = s.k2;
  if (state.diagonal_) state.self_element_ = conjugate_diagonal(state.context_, *state.diagonal_);
  for (const auto* token : {&s.own_token, &s.peer_token}) {
    if (*token) state.require_peer_token_shape(**token);
  }
  state.own_token_ = s.own_token;
  state.peer_token_ = s.peer_token;
  return state;
}

}  // namespace gelgamal
