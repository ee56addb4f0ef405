#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gelgamal/errors.hpp"
#include "gelgamal/matrix.hpp"
#include "gelgamal/protocol.hpp"

namespace gelgamal::wire {

enum class WireErrc {
  truncated,
  bad_magic,
  unsupported_version,
  unknown_type,
  bad_dimension,
  bad_payload_length,
  byte_out_of_range,
  trailing_bytes,
  unsupported_modulus,
  corrupt_block,
  bad_padding,
  bad_state,
};

std::string_view to_string(WireErrc code) noexcept;

/// Every decoding failure in this namespace, tagged with a distinct code.
class WireError : public Error {
 public:
  WireError(WireErrc code, const std::string& what) : Error(what), code_(code) {}
  WireErrc code() const noexcept { return code_; }

 private:
  WireErrc code_;
};

// ---------------------------------------------------------------------------
// Matrices

/// d*d bytes, row-major, one byte per entry (moduli are at most 251).
std::vector<std::uint8_t> matrix_to_bytes(const Matrix& a);

/// Inverse of matrix_to_bytes. Rejects a wrong length or any byte >= p.
Matrix bytes_to_matrix(std::span<const std::uint8_t> bytes, std::size_t dim,
                       std::uint8_t p = kDefaultModulus);

// ---------------------------------------------------------------------------
// Plaintext block code
//
// Plaintext is padded, split into 7-byte chunks, and each chunk (read as a
// 56-bit big-endian integer) becomes 8 base-251 digits, most significant
// first. d*d digits fill one message matrix row-major, so a matrix carries
// 7*d*d/8 plaintext bytes (56 for d = 8). Padding always appends L bytes of
// value L, 1 <= L <= 7*d*d/8, so a full final block costs one extra matrix.

/// Plaintext bytes carried by one message matrix. Throws WireError
/// (bad_dimension) unless d*d is a multiple of 8.
std::size_t plaintext_bytes_per_block(std::size_t dim);

std::vector<Matrix> encode_plaintext(std::span<const std::uint8_t> data, std::size_t dim);

/// Throws corrupt_block when a digit group is >= 2^56 and bad_padding when
/// the trailing pad is malformed.
std::vector<std::uint8_t> decode_plaintext(std::span<const Matrix> blocks);

// ---------------------------------------------------------------------------
// Framing
//
//   offset  size  field
//   0       4     magic "GEG1"
//   4       1     message type
//   5       1     d
//   6       4     payload length, big-endian
//   10      n     payload
//
// Matrix-bearing payloads are k*d*d bytes each < 251 (k = 2 for cipher
// blocks, 1 otherwise). The context-params payload is the single byte p.

enum class MessageType : std::uint8_t {
  basis_init = 0x01,
  generator_init = 0x02,
  token_initial = 0x03,
  session_open_token = 0x04,
  session_ack_token = 0x05,
  cipher_block = 0x06,
  context_params = 0x07,
};

inline constexpr std::uint8_t kMagic[4] = {'G', 'E', 'G', '1'};
inline constexpr std::size_t kHeaderSize = 10;

struct WireMessage {
  MessageType type;
  std::uint8_t dim;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

/// Payload size a well-formed message of this type and dimension must carry.
std::size_t expected_payload_size(MessageType type, std::size_t dim);

/// Serialises after validating; throws WireError on an ill-formed message.
std::vector<std::uint8_t> frame(const WireMessage& msg);

/// Parses exactly one frame spanning all of `bytes`.
WireMessage parse(std::span<const std::uint8_t> bytes);

struct ParsedFrame {
  WireMessage message;
  std::size_t consumed;
};

/// Parses the frame at the front of `bytes`, leaving the rest untouched.
ParsedFrame parse_prefix(std::span<const std::uint8_t> bytes);

WireMessage matrix_message(MessageType type, const Matrix& a);
WireMessage cipher_message(const CipherBlock& block);
WireMessage context_message(std::size_t dim, std::uint8_t p = kDefaultModulus);

/// Matrix carried by a single-matrix message.
Matrix message_matrix(const WireMessage& msg);
CipherBlock message_cipher(const WireMessage& msg);

}  // namespace gelgamal::wire
