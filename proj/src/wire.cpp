#include "gelgamal/wire.hpp"

#include <algorithm>
#include <string>

namespace gelgamal::wire {

namespace {

constexpr std::uint64_t kChunkLimit = std::uint64_t{1} << 56U;
constexpr std::size_t kChunkBytes = 7;
constexpr std::size_t kChunkDigits = 8;
constexpr unsigned kDigitBase = 251;
constexpr std::uint8_t kWireModulus = kDefaultModulus;

[[noreturn]] void fail(WireErrc code, const std::string& what) { throw WireError(code, what); }

bool known_type(std::uint8_t t) { return t >= 0x01 && t <= 0x07; }

bool dim_ok(std::size_t d) { return d >= Matrix::kMinDim && d <= Matrix::kMaxDim; }

void check_payload(const WireMessage& msg) {
  if (!known_type(static_cast<std::uint8_t>(msg.type))) {
    fail(WireErrc::unknown_type, "unknown message type " + std::to_string(static_cast<unsigned>(msg.type)));
  }
  if (!dim_ok(msg.dim)) fail(WireErrc::bad_dimension, "dimension " + std::to_string(msg.dim) + " outside [2, 16]");
  const std::size_t want = expected_payload_size(msg.type, msg.dim);
  if (msg.payload.size() != want) {
    fail(WireErrc::bad_payload_length, "payload is " + std::to_string(msg.payload.size()) + " bytes, expected " +
                                           std::to_string(want));
  }
  if (msg.type == MessageType::context_params) {
    if (!is_byte_prime(msg.payload[0]) || msg.payload[0] > kDefaultModulus) {
      fail(WireErrc::unsupported_modulus, "context modulus " + std::to_string(msg.payload[0]) + " is not a prime <= 251");
    }
    return;
  }
  for (std::uint8_t b : msg.payload) {
    if (b >= kWireModulus) fail(WireErrc::byte_out_of_range, "matrix byte " + std::to_string(b) + " >= 251");
  }
}

}  // namespace

std::string_view to_string(WireErrc code) noexcept {
  switch (code) {
    case WireErrc::truncated: return "truncated";
    case WireErrc::bad_magic: return "bad_magic";
    case WireErrc::unsupported_version: return "unsupported_version";
    case WireErrc::unknown_type: return "unknown_type";
    case WireErrc::bad_dimension: return "bad_dimension";
    case WireErrc::bad_payload_length: return "bad_payload_length";
    case WireErrc::byte_out_of_range: return "byte_out_of_range";
    case WireErrc::trailing_bytes: return "trailing_bytes";
    case WireErrc::unsupported_modulus: return "unsupported_modulus";
    case WireErrc::corrupt_block: return "corrupt_block";
    case WireErrc::bad_padding: return "bad_padding";
    case WireErrc::bad_state: return "bad_state";
  }
  return "unknown";
}

std::vector<std::uint8_t> matrix_to_bytes(const Matrix& a) {
  const auto e = a.entries();
  return {e.begin(), e.end()};
}

Matrix bytes_to_matrix(std::span<const std::uint8_t> bytes, std::size_t dim, std::uint8_t p) {
  if (!dim_ok(dim)) fail(WireErrc::bad_dimension, "dimension " + std::to_string(dim) + " outside [2, 16]");
  if (bytes.size() != dim * dim) {
    fail(WireErrc::bad_payload_length,
         "matrix needs " + std::to_string(dim * dim) + " bytes, got " + std::to_string(bytes.size()));
  }
  for (std::uint8_t b : bytes) {
    if (b >= p) fail(WireErrc::byte_out_of_range, "entry byte " + std::to_string(b) + " >= " + std::to_string(p));
  }
  return Matrix::from_values(dim, bytes, p);
}

std::size_t plaintext_bytes_per_block(std::size_t dim) {
  if (!dim_ok(dim) || (dim * dim) % kChunkDigits != 0) {
    fail(WireErrc::bad_dimension, "plaintext code needs d*d divisible by 8, got d = " + std::to_string(dim));
  }
  return dim * dim / kChunkDigits * kChunkBytes;
}

std::vector<Matrix> encode_plaintext(std::span<const std::uint8_t> data, std::size_t dim) {
  const std::size_t block_bytes = plaintext_bytes_per_block(dim);
  const std::size_t pad = block_bytes - data.size() % block_bytes;

  std::vector<std::uint8_t> padded(data.begin(), data.end());
  padded.insert(padded.end(), pad, static_cast<std::uint8_t>(pad));

  std::vector<Matrix> blocks;
  blocks.reserve(padded.size() / block_bytes);
  std::vector<std::uint8_t> digits(dim * dim);
  for (std::size_t off = 0; off < padded.size(); off += block_bytes) {
    for (std::size_t c = 0; c < dim * dim / kChunkDigits; ++c) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < kChunkBytes; ++i) v = (v << 8U) | padded[off + c * kChunkBytes + i];
      for (std::size_t i = kChunkDigits; i-- > 0;) {
        digits[c * kChunkDigits + i] = static_cast<std::uint8_t>(v % kDigitBase);
        v /= kDigitBase;
      }
    }
    blocks.push_back(Matrix::from_values(dim, digits, kWireModulus));
  }
  return blocks;
}

std::vector<std::uint8_t> decode_plaintext(std::span<const Matrix> blocks) {
  if (blocks.empty()) fail(WireErrc::bad_padding, "no blocks to decode");
  const std::size_t dim = blocks.front().dim();
  const std::size_t block_bytes = plaintext_bytes_per_block(dim);

  std::vector<std::uint8_t> out;
  out.reserve(blocks.size() * block_bytes);
  for (const Matrix& m : blocks) {
    if (m.dim() != dim) fail(WireErrc::bad_dimension, "blocks of mixed dimension");
    if (m.modulus() != kWireModulus) fail(WireErrc::unsupported_modulus, "plaintext code requires p = 251");
    const auto digits = m.entries();
    for (std::size_t c = 0; c < dim * dim / kChunkDigits; ++c) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < kChunkDigits; ++i) v = v * kDigitBase + digits[c * kChunkDigits + i];
      if (v >= kChunkLimit) fail(WireErrc::corrupt_block, "digit group does not encode a 7-byte chunk");
      for (std::size_t i = kChunkBytes; i-- > 0;) out.push_back(static_cast<std::uint8_t>(v >> (8U * i)));
    }
  }

  const std::size_t pad = out.back();
  if (pad == 0 || pad > block_bytes) fail(WireErrc::bad_padding, "pad length " + std::to_string(pad) + " out of range");
  if (!std::all_of(out.end() - static_cast<std::ptrdiff_t>(pad), out.end(),
                   [pad](std::uint8_t b) { return b == pad; })) {
    fail(WireErrc::bad_padding, "pad bytes are inconsistent");
  }
  out.resize(out.size() - pad);
  return out;
}

std::size_t expected_payload_size(MessageType type, std::size_t dim) {
  switch (type) {
    case MessageType::context_params: return 1;
    case MessageType::cipher_block: return 2 * dim * dim;
    default: return dim * dim;
  }
}

std::vector<std::uint8_t> frame(const WireMessage& msg) {
  check_payload(msg);
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + msg.payload.size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(static_cast<std::uint8_t>(msg.type));
  out.push_back(msg.dim);
  const auto n = static_cast<std::uint32_t>(msg.payload.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(n >> shift));
  out.insert(out.end(), msg.payload.begin(), msg.payload.end());
  return out;
}

ParsedFrame parse_prefix(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    // Report a wrong magic even on short input when enough of it is visible.
    for (std::size_t i = 0; i < std::min<std::size_t>(bytes.size(), 3); ++i) {
      if (bytes[i] != kMagic[i]) fail(WireErrc::bad_magic, "bad magic");
    }
    fail(WireErrc::truncated, "frame shorter than its 10-byte header");
  }
  if (!std::equal(bytes.begin(), bytes.begin() + 3, std::begin(kMagic))) fail(WireErrc::bad_magic, "bad magic");
  if (bytes[3] != kMagic[3]) {
    if (bytes[3] >= '0' && bytes[3] <= '9') {
      fail(WireErrc::unsupported_version, std::string("unsupported format version ") + static_cast<char>(bytes[3]));
    }
    fail(WireErrc::bad_magic, "bad magic");
  }
  const std::uint8_t type = bytes[4];
  if (!known_type(type)) fail(WireErrc::unknown_type, "unknown message type " + std::to_string(type));
  const std::uint8_t dim = bytes[5];
  if (!dim_ok(dim)) fail(WireErrc::bad_dimension, "dimension " + std::to_string(dim) + " outside [2, 16]");

  std::uint32_t declared = 0;
  for (std::size_t i = 6; i < kHeaderSize; ++i) declared = (declared << 8U) | bytes[i];
  const std::size_t want = expected_payload_size(static_cast<MessageType>(type), dim);
  if (declared != want) {
    fail(WireErrc::bad_payload_length,
         "declared payload " + std::to_string(declared) + " bytes, expected " + std::to_string(want));
  }
  if (bytes.size() - kHeaderSize < declared) {
    fail(WireErrc::truncated, "frame declares " + std::to_string(declared) + " payload bytes but only " +
                                  std::to_string(bytes.size() - kHeaderSize) + " follow");
  }

  WireMessage msg{static_cast<MessageType>(type), dim,
                  std::vector<std::uint8_t>(bytes.begin() + kHeaderSize, bytes.begin() + kHeaderSize + declared)};
  check_payload(msg);
  return {std::move(msg), kHeaderSize + declared};
}

WireMessage parse(std::span<const std::uint8_t> bytes) {
  ParsedFrame f = parse_prefix(bytes);
  if (f.consumed != bytes.size()) {
    fail(WireErrc::trailing_bytes, std::to_string(bytes.size() - f.consumed) + " bytes after the frame");
  }
  return std::move(f.message);
}

WireMessage matrix_message(MessageType type, const Matrix& a) {
  if (type == MessageType::cipher_block || type == MessageType::context_params) {
    throw ContractViolation("matrix_message: type does not carry a single matrix");
  }
  return {type, static_cast<std::uint8_t>(a.dim()), matrix_to_bytes(a)};
}

WireMessage cipher_message(const CipherBlock& block) {
  require_same_shape(block.y1, block.y2);
  auto payload = matrix_to_bytes(block.y1);
  const auto second = matrix_to_bytes(block.y2);
  payload.insert(payload.end(), second.begin(), second.end());
  return {MessageType::cipher_block, static_cast<std::uint8_t>(block.y1.dim()), std::move(payload)};
}

WireMessage context_message(std::size_t dim, std::uint8_t p) {
  return {MessageType::context_params, static_cast<std::uint8_t>(dim), {p}};
}

Matrix message_matrix(const WireMessage& msg) {
  check_payload(msg);
  if (msg.type == MessageType::cipher_block || msg.type == MessageType::context_params) {
    fail(WireErrc::unknown_type, "message does not carry a single matrix");
  }
  return bytes_to_matrix(msg.payload, msg.dim);
}

CipherBlock message_cipher(const WireMessage& msg) {
  check_payload(msg);
  if (msg.type != MessageType::cipher_block) fail(WireErrc::unknown_type, "message is not a cipher block");
  const std::size_t n = std::size_t{msg.dim} * msg.dim;
  const std::span<const std::uint8_t> all(msg.payload);
  return {bytes_to_matrix(all.first(n), msg.dim), bytes_to_matrix(all.subspan(n), msg.dim)};
}

}  // namespace gelgamal::wire
