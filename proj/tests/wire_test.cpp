#include <gtest/gtest.h>

#include <algorithm>

#include "gelgamal/protocol.hpp"
#include "gelgamal/random.hpp"
#include "gelgamal/wire.hpp"
#include "support/fixtures.hpp"

using gelgamal::Matrix;
using gelgamal::RandomSource;
using namespace gelgamal::wire;

namespace {

std::vector<std::uint8_t> random_bytes(RandomSource& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng.uniform_below(256));
  return v;
}

template <typename F>
WireErrc error_of(F&& f) {
  try {
    f();
  } catch (const WireError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a WireError";
  return WireErrc::bad_state;
}

}  // namespace

TEST(MatrixBytes, IdentityLayout) {
  const auto bytes = matrix_to_bytes(Matrix::identity(8));
  ASSERT_EQ(bytes.size(), 64U);
  for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(bytes[i], i % 9 == 0 ? 1 : 0) << i;
}

TEST(MatrixBytes, RoundTrip) {
  auto rng = RandomSource::deterministic(1);
  for (std::size_t d : {2U, 8U, 16U}) {
    const Matrix x = gelgamal::random_matrix(rng, d);
    EXPECT_EQ(bytes_to_matrix(matrix_to_bytes(x), d), x);
  }
}

TEST(MatrixBytes, RejectsOutOfRangeAndWrongLength) {
  std::vector<std::uint8_t> v(64, 0);
  v[17] = 251;
  EXPECT_EQ(error_of([&] { bytes_to_matrix(v, 8); }), WireErrc::byte_out_of_range);
  v[17] = 0;
  v.pop_back();
  EXPECT_EQ(error_of([&] { bytes_to_matrix(v, 8); }), WireErrc::bad_payload_length);
  EXPECT_EQ(error_of([&] { bytes_to_matrix(std::vector<std::uint8_t>{0, 1, 2, 5}, 2, 5); }), WireErrc::byte_out_of_range);
}

TEST(Plaintext, BlockSizes) {
  EXPECT_EQ(plaintext_bytes_per_block(8), 56U);
  EXPECT_EQ(plaintext_bytes_per_block(16), 224U);
  EXPECT_EQ(error_of([] { plaintext_bytes_per_block(3); }), WireErrc::bad_dimension);
}

TEST(Plaintext, EmptyInputIsOnePaddingBlock) {
  const auto blocks = encode_plaintext({}, 8);
  ASSERT_EQ(blocks.size(), 1U);
  EXPECT_TRUE(decode_plaintext(blocks).empty());
}

TEST(Plaintext, FullBlockAddsPaddingBlock) {
  std::vector<std::uint8_t> data(56, 0xAB);
  EXPECT_EQ(encode_plaintext(data, 8).size(), 2U);
  data.pop_back();
  EXPECT_EQ(encode_plaintext(data, 8).size(), 1U);
}

TEST(Plaintext, KnownDigits) {
  // First 7-byte chunk 00..00 01 -> digits 0,...,0,1; then 2^56 - 1 -> base-251 expansion.
  std::vector<std::uint8_t> data{0, 0, 0, 0, 0, 0, 1, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF};
  const auto blocks = encode_plaintext(data, 8);
  ASSERT_EQ(blocks.size(), 1U);
  const auto e = blocks[0].entries();
  for (int i = 0; i < 7; ++i) EXPECT_EQ(e[i], 0);
  EXPECT_EQ(e[7], 1);
  unsigned long long v = (1ULL << 56) - 1;
  for (int i = 15; i >= 8; --i) {
    EXPECT_EQ(e[i], v % 251);
    v /= 251;
  }
  // Padding: 42 bytes of value 42, so the third chunk is 42 repeated.
  unsigned long long pad = 0;
  for (int i = 0; i < 7; ++i) pad = pad * 256 + 42;
  for (int i = 23; i >= 16; --i) {
    EXPECT_EQ(e[i], pad % 251);
    pad /= 251;
  }
}

TEST(Plaintext, RoundTripRandomLengths) {
  auto rng = RandomSource::deterministic(2);
  for (int t = 0; t < 1000; ++t) {
    const auto n = rng.uniform_below(10001);
    const auto data = random_bytes(rng, n);
    const std::size_t d = t % 5 == 0 ? 16 : 8;
    const auto blocks = encode_plaintext(data, d);
    EXPECT_EQ(blocks.size(), n / plaintext_bytes_per_block(d) + 1);
    EXPECT_EQ(decode_plaintext(blocks), data);
  }
}

TEST(Plaintext, CorruptDigitsDetected) {
  auto rng = RandomSource::deterministic(3);
  int detected = 0;
  constexpr int kTrials = 2000;
  for (int t = 0; t < kTrials; ++t) {
    auto blocks = encode_plaintext(random_bytes(rng, 20), 8);
    Matrix& b = blocks.back();
    for (std::size_t i = 0; i < 64; ++i) b.raw(i / 8, i % 8) = static_cast<std::uint8_t>(rng.uniform_below(251));
    try {
      decode_plaintext(blocks);
    } catch (const WireError& e) {
      EXPECT_TRUE(e.code() == WireErrc::corrupt_block || e.code() == WireErrc::bad_padding);
      ++detected;
    }
  }
  EXPECT_GT(detected, kTrials * 99 / 100);
}

TEST(Plaintext, BadPaddingCodes) {
  auto blocks = encode_plaintext(std::vector<std::uint8_t>(10, 7), 8);
  // Rewrite the last chunk so the final pad byte reads 0.
  Matrix& b = blocks[0];
  for (std::size_t i = 56; i < 64; ++i) b.raw(i / 8, i % 8) = 0;
  EXPECT_EQ(error_of([&] { decode_plaintext(blocks); }), WireErrc::bad_padding);
  EXPECT_EQ(error_of([] { decode_plaintext({}); }), WireErrc::bad_padding);
}

TEST(Plaintext, ExpansionRatio) {
  auto rng = RandomSource::deterministic(4);
  const auto data = random_bytes(rng, 56 * 10 - 1);
  const auto blocks = encode_plaintext(data, 8);
  EXPECT_EQ(blocks.size(), 10U);
  std::size_t cipher_payload = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) cipher_payload += 2 * blocks[i].entries().size();
  EXPECT_EQ(cipher_payload, 128U * 10);
}

TEST(Frame, RoundTripAllTypes) {
  auto rng = RandomSource::deterministic(5);
  for (std::size_t d : {2U, 8U, 16U}) {
    for (auto t : {MessageType::basis_init, MessageType::generator_init, MessageType::token_initial,
                   MessageType::session_open_token, MessageType::session_ack_token}) {
      const auto msg = matrix_message(t, gelgamal::random_matrix(rng, d));
      EXPECT_EQ(parse(frame(msg)), msg);
      EXPECT_EQ(message_matrix(msg), bytes_to_matrix(msg.payload, d));
    }
    const gelgamal::CipherBlock c{gelgamal::random_matrix(rng, d), gelgamal::random_matrix(rng, d)};
    const auto cm = cipher_message(c);
    EXPECT_EQ(parse(frame(cm)), cm);
    EXPECT_EQ(message_cipher(cm), c);
    const auto ctx = context_message(d);
    EXPECT_EQ(parse(frame(ctx)), ctx);
  }
}

TEST(Frame, HeaderLayout) {
  const auto bytes = frame(matrix_message(MessageType::token_initial, Matrix::identity(2)));
  const std::vector<std::uint8_t> expected{'G', 'E', 'G', '1', 0x03, 0x02, 0, 0, 0, 4, 1, 0, 0, 1};
  EXPECT_EQ(bytes, expected);
}

TEST(Frame, DistinctErrors) {
  const auto good = frame(matrix_message(MessageType::basis_init, Matrix::identity(2)));
  auto v = good;
  v[3] = '2';
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::unsupported_version);
  v = good;
  v[0] = 'X';
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::bad_magic);
  v = good;
  v[4] = 0x09;
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::unknown_type);
  v = good;
  v[5] = 0;
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::bad_dimension);
  v = good;
  v[9] = 5;
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::bad_payload_length);
  v = good;
  v.pop_back();
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::truncated);
  v = good;
  v.push_back(0);
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::trailing_bytes);
  v = good;
  v[11] = 251;
  EXPECT_EQ(error_of([&] { parse(v); }), WireErrc::byte_out_of_range);
  EXPECT_EQ(error_of([&] { parse(std::vector<std::uint8_t>{}); }), WireErrc::truncated);
  EXPECT_EQ(error_of([&] { parse(std::vector<std::uint8_t>{'G', 'X'}); }), WireErrc::bad_magic);
}

TEST(Frame, PrefixParsingWalksAStream) {
  auto rng = RandomSource::deterministic(6);
  std::vector<std::uint8_t> stream = frame(context_message(8));
  std::vector<gelgamal::CipherBlock> blocks;
  for (int i = 0; i < 5; ++i) {
    blocks.push_back({gelgamal::random_matrix(rng, 8), gelgamal::random_matrix(rng, 8)});
    const auto f = frame(cipher_message(blocks.back()));
    stream.insert(stream.end(), f.begin(), f.end());
  }
  std::span<const std::uint8_t> rest(stream);
  auto head = parse_prefix(rest);
  EXPECT_EQ(head.message.type, MessageType::context_params);
  rest = rest.subspan(head.consumed);
  for (const auto& b : blocks) {
    auto f = parse_prefix(rest);
    EXPECT_EQ(message_cipher(f.message), b);
    rest = rest.subspan(f.consumed);
  }
  EXPECT_TRUE(rest.empty());
}

TEST(Frame, FrameValidatesBeforeWriting) {
  WireMessage bad{MessageType::basis_init, 2, {1, 2, 3}};
  EXPECT_EQ(error_of([&] { frame(bad); }), WireErrc::bad_payload_length);
  bad.payload = {1, 2, 3, 255};
  EXPECT_EQ(error_of([&] { frame(bad); }), WireErrc::byte_out_of_range);
}

TEST(Frame, FuzzNeverCrashes) {
  auto rng = RandomSource::deterministic(7);
  const auto seed_frame = frame(matrix_message(MessageType::session_ack_token, Matrix::identity(4)));
  int ok = 0;
  for (int t = 0; t < 100000; ++t) {
    std::vector<std::uint8_t> v;
    if (t % 2 == 0) {
      v = random_bytes(rng, rng.uniform_below(80));
    } else {
      // Mutate a valid frame so the deeper checks get exercised.
      v = seed_frame;
      const auto flips = 1 + rng.uniform_below(3);
      for (std::uint64_t i = 0; i < flips; ++i) v[rng.uniform_below(v.size())] = static_cast<std::uint8_t>(rng.uniform_below(256));
      v.resize(rng.uniform_below(v.size() + 4), 0);
    }
    try {
      const auto m = parse(v);
      EXPECT_EQ(frame(m), v);
      ++ok;
    } catch (const WireError&) {
    }
  }
  EXPECT_GT(ok, 0);
}

TEST(Fixtures, ShippedVectorsParseBitExactly) {
  const auto vectors = fixtures::load_wire_vectors(GELGAMAL_FIXTURE_DIR);
  ASSERT_GE(vectors.size(), 20U);
  for (const auto& v : vectors) {
    SCOPED_TRACE(v.name);
    if (v.expect_ok) {
      const auto m = parse(v.bytes);
      EXPECT_EQ(static_cast<int>(m.type), v.type);
      EXPECT_EQ(m.dim, v.dim);
      EXPECT_TRUE(std::equal(m.payload.begin(), m.payload.end(), v.bytes.begin() + kHeaderSize));
      EXPECT_EQ(frame(m), v.bytes);
    } else {
      EXPECT_EQ(to_string(error_of([&] { parse(v.bytes); })), v.expect_error);
    }
  }
}
