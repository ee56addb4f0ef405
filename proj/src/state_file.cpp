#include "gelgamal/state_file.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include "gelgamal/wire.hpp"

namespace gelgamal::wire {

namespace {

constexpr std::uint8_t kStateKind = 0x80;
constexpr std::uint8_t kPrivateMarker[4] = {'P', 'R', 'I', 'V'};

[[noreturn]] void bad_state(const std::string& what) { throw WireError(WireErrc::bad_state, what); }

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::span<const std::uint8_t> take(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw WireError(WireErrc::truncated, "state file ends early");
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint8_t byte() { return take(1)[0]; }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_matrix(std::vector<std::uint8_t>& out, const Matrix& m) {
  const auto e = m.entries();
  out.insert(out.end(), e.begin(), e.end());
}

FieldElement nonzero_scalar(std::uint8_t v, std::uint8_t p, const char* name) {
  if (v == 0 || v >= p) bad_state(std::string(name) + " out of range");
  return FieldElement::from_canonical(v, p);
}

}  // namespace

std::vector<std::uint8_t> serialize_state(const EntityState& state) {
  const EntitySnapshot s = state.snapshot();
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kStateKind);
  out.push_back(static_cast<std::uint8_t>(s.role));
  out.push_back(static_cast<std::uint8_t>(s.phase));
  out.push_back(static_cast<std::uint8_t>(state.dim()));
  out.push_back(state.modulus());
  put_matrix(out, s.basis);
  put_matrix(out, s.generator);
  out.push_back(static_cast<std::uint8_t>((s.own_token ? 1U : 0U) | (s.peer_token ? 2U : 0U)));
  if (s.own_token) put_matrix(out, *s.own_token);
  if (s.peer_token) put_matrix(out, *s.peer_token);

  out.insert(out.end(), std::begin(kPrivateMarker), std::end(kPrivateMarker));
  put_matrix(out, s.key);
  out.push_back(s.exponents.m.value());
  out.push_back(s.exponents.n.value());
  out.push_back(s.k1.value());
  out.push_back(s.k2.value());
  out.push_back(s.diagonal ? 1 : 0);
  if (s.diagonal) {
    for (auto l : s.diagonal->lambdas()) out.push_back(l.value());
  }
  return out;
}

EntityState parse_state(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  const auto magic = in.take(4);
  if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic))) {
    throw WireError(WireErrc::bad_magic, "not a GEG1 state file");
  }
  if (in.byte() != kStateKind) bad_state("record is not an entity state");
  const std::uint8_t role = in.byte();
  const std::uint8_t phase = in.byte();
  if (role > 1) bad_state("unknown role");
  if (phase > 2) bad_state("unknown phase");
  const std::uint8_t dim = in.byte();
  const std::uint8_t p = in.byte();
  if (!is_byte_prime(p)) throw WireError(WireErrc::unsupported_modulus, "state modulus is not prime");
  const std::size_t n = std::size_t{dim} * dim;
  auto matrix = [&] { return bytes_to_matrix(in.take(n), dim, p); };

  Matrix basis = matrix();
  Matrix generator = matrix();
  const std::uint8_t flags = in.byte();
  if (flags > 3) bad_state("unknown token flags");
  std::optional<Matrix> own_token, peer_token;
  if (flags & 1U) own_token = matrix();
  if (flags & 2U) peer_token = matrix();

  const auto marker = in.take(4);
  if (!std::equal(marker.begin(), marker.end(), std::begin(kPrivateMarker))) bad_state("missing private marker");
  Matrix key = matrix();
  const SessionExponents exps{nonzero_scalar(in.byte(), p, "m"), nonzero_scalar(in.byte(), p, "n")};
  const FieldElement k1 = nonzero_scalar(in.byte(), p, "k1");
  const FieldElement k2 = nonzero_scalar(in.byte(), p, "k2");
  const std::uint8_t has_diag = in.byte();
  if (has_diag > 1) bad_state("bad diagonal flag");
  std::optional<DiagonalSpec> diagonal;
  if (has_diag) {
    std::vector<FieldElement> lambdas;
    for (std::uint8_t v : in.take(dim)) lambdas.push_back(nonzero_scalar(v, p, "eigenvalue"));
    try {
      diagonal.emplace(std::move(lambdas));
    } catch (const ContractViolation& e) {
      bad_state(e.what());
    }
  }
  if (!in.done()) throw WireError(WireErrc::trailing_bytes, "bytes after the state record");

  try {
    return EntityState::restore(EntitySnapshot{static_cast<Role>(role), static_cast<Phase>(phase), basis, generator,
                                               key, exps, diagonal, k1, k2, own_token, peer_token});
  } catch (const WireError&) {
    throw;
  } catch (const Error& e) {
    bad_state(e.what());
  }
}

void save_state(const std::filesystem::path& path, const EntityState& state) {
  const auto bytes = serialize_state(state);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

EntityState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open state file " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_state(bytes);
}

}  // namespace gelgamal::wire
