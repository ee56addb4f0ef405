#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gelgamal/protocol.hpp"

namespace gelgamal::wire {

/// Binary encoding of one party's EntityState, for demo and file-crypto
/// flows only. It holds the private diagonal in clear.
///
///   "GEG1" 0x80 role phase d p
///   P (d*d) G (d*d)
///   flags (bit0 own token, bit1 peer token) [own token d*d] [peer token d*d]
///   "PRIV" K (d*d) m n k1 k2 has_diag [diag d]
std::vector<std::uint8_t> serialize_state(const EntityState& state);

/// Throws WireError (bad_state and friends) on malformed or inconsistent input.
EntityState parse_state(std::span<const std::uint8_t> bytes);

void save_state(const std::filesystem::path& path, const EntityState& state);
EntityState load_state(const std::filesystem::path& path);

}  // namespace gelgamal::wire
