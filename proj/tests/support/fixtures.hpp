#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixtures {

struct WireVector {
  std::string name;
  std::vector<std::uint8_t> bytes;
  bool expect_ok = false;
  std::string expect_error;  // WireErrc name when !expect_ok
  std::uint8_t type = 0;
  std::uint8_t dim = 0;
};

inline WireVector load_wire_vector(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  WireVector v;
  v.name = path.stem().string();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "expect:") {
      std::string what;
      ls >> what;
      v.expect_ok = what == "ok";
      if (!v.expect_ok) ls >> v.expect_error;
    } else if (head == "type:" || head == "dim:") {
      std::string hex;
      ls >> hex;
      (head == "type:" ? v.type : v.dim) = static_cast<std::uint8_t>(std::stoul(hex, nullptr, 16));
    } else {
      std::istringstream bs(line);
      std::string byte;
      while (bs >> byte) v.bytes.push_back(static_cast<std::uint8_t>(std::stoul(byte, nullptr, 16)));
    }
  }
  return v;
}

inline std::vector<WireVector> load_wire_vectors(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".hex") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<WireVector> out;
  for (const auto& p : paths) out.push_back(load_wire_vector(p));
  return out;
}

}  // namespace fixtures
