#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef SHIPCAP_SOURCE_DIR
#define SHIPCAP_SOURCE_DIR "."
#endif

namespace testsupport {

inline std::filesystem::path source_dir() { return SHIPCAP_SOURCE_DIR; }
inline std::filesystem::path config_dir() { return source_dir() / "config"; }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// relative difference against a non-zero expectation
inline double rel(double actual, double expected) { return std::abs(actual - expected) / std::abs(expected); }

}  // namespace testsupport
