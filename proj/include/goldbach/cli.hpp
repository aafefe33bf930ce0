#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "goldbach/report.hpp"

namespace goldbach {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;
}  // namespace exit_code

struct RunConfig {
  std::uint64_t limit = 10'000'000;
  std::uint64_t m_min = 2;
  std::uint64_t m_max = 200;
  std::optional<std::uint64_t> stage1_bound;  // unset: adaptive default
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Entry point of the goldbach-ap tool. argv[0] is the program name.
/// Returns one of the exit_code values.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goldbach
