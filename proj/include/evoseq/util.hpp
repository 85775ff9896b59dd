#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evoseq {

/// Shortest decimal form that round-trips to the same double. Used for every
/// emitted CSV/JSON number so reports can be re-read without drift.
std::string format_double(double x);

/// Fixed-precision rendering, e.g. fitness scores in prompts ("0.0018").
std::string format_fixed(double x, int decimals);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::vector<std::string> split(const std::string& text, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

/// FNV-1a over bytes; stable across platforms. Campaign ids derive from it.
std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t value);

} // namespace evoseq
