#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace irumap {

// Whole-file read; IoError when missing or unreadable.
std::string read_text_file(const std::filesystem::path& path);

// Write-to-temp + rename so no partial artifact can survive a failure.
void atomic_write_file(const std::filesystem::path& path, std::string_view bytes);

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

// Strict full-consume numeric parsing; returns false on any leftover bytes.
bool parse_double(std::string_view s, double& out);
bool parse_index(std::string_view s, std::size_t& out);

}  // namespace irumap
