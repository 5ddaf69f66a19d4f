#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gambitlab {

// FNV-1a 64-bit, used for content checksums.
std::uint64_t fnv1a64(const std::string& data);

std::string to_hex16(std::uint64_t v);  // zero-padded lowercase

std::string trim(const std::string& s);
std::vector<std::string> split_ws(const std::string& s);
std::vector<std::string> split_char(const std::string& s, char sep);

bool starts_with(const std::string& s, const std::string& prefix);

// Reads a whole file; throws gambitlab::Error(kInternalError) when unreadable.
std::string read_file(const std::string& path);

// Writes via a sibling temp file + rename so readers never observe a torn file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace gambitlab
