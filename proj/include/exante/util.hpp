#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace exante {

/// FNV-1a over the bytes of `data`, optionally continuing a prior state.
/// Platform-independent, so seeded draws and splits reproduce everywhere.
std::uint64_t stable_hash64(std::string_view data,
                            std::uint64_t state = 14695981039346656037ULL);

/// Hashes a seed plus a list of string parts; parts are length-prefixed so
/// ("ab","c") and ("a","bc") never collide.
std::uint64_t stable_hash64(std::uint64_t seed,
                            std::initializer_list<std::string_view> parts);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);

/// Percentage with two decimals, ties rounded up ("76.23", "80.80").
std::string format_pct(double pct);

std::string csv_escape(std::string_view field);

}  // namespace exante
