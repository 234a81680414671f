#include "exante/util.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace exante {

std::uint64_t stable_hash64(std::string_view data, std::uint64_t state) {
  for (unsigned char c : data) {
    state ^= c;
    state *= 1099511628211ULL;
  }
  return state;
}

std::uint64_t stable_hash64(std::uint64_t seed,
                            std::initializer_list<std::string_view> parts) {
  std::uint64_t state = 14695981039346656037ULL;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "seed:%llu", static_cast<unsigned long long>(seed));
  state = stable_hash64(buf, state);
  for (std::string_view part : parts) {
    std::snprintf(buf, sizeof(buf), "|%zu:", part.size());
    state = stable_hash64(buf, state);
    state = stable_hash64(part, state);
  }
  return state;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out.push_back(' ');
    in_ws = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string format_pct(double pct) {
  // llround is half-away-from-zero; rates are non-negative, so half-up.
  long long cents = std::llround(pct * 100.0);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", cents / 100, cents % 100);
  return buf;
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace exante
