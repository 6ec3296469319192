// Small UTF-8 helpers shared by morphology and detokenization. Only the
// characters that actually occur in French and English word forms are
// covered.
#ifndef REALIZER_TEXT_UTIL_HPP
#define REALIZER_TEXT_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace realizer::textutil {

// Decodes the codepoint starting at `pos`; advances `pos` past it.
inline char32_t decode(std::string_view s, std::size_t& pos) {
  unsigned char c = s[pos];
  if (c < 0x80) { pos += 1; return c; }
  if ((c >> 5) == 0x6 && pos + 1 < s.size()) {
    char32_t cp = ((c & 0x1F) << 6) | (s[pos + 1] & 0x3F);
    pos += 2;
    return cp;
  }
  if ((c >> 4) == 0xE && pos + 2 < s.size()) {
    char32_t cp = ((c & 0x0F) << 12) | ((s[pos + 1] & 0x3F) << 6) | (s[pos + 2] & 0x3F);
    pos += 3;
    return cp;
  }
  pos += 1;  // lone byte, pass through
  return c;
}

inline std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

inline char32_t first_codepoint(std::string_view s) {
  if (s.empty()) return 0;
  std::size_t pos = 0;
  return decode(s, pos);
}

// Lowercasing for ASCII letters plus the accented letters used in the two
// lexica.
inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if ((cp >= 0xC0 && cp <= 0xDE) && cp != 0xD7) return cp + 32;  // À..Þ
  if (cp == 0x152) return 0x153;                                 // Œ
  return cp;
}

inline char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  if ((cp >= 0xE0 && cp <= 0xFE) && cp != 0xF7) return cp - 32;  // à..þ
  if (cp == 0x153) return 0x152;                                 // œ
  return cp;
}

inline bool is_letter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
         (cp >= 0xC0 && cp <= 0x17F && cp != 0xD7 && cp != 0xF7);
}

// Uppercases the first letter of `s` in place; returns false when there
// is no letter to uppercase.
inline bool capitalize_first(std::string& s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t start = pos;
    char32_t cp = decode(s, pos);
    if (is_letter(cp)) {
      std::string upper = encode(to_upper(cp));
      s.replace(start, pos - start, upper);
      return true;
    }
  }
  return false;
}

inline std::string lower_copy(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) out += encode(to_lower(decode(s, pos)));
  return out;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace realizer::textutil

#endif  // REALIZER_TEXT_UTIL_HPP
