// Number formatting and spelling, number-driven agreement, date wording
// and seeded random choice among alternatives.
#ifndef REALIZER_NUMDATE_HPP
#define REALIZER_NUMDATE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "realizer/lang.hpp"
#include "realizer/lexicon.hpp"
#include "realizer/session.hpp"

namespace realizer {

struct NumberOptions {
  bool nat = false;   // spell out in letters
  bool ord = false;   // ordinal wording
  bool raw = false;   // verbatim digits, no locale separators
  std::optional<int> mprecision;  // decimal places, half-away-from-zero
};

struct DateOptions {
  // Field visibility; by default the full date and time are shown.
  bool year = true, month = true, date = true, day = true;
  bool hour = true, minute = true, second = true;
  bool nat = true;    // wording vs numeric form
  bool det = false;   // "on"/"le" determiner prefix
  std::optional<std::chrono::sys_seconds> rtime;  // relative reference
};

// Spells n in letters; French gender agreement applies to un/une and
// compounds ending in one. |n| above 1e9 falls back to digits + a warning.
std::string number_to_words(long long n, Lang language, Gender gender = Gender::m);

// English: singular iff n == 1 or n == -1. French: singular iff |n| < 2.
Number number_agreement(double n, Lang language);

std::string format_number(double n, const NumberOptions& options, Lang language,
                          Gender gender = Gender::m);

// ISO-8601 "YYYY-MM-DD" or "YYYY-MM-DDTHH:MM:SS" (no timezone handling;
// the instant formats identically on every call).
std::optional<std::chrono::sys_seconds> parse_instant(const std::string& iso);
std::string format_instant(std::chrono::sys_seconds t);  // back to ISO

std::string format_date(std::chrono::sys_seconds instant, const DateOptions& options,
                        Lang language);

// Uniform seeded choice. Alternatives may be values or generator functions
// (re-evaluated on each draw). An empty list yields T{} plus a warning.
template <typename T>
T one_of(const std::vector<T>& alternatives) {
  if (alternatives.empty()) {
    Session::current().warn("empty choice", {});
    return T{};
  }
  auto& rng = Session::current().rng();
  return alternatives[rng() % alternatives.size()];
}

template <typename T>
T one_of(const std::vector<std::function<T()>>& alternatives) {
  if (alternatives.empty()) {
    Session::current().warn("empty choice", {});
    return T{};
  }
  auto& rng = Session::current().rng();
  return alternatives[rng() % alternatives.size()]();
}

}  // namespace realizer

#endif  // REALIZER_NUMDATE_HPP
