#include "realizer/numdate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "text_util.hpp"

namespace realizer {

namespace tu = textutil;

namespace {

// ---------------------------------------------------------------------
// English wording
// ---------------------------------------------------------------------

void en_under_1000(long long n, const RuleTables& r, std::vector<std::string>& parts) {
  long long h = n / 100, rest = n % 100;
  if (h > 0) {
    parts.push_back(r.number_ones[h]);
    parts.push_back("hundred");
  }
  if (rest == 0) return;
  if (rest < 10) {
    parts.push_back(r.number_ones[rest]);
  } else if (rest < 20) {
    parts.push_back(r.number_teens[rest - 10]);
  } else {
    long long t = rest / 10, u = rest % 10;
    std::string word = r.number_tens[t - 2];
    if (u > 0) word += "-" + r.number_ones[u];
    parts.push_back(word);
  }
}

std::vector<std::string> en_words(long long n, const RuleTables& r) {
  std::vector<std::string> parts;
  if (n == 0) return {r.number_ones[0]};
  static const std::pair<long long, const char*> scales[] = {
      {1000000000LL, "billion"}, {1000000LL, "million"}, {1000LL, "thousand"}};
  for (auto [value, name] : scales) {
    if (n >= value) {
      en_under_1000(n / value, r, parts);
      parts.push_back(name);
      n %= value;
    }
  }
  if (n > 0) en_under_1000(n, r, parts);
  return parts;
}

std::string en_ordinalize(const std::string& word, const RuleTables& r) {
  // map the final component of the word to its ordinal form
  auto hyphen = word.rfind('-');
  std::string headpart = hyphen == std::string::npos ? "" : word.substr(0, hyphen + 1);
  std::string last = hyphen == std::string::npos ? word : word.substr(hyphen + 1);
  for (std::size_t i = 0; i < r.number_ones.size(); ++i)
    if (last == r.number_ones[i]) return headpart + r.ordinal_ones[i];
  for (std::size_t i = 0; i < r.number_teens.size(); ++i)
    if (last == r.number_teens[i]) return headpart + r.ordinal_teens[i];
  for (std::size_t i = 0; i < r.number_tens.size(); ++i)
    if (last == r.number_tens[i]) return headpart + r.ordinal_tens[i];
  if (last == "hundred") return headpart + "hundredth";
  if (last == "thousand") return headpart + "thousandth";
  if (last == "million") return headpart + "millionth";
  if (last == "billion") return headpart + "billionth";
  return headpart + last + "th";
}

// ---------------------------------------------------------------------
// French wording
// ---------------------------------------------------------------------

std::string fr_sep(const RuleTables& r) { return r.hyphenate_numbers ? "-" : " "; }

// 0..99, final == true when nothing follows in the whole number (for the
// plural s of quatre-vingts).
std::string fr_under_100(long long n, const RuleTables& r, Gender g, bool final_part) {
  const std::string et = r.hyphenate_numbers ? "-et-" : " et ";
  auto one = [&](long long u) {
    if (u == 1 && g == Gender::f) return std::string("une");
    return r.number_ones[u];
  };
  if (n < 10) return one(n);
  if (n < 20) return r.number_teens[n - 10];
  if (n < 70) {
    long long t = n / 10, u = n % 10;
    std::string word = r.number_tens[t - 2];
    if (u == 1) return word + et + one(1);
    if (u > 0) return word + "-" + one(u);
    return word;
  }
  if (n < 80) {
    long long u = n - 60;
    if (u == 11) return r.number_tens[4] + et + r.number_teens[1];  // soixante et onze
    return r.number_tens[4] + "-" + r.number_teens[u - 10];
  }
  // 80..99
  long long u = n - 80;
  std::string base = "quatre-vingt";
  if (u == 0) return base + (final_part ? "s" : "");
  if (u < 10) return base + "-" + one(u);
  return base + "-" + r.number_teens[u - 10];
}

std::string fr_under_1000(long long n, const RuleTables& r, Gender g, bool final_part) {
  long long h = n / 100, rest = n % 100;
  std::vector<std::string> parts;
  if (h == 1) {
    parts.push_back("cent" + std::string(rest == 0 && final_part ? "" : ""));
  } else if (h > 1) {
    parts.push_back(r.number_ones[h]);
    parts.push_back("cent" + std::string(rest == 0 && final_part ? "s" : ""));
  }
  if (rest > 0 || h == 0) parts.push_back(fr_under_100(rest, r, g, final_part));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += fr_sep(r);
    out += parts[i];
  }
  return out;
}

std::string fr_words(long long n, const RuleTables& r, Gender g) {
  if (n == 0) return r.number_ones[0];
  std::vector<std::string> parts;
  static const std::pair<long long, const char*> scales[] = {{1000000000LL, "milliard"},
                                                             {1000000LL, "million"}};
  for (auto [value, name] : scales) {
    if (n >= value) {
      long long q = n / value;
      parts.push_back(fr_under_1000(q, r, Gender::m, false));
      parts.push_back(std::string(name) + (q > 1 ? "s" : ""));
      n %= value;
    }
  }
  if (n >= 1000) {
    long long q = n / 1000;
    if (q > 1) parts.push_back(fr_under_1000(q, r, Gender::m, false));
    parts.push_back("mille");  // invariable
    n %= 1000;
  }
  if (n > 0 || parts.empty()) parts.push_back(fr_under_1000(n, r, g, true));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += fr_sep(r);
    out += parts[i];
  }
  return out;
}

std::string fr_ordinalize(std::string cardinal, Gender g, long long n) {
  if (n == 1) return g == Gender::f ? "première" : "premier";
  // transform the final word
  auto boundary = cardinal.find_last_of("- ");
  std::string head = boundary == std::string::npos ? "" : cardinal.substr(0, boundary + 1);
  std::string last = boundary == std::string::npos ? cardinal : cardinal.substr(boundary + 1);
  if (last == "un" || last == "une") last = "unième";
  else if (last == "cinq") last = "cinquième";
  else if (last == "neuf") last = "neuvième";
  else {
    if (!last.empty() && last.back() == 's') last.pop_back();  // quatre-vingts, cents
    if (!last.empty() && last.back() == 'e') last.pop_back();
    last += "ième";
  }
  return head + last;
}

std::string group_digits(const std::string& digits, const std::string& sep) {
  std::string out;
  int count = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    out.insert(out.begin(), digits[i]);
    if (++count % 3 == 0 && i > 0 && digits[i - 1] != '-') out.insert(0, sep);
  }
  return out;
}

std::string plain_digits(double n, std::optional<int> precision) {
  char buf[64];
  if (precision) {
    double p = std::pow(10.0, *precision);
    double rounded = std::round(std::fabs(n) * p) / p;  // half away from zero
    if (n < 0) rounded = -rounded;
    std::snprintf(buf, sizeof buf, "%.*f", *precision, rounded);
    return buf;
  }
  if (n == std::floor(n) && std::fabs(n) < 1e15) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(n));
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.6f", n);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string number_to_words(long long n, Lang language, Gender gender) {
  const RuleTables& r = Session::current().rules(language);
  if (std::llabs(n) > 1000000000LL) {
    Session::current().warn("bad number", {std::to_string(n)}, language);
    return plain_digits(static_cast<double>(n), std::nullopt);
  }
  std::string sign = n < 0 ? (language == Lang::en ? "minus " : "moins ") : "";
  long long v = std::llabs(n);
  if (language == Lang::en) {
    auto parts = en_words(v, r);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += " ";
      out += parts[i];
    }
    return sign + out;
  }
  return sign + fr_words(v, r, gender);
}

Number number_agreement(double n, Lang language) {
  if (language == Lang::en) return (n == 1 || n == -1) ? Number::s : Number::p;
  return std::fabs(n) < 2 ? Number::s : Number::p;
}

std::string format_number(double n, const NumberOptions& options, Lang language,
                          Gender gender) {
  const RuleTables& r = Session::current().rules(language);
  const bool integral = n == std::floor(n) && std::fabs(n) < 9e15;
  if (options.ord) {
    if (!integral || std::fabs(n) > 1e9) {
      Session::current().warn("bad number", {plain_digits(n, options.mprecision)}, language);
      return plain_digits(n, options.mprecision);
    }
    long long v = static_cast<long long>(n);
    if (language == Lang::en)
      return en_ordinalize(number_to_words(v, language, gender), r);
    return fr_ordinalize(number_to_words(v, language, gender), gender, v);
  }
  if (options.nat) {
    if (!integral || std::fabs(n) > 1e9) {
      Session::current().warn("bad number", {plain_digits(n, options.mprecision)}, language);
      return plain_digits(n, options.mprecision);
    }
    return number_to_words(static_cast<long long>(n), language, gender);
  }
  if (options.raw) return plain_digits(n, options.mprecision);

  std::string digits = plain_digits(n, options.mprecision);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string integer = digits, frac;
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    integer = digits.substr(0, dot);
    frac = digits.substr(dot + 1);
  }
  std::string out = sign + group_digits(integer, r.thousands_sep);
  if (!frac.empty()) out += r.decimal_sep + frac;
  return out;
}

std::optional<std::chrono::sys_seconds> parse_instant(const std::string& iso) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  int n = std::sscanf(iso.c_str(), "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &h, &mi, &s);
  if (n < 3) return std::nullopt;
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60) return std::nullopt;
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

std::string format_instant(std::chrono::sys_seconds t) {
  using namespace std::chrono;
  auto days = floor<std::chrono::days>(t);
  year_month_day ymd{days};
  auto tod = t - days;
  int h = static_cast<int>(duration_cast<hours>(tod).count());
  int mi = static_cast<int>(duration_cast<minutes>(tod).count() % 60);
  int s = static_cast<int>(duration_cast<seconds>(tod).count() % 60);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()), h, mi, s);
  return buf;
}

namespace {

std::string format_time(int h, int mi, int s, const DateOptions& o, Lang lang) {
  std::string out;
  if (!o.hour) return out;
  char buf[32];
  if (lang == Lang::fr && o.nat) {
    out = std::to_string(h) + " h";
    if (o.minute) {
      std::snprintf(buf, sizeof buf, " %02d", mi);
      out += buf;
      if (o.second) {
        std::snprintf(buf, sizeof buf, " min %02d s", s);
        out += buf;
      }
    }
    return out;
  }
  out = std::to_string(h);
  if (o.minute) {
    std::snprintf(buf, sizeof buf, ":%02d", mi);
    out += buf;
    if (o.second) {
      std::snprintf(buf, sizeof buf, ":%02d", s);
      out += buf;
    }
  }
  return out;
}

}  // namespace

std::string format_date(std::chrono::sys_seconds instant, const DateOptions& options,
                        Lang language) {
  using namespace std::chrono;
  const RuleTables& r = Session::current().rules(language);
  auto day_point = floor<days>(instant);
  year_month_day ymd{day_point};
  weekday wd{day_point};
  auto tod = instant - day_point;
  int hh = static_cast<int>(duration_cast<hours>(tod).count());
  int mi = static_cast<int>(duration_cast<minutes>(tod).count() % 60);
  int ss = static_cast<int>(duration_cast<seconds>(tod).count() % 60);

  std::string date_part;
  bool relative = false;
  if (options.rtime) {
    auto ref_day = floor<days>(*options.rtime);
    long long delta = (day_point - ref_day).count();
    if (delta >= -7 && delta <= 7) {
      relative = true;
      const std::string wname = r.weekday_names[wd.c_encoding()];
      if (delta == 0)
        date_part = language == Lang::en ? "today" : "aujourd'hui";
      else if (delta == 1)
        date_part = language == Lang::en ? "tomorrow" : "demain";
      else if (delta == -1)
        date_part = language == Lang::en ? "yesterday" : "hier";
      else if (delta > 1)
        date_part = language == Lang::en ? "next " + wname : wname + " prochain";
      else
        date_part = language == Lang::en ? "last " + wname : wname + " dernier";
    }
  }

  if (!relative) {
    std::vector<std::string> parts;
    if (options.nat) {
      if (language == Lang::en) {
        std::string piece;
        if (options.day) piece = r.weekday_names[wd.c_encoding()];
        if (options.month) {
          if (!piece.empty()) piece += ", ";
          piece += r.month_names[unsigned(ymd.month()) - 1];
        }
        if (options.date) {
          NumberOptions ord;
          ord.ord = true;
          if (!piece.empty()) piece += " ";
          piece += format_number(double(unsigned(ymd.day())), ord, language);
        }
        if (options.year) {
          if (!piece.empty()) piece += ", ";
          piece += std::to_string(int(ymd.year()));
        }
        date_part = piece;
        if (options.det && !date_part.empty()) date_part = "on " + date_part;
      } else {
        std::string piece;
        if (options.day) piece = r.weekday_names[wd.c_encoding()];
        if (options.date) {
          if (!piece.empty()) piece += " ";
          unsigned d = unsigned(ymd.day());
          piece += d == 1 ? "premier" : number_to_words(d, language);
        }
        if (options.month) {
          if (!piece.empty()) piece += " ";
          piece += r.month_names[unsigned(ymd.month()) - 1];
        }
        if (options.year) {
          if (!piece.empty()) piece += " ";
          piece += std::to_string(int(ymd.year()));
        }
        date_part = piece;
        if (options.det && !date_part.empty()) date_part = "le " + date_part;
      }
    } else {
      char buf[32];
      if (language == Lang::en)
        std::snprintf(buf, sizeof buf, "%u/%u/%d", unsigned(ymd.month()), unsigned(ymd.day()),
                      int(ymd.year()));
      else
        std::snprintf(buf, sizeof buf, "%02u/%02u/%d", unsigned(ymd.day()),
                      unsigned(ymd.month()), int(ymd.year()));
      // honor the field flags in numeric form too
      if (options.date || options.month || options.year) date_part = buf;
      if (!options.date && !options.month && !options.year && options.day)
        date_part = r.weekday_names[wd.c_encoding()];
    }
  }

  std::string time_part = format_time(hh, mi, ss, options, language);
  if (date_part.empty()) return time_part;
  if (time_part.empty()) return date_part;
  if (options.nat)
    return date_part + (language == Lang::en ? " at " : " à ") + time_part;
  return date_part + " " + time_part;
}

}  // namespace realizer
