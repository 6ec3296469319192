// A Session owns the frozen language resources (lexicon + rules for each
// language), the ambient current-language used by the constituent
// constructors, the seeded random source and the warning sink.
//
// Constructing a Session makes it the active one for the current thread;
// destruction restores the previous session (RAII stack). Trees built under
// a session must be realized under it.
#ifndef REALIZER_SESSION_HPP
#define REALIZER_SESSION_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "realizer/lang.hpp"
#include "realizer/lexicon.hpp"

namespace realizer {

struct Warning {
  std::string code;
  std::vector<std::string> args;
  Lang language = Lang::en;
  std::string message;  // realized text (self-hosted where possible)
};

struct LanguageResources {
  std::shared_ptr<const Lexicon> lexicon;
  std::shared_ptr<const RuleTables> rules;
};

class Session {
 public:
  // Loads lexicon-<lang>.json and rules-<lang>.json for both languages
  // from `data_dir`.
  explicit Session(const std::string& data_dir, std::uint64_t seed = 0);
  Session(LanguageResources en, LanguageResources fr, std::uint64_t seed = 0);
  ~Session();

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  static Session& current();          // throws std::logic_error when none
  static Session* current_or_null();

  // Ambient language selection for subsequent constructions; switchable
  // as often as needed, even in the middle of a sentence.
  void use_english() { lang_ = Lang::en; }
  void use_french() { lang_ = Lang::fr; }
  void use(Lang l) { lang_ = l; }
  Lang language() const { return lang_; }

  const LanguageResources& resources(Lang l) const {
    return l == Lang::en ? en_ : fr_;
  }
  const Lexicon& lexicon(Lang l) const { return *resources(l).lexicon; }
  const RuleTables& rules(Lang l) const { return *resources(l).rules; }

  // Warning sink. warn() realizes the message through the realizer itself
  // (see warnings.cpp) unless warnings are muted.
  void warn(const std::string& code, std::vector<std::string> args, Lang language);
  void warn(const std::string& code, std::vector<std::string> args);
  std::vector<Warning> take_warnings();
  // Warnings recorded at or after `mark` (for nested realizations).
  std::size_t warning_mark() const { return warnings_.size(); }
  std::vector<Warning> take_warnings_from(std::size_t mark);
  bool has_pending_warnings() const { return !warnings_.empty(); }
  void mute_warnings(bool m) { muted_ = m; }
  bool warnings_muted() const { return muted_; }

  std::mt19937_64& rng() { return rng_; }
  void reseed(std::uint64_t seed) { rng_.seed(seed); }

  // French typography: narrow no-break space before ? ! ; : (default on).
  bool french_punct_spacing = true;
  // When false, tag annotations are ignored during realization.
  bool html_output = true;

 private:
  LanguageResources en_, fr_;
  Lang lang_ = Lang::en;
  std::vector<Warning> warnings_;
  bool muted_ = false;
  std::mt19937_64 rng_;
  Session* previous_ = nullptr;
};

// Convenience free functions mirroring the usual realizer idiom.
inline void use_english() { Session::current().use_english(); }
inline void use_french() { Session::current().use_french(); }

}  // namespace realizer

#endif  // REALIZER_SESSION_HPP
