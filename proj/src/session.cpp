#include "realizer/session.hpp"

#include <stdexcept>

#include "realizer/warnings.hpp"

namespace realizer {

namespace {
thread_local Session* g_current = nullptr;
}

Session::Session(const std::string& data_dir, std::uint64_t seed) {
  auto en_rules = load_rules_file(data_dir + "/rules-en.json", Lang::en);
  auto fr_rules = load_rules_file(data_dir + "/rules-fr.json", Lang::fr);
  en_ = {load_lexicon_file(data_dir + "/lexicon-en.json", Lang::en, en_rules), en_rules};
  fr_ = {load_lexicon_file(data_dir + "/lexicon-fr.json", Lang::fr, fr_rules), fr_rules};
  rng_.seed(seed);
  previous_ = g_current;
  g_current = this;
}

Session::Session(LanguageResources en, LanguageResources fr, std::uint64_t seed)
    : en_(std::move(en)), fr_(std::move(fr)) {
  rng_.seed(seed);
  previous_ = g_current;
  g_current = this;
}

Session::~Session() { g_current = previous_; }

Session& Session::current() {
  if (!g_current) throw std::logic_error("no active realizer session");
  return *g_current;
}

Session* Session::current_or_null() { return g_current; }

void Session::warn(const std::string& code, std::vector<std::string> args, Lang language) {
  if (muted_) return;
  Warning w;
  w.code = code;
  w.args = std::move(args);
  w.language = language;
  w.message = render_warning(code, w.args, language);
  warnings_.push_back(std::move(w));
}

void Session::warn(const std::string& code, std::vector<std::string> args) {
  warn(code, std::move(args), lang_);
}

std::vector<Warning> Session::take_warnings() {
  std::vector<Warning> out;
  out.swap(warnings_);
  return out;
}

std::vector<Warning> Session::take_warnings_from(std::size_t mark) {
  if (mark >= warnings_.size()) return {};
  std::vector<Warning> out(warnings_.begin() + mark, warnings_.end());
  warnings_.erase(warnings_.begin() + mark, warnings_.end());
  return out;
}

}  // namespace realizer
