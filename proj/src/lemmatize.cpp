#include "realizer/lemmatize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "realizer/session.hpp"

namespace realizer {

namespace {

void push_form(std::vector<std::pair<std::string, FeatureBundle>>& out,
               const DeclineResult& r, const FeatureBundle& f) {
  if (!r.error && !r.form.empty()) out.emplace_back(r.form, f);
}

std::string feature_expression(const LemmaCandidate& c) {
  std::string e = std::string(pos_code(c.pos)) + "(\"" + c.lemma + "\")";
  const FeatureBundle& f = c.features;
  if (c.pos == Pos::V) {
    if (f.t && *f.t != "p") e += ".t(\"" + *f.t + "\")";
    if (f.pe != 3 && (!f.t || (*f.t != "b" && *f.t != "pp" && *f.t != "pr")))
      e += ".pe(" + std::to_string(f.pe) + ")";
    if (f.n == Number::p) e += ".n(\"p\")";
    return e;
  }
  if (f.n == Number::p) e += ".n(\"p\")";
  if (f.g == Gender::f) e += ".g(\"f\")";
  if (f.c) e += ".c(\"" + std::string(case_code(*f.c)) + "\")";
  if (f.degree) e += ".f(\"" + *f.degree + "\")";
  return e;
}

}  // namespace

std::vector<std::pair<std::string, FeatureBundle>> all_forms(const LexiconEntry& entry) {
  std::vector<std::pair<std::string, FeatureBundle>> out;
  switch (entry.pos) {
    case Pos::N: {
      for (Number n : {Number::s, Number::p}) {
        FeatureBundle f;
        f.n = n;
        f.g = entry.inherent_gender;
        push_form(out, decline(entry, f), f);
      }
      break;
    }
    case Pos::A:
    case Pos::D: {
      for (Gender g : {Gender::m, Gender::f}) {
        for (Number n : {Number::s, Number::p}) {
          FeatureBundle f;
          f.g = g;
          f.n = n;
          push_form(out, decline(entry, f), f);
        }
      }
      if (entry.pos == Pos::A) {
        for (const char* d : {"co", "su"}) {
          FeatureBundle f;
          f.degree = d;
          CompareResult r = compare(entry, d);
          if (!r.periphrastic && r.form != entry.lemma) out.emplace_back(r.form, f);
        }
      }
      break;
    }
    case Pos::Adv: {
      FeatureBundle f;
      push_form(out, decline(entry, f), f);
      break;
    }
    case Pos::Pro: {
      if (!entry.declension) break;
      for (const auto& [key, suffix] : entry.declension->forms) {
        // key is case:pe:n:g
        FeatureBundle f;
        auto c1 = key.find(':');
        if (c1 == std::string::npos) {
          push_form(out, decline(entry, f), f);
          continue;
        }
        auto c2 = key.find(':', c1 + 1);
        auto c3 = key.find(':', c2 + 1);
        if (c2 == std::string::npos || c3 == std::string::npos) continue;
        f.c = case_from_code(key.substr(0, c1));
        f.pe = key[c1 + 1] - '0';
        f.n = number_from_code(key.substr(c2 + 1, c3 - c2 - 1)).value_or(Number::s);
        f.g = gender_from_code(key.substr(c3 + 1)).value_or(Gender::x);
        DeclineResult r = decline(entry, f);
        push_form(out, r, f);
      }
      break;
    }
    case Pos::P:
    case Pos::C: {
      FeatureBundle f;
      out.emplace_back(entry.lemma, f);
      break;
    }
    case Pos::V: {
      static const char* simple[] = {"p", "ps", "i", "f", "c", "s", "si", "ip"};
      for (const char* t : simple) {
        if (!entry.conjugation || !entry.conjugation->has_tense(t)) {
          // irregular-only rows still count
          bool has_irregular = false;
          for (const auto& [k, v] : entry.irregular)
            if (k == t || k.rfind(std::string(t) + ":", 0) == 0) has_irregular = true;
          if (!has_irregular) continue;
        }
        for (int pe = 1; pe <= 3; ++pe) {
          for (Number n : {Number::s, Number::p}) {
            FeatureBundle f;
            f.t = t;
            f.pe = pe;
            f.n = n;
            ConjugateResult r = conjugate(entry, f);
            if (!r.error && r.forms.size() == 1 && !r.forms[0].empty())
              out.emplace_back(r.forms[0], f);
          }
        }
      }
      for (const char* t : {"b", "pr"}) {
        FeatureBundle f;
        f.t = t;
        ConjugateResult r = conjugate(entry, f);
        if (!r.error && r.forms.size() == 1) out.emplace_back(r.forms[0], f);
      }
      // participles, with French agreement
      for (Gender g : {Gender::m, Gender::f}) {
        for (Number n : {Number::s, Number::p}) {
          FeatureBundle f;
          f.t = "pp";
          f.g = g;
          f.n = n;
          ConjugateResult r = conjugate(entry, f, ParticipleAgreement{g, n});
          if (!r.error && r.forms.size() == 1) out.emplace_back(r.forms[0], f);
          if (entry.language == Lang::en) break;
        }
        if (entry.language == Lang::en) break;
      }
      break;
    }
    default:
      break;
  }
  // dedupe identical (form, feature-key) pairs produced by gender syncretism
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Reverse index form -> candidates, built once per lexicon.
struct FormIndex {
  std::unordered_map<std::string, std::vector<LemmaCandidate>> forms;
};

const FormIndex& form_index(const Lexicon& lexicon) {
  static std::mutex mutex;
  static std::map<const Lexicon*, FormIndex> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(&lexicon);
  if (it != cache.end()) return it->second;
  FormIndex& index = cache[&lexicon];
  lexicon.for_each([&](const LexiconEntry& entry) {
    if (!is_word_pos(entry.pos)) return;
    for (const auto& [form, features] : all_forms(entry)) {
      LemmaCandidate c;
      c.lemma = entry.lemma;
      c.pos = entry.pos;
      c.features = features;
      c.expression = feature_expression(c);
      auto& bucket = index.forms[form];
      const bool duplicate =
          std::any_of(bucket.begin(), bucket.end(), [&](const LemmaCandidate& other) {
            return other.lemma == c.lemma && other.pos == c.pos &&
                   other.expression == c.expression;
          });
      if (!duplicate) bucket.push_back(std::move(c));
    }
  });
  return index;
}

}  // namespace

std::vector<LemmaCandidate> lemmatize(const std::string& form, Lang language) {
  const Lexicon& lexicon = Session::current().lexicon(language);
  const FormIndex& index = form_index(lexicon);
  auto it = index.forms.find(form);
  std::vector<LemmaCandidate> out = it == index.forms.end()
                                        ? std::vector<LemmaCandidate>{}
                                        : it->second;
  std::sort(out.begin(), out.end(), [](const LemmaCandidate& a, const LemmaCandidate& b) {
    if (a.pos != b.pos) return std::string(pos_code(a.pos)) < pos_code(b.pos);
    return a.lemma < b.lemma;
  });
  return out;
}

}  // namespace realizer
