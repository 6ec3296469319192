#include "realizer/warnings.hpp"

#include <map>

#include "realizer/realize.hpp"
#include "realizer/session.hpp"
#include "realizer/syntax.hpp"

namespace realizer {

namespace {

// Builders for the self-realized messages. Each returns a constituent
// specification realized by the realizer itself, in the warning language.
using Builder = Constituent (*)(const std::vector<std::string>&);

std::string arg(const std::vector<std::string>& args, std::size_t i) {
  return i < args.size() ? args[i] : std::string("?");
}

Constituent bad_parameter_en(const std::vector<std::string>& a) {
  return S(NP(D("the"), N("parameter")),
           VP(V("be").t("ps"), Q(arg(a, 0)).a(","), Adv("not"), Q(arg(a, 1))))
      .typ({.modal = "nece"});
}
Constituent bad_parameter_fr(const std::vector<std::string>& a) {
  return S(NP(D("le"), N("paramètre")),
           VP(V("être").t("c"), Q(arg(a, 0)).a(","), Adv("non"), Q(arg(a, 1))))
      .typ({.modal = "nece"});
}

Constituent not_in_lexicon_en(const std::vector<std::string>& a) {
  return S(Q(arg(a, 0)), VP(V("be"), PP(P("in"), NP(D("the"), A("English"), N("lexicon")))))
      .typ({.neg = true});
}
Constituent not_in_lexicon_fr(const std::vector<std::string>& a) {
  return S(Q(arg(a, 0)),
           VP(V("être"), PP(P("dans"), NP(D("le"), N("lexique"), A("français")))))
      .typ({.neg = true});
}

Constituent bad_position_en(const std::vector<std::string>& a) {
  return S(NP(D("the"), N("position")),
           VP(V("be").t("ps"), Q(arg(a, 0)).a(","), Adv("not"), Q(arg(a, 1))))
      .typ({.modal = "nece"});
}
Constituent bad_position_fr(const std::vector<std::string>& a) {
  return S(NP(D("le"), N("position")),
           VP(V("être").t("c"), Q(arg(a, 0)).a(","), Adv("non"), Q(arg(a, 1))))
      .typ({.modal = "nece"});
}

Constituent empty_coordination_en(const std::vector<std::string>&) {
  return S(NP(D("the"), N("coordination")), VP(V("be"), A("empty")));
}
Constituent empty_coordination_fr(const std::vector<std::string>&) {
  return S(NP(D("le"), N("coordination")), VP(V("être"), A("vide")));
}

Constituent passive_without_object_en(const std::vector<std::string>&) {
  return S(NP(D("the"), N("passive")), VP(V("need"), NP(D("a"), N("object"))));
}
Constituent passive_without_object_fr(const std::vector<std::string>&) {
  return S(NP(D("le"), N("passif")), VP(V("demander"), NP(D("un"), N("objet"))));
}

Constituent bad_constituent_en(const std::vector<std::string>& a) {
  return S(NP(D("the"), N("option"), Q(arg(a, 0))),
           VP(V("accept"), NP(D("this"), N("constituent"))))
      .typ({.neg = true});
}
Constituent bad_constituent_fr(const std::vector<std::string>& a) {
  return S(NP(D("le"), N("option"), Q(arg(a, 0))),
           VP(V("accepter"), NP(D("ce"), N("constituant"))))
      .typ({.neg = true});
}

Constituent morphology_error_en(const std::vector<std::string>& a) {
  return S(NP(D("the"), N("form"), PP(P("of"), Q(arg(a, 0)))),
           VP(V("be"), V("compute").t("pp")))
      .typ({.neg = true, .modal = "poss"});
}
Constituent morphology_error_fr(const std::vector<std::string>& a) {
  return S(NP(D("le"), N("forme"), PP(P("de"), Q(arg(a, 0)))),
           VP(V("être"), V("calculer").t("pp").g("f")))
      .typ({.neg = true, .modal = "poss"});
}

Constituent empty_phrase_en(const std::vector<std::string>&) {
  return S(NP(D("the"), N("sentence")), VP(V("be"), A("empty")));
}
Constituent empty_phrase_fr(const std::vector<std::string>&) {
  return S(NP(D("le"), N("phrase")), VP(V("être"), A("vide")));
}

Constituent unknown_warning_en(const std::vector<std::string>& a) {
  return S(NP(D("the"), N("warning"), Q(arg(a, 0))),
           VP(V("be"), Adv("not"), V("implement").t("pp")));
}
Constituent unknown_warning_fr(const std::vector<std::string>& a) {
  return S(NP(D("le"), N("avertissement"), Q(arg(a, 0))),
           VP(V("être"), V("implémenter").t("pp")))
      .typ({.neg = true});
}

struct Entry {
  Builder en = nullptr;
  Builder fr = nullptr;
};

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = {
      // self-realized
      {"bad parameter", {bad_parameter_en, bad_parameter_fr}},
      {"not in lexicon", {not_in_lexicon_en, not_in_lexicon_fr}},
      {"bad position", {bad_position_en, bad_position_fr}},
      {"empty coordination", {empty_coordination_en, empty_coordination_fr}},
      {"passive without object", {passive_without_object_en, passive_without_object_fr}},
      {"bad constituent for option", {bad_constituent_en, bad_constituent_fr}},
      {"morphology error", {morphology_error_en, morphology_error_fr}},
      {"empty phrase", {empty_phrase_en, empty_phrase_fr}},
      {"unknown warning", {unknown_warning_en, unknown_warning_fr}},
      // plain-text fallbacks
      {"bad application", {}},
      {"bad number of parameters", {}},
      {"dependent needs terminal", {}},
      {"mixed relations in coordination", {}},
      {"unknown feature", {}},
      {"bad lexicon table", {}},
      {"bad language", {}},
      {"no appropriate pronoun", {}},
      {"bad date", {}},
      {"bad number", {}},
      {"empty choice", {}},
      {"bad HTML attribute", {}},
      {"inapplicable question", {}},
      {"defective conjugation", {}},
      {"not implemented", {}},
      {"internal error", {}},
  };
  return t;
}

std::string plain_message(const std::string& code, const std::vector<std::string>& args) {
  std::string out = code;
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

const std::vector<std::string>& warning_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, entry] : table()) k.push_back(key);
    return k;
  }();
  return keys;
}

const std::vector<std::string>& self_realized_warning_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, entry] : table())
      if (entry.en) k.push_back(key);
    return k;
  }();
  return keys;
}

std::string render_warning(const std::string& code, const std::vector<std::string>& args,
                           Lang language) {
  Session* session = Session::current_or_null();
  auto it = table().find(code);
  if (it == table().end()) {
    // unknown code: fall back to the generic message
    if (session && table().count("unknown warning"))
      return render_warning("unknown warning", {code}, language);
    return plain_message(code, args);
  }
  Builder builder = language == Lang::en ? it->second.en : it->second.fr;
  if (!builder || !session) return plain_message(code, args);

  // realize through the realizer itself, with warnings muted to avoid
  // recursion
  const bool was_muted = session->warnings_muted();
  session->mute_warnings(true);
  const Lang previous = session->language();
  session->use(language);
  std::string message;
  try {
    message = realize(builder(args));
  } catch (...) {
    message = plain_message(code, args);
  }
  session->use(previous);
  session->mute_warnings(was_muted);
  return message.empty() ? plain_message(code, args) : message;
}

std::string bracket_lemma(const std::string& lemma) { return "[[" + lemma + "]]"; }

}  // namespace realizer
