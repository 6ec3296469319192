#include "realizer/lexicon.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace realizer {

using nlohmann::json;

const std::string* DeclensionTable::find(const std::string& key) const {
  auto it = forms.find(key);
  return it == forms.end() ? nullptr : &it->second;
}

const DeclensionTable* RuleTables::find_declension(const std::string& id) const {
  auto it = declensions.find(id);
  return it == declensions.end() ? nullptr : &it->second;
}

const ConjugationTable* RuleTables::find_conjugation(const std::string& id) const {
  auto it = conjugations.find(id);
  return it == conjugations.end() ? nullptr : &it->second;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw LexiconError(where + ": " + what);
}

std::vector<Pos> parse_pos_list(const json& j, const std::string& where) {
  std::vector<Pos> out;
  if (j.is_string()) {
    auto p = pos_from_code(j.get<std::string>());
    if (!p) fail(where, "unknown POS code " + j.get<std::string>());
    out.push_back(*p);
    return out;
  }
  for (const auto& e : j) {
    auto p = pos_from_code(e.get<std::string>());
    if (!p) fail(where, "unknown POS code " + e.get<std::string>());
    out.push_back(*p);
  }
  return out;
}

ConjugationRow parse_row(const json& j, const std::string& where) {
  ConjugationRow row;
  if (j.is_string()) {
    row.per_person = false;
    row.all = j.get<std::string>();
    return row;
  }
  if (!j.is_array() || j.size() != 6)
    fail(where, "conjugation row must be a string or an array of 6 cells");
  row.per_person = true;
  row.persons.resize(6);
  for (std::size_t i = 0; i < 6; ++i) {
    if (j[i].is_null()) continue;  // defective cell
    row.persons[i] = j[i].get<std::string>();
  }
  return row;
}

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

void parse_rules(const json& doc, RuleTables& rules) {
  if (doc.contains("declension")) {
    for (auto it = doc["declension"].begin(); it != doc["declension"].end(); ++it) {
      const std::string where = "declension." + it.key();
      const json& t = it.value();
      DeclensionTable table;
      table.id = it.key();
      table.pos = parse_pos_list(t.at("pos"), where);
      table.strip = t.value("strip", "");
      table.suppletive = t.value("suppletive", false);
      for (auto f = t.at("forms").begin(); f != t.at("forms").end(); ++f)
        table.forms[f.key()] = f.value().get<std::string>();
      rules.declensions[table.id] = std::move(table);
    }
  }
  if (doc.contains("conjugation")) {
    for (auto it = doc["conjugation"].begin(); it != doc["conjugation"].end(); ++it) {
      const std::string where = "conjugation." + it.key();
      const json& t = it.value();
      ConjugationTable table;
      table.id = it.key();
      table.strip = t.value("strip", "");
      if (t.contains("forms"))
        for (auto f = t["forms"].begin(); f != t["forms"].end(); ++f) {
          const std::string& tense = f.key();
          if (tense == "pp" && f.value().is_object()) {
            for (auto g = f.value().begin(); g != f.value().end(); ++g)
              table.participle[g.key()] = g.value().get<std::string>();
            continue;
          }
          if (tense == "pr" && f.value().is_string()) {
            table.present_participle = f.value().get<std::string>();
            continue;
          }
          table.rows[tense] = parse_row(f.value(), where + "." + tense);
        }
      rules.conjugations[table.id] = std::move(table);
    }
  }
  if (doc.contains("elision")) {
    const json& e = doc["elision"];
    if (e.contains("words"))
      for (const auto& w : e["words"]) {
        RuleTables::ElisionEntry entry;
        std::string word;
        if (w.is_string()) {
          word = w.get<std::string>();
        } else {
          word = w.at("word").get<std::string>();
          if (w.contains("pos")) entry.only_pos = pos_from_code(w["pos"].get<std::string>());
          if (w.contains("onlyBefore")) entry.only_before = string_list(w["onlyBefore"]);
        }
        // drop the final vowel (one codepoint), append the apostrophe
        std::string stem = word;
        while (!stem.empty() && (stem.back() & 0xC0) == 0x80) stem.pop_back();
        if (!stem.empty()) stem.pop_back();
        entry.elided = w.is_object() && w.contains("elided")
                           ? w["elided"].get<std::string>()
                           : stem + "'";
        rules.elision[word] = std::move(entry);
      }
    if (e.contains("hAspire")) rules.h_aspire_words = string_list(e["hAspire"]);
  }
  if (doc.contains("euphony"))
    for (auto it = doc["euphony"].begin(); it != doc["euphony"].end(); ++it) {
      RuleTables::EuphonyEntry entry;
      if (it.value().is_string()) {
        entry.replacement = it.value().get<std::string>();
      } else {
        entry.replacement = it.value().at("form").get<std::string>();
        if (it.value().contains("pos"))
          entry.only_pos = pos_from_code(it.value()["pos"].get<std::string>());
      }
      rules.euphony[it.key()] = std::move(entry);
    }
  if (doc.contains("contraction"))
    for (auto it = doc["contraction"].begin(); it != doc["contraction"].end(); ++it)
      rules.contraction[it.key()] = it.value().get<std::string>();
  if (doc.contains("anExceptions")) {
    const json& a = doc["anExceptions"];
    if (a.contains("an")) rules.an_force = string_list(a["an"]);
    if (a.contains("a")) rules.an_block = string_list(a["a"]);
  }
  if (doc.contains("adjectivePre")) rules.adjective_pre = string_list(doc["adjectivePre"]);
  if (doc.contains("prepositionQuestions"))
    for (auto it = doc["prepositionQuestions"].begin(); it != doc["prepositionQuestions"].end(); ++it)
      rules.preposition_questions[it.key()] = string_list(it.value());
  if (doc.contains("whWords"))
    for (auto it = doc["whWords"].begin(); it != doc["whWords"].end(); ++it)
      rules.wh_words[it.key()] = it.value().get<std::string>();
  if (doc.contains("modals"))
    for (auto it = doc["modals"].begin(); it != doc["modals"].end(); ++it)
      rules.modals[it.key()] = {it.value().at("p").get<std::string>(),
                                it.value().at("ps").get<std::string>()};
  if (doc.contains("numbers")) {
    const json& n = doc["numbers"];
    rules.number_ones = string_list(n.at("ones"));
    rules.number_teens = string_list(n.at("teens"));
    rules.number_tens = string_list(n.at("tens"));
    if (n.contains("ordinalOnes")) rules.ordinal_ones = string_list(n["ordinalOnes"]);
    if (n.contains("ordinalTeens")) rules.ordinal_teens = string_list(n["ordinalTeens"]);
    if (n.contains("ordinalTens")) rules.ordinal_tens = string_list(n["ordinalTens"]);
    rules.hyphenate_numbers = n.value("hyphenateAll", false);
    rules.thousands_sep = n.value("thousandsSep", ",");
    rules.decimal_sep = n.value("decimalSep", ".");
  }
  if (doc.contains("dates")) {
    const json& d = doc["dates"];
    rules.month_names = string_list(d.at("months"));
    rules.weekday_names = string_list(d.at("weekdays"));
  }
}

}  // namespace

std::shared_ptr<const RuleTables> load_rules(std::istream& in, Lang language) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LexiconError(std::string("rules file: ") + e.what());
  }
  auto rules = std::make_shared<RuleTables>();
  rules->language = language;
  parse_rules(doc, *rules);
  return rules;
}

std::shared_ptr<const RuleTables> load_rules_file(const std::string& path, Lang language) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open rules file " + path);
  return load_rules(in, language);
}

LexiconBuilder::LexiconBuilder(Lang language, std::shared_ptr<const RuleTables> tables)
    : language_(language), tables_(std::move(tables)) {}

void LexiconBuilder::add_entry(LexiconEntry entry) {
  if (frozen_) throw LexiconError("lexicon already frozen");
  const std::string where = entry.lemma + "/" + pos_code(entry.pos);
  if (entry.h_aspire && language_ != Lang::fr)
    fail(where, "hAspire is only valid for French entries");
  entry.language = language_;
  if (entry.pos == Pos::V) {
    entry.conjugation = tables_->find_conjugation(entry.table_id);
    if (!entry.conjugation) fail(where, "undeclared conjugation table " + entry.table_id);
  } else if (is_word_pos(entry.pos) && entry.pos != Pos::P && entry.pos != Pos::C) {
    // prepositions and conjunctions are invariable and carry no table
    entry.declension = tables_->find_declension(entry.table_id);
    if (!entry.declension) fail(where, "undeclared declension table " + entry.table_id);
    bool ok = false;
    for (Pos p : entry.declension->pos) ok = ok || p == entry.pos;
    if (!ok) fail(where, "table " + entry.table_id + " does not cover this category");
  }
  // the strippable suffix must actually be strippable
  const std::string& strip = entry.pos == Pos::V
                                 ? entry.conjugation->strip
                                 : (entry.declension ? entry.declension->strip : std::string());
  if (!strip.empty()) {
    if (entry.lemma.size() < strip.size() ||
        entry.lemma.compare(entry.lemma.size() - strip.size(), strip.size(), strip) != 0)
      fail(where, "lemma does not end with table suffix -" + strip);
  }
  auto key = std::make_pair(entry.lemma, std::string(pos_code(entry.pos)));
  if (entries_.count(key)) fail(where, "duplicate entry");
  entries_.emplace(std::move(key), std::move(entry));
}

std::shared_ptr<const Lexicon> LexiconBuilder::freeze() {
  frozen_ = true;
  auto lex = std::make_shared<Lexicon>();
  lex->language_ = language_;
  lex->tables_ = tables_;
  lex->entries_ = std::move(entries_);
  return lex;
}

const LexiconEntry* Lexicon::lookup(const std::string& lemma, Pos pos) const {
  auto it = entries_.find({lemma, pos_code(pos)});
  return it == entries_.end() ? nullptr : &it->second;
}

std::shared_ptr<const Lexicon> load_lexicon(std::istream& in, Lang language,
                                            std::shared_ptr<const RuleTables> tables) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LexiconError(std::string("lexicon file: ") + e.what());
  }
  if (!doc.is_object()) throw LexiconError("lexicon file: top level must be an object");
  LexiconBuilder builder(language, std::move(tables));
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& lemma = it.key();
    if (!it.value().is_object()) fail(lemma, "entry must be an object keyed by POS");
    for (auto p = it.value().begin(); p != it.value().end(); ++p) {
      auto pos = pos_from_code(p.key());
      if (!pos) fail(lemma, "unknown POS code " + p.key());
      const json& f = p.value();
      LexiconEntry entry;
      entry.lemma = lemma;
      entry.pos = *pos;
      entry.table_id = f.value("tab", "");
      if (f.contains("g")) {
        auto g = gender_from_code(f["g"].get<std::string>());
        if (!g) fail(lemma, "bad gender");
        entry.inherent_gender = *g;
      }
      if (f.contains("n")) {
        auto n = number_from_code(f["n"].get<std::string>());
        if (!n) fail(lemma, "bad number");
        entry.inherent_number = n;
      }
      if (f.contains("aux")) {
        auto a = aux_from_code(f["aux"].get<std::string>());
        if (!a) fail(lemma, "bad auxiliary");
        entry.default_aux = a;
      }
      entry.h_aspire = f.value("h", false);
      if (f.contains("irreg"))
        for (auto irr = f["irreg"].begin(); irr != f["irreg"].end(); ++irr)
          entry.irregular[irr.key()] = irr.value().get<std::string>();
      builder.add_entry(std::move(entry));
    }
  }
  return builder.freeze();
}

std::shared_ptr<const Lexicon> load_lexicon_file(const std::string& path, Lang language,
                                                 std::shared_ptr<const RuleTables> tables) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file " + path);
  return load_lexicon(in, language, std::move(tables));
}

}  // namespace realizer
