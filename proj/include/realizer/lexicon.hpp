// Per-language lexica: lemma + POS records carrying morphology-table
// references, inherent features and irregular forms, plus the declension
// and conjugation tables themselves (loaded from the rules file).
#ifndef REALIZER_LEXICON_HPP
#define REALIZER_LEXICON_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "realizer/lang.hpp"

namespace realizer {

class LexiconError : public std::runtime_error {
 public:
  explicit LexiconError(const std::string& what) : std::runtime_error(what) {}
};

// A declension table maps feature keys to suffixes appended to the stem
// obtained by stripping `strip` from the lemma. Keys are "s"/"p" for
// English-style number, "ms"/"fs"/"mp"/"fp" for gender x number,
// "co"/"su" for adjective degrees and "case:pe:n:g" for pronoun paradigms.
struct DeclensionTable {
  std::string id;
  std::vector<Pos> pos;  // categories the table is valid for
  std::string strip;
  bool suppletive = false;  // forms are full words, not suffixes
  std::map<std::string, std::string> forms;

  const std::string* find(const std::string& key) const;
};

// A conjugation table row is either a single suffix valid for all persons
// or six person/number suffixes (1s 2s 3s 1p 2p 3p). Absent array cells
// are defective and must surface as a declared error, never as "".
struct ConjugationRow {
  bool per_person = false;
  std::string all;                                 // when !per_person
  std::vector<std::optional<std::string>> persons; // size 6 when per_person
};

struct ConjugationTable {
  std::string id;
  std::string strip;
  std::map<std::string, ConjugationRow> rows;          // tense -> row
  std::map<std::string, std::string> participle;       // ms/fs/mp/fp suffixes
  std::optional<std::string> present_participle;

  bool has_tense(const std::string& t) const { return rows.count(t) > 0; }
};

struct LexiconEntry {
  std::string lemma;
  Lang language = Lang::en;
  Pos pos = Pos::N;
  std::string table_id;
  Gender inherent_gender = Gender::x;
  std::optional<Number> inherent_number;  // pluralia tantum etc.
  bool h_aspire = false;
  std::optional<VAux> default_aux;
  std::map<std::string, std::string> irregular;  // feature key -> form

  const DeclensionTable* declension = nullptr;    // resolved at freeze
  const ConjugationTable* conjugation = nullptr;  // resolved at freeze
};

class Lexicon;

// Mutable builder; `freeze()` resolves table references and yields an
// immutable lexicon safely shareable across threads.
class LexiconBuilder {
 public:
  LexiconBuilder(Lang language, std::shared_ptr<const class RuleTables> tables);

  // Errors: duplicate (lemma, pos) pair or unknown tableId.
  void add_entry(LexiconEntry entry);
  std::shared_ptr<const Lexicon> freeze();

 private:
  Lang language_;
  std::shared_ptr<const RuleTables> tables_;
  std::map<std::pair<std::string, std::string>, LexiconEntry> entries_;
  bool frozen_ = false;
};

class Lexicon {
 public:
  // Returns nullptr when the lemma is absent (or absent for that POS);
  // the caller feeds that into the warning path, realization never aborts.
  const LexiconEntry* lookup(const std::string& lemma, Pos pos) const;

  Lang language() const { return language_; }
  std::size_t size() const { return entries_.size(); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, entry] : entries_) fn(entry);
  }

 private:
  friend class LexiconBuilder;
  Lang language_ = Lang::en;
  std::shared_ptr<const RuleTables> tables_;  // keeps referenced tables alive
  std::map<std::pair<std::string, std::string>, LexiconEntry> entries_;
};

// Declension + conjugation tables and the language's spelling-rule data,
// parsed from the rules file that ships alongside the lexicon.
class RuleTables {
 public:
  Lang language = Lang::en;
  std::map<std::string, DeclensionTable> declensions;
  std::map<std::string, ConjugationTable> conjugations;

  // Elision / euphony / contraction data (French) and a/an data (English).
  struct ElisionEntry {
    std::string elided;                // e.g. "l'"
    std::optional<Pos> only_pos;       // restricts by source category
    std::vector<std::string> only_before;  // e.g. si -> {il, ils}
  };
  std::map<std::string, ElisionEntry> elision;
  struct EuphonyEntry {
    std::string replacement;
    std::optional<Pos> only_pos;
  };
  std::map<std::string, EuphonyEntry> euphony;
  std::map<std::string, std::string> contraction;  // "de le" -> "du"
  std::vector<std::string> an_force;   // consonant-initial words taking "an"
  std::vector<std::string> an_block;   // vowel-initial words keeping "a"
  std::vector<std::string> h_aspire_words;  // fallback for entry-less tokens

  std::vector<std::string> adjective_pre;  // French pre-nominal adjectives
  std::map<std::string, std::vector<std::string>> preposition_questions;
  std::map<std::string, std::string> wh_words;      // question code -> word
  std::map<std::string, std::pair<std::string, std::string>> modals;
  // Number + date wording tables.
  std::vector<std::string> number_ones, number_teens, number_tens;
  std::vector<std::string> ordinal_ones, ordinal_teens, ordinal_tens;
  std::vector<std::string> month_names, weekday_names;
  bool hyphenate_numbers = false;  // French post-1990 orthography
  std::string thousands_sep, decimal_sep;

  const DeclensionTable* find_declension(const std::string& id) const;
  const ConjugationTable* find_conjugation(const std::string& id) const;
};

// Loads the rules file (JSON, sections declension/conjugation/elision/
// euphony/contraction/anExceptions/...). Throws LexiconError with
// position information on malformed input.
std::shared_ptr<const RuleTables> load_rules(std::istream& in, Lang language);
std::shared_ptr<const RuleTables> load_rules_file(const std::string& path, Lang language);

// Loads a lexicon file: a JSON object keyed by lemma, each value keyed by
// POS code with fields tab/g/n/aux/h/irreg.
std::shared_ptr<const Lexicon> load_lexicon(std::istream& in, Lang language,
                                            std::shared_ptr<const RuleTables> tables);
std::shared_ptr<const Lexicon> load_lexicon_file(const std::string& path, Lang language,
                                                 std::shared_ptr<const RuleTables> tables);

}  // namespace realizer

#endif  // REALIZER_LEXICON_HPP
