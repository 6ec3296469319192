#include "realizer/morphology.hpp"

#include <algorithm>
#include <array>

#include "realizer/session.hpp"
#include "realizer/syntax.hpp"
#include "text_util.hpp"

namespace realizer {

namespace tu = textutil;

namespace {

int person_index(int pe, Number n) {
  int i = pe - 1;
  if (i < 0 || i > 2) i = 2;
  return n == Number::p ? i + 3 : i;
}

std::string stem_of(const std::string& lemma, const std::string& strip) {
  if (strip.empty()) return lemma;
  if (lemma.size() < strip.size()) return lemma;
  return lemma.substr(0, lemma.size() - strip.size());
}

std::string gn_key(Gender g, Number n) {
  Gender gg = g == Gender::x ? Gender::m : g;
  return std::string(gender_code(gg)) + number_code(n);
}

const std::string* irregular_form(const LexiconEntry& entry, const std::string& key) {
  auto it = entry.irregular.find(key);
  return it == entry.irregular.end() ? nullptr : &it->second;
}

// Declension key candidates in lookup order for the entry's category.
std::vector<std::string> declension_keys(const LexiconEntry& entry, const FeatureBundle& f) {
  std::vector<std::string> keys;
  switch (entry.pos) {
    case Pos::N:
      keys.push_back(number_code(f.n));
      break;
    case Pos::A:
    case Pos::Adv:
      if (f.degree) keys.push_back(*f.degree);
      keys.push_back(gn_key(f.g, f.n));
      keys.push_back(number_code(f.n));
      break;
    case Pos::D:
      keys.push_back(gn_key(f.g, f.n));
      keys.push_back(number_code(f.n));
      break;
    case Pos::Pro: {
      Case c = f.c.value_or(Case::tonic);
      std::string base = std::string(case_code(c)) + ":" + std::to_string(f.pe) + ":" +
                         number_code(f.n) + ":";
      // gender-neutral paradigm rows are stored under x
      keys.push_back(base + gender_code(f.g));
      keys.push_back(base + "x");
      keys.push_back(base + "m");
      break;
    }
    default:
      break;
  }
  return keys;
}

}  // namespace

DeclineResult decline(const LexiconEntry& entry, const FeatureBundle& features) {
  DeclineResult out;
  // P and C are invariable, as are adverbs outside of degree forms.
  if (entry.pos == Pos::P || entry.pos == Pos::C ||
      (entry.pos == Pos::Adv && !features.degree)) {
    out.form = entry.lemma;
    return out;
  }
  FeatureBundle f = features;
  if (entry.inherent_number) f.n = *entry.inherent_number;
  if (entry.language == Lang::fr && entry.inherent_gender != Gender::x &&
      (entry.pos == Pos::N || entry.pos == Pos::Pro))
    f.g = entry.inherent_gender;

  const auto keys = declension_keys(entry, f);
  for (const auto& key : keys)
    if (const std::string* irr = irregular_form(entry, key)) {
      out.form = *irr;
      return out;
    }

  const DeclensionTable* table = entry.declension;
  if (!table) {
    // adverbs and similar entries may legitimately have no table
    if (entry.pos == Pos::Adv && !features.degree) {
      out.form = entry.lemma;
      return out;
    }
    out.form = entry.lemma;
    out.error = MorphError{"no declension table"};
    return out;
  }

  // English positive adjectives/adverbs and bare degreeless forms realize
  // the lemma directly when the table carries only degree suffixes.
  if ((entry.pos == Pos::A || entry.pos == Pos::Adv) && entry.language == Lang::en &&
      !f.degree) {
    out.form = entry.lemma;
    return out;
  }

  const std::string stem = stem_of(entry.lemma, table->strip);
  for (const auto& key : keys)
    if (const std::string* suffix = table->find(key)) {
      out.form = table->suppletive ? *suffix : stem + *suffix;
      return out;
    }
  out.form = entry.lemma;
  out.error = MorphError{"form not covered by table " + table->id};
  return out;
}

namespace {

// One cell of a conjugation row; null means defective.
std::optional<std::string> row_cell(const ConjugationRow& row, int pe, Number n) {
  if (!row.per_person) return row.all;
  return row.persons[person_index(pe, n)];
}

std::optional<std::string> irregular_conj(const LexiconEntry& entry, const std::string& tense,
                                          int pe, Number n) {
  std::string key = tense + ":" + std::to_string(pe) + number_code(n);
  if (const std::string* irr = irregular_form(entry, key)) return *irr;
  if (const std::string* irr = irregular_form(entry, tense)) return *irr;
  return std::nullopt;
}

std::string participle_key(Gender g, Number n) { return gn_key(g, n); }

// Past participle with optional gender/number agreement.
std::optional<std::string> past_participle(const LexiconEntry& entry, Gender g, Number n) {
  const std::string key = "pp:" + participle_key(g, n);
  if (const std::string* irr = irregular_form(entry, key)) return *irr;
  if (g == Gender::m && n == Number::s)
    if (const std::string* irr = irregular_form(entry, "pp")) return *irr;
  const ConjugationTable* table = entry.conjugation;
  if (!table) return std::nullopt;
  const std::string stem = stem_of(entry.lemma, table->strip);
  if (!table->participle.empty()) {
    auto it = table->participle.find(participle_key(g, n));
    if (it == table->participle.end()) return std::nullopt;
    return stem + it->second;
  }
  auto row = table->rows.find("pp");
  if (row == table->rows.end()) return std::nullopt;
  auto cell = row_cell(row->second, 3, Number::s);
  if (!cell) return std::nullopt;
  // English participles are invariable.
  if (const std::string* irr = irregular_form(entry, "pp")) return *irr;
  return stem + *cell;
}

}  // namespace

ConjugateResult conjugate(const LexiconEntry& entry, const FeatureBundle& features,
                          std::optional<ParticipleAgreement> participle_agree) {
  ConjugateResult out;
  if (entry.pos != Pos::V) {
    out.error = MorphError{"not a verb"};
    out.forms.push_back(entry.lemma);
    return out;
  }
  const std::string tense = features.t.value_or("p");
  const ConjugationTable* table = entry.conjugation;

  if (is_compound_tense(tense)) {
    // auxiliary at the matching simple tense + past participle
    VAux aux = features.aux.value_or(entry.default_aux.value_or(VAux::avoir));
    Session* session = Session::current_or_null();
    const LexiconEntry* aux_entry = nullptr;
    if (session)
      aux_entry = session->lexicon(entry.language)
                      .lookup(aux == VAux::avoir ? "avoir" : "être", Pos::V);
    if (!aux_entry) {
      out.error = MorphError{"missing auxiliary entry"};
      out.forms.push_back(entry.lemma);
      return out;
    }
    FeatureBundle aux_features = features;
    aux_features.t = std::string(compound_aux_tense(tense));
    ConjugateResult aux_forms = conjugate(*aux_entry, aux_features);
    if (aux_forms.error) return aux_forms;
    Gender pg = Gender::m;
    Number pn = Number::s;
    if (aux == VAux::etre) {
      pg = features.g;
      pn = features.n;
    }
    if (participle_agree) {
      pg = participle_agree->g;
      pn = participle_agree->n;
    }
    auto pp = past_participle(entry, pg, pn);
    if (!pp) {
      out.error = MorphError{"missing past participle"};
      out.forms.push_back(entry.lemma);
      return out;
    }
    out.forms = aux_forms.forms;
    out.forms.push_back(*pp);
    return out;
  }

  if (tense == "pp") {
    Gender pg = participle_agree ? participle_agree->g : Gender::m;
    Number pn = participle_agree ? participle_agree->n : Number::s;
    // explicit local gender/number on the terminal also drives agreement
    if (!participle_agree && entry.language == Lang::fr) {
      pg = features.g == Gender::x ? Gender::m : features.g;
      pn = features.n;
    }
    if (entry.language == Lang::en) { pg = Gender::m; pn = Number::s; }
    auto pp = past_participle(entry, pg, pn);
    if (!pp) {
      out.error = MorphError{"defective past participle"};
      out.forms.push_back(entry.lemma);
      return out;
    }
    out.forms.push_back(*pp);
    return out;
  }

  if (tense == "pr") {
    if (const std::string* irr = irregular_form(entry, "pr")) {
      out.forms.push_back(*irr);
      return out;
    }
    if (table && table->present_participle) {
      out.forms.push_back(stem_of(entry.lemma, table->strip) + *table->present_participle);
      return out;
    }
    out.error = MorphError{"defective present participle"};
    out.forms.push_back(entry.lemma);
    return out;
  }

  if (tense == "b") {
    if (const std::string* irr = irregular_form(entry, "b")) {
      out.forms.push_back(*irr);
      return out;
    }
    if (table) {
      auto row = table->rows.find("b");
      if (row != table->rows.end()) {
        auto cell = row_cell(row->second, features.pe, features.n);
        if (cell) {
          out.forms.push_back(stem_of(entry.lemma, table->strip) + *cell);
          return out;
        }
      }
    }
    out.forms.push_back(entry.lemma);
    return out;
  }

  // English future and conditional are built with a modal.
  if (entry.language == Lang::en && (tense == "f" || tense == "c")) {
    FeatureBundle base = features;
    base.t = "b";
    ConjugateResult rest = conjugate(entry, base);
    out.forms.push_back(tense == "f" ? "will" : "would");
    out.forms.insert(out.forms.end(), rest.forms.begin(), rest.forms.end());
    out.error = rest.error;
    return out;
  }

  if (auto irr = irregular_conj(entry, tense, features.pe, features.n)) {
    out.forms.push_back(*irr);
    return out;
  }
  if (!table) {
    out.error = MorphError{"no conjugation table"};
    out.forms.push_back(entry.lemma);
    return out;
  }
  auto row = table->rows.find(tense);
  if (row == table->rows.end()) {
    out.error = MorphError{"tense " + tense + " not covered by table " + table->id};
    out.forms.push_back(entry.lemma);
    return out;
  }
  auto cell = row_cell(row->second, features.pe, features.n);
  if (!cell) {
    out.error = MorphError{"defective"};
    out.forms.push_back(entry.lemma);
    return out;
  }
  out.forms.push_back(stem_of(entry.lemma, table->strip) + *cell);
  return out;
}

CompareResult compare(const LexiconEntry& entry, const std::string& degree) {
  CompareResult out;
  out.form = entry.lemma;
  if (degree != "co" && degree != "su") return out;  // positive: identity
  if (const std::string* irr = irregular_form(entry, degree)) {
    out.form = *irr;
    return out;
  }
  if (entry.declension)
    if (const std::string* suffix = entry.declension->find(degree)) {
      out.form = stem_of(entry.lemma, entry.declension->strip) + *suffix;
      return out;
    }
  if (entry.language == Lang::en)
    out.periphrastic = degree == "co" ? "more" : "most";
  else
    out.periphrastic = degree == "co" ? "plus" : "le plus";
  return out;
}

std::optional<Case> pronoun_default_case(const LexiconEntry& entry) {
  if (entry.pos != Pos::Pro || !entry.declension) return std::nullopt;
  static const std::array<Case, 5> order = {Case::tonic, Case::nom, Case::acc, Case::dat,
                                            Case::refl};
  for (Case c : order) {
    const std::string prefix = std::string(case_code(c)) + ":";
    for (const auto& [key, form] : entry.declension->forms)
      if (tu::starts_with(key, prefix) && form == entry.lemma) return c;
  }
  return std::nullopt;
}

bool french_vowel_initial(const std::string& word, bool h_aspire) {
  if (word.empty()) return false;
  char32_t c = tu::to_lower(tu::first_codepoint(word));
  static const std::u32string vowels = U"aàâeéèêëiîïoôœuùûü";
  if (vowels.find(c) != std::u32string::npos) return true;
  if (c == U'h') return !h_aspire;
  // the bare clitic y ("il n'y a"), but not y-initial words like yaourt
  if (c == U'y') return word == "y";
  return false;
}

bool english_takes_an(const std::string& word, const RuleTables& rules) {
  if (word.empty()) return false;
  const std::string w = tu::lower_copy(word);
  for (const auto& block : rules.an_block)
    if (tu::starts_with(w, block)) return false;
  for (const auto& force : rules.an_force)
    if (tu::starts_with(w, force)) return true;
  char c = w[0];
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

namespace {

bool is_punct_text(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) || (c & 0x80)) return false;
  return true;
}

// Index of the next token with text, optionally skipping punctuation.
int next_lexical(const std::vector<Token>& tokens, int i, bool skip_punct,
                 bool* punct_between) {
  if (punct_between) *punct_between = false;
  for (int j = i + 1; j < static_cast<int>(tokens.size()); ++j) {
    if (tokens[j].text.empty()) continue;
    if (is_punct_text(tokens[j].text) || tokens[j].punctuation) {
      if (punct_between) *punct_between = true;
      if (skip_punct) continue;
      return -1;
    }
    return j;
  }
  return -1;
}

bool token_h_aspire(const Token& t, const RuleTables& fr_rules) {
  if (t.h_aspire) return true;
  const std::string w = tu::lower_copy(t.text);
  return std::find(fr_rules.h_aspire_words.begin(), fr_rules.h_aspire_words.end(), w) !=
         fr_rules.h_aspire_words.end();
}

std::optional<Pos> token_pos(const Token& t) {
  if (!t.source || !t.source->is_terminal()) return std::nullopt;
  return t.source->pos;
}

}  // namespace

void apply_spelling_rules(std::vector<Token>& tokens, const RuleTables& en_rules,
                          const RuleTables& fr_rules) {
  // Right to left so that a decision sees the final form of what follows.
  for (int i = static_cast<int>(tokens.size()) - 2; i >= 0; --i) {
    Token& cur = tokens[i];
    if (cur.text.empty() || cur.punctuation || is_punct_text(cur.text)) continue;

    if (cur.lang == Lang::en) {
      if (cur.text == "a" || cur.text == "A") {
        // adjacency is transparent to wrappers and inserted punctuation
        int j = next_lexical(tokens, i, /*skip_punct=*/true, nullptr);
        if (j >= 0 && english_takes_an(tokens[j].text, en_rules)) cur.text += "n";
        continue;
      }
      bool punct_between = false;
      int j = next_lexical(tokens, i, /*skip_punct=*/false, &punct_between);
      if (j >= 0 && !punct_between) {
        auto c = en_rules.contraction.find(cur.text + " " + tokens[j].text);
        if (c != en_rules.contraction.end()) {
          cur.text = c->second;
          cur.join_next = tokens[j].join_next;
          cur.hyphen_next = tokens[j].hyphen_next;
          for (auto& tag : tokens[j].tags_after) cur.tags_after.push_back(tag);
          tokens.erase(tokens.begin() + j);
        }
      }
      continue;
    }

    // French: contraction, then elision, then euphony.
    bool punct_between = false;
    int j = next_lexical(tokens, i, /*skip_punct=*/false, &punct_between);
    if (j < 0 || punct_between) continue;
    const Token& next = tokens[j];

    auto c = fr_rules.contraction.find(cur.text + " " + next.text);
    if (c != fr_rules.contraction.end()) {
      cur.text = c->second;
      cur.join_next = tokens[j].join_next;
      cur.hyphen_next = tokens[j].hyphen_next;
      for (auto& tag : tokens[j].tags_after) cur.tags_after.push_back(tag);
      tokens.erase(tokens.begin() + j);
      continue;
    }

    const bool next_vowel = french_vowel_initial(next.text, token_h_aspire(next, fr_rules));

    auto e = fr_rules.elision.find(cur.text);
    if (e != fr_rules.elision.end()) {
      const auto& entry = e->second;
      bool pos_ok = !entry.only_pos || token_pos(cur) == entry.only_pos;
      bool before_ok = entry.only_before.empty() ||
                       std::find(entry.only_before.begin(), entry.only_before.end(),
                                 tu::lower_copy(next.text)) != entry.only_before.end();
      if (pos_ok && before_ok && next_vowel) {
        cur.text = entry.elided;
        cur.join_next = true;
        continue;
      }
    }

    auto u = fr_rules.euphony.find(cur.text);
    if (u != fr_rules.euphony.end()) {
      bool pos_ok = !u->second.only_pos || token_pos(cur) == u->second.only_pos;
      if (pos_ok && next_vowel) cur.text = u->second.replacement;
    }
  }
}

}  // namespace realizer
