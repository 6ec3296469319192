// Word-form computation (declension, conjugation, comparison) and the
// token-adjacent spelling rules (a/an, French elision, euphony,
// contraction).
#ifndef REALIZER_MORPHOLOGY_HPP
#define REALIZER_MORPHOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "realizer/lang.hpp"
#include "realizer/lexicon.hpp"
#include "realizer/token.hpp"

namespace realizer {

// Feature bundle consumed by decline/conjugate. Case applies only to
// pronouns, degree to adjectives/adverbs, tense to verbs.
struct FeatureBundle {
  int pe = 3;
  Number n = Number::s;
  Gender g = Gender::x;
  std::optional<std::string> t;
  std::optional<VAux> aux;            // French compound-tense auxiliary
  std::optional<Case> c;
  std::optional<std::string> degree;  // "co" or "su"
};

struct MorphError {
  std::string reason;  // e.g. "missing form", "defective"
};

// Irregular forms take precedence over the table. The empty string is a
// legal result (plural indefinite article).
struct DeclineResult {
  std::string form;
  std::optional<MorphError> error;
};
DeclineResult decline(const LexiconEntry& entry, const FeatureBundle& features);

// Simple tenses yield one form; French compound tenses yield the
// auxiliary form followed by the past participle. `participle_agree`
// overrides the participle's gender/number (French agreement rules).
struct ConjugateResult {
  std::vector<std::string> forms;
  std::optional<MorphError> error;
};
struct ParticipleAgreement {
  Gender g = Gender::m;
  Number n = Number::s;
};
ConjugateResult conjugate(const LexiconEntry& entry, const FeatureBundle& features,
                          std::optional<ParticipleAgreement> participle_agree = std::nullopt);

// Comparative/superlative: the synthetic form when the table has one,
// otherwise the lemma with `periphrastic` set to the more/most (plus /
// le plus) marker to emit as a separate token.
struct CompareResult {
  std::string form;
  std::optional<std::string> periphrastic;
};
CompareResult compare(const LexiconEntry& entry, const std::string& degree);

// The pronoun case column whose cell equals the lemma (given the search
// order tonic, nom, acc, dat, refl); drives case-less pronoun realization.
std::optional<Case> pronoun_default_case(const LexiconEntry& entry);

// Token-adjacent spelling rules over the realized token stream. Adjacency
// skips empty realizations; HTML wrappers live outside the text and are
// transparent. Idempotent.
void apply_spelling_rules(std::vector<Token>& tokens, const RuleTables& en_rules,
                          const RuleTables& fr_rules);

// True when `word` starts with a vowel for French elision purposes
// (h-aspire blocks, mute h counts as a vowel).
bool french_vowel_initial(const std::string& word, bool h_aspire);
// True when English "a" must surface as "an" before `word`.
bool english_takes_an(const std::string& word, const RuleTables& rules);

}  // namespace realizer

#endif  // REALIZER_MORPHOLOGY_HPP
