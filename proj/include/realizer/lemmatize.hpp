// Reverse lookup: all (lemma, POS, features) whose realization equals a
// given form.
#ifndef REALIZER_LEMMATIZE_HPP
#define REALIZER_LEMMATIZE_HPP

#include <string>
#include <vector>

#include "realizer/lexicon.hpp"
#include "realizer/morphology.hpp"

namespace realizer {

struct LemmaCandidate {
  std::string lemma;
  Pos pos = Pos::N;
  FeatureBundle features;
  std::string expression;  // e.g. N("spring").n("p")
};

// Candidates ordered by POS code then lemma. Empty when unknown.
std::vector<LemmaCandidate> lemmatize(const std::string& form, Lang language);

// Every surface form an entry can produce, paired with the features that
// produce it. Defective cells are skipped.
std::vector<std::pair<std::string, FeatureBundle>> all_forms(const LexiconEntry& entry);

}  // namespace realizer

#endif  // REALIZER_LEMMATIZE_HPP
