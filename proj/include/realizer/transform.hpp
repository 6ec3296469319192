// Sentence-level rewrites: negation, passivization, interrogation,
// modality, aspect and French clitic placement. All operate on the
// per-realization working tree, inserting explicit auxiliary terminals
// and reordering children while keeping agreement links intact.
#ifndef REALIZER_TRANSFORM_HPP
#define REALIZER_TRANSFORM_HPP

#include <string>
#include <vector>

#include "realizer/syntax.hpp"

namespace realizer {

// The twelve question codes: yes/no, who/what x subject/direct/indirect,
// where, when, why, how, how-much and tag question.
const std::vector<std::string>& question_codes();
bool is_question_code(const std::string& code);

// Applies every option of each node's TypeOptions to the (working) tree,
// in the fixed order pronominalization, modality/aspect, passive,
// negation, interrogation, clitic placement. Inapplicable passives warn
// and are skipped; question codes always produce a question, removing
// the matching part when present.
void apply_type_options(const NodeRef& working_root);

// Individual rewrites, exposed for tests; all expect a clause node
// (S/SP, or a phrase containing a VP) inside a working tree.
void expand_verb_chain(const NodeRef& clause, const TypeOptions& typ);
void passivize(const NodeRef& clause);
void negate(const NodeRef& clause, const std::string& neg_word);
void interrogate_in_place(const NodeRef& clause, const std::string& code,
                          NodeRef* removed = nullptr);
void place_clitics(const NodeRef& clause);
void apply_pronominalization(const NodeRef& tree);

// Question/answer extraction: the question string plus the removed part
// (the answer) realized on its own. `applicable` is false when the
// structure lacks the part the code removes.
struct QuestionResult {
  std::string code;
  bool applicable = false;
  std::string question;
  std::string answer;  // empty for yes/no and tag questions
};
QuestionResult interrogate(const Constituent& sentence, const std::string& code);

// All applicable codes with their would-be answers.
std::vector<QuestionResult> question_applicability(const Constituent& sentence);

}  // namespace realizer

#endif  // REALIZER_TRANSFORM_HPP
