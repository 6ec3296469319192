// The realization pipeline: working copy, transformations, stringification
// into tokens, spelling rules, formatting and detokenization.
#ifndef REALIZER_REALIZE_HPP
#define REALIZER_REALIZE_HPP

#include <string>
#include <vector>

#include "realizer/session.hpp"
#include "realizer/syntax.hpp"
#include "realizer/token.hpp"

namespace realizer {

// Fills every terminal's realization and flattens the tree into tokens
// (empty realizations are kept; detokenization drops them). Expects a
// working tree with transformations already applied and links re-run.
std::vector<Token> stringify(const NodeRef& working_root);

// Joins tokens into the final string: single spaces except around
// punctuation and joins, sentence capitalization and terminal punctuation
// at the top level for sentences and bare terminals.
std::string detokenize(const std::vector<Token>& tokens, bool top_level, Lang language,
                       const Node* root = nullptr);

struct RealizationResult {
  std::string text;
  std::vector<Warning> warnings;
  std::vector<Token> tokens;  // post-spelling tokens, for inspection
  NodeRef working_tree;       // keeps token source pointers alive
};

// Orchestrates the whole pipeline on a working copy; structural state of
// `c` is never modified, so repeated calls realize identically.
std::string realize(const Constituent& c);
RealizationResult realize_full(const Constituent& c);

}  // namespace realizer

#endif  // REALIZER_REALIZE_HPP
