// A realized word plus the spacing, capitalization and wrapper
// annotations consumed by detokenization.
#ifndef REALIZER_TOKEN_HPP
#define REALIZER_TOKEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "realizer/lang.hpp"

namespace realizer {

struct Node;

struct Token {
  std::string text;
  Lang lang = Lang::en;
  const Node* source = nullptr;  // originating terminal, when any

  bool join_next = false;    // elision apostrophe: no space, direct join
  bool hyphen_next = false;  // post-verbal clitic attachment
  bool punctuation = false;  // inserted .a()/.b() string or list comma
  bool inserted = false;     // terminal added by a transformation
  bool h_aspire = false;     // blocks French elision of the previous word

  std::vector<std::string> tags_before, tags_after;  // resolved HTML
  std::optional<bool> cap;   // capitalization override at this position
};

}  // namespace realizer

#endif  // REALIZER_TOKEN_HPP
