// The bilingual warning table. Messages are realized by the realizer
// itself from constituent specifications; keys without a specification
// fall back to plain text.
#ifndef REALIZER_WARNINGS_HPP
#define REALIZER_WARNINGS_HPP

#include <string>
#include <vector>

#include "realizer/lang.hpp"

namespace realizer {

// All known warning keys (25).
const std::vector<std::string>& warning_keys();
// Keys whose message is built as a constituent tree and self-realized.
const std::vector<std::string>& self_realized_warning_keys();

// Realizes the message for `code` in `language`. Unknown codes produce a
// generic "unknown warning" message. Never throws; never recurses into
// further warnings.
std::string render_warning(const std::string& code, const std::vector<std::string>& args,
                           Lang language);

// Wraps an erroneous terminal for output: [[lemma]].
std::string bracket_lemma(const std::string& lemma);

}  // namespace realizer

#endif  // REALIZER_WARNINGS_HPP
