// JSON wire form of a constituent tree. One discriminating key per node
// kind: {"phrase": ...}, {"terminal": ...} or {"dependent": ...}.
#ifndef REALIZER_JSONSPEC_HPP
#define REALIZER_JSONSPEC_HPP

#include <stdexcept>
#include <string>

#include "realizer/syntax.hpp"

namespace realizer {

class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& what, std::string path)
      : std::runtime_error(what + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Builds a tree realizing identically to the equivalent programmatic
// construction. Schema violations throw SpecError with the JSON path;
// unknown feature keys warn and are ignored.
Constituent parse_spec(const std::string& json_text);

// Inverse: parse_spec(serialize_spec(t)) realizes identically to t.
std::string serialize_spec(const Constituent& c);

}  // namespace realizer

#endif  // REALIZER_JSONSPEC_HPP
