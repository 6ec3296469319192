// The constituent / dependency tree: terminals, phrases, dependents,
// shared agreement cells and the fluent construction API.
//
// Agreement works through two shared feature groups per the usual
// realizer convention: person/number/gender on one side, tense/auxiliary
// on the other. Aliasing a group between constituents makes a write
// through any of them visible to all, which is how a subject drives its
// verb and a noun drives its determiner and adjectives. Locally set
// terminal features shadow the shared values and are never overwritten
// by propagation.
#ifndef REALIZER_SYNTAX_HPP
#define REALIZER_SYNTAX_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realizer/lang.hpp"
#include "realizer/numdate.hpp"

namespace realizer {

enum class PhraseKind { S, SP, NP, VP, AP, AdvP, PP, CP };
enum class Relation { root, subj, comp, mod, det, coord };

const char* phrase_code(PhraseKind k);
std::optional<PhraseKind> phrase_from_code(std::string_view);
const char* relation_code(Relation r);
std::optional<Relation> relation_from_code(std::string_view);

// Shared person/number/gender group (flat octagon in the usual diagrams).
struct NgpCell {
  int pe = 3;
  Number n = Number::s;
  Gender g = Gender::x;
};

// Shared tense/auxiliary group for verbs (flat hexagon).
struct TenseCell {
  std::string t = "p";
  std::optional<VAux> aux;
};

using NgpRef = std::shared_ptr<NgpCell>;
using TenseRef = std::shared_ptr<TenseCell>;

struct AgreementCell {
  NgpRef ngp;
  TenseRef tense;
  static AgreementCell fresh();
};

// Which fields were set locally on a terminal (dot-notation calls); these
// shadow the shared cell during realization.
struct LocalFeatures {
  std::optional<int> pe;
  std::optional<Number> n;
  std::optional<Gender> g;
  std::optional<std::string> t;
  std::optional<Case> c;
  std::optional<VAux> aux;
};

// The .typ({...}) flag set. Options compose; the application order is
// pronominalization, modality/aspect chain building, passivization,
// negation, interrogation, then French clitic placement.
struct TypeOptions {
  bool neg = false;
  std::string neg_word;   // contrast word replacing not/pas when non-empty
  bool pas = false;
  std::string quest;      // one of the twelve question codes, "" = none
  std::string modal;      // poss perm nece obli will, "" = none
  bool prog = false;
  bool perf = false;
  bool exc = false;

  bool any() const {
    return neg || pas || !quest.empty() || !modal.empty() || prog || perf || exc;
  }
};

struct HtmlTag {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
};

// Formatting applies at constituent boundaries only.
struct FormatAnnotations {
  std::vector<HtmlTag> tags;
  std::vector<std::string> before, after;
  std::optional<std::string> around;
  std::optional<bool> cap;

  bool suppresses_final_punct() const { return !after.empty() || around.has_value(); }
};

struct Node;
using NodeRef = std::shared_ptr<Node>;

struct Node {
  enum class Kind { terminal, phrase, dependent };
  Kind kind = Kind::terminal;
  Lang lang = Lang::en;

  // --- terminal ---
  Pos pos = Pos::N;
  std::string lemma;                       // word, canned text, or payload
  double number_value = 0;                 // NO payload
  std::optional<std::chrono::sys_seconds> date_value;  // DT payload
  NumberOptions number_options;
  DateOptions date_options;
  LocalFeatures local;

  // --- phrase ---
  PhraseKind pkind = PhraseKind::NP;
  std::vector<NodeRef> children;
  int head_index = -1;

  // --- dependent ---
  Relation rel = Relation::root;
  NodeRef head;                            // a Terminal node

  // --- common ---
  AgreementCell cell;
  TypeOptions typ;
  FormatAnnotations fmt;
  std::optional<bool> position_pre;        // .pos("pre"/"post") override
  bool pronominalized = false;
  std::weak_ptr<Node> object_link;         // verb -> its direct object
  // Transformation bookkeeping (meaningful on working copies).
  bool inserted = false;                   // added by a transformation
  std::optional<NgpRef> participle_agree;  // pp agreement source when fixed
  bool verbatim = false;             // realize the lemma as-is (modals, wh words)
  bool clitic = false;               // French pronoun awaiting preverbal placement
  bool avoir_participle = false;     // participle of an avoir compound
  bool attach_hyphen_before = false; // post-verbal imperative clitic
  bool construction_error = false;   // realize bracketed, without further warnings

  bool is_terminal() const { return kind == Kind::terminal; }
  bool is_phrase() const { return kind == Kind::phrase; }
  bool is_phrase(PhraseKind k) const { return is_phrase() && pkind == k; }
  bool is_dependent() const { return kind == Kind::dependent; }
  bool is_terminal(Pos p) const { return is_terminal() && pos == p; }
};

// Value handle over a shared tree node; copies share the underlying
// structure (the usual object semantics, on which expression reuse and
// the clone() contract rely).
class Constituent {
 public:
  Constituent() = default;
  explicit Constituent(NodeRef node) : node_(std::move(node)) {}

  bool empty() const { return node_ == nullptr; }
  const NodeRef& node() const { return node_; }

  // Feature setters. Writes go through the shared cells so that all
  // agreeing constituents observe them; on terminals the value is also
  // pinned locally. Illegal values yield a warning and are ignored.
  Constituent& pe(int person);
  Constituent& n(std::string_view number);
  Constituent& g(std::string_view gender);
  Constituent& t(std::string_view tense);
  Constituent& c(std::string_view pronoun_case);
  Constituent& aux(std::string_view verb_aux);
  Constituent& pos(std::string_view pre_or_post);

  Constituent& typ(TypeOptions options);
  Constituent& pro();                      // mark for pronominalization
  Constituent& tag(std::string name,
                   std::vector<std::pair<std::string, std::string>> attributes = {});
  Constituent& a(std::string after);
  Constituent& b(std::string before);
  Constituent& ba(std::string around);
  Constituent& cap(bool on);
  Constituent& dOpt(const NumberOptions& options);
  Constituent& dOpt(const DateOptions& options);

  // Inserts a child at `position` (append when omitted; out-of-range
  // positions warn and clamp). Re-establishes agreement links.
  Constituent& add(const Constituent& child, std::optional<int> position = std::nullopt);

 private:
  NodeRef node_;
};

// --- Terminal constructors (use the ambient session language) ---
Constituent N(std::string lemma);
Constituent V(std::string lemma);
Constituent A(std::string lemma);
Constituent D(std::string lemma);
Constituent Adv(std::string lemma);
Constituent Pro(std::string lemma);
Constituent P(std::string lemma);
Constituent C(std::string lemma);
Constituent Q(std::string text);
Constituent NO(double value);
Constituent DT(const std::string& iso_instant);

Constituent make_terminal(Pos pos, std::string lemma, std::optional<Lang> language = std::nullopt);
Constituent make_phrase(PhraseKind kind, std::vector<Constituent> children);
Constituent make_dependent(Relation rel, Constituent head, std::vector<Constituent> dependents);

// --- Phrase constructors ---
template <typename... Cs>
Constituent S(Cs... parts) { return make_phrase(PhraseKind::S, {std::move(parts)...}); }
template <typename... Cs>
Constituent SP(Cs... parts) { return make_phrase(PhraseKind::SP, {std::move(parts)...}); }
template <typename... Cs>
Constituent NP(Cs... parts) { return make_phrase(PhraseKind::NP, {std::move(parts)...}); }
template <typename... Cs>
Constituent VP(Cs... parts) { return make_phrase(PhraseKind::VP, {std::move(parts)...}); }
template <typename... Cs>
Constituent AP(Cs... parts) { return make_phrase(PhraseKind::AP, {std::move(parts)...}); }
template <typename... Cs>
Constituent AdvP(Cs... parts) { return make_phrase(PhraseKind::AdvP, {std::move(parts)...}); }
template <typename... Cs>
Constituent PP(Cs... parts) { return make_phrase(PhraseKind::PP, {std::move(parts)...}); }
template <typename... Cs>
Constituent CP(Cs... parts) { return make_phrase(PhraseKind::CP, {std::move(parts)...}); }

// --- Dependent constructors: head terminal first, then dependents ---
template <typename... Ds>
Constituent root(Constituent head, Ds... deps) {
  return make_dependent(Relation::root, std::move(head), {std::move(deps)...});
}
template <typename... Ds>
Constituent subj(Constituent head, Ds... deps) {
  return make_dependent(Relation::subj, std::move(head), {std::move(deps)...});
}
template <typename... Ds>
Constituent comp(Constituent head, Ds... deps) {
  return make_dependent(Relation::comp, std::move(head), {std::move(deps)...});
}
template <typename... Ds>
Constituent mod(Constituent head, Ds... deps) {
  return make_dependent(Relation::mod, std::move(head), {std::move(deps)...});
}
template <typename... Ds>
Constituent det(Constituent head, Ds... deps) {
  return make_dependent(Relation::det, std::move(head), {std::move(deps)...});
}
template <typename... Ds>
Constituent coord(Constituent head, Ds... deps) {
  return make_dependent(Relation::coord, std::move(head), {std::move(deps)...});
}

// Re-establishes all agreement aliases of the tree: phrase cells follow
// their heads, verbs follow their subjects, determiners and adjectives
// follow their noun. Idempotent; re-run after add() and transformations.
void link_agreements(const NodeRef& node);

// Writes the combined person/number/gender of a coordination into its
// cell: and-like conjunctions pluralize, or-like take the last element's
// number, person is the minimum, French gender is m if any member is m.
void coordinate_features(const NodeRef& coord_node);

// Independent deep copy implemented by serializing the constituent to its
// expression form and re-evaluating it; no cell aliasing survives.
Constituent clone(const Constituent& c);

// Structure-preserving copy for the per-realization working tree: cell
// aliasing inside the tree is reproduced, nothing is shared with the
// original.
NodeRef deep_copy(const NodeRef& node);

// Head-child index for a phrase per the first-of-kind rules (NP -> first
// N or Pro, VP -> first V, ...). Returns -1 when the phrase is headless.
int find_head_index(const Node& phrase);

// The subject child of a clause (S/SP) node, if any: the first nominal
// child before the verb part.
NodeRef find_subject(const Node& clause);

}  // namespace realizer

#endif  // REALIZER_SYNTAX_HPP
