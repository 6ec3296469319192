#include "realizer/realize.hpp"

#include <algorithm>

#include "realizer/lemmatize.hpp"
#include "realizer/morphology.hpp"
#include "realizer/numdate.hpp"
#include "realizer/transform.hpp"
#include "realizer/warnings.hpp"
#include "text_util.hpp"

namespace realizer {

namespace tu = textutil;

namespace {

// ---------------------------------------------------------------------
// Dependency normalization: a working dependent maps onto the constituent
// shape (the realization rules are shared between the two notations).
// ---------------------------------------------------------------------

NodeRef normalize_node(const NodeRef& n);

bool adjective_pre_default(const NodeRef& a_terminal) {
  if (a_terminal->lang == Lang::en) return true;
  const auto& pre = Session::current().rules(Lang::fr).adjective_pre;
  return std::find(pre.begin(), pre.end(), a_terminal->lemma) != pre.end();
}

PhraseKind phrase_kind_for(Pos head_pos) {
  switch (head_pos) {
    case Pos::V: return PhraseKind::VP;
    case Pos::A: return PhraseKind::AP;
    case Pos::Adv: return PhraseKind::AdvP;
    case Pos::P: return PhraseKind::PP;
    default: return PhraseKind::NP;
  }
}

NodeRef wrap_phrase(PhraseKind kind, Lang lang, std::vector<NodeRef> children) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::phrase;
  node->pkind = kind;
  node->lang = lang;
  node->cell = AgreementCell::fresh();
  node->children = std::move(children);
  return node;
}

void transfer_annotations(const NodeRef& from, const NodeRef& to) {
  to->fmt = from->fmt;
  to->typ = from->typ;
  to->pronominalized = from->pronominalized;
  to->position_pre = from->position_pre;
  to->inserted = from->inserted;
}

NodeRef normalize_dependent(const NodeRef& n) {
  const Lang lang = n->lang;
  NodeRef head = n->head;

  if (n->rel == Relation::coord) {
    std::vector<NodeRef> children;
    if (head && !head->lemma.empty()) children.push_back(head);
    for (auto& child : n->children) children.push_back(normalize_node(child));
    NodeRef cp = wrap_phrase(PhraseKind::CP, lang, std::move(children));
    transfer_annotations(n, cp);
    link_agreements(cp);
    return cp;
  }

  std::vector<NodeRef> pre, post;
  for (auto& child : n->children) {
    if (!child->is_dependent()) {
      post.push_back(normalize_node(child));
      continue;
    }
    Relation rel = child->rel;
    if (rel == Relation::coord && !child->children.empty() &&
        child->children.front()->is_dependent())
      rel = child->children.front()->rel;  // a coordination acts as its members
    NodeRef mapped = normalize_node(child);
    bool before;
    if (child->position_pre)
      before = *child->position_pre;
    else if (rel == Relation::det || rel == Relation::subj)
      before = true;
    else if (rel == Relation::mod && child->head && child->head->is_terminal(Pos::A))
      before = adjective_pre_default(child->head);
    else
      before = false;
    if (child->position_pre && mapped->is_terminal()) mapped->position_pre = child->position_pre;
    (before ? pre : post).push_back(mapped);
  }

  NodeRef result;
  if (head && head->is_terminal(Pos::V)) {
    std::vector<NodeRef> vp_children = {head};
    for (auto& p : post) vp_children.push_back(p);
    NodeRef vp = wrap_phrase(PhraseKind::VP, lang, std::move(vp_children));
    std::vector<NodeRef> clause_children = pre;
    clause_children.push_back(vp);
    result = wrap_phrase(PhraseKind::S, lang, std::move(clause_children));
  } else if (pre.empty() && post.empty() && head && n->fmt.tags.empty() &&
             n->fmt.before.empty() && n->fmt.after.empty() && !n->fmt.around &&
             !n->fmt.cap && !n->pronominalized && !n->typ.any()) {
    // a bare head needs no wrapping
    if (n->position_pre) head->position_pre = n->position_pre;
    return head;
  } else {
    std::vector<NodeRef> children = pre;
    if (head) children.push_back(head);
    for (auto& p : post) children.push_back(p);
    result = wrap_phrase(head ? phrase_kind_for(head->pos) : PhraseKind::NP, lang,
                         std::move(children));
  }
  transfer_annotations(n, result);
  link_agreements(result);
  return result;
}

NodeRef normalize_node(const NodeRef& n) {
  if (!n) return n;
  if (n->is_terminal()) return n;
  if (n->is_dependent()) return normalize_dependent(n);
  for (auto& child : n->children) child = normalize_node(child);
  return n;
}

// ---------------------------------------------------------------------
// Stringification
// ---------------------------------------------------------------------

struct Stringifier {
  Session& session;
  std::vector<Token> tokens;

  Token make_token(const NodeRef& node, std::string text) {
    Token t;
    t.text = std::move(text);
    t.lang = node->lang;
    t.source = node.get();
    t.inserted = node->inserted;
    return t;
  }

  void push_punct(const NodeRef& node, const std::string& text, std::size_t at) {
    Token t;
    t.text = text;
    t.lang = node->lang;
    t.punctuation = true;
    tokens.insert(tokens.begin() + at, std::move(t));
  }

  void emit_terminal(const NodeRef& node) {
    const std::size_t begin = tokens.size();
    if (node->construction_error) {
      Token t = make_token(node, bracket_lemma(node->lemma));
      tokens.push_back(std::move(t));
      apply_format(node, begin);
      return;
    }
    if (node->verbatim || node->pos == Pos::Q) {
      if (node->attach_hyphen_before && !tokens.empty()) tokens.back().hyphen_next = true;
      tokens.push_back(make_token(node, node->lemma));
      apply_format(node, begin);
      return;
    }
    if (node->pos == Pos::NO) {
      Gender g = node->cell.ngp ? node->cell.ngp->g : Gender::m;
      tokens.push_back(
          make_token(node, format_number(node->number_value, node->number_options,
                                         node->lang, g)));
      apply_format(node, begin);
      return;
    }
    if (node->pos == Pos::DT) {
      if (node->date_value) {
        tokens.push_back(
            make_token(node, format_date(*node->date_value, node->date_options, node->lang)));
      } else {
        tokens.push_back(make_token(node, bracket_lemma(node->lemma)));
      }
      apply_format(node, begin);
      return;
    }

    const LexiconEntry* entry = session.lexicon(node->lang).lookup(node->lemma, node->pos);
    if (!entry) {
      session.warn("not in lexicon", {node->lemma}, node->lang);
      tokens.push_back(make_token(node, bracket_lemma(node->lemma)));
      apply_format(node, begin);
      return;
    }

    FeatureBundle f;
    const NgpCell& ngp = node->cell.ngp ? *node->cell.ngp : NgpCell{};
    f.pe = node->local.pe.value_or(ngp.pe);
    f.n = node->local.n.value_or(ngp.n);
    f.g = node->local.g.value_or(ngp.g);
    if (node->pos == Pos::V) {
      f.t = node->local.t ? *node->local.t
                          : (node->cell.tense ? node->cell.tense->t : std::string("p"));
      f.aux = node->local.aux ? node->local.aux
                              : (node->cell.tense ? node->cell.tense->aux : std::nullopt);
      std::optional<ParticipleAgreement> agree;
      if (node->participle_agree && *node->participle_agree)
        agree = ParticipleAgreement{(*node->participle_agree)->g == Gender::x
                                        ? Gender::m
                                        : (*node->participle_agree)->g,
                                    (*node->participle_agree)->n};
      ConjugateResult r = conjugate(*entry, f, agree);
      if (r.error) {
        session.warn("morphology error", {node->lemma, r.error->reason}, node->lang);
        tokens.push_back(make_token(node, bracket_lemma(node->lemma)));
      } else {
        for (const auto& form : r.forms) {
          Token t = make_token(node, form);
          t.h_aspire = entry->h_aspire;
          tokens.push_back(std::move(t));
        }
      }
      apply_format(node, begin);
      return;
    }

    if (node->pos == Pos::Pro) {
      f.c = node->local.c;
      if (!f.c) f.c = pronoun_default_case(*entry);
    }
    DeclineResult r = decline(*entry, f);
    if (r.error) {
      session.warn("morphology error", {node->lemma, r.error->reason}, node->lang);
      tokens.push_back(make_token(node, bracket_lemma(node->lemma)));
      apply_format(node, begin);
      return;
    }
    if (node->attach_hyphen_before && !tokens.empty()) tokens.back().hyphen_next = true;
    Token t = make_token(node, r.form);
    t.h_aspire = entry->h_aspire;
    tokens.push_back(std::move(t));
    apply_format(node, begin);
  }

  // NP children with the adjectives repositioned around the head noun.
  std::vector<NodeRef> np_order(const NodeRef& node) {
    NodeRef head;
    if (node->head_index >= 0 && node->head_index < static_cast<int>(node->children.size()))
      head = node->children[node->head_index];
    std::vector<NodeRef> pre_adj, post_adj, rest;
    for (auto& child : node->children) {
      const bool adj = child->is_terminal(Pos::A) || child->is_phrase(PhraseKind::AP);
      if (!adj || !head || child == head) {
        rest.push_back(child);
        continue;
      }
      bool before;
      if (child->position_pre)
        before = *child->position_pre;
      else if (child->is_terminal())
        before = adjective_pre_default(child);
      else {
        int h = find_head_index(*child);
        before = h >= 0 ? adjective_pre_default(child->children[h]) : true;
      }
      (before ? pre_adj : post_adj).push_back(child);
    }
    if (!head) return node->children;
    std::vector<NodeRef> out;
    for (auto& child : rest) {
      if (child == head) {
        for (auto& a : pre_adj) out.push_back(a);
        out.push_back(child);
        for (auto& a : post_adj) out.push_back(a);
      } else {
        out.push_back(child);
      }
    }
    return out;
  }

  void emit_coordination(const NodeRef& node) {
    NodeRef conj;
    std::vector<NodeRef> members;
    for (auto& child : node->children) {
      if (child->is_terminal(Pos::C) && !conj) {
        conj = child;
        continue;
      }
      members.push_back(child);
    }
    if (members.empty()) {
      session.warn("empty coordination", {}, node->lang);
      return;
    }
    // the single-element check happens here, at the last minute
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) {
        const bool last_pair = i == members.size() - 1;
        if (last_pair && conj && !conj->lemma.empty())
          emit(conj);
        else
          push_punct(node, ",", tokens.size());
      }
      emit(members[i]);
    }
  }

  void emit_phrase(const NodeRef& node) {
    const std::size_t begin = tokens.size();
    if (node->pkind == PhraseKind::CP) {
      emit_coordination(node);
    } else if (node->pkind == PhraseKind::NP) {
      for (auto& child : np_order(node)) emit(child);
    } else {
      for (auto& child : node->children) emit(child);
    }
    apply_format(node, begin);
  }

  void emit(const NodeRef& node) {
    if (!node) return;
    if (node->is_terminal())
      emit_terminal(node);
    else if (node->is_phrase())
      emit_phrase(node);
    else
      emit_phrase(normalize_node(node));  // stray dependent: map it first
  }

  // Formatting at the constituent boundary: before/after/around strings,
  // then the HTML wrappers, outermost last.
  void apply_format(const NodeRef& node, std::size_t begin) {
    const FormatAnnotations& fmt = node->fmt;
    std::size_t end = tokens.size();
    for (auto it = fmt.before.rbegin(); it != fmt.before.rend(); ++it) {
      push_punct(node, *it, begin);
      ++end;
    }
    for (const auto& s : fmt.after) {
      push_punct(node, s, end);
      ++end;
    }
    if (fmt.around) {
      push_punct(node, *fmt.around, begin);
      ++end;
      push_punct(node, *fmt.around, end);
      ++end;
    }
    if (!fmt.tags.empty() && session.html_output) {
      // attach to the first and last tokens carrying text
      int first = -1, last = -1;
      for (std::size_t i = begin; i < end; ++i)
        if (!tokens[i].text.empty()) {
          if (first < 0) first = static_cast<int>(i);
          last = static_cast<int>(i);
        }
      if (first >= 0) {
        for (auto it = fmt.tags.rbegin(); it != fmt.tags.rend(); ++it) {
          std::string open = "<" + it->name;
          for (const auto& [k, v] : it->attributes) open += " " + k + "=\"" + v + "\"";
          open += ">";
          tokens[first].tags_before.insert(tokens[first].tags_before.begin(), open);
          tokens[last].tags_after.push_back("</" + it->name + ">");
        }
      }
    }
    if (fmt.cap.has_value()) {
      for (std::size_t i = begin; i < end; ++i)
        if (!tokens[i].text.empty()) {
          tokens[i].cap = fmt.cap;
          break;
        }
    }
  }
};

// ---------------------------------------------------------------------
// Detokenization
// ---------------------------------------------------------------------

bool starts_with_any(const std::string& s, std::string_view chars) {
  return !s.empty() && chars.find(s[0]) != std::string_view::npos;
}

bool ends_with_any(const std::string& s, std::string_view chars) {
  return !s.empty() && chars.find(s.back()) != std::string_view::npos;
}

bool is_closing_punct(const std::string& s) {
  if (starts_with_any(s, ",.?!;:)]}%")) return true;
  if (tu::starts_with(s, "'") || tu::starts_with(s, "’") || tu::starts_with(s, "»"))
    return true;
  if (tu::starts_with(s, "…")) return true;  // ellipsis
  return false;
}

bool is_opening_punct(const std::string& s) {
  return ends_with_any(s, "([{") || s == "«";
}

constexpr const char* kNarrowNbsp = " ";

bool wants_french_thin_space(const std::string& s) {
  return starts_with_any(s, "?!;:");
}

}  // namespace

std::vector<Token> stringify(const NodeRef& working_root) {
  Stringifier s{Session::current(), {}};
  s.emit(working_root);
  return s.tokens;
}

std::string detokenize(const std::vector<Token>& tokens, bool top_level, Lang language,
                       const Node* root) {
  Session& session = Session::current();
  // sentence treatment applies to sentences, dependencies and bare terminals
  bool sentence_mode = false;
  bool suppress_final = false;
  bool cap_allowed = true;
  std::string final_punct = ".";
  if (top_level && root) {
    sentence_mode = root->is_phrase(PhraseKind::S) || root->is_phrase(PhraseKind::SP) ||
                    root->is_dependent() || root->is_terminal();
    suppress_final = root->fmt.suppresses_final_punct();
    if (root->fmt.cap.has_value()) cap_allowed = *root->fmt.cap;
    if (!root->typ.quest.empty())
      final_punct = "?";
    else if (root->typ.exc)
      final_punct = "!";
  }

  std::vector<Token> kept;
  for (const auto& t : tokens)
    if (!t.text.empty()) kept.push_back(t);

  if (sentence_mode && cap_allowed) {
    for (auto& t : kept) {
      if (t.cap.has_value() && !*t.cap) break;
      bool has_letter = false;
      for (std::size_t p = 0; p < t.text.size() && !has_letter;) {
        if (tu::is_letter(tu::decode(t.text, p))) has_letter = true;
      }
      if (has_letter) {
        tu::capitalize_first(t.text);
        break;
      }
    }
  }
  for (auto& t : kept)
    if (t.cap.has_value() && *t.cap) tu::capitalize_first(t.text);

  std::string out;
  const Token* prev = nullptr;
  for (const auto& t : kept) {
    if (prev) {
      if (prev->join_next) {
        // direct join (elision apostrophe)
      } else if (prev->hyphen_next) {
        out += "-";
      } else if (is_closing_punct(t.text)) {
        if (t.lang == Lang::fr && session.french_punct_spacing &&
            wants_french_thin_space(t.text))
          out += kNarrowNbsp;
      } else if (is_opening_punct(prev->text)) {
        // no space after an opening bracket
      } else {
        out += " ";
      }
    }
    for (const auto& tag : t.tags_before) out += tag;
    out += t.text;
    for (const auto& tag : t.tags_after) out += tag;
    prev = &t;
  }

  if (sentence_mode && !out.empty() && !suppress_final) {
    const std::string& last = kept.back().text;
    if (!ends_with_any(last, ".?!")) {
      if (language == Lang::fr && session.french_punct_spacing &&
          wants_french_thin_space(final_punct))
        out += kNarrowNbsp;
      out += final_punct;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------

std::string realize(const Constituent& c) { return realize_full(c).text; }

RealizationResult realize_full(const Constituent& c) {
  Session& session = Session::current();
  const std::size_t mark = session.warning_mark();
  RealizationResult result;
  if (c.empty()) {
    session.warn("empty phrase", {});
    result.warnings = session.take_warnings_from(mark);
    return result;
  }

  NodeRef working = deep_copy(c.node());
  working = normalize_node(working);
  if (working->is_phrase() && working->children.empty())
    session.warn("empty phrase", {}, working->lang);
  link_agreements(working);
  apply_pronominalization(working);
  apply_type_options(working);
  link_agreements(working);

  result.tokens = stringify(working);
  apply_spelling_rules(result.tokens, session.rules(Lang::en), session.rules(Lang::fr));
  result.text = detokenize(result.tokens, true, c.node()->lang, c.node().get());
  result.working_tree = working;
  result.warnings = session.take_warnings_from(mark);
  return result;
}

}  // namespace realizer
