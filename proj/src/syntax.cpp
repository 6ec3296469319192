#include "realizer/syntax.hpp"

#include <algorithm>
#include <unordered_map>

#include "realizer/morphology.hpp"
#include "realizer/numdate.hpp"
#include "realizer/session.hpp"
#include "realizer/transform.hpp"

namespace realizer {

const char* phrase_code(PhraseKind k) {
  switch (k) {
    case PhraseKind::S: return "S";
    case PhraseKind::SP: return "SP";
    case PhraseKind::NP: return "NP";
    case PhraseKind::VP: return "VP";
    case PhraseKind::AP: return "AP";
    case PhraseKind::AdvP: return "AdvP";
    case PhraseKind::PP: return "PP";
    case PhraseKind::CP: return "CP";
  }
  return "?";
}

std::optional<PhraseKind> phrase_from_code(std::string_view code) {
  static const PhraseKind all[] = {PhraseKind::S, PhraseKind::SP, PhraseKind::NP,
                                   PhraseKind::VP, PhraseKind::AP, PhraseKind::AdvP,
                                   PhraseKind::PP, PhraseKind::CP};
  for (PhraseKind k : all)
    if (code == phrase_code(k)) return k;
  return std::nullopt;
}

const char* relation_code(Relation r) {
  switch (r) {
    case Relation::root: return "root";
    case Relation::subj: return "subj";
    case Relation::comp: return "comp";
    case Relation::mod: return "mod";
    case Relation::det: return "det";
    case Relation::coord: return "coord";
  }
  return "?";
}

std::optional<Relation> relation_from_code(std::string_view code) {
  static const Relation all[] = {Relation::root, Relation::subj, Relation::comp,
                                 Relation::mod, Relation::det, Relation::coord};
  for (Relation r : all)
    if (code == relation_code(r)) return r;
  return std::nullopt;
}

AgreementCell AgreementCell::fresh() {
  return {std::make_shared<NgpCell>(), std::make_shared<TenseCell>()};
}

// ---------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------

Constituent make_terminal(Pos pos, std::string lemma, std::optional<Lang> language) {
  auto& session = Session::current();
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::terminal;
  node->pos = pos;
  node->lemma = std::move(lemma);
  node->lang = language.value_or(session.language());
  node->cell = AgreementCell::fresh();
  if (is_word_pos(pos)) {
    const LexiconEntry* entry = session.lexicon(node->lang).lookup(node->lemma, pos);
    if (entry) {
      if (entry->inherent_gender != Gender::x) node->cell.ngp->g = entry->inherent_gender;
      if (entry->inherent_number) node->cell.ngp->n = *entry->inherent_number;
      if (entry->default_aux) node->cell.tense->aux = entry->default_aux;
    }
    // missing entries are reported at realization time, not here
  }
  return Constituent(node);
}

Constituent N(std::string lemma) { return make_terminal(Pos::N, std::move(lemma)); }
Constituent V(std::string lemma) { return make_terminal(Pos::V, std::move(lemma)); }
Constituent A(std::string lemma) { return make_terminal(Pos::A, std::move(lemma)); }
Constituent D(std::string lemma) { return make_terminal(Pos::D, std::move(lemma)); }
Constituent Adv(std::string lemma) { return make_terminal(Pos::Adv, std::move(lemma)); }
Constituent Pro(std::string lemma) { return make_terminal(Pos::Pro, std::move(lemma)); }
Constituent P(std::string lemma) { return make_terminal(Pos::P, std::move(lemma)); }
Constituent C(std::string lemma) { return make_terminal(Pos::C, std::move(lemma)); }
Constituent Q(std::string text) { return make_terminal(Pos::Q, std::move(text)); }

Constituent NO(double value) {
  Constituent c = make_terminal(Pos::NO, std::to_string(value));
  c.node()->number_value = value;
  return c;
}

Constituent DT(const std::string& iso_instant) {
  Constituent c = make_terminal(Pos::DT, iso_instant);
  auto t = parse_instant(iso_instant);
  if (!t)
    Session::current().warn("bad parameter", {"date", iso_instant});
  else
    c.node()->date_value = t;
  return c;
}

Constituent make_phrase(PhraseKind kind, std::vector<Constituent> children) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::phrase;
  node->pkind = kind;
  node->lang = Session::current().language();
  node->cell = AgreementCell::fresh();
  for (auto& c : children)
    if (!c.empty()) node->children.push_back(c.node());
  link_agreements(node);
  return Constituent(node);
}

Constituent make_dependent(Relation rel, Constituent head, std::vector<Constituent> deps) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::dependent;
  node->rel = rel;
  node->lang = Session::current().language();
  node->cell = AgreementCell::fresh();
  if (!head.empty()) {
    if (head.node()->is_terminal()) {
      node->head = head.node();
    } else {
      Session::current().warn("dependent needs terminal", {relation_code(rel)});
      node->head = head.node();  // tolerated; realized as-is
    }
  }
  for (auto& d : deps)
    if (!d.empty()) node->children.push_back(d.node());
  link_agreements(node);
  return Constituent(node);
}

// ---------------------------------------------------------------------
// Heads, subjects, linking
// ---------------------------------------------------------------------

namespace {

bool is_nominal(const Node& n) {
  if (n.is_phrase(PhraseKind::NP)) return true;
  if (n.is_terminal() &&
      (n.pos == Pos::Pro || n.pos == Pos::N || n.pos == Pos::NO))
    return true;
  if (n.is_phrase(PhraseKind::CP)) {
    for (const auto& c : n.children)
      if (!c->is_terminal(Pos::C)) return is_nominal(*c);
  }
  if (n.is_dependent()) return n.head && is_nominal(*n.head);
  return false;
}

int first_child(const Node& p, Pos pos) {
  for (std::size_t i = 0; i < p.children.size(); ++i)
    if (p.children[i]->is_terminal(pos)) return static_cast<int>(i);
  return -1;
}

int first_phrase_child(const Node& p, PhraseKind k) {
  for (std::size_t i = 0; i < p.children.size(); ++i)
    if (p.children[i]->is_phrase(k)) return static_cast<int>(i);
  return -1;
}

// Aliases the person/number/gender group of `node` (and of the children
// that agree with it) to `target`.
void alias_ngp(const NodeRef& node, const NgpRef& target) {
  if (!node) return;
  node->cell.ngp = target;
  if (node->is_phrase()) {
    for (auto& child : node->children)
      if (child->is_terminal(Pos::D) || child->is_terminal(Pos::A) ||
          child->is_phrase(PhraseKind::AP))
        alias_ngp(child, target);
    if (node->head_index >= 0 && node->head_index < static_cast<int>(node->children.size()))
      alias_ngp(node->children[node->head_index], target);
  } else if (node->is_dependent()) {
    if (node->head) node->head->cell.ngp = target;
    for (auto& child : node->children)
      if (child->is_dependent() &&
          (child->rel == Relation::det ||
           (child->rel == Relation::mod && child->head && child->head->is_terminal(Pos::A))))
        alias_ngp(child, target);
  }
}

// Verb terminals that carry finite agreement in a clause: a V terminal
// directly under the clause (inversion), the head of each VP child, and
// the heads of VPs inside a coordination of VPs.
void finite_verbs(const NodeRef& clause, std::vector<NodeRef>& out) {
  for (auto& child : clause->children) {
    if (child->is_terminal(Pos::V)) {
      out.push_back(child);
      return;  // the first verb carries the agreement in an inverted clause
    }
    if (child->is_phrase(PhraseKind::VP)) {
      int h = first_child(*child, Pos::V);
      if (h >= 0) out.push_back(child->children[h]);
      return;
    }
    if (child->is_phrase(PhraseKind::CP)) {
      bool vp_coord = false;
      for (auto& m : child->children)
        if (m->is_phrase(PhraseKind::VP)) vp_coord = true;
      if (vp_coord) {
        for (auto& m : child->children)
          if (m->is_phrase(PhraseKind::VP)) {
            int h = first_child(*m, Pos::V);
            if (h >= 0) out.push_back(m->children[h]);
          }
        return;
      }
    }
  }
}

void link_predicative_adjectives(const NodeRef& vp, const NgpRef& subject_ngp) {
  for (auto& child : vp->children) {
    if (child->is_terminal(Pos::A) || child->is_phrase(PhraseKind::AP))
      alias_ngp(child, subject_ngp);
    if (child->is_phrase(PhraseKind::CP))  // coordinated predicates
      for (auto& m : child->children)
        if (m->is_phrase(PhraseKind::VP)) link_predicative_adjectives(m, subject_ngp);
  }
}

// The first nominal complement after the verb: the direct object.
NodeRef direct_object(const NodeRef& vp) {
  bool seen_verb = false;
  for (auto& child : vp->children) {
    if (child->is_terminal(Pos::V)) {
      seen_verb = true;
      continue;
    }
    if (seen_verb && (child->is_phrase(PhraseKind::NP) || child->is_terminal(Pos::N) ||
                      child->is_terminal(Pos::Pro)))
      return child;
  }
  return nullptr;
}

void link_phrase(const NodeRef& node);
void link_dependent(const NodeRef& node);

void link_node(const NodeRef& node) {
  if (!node) return;
  if (node->is_phrase()) link_phrase(node);
  else if (node->is_dependent()) link_dependent(node);
}

void link_phrase(const NodeRef& node) {
  for (auto& child : node->children) link_node(child);

  node->head_index = find_head_index(*node);
  const NodeRef head = node->head_index >= 0 ? node->children[node->head_index] : nullptr;
  if (head) node->cell = head->cell;

  switch (node->pkind) {
    case PhraseKind::NP: {
      if (!head) break;
      for (auto& child : node->children) {
        if (child == head) continue;
        if (child->is_terminal(Pos::D) || child->is_terminal(Pos::A) ||
            child->is_phrase(PhraseKind::AP) || child->is_terminal(Pos::NO))
          alias_ngp(child, node->cell.ngp);
        // the numeric value drives the noun's number
        if (child->is_terminal(Pos::NO) && !head->local.n)
          node->cell.ngp->n = number_agreement(child->number_value, child->lang);
      }
      break;
    }
    case PhraseKind::PP: {
      int np = first_phrase_child(*node, PhraseKind::NP);
      if (np < 0) np = first_child(*node, Pos::N);
      if (np < 0) np = first_child(*node, Pos::Pro);
      if (np >= 0) node->cell.ngp = node->children[np]->cell.ngp;
      break;
    }
    case PhraseKind::CP:
      coordinate_features(node);
      break;
    case PhraseKind::S:
    case PhraseKind::SP: {
      // tense group follows the verb part
      int vp = first_phrase_child(*node, PhraseKind::VP);
      int v = first_child(*node, Pos::V);
      if (vp >= 0)
        node->cell.tense = node->children[vp]->cell.tense;
      else if (v >= 0)
        node->cell.tense = node->children[v]->cell.tense;

      NodeRef subject = find_subject(*node);
      if (subject) {
        node->cell.ngp = subject->cell.ngp;
        std::vector<NodeRef> verbs;
        finite_verbs(node, verbs);
        for (auto& verb : verbs) verb->cell.ngp = subject->cell.ngp;
        for (auto& child : node->children)
          if (child->is_phrase(PhraseKind::VP))
            link_predicative_adjectives(child, subject->cell.ngp);
          else if (child->is_phrase(PhraseKind::CP))
            for (auto& m : child->children)
              if (m->is_phrase(PhraseKind::VP))
                link_predicative_adjectives(m, subject->cell.ngp);
      }
      // remember the direct object for French participle agreement
      for (auto& child : node->children)
        if (child->is_phrase(PhraseKind::VP)) {
          int h = first_child(*child, Pos::V);
          if (h >= 0)
            if (NodeRef obj = direct_object(child)) child->children[h]->object_link = obj;
        }
      break;
    }
    default:
      break;
  }
}

NodeRef coord_member_cellholder(const NodeRef& member) {
  return member;
}

void link_dependent(const NodeRef& node) {
  for (auto& child : node->children) link_node(child);
  if (node->head) node->cell = node->head->cell;

  if (node->rel == Relation::coord) {
    coordinate_features(node);
    return;
  }

  const bool nominal_head =
      node->head && (node->head->is_terminal(Pos::N) || node->head->is_terminal(Pos::Pro));
  if (nominal_head) {
    for (auto& child : node->children) {
      if (!child->is_dependent()) continue;
      if (child->rel == Relation::det ||
          (child->rel == Relation::mod && child->head &&
           (child->head->is_terminal(Pos::A) || child->head->is_terminal(Pos::D)))) {
        alias_ngp(child, node->cell.ngp);
        if (child->head && child->head->is_terminal(Pos::NO) && !node->head->local.n)
          node->cell.ngp->n =
              number_agreement(child->head->number_value, child->head->lang);
      }
    }
  }

  if (node->head && node->head->is_terminal(Pos::V)) {
    NodeRef subject;
    NodeRef object;
    for (auto& child : node->children) {
      if (!child->is_dependent()) continue;
      if (!subject && child->rel == Relation::subj) subject = child;
      if (!subject && child->rel == Relation::coord && !child->children.empty() &&
          child->children.front()->is_dependent() &&
          child->children.front()->rel == Relation::subj)
        subject = child;
      if (!object && child->rel == Relation::comp && child->head && is_nominal(*child->head))
        object = child;
    }
    if (subject) {
      node->head->cell.ngp = subject->cell.ngp;
      node->cell.ngp = subject->cell.ngp;
      for (auto& child : node->children)
        if (child->is_dependent() && child->rel == Relation::mod && child->head &&
            child->head->is_terminal(Pos::A))
          alias_ngp(child, subject->cell.ngp);
    }
    if (object) node->head->object_link = object;
  }
}

}  // namespace

int find_head_index(const Node& phrase) {
  if (!phrase.is_phrase()) return -1;
  auto first_of = [&](Pos p) { return first_child(phrase, p); };
  int h = -1;
  switch (phrase.pkind) {
    case PhraseKind::NP:
      h = first_of(Pos::N);
      if (h < 0) h = first_of(Pos::Pro);
      if (h < 0) h = first_of(Pos::NO);
      break;
    case PhraseKind::VP: h = first_of(Pos::V); break;
    case PhraseKind::AP: h = first_of(Pos::A); break;
    case PhraseKind::AdvP: h = first_of(Pos::Adv); break;
    case PhraseKind::PP: h = first_of(Pos::P); break;
    case PhraseKind::CP: h = first_of(Pos::C); break;
    case PhraseKind::S:
    case PhraseKind::SP: {
      h = first_phrase_child(phrase, PhraseKind::VP);
      if (h < 0) h = first_of(Pos::V);
      break;
    }
  }
  if (h >= 0) return h;
  // headless: fall back to the first terminal, then the first child
  for (std::size_t i = 0; i < phrase.children.size(); ++i)
    if (phrase.children[i]->is_terminal()) return static_cast<int>(i);
  return phrase.children.empty() ? -1 : 0;
}

NodeRef find_subject(const Node& clause) {
  for (const auto& child : clause.children) {
    if (child->is_terminal(Pos::V) || child->is_phrase(PhraseKind::VP)) break;
    if (child->inserted) continue;  // fronted auxiliaries / wh words
    if (is_nominal(*child)) return child;
  }
  return nullptr;
}

void link_agreements(const NodeRef& node) { link_node(node); }

void coordinate_features(const NodeRef& node) {
  if (!node) return;
  std::vector<NodeRef> members;
  std::string conj;
  if (node->is_phrase()) {
    for (auto& child : node->children) {
      if (child->is_terminal(Pos::C)) {
        conj = child->lemma;
        continue;
      }
      members.push_back(child);
    }
  } else if (node->is_dependent()) {
    if (node->head && node->head->is_terminal(Pos::C)) conj = node->head->lemma;
    Relation common = Relation::coord;
    bool first = true;
    for (auto& child : node->children) {
      if (!child->is_dependent()) continue;
      if (first) {
        common = child->rel;
        first = false;
      } else if (child->rel != common) {
        Session::current().warn("mixed relations in coordination", {relation_code(child->rel)});
      }
      members.push_back(child);
    }
  }

  if (members.empty()) {
    Session::current().warn("empty coordination", {});
    return;
  }
  // coordinated verb phrases keep their own agreement
  if (members.front()->is_phrase(PhraseKind::VP)) return;

  if (members.size() == 1) {
    node->cell.ngp = members.front()->cell.ngp;
    return;
  }

  auto combined = std::make_shared<NgpCell>();
  const bool and_like = conj == "and" || conj == "et";
  combined->n = and_like ? Number::p : members.back()->cell.ngp->n;
  int pe = 3;
  for (auto& m : members) pe = std::min(pe, m->cell.ngp->pe);
  combined->pe = pe;
  Gender g = Gender::x;
  bool any_m = false, any_f = false, all_same = true;
  Gender first_g = members.front()->cell.ngp->g;
  for (auto& m : members) {
    Gender mg = m->cell.ngp->g;
    any_m = any_m || mg == Gender::m;
    any_f = any_f || mg == Gender::f;
    all_same = all_same && mg == first_g;
  }
  if (node->lang == Lang::fr)
    g = any_m ? Gender::m : (any_f ? Gender::f : Gender::x);
  else
    g = all_same ? first_g : Gender::x;
  combined->g = g;
  node->cell.ngp = combined;
}

// ---------------------------------------------------------------------
// Deep copy (structure-preserving, for the realization working tree)
// ---------------------------------------------------------------------

namespace {

struct CopyMaps {
  std::unordered_map<NgpCell*, NgpRef> ngp;
  std::unordered_map<TenseCell*, TenseRef> tense;
  std::unordered_map<Node*, NodeRef> nodes;
};

NgpRef copy_ngp(const NgpRef& ref, CopyMaps& maps) {
  if (!ref) return nullptr;
  auto it = maps.ngp.find(ref.get());
  if (it != maps.ngp.end()) return it->second;
  auto copy = std::make_shared<NgpCell>(*ref);
  maps.ngp[ref.get()] = copy;
  return copy;
}

TenseRef copy_tense(const TenseRef& ref, CopyMaps& maps) {
  if (!ref) return nullptr;
  auto it = maps.tense.find(ref.get());
  if (it != maps.tense.end()) return it->second;
  auto copy = std::make_shared<TenseCell>(*ref);
  maps.tense[ref.get()] = copy;
  return copy;
}

NodeRef copy_node(const NodeRef& node, CopyMaps& maps) {
  if (!node) return nullptr;
  auto copy = std::make_shared<Node>(*node);
  maps.nodes[node.get()] = copy;
  copy->cell.ngp = copy_ngp(node->cell.ngp, maps);
  copy->cell.tense = copy_tense(node->cell.tense, maps);
  if (node->participle_agree)
    copy->participle_agree = copy_ngp(*node->participle_agree, maps);
  copy->head = copy_node(node->head, maps);
  copy->children.clear();
  for (const auto& child : node->children) copy->children.push_back(copy_node(child, maps));
  return copy;
}

void remap_links(const NodeRef& node, CopyMaps& maps) {
  if (!node) return;
  if (auto target = node->object_link.lock()) {
    auto it = maps.nodes.find(target.get());
    node->object_link = it != maps.nodes.end() ? it->second : NodeRef();
  }
  remap_links(node->head, maps);
  for (const auto& child : node->children) remap_links(child, maps);
}

}  // namespace

NodeRef deep_copy(const NodeRef& node) {
  CopyMaps maps;
  NodeRef copy = copy_node(node, maps);
  remap_links(copy, maps);
  return copy;
}

// ---------------------------------------------------------------------
// Fluent setters
// ---------------------------------------------------------------------

namespace {

void warn_bad_value(const std::string& expected, const std::string& got) {
  Session::current().warn("bad parameter", {expected, got});
}

// Finds the terminal that should receive a terminal-only feature.
NodeRef feature_terminal(const NodeRef& node, Pos wanted) {
  if (!node) return nullptr;
  if (node->is_terminal()) return node->pos == wanted ? node : nullptr;
  if (node->is_dependent()) return node->head && node->head->pos == wanted ? node->head : nullptr;
  if (node->head_index >= 0 && node->head_index < static_cast<int>(node->children.size()))
    return feature_terminal(node->children[node->head_index], wanted);
  return nullptr;
}

}  // namespace

Constituent& Constituent::pe(int person) {
  if (!node_) return *this;
  if (person < 1 || person > 3) {
    warn_bad_value("1, 2 or 3", std::to_string(person));
    return *this;
  }
  node_->cell.ngp->pe = person;
  if (node_->is_terminal()) node_->local.pe = person;
  return *this;
}

Constituent& Constituent::n(std::string_view number) {
  if (!node_) return *this;
  auto v = number_from_code(number);
  if (!v) {
    warn_bad_value("s or p", std::string(number));
    return *this;
  }
  node_->cell.ngp->n = *v;
  if (node_->is_terminal()) node_->local.n = *v;
  return *this;
}

Constituent& Constituent::g(std::string_view gender) {
  if (!node_) return *this;
  auto v = gender_from_code(gender);
  if (!v) {
    warn_bad_value("m, f or x", std::string(gender));
    return *this;
  }
  node_->cell.ngp->g = *v;
  if (node_->is_terminal()) node_->local.g = *v;
  return *this;
}

Constituent& Constituent::t(std::string_view tense) {
  if (!node_) return *this;
  if (!is_valid_tense(tense)) {
    warn_bad_value("a tense code", std::string(tense));
    return *this;
  }
  node_->cell.tense->t = std::string(tense);
  if (node_->is_terminal()) node_->local.t = std::string(tense);
  return *this;
}

Constituent& Constituent::c(std::string_view pronoun_case) {
  if (!node_) return *this;
  auto v = case_from_code(pronoun_case);
  if (!v) {
    warn_bad_value("nom, acc, dat, refl or tonic", std::string(pronoun_case));
    return *this;
  }
  NodeRef target = node_->is_terminal(Pos::Pro) ? node_ : feature_terminal(node_, Pos::Pro);
  if (!target) {
    Session::current().warn("bad constituent for option", {"c"});
    return *this;
  }
  target->local.c = *v;
  return *this;
}

Constituent& Constituent::aux(std::string_view verb_aux) {
  if (!node_) return *this;
  auto v = aux_from_code(verb_aux);
  if (!v) {
    warn_bad_value("av or êt", std::string(verb_aux));
    return *this;
  }
  node_->cell.tense->aux = *v;
  if (node_->is_terminal()) node_->local.aux = *v;
  return *this;
}

Constituent& Constituent::pos(std::string_view pre_or_post) {
  if (!node_) return *this;
  if (pre_or_post == "pre")
    node_->position_pre = true;
  else if (pre_or_post == "post")
    node_->position_pre = false;
  else
    warn_bad_value("pre or post", std::string(pre_or_post));
  return *this;
}

Constituent& Constituent::typ(TypeOptions options) {
  if (!node_) return *this;
  if (!options.quest.empty() && !is_question_code(options.quest)) {
    warn_bad_value("a question code", options.quest);
    options.quest.clear();
  }
  if (!options.modal.empty() && options.modal != "poss" && options.modal != "perm" &&
      options.modal != "nece" && options.modal != "obli" && options.modal != "will") {
    warn_bad_value("poss, perm, nece, obli or will", options.modal);
    options.modal.clear();
  }
  node_->typ = std::move(options);
  return *this;
}

Constituent& Constituent::pro() {
  if (!node_) return *this;
  const bool nominal =
      node_->is_phrase(PhraseKind::NP) || node_->is_phrase(PhraseKind::PP) ||
      (node_->is_dependent() && node_->head &&
       (node_->head->is_terminal(Pos::N) || node_->head->is_terminal(Pos::P) ||
        node_->head->is_terminal(Pos::Pro))) ||
      node_->is_terminal(Pos::N);
  if (!nominal) {
    Session::current().warn("bad constituent for option", {"pro"});
    return *this;
  }
  node_->pronominalized = true;
  return *this;
}

Constituent& Constituent::tag(std::string name,
                              std::vector<std::pair<std::string, std::string>> attributes) {
  if (!node_) return *this;
  node_->fmt.tags.push_back({std::move(name), std::move(attributes)});
  return *this;
}

Constituent& Constituent::a(std::string after) {
  if (node_) node_->fmt.after.push_back(std::move(after));
  return *this;
}

Constituent& Constituent::b(std::string before) {
  if (node_) node_->fmt.before.push_back(std::move(before));
  return *this;
}

Constituent& Constituent::ba(std::string around) {
  if (node_) node_->fmt.around = std::move(around);
  return *this;
}

Constituent& Constituent::cap(bool on) {
  if (node_) node_->fmt.cap = on;
  return *this;
}

Constituent& Constituent::dOpt(const NumberOptions& options) {
  if (!node_) return *this;
  if (!node_->is_terminal(Pos::NO)) {
    Session::current().warn("bad constituent for option", {"dOpt"});
    return *this;
  }
  if (options.nat && options.raw)
    Session::current().warn("bad parameter", {"nat or raw", "both"});
  node_->number_options = options;
  return *this;
}

Constituent& Constituent::dOpt(const DateOptions& options) {
  if (!node_) return *this;
  if (!node_->is_terminal(Pos::DT)) {
    Session::current().warn("bad constituent for option", {"dOpt"});
    return *this;
  }
  node_->date_options = options;
  return *this;
}

Constituent& Constituent::add(const Constituent& child, std::optional<int> position) {
  if (!node_ || child.empty()) return *this;
  if (!node_->is_phrase() && !node_->is_dependent()) {
    Session::current().warn("bad constituent for option", {"add"});
    return *this;
  }
  int size = static_cast<int>(node_->children.size());
  int at = position.value_or(size);
  if (at < 0 || at > size) {
    Session::current().warn("bad position", {std::to_string(size), std::to_string(at)});
    at = std::clamp(at, 0, size);
  }
  node_->children.insert(node_->children.begin() + at, child.node());
  link_agreements(node_);
  return *this;
}

}  // namespace realizer
