#include "realizer/transform.hpp"

#include <algorithm>
#include <map>

#include "realizer/realize.hpp"
#include "realizer/session.hpp"

namespace realizer {

const std::vector<std::string>& question_codes() {
  static const std::vector<std::string> codes = {"yon", "wos", "wod", "wad", "woi", "wai",
                                                 "whe", "whn", "why", "how", "muc", "tag"};
  return codes;
}

bool is_question_code(const std::string& code) {
  const auto& codes = question_codes();
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

namespace {

// ---------------------------------------------------------------------
// Clause access
// ---------------------------------------------------------------------

// A clause is an S/SP with a VP part, or a bare VP.
struct ClauseParts {
  NodeRef clause;   // the S/SP (or the VP itself)
  NodeRef vp;       // where the verb chain lives
  NodeRef subject;  // may be null
};

NodeRef clause_vp(const NodeRef& clause) {
  if (clause->is_phrase(PhraseKind::VP)) return clause;
  for (auto& child : clause->children)
    if (child->is_phrase(PhraseKind::VP)) return child;
  return nullptr;
}

ClauseParts clause_parts(const NodeRef& clause) {
  ClauseParts parts;
  parts.clause = clause;
  parts.vp = clause_vp(clause);
  if (!clause->is_phrase(PhraseKind::VP)) parts.subject = find_subject(*clause);
  return parts;
}

// The contiguous run of verb terminals (the auxiliary chain plus the main
// verb) inside the VP.
struct VerbChain {
  int begin = -1, end = -1;  // [begin, end) in vp->children
  bool empty() const { return begin < 0 || begin >= end; }
};

VerbChain find_chain(const NodeRef& vp) {
  VerbChain chain;
  if (!vp) return chain;
  int n = static_cast<int>(vp->children.size());
  for (int i = 0; i < n; ++i) {
    if (vp->children[i]->is_terminal(Pos::V)) {
      if (chain.begin < 0) chain.begin = i;
      chain.end = i + 1;
    } else if (chain.begin >= 0) {
      // allow the negation adverb inside the chain region
      if (vp->children[i]->is_terminal(Pos::Adv) && vp->children[i]->inserted) continue;
      break;
    }
  }
  return chain;
}

NodeRef finite_verb(const NodeRef& vp, const VerbChain& chain) {
  return chain.empty() ? nullptr : vp->children[chain.begin];
}

NodeRef main_verb(const NodeRef& vp, const VerbChain& chain) {
  if (chain.empty()) return nullptr;
  for (int i = chain.end - 1; i >= chain.begin; --i)
    if (vp->children[i]->is_terminal(Pos::V)) return vp->children[i];
  return nullptr;
}

std::string effective_tense(const NodeRef& verb) {
  if (verb->local.t) return *verb->local.t;
  return verb->cell.tense ? verb->cell.tense->t : "p";
}

NodeRef make_aux(const std::string& lemma, const std::string& tense, const NodeRef& like) {
  auto aux = std::make_shared<Node>();
  aux->kind = Node::Kind::terminal;
  aux->pos = Pos::V;
  aux->lemma = lemma;
  aux->lang = like->lang;
  aux->cell = AgreementCell::fresh();
  aux->cell.ngp = like->cell.ngp;  // agree with whatever the verb agrees with
  aux->local.t = tense;
  aux->cell.tense->t = tense;
  aux->inserted = true;
  return aux;
}

NodeRef make_verbatim(Pos pos, const std::string& text, Lang lang) {
  auto t = std::make_shared<Node>();
  t->kind = Node::Kind::terminal;
  t->pos = pos;
  t->lemma = text;
  t->lang = lang;
  t->cell = AgreementCell::fresh();
  t->verbatim = true;
  t->inserted = true;
  return t;
}

bool past_flavored(const std::string& t) {
  return t == "ps" || t == "c" || t == "i" || t == "pq" || t == "spq" || t == "si";
}

// ---------------------------------------------------------------------
// Pronominalization
// ---------------------------------------------------------------------

// Role of a pronominalized constituent within its parent.
enum class ProRole { subject, object, inside_pp, standalone };

NodeRef make_substitute_pronoun(const NodeRef& original, Case c, Lang lang) {
  auto pro = std::make_shared<Node>();
  pro->kind = Node::Kind::terminal;
  pro->pos = Pos::Pro;
  pro->lemma = lang == Lang::en ? "me" : "moi";  // paradigm anchor
  pro->lang = lang;
  pro->cell = AgreementCell::fresh();
  pro->cell.ngp = original->cell.ngp;  // same person, gender and number
  pro->local.c = c;
  return pro;
}

// French preposition classes for PP pronominalization.
bool is_dative_prep(const std::string& p) { return p == "à"; }
bool is_genitive_prep(const std::string& p) { return p == "de"; }

NodeRef pp_preposition(const NodeRef& pp) {
  for (auto& child : pp->children)
    if (child->is_terminal(Pos::P)) return child;
  return nullptr;
}

// Replaces `child` (a pronominalized NP or PP) inside `parent`.
NodeRef pronoun_for(const NodeRef& child, ProRole role, const NodeRef& parent) {
  const Lang lang = child->lang;
  if (child->is_phrase(PhraseKind::PP)) {
    NodeRef prep = pp_preposition(child);
    const std::string p = prep ? prep->lemma : "";
    if (lang == Lang::fr) {
      if (is_dative_prep(p)) {
        NodeRef pro = make_substitute_pronoun(child, Case::dat, lang);
        pro->clitic = true;
        return pro;
      }
      if (is_genitive_prep(p)) {
        NodeRef pro = make_verbatim(Pos::Pro, "en", lang);
        pro->verbatim = true;
        pro->clitic = true;
        return pro;
      }
      // keep the preposition, tonic pronoun
      NodeRef pro = make_substitute_pronoun(child, Case::tonic, lang);
      auto pp = std::make_shared<Node>(*child);
      pp->children = {prep, pro};
      pp->pronominalized = false;
      return pp;
    }
    NodeRef pro = make_substitute_pronoun(child, Case::tonic, lang);
    if (!prep) return pro;
    auto pp = std::make_shared<Node>(*child);
    pp->children = {prep, pro};
    pp->pronominalized = false;
    return pp;
  }
  Case c = Case::acc;
  if (role == ProRole::subject) c = Case::nom;
  if (role == ProRole::inside_pp) c = Case::tonic;
  NodeRef pro = make_substitute_pronoun(child, c, lang);
  if (lang == Lang::fr && role == ProRole::object) pro->clitic = true;
  return pro;
}

void substitute_children(const NodeRef& parent) {
  if (!parent) return;
  if (parent->is_phrase()) {
    bool seen_verb = false;
    for (auto& child : parent->children) {
      if (child->is_terminal(Pos::V)) {
        seen_verb = true;
        continue;
      }
      if (!child->pronominalized) continue;
      ProRole role = ProRole::standalone;
      if (parent->is_phrase(PhraseKind::S) || parent->is_phrase(PhraseKind::SP))
        role = ProRole::subject;
      else if (parent->is_phrase(PhraseKind::VP))
        role = seen_verb ? ProRole::object : ProRole::standalone;
      else if (parent->is_phrase(PhraseKind::PP))
        role = ProRole::inside_pp;
      NodeRef replacement = pronoun_for(child, role, parent);
      // keep the direct-object link pointing at the realized constituent
      for (auto& sibling : parent->children)
        if (sibling->is_terminal(Pos::V) && sibling->object_link.lock() == child)
          sibling->object_link = replacement;
      child = replacement;
    }
  }
  for (auto& child : parent->children) substitute_children(child);
  if (parent->head) substitute_children(parent->head);
}

}  // namespace

void apply_pronominalization(const NodeRef& tree) {
  substitute_children(tree);
}

// ---------------------------------------------------------------------
// Verb chain construction (modality, aspect, compound tenses)
// ---------------------------------------------------------------------

void expand_verb_chain(const NodeRef& clause, const TypeOptions& typ) {
  auto& session = Session::current();
  ClauseParts parts = clause_parts(clause);
  if (!parts.vp) return;
  VerbChain chain = find_chain(parts.vp);
  NodeRef verb = main_verb(parts.vp, chain);
  if (!verb) return;

  const Lang lang = verb->lang;
  std::string t = effective_tense(verb);
  std::vector<NodeRef> auxes;

  if (lang == Lang::en) {
    std::string req;  // affix required for the next element ("" = finite)
    if (!typ.modal.empty()) {
      auto m = session.rules(Lang::en).modals.find(typ.modal);
      if (m != session.rules(Lang::en).modals.end()) {
        const std::string form = past_flavored(t) ? m->second.second : m->second.first;
        NodeRef modal = make_verbatim(Pos::V, form, lang);
        modal->cell.ngp = verb->cell.ngp;
        auxes.push_back(modal);
        req = "b";
      }
    } else if (t == "f" || t == "c") {
      NodeRef modal = make_verbatim(Pos::V, t == "f" ? "will" : "would", lang);
      modal->cell.ngp = verb->cell.ngp;
      auxes.push_back(modal);
      req = "b";
      t = "p";  // the modal claimed the finiteness
    }
    if (typ.perf) {
      auxes.push_back(make_aux("have", req.empty() ? t : req, verb));
      req = "pp";
    }
    if (typ.prog) {
      auxes.push_back(make_aux("be", req.empty() ? t : req, verb));
      req = "pr";
    }
    if (!req.empty()) {
      verb->local.t = req;
      verb->cell.tense->t = req;
    }
  } else {
    // French: a modal verb is conjugated in place of the main verb, which
    // moves to the infinitive; aspect flags map to compound tenses and
    // are not separate auxiliaries.
    if (!typ.modal.empty()) {
      static const std::map<std::string, std::string> fr_modals = {
          {"poss", "pouvoir"}, {"perm", "pouvoir"}, {"nece", "devoir"},
          {"obli", "devoir"},  {"will", "vouloir"}};
      auto m = fr_modals.find(typ.modal);
      if (m != fr_modals.end()) {
        NodeRef modal = make_aux(m->second, t, verb);
        modal->cell.tense->aux = VAux::avoir;
        auxes.push_back(modal);
        verb->local.t = "b";
        verb->cell.tense->t = "b";
      }
    }
    // split a compound tense into auxiliary + past participle
    NodeRef finite = auxes.empty() ? verb : auxes.front();
    std::string ft = effective_tense(finite);
    if (is_compound_tense(ft)) {
      VAux aux_kind = VAux::avoir;
      if (finite->local.aux)
        aux_kind = *finite->local.aux;
      else if (finite->cell.tense && finite->cell.tense->aux)
        aux_kind = *finite->cell.tense->aux;
      NodeRef aux = make_aux(aux_kind == VAux::avoir ? "avoir" : "être",
                             std::string(compound_aux_tense(ft)), finite);
      finite->local.t = "pp";
      if (finite->cell.tense) finite->cell.tense->t = "pp";
      finite->avoir_participle = aux_kind == VAux::avoir;
      if (aux_kind == VAux::etre) {
        // participle with être agrees with the subject
        finite->participle_agree =
            parts.subject ? parts.subject->cell.ngp : finite->cell.ngp;
      }
      auxes.insert(auxes.begin(), aux);
    }
  }

  if (!auxes.empty())
    parts.vp->children.insert(parts.vp->children.begin() + chain.begin, auxes.begin(),
                              auxes.end());
}

// ---------------------------------------------------------------------
// Passivization
// ---------------------------------------------------------------------

void passivize(const NodeRef& clause) {
  auto& session = Session::current();
  ClauseParts parts = clause_parts(clause);
  if (!parts.vp) return;
  VerbChain chain = find_chain(parts.vp);
  NodeRef verb = main_verb(parts.vp, chain);
  if (!verb) return;
  const Lang lang = verb->lang;

  // the direct object becomes the subject
  int obj_index = -1;
  for (int i = chain.end; i < static_cast<int>(parts.vp->children.size()); ++i) {
    const NodeRef& c = parts.vp->children[i];
    if (c->is_phrase(PhraseKind::NP) || c->is_terminal(Pos::N) || c->is_terminal(Pos::Pro)) {
      obj_index = i;
      break;
    }
  }
  if (obj_index < 0) {
    session.warn("passive without object", {}, lang);
    return;
  }
  NodeRef object = parts.vp->children[obj_index];
  parts.vp->children.erase(parts.vp->children.begin() + obj_index);
  object->clitic = false;  // promoted pronouns surface in subject position
  if (object->is_terminal(Pos::Pro)) object->local.c = Case::nom;

  // the original subject turns into an agent phrase with by/par
  NodeRef agent;
  if (parts.subject) {
    auto& sc = parts.clause->children;
    sc.erase(std::remove(sc.begin(), sc.end(), parts.subject), sc.end());
    NodeRef subj_part = parts.subject;
    if (subj_part->is_terminal(Pos::Pro)) subj_part->local.c = Case::tonic;
    agent = std::make_shared<Node>();
    agent->kind = Node::Kind::phrase;
    agent->pkind = PhraseKind::PP;
    agent->lang = lang;
    agent->cell = AgreementCell::fresh();
    NodeRef by = make_verbatim(Pos::P, lang == Lang::en ? "by" : "par", lang);
    agent->children = {by, subj_part};
  }

  // insert the passive be/être before the main verb, which becomes a past
  // participle agreeing (in French) with the new subject
  const std::string vt = effective_tense(verb);
  NodeRef be = make_aux(lang == Lang::en ? "be" : "être", vt, verb);
  be->cell.ngp = object->cell.ngp;
  if (vt == "pp") {
    // already split into aux + participle: the passive be slips in as a
    // participle itself (a été donnée)
    be->local.t = "pp";
    be->cell.tense->t = "pp";
  }
  verb->local.t = "pp";
  verb->cell.tense->t = "pp";
  verb->avoir_participle = false;
  verb->participle_agree = object->cell.ngp;

  int verb_pos = -1;
  for (int i = 0; i < static_cast<int>(parts.vp->children.size()); ++i)
    if (parts.vp->children[i] == verb) verb_pos = i;
  parts.vp->children.insert(parts.vp->children.begin() + verb_pos, be);

  // the whole finite chain agrees with the new subject
  VerbChain chain2 = find_chain(parts.vp);
  if (NodeRef finite = finite_verb(parts.vp, chain2)) finite->cell.ngp = object->cell.ngp;

  // move the object into subject position
  if (parts.clause != parts.vp) {
    parts.clause->children.insert(parts.clause->children.begin(), object);
    parts.clause->cell.ngp = object->cell.ngp;
  } else {
    // bare VP: keep the promoted subject in front of the chain
    parts.vp->children.insert(parts.vp->children.begin(), object);
  }
  if (agent) parts.vp->children.push_back(agent);
}

// ---------------------------------------------------------------------
// Negation
// ---------------------------------------------------------------------

void negate(const NodeRef& clause, const std::string& neg_word) {
  ClauseParts parts = clause_parts(clause);
  if (!parts.vp) return;
  VerbChain chain = find_chain(parts.vp);
  if (chain.empty()) return;
  NodeRef finite = finite_verb(parts.vp, chain);
  const Lang lang = finite->lang;

  if (lang == Lang::fr) {
    NodeRef ne = make_verbatim(Pos::Adv, "ne", lang);
    NodeRef pas = make_verbatim(Pos::Adv, neg_word.empty() ? "pas" : neg_word, lang);
    parts.vp->children.insert(parts.vp->children.begin() + chain.begin + 1, pas);
    parts.vp->children.insert(parts.vp->children.begin() + chain.begin, ne);
    return;
  }

  const std::string word = neg_word.empty() ? "not" : neg_word;
  const bool has_aux = chain.end - chain.begin > 1;
  NodeRef main = main_verb(parts.vp, chain);
  if (has_aux || main->lemma == "be" || main->verbatim) {
    NodeRef not_adv = make_verbatim(Pos::Adv, word, lang);
    parts.vp->children.insert(parts.vp->children.begin() + chain.begin + 1, not_adv);
    return;
  }
  // do-support: the auxiliary takes over tense and agreement
  NodeRef does = make_aux("do", effective_tense(main), main);
  main->local.t = "b";
  main->cell.tense->t = "b";
  NodeRef not_adv = make_verbatim(Pos::Adv, word, lang);
  parts.vp->children.insert(parts.vp->children.begin() + chain.begin,
                            {does, not_adv});
}

// ---------------------------------------------------------------------
// Interrogation
// ---------------------------------------------------------------------

namespace {

// Ensures the clause starts with an invertible auxiliary; returns it.
NodeRef ensure_aux(const NodeRef& vp) {
  VerbChain chain = find_chain(vp);
  if (chain.empty()) return nullptr;
  NodeRef finite = finite_verb(vp, chain);
  const bool has_aux = chain.end - chain.begin > 1;
  if (has_aux || finite->lemma == "be" || finite->verbatim) return finite;
  NodeRef does = make_aux("do", effective_tense(finite), finite);
  finite->local.t = "b";
  finite->cell.tense->t = "b";
  vp->children.insert(vp->children.begin() + chain.begin, does);
  return does;
}

// Removes the first PP (inside the VP, then at clause level) whose
// preposition licenses `code`.
NodeRef remove_question_pp(const NodeRef& clause, const NodeRef& vp, const std::string& code) {
  auto licensed = [&](const NodeRef& n) -> bool {
    if (!n->is_phrase(PhraseKind::PP)) return false;
    NodeRef prep = pp_preposition(n);
    if (!prep) return false;
    const auto& table = Session::current().rules(n->lang).preposition_questions;
    auto it = table.find(prep->lemma);
    if (it == table.end()) return false;
    return std::find(it->second.begin(), it->second.end(), code) != it->second.end();
  };
  for (auto* holder : {&vp->children, &clause->children}) {
    for (std::size_t i = 0; i < holder->size(); ++i) {
      if (licensed((*holder)[i])) {
        NodeRef removed = (*holder)[i];
        holder->erase(holder->begin() + i);
        return removed;
      }
    }
    if (clause == vp) break;
  }
  return nullptr;
}

NodeRef remove_direct_object(const NodeRef& vp) {
  VerbChain chain = find_chain(vp);
  for (int i = chain.end; i < static_cast<int>(vp->children.size()); ++i) {
    NodeRef c = vp->children[i];
    if (c->is_phrase(PhraseKind::NP) || c->is_terminal(Pos::N) ||
        (c->is_terminal(Pos::Pro) && !c->inserted)) {
      vp->children.erase(vp->children.begin() + i);
      return c;
    }
  }
  return nullptr;
}

}  // namespace

void interrogate_in_place(const NodeRef& clause, const std::string& code, NodeRef* removed) {
  auto& session = Session::current();
  ClauseParts parts = clause_parts(clause);
  if (!parts.vp) return;
  const Lang lang = parts.vp->lang;
  const auto& wh_words = session.rules(lang).wh_words;
  auto wh_of = [&](const std::string& c) -> std::string {
    auto it = wh_words.find(c);
    return it == wh_words.end() ? c : it->second;
  };
  const bool passive = clause->typ.pas || parts.vp->typ.pas;

  if (code == "tag") {
    // aux + subject pronoun appended; polarity opposite to the sentence
    VerbChain chain = find_chain(parts.vp);
    if (chain.empty() || !parts.subject) return;
    NodeRef finite = finite_verb(parts.vp, chain);
    NodeRef aux_copy;
    const bool has_aux = chain.end - chain.begin > 1;
    bool negated = clause->typ.neg || parts.vp->typ.neg;
    if (lang == Lang::fr) {
      NodeRef comma = make_verbatim(Pos::Q, ",", lang);
      NodeRef tagq = make_verbatim(Pos::Q, "n'est-ce pas", lang);
      parts.vp->children.push_back(comma);
      parts.vp->children.push_back(tagq);
      return;
    }
    // the finite auxiliary is echoed; a bare verb echoes with do
    std::string echo_tense = effective_tense(finite);
    if (negated && has_aux && finite->inserted && finite->lemma == "do")
      echo_tense = effective_tense(finite);
    if (has_aux || finite->lemma == "be" || finite->verbatim) {
      if (finite->verbatim)
        aux_copy = make_verbatim(Pos::V, finite->lemma, lang);
      else
        aux_copy = make_aux(finite->lemma, echo_tense, finite);
    } else {
      aux_copy = make_aux("do", echo_tense, finite);
    }
    aux_copy->cell.ngp = parts.subject->cell.ngp;
    NodeRef pro = make_substitute_pronoun(parts.subject, Case::nom, lang);
    pro->inserted = true;
    NodeRef comma = make_verbatim(Pos::Q, ",", lang);
    parts.vp->children.push_back(comma);
    parts.vp->children.push_back(aux_copy);
    parts.vp->children.push_back(pro);
    if (!negated) parts.vp->children.push_back(make_verbatim(Pos::Adv, "not", lang));
    return;
  }

  NodeRef target;  // the removed constituent (the answer)
  bool subject_wh = false;

  if (code == "wos" && !passive) {
    if (parts.subject) {
      auto& sc = parts.clause->children;
      sc.erase(std::remove(sc.begin(), sc.end(), parts.subject), sc.end());
      target = parts.subject;
    }
    subject_wh = true;
  } else if ((code == "wod" || code == "wad") && !passive) {
    target = remove_direct_object(parts.vp);
  } else if ((code == "wod" || code == "wad") && passive) {
    // the surface subject of a passive is the underlying object
    if (parts.subject) {
      auto& sc = parts.clause->children;
      sc.erase(std::remove(sc.begin(), sc.end(), parts.subject), sc.end());
      target = parts.subject;
    }
    subject_wh = true;
  } else if (code == "wos" && passive) {
    // ask for the agent
    for (std::size_t i = 0; i < parts.vp->children.size(); ++i) {
      NodeRef c = parts.vp->children[i];
      if (c->is_phrase(PhraseKind::PP)) {
        NodeRef prep = pp_preposition(c);
        if (prep && (prep->lemma == "by" || prep->lemma == "par")) {
          target = c;
          parts.vp->children.erase(parts.vp->children.begin() + i);
          break;
        }
      }
    }
  } else if (code != "yon") {
    target = remove_question_pp(parts.clause, parts.vp, code);
  }

  if (removed) *removed = target;

  if (subject_wh) {
    // the wh word fills the subject slot and the verb re-agrees with it
    std::string wh = wh_of(code);
    NodeRef wh_node = make_verbatim(Pos::Pro, wh, lang);
    auto fresh = std::make_shared<NgpCell>();
    wh_node->cell.ngp = fresh;
    VerbChain chain = find_chain(parts.vp);
    if (NodeRef finite = finite_verb(parts.vp, chain)) finite->cell.ngp = fresh;
    parts.clause->children.insert(parts.clause->children.begin(), wh_node);
    return;
  }

  if (lang == Lang::fr) {
    // est-ce que style: no inversion
    std::vector<NodeRef> front;
    if (code != "yon") front.push_back(make_verbatim(Pos::Q, wh_of(code), lang));
    front.push_back(make_verbatim(Pos::Q, "est-ce", lang));
    front.push_back(make_verbatim(Pos::Q, "que", lang));
    parts.clause->children.insert(parts.clause->children.begin(), front.begin(), front.end());
    return;
  }

  // English: subject-auxiliary inversion (with do-support when needed)
  NodeRef aux = ensure_aux(parts.vp);
  if (!aux) return;
  if (parts.clause != parts.vp && parts.subject) {
    auto& vc = parts.vp->children;
    vc.erase(std::remove(vc.begin(), vc.end(), aux), vc.end());
    auto& sc = parts.clause->children;
    auto subj_it = std::find(sc.begin(), sc.end(), parts.subject);
    sc.insert(subj_it, aux);
  }
  if (code != "yon") {
    NodeRef wh_node = make_verbatim(Pos::Q, wh_of(code), lang);
    parts.clause->children.insert(parts.clause->children.begin(), wh_node);
  }
}

// ---------------------------------------------------------------------
// French clitic placement
// ---------------------------------------------------------------------

namespace {

int clitic_slot(const Node& pro) {
  if (pro.lemma == "y") return 4;
  if (pro.lemma == "en" && pro.verbatim) return 5;
  const Case c = pro.local.c.value_or(Case::acc);
  const int pe = pro.cell.ngp ? pro.cell.ngp->pe : 3;
  if (c == Case::refl || pe == 1 || pe == 2) return 1;  // me te se nous vous
  if (c == Case::acc) return 2;                         // le la les
  if (c == Case::dat) return 3;                         // lui leur
  return 2;
}

}  // namespace

void place_clitics(const NodeRef& clause) {
  ClauseParts parts = clause_parts(clause);
  if (!parts.vp || parts.vp->lang != Lang::fr) return;
  VerbChain chain = find_chain(parts.vp);
  if (chain.empty()) return;
  NodeRef finite = finite_verb(parts.vp, chain);

  // collect pending clitics in order
  std::vector<NodeRef> clitics;
  auto& vc = parts.vp->children;
  for (auto it = vc.begin(); it != vc.end();) {
    if ((*it)->clitic) {
      clitics.push_back(*it);
      it = vc.erase(it);
    } else {
      ++it;
    }
  }
  if (clitics.empty()) return;
  std::stable_sort(clitics.begin(), clitics.end(), [](const NodeRef& a, const NodeRef& b) {
    return clitic_slot(*a) < clitic_slot(*b);
  });

  const std::string t = effective_tense(finite);
  const bool negated = clause->typ.neg || parts.vp->typ.neg;
  if (t == "ip" && !negated) {
    // post-verbal with hyphens; 1st/2nd person take the tonic form
    int at = static_cast<int>(std::find(vc.begin(), vc.end(), finite) - vc.begin()) + 1;
    for (auto& pro : clitics) {
      if (pro->cell.ngp && pro->cell.ngp->pe != 3) pro->local.c = Case::tonic;
      pro->attach_hyphen_before = true;
      vc.insert(vc.begin() + at, pro);
      ++at;
    }
    return;
  }

  // preverbal: right before the finite verb (after any "ne")
  int at = -1;
  for (int i = 0; i < static_cast<int>(vc.size()); ++i)
    if (vc[i] == finite) at = i;
  if (at < 0) return;
  for (auto it = clitics.rbegin(); it != clitics.rend(); ++it) {
    // participle agreement with a preceding direct object (avoir)
    if ((*it)->local.c.value_or(Case::acc) == Case::acc && !(*it)->verbatim)
      for (int i = chain.begin; i < static_cast<int>(vc.size()); ++i)
        if (vc[i]->is_terminal(Pos::V) && vc[i]->avoir_participle)
          vc[i]->participle_agree = (*it)->cell.ngp;
    vc.insert(vc.begin() + at, *it);
  }
}

// ---------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------

namespace {

TypeOptions merged_typ(const NodeRef& clause) {
  TypeOptions typ = clause->typ;
  if (!clause->is_phrase(PhraseKind::VP)) {
    NodeRef vp = clause_vp(clause);
    if (vp && vp->typ.any()) {
      const TypeOptions& v = vp->typ;
      typ.neg = typ.neg || v.neg;
      if (!v.neg_word.empty()) typ.neg_word = v.neg_word;
      typ.pas = typ.pas || v.pas;
      if (!v.quest.empty()) typ.quest = v.quest;
      if (!v.modal.empty()) typ.modal = v.modal;
      typ.prog = typ.prog || v.prog;
      typ.perf = typ.perf || v.perf;
      typ.exc = typ.exc || v.exc;
    }
  }
  return typ;
}

bool is_clause(const NodeRef& node, const NodeRef& parent) {
  if (node->is_phrase(PhraseKind::S) || node->is_phrase(PhraseKind::SP)) return true;
  if (node->is_phrase(PhraseKind::VP)) {
    // a VP directly inside a clause belongs to that clause; coordinated
    // VPs and free-standing VPs are clauses of their own
    if (!parent) return true;
    if (parent->is_phrase(PhraseKind::S) || parent->is_phrase(PhraseKind::SP)) return false;
    return true;
  }
  return false;
}

void transform_clause(const NodeRef& clause) {
  TypeOptions typ = merged_typ(clause);
  expand_verb_chain(clause, typ);
  if (typ.pas) passivize(clause);
  if (typ.neg) negate(clause, typ.neg_word);
  if (!typ.quest.empty()) interrogate_in_place(clause, typ.quest, nullptr);
  place_clitics(clause);
  link_agreements(clause);
}

void walk(const NodeRef& node, const NodeRef& parent) {
  if (!node) return;
  for (auto& child : node->children) walk(child, node);
  if (is_clause(node, parent)) transform_clause(node);
}

}  // namespace

void apply_type_options(const NodeRef& working_root) {
  walk(working_root, nullptr);
}

}  // namespace realizer
