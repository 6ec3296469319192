#include "realizer/jsonspec.hpp"

#include <nlohmann/json.hpp>

#include "realizer/numdate.hpp"
#include "realizer/session.hpp"

namespace realizer {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------

Constituent parse_node(const json& j, const std::string& path, Lang inherited);

void apply_props(Constituent& c, const json& props, const std::string& path) {
  auto& session = Session::current();
  for (auto it = props.begin(); it != props.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    try {
      if (key == "n") c.n(v.get<std::string>());
      else if (key == "g") c.g(v.get<std::string>());
      else if (key == "pe") c.pe(v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>());
      else if (key == "t") c.t(v.get<std::string>());
      else if (key == "c") c.c(v.get<std::string>());
      else if (key == "aux") c.aux(v.get<std::string>());
      else if (key == "pos") c.pos(v.get<std::string>());
      else if (key == "pro") { if (v.is_boolean() ? v.get<bool>() : true) c.pro(); }
      else if (key == "cap") c.cap(v.get<bool>());
      else if (key == "tag") {
        if (v.is_string()) {
          c.tag(v.get<std::string>());
        } else if (v.is_array()) {
          for (const auto& t : v) {
            if (t.is_string()) { c.tag(t.get<std::string>()); continue; }
            std::vector<std::pair<std::string, std::string>> attrs;
            if (t.size() > 1 && t[1].is_object())
              for (auto a = t[1].begin(); a != t[1].end(); ++a)
                attrs.emplace_back(a.key(), a.value().get<std::string>());
            c.tag(t[0].get<std::string>(), std::move(attrs));
          }
        }
      }
      else if (key == "a" || key == "b") {
        auto add_one = [&](const json& s) {
          if (key == "a") c.a(s.get<std::string>());
          else c.b(s.get<std::string>());
        };
        if (v.is_array()) for (const auto& s : v) add_one(s);
        else add_one(v);
      }
      else if (key == "ba") c.ba(v.get<std::string>());
      else if (key == "dOpt") {
        const NodeRef& node = c.node();
        if (node && node->is_terminal(Pos::NO)) {
          NumberOptions o;
          o.nat = v.value("nat", false);
          o.ord = v.value("ord", false);
          o.raw = v.value("raw", false);
          if (v.contains("mprecision")) o.mprecision = v["mprecision"].get<int>();
          c.dOpt(o);
        } else if (node && node->is_terminal(Pos::DT)) {
          DateOptions o;
          o.year = v.value("year", true);
          o.month = v.value("month", true);
          o.date = v.value("date", true);
          o.day = v.value("day", true);
          o.hour = v.value("hour", true);
          o.minute = v.value("minute", true);
          o.second = v.value("second", true);
          o.nat = v.value("nat", true);
          o.det = v.value("det", false);
          if (v.contains("rtime")) {
            auto t = parse_instant(v["rtime"].get<std::string>());
            if (!t) throw SpecError("bad rtime", path + ".props.dOpt");
            o.rtime = t;
          }
          c.dOpt(o);
        } else {
          session.warn("bad constituent for option", {"dOpt"});
        }
      }
      else if (key == "add") {
        // extra elements appended through the incremental interface
        if (!v.is_array()) throw SpecError("add must be an array", path + ".props.add");
        int i = 0;
        for (const auto& e : v) {
          const std::string epath = path + ".props.add[" + std::to_string(i++) + "]";
          std::optional<int> position;
          const json* spec = &e;
          if (e.is_object() && e.contains("element")) {
            if (e.contains("position")) position = e["position"].get<int>();
            spec = &e["element"];
          }
          Constituent child =
              parse_node(*spec, epath, c.node() ? c.node()->lang : session.language());
          c.add(child, position);
        }
      }
      else session.warn("unknown feature", {key});
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception& e) {
      throw SpecError(std::string("bad value for ") + key + " (" + e.what() + ")",
                      path + ".props." + key);
    }
  }
}

TypeOptions parse_typ(const json& j, const std::string& path) {
  TypeOptions t;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "neg") {
      if (v.is_string()) { t.neg = true; t.neg_word = v.get<std::string>(); }
      else t.neg = v.get<bool>();
    }
    else if (key == "pas") t.pas = v.get<bool>();
    else if (key == "int") t.quest = v.get<std::string>();
    else if (key == "mod") t.modal = v.get<std::string>();
    else if (key == "prog") t.prog = v.get<bool>();
    else if (key == "perf") t.perf = v.get<bool>();
    else if (key == "exc") t.exc = v.get<bool>();
    else Session::current().warn("unknown feature", {"typ." + key});
  }
  (void)path;
  return t;
}

Lang node_lang(const json& j, const std::string& path, Lang inherited) {
  if (!j.contains("lang")) return inherited;
  auto l = lang_from_code(j["lang"].get<std::string>());
  if (!l) throw SpecError("unknown language", path + ".lang");
  return *l;
}

Constituent parse_node(const json& j, const std::string& path, Lang inherited) {
  auto& session = Session::current();
  if (!j.is_object()) throw SpecError("node must be an object", path);
  const Lang lang = node_lang(j, path, inherited);
  session.use(lang);

  Constituent c;
  if (j.contains("terminal")) {
    auto pos = pos_from_code(j["terminal"].get<std::string>());
    if (!pos) throw SpecError("unknown terminal category", path + ".terminal");
    if (!j.contains("lemma")) throw SpecError("terminal requires lemma", path);
    const json& lemma = j["lemma"];
    if (*pos == Pos::NO) {
      if (lemma.is_number()) {
        c = NO(lemma.get<double>());
      } else if (lemma.is_string()) {
        try { c = NO(std::stod(lemma.get<std::string>())); }
        catch (...) { throw SpecError("bad number payload", path + ".lemma"); }
      } else {
        throw SpecError("bad number payload", path + ".lemma");
      }
    } else if (*pos == Pos::DT) {
      c = DT(lemma.get<std::string>());
    } else if (lemma.is_string()) {
      c = make_terminal(*pos, lemma.get<std::string>(), lang);
    } else {
      // a non-string payload for a word category: warn and realize bracketed
      session.warn("bad parameter", {"string", lemma.is_number() ? "number" : "object"}, lang);
      c = make_terminal(*pos, lemma.dump(), lang);
      c.node()->construction_error = true;
    }
  } else if (j.contains("phrase")) {
    auto kind = phrase_from_code(j["phrase"].get<std::string>());
    if (!kind) throw SpecError("unknown phrase category", path + ".phrase");
    std::vector<Constituent> children;
    if (j.contains("elements")) {
      int i = 0;
      for (const auto& e : j["elements"]) {
        children.push_back(parse_node(e, path + ".elements[" + std::to_string(i++) + "]", lang));
        session.use(lang);
      }
    }
    c = make_phrase(*kind, std::move(children));
    c.node()->lang = lang;
  } else if (j.contains("dependent")) {
    auto rel = relation_from_code(j["dependent"].get<std::string>());
    if (!rel) throw SpecError("unknown relation", path + ".dependent");
    if (!j.contains("terminal")) throw SpecError("dependent requires terminal head", path);
    Constituent head = parse_node(j["terminal"], path + ".terminal", lang);
    session.use(lang);
    std::vector<Constituent> deps;
    if (j.contains("dependents")) {
      int i = 0;
      for (const auto& e : j["dependents"]) {
        deps.push_back(parse_node(e, path + ".dependents[" + std::to_string(i++) + "]", lang));
        session.use(lang);
      }
    }
    c = make_dependent(*rel, std::move(head), std::move(deps));
    c.node()->lang = lang;
  } else {
    throw SpecError("node must have exactly one of terminal/phrase/dependent", path);
  }

  if (j.contains("props")) apply_props(c, j["props"], path);
  if (j.contains("typ")) c.typ(parse_typ(j["typ"], path + ".typ"));
  return c;
}

// Dependent heads are parsed with parse_node but must not consume the
// surrounding dependent's keys; the schema nests them cleanly, so the
// plain recursion above is enough.

// ---------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------

json serialize_node(const NodeRef& node, Lang parent_lang);

json serialize_props(const NodeRef& node) {
  json props = json::object();
  const LocalFeatures& f = node->local;
  if (f.pe) props["pe"] = *f.pe;
  if (f.n) props["n"] = number_code(*f.n);
  if (f.g) props["g"] = gender_code(*f.g);
  if (f.t) props["t"] = *f.t;
  if (f.c) props["c"] = case_code(*f.c);
  if (f.aux) props["aux"] = aux_code(*f.aux);
  if (node->position_pre) props["pos"] = *node->position_pre ? "pre" : "post";
  if (node->pronominalized) props["pro"] = true;
  if (node->fmt.cap) props["cap"] = *node->fmt.cap;
  if (!node->fmt.tags.empty()) {
    json tags = json::array();
    for (const auto& t : node->fmt.tags) {
      json attrs = json::object();
      for (const auto& [k, v] : t.attributes) attrs[k] = v;
      tags.push_back(json::array({t.name, attrs}));
    }
    props["tag"] = tags;
  }
  if (!node->fmt.before.empty())
    props["b"] = node->fmt.before.size() == 1 ? json(node->fmt.before[0])
                                              : json(node->fmt.before);
  if (!node->fmt.after.empty())
    props["a"] = node->fmt.after.size() == 1 ? json(node->fmt.after[0])
                                             : json(node->fmt.after);
  if (node->fmt.around) props["ba"] = *node->fmt.around;
  if (node->is_terminal(Pos::NO)) {
    const NumberOptions& o = node->number_options;
    json d = json::object();
    if (o.nat) d["nat"] = true;
    if (o.ord) d["ord"] = true;
    if (o.raw) d["raw"] = true;
    if (o.mprecision) d["mprecision"] = *o.mprecision;
    if (!d.empty()) props["dOpt"] = d;
  }
  if (node->is_terminal(Pos::DT)) {
    const DateOptions& o = node->date_options;
    json d = json::object();
    DateOptions defaults;
    if (o.year != defaults.year) d["year"] = o.year;
    if (o.month != defaults.month) d["month"] = o.month;
    if (o.date != defaults.date) d["date"] = o.date;
    if (o.day != defaults.day) d["day"] = o.day;
    if (o.hour != defaults.hour) d["hour"] = o.hour;
    if (o.minute != defaults.minute) d["minute"] = o.minute;
    if (o.second != defaults.second) d["second"] = o.second;
    if (o.nat != defaults.nat) d["nat"] = o.nat;
    if (o.det != defaults.det) d["det"] = o.det;
    if (o.rtime) d["rtime"] = format_instant(*o.rtime);
    if (!d.empty()) props["dOpt"] = d;
  }
  return props;
}

json serialize_typ(const TypeOptions& t) {
  json out = json::object();
  if (t.neg) out["neg"] = t.neg_word.empty() ? json(true) : json(t.neg_word);
  if (t.pas) out["pas"] = true;
  if (!t.quest.empty()) out["int"] = t.quest;
  if (!t.modal.empty()) out["mod"] = t.modal;
  if (t.prog) out["prog"] = true;
  if (t.perf) out["perf"] = true;
  if (t.exc) out["exc"] = true;
  return out;
}

json serialize_node(const NodeRef& node, Lang parent_lang) {
  json out = json::object();
  if (node->is_terminal()) {
    out["terminal"] = pos_code(node->pos);
    if (node->pos == Pos::NO)
      out["lemma"] = node->number_value;
    else if (node->pos == Pos::DT && node->date_value)
      out["lemma"] = format_instant(*node->date_value);
    else
      out["lemma"] = node->lemma;
  } else if (node->is_phrase()) {
    out["phrase"] = phrase_code(node->pkind);
    json elements = json::array();
    for (const auto& child : node->children) elements.push_back(serialize_node(child, node->lang));
    out["elements"] = std::move(elements);
  } else {
    out["dependent"] = relation_code(node->rel);
    if (node->head) out["terminal"] = serialize_node(node->head, node->lang);
    if (!node->children.empty()) {
      json deps = json::array();
      for (const auto& child : node->children) deps.push_back(serialize_node(child, node->lang));
      out["dependents"] = std::move(deps);
    }
  }
  if (node->lang != parent_lang) out["lang"] = lang_code(node->lang);
  json props = serialize_props(node);
  if (!props.empty()) out["props"] = std::move(props);
  json typ = serialize_typ(node->typ);
  if (!typ.empty()) out["typ"] = std::move(typ);
  return out;
}

}  // namespace

Constituent parse_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(e.what(), "$");
  }
  Session& session = Session::current();
  const Lang ambient = session.language();
  try {
    Constituent c = parse_node(doc, "$", ambient);
    session.use(ambient);
    return c;
  } catch (...) {
    session.use(ambient);
    throw;
  }
}

std::string serialize_spec(const Constituent& c) {
  if (c.empty()) return "null";
  // the root always states its language
  json out = serialize_node(c.node(), c.node()->lang == Lang::en ? Lang::fr : Lang::en);
  return out.dump();
}

Constituent clone(const Constituent& c) {
  if (c.empty()) return c;
  // serialize to the expression form and re-evaluate it
  return parse_spec(serialize_spec(c));
}

}  // namespace realizer
