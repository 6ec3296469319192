#include "realizer/lang.hpp"

#include <array>

namespace realizer {

std::optional<Lang> lang_from_code(std::string_view code) {
  if (code == "en") return Lang::en;
  if (code == "fr") return Lang::fr;
  return std::nullopt;
}

const char* pos_code(Pos p) {
  switch (p) {
    case Pos::N: return "N";
    case Pos::V: return "V";
    case Pos::A: return "A";
    case Pos::D: return "D";
    case Pos::Adv: return "Adv";
    case Pos::Pro: return "Pro";
    case Pos::P: return "P";
    case Pos::C: return "C";
    case Pos::Q: return "Q";
    case Pos::NO: return "NO";
    case Pos::DT: return "DT";
  }
  return "?";
}

std::optional<Pos> pos_from_code(std::string_view code) {
  static const std::array<Pos, 11> all = {Pos::N, Pos::V, Pos::A, Pos::D, Pos::Adv,
                                          Pos::Pro, Pos::P, Pos::C, Pos::Q, Pos::NO, Pos::DT};
  for (Pos p : all)
    if (code == pos_code(p)) return p;
  return std::nullopt;
}

bool is_word_pos(Pos p) {
  return p != Pos::Q && p != Pos::NO && p != Pos::DT;
}

const char* number_code(Number n) { return n == Number::s ? "s" : "p"; }
const char* gender_code(Gender g) {
  switch (g) {
    case Gender::m: return "m";
    case Gender::f: return "f";
    case Gender::x: return "x";
  }
  return "x";
}
const char* case_code(Case c) {
  switch (c) {
    case Case::nom: return "nom";
    case Case::acc: return "acc";
    case Case::dat: return "dat";
    case Case::refl: return "refl";
    case Case::tonic: return "tonic";
  }
  return "tonic";
}
const char* aux_code(VAux a) { return a == VAux::avoir ? "av" : "êt"; }

std::optional<Number> number_from_code(std::string_view s) {
  if (s == "s") return Number::s;
  if (s == "p") return Number::p;
  return std::nullopt;
}
std::optional<Gender> gender_from_code(std::string_view s) {
  if (s == "m") return Gender::m;
  if (s == "f") return Gender::f;
  if (s == "x") return Gender::x;
  return std::nullopt;
}
std::optional<Case> case_from_code(std::string_view s) {
  if (s == "nom") return Case::nom;
  if (s == "acc") return Case::acc;
  if (s == "dat") return Case::dat;
  if (s == "refl") return Case::refl;
  if (s == "tonic") return Case::tonic;
  return std::nullopt;
}
std::optional<VAux> aux_from_code(std::string_view s) {
  if (s == "av" || s == "avoir") return VAux::avoir;
  if (s == "êt" || s == "être" || s == "et") return VAux::etre;
  return std::nullopt;
}

bool is_valid_tense(std::string_view t) {
  static const std::array<std::string_view, 15> simple = {
      "p", "i", "ps", "f", "c", "s", "si", "b", "pr", "pp", "ip",
      "pc", "pq", "spa", "spq"};
  for (auto s : simple)
    if (t == s) return true;
  return false;
}

bool is_compound_tense(std::string_view t) {
  return t == "pc" || t == "pq" || t == "spa" || t == "spq";
}

std::string_view compound_aux_tense(std::string_view t) {
  if (t == "pc") return "p";
  if (t == "pq") return "i";
  if (t == "spa") return "s";
  if (t == "spq") return "si";
  return "p";
}

}  // namespace realizer
