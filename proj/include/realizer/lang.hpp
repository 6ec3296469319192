// Basic language-level enums and feature codes shared by all modules.
#ifndef REALIZER_LANG_HPP
#define REALIZER_LANG_HPP

#include <optional>
#include <string>
#include <string_view>

namespace realizer {

enum class Lang { en, fr };

inline const char* lang_code(Lang l) { return l == Lang::en ? "en" : "fr"; }
std::optional<Lang> lang_from_code(std::string_view code);

// Terminal categories. Q is canned text, NO a number, DT a date.
enum class Pos { N, V, A, D, Adv, Pro, P, C, Q, NO, DT };

const char* pos_code(Pos p);
std::optional<Pos> pos_from_code(std::string_view code);
bool is_word_pos(Pos p);  // true for the eight lexical categories

enum class Number { s, p };
enum class Gender { m, f, x };

// Pronoun cases. tonic is the stressed form used after prepositions.
enum class Case { nom, acc, dat, refl, tonic };

enum class VAux { avoir, etre };

const char* number_code(Number n);
const char* gender_code(Gender g);
const char* case_code(Case c);
const char* aux_code(VAux a);
std::optional<Number> number_from_code(std::string_view);
std::optional<Gender> gender_from_code(std::string_view);
std::optional<Case> case_from_code(std::string_view);
std::optional<VAux> aux_from_code(std::string_view);

// Tense codes cover the simple tenses of both languages plus the four
// French compound tenses built from an auxiliary and a past participle.
bool is_valid_tense(std::string_view t);
bool is_compound_tense(std::string_view t);
// For a compound tense, the simple tense at which its auxiliary is conjugated.
std::string_view compound_aux_tense(std::string_view t);

}  // namespace realizer

#endif  // REALIZER_LANG_HPP
