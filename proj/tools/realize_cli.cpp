// Command-line realizer: reads JSON sentence specifications (one per line
// or a single document) and writes one realized sentence per line.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "realizer/jsonspec.hpp"
#include "realizer/lemmatize.hpp"
#include "realizer/realize.hpp"
#include "realizer/session.hpp"

#ifndef REALIZER_DATA_DIR
#define REALIZER_DATA_DIR "data"
#endif

namespace {

std::string default_data_dir() {
  if (const char* env = std::getenv("REALIZER_DATA")) return env;
  return REALIZER_DATA_DIR;
}

int process_line(const std::string& line, int line_no, bool json_out) {
  using namespace realizer;
  try {
    Constituent spec = parse_spec(line);
    RealizationResult r = realize_full(spec);
    for (const auto& w : r.warnings)
      std::cerr << "line " << line_no << ": " << w.message << "\n";
    if (json_out) {
      nlohmann::json out;
      out["spec"] = nlohmann::json::parse(serialize_spec(spec));
      out["text"] = r.text;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << r.text << "\n";
    }
    return 0;
  } catch (const SpecError& e) {
    std::cerr << "line " << line_no << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilingual surface realizer"};
  std::string lang = "en";
  std::string lexicon_path, rules_path, lemmatize_form;
  std::string data_dir = default_data_dir();
  std::uint64_t seed = 0;
  bool no_html = false, json_out = false;
  app.add_option("--lang", lang, "default language (en or fr)")
      ->check(CLI::IsMember({"en", "fr"}));
  app.add_option("--data", data_dir, "directory holding lexicon-*.json and rules-*.json");
  app.add_option("--lexicon", lexicon_path, "lexicon file overriding the default for --lang");
  app.add_option("--rules", rules_path, "rules file overriding the default for --lang");
  app.add_option("--seed", seed, "random seed for oneOf choices");
  app.add_option("--lemmatize", lemmatize_form, "print the expressions realizing FORM");
  app.add_flag("--no-html", no_html, "ignore tag annotations");
  app.add_flag("--json-out", json_out, "echo the serialized spec alongside each realization");
  CLI11_PARSE(app, argc, argv);

  using namespace realizer;
  const Lang cli_lang = lang == "fr" ? Lang::fr : Lang::en;

  std::unique_ptr<Session> session;
  try {
    auto en_rules = load_rules_file(
        cli_lang == Lang::en && !rules_path.empty() ? rules_path : data_dir + "/rules-en.json",
        Lang::en);
    auto fr_rules = load_rules_file(
        cli_lang == Lang::fr && !rules_path.empty() ? rules_path : data_dir + "/rules-fr.json",
        Lang::fr);
    LanguageResources en{
        load_lexicon_file(cli_lang == Lang::en && !lexicon_path.empty()
                              ? lexicon_path
                              : data_dir + "/lexicon-en.json",
                          Lang::en, en_rules),
        en_rules};
    LanguageResources fr{
        load_lexicon_file(cli_lang == Lang::fr && !lexicon_path.empty()
                              ? lexicon_path
                              : data_dir + "/lexicon-fr.json",
                          Lang::fr, fr_rules),
        fr_rules};
    session = std::make_unique<Session>(std::move(en), std::move(fr), seed);
  } catch (const LexiconError& e) {
    std::cerr << "setup: " << e.what() << "\n";
    return 2;
  }
  session->use(cli_lang);
  session->html_output = !no_html;

  if (!lemmatize_form.empty()) {
    for (const auto& c : lemmatize(lemmatize_form, cli_lang))
      std::cout << c.expression << "\n";
    return 0;
  }

  std::stringstream buffer;
  buffer << std::cin.rdbuf();
  const std::string input = buffer.str();

  // a single (possibly multi-line) document, otherwise one document per line
  bool whole_ok = false;
  {
    auto probe = nlohmann::json::parse(input, nullptr, false);
    whole_ok = !probe.is_discarded();
  }
  int status = 0;
  if (whole_ok) {
    status = process_line(input, 1, json_out);
  } else {
    std::istringstream lines(input);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (process_line(line, line_no, json_out) != 0) status = 1;
      session->use(cli_lang);
    }
  }
  return status;
}
