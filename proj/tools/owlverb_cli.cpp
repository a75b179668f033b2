// owlverb: command-line access to parsing, diagrams, verbalization, the
// dictionary export and the HTTP service.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "owlverb/service.hpp"
#include "owlverb/session.hpp"

namespace {

constexpr int kDiagnostics = 1;
constexpr int kIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// An explicit --lexicon wins; otherwise a .lex file next to the ontology.
std::string lexicon_for(const std::string& file, const std::string& explicit_path) {
  if (!explicit_path.empty()) return read_file(explicit_path);
  std::filesystem::path sibling(file);
  sibling.replace_extension(".lex");
  if (std::filesystem::exists(sibling)) return read_file(sibling.string());
  return {};
}

void print_sentences(const std::vector<owlverb::Sentence>& sentences, bool json) {
  if (json) {
    std::cout << owlverb::sentences_json(sentences) << "\n";
    return;
  }
  for (const auto& s : sentences) std::cout << s.text << (s.inferred ? "  [inferred]" : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OWL ontology diagrams with controlled-English explanations"};
  app.require_subcommand(1);

  std::string file, lexicon_path;
  bool json = false;

  auto* parse = app.add_subcommand("parse", "Parse an ontology and report diagnostics");
  auto* diagram = app.add_subcommand("diagram", "Print the diagram model as JSON");
  auto* verbalize = app.add_subcommand("verbalize", "Verbalize the axioms behind an entity or element");
  auto* dictionary = app.add_subcommand("dictionary", "Print every entity with the sentences about it");
  auto* serve = app.add_subcommand("serve", "Serve the HTTP interface");

  std::string entity, element, scope_name;
  bool direct_reading = false;
  int port = 8080;
  std::string host = "127.0.0.1";

  for (auto* sub : {parse, diagram, verbalize, dictionary, serve}) {
    sub->add_option("FILE", file, "Manchester syntax ontology (.omn)")->required();
    sub->add_option("--lexicon", lexicon_path, "Lexicon override file (.lex)");
  }
  for (auto* sub : {verbalize, dictionary}) sub->add_flag("--json", json, "JSON output");
  auto* entity_opt = verbalize->add_option("--entity", entity, "Entity name");
  auto* element_opt = verbalize->add_option("--element", element, "Diagram element id");
  entity_opt->excludes(element_opt);
  verbalize->add_option("--scope", scope_name, "direct, referencing or inferred (default: referencing for --entity, direct for --element)")
      ->check(CLI::IsMember({"direct", "referencing", "inferred"}));
  verbalize->add_flag("--direct-reading", direct_reading, "Also print the literal reading of only-restrictions");
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Interface to bind");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string source = read_file(file);
    const std::string lexicon = lexicon_for(file, lexicon_path);

    if (parse->parsed()) {
      const auto result = owlverb::parse_ontology(source);
      for (const auto& d : result.diagnostics) std::cerr << file << ":" << owlverb::to_string(d) << "\n";
      if (!result.ok()) return kDiagnostics;
      const auto state = owlverb::build_state(source, lexicon);
      std::cout << owlverb::summary_json(owlverb::summarize(*state)) << "\n";
      return 0;
    }

    owlverb::Session session;
    session.load(source, lexicon);
    const auto state = session.snapshot();

    if (diagram->parsed()) {
      std::cout << owlverb::diagram_json(state->diagram, 2) << "\n";
    } else if (verbalize->parsed()) {
      if (entity.empty() && element.empty()) {
        std::cerr << "verbalize needs --entity or --element\n";
        return kDiagnostics;
      }
      if (!entity.empty()) {
        const auto candidates = state->ontology.find_by_name(entity);
        if (candidates.empty()) throw owlverb::NotFoundError("no entity named '" + entity + "'");
        element = owlverb::element_for(state->diagram, candidates.front()).id;
        if (scope_name.empty()) scope_name = "referencing";
      }
      if (scope_name.empty()) scope_name = "direct";
      print_sentences(session.verbalize_element(element, owlverb::scope_from_string(scope_name), direct_reading),
                      json);
    } else if (dictionary->parsed()) {
      const auto sections = session.export_dictionary();
      std::cout << (json ? owlverb::dictionary_json(sections) + "\n" : owlverb::render_dictionary(sections));
    } else if (serve->parsed()) {
      owlverb::HttpService service(session);
      const int bound = service.bind(host, port);
      if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on " << host << ":" << bound << "\n";
      return service.listen() ? 0 : kIoError;
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const owlverb::LoadError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << file << ":" << d << "\n";
    return kDiagnostics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiagnostics;
  }
}
