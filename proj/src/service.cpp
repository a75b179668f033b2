#include "owlverb/service.hpp"

#include <json.hpp>

namespace owlverb {

using nlohmann::ordered_json;

namespace {

ordered_json sentence_value(const Sentence& s) {
  return {{"text", s.text}, {"axiom_ids", s.axiom_ids}, {"inferred", s.inferred}, {"fallback", s.fallback}};
}

HttpResponse error(int status, const std::string& message, const std::vector<std::string>& diagnostics = {}) {
  return {status, ordered_json{{"error", message}, {"diagnostics", diagnostics}}.dump()};
}

HttpResponse ok(std::string body) { return {200, std::move(body)}; }

std::string param(const HttpRequest& r, const std::string& key, const std::string& fallback = {}) {
  auto it = r.params.find(key);
  return it == r.params.end() ? fallback : it->second;
}

HttpResponse post_ontology(Session& session, const HttpRequest& r) {
  std::string source = r.body, lexicon;
  const auto first = r.body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && r.body[first] == '{') {
    const auto doc = ordered_json::parse(r.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("source") || !doc["source"].is_string()) {
      return error(400, "expected {\"source\": string, \"lexicon\": string}");
    }
    source = doc["source"].get<std::string>();
    if (doc.contains("lexicon")) {
      if (!doc["lexicon"].is_string()) return error(400, "lexicon must be a string");
      lexicon = doc["lexicon"].get<std::string>();
    }
  }
  return ok(summary_json(session.load(source, lexicon)));
}

HttpResponse route(Session& session, const HttpRequest& r) {
  if (r.path == "/ontology" && r.method == "POST") return post_ontology(session, r);
  if (r.path == "/diagram" && r.method == "GET") return ok(diagram_json(session.snapshot()->diagram));
  if (r.path == "/verbalize" && r.method == "GET") {
    const std::string element = param(r, "element");
    if (element.empty()) return error(400, "missing element parameter");
    Scope scope;
    try {
      scope = scope_from_string(param(r, "scope", "direct"));
    } catch (const std::invalid_argument& e) {
      return error(400, e.what());
    }
    const std::string dr = param(r, "direct_reading", "false");
    if (dr != "true" && dr != "false") return error(400, "direct_reading must be true or false");
    return ok(sentences_json(session.verbalize_element(element, scope, dr == "true")));
  }
  if (r.path == "/dictionary" && r.method == "GET") return ok(dictionary_json(session.export_dictionary()));
  if (r.path == "/lexicon" && r.method == "GET") return ok(lexicon_json(session.snapshot()->lexicon));
  if (r.path == "/lexicon" && r.method == "PUT") return ok(summary_json(session.set_lexicon(r.body)));
  return error(404, "no route " + r.method + " " + r.path);
}

}  // namespace

HttpResponse handle_request(Session& session, const HttpRequest& request) {
  try {
    return route(session, request);
  } catch (const LoadError& e) {
    return error(422, "input rejected", e.diagnostics());
  } catch (const ConflictError& e) {
    return error(409, e.what());
  } catch (const NotFoundError& e) {
    return error(404, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

std::string sentences_json(const std::vector<Sentence>& sentences) {
  ordered_json out = ordered_json::array();
  for (const auto& s : sentences) out.push_back(sentence_value(s));
  return out.dump();
}

std::string summary_json(const LoadSummary& s) {
  return ordered_json{{"entities", s.entities}, {"axioms", s.axioms},     {"elements", s.elements},
                      {"inferred", s.inferred}, {"errors", s.errors},     {"coverage", s.coverage},
                      {"diagnostics", s.diagnostics}}
      .dump();
}

std::string dictionary_json(const std::vector<DictionarySection>& sections) {
  ordered_json out = ordered_json::array();
  for (const auto& sec : sections) {
    ordered_json sentences = ordered_json::array();
    for (const auto& s : sec.sentences) sentences.push_back(sentence_value(s));
    out.push_back({{"entity", sec.entity.name},
                   {"kind", to_string(sec.entity.kind)},
                   {"element", sec.element.empty() ? ordered_json(nullptr) : ordered_json(sec.element)},
                   {"sentences", std::move(sentences)}});
  }
  return out.dump();
}

std::string lexicon_json(const Lexicon& lex) {
  ordered_json entries = ordered_json::array();
  for (const auto& [e, entry] : lex.entries()) {
    entries.push_back({{"entity", e.name},
                       {"kind", to_string(e.kind)},
                       {"category", to_string(entry.category)},
                       {"forms", entry.forms}});
  }
  return ordered_json{{"entries", std::move(entries)}, {"warnings", lex.warnings}}.dump();
}

}  // namespace owlverb
