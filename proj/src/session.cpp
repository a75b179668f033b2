#include "owlverb/session.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace owlverb {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
  return out;
}

}  // namespace

LoadError::LoadError(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::shared_ptr<const SessionState> build_state(std::string_view source, std::string_view lexicon_overrides) {
  ParseResult parsed = parse_ontology(source);
  if (!parsed.ok()) {
    std::vector<std::string> errors;
    for (const auto& d : parsed.diagnostics) errors.push_back(to_string(d));
    throw LoadError(std::move(errors));
  }
  auto state = std::make_shared<SessionState>();
  state->ontology = std::move(*parsed.ontology);
  state->source = std::string(source);
  state->lexicon_source = std::string(lexicon_overrides);
  try {
    state->lexicon = merge_overrides(derive_lexicon(state->ontology), lexicon_overrides);
  } catch (const LexiconError& e) {
    throw LoadError({std::string("lexicon ") + e.what()});
  }
  std::vector<std::string> warnings;
  for (const auto& d : parsed.diagnostics) warnings.push_back(to_string(d));
  state->lexicon.warnings.insert(state->lexicon.warnings.begin(), warnings.begin(), warnings.end());
  state->inferred = infer(state->ontology);
  state->diagram = layout(build_diagram(state->ontology));
  return state;
}

std::vector<std::string> uncovered_axioms(const SessionState& s) {
  std::set<std::string> covered;
  for (const auto& [_, ids] : s.diagram.element_axioms) covered.insert(ids.begin(), ids.end());
  std::vector<std::string> out;
  for (const auto& a : s.ontology.axioms()) {
    if (a.kind() != AxiomKind::Declaration && !covered.count(a.id)) out.push_back(a.id);
  }
  return out;
}

LoadSummary summarize(const SessionState& s) {
  LoadSummary out;
  out.entities = s.ontology.declarations().size();
  out.axioms = s.ontology.axioms().size();
  out.elements = s.diagram.elements.size();
  out.inferred = s.inferred.size();
  out.coverage = uncovered_axioms(s).empty();
  out.diagnostics = s.lexicon.warnings;
  return out;
}

std::vector<Sentence> verbalize_element(const SessionState& s, std::string_view element, Scope scope,
                                        bool direct_reading) {
  return verbalize_axioms(collect(s.diagram, s.ontology, s.inferred, element, scope), s.lexicon,
                          VerbalizeOptions{direct_reading});
}

std::vector<DictionarySection> export_dictionary(const SessionState& s) {
  std::vector<EntityRef> entities = s.ontology.declarations();
  std::sort(entities.begin(), entities.end(), [](const EntityRef& a, const EntityRef& b) {
    return std::tie(a.name, a.kind) < std::tie(b.name, b.kind);
  });
  std::vector<DictionarySection> out;
  for (const auto& e : entities) {
    DictionarySection section{e, {}, {}};
    try {
      section.element = element_for(s.diagram, e).id;
    } catch (const NotFoundError&) {
    }
    std::vector<Axiom> axioms;
    for (auto& a : axioms_referencing(s.ontology, e)) {
      if (a.kind() != AxiomKind::Declaration) axioms.push_back(std::move(a));
    }
    section.sentences = verbalize_axioms(axioms, s.lexicon);
    out.push_back(std::move(section));
  }
  return out;
}

std::string render_dictionary(const std::vector<DictionarySection>& sections) {
  std::string out;
  for (const auto& s : sections) {
    if (!out.empty()) out += "\n";
    out += s.entity.name + " (" + std::string(to_string(s.entity.kind)) + ")";
    if (!s.element.empty()) out += " [" + s.element + "]";
    out += "\n";
    for (const auto& sentence : s.sentences) out += "  " + sentence.text + "\n";
  }
  return out;
}

LoadSummary Session::load(std::string_view source, std::string_view lexicon_overrides) {
  auto next = build_state(source, lexicon_overrides);
  LoadSummary summary = summarize(*next);
  swap_in(std::move(next));
  return summary;
}

LoadSummary Session::set_lexicon(std::string_view overrides) {
  auto current = snapshot();
  return load(current->source, overrides);
}

void Session::swap_in(std::shared_ptr<const SessionState> next) {
  std::lock_guard lock(mutex_);
  state_ = std::move(next);
}

std::shared_ptr<const SessionState> Session::snapshot() const {
  std::lock_guard lock(mutex_);
  if (!state_) throw ConflictError("no ontology loaded");
  return state_;
}

bool Session::loaded() const {
  std::lock_guard lock(mutex_);
  return state_ != nullptr;
}

std::vector<Sentence> Session::verbalize_element(std::string_view element, Scope scope, bool direct_reading) const {
  return owlverb::verbalize_element(*snapshot(), element, scope, direct_reading);
}

std::vector<DictionarySection> Session::export_dictionary() const { return owlverb::export_dictionary(*snapshot()); }

}  // namespace owlverb
