// A loaded ontology with everything derived from it, and the operations the
// HTTP service and the command line expose.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlverb/diagram.hpp"
#include "owlverb/lexicon.hpp"
#include "owlverb/manchester.hpp"
#include "owlverb/owl.hpp"
#include "owlverb/reasoner.hpp"
#include "owlverb/verbalizer.hpp"

namespace owlverb {

struct SessionState {
  Ontology ontology;
  Lexicon lexicon;
  DiagramModel diagram;
  std::vector<InferredAxiom> inferred;
  std::string source;
  std::string lexicon_source;
};

struct LoadSummary {
  std::size_t entities = 0;
  std::size_t axioms = 0;
  std::size_t elements = 0;
  std::size_t inferred = 0;
  std::size_t errors = 0;
  bool coverage = false;
  /// Warnings from parsing and lexicon derivation.
  std::vector<std::string> diagnostics;
};

/// The source did not parse, or the lexicon overrides were rejected.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// An operation needs a loaded ontology and there is none.
class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DictionarySection {
  EntityRef entity;
  /// Main diagram element of the entity, empty for datatypes.
  std::string element;
  std::vector<Sentence> sentences;
};

/// Runs the whole pipeline. Throws LoadError.
std::shared_ptr<const SessionState> build_state(std::string_view source, std::string_view lexicon_overrides = {});

LoadSummary summarize(const SessionState& s);

/// Axiom ids (non-Declaration) that no diagram element carries.
std::vector<std::string> uncovered_axioms(const SessionState& s);

std::vector<Sentence> verbalize_element(const SessionState& s, std::string_view element, Scope scope,
                                        bool direct_reading = false);

/// One section per declared entity, alphabetical, each verbalizing every
/// axiom that mentions the entity.
std::vector<DictionarySection> export_dictionary(const SessionState& s);
std::string render_dictionary(const std::vector<DictionarySection>& sections);

/// Holds the current state. Readers take a snapshot; load swaps the whole
/// state at once, so a reader sees either the old or the new one.
class Session {
 public:
  /// On failure the previous state is kept and LoadError is thrown.
  LoadSummary load(std::string_view source, std::string_view lexicon_overrides = {});
  /// Re-derives the lexicon of the current ontology. Throws LoadError or
  /// ConflictError.
  LoadSummary set_lexicon(std::string_view overrides);

  /// Throws ConflictError when nothing is loaded.
  std::shared_ptr<const SessionState> snapshot() const;
  bool loaded() const;

  std::vector<Sentence> verbalize_element(std::string_view element, Scope scope, bool direct_reading = false) const;
  std::vector<DictionarySection> export_dictionary() const;

 private:
  void swap_in(std::shared_ptr<const SessionState> next);

  mutable std::mutex mutex_;
  std::shared_ptr<const SessionState> state_;
};

}  // namespace owlverb
