// Manchester OWL Syntax subset: frame-based ontology documents, standalone
// class expressions, and one-line axiom renderings.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlverb/owl.hpp"

namespace owlverb {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  Severity severity = Severity::Error;
  std::string message;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

std::string to_string(const ParseDiagnostic& d);

struct ParseResult {
  /// Absent whenever any error diagnostic was produced.
  std::optional<Ontology> ontology;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return ontology.has_value(); }
  std::size_t error_count() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<ParseDiagnostic> diagnostics);
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

/// Parses a .omn document. Supported frames: Class, ObjectProperty,
/// DataProperty, Individual, Datatype, plus the DisjointClasses,
/// EquivalentClasses, DisjointProperties and EquivalentProperties misc frames.
/// Entities must be introduced by a frame before they can be referenced;
/// forward references within the document are fine.
ParseResult parse_ontology(std::string_view source);

/// Parses a class expression against the entities already declared in `o`.
/// Throws ParseError.
ClassExpression parse_class_expression(std::string_view text, const Ontology& o);

/// Parses a single rendered axiom line, the inverse of render_manchester.
/// Throws ParseError.
AxiomBody parse_axiom(std::string_view text, const Ontology& o);

std::string render_manchester(const PropertyExpression& p);
std::string render_manchester(const ClassExpression& e);
std::string render_manchester(const AxiomBody& body);
inline std::string render_manchester(const Axiom& a) { return render_manchester(a.body); }

}  // namespace owlverb
