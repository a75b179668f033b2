// OWLGrEd-style diagram model: which graphical element stands for which
// axioms, a layered layout, and the collector that gathers the axioms behind
// a selected element.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "owlverb/owl.hpp"
#include "owlverb/reasoner.hpp"
#include "owlverb/verbalizer.hpp"

namespace owlverb {

enum class ElementKind : std::uint8_t {
  ClassNode,
  IndividualNode,
  AssociationEdge,
  GeneralizationEdge,
  ForkNode,
  RestrictionEdge,
  InstanceOfEdge,
  AttributeLine,
  ExpressionField,
};

/// "class-node", "association-edge", ...
std::string_view to_string(ElementKind kind);

struct DiagramElement {
  std::string id;
  ElementKind kind = ElementKind::ClassNode;
  /// Enclosing class-node of attribute-lines and expression-fields.
  std::string owner;
  std::vector<std::string> labels;
  /// Box center and size. Edges are placed at the midpoint of their ends.
  double x = 0, y = 0, w = 0, h = 0;
  std::string source, target;
  /// Entities this element stands for; drives the referencing scope.
  std::vector<EntityRef> entities;

  bool is_node() const {
    return kind == ElementKind::ClassNode || kind == ElementKind::IndividualNode || kind == ElementKind::ForkNode;
  }
};

struct DiagramModel {
  std::vector<DiagramElement> elements;
  /// Every element id has an entry; ids are listed in ontology order.
  std::map<std::string, std::vector<std::string>> element_axioms;

  const DiagramElement* find(std::string_view id) const;
  /// Throws NotFoundError.
  const DiagramElement& at(std::string_view id) const;
};

/// Geometry is left at zero; see layout().
DiagramModel build_diagram(const Ontology& o);

/// Layered placement: superclasses above subclasses, fork-nodes between
/// them, individuals below their classes. Within a layer nodes are ordered by
/// the barycenter of their parents, ties by id. Boxes never overlap and the
/// drawing is centered on the origin.
DiagramModel layout(DiagramModel d);

/// Main element of an entity: its class-node, individual-node, association
/// edge or attribute-line. Throws NotFoundError.
const DiagramElement& element_for(const DiagramModel& d, const EntityRef& entity);

enum class Scope { Direct, Referencing, Inferred };

/// "direct", "referencing" or "inferred"; throws std::invalid_argument.
Scope scope_from_string(std::string_view s);
std::string_view to_string(Scope s);

/// Axioms behind `element` in verbalization order. Throws NotFoundError for an
/// unknown element.
std::vector<TaggedAxiom> collect(const DiagramModel& d, const Ontology& o, const std::vector<InferredAxiom>& inferred,
                                 std::string_view element, Scope scope);

/// The wire format: {"elements": [...], "element_axioms": {...}}.
std::string diagram_json(const DiagramModel& d, int indent = -1);

}  // namespace owlverb
