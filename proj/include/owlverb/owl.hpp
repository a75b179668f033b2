// OWL entity, class-expression and axiom vocabulary shared by every other
// module, plus the Ontology container.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace owlverb {

inline constexpr std::string_view kDefaultNamespace = "http://example.org/ontology#";
inline constexpr std::string_view kOwlNamespace = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

/// Raised when an entity, element or axiom id is looked up but not present.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an ontology would violate one of its structural invariants.
class OntologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EntityKind : std::uint8_t { Class, ObjectProperty, DataProperty, NamedIndividual, Datatype };

std::string_view to_string(EntityKind kind);

/// A named entity. Identity is (kind, iri); `name` is the local name used for
/// display and lookup within a session.
struct EntityRef {
  EntityKind kind = EntityKind::Class;
  std::string name;
  std::string iri;

  friend bool operator==(const EntityRef& a, const EntityRef& b) {
    return a.kind == b.kind && a.iri == b.iri;
  }
  friend std::strong_ordering operator<=>(const EntityRef& a, const EntityRef& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.iri.compare(b.iri) <=> 0;
  }
};

EntityRef make_entity(EntityKind kind, std::string name, std::string_view ns = kDefaultNamespace);
EntityRef owl_thing();
bool is_owl_thing(const EntityRef& e);

/// An object property, possibly inverted. Inversion is a single flag so
/// double inversion cannot be represented.
struct PropertyExpression {
  EntityRef base;
  bool inverted = false;

  PropertyExpression inverse() const { return {base, !inverted}; }

  friend bool operator==(const PropertyExpression&, const PropertyExpression&) = default;
};

class ClassExpression {
 public:
  enum class Kind : std::uint8_t {
    Named,
    IntersectionOf,
    UnionOf,
    ComplementOf,
    SomeValuesFrom,
    AllValuesFrom,
    MinCardinality,
    MaxCardinality,
    ExactCardinality,
    Thing,
    Nothing,
  };

  /// owl:Thing.
  ClassExpression() = default;

  static ClassExpression named(EntityRef entity);
  static ClassExpression thing();
  static ClassExpression nothing();
  /// Throws std::invalid_argument for fewer than two operands.
  static ClassExpression intersection_of(std::vector<ClassExpression> operands);
  static ClassExpression union_of(std::vector<ClassExpression> operands);
  static ClassExpression complement_of(ClassExpression operand);
  static ClassExpression some(PropertyExpression property, ClassExpression filler);
  static ClassExpression only(PropertyExpression property, ClassExpression filler);
  static ClassExpression min(std::uint32_t n, PropertyExpression property, ClassExpression filler);
  static ClassExpression max(std::uint32_t n, PropertyExpression property, ClassExpression filler);
  static ClassExpression exactly(std::uint32_t n, PropertyExpression property, ClassExpression filler);

  Kind kind() const { return kind_; }
  const EntityRef& entity() const { return entity_; }
  const PropertyExpression& property() const { return property_; }
  std::uint32_t cardinality() const { return cardinality_; }
  std::span<const ClassExpression> operands() const { return operands_; }
  /// Filler of a restriction, operand of a complement.
  const ClassExpression& filler() const { return operands_.front(); }

  bool is_named() const { return kind_ == Kind::Named; }
  bool is_restriction() const { return kind_ >= Kind::SomeValuesFrom && kind_ <= Kind::ExactCardinality; }
  bool is_cardinality() const { return kind_ >= Kind::MinCardinality && kind_ <= Kind::ExactCardinality; }
  bool is_nary() const { return kind_ == Kind::IntersectionOf || kind_ == Kind::UnionOf; }

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);

 private:
  static ClassExpression make_restriction(Kind kind, std::uint32_t n, PropertyExpression property,
                                          ClassExpression filler);

  Kind kind_ = Kind::Thing;
  EntityRef entity_;
  PropertyExpression property_;
  std::uint32_t cardinality_ = 0;
  std::vector<ClassExpression> operands_;
};

struct Literal {
  std::string lexical;
  std::string datatype;  // local name, e.g. "integer" or "string"

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct SubClassOf {
  ClassExpression sub, sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};
struct EquivalentClasses {
  std::vector<ClassExpression> operands;
  friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};
struct DisjointClasses {
  std::vector<ClassExpression> operands;
  friend bool operator==(const DisjointClasses&, const DisjointClasses&) = default;
};
struct ObjectPropertyDomain {
  PropertyExpression property;
  ClassExpression domain;
  friend bool operator==(const ObjectPropertyDomain&, const ObjectPropertyDomain&) = default;
};
struct ObjectPropertyRange {
  PropertyExpression property;
  ClassExpression range;
  friend bool operator==(const ObjectPropertyRange&, const ObjectPropertyRange&) = default;
};
struct DataPropertyDomain {
  EntityRef property;
  ClassExpression domain;
  friend bool operator==(const DataPropertyDomain&, const DataPropertyDomain&) = default;
};
struct DataPropertyRange {
  EntityRef property;
  EntityRef datatype;
  friend bool operator==(const DataPropertyRange&, const DataPropertyRange&) = default;
};
struct InverseObjectProperties {
  EntityRef first, second;
  friend bool operator==(const InverseObjectProperties&, const InverseObjectProperties&) = default;
};
struct SubObjectPropertyOf {
  PropertyExpression sub, sup;
  friend bool operator==(const SubObjectPropertyOf&, const SubObjectPropertyOf&) = default;
};
struct EquivalentObjectProperties {
  std::vector<PropertyExpression> operands;
  friend bool operator==(const EquivalentObjectProperties&, const EquivalentObjectProperties&) = default;
};
/// Always binary; n-ary input is expanded into pairs by the parser.
struct DisjointObjectProperties {
  EntityRef first, second;
  friend bool operator==(const DisjointObjectProperties&, const DisjointObjectProperties&) = default;
};
struct ClassAssertion {
  ClassExpression type;
  EntityRef individual;
  friend bool operator==(const ClassAssertion&, const ClassAssertion&) = default;
};
struct ObjectPropertyAssertion {
  EntityRef property, subject, object;
  friend bool operator==(const ObjectPropertyAssertion&, const ObjectPropertyAssertion&) = default;
};
struct DataPropertyAssertion {
  EntityRef property, subject;
  Literal value;
  friend bool operator==(const DataPropertyAssertion&, const DataPropertyAssertion&) = default;
};
struct Declaration {
  EntityRef entity;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};

/// Alternative order matches AxiomKind.
using AxiomBody = std::variant<SubClassOf, EquivalentClasses, DisjointClasses, ObjectPropertyDomain,
                               ObjectPropertyRange, DataPropertyDomain, DataPropertyRange,
                               InverseObjectProperties, SubObjectPropertyOf, EquivalentObjectProperties,
                               DisjointObjectProperties, ClassAssertion, ObjectPropertyAssertion,
                               DataPropertyAssertion, Declaration>;

enum class AxiomKind : std::uint8_t {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  DataPropertyDomain,
  DataPropertyRange,
  InverseObjectProperties,
  SubObjectPropertyOf,
  EquivalentObjectProperties,
  DisjointObjectProperties,
  ClassAssertion,
  ObjectPropertyAssertion,
  DataPropertyAssertion,
  Declaration,
};

std::string_view to_string(AxiomKind kind);

struct Axiom {
  std::string id;
  AxiomBody body;

  AxiomKind kind() const { return static_cast<AxiomKind>(body.index()); }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&body);
  }
};

// --- canonical form ------------------------------------------------------

/// Flattens nested intersections/unions, sorts operands by their canonical
/// rendering, drops duplicate operands and double complements.
ClassExpression normalize(const ClassExpression& e);
/// Normalizes every expression and sorts the operand lists of symmetric axioms.
AxiomBody normalize(const AxiomBody& body);
/// Equality of normalized bodies; ids are ignored.
bool structurally_equal(const AxiomBody& a, const AxiomBody& b);
inline bool structurally_equal(const Axiom& a, const Axiom& b) { return structurally_equal(a.body, b.body); }

/// Functional-style rendering, one line, using local names.
std::string to_functional(const PropertyExpression& p);
std::string to_functional(const ClassExpression& e);
std::string to_functional(const AxiomBody& body);

// --- signatures ------------------------------------------------------------

/// Every entity occurring in the expression tree. `Thing` contributes owl:Thing.
void collect_signature(const ClassExpression& e, std::set<EntityRef>& out);
std::set<EntityRef> signature(const AxiomBody& body);
bool mentions(const AxiomBody& body, const EntityRef& entity);

/// Expression tree depth: named/Thing/Nothing have depth 0.
int depth(const ClassExpression& e);

class Ontology {
 public:
  /// Adds to the declaration set. Re-declaring an identical entity is a no-op;
  /// declaring a different IRI under an existing (kind, name) throws.
  void declare(const EntityRef& entity);
  /// Appends an axiom with the next id. Every referenced entity must be
  /// declared. A structural duplicate is not added; the existing axiom is
  /// returned instead.
  const Axiom& add_axiom(AxiomBody body);
  void add_label(const EntityRef& entity, std::string label);

  const std::vector<EntityRef>& declarations() const { return declarations_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::map<EntityRef, std::vector<std::string>>& labels() const { return labels_; }

  bool is_declared(const EntityRef& entity) const;
  std::optional<EntityRef> find(EntityKind kind, std::string_view name) const;
  std::vector<EntityRef> find_by_name(std::string_view name) const;
  /// Throws NotFoundError.
  const Axiom& axiom(std::string_view id) const;
  const Axiom* find_axiom(std::string_view id) const;
  bool empty() const { return declarations_.empty() && axioms_.empty(); }

 private:
  std::vector<EntityRef> declarations_;
  std::map<std::pair<EntityKind, std::string>, std::size_t> by_name_;
  std::vector<Axiom> axioms_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::size_t> by_canonical_;
  std::map<EntityRef, std::vector<std::string>> labels_;
};

/// All non-Declaration axioms that mention `entity`, in ontology order.
/// Throws NotFoundError if the entity is not declared.
std::vector<Axiom> axioms_referencing(const Ontology& o, const EntityRef& entity);

/// Canonical dump: one normalized functional-style axiom per line.
std::string dump(const Ontology& o);

}  // namespace owlverb
