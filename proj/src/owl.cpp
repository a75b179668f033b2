#include "owlverb/owl.hpp"

#include <algorithm>

namespace owlverb {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    case EntityKind::Datatype: return "Datatype";
  }
  return "?";
}

std::string_view to_string(AxiomKind kind) {
  static constexpr std::string_view names[] = {
      "SubClassOf",
      "EquivalentClasses",
      "DisjointClasses",
      "ObjectPropertyDomain",
      "ObjectPropertyRange",
      "DataPropertyDomain",
      "DataPropertyRange",
      "InverseObjectProperties",
      "SubObjectPropertyOf",
      "EquivalentObjectProperties",
      "DisjointObjectProperties",
      "ClassAssertion",
      "ObjectPropertyAssertion",
      "DataPropertyAssertion",
      "Declaration",
  };
  return names[static_cast<std::size_t>(kind)];
}

EntityRef make_entity(EntityKind kind, std::string name, std::string_view ns) {
  std::string iri(ns);
  iri += name;
  return EntityRef{kind, std::move(name), std::move(iri)};
}

EntityRef owl_thing() { return make_entity(EntityKind::Class, "Thing", kOwlNamespace); }

bool is_owl_thing(const EntityRef& e) { return e.kind == EntityKind::Class && e == owl_thing(); }

// --- ClassExpression -----------------------------------------------------------

ClassExpression ClassExpression::named(EntityRef entity) {
  ClassExpression e;
  e.kind_ = Kind::Named;
  e.entity_ = std::move(entity);
  return e;
}

ClassExpression ClassExpression::thing() { return ClassExpression{}; }

ClassExpression ClassExpression::nothing() {
  ClassExpression e;
  e.kind_ = Kind::Nothing;
  return e;
}

ClassExpression ClassExpression::intersection_of(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) throw std::invalid_argument("IntersectionOf needs at least two operands");
  ClassExpression e;
  e.kind_ = Kind::IntersectionOf;
  e.operands_ = std::move(operands);
  return e;
}

ClassExpression ClassExpression::union_of(std::vector<ClassExpression> operands) {
  if (operands.size() < 2) throw std::invalid_argument("UnionOf needs at least two operands");
  ClassExpression e;
  e.kind_ = Kind::UnionOf;
  e.operands_ = std::move(operands);
  return e;
}

ClassExpression ClassExpression::complement_of(ClassExpression operand) {
  ClassExpression e;
  e.kind_ = Kind::ComplementOf;
  e.operands_.push_back(std::move(operand));
  return e;
}

ClassExpression ClassExpression::make_restriction(Kind kind, std::uint32_t n, PropertyExpression property,
                                                  ClassExpression filler) {
  ClassExpression e;
  e.kind_ = kind;
  e.cardinality_ = n;
  e.property_ = std::move(property);
  e.operands_.push_back(std::move(filler));
  return e;
}

ClassExpression ClassExpression::some(PropertyExpression property, ClassExpression filler) {
  return make_restriction(Kind::SomeValuesFrom, 0, std::move(property), std::move(filler));
}
ClassExpression ClassExpression::only(PropertyExpression property, ClassExpression filler) {
  return make_restriction(Kind::AllValuesFrom, 0, std::move(property), std::move(filler));
}
ClassExpression ClassExpression::min(std::uint32_t n, PropertyExpression property, ClassExpression filler) {
  return make_restriction(Kind::MinCardinality, n, std::move(property), std::move(filler));
}
ClassExpression ClassExpression::max(std::uint32_t n, PropertyExpression property, ClassExpression filler) {
  return make_restriction(Kind::MaxCardinality, n, std::move(property), std::move(filler));
}
ClassExpression ClassExpression::exactly(std::uint32_t n, PropertyExpression property,
                                         ClassExpression filler) {
  return make_restriction(Kind::ExactCardinality, n, std::move(property), std::move(filler));
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case ClassExpression::Kind::Thing:
    case ClassExpression::Kind::Nothing: return true;
    case ClassExpression::Kind::Named: return a.entity_ == b.entity_;
    default: break;
  }
  return a.property_ == b.property_ && a.cardinality_ == b.cardinality_ && a.operands_ == b.operands_;
}

// --- functional rendering ------------------------------------------------------

std::string to_functional(const PropertyExpression& p) {
  if (p.inverted) return "ObjectInverseOf(" + p.base.name + ")";
  return p.base.name;
}

namespace {

std::string_view functional_name(ClassExpression::Kind k) {
  using K = ClassExpression::Kind;
  switch (k) {
    case K::IntersectionOf: return "ObjectIntersectionOf";
    case K::UnionOf: return "ObjectUnionOf";
    case K::ComplementOf: return "ObjectComplementOf";
    case K::SomeValuesFrom: return "ObjectSomeValuesFrom";
    case K::AllValuesFrom: return "ObjectAllValuesFrom";
    case K::MinCardinality: return "ObjectMinCardinality";
    case K::MaxCardinality: return "ObjectMaxCardinality";
    case K::ExactCardinality: return "ObjectExactCardinality";
    case K::Thing: return "owl:Thing";
    case K::Nothing: return "owl:Nothing";
    case K::Named: break;
  }
  return "";
}

std::string join_functional(std::span<const ClassExpression> xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += to_functional(x);
  }
  return out;
}

std::string literal_functional(const Literal& l) {
  std::string out = "\"";
  for (char c : l.lexical) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"^^xsd:";
  out += l.datatype;
  return out;
}

}  // namespace

std::string to_functional(const ClassExpression& e) {
  using K = ClassExpression::Kind;
  switch (e.kind()) {
    case K::Named: return is_owl_thing(e.entity()) ? "owl:Thing" : e.entity().name;
    case K::Thing:
    case K::Nothing: return std::string(functional_name(e.kind()));
    case K::IntersectionOf:
    case K::UnionOf:
    case K::ComplementOf:
      return std::string(functional_name(e.kind())) + "(" + join_functional(e.operands()) + ")";
    case K::SomeValuesFrom:
    case K::AllValuesFrom:
      return std::string(functional_name(e.kind())) + "(" + to_functional(e.property()) + " " +
             to_functional(e.filler()) + ")";
    case K::MinCardinality:
    case K::MaxCardinality:
    case K::ExactCardinality:
      return std::string(functional_name(e.kind())) + "(" + std::to_string(e.cardinality()) + " " +
             to_functional(e.property()) + " " + to_functional(e.filler()) + ")";
  }
  return {};
}

namespace {

struct FunctionalRenderer {
  std::string operator()(const SubClassOf& a) const {
    return "SubClassOf(" + to_functional(a.sub) + " " + to_functional(a.sup) + ")";
  }
  std::string operator()(const EquivalentClasses& a) const {
    return "EquivalentClasses(" + join_functional(a.operands) + ")";
  }
  std::string operator()(const DisjointClasses& a) const {
    return "DisjointClasses(" + join_functional(a.operands) + ")";
  }
  std::string operator()(const ObjectPropertyDomain& a) const {
    return "ObjectPropertyDomain(" + to_functional(a.property) + " " + to_functional(a.domain) + ")";
  }
  std::string operator()(const ObjectPropertyRange& a) const {
    return "ObjectPropertyRange(" + to_functional(a.property) + " " + to_functional(a.range) + ")";
  }
  std::string operator()(const DataPropertyDomain& a) const {
    return "DataPropertyDomain(" + a.property.name + " " + to_functional(a.domain) + ")";
  }
  std::string operator()(const DataPropertyRange& a) const {
    return "DataPropertyRange(" + a.property.name + " xsd:" + a.datatype.name + ")";
  }
  std::string operator()(const InverseObjectProperties& a) const {
    return "InverseObjectProperties(" + a.first.name + " " + a.second.name + ")";
  }
  std::string operator()(const SubObjectPropertyOf& a) const {
    return "SubObjectPropertyOf(" + to_functional(a.sub) + " " + to_functional(a.sup) + ")";
  }
  std::string operator()(const EquivalentObjectProperties& a) const {
    std::string out = "EquivalentObjectProperties(";
    for (std::size_t i = 0; i < a.operands.size(); ++i) {
      if (i) out += ' ';
      out += to_functional(a.operands[i]);
    }
    return out + ")";
  }
  std::string operator()(const DisjointObjectProperties& a) const {
    return "DisjointObjectProperties(" + a.first.name + " " + a.second.name + ")";
  }
  std::string operator()(const ClassAssertion& a) const {
    return "ClassAssertion(" + to_functional(a.type) + " " + a.individual.name + ")";
  }
  std::string operator()(const ObjectPropertyAssertion& a) const {
    return "ObjectPropertyAssertion(" + a.property.name + " " + a.subject.name + " " + a.object.name + ")";
  }
  std::string operator()(const DataPropertyAssertion& a) const {
    return "DataPropertyAssertion(" + a.property.name + " " + a.subject.name + " " +
           literal_functional(a.value) + ")";
  }
  std::string operator()(const Declaration& a) const {
    return "Declaration(" + std::string(to_string(a.entity.kind)) + "(" + a.entity.name + "))";
  }
};

}  // namespace

std::string to_functional(const AxiomBody& body) { return std::visit(FunctionalRenderer{}, body); }

// --- normalization -------------------------------------------------------------

namespace {

void sort_by_key(std::vector<ClassExpression>& xs, bool dedupe) {
  std::vector<std::pair<std::string, ClassExpression>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) keyed.emplace_back(to_functional(x), std::move(x));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (dedupe) {
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
  }
  xs.clear();
  for (auto& [k, x] : keyed) xs.push_back(std::move(x));
}

}  // namespace

ClassExpression normalize(const ClassExpression& e) {
  using K = ClassExpression::Kind;
  switch (e.kind()) {
    case K::Named:
      if (is_owl_thing(e.entity())) return ClassExpression::thing();
      return e;
    case K::Thing:
    case K::Nothing: return e;
    case K::ComplementOf: {
      ClassExpression inner = normalize(e.filler());
      if (inner.kind() == K::ComplementOf) return inner.filler();
      return ClassExpression::complement_of(std::move(inner));
    }
    case K::IntersectionOf:
    case K::UnionOf: {
      std::vector<ClassExpression> flat;
      for (const auto& op : e.operands()) {
        ClassExpression n = normalize(op);
        if (n.kind() == e.kind()) {
          for (const auto& sub : n.operands()) flat.push_back(sub);
        } else {
          flat.push_back(std::move(n));
        }
      }
      sort_by_key(flat, true);
      if (flat.size() == 1) return flat.front();
      return e.kind() == K::IntersectionOf ? ClassExpression::intersection_of(std::move(flat))
                                           : ClassExpression::union_of(std::move(flat));
    }
    case K::SomeValuesFrom: return ClassExpression::some(e.property(), normalize(e.filler()));
    case K::AllValuesFrom: return ClassExpression::only(e.property(), normalize(e.filler()));
    case K::MinCardinality: return ClassExpression::min(e.cardinality(), e.property(), normalize(e.filler()));
    case K::MaxCardinality: return ClassExpression::max(e.cardinality(), e.property(), normalize(e.filler()));
    case K::ExactCardinality:
      return ClassExpression::exactly(e.cardinality(), e.property(), normalize(e.filler()));
  }
  return e;
}

namespace {

template <class Pair>
void sort_pair(Pair& a) {
  if (a.second.name < a.first.name || (a.second.name == a.first.name && a.second < a.first)) {
    std::swap(a.first, a.second);
  }
}

struct Normalizer {
  AxiomBody operator()(SubClassOf a) const { return SubClassOf{normalize(a.sub), normalize(a.sup)}; }
  AxiomBody operator()(EquivalentClasses a) const {
    for (auto& x : a.operands) x = normalize(x);
    sort_by_key(a.operands, false);
    return a;
  }
  AxiomBody operator()(DisjointClasses a) const {
    for (auto& x : a.operands) x = normalize(x);
    sort_by_key(a.operands, false);
    return a;
  }
  AxiomBody operator()(ObjectPropertyDomain a) const {
    a.domain = normalize(a.domain);
    return a;
  }
  AxiomBody operator()(ObjectPropertyRange a) const {
    a.range = normalize(a.range);
    return a;
  }
  AxiomBody operator()(DataPropertyDomain a) const {
    a.domain = normalize(a.domain);
    return a;
  }
  AxiomBody operator()(DataPropertyRange a) const { return a; }
  AxiomBody operator()(InverseObjectProperties a) const {
    sort_pair(a);
    return a;
  }
  AxiomBody operator()(SubObjectPropertyOf a) const { return a; }
  AxiomBody operator()(EquivalentObjectProperties a) const {
    std::stable_sort(a.operands.begin(), a.operands.end(), [](const auto& x, const auto& y) {
      return to_functional(x) < to_functional(y);
    });
    return a;
  }
  AxiomBody operator()(DisjointObjectProperties a) const {
    sort_pair(a);
    return a;
  }
  AxiomBody operator()(ClassAssertion a) const {
    a.type = normalize(a.type);
    return a;
  }
  AxiomBody operator()(ObjectPropertyAssertion a) const { return a; }
  AxiomBody operator()(DataPropertyAssertion a) const { return a; }
  AxiomBody operator()(Declaration a) const { return a; }
};

}  // namespace

AxiomBody normalize(const AxiomBody& body) { return std::visit(Normalizer{}, body); }

bool structurally_equal(const AxiomBody& a, const AxiomBody& b) {
  if (a.index() != b.index()) return false;
  return normalize(a) == normalize(b);
}

// --- signatures ----------------------------------------------------------------

void collect_signature(const ClassExpression& e, std::set<EntityRef>& out) {
  using K = ClassExpression::Kind;
  switch (e.kind()) {
    case K::Named: out.insert(e.entity()); return;
    case K::Thing: out.insert(owl_thing()); return;
    case K::Nothing: return;
    default: break;
  }
  if (e.is_restriction()) out.insert(e.property().base);
  for (const auto& op : e.operands()) collect_signature(op, out);
}

namespace {

struct SignatureCollector {
  std::set<EntityRef>& out;
  void add(const ClassExpression& e) const { collect_signature(e, out); }
  void add(const PropertyExpression& p) const { out.insert(p.base); }
  void add(const EntityRef& e) const { out.insert(e); }

  void operator()(const SubClassOf& a) const { add(a.sub), add(a.sup); }
  void operator()(const EquivalentClasses& a) const {
    for (const auto& x : a.operands) add(x);
  }
  void operator()(const DisjointClasses& a) const {
    for (const auto& x : a.operands) add(x);
  }
  void operator()(const ObjectPropertyDomain& a) const { add(a.property), add(a.domain); }
  void operator()(const ObjectPropertyRange& a) const { add(a.property), add(a.range); }
  void operator()(const DataPropertyDomain& a) const { add(a.property), add(a.domain); }
  void operator()(const DataPropertyRange& a) const { add(a.property), add(a.datatype); }
  void operator()(const InverseObjectProperties& a) const { add(a.first), add(a.second); }
  void operator()(const SubObjectPropertyOf& a) const { add(a.sub), add(a.sup); }
  void operator()(const EquivalentObjectProperties& a) const {
    for (const auto& x : a.operands) add(x);
  }
  void operator()(const DisjointObjectProperties& a) const { add(a.first), add(a.second); }
  void operator()(const ClassAssertion& a) const { add(a.type), add(a.individual); }
  void operator()(const ObjectPropertyAssertion& a) const { add(a.property), add(a.subject), add(a.object); }
  void operator()(const DataPropertyAssertion& a) const { add(a.property), add(a.subject); }
  void operator()(const Declaration& a) const { add(a.entity); }
};

}  // namespace

std::set<EntityRef> signature(const AxiomBody& body) {
  std::set<EntityRef> out;
  std::visit(SignatureCollector{out}, body);
  return out;
}

bool mentions(const AxiomBody& body, const EntityRef& entity) { return signature(body).contains(entity); }

int depth(const ClassExpression& e) {
  int d = 0;
  for (const auto& op : e.operands()) d = std::max(d, depth(op));
  switch (e.kind()) {
    case ClassExpression::Kind::Named:
    case ClassExpression::Kind::Thing:
    case ClassExpression::Kind::Nothing: return 0;
    default: return d + 1;
  }
}

// --- Ontology ------------------------------------------------------------------

void Ontology::declare(const EntityRef& entity) {
  if (entity.name.empty()) throw OntologyError("entity name must not be empty");
  auto key = std::make_pair(entity.kind, entity.name);
  if (auto it = by_name_.find(key); it != by_name_.end()) {
    if (declarations_[it->second] != entity) {
      throw OntologyError("conflicting declaration of " + std::string(to_string(entity.kind)) + " " +
                          entity.name);
    }
    return;
  }
  by_name_.emplace(std::move(key), declarations_.size());
  declarations_.push_back(entity);
}

const Axiom& Ontology::add_axiom(AxiomBody body) {
  for (const auto& e : signature(body)) {
    if (!is_owl_thing(e) && !is_declared(e)) {
      throw OntologyError("undeclared " + std::string(to_string(e.kind)) + " " + e.name);
    }
  }
  std::string canonical = to_functional(normalize(body));
  if (auto it = by_canonical_.find(canonical); it != by_canonical_.end()) return axioms_[it->second];
  std::string id = std::to_string(axioms_.size() + 1);
  by_canonical_.emplace(std::move(canonical), axioms_.size());
  by_id_.emplace(id, axioms_.size());
  axioms_.push_back(Axiom{std::move(id), std::move(body)});
  return axioms_.back();
}

void Ontology::add_label(const EntityRef& entity, std::string label) {
  if (!is_declared(entity)) throw OntologyError("label for undeclared entity " + entity.name);
  labels_[entity].push_back(std::move(label));
}

bool Ontology::is_declared(const EntityRef& entity) const {
  auto it = by_name_.find({entity.kind, entity.name});
  return it != by_name_.end() && declarations_[it->second] == entity;
}

std::optional<EntityRef> Ontology::find(EntityKind kind, std::string_view name) const {
  auto it = by_name_.find({kind, std::string(name)});
  if (it == by_name_.end()) return std::nullopt;
  return declarations_[it->second];
}

std::vector<EntityRef> Ontology::find_by_name(std::string_view name) const {
  std::vector<EntityRef> out;
  for (const auto& d : declarations_) {
    if (d.name == name) out.push_back(d);
  }
  return out;
}

const Axiom* Ontology::find_axiom(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &axioms_[it->second];
}

const Axiom& Ontology::axiom(std::string_view id) const {
  if (const Axiom* a = find_axiom(id)) return *a;
  throw NotFoundError("no axiom with id " + std::string(id));
}

std::vector<Axiom> axioms_referencing(const Ontology& o, const EntityRef& entity) {
  if (!o.is_declared(entity)) {
    throw NotFoundError("entity not declared: " + std::string(to_string(entity.kind)) + " " + entity.name);
  }
  std::vector<Axiom> out;
  for (const auto& a : o.axioms()) {
    if (a.kind() == AxiomKind::Declaration) continue;
    if (mentions(a.body, entity)) out.push_back(a);
  }
  return out;
}

std::string dump(const Ontology& o) {
  std::string out;
  for (const auto& a : o.axioms()) {
    out += to_functional(normalize(a.body));
    out += '\n';
  }
  return out;
}

}  // namespace owlverb
