// Shared test helpers: fixture loading and seeded random generators.
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "owlverb/fixtures.hpp"
#include "owlverb/manchester.hpp"
#include "owlverb/owl.hpp"
#include "owlverb/session.hpp"

namespace owlverb::testing {

inline Ontology parse_ok(std::string_view source) {
  ParseResult r = parse_ontology(source);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += to_string(d) + "\n";
    throw std::runtime_error("fixture did not parse:\n" + msg);
  }
  return std::move(*r.ontology);
}

inline std::shared_ptr<const SessionState> fixture_state(std::string_view name) {
  const Fixture f = fixture(name);
  return build_state(f.omn_source, f.lexicon_source);
}

/// The mini-university ontology plus the data property of the simple
/// fragment, so generated axioms can use every entity kind.
inline std::string corpus_source() {
  return fixture("mini-university").omn_source +
         "\nDataProperty: hasAge\n    Domain: Person\n    Range: xsd:integer\n";
}

inline std::string corpus_lexicon() { return fixture("mini-university").lexicon_source; }

struct Vocabulary {
  std::vector<EntityRef> classes, object_properties, data_properties, individuals;

  static Vocabulary of(const Ontology& o) {
    Vocabulary v;
    for (const auto& e : o.declarations()) {
      switch (e.kind) {
        case EntityKind::Class:
          if (!is_owl_thing(e)) v.classes.push_back(e);
          break;
        case EntityKind::ObjectProperty: v.object_properties.push_back(e); break;
        case EntityKind::DataProperty: v.data_properties.push_back(e); break;
        case EntityKind::NamedIndividual: v.individuals.push_back(e); break;
        case EntityKind::Datatype: break;
      }
    }
    return v;
  }
};

/// Random axioms over a fixed vocabulary. Expressions have depth <= max_depth.
class AxiomGenerator {
 public:
  AxiomGenerator(Vocabulary v, std::uint32_t seed, int max_depth = 2)
      : v_(std::move(v)), rng_(seed), max_depth_(max_depth) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& one_of(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(pick(static_cast<int>(xs.size())))];
  }

  PropertyExpression property() { return {one_of(v_.object_properties), coin(0.3)}; }

  ClassExpression expression(int depth) {
    if (depth <= 0 || coin(0.35)) {
      return coin(0.1) ? ClassExpression::thing() : ClassExpression::named(one_of(v_.classes));
    }
    const int d = depth - 1;
    switch (pick(8)) {
      case 0: return ClassExpression::some(property(), expression(d));
      case 1: return ClassExpression::only(property(), expression(d));
      case 2: return ClassExpression::min(static_cast<std::uint32_t>(pick(4)), property(), expression(d));
      case 3: return ClassExpression::max(static_cast<std::uint32_t>(pick(4)), property(), expression(d));
      case 4: return ClassExpression::exactly(static_cast<std::uint32_t>(pick(4)), property(), expression(d));
      case 5: return ClassExpression::complement_of(expression(d));
      case 6: return ClassExpression::intersection_of(operands(d));
      default: return ClassExpression::union_of(operands(d));
    }
  }

  /// Two or three operands that stay distinct after normalization.
  std::vector<ClassExpression> operands(int depth) {
    for (;;) {
      std::vector<ClassExpression> ops;
      const int n = 2 + pick(2);
      for (int i = 0; i < n; ++i) ops.push_back(expression(depth));
      if (distinct(ops)) return ops;
    }
  }

  AxiomBody axiom() {
    const int depth = max_depth_;
    switch (pick(15)) {
      case 0:
      case 1:
      case 2: return SubClassOf{expression(depth), expression(depth)};
      case 3: return EquivalentClasses{operands(depth)};
      case 4: return DisjointClasses{operands(depth)};
      case 5: return ObjectPropertyDomain{property(), expression(depth)};
      case 6: return ObjectPropertyRange{property(), expression(depth)};
      case 7: {
        auto [p, q] = two_properties();
        return InverseObjectProperties{p, q};
      }
      case 8: return SubObjectPropertyOf{property(), property()};
      case 9: {
        std::vector<PropertyExpression> ops{property(), property()};
        while (ops[1] == ops[0]) ops[1] = property();
        return EquivalentObjectProperties{ops};
      }
      case 10: {
        auto [p, q] = two_properties();
        return DisjointObjectProperties{p, q};
      }
      case 11: return ClassAssertion{expression(depth), one_of(v_.individuals)};
      case 12: return ObjectPropertyAssertion{one_of(v_.object_properties), one_of(v_.individuals),
                                              one_of(v_.individuals)};
      case 13:
        if (!v_.data_properties.empty()) {
          if (coin()) return DataPropertyDomain{one_of(v_.data_properties), expression(depth)};
          return DataPropertyAssertion{one_of(v_.data_properties), one_of(v_.individuals), literal()};
        }
        [[fallthrough]];
      default:
        if (!v_.data_properties.empty() && coin()) {
          return DataPropertyRange{one_of(v_.data_properties),
                                   make_entity(EntityKind::Datatype, coin() ? "integer" : "string", kXsdNamespace)};
        }
        return SubClassOf{expression(depth), expression(depth)};
    }
  }

  Literal literal() {
    static const std::vector<std::string> words{"red", "blue", "green"};
    if (coin()) return {std::to_string(pick(100)), "integer"};
    return {one_of(words), "string"};
  }

 private:
  static bool distinct(const std::vector<ClassExpression>& ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (to_functional(normalize(ops[i])) == to_functional(normalize(ops[j]))) return false;
      }
    }
    return true;
  }

  std::pair<EntityRef, EntityRef> two_properties() {
    EntityRef p = one_of(v_.object_properties), q = one_of(v_.object_properties);
    while (q == p && v_.object_properties.size() > 1) q = one_of(v_.object_properties);
    return {p, q};
  }

  Vocabulary v_;
  std::mt19937 rng_;
  int max_depth_;
};

/// A random ontology with a handful of entities and axioms, biased towards
/// the shapes the diagram treats specially (named hierarchies, disjoint
/// siblings, inverse pairs, assertions).
inline Ontology random_ontology(std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  Ontology o;
  Vocabulary v;
  const int classes = 2 + pick(6), props = 1 + pick(3), data = pick(2), individuals = 1 + pick(3);
  for (int i = 0; i < classes; ++i) v.classes.push_back(make_entity(EntityKind::Class, "C" + std::to_string(i)));
  for (int i = 0; i < props; ++i) {
    v.object_properties.push_back(make_entity(EntityKind::ObjectProperty, "p" + std::to_string(i)));
  }
  for (int i = 0; i < data; ++i) v.data_properties.push_back(make_entity(EntityKind::DataProperty, "d" + std::to_string(i)));
  for (int i = 0; i < individuals; ++i) {
    v.individuals.push_back(make_entity(EntityKind::NamedIndividual, "i" + std::to_string(i)));
  }
  for (const auto* group : {&v.classes, &v.object_properties, &v.data_properties, &v.individuals}) {
    for (const auto& e : *group) o.declare(e);
  }
  o.declare(make_entity(EntityKind::Datatype, "integer", kXsdNamespace));
  o.declare(make_entity(EntityKind::Datatype, "string", kXsdNamespace));

  AxiomGenerator gen(v, seed ^ 0x9e3779b9u, 2);
  const int n = 3 + pick(15);
  for (int i = 0; i < n; ++i) {
    switch (pick(4)) {
      case 0: {
        // named subclass edge, sometimes with disjoint siblings
        const auto& sup = v.classes[pick(classes)];
        std::vector<ClassExpression> subs;
        for (const auto& c : v.classes) {
          if (c != sup && pick(2)) {
            o.add_axiom(SubClassOf{ClassExpression::named(c), ClassExpression::named(sup)});
            subs.push_back(ClassExpression::named(c));
          }
        }
        if (subs.size() >= 2 && pick(2)) o.add_axiom(DisjointClasses{subs});
        if (subs.size() >= 2 && pick(3) == 0) {
          o.add_axiom(EquivalentClasses{{ClassExpression::named(sup), ClassExpression::union_of(subs)}});
        }
        break;
      }
      case 1: {
        const auto& p = v.object_properties[pick(props)];
        o.add_axiom(ObjectPropertyDomain{{p, false}, ClassExpression::named(v.classes[pick(classes)])});
        o.add_axiom(ObjectPropertyRange{{p, false}, ClassExpression::named(v.classes[pick(classes)])});
        break;
      }
      default: o.add_axiom(gen.axiom()); break;
    }
    if (pick(10) == 0) o.add_axiom(Declaration{v.classes[pick(classes)]});
  }
  return o;
}

}  // namespace owlverb::testing
