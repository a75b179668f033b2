#include "owlverb/reasoner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace owlverb {

// --- structural inference -------------------------------------------------------------

namespace {

class Closure {
 public:
  explicit Closure(const Ontology& o) : o_(o) {
    for (const auto& a : o.axioms()) known_.insert(to_functional(normalize(a.body)));
  }

  std::vector<InferredAxiom> run() {
    seed();
    bool changed = true;
    while (changed) {
      changed = false;
      // Snapshot so that iteration order, and therefore ids, is deterministic.
      const auto edges = sub_;
      for (const auto& [a, supers] : edges) {
        for (const auto& [b, id1] : supers) {
          auto it = edges.find(b);
          if (it == edges.end()) continue;
          for (const auto& [c, id2] : it->second) {
            if (c == a) continue;
            changed |= add_sub(a, c, "subclass-transitivity", {id1, id2});
          }
        }
      }
      const auto types = types_;
      for (const auto& [ind, classes] : types) {
        for (const auto& [a, id1] : classes) {
          auto it = sub_.find(a);
          if (it == sub_.end()) continue;
          for (const auto& [b, id2] : it->second) {
            changed |= add_type(ind, b, "assertion-propagation", {id1, id2});
          }
        }
      }
    }
    return std::move(out_);
  }

 private:
  void seed() {
    std::map<EntityRef, std::vector<std::pair<EntityRef, std::string>>> domains, ranges;
    for (const auto& a : o_.axioms()) {
      if (const auto* s = a.as<SubClassOf>()) {
        if (named(s->sub) && named(s->sup)) sub_[s->sub.entity()][s->sup.entity()] = a.id;
      } else if (const auto* eq = a.as<EquivalentClasses>()) {
        for (const auto& lhs : eq->operands) {
          if (!named(lhs)) continue;
          for (const auto& rhs : eq->operands) {
            if (&lhs == &rhs) continue;
            if (named(rhs)) {
              add_sub(lhs.entity(), rhs.entity(), "equivalence-intersection", {a.id});
            } else if (rhs.kind() == ClassExpression::Kind::IntersectionOf) {
              for (const auto& c : rhs.operands()) {
                if (named(c)) add_sub(lhs.entity(), c.entity(), "equivalence-intersection", {a.id});
              }
            }
          }
        }
      } else if (const auto* ca = a.as<ClassAssertion>()) {
        if (named(ca->type)) types_[ca->individual][ca->type.entity()] = a.id;
      } else if (const auto* d = a.as<ObjectPropertyDomain>()) {
        if (named(d->domain)) (d->property.inverted ? ranges : domains)[d->property.base].push_back({d->domain.entity(), a.id});
      } else if (const auto* r = a.as<ObjectPropertyRange>()) {
        if (named(r->range)) (r->property.inverted ? domains : ranges)[r->property.base].push_back({r->range.entity(), a.id});
      }
    }
    for (const auto& a : o_.axioms()) {
      const auto* pa = a.as<ObjectPropertyAssertion>();
      if (!pa) continue;
      for (const auto& [c, id] : domains[pa->property]) add_type(pa->subject, c, "domain-range-typing", {a.id, id});
      for (const auto& [c, id] : ranges[pa->property]) add_type(pa->object, c, "domain-range-typing", {a.id, id});
    }
  }

  static bool named(const ClassExpression& e) { return e.is_named() && !is_owl_thing(e.entity()); }

  bool add_sub(const EntityRef& a, const EntityRef& b, const char* rule, std::vector<std::string> premises) {
    if (a == b || sub_[a].count(b)) return false;
    AxiomBody body = SubClassOf{ClassExpression::named(a), ClassExpression::named(b)};
    std::string id = record(body, rule, std::move(premises));
    sub_[a][b] = id;
    return true;
  }

  bool add_type(const EntityRef& ind, const EntityRef& c, const char* rule, std::vector<std::string> premises) {
    if (types_[ind].count(c)) return false;
    AxiomBody body = ClassAssertion{ClassExpression::named(c), ind};
    std::string id = record(body, rule, std::move(premises));
    types_[ind][c] = id;
    return true;
  }

  // Returns the id under which the fact is known.
  std::string record(const AxiomBody& body, const char* rule, std::vector<std::string> premises) {
    const std::string key = to_functional(normalize(body));
    if (known_.count(key)) {
      for (const auto& a : o_.axioms()) {
        if (to_functional(normalize(a.body)) == key) return a.id;
      }
    }
    known_.insert(key);
    std::sort(premises.begin(), premises.end());
    premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
    std::string id = "i" + std::to_string(out_.size() + 1);
    out_.push_back(InferredAxiom{Axiom{id, body}, rule, std::move(premises)});
    return id;
  }

  const Ontology& o_;
  std::set<std::string> known_;
  std::map<EntityRef, std::map<EntityRef, std::string>> sub_;
  std::map<EntityRef, std::map<EntityRef, std::string>> types_;
  std::vector<InferredAxiom> out_;
};

}  // namespace

std::vector<InferredAxiom> infer(const Ontology& o) { return Closure(o).run(); }

std::vector<std::string> asserted_premises(const std::vector<InferredAxiom>& inferred, const std::string& id) {
  std::set<std::string> out;
  std::vector<std::string> todo{id};
  std::set<std::string> seen;
  while (!todo.empty()) {
    std::string cur = todo.back();
    todo.pop_back();
    if (!seen.insert(cur).second) continue;
    auto it = std::find_if(inferred.begin(), inferred.end(), [&](const auto& x) { return x.axiom.id == cur; });
    if (it == inferred.end()) {
      out.insert(cur);
      continue;
    }
    for (const auto& p : it->premises) todo.push_back(p);
  }
  return {out.begin(), out.end()};
}

// --- small models -------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

struct Signature {
  std::vector<EntityRef> classes, properties, individuals;

  static int index_of(const std::vector<EntityRef>& xs, const EntityRef& x) {
    auto it = std::find(xs.begin(), xs.end(), x);
    return it == xs.end() ? -1 : static_cast<int>(it - xs.begin());
  }

  // Lookups by address: the axioms being checked outlive the enumeration, so
  // each entity occurrence is compared by name only once.
  int index(const std::vector<EntityRef>& xs, const EntityRef& x) const {
    for (const auto& [ptr, idx] : cache_) {
      if (ptr == &x) return idx;
    }
    const int idx = index_of(xs, x);
    cache_.emplace_back(&x, idx);
    return idx;
  }

 private:
  mutable std::vector<std::pair<const EntityRef*, int>> cache_;
};

struct Interpretation {
  int n = 0;
  std::vector<Mask> classes;
  std::vector<Mask> relations;  // bit x*n + y
  std::vector<int> individuals;

  bool holds(int p, int x, int y) const { return (relations[p] >> (x * n + y)) & 1u; }
};

class Evaluator {
 public:
  Evaluator(const Signature& sig, const Interpretation& in) : sig_(sig), in_(in) {}

  Mask full() const { return (Mask{1} << in_.n) - 1; }

  // Properties are passed as the entity stored in the axiom plus a direction;
  // index() caches by address, so temporaries must not reach it.
  bool related(const EntityRef& base, bool inverted, int x, int y) const {
    const int idx = sig_.index(sig_.properties, base);
    return inverted ? in_.holds(idx, y, x) : in_.holds(idx, x, y);
  }

  // Successors of x, one bit per y.
  Mask successors(const EntityRef& base, bool inverted, int x) const {
    const Mask rel = in_.relations[sig_.index(sig_.properties, base)];
    if (!inverted) return (rel >> (x * in_.n)) & full();
    Mask m = 0;
    for (int y = 0; y < in_.n; ++y) m |= ((rel >> (y * in_.n + x)) & 1u) << y;
    return m;
  }

  // Elements with at least one successor.
  Mask active(const EntityRef& base, bool inverted) const {
    Mask m = 0;
    for (int x = 0; x < in_.n; ++x) {
      if (successors(base, inverted, x)) m |= Mask{1} << x;
    }
    return m;
  }

  Mask ext(const ClassExpression& e) const {
    using K = ClassExpression::Kind;
    switch (e.kind()) {
      case K::Thing: return full();
      case K::Nothing: return 0;
      case K::Named:
        if (is_owl_thing(e.entity())) return full();
        return in_.classes[sig_.index(sig_.classes, e.entity())];
      case K::IntersectionOf: {
        Mask m = full();
        for (const auto& op : e.operands()) m &= ext(op);
        return m;
      }
      case K::UnionOf: {
        Mask m = 0;
        for (const auto& op : e.operands()) m |= ext(op);
        return m;
      }
      case K::ComplementOf: return full() & ~ext(e.filler());
      default: break;
    }
    const Mask filler = ext(e.filler());
    Mask m = 0;
    for (int x = 0; x < in_.n; ++x) {
      const Mask succ = successors(e.property().base, e.property().inverted, x);
      const auto inside = static_cast<std::uint32_t>(std::popcount(succ & filler));
      const auto outside = static_cast<std::uint32_t>(std::popcount(succ & ~filler));
      bool ok = false;
      switch (e.kind()) {
        case K::SomeValuesFrom: ok = inside > 0; break;
        case K::AllValuesFrom: ok = outside == 0; break;
        case K::MinCardinality: ok = inside >= e.cardinality(); break;
        case K::MaxCardinality: ok = inside <= e.cardinality(); break;
        case K::ExactCardinality: ok = inside == e.cardinality(); break;
        default: break;
      }
      if (ok) m |= Mask{1} << x;
    }
    return m;
  }

  Mask relation(const EntityRef& base, bool inverted) const {
    Mask m = 0;
    for (int x = 0; x < in_.n; ++x) {
      for (int y = 0; y < in_.n; ++y) {
        if (related(base, inverted, x, y)) m |= Mask{1} << (x * in_.n + y);
      }
    }
    return m;
  }
  Mask relation(const PropertyExpression& p) const { return relation(p.base, p.inverted); }

  int individual(const EntityRef& i) const { return in_.individuals[sig_.index(sig_.individuals, i)]; }

  bool operator()(const SubClassOf& a) const { return (ext(a.sub) & ~ext(a.sup)) == 0; }
  bool operator()(const EquivalentClasses& a) const {
    const Mask first = ext(a.operands.front());
    return std::all_of(a.operands.begin(), a.operands.end(), [&](const auto& op) { return ext(op) == first; });
  }
  bool operator()(const DisjointClasses& a) const {
    for (std::size_t i = 0; i < a.operands.size(); ++i) {
      for (std::size_t j = i + 1; j < a.operands.size(); ++j) {
        if (ext(a.operands[i]) & ext(a.operands[j])) return false;
      }
    }
    return true;
  }
  bool operator()(const ObjectPropertyDomain& a) const {
    return (active(a.property.base, a.property.inverted) & ~ext(a.domain)) == 0;
  }
  bool operator()(const ObjectPropertyRange& a) const {
    return (active(a.property.base, !a.property.inverted) & ~ext(a.range)) == 0;
  }
  bool operator()(const DataPropertyDomain&) const { throw ModelBoundError("data properties are not modelled"); }
  bool operator()(const DataPropertyRange&) const { throw ModelBoundError("data properties are not modelled"); }
  bool operator()(const DataPropertyAssertion&) const { throw ModelBoundError("data properties are not modelled"); }
  bool operator()(const InverseObjectProperties& a) const {
    return relation(a.first, false) == relation(a.second, true);
  }
  bool operator()(const SubObjectPropertyOf& a) const { return (relation(a.sub) & ~relation(a.sup)) == 0; }
  bool operator()(const EquivalentObjectProperties& a) const {
    const Mask first = relation(a.operands.front());
    return std::all_of(a.operands.begin(), a.operands.end(), [&](const auto& p) { return relation(p) == first; });
  }
  bool operator()(const DisjointObjectProperties& a) const {
    return (relation(a.first, false) & relation(a.second, false)) == 0;
  }
  bool operator()(const ClassAssertion& a) const { return (ext(a.type) >> individual(a.individual)) & 1u; }
  bool operator()(const ObjectPropertyAssertion& a) const {
    return related(a.property, false, individual(a.subject), individual(a.object));
  }
  bool operator()(const Declaration&) const { return true; }

 private:
  const Signature& sig_;
  const Interpretation& in_;
};

Signature signature_of(std::span<const AxiomBody> bodies, const ModelBounds& bounds) {
  Signature sig;
  for (const auto& b : bodies) {
    for (const auto& e : signature(b)) {
      std::vector<EntityRef>* bucket = nullptr;
      switch (e.kind) {
        case EntityKind::Class:
          if (!is_owl_thing(e)) bucket = &sig.classes;
          break;
        case EntityKind::ObjectProperty: bucket = &sig.properties; break;
        case EntityKind::NamedIndividual: bucket = &sig.individuals; break;
        case EntityKind::DataProperty: throw ModelBoundError("data properties are not modelled");
        case EntityKind::Datatype: break;
      }
      if (bucket && std::find(bucket->begin(), bucket->end(), e) == bucket->end()) bucket->push_back(e);
    }
  }
  if (static_cast<int>(sig.classes.size()) > bounds.max_classes ||
      static_cast<int>(sig.properties.size()) > bounds.max_properties ||
      static_cast<int>(sig.individuals.size()) > bounds.max_individuals) {
    throw ModelBoundError("signature too large: " + std::to_string(sig.classes.size()) + " classes, " +
                          std::to_string(sig.properties.size()) + " properties, " +
                          std::to_string(sig.individuals.size()) + " individuals");
  }
  return sig;
}

// Calls `visit` on every interpretation of `sig` over domains 1..max_domain;
// stops early when `visit` returns false.
template <class Visit>
bool enumerate(const Signature& sig, int max_domain, const ModelBounds& bounds, Visit&& visit) {
  if (max_domain < 1 || max_domain > 4) throw ModelBoundError("max_domain must be in 1..4");
  const int c = static_cast<int>(sig.classes.size());
  const int p = static_cast<int>(sig.properties.size());
  const int k = static_cast<int>(sig.individuals.size());
  std::uint64_t total = 0;
  for (int n = 1; n <= max_domain; ++n) {
    const int bits = n * c + n * n * p;
    std::uint64_t count = bits >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(n);
    total += count;
    if (bits >= 63 || total > bounds.max_interpretations) {
      throw ModelBoundError("more than " + std::to_string(bounds.max_interpretations) + " interpretations");
    }
  }
  for (int n = 1; n <= max_domain; ++n) {
    Interpretation in;
    in.n = n;
    in.classes.assign(c, 0);
    in.relations.assign(p, 0);
    in.individuals.assign(k, 0);
    const int bits = n * c + n * n * p;
    const std::uint64_t assignments = std::uint64_t{1} << bits;
    const Mask class_mask = (Mask{1} << n) - 1;
    const Mask rel_mask = static_cast<Mask>((std::uint64_t{1} << (n * n)) - 1);
    for (std::uint64_t bitsv = 0; bitsv < assignments; ++bitsv) {
      std::uint64_t v = bitsv;
      for (int i = 0; i < c; ++i, v >>= n) in.classes[i] = static_cast<Mask>(v) & class_mask;
      for (int i = 0; i < p; ++i, v >>= n * n) in.relations[i] = static_cast<Mask>(v) & rel_mask;
      std::fill(in.individuals.begin(), in.individuals.end(), 0);
      while (true) {
        if (!visit(sig, in)) return false;
        int i = 0;
        while (i < k && ++in.individuals[i] == n) in.individuals[i++] = 0;
        if (i == k) break;
      }
    }
  }
  return true;
}

}  // namespace

bool small_model_equivalent(const AxiomBody& a, const AxiomBody& b, int max_domain, const ModelBounds& bounds) {
  const AxiomBody both[] = {a, b};
  const Signature sig = signature_of(both, bounds);
  return enumerate(sig, max_domain, bounds, [&](const Signature& s, const Interpretation& in) {
    Evaluator ev(s, in);
    return std::visit(ev, a) == std::visit(ev, b);
  });
}

bool small_model_entails(std::span<const AxiomBody> premises, const AxiomBody& conclusion, int max_domain,
                         const ModelBounds& bounds) {
  std::vector<AxiomBody> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  const Signature sig = signature_of(all, bounds);
  return enumerate(sig, max_domain, bounds, [&](const Signature& s, const Interpretation& in) {
    Evaluator ev(s, in);
    for (const auto& p : premises) {
      if (!std::visit(ev, p)) return true;
    }
    return std::visit(ev, conclusion);
  });
}

}  // namespace owlverb
