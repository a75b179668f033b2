#include "owlverb/diagram.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "owlverb/manchester.hpp"

namespace owlverb {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::ClassNode: return "class-node";
    case ElementKind::IndividualNode: return "individual-node";
    case ElementKind::AssociationEdge: return "association-edge";
    case ElementKind::GeneralizationEdge: return "generalization-edge";
    case ElementKind::ForkNode: return "fork-node";
    case ElementKind::RestrictionEdge: return "restriction-edge";
    case ElementKind::InstanceOfEdge: return "instanceof-edge";
    case ElementKind::AttributeLine: return "attribute-line";
    case ElementKind::ExpressionField: return "expression-field";
  }
  return "?";
}

const DiagramElement* DiagramModel::find(std::string_view id) const {
  for (const auto& e : elements) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const DiagramElement& DiagramModel::at(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw NotFoundError("no diagram element '" + std::string(id) + "'");
}

namespace {

using K = ClassExpression::Kind;

// Named class of an expression; Thing counts as the named class owl:Thing.
std::optional<EntityRef> named_class(const ClassExpression& e) {
  if (e.kind() == K::Thing) return owl_thing();
  if (e.is_named()) return e.entity();
  return std::nullopt;
}

std::optional<EntityRef> proper_class(const ClassExpression& e) {
  if (e.is_named() && !is_owl_thing(e.entity())) return e.entity();
  return std::nullopt;
}

std::string class_id(const EntityRef& c) { return "class:" + c.name; }

struct Fork {
  std::string id;
  EntityRef super;
  std::set<EntityRef> members;
};

class Builder {
 public:
  explicit Builder(const Ontology& o) : o_(o) {}

  DiagramModel run() {
    for (const auto& e : o_.declarations()) {
      if (e.kind == EntityKind::Class) class_node(e);
      if (e.kind == EntityKind::NamedIndividual) {
        add({.id = "individual:" + e.name, .kind = ElementKind::IndividualNode, .labels = {e.name}, .entities = {e}});
      }
    }
    for (const auto& e : o_.declarations()) {
      if (e.kind == EntityKind::DataProperty) attribute(e);
    }
    pair_inverses();
    for (const auto& e : o_.declarations()) {
      if (e.kind == EntityKind::ObjectProperty && !edge_of_.count(e)) association(e);
    }
    generalizations();
    for (const auto& a : o_.axioms()) {
      if (!handled_.count(a.id)) place(a);
    }
    return std::move(d_);
  }

 private:
  std::string add(DiagramElement e) {
    std::string id = e.id;
    for (int n = 2; index_.count(id); ++n) id = e.id + ":" + std::to_string(n);
    e.id = id;
    index_[id] = d_.elements.size();
    d_.element_axioms[id];
    d_.elements.push_back(std::move(e));
    return id;
  }

  DiagramElement& element(const std::string& id) { return d_.elements[index_.at(id)]; }

  void attach(const std::string& element_id, const std::string& axiom_id) {
    auto& list = d_.element_axioms[element_id];
    if (std::find(list.begin(), list.end(), axiom_id) == list.end()) list.push_back(axiom_id);
  }

  std::string class_node(const EntityRef& c) {
    const std::string id = class_id(c);
    if (!index_.count(id)) {
      add({.id = id, .kind = ElementKind::ClassNode, .labels = {c.name}, .entities = {c}});
    }
    return id;
  }

  std::string field(const EntityRef& owner, std::string label, const std::string& axiom_id) {
    const std::string owner_id = class_node(owner);
    const int n = ++field_count_[owner.name];
    const std::string id = add({.id = "field:" + owner.name + ":" + std::to_string(n),
                                .kind = ElementKind::ExpressionField,
                                .owner = owner_id,
                                .labels = {std::move(label)},
                                .entities = {owner}});
    attach(id, axiom_id);
    return id;
  }

  void attribute(const EntityRef& p) {
    std::optional<EntityRef> domain;
    std::string range;
    for (const auto& a : o_.axioms()) {
      if (const auto* d = a.as<DataPropertyDomain>(); d && d->property == p && !domain) domain = named_class(d->domain);
      if (const auto* r = a.as<DataPropertyRange>(); r && r->property == p && range.empty()) range = r->datatype.name;
    }
    const std::string owner = class_node(domain.value_or(owl_thing()));
    const std::string id =
        add({.id = "attr:" + p.name, .kind = ElementKind::AttributeLine, .owner = owner,
             .labels = {range.empty() ? p.name : p.name + " : " + range}, .entities = {p}});
    edge_of_[p] = id;
  }

  void pair_inverses() {
    for (const auto& a : o_.axioms()) {
      const auto* inv = a.as<InverseObjectProperties>();
      if (!inv || inv->first == inv->second) continue;
      if (partner_.count(inv->first) || partner_.count(inv->second)) continue;
      partner_[inv->first] = inv->second;
      partner_[inv->second] = inv->first;
    }
  }

  // Named class on the subject side of `p` (inverted: the object side).
  std::optional<EntityRef> subject_class(const EntityRef& p, bool inverted) const {
    for (const auto& a : o_.axioms()) {
      if (const auto* d = a.as<ObjectPropertyDomain>(); d && d->property == PropertyExpression{p, inverted}) {
        if (auto c = named_class(d->domain)) return c;
      }
      if (const auto* r = a.as<ObjectPropertyRange>(); r && r->property == PropertyExpression{p, !inverted}) {
        if (auto c = named_class(r->range)) return c;
      }
    }
    return std::nullopt;
  }

  void association(const EntityRef& p) {
    EntityRef primary = p;
    std::optional<EntityRef> other;
    if (auto it = partner_.find(p); it != partner_.end()) {
      other = it->second;
      if (other->name < primary.name) std::swap(primary, *other);
    }
    auto source = subject_class(primary, false);
    if (!source && other) source = subject_class(*other, true);
    auto target = subject_class(primary, true);
    if (!target && other) target = subject_class(*other, false);

    DiagramElement e{.id = "prop:" + primary.name, .kind = ElementKind::AssociationEdge, .labels = {primary.name},
                     .entities = {primary}};
    e.source = class_node(source.value_or(owl_thing()));
    e.target = class_node(target.value_or(owl_thing()));
    if (other) {
      e.labels.push_back(other->name);
      e.entities.push_back(*other);
    }
    const std::string id = add(std::move(e));
    const DiagramElement& edge = element(id);
    edge_of_[primary] = id;
    ends_[primary] = {edge.source, edge.target};
    if (other) {
      edge_of_[*other] = id;
      ends_[*other] = {edge.target, edge.source};
    }
  }

  // Named subclass pairs, forks over disjoint or covering sibling sets, and
  // the generalization edges themselves.
  void generalizations() {
    std::map<EntityRef, std::set<EntityRef>> subs;
    for (const auto& a : o_.axioms()) {
      if (const auto* s = a.as<SubClassOf>()) {
        auto sub = proper_class(s->sub);
        auto sup = named_class(s->sup);
        if (sub && sup && *sub != *sup) subs[*sup].insert(*sub);
      }
    }
    auto sibling_super = [&](const std::set<EntityRef>& members) -> std::optional<EntityRef> {
      if (members.size() < 2) return std::nullopt;
      for (const auto& [sup, children] : subs) {
        if (std::includes(children.begin(), children.end(), members.begin(), members.end())) return sup;
      }
      return std::nullopt;
    };
    auto named_set = [](std::span<const ClassExpression> ops) -> std::optional<std::set<EntityRef>> {
      std::set<EntityRef> out;
      for (const auto& op : ops) {
        auto c = proper_class(op);
        if (!c) return std::nullopt;
        out.insert(*c);
      }
      return out;
    };
    auto fork_for = [&](const EntityRef& sup, const std::set<EntityRef>& members, const std::string& label,
                        const std::string& axiom_id) {
      auto it = std::find_if(forks_.begin(), forks_.end(),
                             [&](const Fork& f) { return f.super == sup && f.members == members; });
      if (it == forks_.end()) {
        const int n = ++fork_count_[sup.name];
        DiagramElement e{.id = "fork:" + sup.name + ":" + std::to_string(n), .kind = ElementKind::ForkNode};
        e.target = class_node(sup);
        e.entities.push_back(sup);
        e.entities.insert(e.entities.end(), members.begin(), members.end());
        forks_.push_back({add(std::move(e)), sup, members});
        it = std::prev(forks_.end());
      }
      auto& labels = element(it->id).labels;
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
      attach(it->id, axiom_id);
      handled_.insert(axiom_id);
    };

    for (const auto& a : o_.axioms()) {
      if (const auto* d = a.as<DisjointClasses>()) {
        if (auto members = named_set(d->operands); members && members->size() == d->operands.size()) {
          if (auto sup = sibling_super(*members)) fork_for(*sup, *members, "disjoint", a.id);
        }
      }
      // Covering: S = A or B or ...  /  S SubClassOf A or B or ...
      std::optional<EntityRef> whole;
      const ClassExpression* cover = nullptr;
      if (const auto* eq = a.as<EquivalentClasses>(); eq && eq->operands.size() == 2) {
        for (int i = 0; i < 2 && !whole; ++i) {
          if (eq->operands[i].kind() == K::UnionOf) {
            whole = proper_class(eq->operands[1 - i]);
            cover = &eq->operands[i];
          }
        }
      } else if (const auto* s = a.as<SubClassOf>(); s && s->sup.kind() == K::UnionOf) {
        whole = proper_class(s->sub);
        cover = &s->sup;
      }
      if (whole && cover) {
        if (auto members = named_set(cover->operands()); members && subs[*whole].size() >= members->size() &&
                                                          std::includes(subs[*whole].begin(), subs[*whole].end(),
                                                                        members->begin(), members->end()) &&
                                                          members->size() >= 2) {
          fork_for(*whole, *members, "complete", a.id);
        }
      }
    }

    for (const auto& a : o_.axioms()) {
      const auto* s = a.as<SubClassOf>();
      if (!s) continue;
      auto sub = proper_class(s->sub);
      auto sup = named_class(s->sup);
      if (!sub || !sup || *sub == *sup) continue;
      DiagramElement e{.id = "gen:" + sub->name + ":" + sup->name, .kind = ElementKind::GeneralizationEdge,
                       .entities = {*sub, *sup}};
      e.source = class_node(*sub);
      e.target = class_node(*sup);
      for (const auto& f : forks_) {
        if (f.super == *sup && f.members.count(*sub)) {
          e.target = f.id;
          attach(f.id, a.id);
          break;
        }
      }
      attach(add(std::move(e)), a.id);
      handled_.insert(a.id);
    }
  }

  void on_property_edges(const Axiom& a) {
    bool any = false;
    for (const auto& e : signature(a.body)) {
      if (auto it = edge_of_.find(e); it != edge_of_.end()) {
        attach(it->second, a.id);
        any = true;
      }
    }
    if (!any) generic(a);
  }

  // Fallback: a plain field holding the Manchester rendering, on the node of
  // the first entity the axiom mentions.
  void generic(const Axiom& a) {
    const auto sig = signature(a.body);
    for (const auto& e : sig) {
      switch (e.kind) {
        case EntityKind::Class: field(e, render_manchester(a.body), a.id); return;
        case EntityKind::ObjectProperty:
        case EntityKind::DataProperty: attach(edge_of_.at(e), a.id); return;
        case EntityKind::NamedIndividual: attach("individual:" + e.name, a.id); return;
        case EntityKind::Datatype: break;
      }
    }
    field(owl_thing(), render_manchester(a.body), a.id);
  }

  static std::string joined(std::span<const ClassExpression> ops, std::size_t skip) {
    std::string out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i == skip) continue;
      if (!out.empty()) out += ", ";
      out += render_manchester(ops[i]);
    }
    return out;
  }

  void place(const Axiom& a) {
    std::visit([&](const auto& body) { place(a, body); }, a.body);
  }

  void place(const Axiom& a, const SubClassOf& s) {
    auto sub = proper_class(s.sub);
    if (!sub) return generic(a);
    if (s.sup.kind() == K::AllValuesFrom && s.sup.property().inverted) {
      if (auto target = proper_class(s.sup.filler())) {
        DiagramElement e{.id = "restr:" + sub->name + ":" + target->name, .kind = ElementKind::RestrictionEdge,
                         .labels = {render_manchester(s.sup.property()) + " only"},
                         .entities = {*sub, s.sup.property().base, *target}};
        e.source = class_node(*sub);
        e.target = class_node(*target);
        attach(add(std::move(e)), a.id);
        return;
      }
    }
    if (s.sup.is_cardinality()) {
      const PropertyExpression& p = s.sup.property();
      if (auto it = ends_.find(p.base); it != ends_.end()) {
        const std::string& subject_side = p.inverted ? it->second.second : it->second.first;
        if (subject_side == class_id(*sub)) {
          const std::string& edge = edge_of_.at(p.base);
          element(edge).labels.push_back(render_manchester(s.sup));
          attach(edge, a.id);
          return;
        }
      }
    }
    field(*sub, "< " + render_manchester(s.sup), a.id);
  }

  void place(const Axiom& a, const EquivalentClasses& eq) {
    for (std::size_t i = 0; i < eq.operands.size(); ++i) {
      if (auto c = proper_class(eq.operands[i])) return void(field(*c, "= " + joined(eq.operands, i), a.id));
    }
    generic(a);
  }

  void place(const Axiom& a, const DisjointClasses& dc) {
    for (std::size_t i = 0; i < dc.operands.size(); ++i) {
      if (auto c = proper_class(dc.operands[i])) return void(field(*c, "<> " + joined(dc.operands, i), a.id));
    }
    generic(a);
  }

  void place(const Axiom& a, const ClassAssertion& ca) {
    if (auto c = proper_class(ca.type)) {
      DiagramElement e{.id = "inst:" + ca.individual.name + ":" + c->name, .kind = ElementKind::InstanceOfEdge,
                       .entities = {ca.individual, *c}};
      e.source = "individual:" + ca.individual.name;
      e.target = class_node(*c);
      attach(add(std::move(e)), a.id);
      return;
    }
    const std::string id = "individual:" + ca.individual.name;
    element(id).labels.push_back(": " + render_manchester(ca.type));
    attach(id, a.id);
  }

  void place(const Axiom& a, const ObjectPropertyAssertion& pa) {
    DiagramElement e{.id = "link:" + std::to_string(++link_count_), .kind = ElementKind::AssociationEdge,
                     .labels = {pa.property.name}, .entities = {pa.property, pa.subject, pa.object}};
    e.source = "individual:" + pa.subject.name;
    e.target = "individual:" + pa.object.name;
    attach(add(std::move(e)), a.id);
  }

  void place(const Axiom& a, const DataPropertyAssertion& da) {
    const std::string id = "individual:" + da.subject.name;
    element(id).labels.push_back(da.property.name + " = " +
                                 (da.value.datatype == "integer" ? da.value.lexical : "\"" + da.value.lexical + "\""));
    attach(id, a.id);
  }

  void place(const Axiom&, const Declaration&) {}

  template <class Other>
  void place(const Axiom& a, const Other&) {
    on_property_edges(a);
  }

  const Ontology& o_;
  DiagramModel d_;
  std::map<std::string, std::size_t> index_;
  std::map<EntityRef, std::string> edge_of_;
  std::map<EntityRef, std::pair<std::string, std::string>> ends_;
  std::map<EntityRef, EntityRef> partner_;
  std::vector<Fork> forks_;
  std::set<std::string> handled_;
  std::map<std::string, int> field_count_, fork_count_;
  int link_count_ = 0;
};

constexpr double kCharWidth = 8;
constexpr double kLineHeight = 20;
constexpr double kHorizontalGap = 40;
constexpr double kLayerGap = 60;

double text_width(const std::vector<std::string>& lines) {
  std::size_t widest = 0;
  for (const auto& l : lines) widest = std::max(widest, l.size());
  return kCharWidth * static_cast<double>(widest);
}

}  // namespace

DiagramModel build_diagram(const Ontology& o) { return Builder(o).run(); }

DiagramModel layout(DiagramModel d) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < d.elements.size(); ++i) index[d.elements[i].id] = i;

  // Node sizes: own labels plus the lines of everything they contain.
  std::map<std::string, std::vector<std::string>> owned;
  for (const auto& e : d.elements) {
    if (!e.owner.empty()) owned[e.owner].insert(owned[e.owner].end(), e.labels.begin(), e.labels.end());
  }
  for (auto& e : d.elements) {
    if (!e.is_node()) continue;
    std::vector<std::string> lines = e.labels;
    const auto& inner = owned[e.id];
    lines.insert(lines.end(), inner.begin(), inner.end());
    if (lines.empty()) lines.emplace_back(" ");
    e.w = text_width(lines);
    e.h = kLineHeight * static_cast<double>(lines.size());
  }

  // Hierarchy parents: superclass (or fork) above, class above its instances.
  std::map<std::string, std::vector<std::string>> parents;
  for (const auto& e : d.elements) {
    const bool up = e.kind == ElementKind::GeneralizationEdge || e.kind == ElementKind::InstanceOfEdge;
    if (up) parents[e.source].push_back(e.target);
    if (e.kind == ElementKind::ForkNode) parents[e.id].push_back(e.target);
  }
  std::map<std::string, int> layer;
  std::set<std::string> visiting;
  std::function<int(const std::string&)> layer_of = [&](const std::string& id) -> int {
    if (auto it = layer.find(id); it != layer.end()) return it->second;
    visiting.insert(id);
    int l = 0;
    for (const auto& p : parents[id]) {
      if (!visiting.count(p)) l = std::max(l, layer_of(p) + 1);
    }
    visiting.erase(id);
    return layer[id] = l;
  };

  std::map<int, std::vector<std::string>> layers;
  for (const auto& e : d.elements) {
    if (e.is_node()) layers[layer_of(e.id)].push_back(e.id);
  }

  double top = 0;
  for (auto& [l, ids] : layers) {
    auto barycenter = [&](const std::string& id) {
      const auto& ps = parents[id];
      if (ps.empty() || l == 0) return std::numeric_limits<double>::infinity();
      double sum = 0;
      for (const auto& p : ps) sum += d.elements[index.at(p)].x;
      return sum / static_cast<double>(ps.size());
    };
    std::vector<std::pair<double, std::string>> keyed;
    for (const auto& id : ids) keyed.emplace_back(barycenter(id), id);
    std::sort(keyed.begin(), keyed.end());

    double cursor = 0, tallest = 0;
    for (const auto& [_, id] : keyed) {
      auto& e = d.elements[index.at(id)];
      e.x = cursor + e.w / 2;
      e.y = top + e.h / 2;
      cursor += e.w + kHorizontalGap;
      tallest = std::max(tallest, e.h);
    }
    const double shift = (cursor - kHorizontalGap) / 2;
    for (const auto& [_, id] : keyed) d.elements[index.at(id)].x -= shift;
    top += tallest + kLayerGap;
  }

  // Center the whole drawing on the origin.
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& e : d.elements) {
    if (!e.is_node()) continue;
    if (first) {
      min_x = e.x - e.w / 2, max_x = e.x + e.w / 2, min_y = e.y - e.h / 2, max_y = e.y + e.h / 2;
      first = false;
    }
    min_x = std::min(min_x, e.x - e.w / 2);
    max_x = std::max(max_x, e.x + e.w / 2);
    min_y = std::min(min_y, e.y - e.h / 2);
    max_y = std::max(max_y, e.y + e.h / 2);
  }
  const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
  for (auto& e : d.elements) {
    if (!e.is_node()) continue;
    e.x -= cx;
    e.y -= cy;
  }

  // Contained lines stack below the node's name; edges sit at the midpoint.
  std::map<std::string, double> next_line;
  for (auto& e : d.elements) {
    if (!e.owner.empty()) {
      const auto& owner = d.elements[index.at(e.owner)];
      auto [it, fresh] = next_line.emplace(e.owner, owner.y - owner.h / 2 + kLineHeight * owner.labels.size());
      e.w = owner.w;
      e.h = kLineHeight * static_cast<double>(e.labels.size());
      e.x = owner.x;
      e.y = it->second + e.h / 2;
      it->second += e.h;
    } else if (!e.is_node()) {
      const auto& s = d.elements[index.at(e.source)];
      const auto& t = d.elements[index.at(e.target)];
      e.x = (s.x + t.x) / 2;
      e.y = (s.y + t.y) / 2;
      e.w = text_width(e.labels);
      e.h = kLineHeight * static_cast<double>(e.labels.size());
    }
  }
  return d;
}

const DiagramElement& element_for(const DiagramModel& d, const EntityRef& entity) {
  const DiagramElement* found = nullptr;
  switch (entity.kind) {
    case EntityKind::Class: found = d.find("class:" + entity.name); break;
    case EntityKind::NamedIndividual: found = d.find("individual:" + entity.name); break;
    case EntityKind::DataProperty: found = d.find("attr:" + entity.name); break;
    case EntityKind::ObjectProperty:
      for (const auto& e : d.elements) {
        if (e.id.starts_with("prop:") && std::find(e.entities.begin(), e.entities.end(), entity) != e.entities.end()) {
          found = &e;
          break;
        }
      }
      break;
    case EntityKind::Datatype: break;
  }
  if (!found) throw NotFoundError("no diagram element for '" + entity.name + "'");
  return *found;
}

Scope scope_from_string(std::string_view s) {
  if (s == "direct") return Scope::Direct;
  if (s == "referencing") return Scope::Referencing;
  if (s == "inferred") return Scope::Inferred;
  throw std::invalid_argument("unknown scope '" + std::string(s) + "'");
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::Direct: return "direct";
    case Scope::Referencing: return "referencing";
    case Scope::Inferred: return "inferred";
  }
  return "?";
}

std::vector<TaggedAxiom> collect(const DiagramModel& d, const Ontology& o, const std::vector<InferredAxiom>& inferred,
                                 std::string_view element, Scope scope) {
  const DiagramElement& el = d.at(element);
  std::vector<TaggedAxiom> out;
  std::set<std::string> seen;
  for (const auto& id : d.element_axioms.at(el.id)) {
    out.push_back({o.axiom(id), false});
    seen.insert(id);
  }
  auto about_element = [&](const AxiomBody& body) {
    return std::any_of(el.entities.begin(), el.entities.end(), [&](const EntityRef& e) { return mentions(body, e); });
  };
  if (scope != Scope::Direct) {
    for (const auto& a : o.axioms()) {
      if (a.kind() != AxiomKind::Declaration && !seen.count(a.id) && about_element(a.body)) {
        out.push_back({a, false});
        seen.insert(a.id);
      }
    }
  }
  if (scope == Scope::Inferred) {
    for (const auto& i : inferred) {
      if (!seen.count(i.axiom.id) && about_element(i.axiom.body)) {
        out.push_back({i.axiom, true});
        seen.insert(i.axiom.id);
      }
    }
  }
  sort_by_axiom_type(out);
  return out;
}

std::string diagram_json(const DiagramModel& d, int indent) {
  using nlohmann::ordered_json;
  auto text_or_null = [](const std::string& s) { return s.empty() ? ordered_json(nullptr) : ordered_json(s); };
  ordered_json elements = ordered_json::array();
  for (const auto& e : d.elements) {
    elements.push_back({{"id", e.id},
                        {"kind", to_string(e.kind)},
                        {"owner", text_or_null(e.owner)},
                        {"labels", e.labels},
                        {"x", e.x},
                        {"y", e.y},
                        {"w", e.w},
                        {"h", e.h},
                        {"source", text_or_null(e.source)},
                        {"target", text_or_null(e.target)}});
  }
  ordered_json map = ordered_json::object();
  for (const auto& e : d.elements) map[e.id] = d.element_axioms.at(e.id);
  return ordered_json{{"elements", std::move(elements)}, {"element_axioms", std::move(map)}}.dump(indent);
}

}  // namespace owlverb
