#include "owlverb/verbalizer.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "owlverb/manchester.hpp"

namespace owlverb {

// --- paraphrase ---------------------------------------------------------------------

namespace {

using K = ClassExpression::Kind;

bool is_thing(const ClassExpression& e) {
  return e.kind() == K::Thing || (e.is_named() && is_owl_thing(e.entity()));
}

std::optional<AxiomBody> paraphrase(const AxiomBody& body) {
  if (const auto* sub = std::get_if<SubClassOf>(&body)) {
    if (sub->sup.kind() == K::AllValuesFrom && sub->sup.property().inverted) {
      return SubClassOf{ClassExpression::some(sub->sup.property().inverse(), sub->sub), sub->sup.filler()};
    }
  }
  if (const auto* dom = std::get_if<ObjectPropertyDomain>(&body)) {
    return SubClassOf{ClassExpression::some(dom->property, ClassExpression::thing()), dom->domain};
  }
  if (const auto* rng = std::get_if<ObjectPropertyRange>(&body)) {
    return SubClassOf{ClassExpression::some(rng->property.inverse(), ClassExpression::thing()), rng->range};
  }
  return std::nullopt;
}

}  // namespace

AxiomBody paraphrase_normalize(const AxiomBody& body) {
  if (auto p = paraphrase(body)) return *p;
  return body;
}

Axiom paraphrase_normalize(const Axiom& a) { return Axiom{a.id, paraphrase_normalize(a.body)}; }

// --- realization ----------------------------------------------------------------------

namespace {

struct Unsupported {};

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string with_article(const std::string& noun) { return indefinite_article(noun) + " " + noun; }

class Realizer {
 public:
  explicit Realizer(const Lexicon& lex) : lex_(lex) {}

  std::vector<std::string> sentences(const AxiomBody& body) const {
    return std::visit([this](const auto& a) { return realize(a); }, body);
  }

 private:
  const LexiconEntry& entry(const EntityRef& e) const { return lex_.at(e); }

  std::string noun(const EntityRef& e, bool plural) const {
    const LexiconEntry& en = entry(e);
    if (en.category != Category::CommonNoun) throw Unsupported{};
    return en.form(plural ? "pl" : "sg");
  }

  std::string name(const EntityRef& e) const {
    const LexiconEntry& en = entry(e);
    if (en.category != Category::ProperName) throw Unsupported{};
    return en.form("phrase");
  }

  // Verb phrase relating the subject to `object` through `p`.
  std::string relate(const PropertyExpression& p, const std::string& object) const {
    const LexiconEntry& en = entry(p.base);
    if (en.category == Category::HasNoun) {
      const std::string& sg = en.form("sg");
      if (!p.inverted) return "has " + object + " as " + sg;
      return "is " + with_article(sg) + " of " + object;
    }
    if (en.category != Category::TransitiveVerb) throw Unsupported{};
    if (!p.inverted) return en.form("vbz") + " " + object;
    if (en.has("inv")) return en.form("inv") + " " + object;
    return "is " + en.form("vbp-passive") + " by " + object;
  }

  std::string some_np(const ClassExpression& f) const {
    if (is_thing(f)) return "something";
    if (f.is_named()) return with_article(noun(f.entity(), false));
    throw Unsupported{};
  }

  std::string counted_np(const ClassExpression& f, bool plural) const {
    if (is_thing(f)) return plural ? "things" : "thing";
    if (f.is_named()) return noun(f.entity(), plural);
    throw Unsupported{};
  }

  std::string simple_vp(const ClassExpression& c) const {
    if (is_thing(c)) return "is something";
    switch (c.kind()) {
      case K::Named: return "is " + with_article(noun(c.entity(), false));
      case K::ComplementOf:
        if (c.filler().is_named() && !is_thing(c.filler())) {
          return "is not " + with_article(noun(c.filler().entity(), false));
        }
        throw Unsupported{};
      case K::SomeValuesFrom: return relate(c.property(), some_np(c.filler()));
      case K::AllValuesFrom: return relate(c.property(), "nothing but " + counted_np(c.filler(), true));
      case K::MinCardinality:
      case K::MaxCardinality:
      case K::ExactCardinality: {
        const char* q = c.kind() == K::MinCardinality ? "at least " : c.kind() == K::MaxCardinality ? "at most " : "exactly ";
        const std::uint32_t n = c.cardinality();
        return relate(c.property(), q + std::to_string(n) + " " + counted_np(c.filler(), n != 1));
      }
      default: throw Unsupported{};
    }
  }

  std::string vp(const ClassExpression& c) const {
    if (!c.is_nary()) return simple_vp(c);
    const char* glue = c.kind() == K::IntersectionOf ? " and " : " or ";
    std::string out;
    for (const auto& op : c.operands()) {
      if (op.is_nary()) throw Unsupported{};
      if (!out.empty()) out += glue;
      out += simple_vp(op);
    }
    return out;
  }

  // "Every teacher", "Everything", "Everything that likes something".
  std::string every(const ClassExpression& s) const {
    if (is_thing(s)) return "everything";
    if (s.is_named()) return "every " + noun(s.entity(), false);
    return "everything that " + vp(s);
  }

  std::string no(const ClassExpression& s) const {
    if (is_thing(s)) return "nothing";
    if (s.is_named()) return "no " + noun(s.entity(), false);
    return "nothing that " + vp(s);
  }

  static std::string finish(std::string s) { return capitalize(std::move(s)) + "."; }

  std::string subclass(const ClassExpression& sub, const ClassExpression& sup) const {
    return finish(every(sub) + " " + vp(sup));
  }

  std::vector<std::string> realize(const SubClassOf& a) const { return {subclass(a.sub, a.sup)}; }
  std::vector<std::string> realize(const EquivalentClasses& a) const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < a.operands.size(); ++i) {
      out.push_back(subclass(a.operands[0], a.operands[i]));
      out.push_back(subclass(a.operands[i], a.operands[0]));
    }
    return out;
  }
  std::vector<std::string> realize(const DisjointClasses& a) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.operands.size(); ++i) {
      for (std::size_t j = i + 1; j < a.operands.size(); ++j) {
        out.push_back(finish(no(a.operands[i]) + " " + vp(a.operands[j])));
      }
    }
    return out;
  }
  std::vector<std::string> realize(const ObjectPropertyDomain&) const { throw Unsupported{}; }
  std::vector<std::string> realize(const ObjectPropertyRange&) const { throw Unsupported{}; }
  std::vector<std::string> realize(const DataPropertyDomain& a) const {
    const LexiconEntry& en = entry(a.property);
    if (en.category != Category::HasNoun) throw Unsupported{};
    return {finish("everything that has " + with_article(en.form("sg")) + " " + vp(a.domain))};
  }
  std::vector<std::string> realize(const DataPropertyRange&) const { throw Unsupported{}; }
  std::vector<std::string> realize(const InverseObjectProperties& a) const {
    const PropertyExpression p{a.first, false}, q{a.second, false};
    return {finish("if X " + relate(p, "Y") + " then Y " + relate(q, "X")),
            finish("if X " + relate(q, "Y") + " then Y " + relate(p, "X"))};
  }
  std::vector<std::string> realize(const SubObjectPropertyOf& a) const {
    return {finish("if X " + relate(a.sub, "Y") + " then X " + relate(a.sup, "Y"))};
  }
  std::vector<std::string> realize(const EquivalentObjectProperties& a) const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < a.operands.size(); ++i) {
      out.push_back(realize(SubObjectPropertyOf{a.operands[0], a.operands[i]}).front());
      out.push_back(realize(SubObjectPropertyOf{a.operands[i], a.operands[0]}).front());
    }
    return out;
  }
  std::vector<std::string> realize(const DisjointObjectProperties& a) const {
    const PropertyExpression p{a.first, false}, q{a.second, false};
    return {finish("if X " + relate(p, "Y") + " then it is false that X " + relate(q, "Y"))};
  }
  std::vector<std::string> realize(const ClassAssertion& a) const {
    return {finish(name(a.individual) + " " + vp(a.type))};
  }
  std::vector<std::string> realize(const ObjectPropertyAssertion& a) const {
    return {finish(name(a.subject) + " " + relate(PropertyExpression{a.property, false}, name(a.object)))};
  }
  std::vector<std::string> realize(const DataPropertyAssertion& a) const {
    const LexiconEntry& en = entry(a.property);
    if (en.category != Category::HasNoun) throw Unsupported{};
    std::string value;
    const auto& lex = a.value.lexical;
    const bool digits = !lex.empty() && std::all_of(lex.begin(), lex.end(), [](unsigned char c) { return std::isdigit(c); });
    if (a.value.datatype == "integer" && digits) {
      value = lex;
    } else if (a.value.datatype == "string" && lex.find('"') == std::string::npos) {
      value = "\"" + lex + "\"";
    } else {
      throw Unsupported{};
    }
    return {finish(name(a.subject) + " has " + value + " as " + en.form("sg"))};
  }
  std::vector<std::string> realize(const Declaration&) const { throw Unsupported{}; }

  const Lexicon& lex_;
};

// Every entity must have an entry, even when the axiom ends up as a fallback.
void require_entries(const AxiomBody& body, const Lexicon& lex) {
  for (const auto& e : signature(body)) {
    if (e.kind == EntityKind::Datatype || is_owl_thing(e)) continue;
    lex.at(e);
  }
}

std::string rule_for(const Axiom& original, const AxiomBody& realized) {
  switch (original.kind()) {
    case AxiomKind::ObjectPropertyDomain: return "domain";
    case AxiomKind::ObjectPropertyRange: return "range";
    case AxiomKind::SubClassOf: {
      const auto& sub = std::get<SubClassOf>(original.body);
      if (!(realized == original.body)) return "only-paraphrase";
      return sub.sup.is_cardinality() ? "cardinality" : "subclass";
    }
    case AxiomKind::EquivalentClasses: return "equivalent-classes";
    case AxiomKind::DisjointClasses: return "disjoint-classes";
    case AxiomKind::DataPropertyDomain: return "data-domain";
    case AxiomKind::InverseObjectProperties: return "inverse-properties";
    case AxiomKind::SubObjectPropertyOf: return "sub-property";
    case AxiomKind::EquivalentObjectProperties: return "equivalent-properties";
    case AxiomKind::DisjointObjectProperties: return "disjoint-properties";
    case AxiomKind::ClassAssertion: return "class-assertion";
    case AxiomKind::ObjectPropertyAssertion: return "object-assertion";
    case AxiomKind::DataPropertyAssertion: return "data-assertion";
    default: return "fallback";
  }
}

}  // namespace

std::vector<Sentence> verbalize_axiom(const Axiom& a, const Lexicon& lex) {
  require_entries(a.body, lex);
  const AxiomBody p = paraphrase_normalize(a.body);
  std::vector<Sentence> out;
  try {
    for (auto& text : Realizer(lex).sentences(p)) {
      out.push_back(Sentence{std::move(text), {a.id}, false, rule_for(a, p), false});
    }
  } catch (const Unsupported&) {
    out = {Sentence{render_manchester(a.body), {a.id}, false, "fallback", true}};
  }
  return out;
}

std::vector<Sentence> direct_reading(const Axiom& a, const Lexicon& lex) {
  if (a.kind() != AxiomKind::SubClassOf || !paraphrase(a.body)) return {};
  require_entries(a.body, lex);
  try {
    std::vector<Sentence> out;
    for (auto& text : Realizer(lex).sentences(a.body)) {
      out.push_back(Sentence{std::move(text), {a.id}, false, "direct-reading", false});
    }
    return out;
  } catch (const Unsupported&) {
    return {};
  }
}

// --- ordering ---------------------------------------------------------------------------

int axiom_type_rank(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return 0;
    // Range and domain share a rank so that their relative order follows the
    // axiom ids.
    case AxiomKind::ObjectPropertyRange:
    case AxiomKind::ObjectPropertyDomain: return 1;
    case AxiomKind::InverseObjectProperties: return 2;
    case AxiomKind::DisjointObjectProperties: return 3;
    case AxiomKind::DisjointClasses: return 4;
    case AxiomKind::EquivalentClasses: return 5;
    case AxiomKind::ClassAssertion: return 6;
    case AxiomKind::ObjectPropertyAssertion: return 7;
    case AxiomKind::DataPropertyAssertion: return 8;
    default: return 9;
  }
}

bool axiom_id_less(const std::string& a, const std::string& b) {
  auto key = [](const std::string& id) {
    const bool inferred = !id.empty() && !std::isdigit(static_cast<unsigned char>(id[0]));
    std::string digits = inferred ? id.substr(1) : id;
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    return std::make_tuple(inferred, digits.size(), digits, id);
  };
  return key(a) < key(b);
}

void sort_by_axiom_type(std::vector<TaggedAxiom>& axioms) {
  std::sort(axioms.begin(), axioms.end(), [](const TaggedAxiom& x, const TaggedAxiom& y) {
    const int rx = axiom_type_rank(x.axiom.kind()), ry = axiom_type_rank(y.axiom.kind());
    if (rx != ry) return rx < ry;
    return axiom_id_less(x.axiom.id, y.axiom.id);
  });
}

std::vector<Sentence> verbalize_axioms(std::vector<TaggedAxiom> axioms, const Lexicon& lex,
                                       const VerbalizeOptions& options) {
  sort_by_axiom_type(axioms);
  std::vector<Sentence> out;
  for (const auto& item : axioms) {
    for (auto& s : verbalize_axiom(item.axiom, lex)) {
      s.inferred = item.inferred;
      out.push_back(std::move(s));
    }
    if (options.direct_reading) {
      for (auto& s : direct_reading(item.axiom, lex)) {
        s.inferred = item.inferred;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<Sentence> verbalize_axioms(const std::vector<Axiom>& axioms, const Lexicon& lex,
                                       const VerbalizeOptions& options) {
  std::vector<TaggedAxiom> tagged;
  tagged.reserve(axioms.size());
  for (const auto& a : axioms) tagged.push_back({a, false});
  return verbalize_axioms(std::move(tagged), lex, options);
}

}  // namespace owlverb
