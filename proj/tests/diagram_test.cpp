#include "owlverb/diagram.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include "owlverb/reasoner.hpp"
#include "owlverb/verbalizer.hpp"
#include "support.hpp"

namespace owlverb {
namespace {

std::set<std::string> ids_of(const std::vector<TaggedAxiom>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.axiom.id);
  return out;
}

std::vector<std::string> ids_where(const Ontology& o, auto pred) {
  std::vector<std::string> out;
  for (const auto& a : o.axioms()) {
    if (pred(a)) out.push_back(a.id);
  }
  return out;
}

bool covered(const DiagramModel& d, const Ontology& o, std::string* missing) {
  std::set<std::string> carried;
  for (const auto& [id, axioms] : d.element_axioms) carried.insert(axioms.begin(), axioms.end());
  for (const auto& a : o.axioms()) {
    if (a.kind() != AxiomKind::Declaration && !carried.count(a.id)) {
      *missing = a.id + " " + to_functional(a.body);
      return false;
    }
  }
  return true;
}

bool overlaps(const DiagramElement& a, const DiagramElement& b) {
  return std::abs(a.x - b.x) * 2 < a.w + b.w && std::abs(a.y - b.y) * 2 < a.h + b.h;
}

TEST(Mapping, SimpleFragment) {
  const Ontology o = testing::parse_ok(fixture("simple-fragment").omn_source);
  const DiagramModel d = layout(build_diagram(o));

  const auto& person = d.at("class:Person");
  EXPECT_EQ(person.kind, ElementKind::ClassNode);
  EXPECT_EQ(person.labels, std::vector<std::string>{"Person"});

  const auto& age = d.at("attr:hasAge");
  EXPECT_EQ(age.kind, ElementKind::AttributeLine);
  EXPECT_EQ(age.owner, "class:Person");
  EXPECT_EQ(age.labels, std::vector<std::string>{"hasAge : integer"});

  const auto& likes = d.at("prop:likes");
  EXPECT_EQ(likes.kind, ElementKind::AssociationEdge);
  EXPECT_EQ(likes.source, "class:Person");
  EXPECT_EQ(likes.target, "class:Person");

  const auto likes_e = *o.find(EntityKind::ObjectProperty, "likes");
  const auto expected = ids_where(o, [&](const Axiom& a) {
    return (a.kind() == AxiomKind::ObjectPropertyDomain || a.kind() == AxiomKind::ObjectPropertyRange) &&
           mentions(a.body, likes_e);
  });
  EXPECT_EQ(d.element_axioms.at("prop:likes"), expected);
}

TEST(Mapping, DeclarationOnlyOntologyIsOneCenteredNode) {
  const Ontology o = testing::parse_ok("Class: A\n");
  const DiagramModel d = layout(build_diagram(o));
  ASSERT_EQ(d.elements.size(), 1u);
  EXPECT_EQ(d.elements[0].id, "class:A");
  EXPECT_DOUBLE_EQ(d.elements[0].x, 0.0);
  EXPECT_DOUBLE_EQ(d.elements[0].y, 0.0);
  EXPECT_TRUE(d.element_axioms.at("class:A").empty());
}

TEST(Mapping, EmptyOntologyHasNoElements) {
  const DiagramModel d = layout(build_diagram(Ontology{}));
  EXPECT_TRUE(d.elements.empty());
  EXPECT_EQ(diagram_json(d), R"({"elements":[],"element_axioms":{}})");
}

class MiniUniversity : public ::testing::Test {
 protected:
  void SetUp() override {
    onto = testing::parse_ok(fixture("mini-university").omn_source);
    inferred = infer(onto);
    d = layout(build_diagram(onto));
  }
  Ontology onto;
  std::vector<InferredAxiom> inferred;
  DiagramModel d;
};

TEST_F(MiniUniversity, DisjointSubclassesShareAFork) {
  const auto& fork = d.at("fork:Teacher:1");
  EXPECT_EQ(fork.kind, ElementKind::ForkNode);
  EXPECT_EQ(fork.labels, std::vector<std::string>{"disjoint"});
  EXPECT_EQ(fork.target, "class:Teacher");
  for (const char* sub : {"Assistant", "Docent", "Professor"}) {
    EXPECT_EQ(d.at(std::string("gen:") + sub + ":Teacher").target, "fork:Teacher:1");
  }
}

TEST_F(MiniUniversity, OnlyRestrictionIsAnEdge) {
  const auto& r = d.at("restr:MandatoryCourse:Professor");
  EXPECT_EQ(r.kind, ElementKind::RestrictionEdge);
  EXPECT_EQ(r.source, "class:MandatoryCourse");
  EXPECT_EQ(r.target, "class:Professor");
}

TEST_F(MiniUniversity, EveryAxiomIsCarried) {
  std::string missing;
  EXPECT_TRUE(covered(d, onto, &missing)) << missing;
  for (const auto& [id, axioms] : d.element_axioms) {
    EXPECT_NE(d.find(id), nullptr) << id;
    for (const auto& a : axioms) EXPECT_NE(onto.find_axiom(a), nullptr) << a;
  }
}

TEST(Coverage, RandomOntologies) {
  int checked = 0;
  for (std::uint32_t seed = 1; seed <= 150; ++seed) {
    const Ontology o = testing::random_ontology(seed);
    const DiagramModel d = layout(build_diagram(o));
    std::string missing;
    EXPECT_TRUE(covered(d, o, &missing)) << "seed " << seed << ": " << missing;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

// An element's direct axioms only talk about what the element shows.
TEST_F(MiniUniversity, DirectAxiomsMentionTheElementsEntities) {
  for (const auto& e : d.elements) {
    if (e.entities.empty()) continue;
    for (const auto& id : d.element_axioms.at(e.id)) {
      const auto& a = onto.axiom(id);
      const bool local = std::any_of(e.entities.begin(), e.entities.end(), [&](const EntityRef& x) { return mentions(a.body, x); });
      EXPECT_TRUE(local) << e.id << " carries " << to_functional(a.body);
    }
  }
}

TEST(Scopes, AreNestedOnFixtureAndRandomOntologies) {
  std::vector<Ontology> ontologies;
  ontologies.push_back(testing::parse_ok(fixture("mini-university").omn_source));
  for (std::uint32_t seed = 1; seed <= 60; ++seed) ontologies.push_back(testing::random_ontology(seed));
  for (const auto& o : ontologies) {
    const auto inf = infer(o);
    const DiagramModel d = build_diagram(o);
    for (const auto& e : d.elements) {
      const auto direct = ids_of(collect(d, o, inf, e.id, Scope::Direct));
      const auto referencing = ids_of(collect(d, o, inf, e.id, Scope::Referencing));
      const auto with_inferred = collect(d, o, inf, e.id, Scope::Inferred);
      const auto inferred_ids = ids_of(with_inferred);
      EXPECT_TRUE(std::includes(referencing.begin(), referencing.end(), direct.begin(), direct.end())) << e.id;
      EXPECT_TRUE(std::includes(inferred_ids.begin(), inferred_ids.end(), referencing.begin(), referencing.end())) << e.id;
      for (const auto& x : with_inferred) EXPECT_EQ(x.inferred, x.axiom.id.front() == 'i') << e.id;
    }
  }
}

// Oracle: direct ids plus a scan for every non-Declaration axiom that
// mentions Course.
TEST_F(MiniUniversity, ReferencingScopeMatchesBruteForce) {
  const EntityRef course = *onto.find(EntityKind::Class, "Course");
  std::set<std::string> expected(d.element_axioms.at("class:Course").begin(), d.element_axioms.at("class:Course").end());
  for (const auto& id : ids_where(onto, [&](const Axiom& a) {
         return a.kind() != AxiomKind::Declaration && mentions(a.body, course);
       })) {
    expected.insert(id);
  }
  const auto got = collect(d, onto, inferred, "class:Course", Scope::Referencing);
  EXPECT_EQ(ids_of(got), expected);
  for (std::size_t i = 1; i < got.size(); ++i) {
    EXPECT_LE(axiom_type_rank(got[i - 1].axiom.kind()), axiom_type_rank(got[i].axiom.kind()));
  }
}

TEST_F(MiniUniversity, InferredScopeAddsFlaggedConclusions) {
  const auto got = collect(d, onto, inferred, "class:BigCourse", Scope::Inferred);
  ASSERT_FALSE(got.empty());
  EXPECT_TRUE(got.front().inferred);
  EXPECT_EQ(to_functional(got.front().axiom.body), "SubClassOf(BigCourse Course)");
  EXPECT_TRUE(collect(d, onto, inferred, "class:SimpleCourse", Scope::Inferred).size() ==
              collect(d, onto, inferred, "class:SimpleCourse", Scope::Referencing).size());
}

TEST_F(MiniUniversity, UnknownElementAndScope) {
  EXPECT_THROW(collect(d, onto, inferred, "class:Zebra", Scope::Direct), NotFoundError);
  EXPECT_THROW(d.at("class:Zebra"), NotFoundError);
  EXPECT_THROW(scope_from_string("everything"), std::invalid_argument);
  EXPECT_EQ(element_for(d, *onto.find(EntityKind::ObjectProperty, "takes")).id, "prop:hasEnrolled");
}

TEST_F(MiniUniversity, LayoutHierarchyAndOrder) {
  const auto& teacher = d.at("class:Teacher");
  const auto& person = d.at("class:Person");
  const auto& fork = d.at("fork:Teacher:1");
  EXPECT_LT(person.y, teacher.y);
  EXPECT_LT(teacher.y, fork.y);
  double last_x = -1e9;
  for (const char* sub : {"class:Assistant", "class:Docent", "class:Professor"}) {
    const auto& e = d.at(sub);
    EXPECT_LT(fork.y, e.y) << sub;
    EXPECT_LT(last_x, e.x) << sub;
    last_x = e.x;
  }
  EXPECT_LT(d.at("class:Professor").y, d.at("individual:Bob").y);
}

void expect_sound_layout(const DiagramModel& d, const std::string& where) {
  std::vector<const DiagramElement*> nodes;
  double lo_x = 1e18, hi_x = -1e18, lo_y = 1e18, hi_y = -1e18;
  for (const auto& e : d.elements) {
    if (!e.is_node()) continue;
    EXPECT_GT(e.w, 0) << where << " " << e.id;
    EXPECT_GT(e.h, 0) << where << " " << e.id;
    for (const auto* other : nodes) EXPECT_FALSE(overlaps(*other, e)) << where << ": " << other->id << " / " << e.id;
    nodes.push_back(&e);
    lo_x = std::min(lo_x, e.x - e.w / 2);
    hi_x = std::max(hi_x, e.x + e.w / 2);
    lo_y = std::min(lo_y, e.y - e.h / 2);
    hi_y = std::max(hi_y, e.y + e.h / 2);
  }
  if (nodes.empty()) return;
  EXPECT_NEAR(lo_x + hi_x, 0.0, 1e-6) << where;
  EXPECT_NEAR(lo_y + hi_y, 0.0, 1e-6) << where;
  for (const auto& e : d.elements) {
    if (e.owner.empty()) continue;
    const auto& owner = d.at(e.owner);
    EXPECT_LE(owner.y - owner.h / 2, e.y - e.h / 2 + 1e-9) << where << " " << e.id;
    EXPECT_GE(owner.y + owner.h / 2, e.y + e.h / 2 - 1e-9) << where << " " << e.id;
  }
}

TEST_F(MiniUniversity, LayoutIsSound) { expect_sound_layout(d, "mini-university"); }

TEST(Layout, RandomOntologiesAreSoundAndDeterministic) {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    const Ontology o = testing::random_ontology(seed);
    const DiagramModel d = layout(build_diagram(o));
    expect_sound_layout(d, "seed " + std::to_string(seed));
    EXPECT_EQ(diagram_json(d), diagram_json(layout(build_diagram(o)))) << seed;
  }
}

TEST_F(MiniUniversity, JsonWireFormat) {
  const auto j = nlohmann::json::parse(diagram_json(d));
  ASSERT_TRUE(j.contains("elements"));
  ASSERT_TRUE(j.contains("element_axioms"));
  ASSERT_EQ(j["elements"].size(), d.elements.size());
  for (const auto& e : j["elements"]) {
    for (const char* key : {"id", "kind", "owner", "labels", "x", "y", "w", "h", "source", "target"}) {
      EXPECT_TRUE(e.contains(key)) << key;
    }
  }
  const auto& teaches = *std::find_if(j["elements"].begin(), j["elements"].end(),
                                      [](const auto& e) { return e["id"] == "prop:teaches"; });
  EXPECT_EQ(teaches["kind"], "association-edge");
  EXPECT_EQ(teaches["source"], "class:Teacher");
  EXPECT_TRUE(teaches["owner"].is_null());
  EXPECT_EQ(j["element_axioms"]["prop:teaches"].get<std::vector<std::string>>(), d.element_axioms.at("prop:teaches"));
}

}  // namespace
}  // namespace owlverb
