#include "owlverb/ace_reader.hpp"

#include <gtest/gtest.h>

#include "owlverb/lexicon.hpp"
#include "owlverb/verbalizer.hpp"
#include "support.hpp"

namespace owlverb {
namespace {

class ReaderTest : public ::testing::Test {
 protected:
  void SetUp() override {
    onto = testing::parse_ok(testing::corpus_source());
    lex = merge_overrides(derive_lexicon(onto), testing::corpus_lexicon());
  }
  EntityRef cls(const std::string& n) const { return *onto.find(EntityKind::Class, n); }
  EntityRef prop(const std::string& n) const { return *onto.find(EntityKind::ObjectProperty, n); }
  ClassExpression named(const std::string& n) const { return ClassExpression::named(cls(n)); }

  Ontology onto;
  Lexicon lex;
};

TEST_F(ReaderTest, ReadsThePaperParaphrase) {
  const auto r = read_sentence("Everything that teaches a mandatory course is a professor.", lex);
  EXPECT_EQ(r.confidence, Confidence::Exact);
  const AxiomBody expected =
      SubClassOf{ClassExpression::some({prop("teaches"), false}, named("MandatoryCourse")), named("Professor")};
  EXPECT_TRUE(structurally_equal(r.axiom.body, expected));
}

TEST_F(ReaderTest, ReadsTheDirectOnlyReading) {
  const auto r = read_sentence("Every mandatory course is taught by nothing but professors.", lex);
  const AxiomBody expected =
      SubClassOf{named("MandatoryCourse"), ClassExpression::only({prop("teaches"), true}, named("Professor"))};
  EXPECT_TRUE(structurally_equal(r.axiom.body, expected));
}

TEST_F(ReaderTest, ReadsPropertyDisjointness) {
  const auto r = read_sentence("If X takes Y then it is false that X teaches Y.", lex);
  EXPECT_TRUE(structurally_equal(r.axiom.body, DisjointObjectProperties{prop("takes"), prop("teaches")}));
}

TEST_F(ReaderTest, ReadsAssertionsAboutNamedIndividuals) {
  const EntityRef alice = *onto.find(EntityKind::NamedIndividual, "Alice");
  const EntityRef cs = *onto.find(EntityKind::NamedIndividual, "ComputerScience");
  const auto r = read_sentence("Alice is enrolled in Computer Science.", lex);
  EXPECT_TRUE(structurally_equal(r.axiom.body, ObjectPropertyAssertion{prop("enrolledIn"), alice, cs}));
  const auto age = read_sentence("Alice has 25 as age.", lex);
  EXPECT_TRUE(structurally_equal(
      age.axiom.body,
      DataPropertyAssertion{*onto.find(EntityKind::DataProperty, "hasAge"), alice, Literal{"25", "integer"}}));
}

TEST_F(ReaderTest, CardinalityNumberAgreement) {
  const auto one = read_sentence("Every student is enrolled in exactly 1 academic program.", lex);
  EXPECT_TRUE(structurally_equal(
      one.axiom.body,
      SubClassOf{named("Student"), ClassExpression::exactly(1, {prop("enrolledIn"), false}, named("AcademicProgram"))}));
  EXPECT_THROW(read_sentence("Every student is enrolled in exactly 1 academic programs.", lex), ReadError);
}

TEST_F(ReaderTest, UnknownWordIsReportedAsTheFailingToken) {
  try {
    read_sentence("Every zebra is a course.", lex);
    FAIL() << "expected ReadError";
  } catch (const ReadError& e) {
    EXPECT_EQ(e.token(), "zebra");
  }
}

TEST_F(ReaderTest, SentenceMustEndWithAPeriod) {
  EXPECT_THROW(read_sentence("Every student is a person", lex), ReadError);
  EXPECT_THROW(read_sentence("", lex), ReadError);
}

TEST_F(ReaderTest, SharedSurfaceFormIsAmbiguous) {
  const Lexicon clash = merge_overrides(lex, "Docent sg=teacher pl=teachers\n");
  const auto r = read_sentence("Every teacher is a person.", clash);
  EXPECT_EQ(r.confidence, Confidence::Ambiguous);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("Docent"), std::string::npos);
  EXPECT_NE(r.diagnostics[0].find("Teacher"), std::string::npos);
}

TEST_F(ReaderTest, AcceptsManchesterFallbackLines) {
  const auto r = read_sentence("MandatoryCourse SubClassOf inverse teaches only Professor", lex);
  const AxiomBody expected =
      SubClassOf{ClassExpression::some({prop("teaches"), false}, named("MandatoryCourse")), named("Professor")};
  EXPECT_TRUE(structurally_equal(r.axiom.body, expected));
}

TEST_F(ReaderTest, AssembleRejectsIncompleteDisjointness) {
  const std::vector<AxiomBody> parts{DisjointClasses{{named("Assistant"), named("Docent")}},
                                     DisjointClasses{{named("Assistant"), named("Professor")}}};
  EXPECT_THROW(assemble(parts), ReadError);
}

TEST_F(ReaderTest, AssembleMergesEquivalenceDirections) {
  const std::vector<AxiomBody> parts{SubClassOf{named("Course"), named("BigCourse")},
                                     SubClassOf{named("BigCourse"), named("Course")}};
  EXPECT_TRUE(structurally_equal(assemble(parts), EquivalentClasses{{named("Course"), named("BigCourse")}}));
}

// Reading back what the verbalizer writes gives the paraphrase-normalized
// axiom, for random axioms of depth <= 2 over the fixture vocabulary.
TEST_F(ReaderTest, RoundTripOverRandomAxioms) {
  testing::AxiomGenerator gen(testing::Vocabulary::of(onto), 20240611u);
  const AceReader reader(lex);
  int failures = 0, controlled = 0;
  const int total = 1500;
  for (int i = 0; i < total; ++i) {
    const Axiom a{"1", gen.axiom()};
    std::vector<std::string> texts;
    bool fallback = false;
    for (const auto& s : verbalize_axiom(a, lex)) {
      texts.push_back(s.text);
      fallback = fallback || s.fallback;
    }
    if (!fallback) ++controlled;
    std::string got;
    bool ok = false;
    try {
      const auto r = reader.read_sentences(texts);
      ok = structurally_equal(r.axiom.body, paraphrase_normalize(a.body));
      got = to_functional(normalize(r.axiom.body));
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    if (!ok && ++failures <= 10) {
      std::string joined;
      for (const auto& t : texts) joined += "\n    " + t;
      ADD_FAILURE() << "axiom " << to_functional(a.body) << "\n  sentences:" << joined << "\n  read: " << got;
    }
  }
  EXPECT_EQ(failures, 0);
  // The corpus must mostly exercise the controlled-English grammar, not the
  // Manchester fallback.
  EXPECT_GE(controlled, total / 2) << controlled << " of " << total;
}

}  // namespace
}  // namespace owlverb
