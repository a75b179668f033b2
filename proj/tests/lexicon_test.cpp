#include "owlverb/lexicon.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

namespace owlverb {
namespace {

using Words = std::vector<std::string>;

// Rows of a whitespace-separated data file, comments skipped.
std::vector<Words> table_rows(const std::string& file) {
  std::ifstream in(std::string(OWLVERB_SOURCE_DIR) + "/data/" + file);
  std::vector<Words> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Words row;
    for (std::string w; ls >> w;) row.push_back(w);
    rows.push_back(row);
  }
  return rows;
}

TEST(SplitName, CamelCaseAndSeparators) {
  EXPECT_EQ(split_name("MandatoryCourse"), (Words{"mandatory", "course"}));
  EXPECT_EQ(split_name("isEnrolledIn"), (Words{"is", "enrolled", "in"}));
  EXPECT_EQ(split_name("HTMLParser"), (Words{"html", "parser"}));
  EXPECT_EQ(split_name("room_101-b"), (Words{"room", "101", "b"}));
  EXPECT_EQ(split_name("x"), (Words{"x"}));
}

TEST(Pluralize, RegularRules) {
  EXPECT_EQ(pluralize("course"), "courses");
  EXPECT_EQ(pluralize("class"), "classes");
  EXPECT_EQ(pluralize("faculty"), "faculties");
  EXPECT_EQ(pluralize("day"), "days");
  EXPECT_EQ(pluralize("mandatory course"), "mandatory courses");
}

TEST(Pluralize, IrregularTableIsAuthoritative) {
  const auto rows = table_rows("irregular_nouns.txt");
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(irregular_noun_count(), rows.size());
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(irregular_plural(r[0]), r[1]);
    EXPECT_EQ(pluralize(r[0]), r[1]);
  }
  EXPECT_EQ(pluralize("person"), "people");
  EXPECT_EQ(pluralize("graduate person"), "graduate people");
}

TEST(Verbs, IrregularParticiplesFromTable) {
  const auto rows = table_rows("irregular_verbs.txt");
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(irregular_verb_count(), rows.size());
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(irregular_participle(r[0]), r[2]);
    EXPECT_EQ(past_participle(r[0]), r[2]);
  }
  EXPECT_EQ(past_participle("teach"), "taught");
}

TEST(Verbs, RegularMorphology) {
  EXPECT_EQ(third_person("teach"), "teaches");
  EXPECT_EQ(third_person("study"), "studies");
  EXPECT_EQ(third_person("like"), "likes");
  EXPECT_EQ(base_from_third_person("teaches"), "teach");
  EXPECT_EQ(base_from_third_person("studies"), "study");
  EXPECT_EQ(base_from_third_person("likes"), "like");
  EXPECT_EQ(past_participle("like"), "liked");
  EXPECT_EQ(past_participle("stop"), "stopped");
  EXPECT_EQ(past_participle("study"), "studied");
}

TEST(Article, VowelSound) {
  EXPECT_EQ(indefinite_article("course"), "a");
  EXPECT_EQ(indefinite_article("academic program"), "an");
}

TEST(DeriveEntry, CategoriesByEntityKindAndName) {
  const auto cls = derive_entry(make_entity(EntityKind::Class, "MandatoryCourse"));
  EXPECT_EQ(cls.category, Category::CommonNoun);
  EXPECT_EQ(cls.form("sg"), "mandatory course");
  EXPECT_EQ(cls.form("pl"), "mandatory courses");

  const auto teaches = derive_entry(make_entity(EntityKind::ObjectProperty, "teaches"));
  EXPECT_EQ(teaches.category, Category::TransitiveVerb);
  EXPECT_EQ(teaches.form("vbz"), "teaches");
  EXPECT_EQ(teaches.form("vb"), "teach");
  EXPECT_EQ(teaches.form("vbp-passive"), "taught");

  const auto enrolled = derive_entry(make_entity(EntityKind::ObjectProperty, "enrolledIn"));
  EXPECT_EQ(enrolled.form("vbz"), "is enrolled in");
  EXPECT_EQ(enrolled.form("vbp-passive"), "enrolled in");

  const auto has_part = derive_entry(make_entity(EntityKind::ObjectProperty, "hasPart"));
  EXPECT_EQ(has_part.category, Category::HasNoun);
  EXPECT_EQ(has_part.form("sg"), "part");

  const auto age = derive_entry(make_entity(EntityKind::DataProperty, "hasAge"));
  EXPECT_EQ(age.category, Category::HasNoun);
  EXPECT_EQ(age.form("pl"), "ages");

  const auto cs = derive_entry(make_entity(EntityKind::NamedIndividual, "ComputerScience"));
  EXPECT_EQ(cs.category, Category::ProperName);
  EXPECT_EQ(cs.form("phrase"), "Computer Science");
}

TEST(DeriveEntry, UnknownVerbWarns) {
  std::string warning;
  derive_entry(make_entity(EntityKind::ObjectProperty, "frobnicate"), &warning);
  EXPECT_NE(warning.find("frobnicate"), std::string::npos);
}

TEST(DeriveLexicon, OneEntryPerNonDatatypeEntity) {
  const Ontology o = testing::parse_ok(testing::corpus_source());
  const Lexicon lex = derive_lexicon(o);
  std::size_t expected = 0, datatypes = 0;
  for (const auto& e : o.declarations()) {
    if (e.kind == EntityKind::Datatype) {
      ++datatypes;
    } else if (!is_owl_thing(e)) {
      ++expected;
      EXPECT_NE(lex.find(e), nullptr) << e.name;
    }
  }
  EXPECT_EQ(lex.entries().size(), expected);
  EXPECT_EQ(lex.datatypes.size(), datatypes);
}

class OverrideTest : public ::testing::Test {
 protected:
  void SetUp() override { lex = derive_lexicon(testing::parse_ok(fixture("mini-university").omn_source)); }
  int error_line(std::string_view text) {
    try {
      merge_overrides(lex, text);
    } catch (const LexiconError& e) {
      return e.line();
    }
    return 0;
  }
  Lexicon lex;
};

TEST_F(OverrideTest, QuotedValuesAndComments) {
  const Lexicon merged = merge_overrides(lex, "# comment\n\nDocent sg=\"junior lecturer\" pl=\"junior lecturers\"  # note\n");
  const auto* e = merged.find(make_entity(EntityKind::Class, "Docent"));
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->form("sg"), "junior lecturer");
  EXPECT_EQ(e->form("pl"), "junior lecturers");
}

TEST_F(OverrideTest, CategoryChangeNeedsItsForms) {
  EXPECT_EQ(error_line("teaches category=common-noun\n"), 1);
  const Lexicon merged = merge_overrides(lex, "teaches category=has-noun sg=lesson pl=lessons\n");
  EXPECT_EQ(merged.at(make_entity(EntityKind::ObjectProperty, "teaches")).category, Category::HasNoun);
}

TEST_F(OverrideTest, MalformedLinesReportTheirNumber) {
  EXPECT_EQ(error_line("Course sg=course\nCourse sg\n"), 2);
  EXPECT_EQ(error_line("\n\nCourse sg=\"open\n"), 3);
  EXPECT_EQ(error_line("Course\n"), 1);
  EXPECT_EQ(error_line("Course sg=Course\n"), 1);
  EXPECT_EQ(error_line("Course colour=red\n"), 1);
  EXPECT_EQ(error_line("Zebra sg=zebra\n"), 1);
}

TEST_F(OverrideTest, UnknownEntityLookupNamesIt) {
  try {
    lex.at(make_entity(EntityKind::Class, "Zebra"));
    FAIL();
  } catch (const NotFoundError& e) {
    EXPECT_NE(std::string(e.what()).find("Zebra"), std::string::npos);
  }
}

TEST_F(OverrideTest, FixtureOverridesAreNoOpsOrCorrections) {
  const Lexicon merged = merge_overrides(lex, fixture("mini-university").lexicon_source);
  EXPECT_EQ(merged.at(make_entity(EntityKind::ObjectProperty, "teaches")).form("vbp-passive"), "taught");
  EXPECT_EQ(merged.at(make_entity(EntityKind::NamedIndividual, "ComputerScience")).form("phrase"),
            "Computer Science");
}

}  // namespace
}  // namespace owlverb
