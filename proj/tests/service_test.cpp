#include "owlverb/service.hpp"

#include <gtest/gtest.h>

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <thread>

#include "support.hpp"

namespace owlverb {
namespace {

using nlohmann::json;

HttpResponse call(Session& s, std::string method, std::string path, std::string body = {},
                  std::map<std::string, std::string> params = {}) {
  return handle_request(s, HttpRequest{std::move(method), std::move(path), std::move(params), std::move(body)});
}

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override { mini = fixture("mini-university"); }
  void load_mini() {
    const json body{{"source", mini.omn_source}, {"lexicon", mini.lexicon_source}};
    ASSERT_EQ(call(session, "POST", "/ontology", body.dump()).status, 200);
  }
  Fixture mini;
  Session session;
};

TEST_F(ServiceTest, NothingLoadedIsAConflict) {
  EXPECT_EQ(call(session, "GET", "/diagram").status, 409);
  EXPECT_EQ(call(session, "GET", "/dictionary").status, 409);
  EXPECT_EQ(call(session, "GET", "/verbalize", {}, {{"element", "class:Person"}}).status, 409);
  EXPECT_EQ(call(session, "PUT", "/lexicon", "Person sg=human pl=humans\n").status, 409);
}

TEST_F(ServiceTest, LoadSummary) {
  const auto r = call(session, "POST", "/ontology", mini.omn_source);
  ASSERT_EQ(r.status, 200) << r.body;
  const auto j = json::parse(r.body);
  const Ontology o = testing::parse_ok(mini.omn_source);
  EXPECT_EQ(j["axioms"], o.axioms().size());
  EXPECT_EQ(j["entities"], o.declarations().size());
  EXPECT_EQ(j["errors"], 0);
  EXPECT_EQ(j["coverage"], true);
  EXPECT_GT(j["elements"].get<int>(), 0);
  EXPECT_GT(j["inferred"].get<int>(), 0);
}

TEST_F(ServiceTest, EmptySourceLoadsToAnEmptyDiagram) {
  const auto r = call(session, "POST", "/ontology", "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(json::parse(r.body)["elements"], 0);
  EXPECT_EQ(json::parse(call(session, "GET", "/diagram").body)["elements"].size(), 0u);
}

TEST_F(ServiceTest, RejectedSourceKeepsThePreviousState) {
  load_mini();
  const std::string before = call(session, "GET", "/diagram").body;
  const auto r = call(session, "POST", "/ontology", "Class: A\n    SubClassOf: Zebra\n");
  EXPECT_EQ(r.status, 422);
  const auto j = json::parse(r.body);
  ASSERT_EQ(j["diagnostics"].size(), 1u);
  EXPECT_NE(j["diagnostics"][0].get<std::string>().find("2:"), std::string::npos);
  EXPECT_EQ(call(session, "GET", "/diagram").body, before);
  EXPECT_EQ(call(session, "POST", "/ontology", R"({"source": 3})").status, 400);
}

TEST_F(ServiceTest, VerbalizeErrors) {
  load_mini();
  EXPECT_EQ(call(session, "GET", "/verbalize").status, 400);
  EXPECT_EQ(call(session, "GET", "/verbalize", {}, {{"element", "class:Zebra"}}).status, 404);
  EXPECT_EQ(call(session, "GET", "/verbalize", {}, {{"element", "class:Person"}, {"scope", "all"}}).status, 400);
  EXPECT_EQ(call(session, "GET", "/verbalize", {}, {{"element", "class:Person"}, {"direct_reading", "yes"}}).status, 400);
  EXPECT_EQ(call(session, "DELETE", "/ontology").status, 404);
}

// The axioms named by a direct verbalization are the element's axioms.
TEST_F(ServiceTest, VerbalizeNamesTheElementsAxioms) {
  load_mini();
  const auto diagram = json::parse(call(session, "GET", "/diagram").body);
  for (const auto& e : diagram["elements"]) {
    const std::string id = e["id"];
    const auto r = call(session, "GET", "/verbalize", {}, {{"element", id}});
    ASSERT_EQ(r.status, 200) << id;
    std::set<std::string> named;
    for (const auto& s : json::parse(r.body)) {
      for (const auto& a : s["axiom_ids"]) named.insert(a.get<std::string>());
      EXPECT_FALSE(s["inferred"].get<bool>());
    }
    const auto expected = diagram["element_axioms"][id].get<std::vector<std::string>>();
    EXPECT_EQ(named, std::set<std::string>(expected.begin(), expected.end())) << id;
  }
}

TEST_F(ServiceTest, VerbalizeMatchesGoldenOverHttp) {
  load_mini();
  const auto r = call(session, "GET", "/verbalize", {},
                      {{"element", "restr:MandatoryCourse:Professor"}, {"direct_reading", "true"}});
  ASSERT_EQ(r.status, 200);
  std::vector<std::string> got;
  for (const auto& s : json::parse(r.body)) got.push_back(s["text"]);
  std::vector<std::string> expected;
  for (const auto& g : mini.golden[2].sentences) expected.push_back(g.text);
  EXPECT_EQ(got, expected);
}

// Each section holds every axiom mentioning its entity, so an axiom about two
// entities shows up in both sections.
TEST_F(ServiceTest, DictionaryIsDeliberatelyRedundant) {
  load_mini();
  const auto r = call(session, "GET", "/dictionary");
  ASSERT_EQ(r.status, 200);
  const auto j = json::parse(r.body);
  const Ontology o = testing::parse_ok(mini.omn_source);
  ASSERT_EQ(j.size(), o.declarations().size());
  std::map<std::string, int> sections_per_axiom;
  std::string last;
  for (const auto& sec : j) {
    const std::string name = sec["entity"];
    EXPECT_LE(last, name);
    last = name;
    const auto matches = o.find_by_name(name);
    ASSERT_FALSE(matches.empty()) << name;
    std::set<std::string> expected;
    for (const auto& a : o.axioms()) {
      if (a.kind() != AxiomKind::Declaration && mentions(a.body, matches.front())) expected.insert(a.id);
    }
    std::set<std::string> got;
    for (const auto& s : sec["sentences"]) {
      for (const auto& a : s["axiom_ids"]) got.insert(a.get<std::string>());
    }
    EXPECT_EQ(got, expected) << name;
    for (const auto& id : got) ++sections_per_axiom[id];
  }
  const std::string disjoint_props = [&] {
    for (const auto& a : o.axioms()) {
      if (a.kind() == AxiomKind::DisjointObjectProperties) return a.id;
    }
    return std::string();
  }();
  EXPECT_EQ(sections_per_axiom[disjoint_props], 2);
  const std::string text = render_dictionary(session.export_dictionary());
  EXPECT_NE(text.find("teaches (ObjectProperty) [prop:teaches]\n"), std::string::npos);
}

TEST_F(ServiceTest, LexiconReadAndReplace) {
  load_mini();
  auto j = json::parse(call(session, "GET", "/lexicon").body);
  bool found = false;
  for (const auto& e : j["entries"]) {
    if (e["entity"] == "teaches") {
      found = true;
      EXPECT_EQ(e["forms"]["vbp-passive"], "taught");
      EXPECT_EQ(e["category"], "transitive-verb");
    }
  }
  EXPECT_TRUE(found);

  EXPECT_EQ(call(session, "PUT", "/lexicon", "Person sg=human pl=humans\n").status, 200);
  const auto r = call(session, "GET", "/verbalize", {}, {{"element", "field:Person:1"}});
  EXPECT_EQ(json::parse(r.body)[0]["text"], "No human is a course.");

  const auto bad = call(session, "PUT", "/lexicon", "Person sg\n");
  EXPECT_EQ(bad.status, 422);
  EXPECT_NE(json::parse(bad.body)["diagnostics"][0].get<std::string>().find("line 1"), std::string::npos);
  EXPECT_EQ(json::parse(call(session, "GET", "/verbalize", {}, {{"element", "field:Person:1"}}).body)[0]["text"],
            "No human is a course.");
}

// Readers racing a writer always see one whole state: the summary of any
// snapshot matches the summary computed from that snapshot's own source.
TEST_F(ServiceTest, ReloadIsAtomicForReaders) {
  const Fixture simple = fixture("simple-fragment");
  const auto expected_mini = summarize(*build_state(mini.omn_source, mini.lexicon_source)).elements;
  const auto expected_simple = summarize(*build_state(simple.omn_source, simple.lexicon_source)).elements;
  session.load(mini.omn_source, mini.lexicon_source);
  std::atomic<bool> stop{false};
  std::atomic<int> torn{0}, reads{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      while (!stop) {
        const auto s = session.snapshot();
        const auto n = s->diagram.elements.size();
        const auto want = s->source == mini.omn_source ? expected_mini : expected_simple;
        if (n != want || summarize(*s).axioms != s->ontology.axioms().size()) ++torn;
        const auto r = call(session, "GET", "/diagram");
        const auto count = json::parse(r.body)["elements"].size();
        if (count != expected_mini && count != expected_simple) ++torn;
        ++reads;
      }
    });
  }
  for (int i = 0; i < 40; ++i) {
    if (i % 2) {
      session.load(mini.omn_source, mini.lexicon_source);
    } else {
      session.load(simple.omn_source, simple.lexicon_source);
    }
  }
  stop = true;
  for (auto& t : readers) t.join();
  EXPECT_EQ(torn, 0);
  EXPECT_GT(reads, 0);
}

TEST_F(ServiceTest, VerbalizeIsFastEnoughForInteractiveUse) {
  load_mini();
  const auto state = session.snapshot();
  double worst = 0;
  for (const auto& e : state->diagram.elements) {
    for (auto scope : {Scope::Direct, Scope::Referencing, Scope::Inferred}) {
      const auto start = std::chrono::steady_clock::now();
      session.verbalize_element(e.id, scope, true);
      worst = std::max(worst, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
  }
  EXPECT_LT(worst, 50.0);
}

TEST_F(ServiceTest, RealHttpRoundTrip) {
  HttpService service(session);
  const int port = service.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread server([&] { service.listen(); });

  httplib::Client client("127.0.0.1", port);
  const json body{{"source", mini.omn_source}, {"lexicon", mini.lexicon_source}};
  auto posted = client.Post("/ontology", body.dump(), "application/json");
  ASSERT_TRUE(posted);
  EXPECT_EQ(posted->status, 200);

  auto got = client.Get("/verbalize?element=prop:teaches&scope=direct");
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(got->get_header_value("Content-Type").rfind("application/json", 0), 0u);
  const auto sentences = json::parse(got->body);
  ASSERT_EQ(sentences.size(), 4u);
  EXPECT_EQ(sentences[0]["text"], "Every teacher teaches at most 2 courses.");

  auto missing = client.Get("/verbalize?element=class:Zebra");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  service.stop();
  server.join();
}

}  // namespace
}  // namespace owlverb
