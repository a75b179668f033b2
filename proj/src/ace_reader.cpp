#include "owlverb/ace_reader.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "owlverb/manchester.hpp"
#include "owlverb/verbalizer.hpp"

namespace owlverb {

namespace {

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <class Target>
struct SurfaceTable {
  std::vector<std::pair<std::vector<std::string>, Target>> items;

  void add(std::string_view phrase, Target t) {
    auto words = words_of(phrase);
    if (!words.empty()) items.emplace_back(std::move(words), std::move(t));
  }
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string describe(const PropertyExpression& p) { return p.inverted ? "inverse " + p.base.name : p.base.name; }
std::string describe(const EntityRef& e) { return e.name; }

using K = ClassExpression::Kind;

// The object part of a verb phrase, before the property is known.
struct ObjectPhrase {
  K kind = K::SomeValuesFrom;
  std::uint32_t n = 0;
  ClassExpression filler;

  ClassExpression with(const PropertyExpression& p) const {
    switch (kind) {
      case K::SomeValuesFrom: return ClassExpression::some(p, filler);
      case K::AllValuesFrom: return ClassExpression::only(p, filler);
      case K::MinCardinality: return ClassExpression::min(n, p, filler);
      case K::MaxCardinality: return ClassExpression::max(n, p, filler);
      default: return ClassExpression::exactly(n, p, filler);
    }
  }
};

}  // namespace

struct AceReader::Impl {
  SurfaceTable<EntityRef> nouns_sg, nouns_pl, names, has_nouns;
  SurfaceTable<PropertyExpression> relations;
  Ontology lookup;  // for Manchester fallback lines

  explicit Impl(const Lexicon& lex) {
    for (const auto& [e, entry] : lex.entries()) {
      lookup.declare(e);
      switch (entry.category) {
        case Category::CommonNoun:
          if (e.kind != EntityKind::Class) break;
          nouns_sg.add(entry.form("sg"), e);
          nouns_pl.add(entry.form("pl"), e);
          break;
        case Category::ProperName:
          if (e.kind == EntityKind::NamedIndividual) names.add(entry.form("phrase"), e);
          break;
        case Category::HasNoun:
          if (e.kind == EntityKind::ObjectProperty || e.kind == EntityKind::DataProperty) {
            has_nouns.add(entry.form("sg"), e);
          }
          break;
        case Category::TransitiveVerb:
          if (e.kind != EntityKind::ObjectProperty) break;
          relations.add(entry.form("vbz"), PropertyExpression{e, false});
          relations.add(entry.has("inv") ? entry.form("inv") : "is " + entry.form("vbp-passive") + " by",
                        PropertyExpression{e, true});
          break;
      }
    }
    for (const auto& dt : lex.datatypes) lookup.declare(dt);
  }
};

namespace {

class SentenceParser {
 public:
  SentenceParser(const AceReader::Impl& lex, std::vector<std::string> tokens)
      : lex_(lex), tokens_(std::move(tokens)) {}

  AxiomBody sentence();
  bool ambiguous() const { return !diagnostics_.empty(); }
  std::vector<std::string> diagnostics() const { return diagnostics_; }

 private:
  // Function words compare case-insensitively only in sentence-initial position.
  std::string word(std::size_t i) const {
    if (i >= tokens_.size()) return {};
    return i == 0 ? lower(tokens_[i]) : tokens_[i];
  }
  bool at(std::string_view w) const { return word(pos_) == w; }
  bool at_end() const { return pos_ >= tokens_.size(); }
  [[noreturn]] void fail(const std::string& expected) const {
    if (at_end()) throw ReadError("", "expected " + expected + " but the sentence ended");
    throw ReadError(tokens_[pos_], "expected " + expected + " at '" + tokens_[pos_] + "'");
  }
  void expect(std::string_view w) {
    if (!at(w)) fail("'" + std::string(w) + "'");
    ++pos_;
  }
  bool accept(std::string_view w) {
    if (!at(w)) return false;
    ++pos_;
    return true;
  }

  template <class Target>
  std::optional<Target> match(const SurfaceTable<Target>& table, bool case_sensitive_first = false) {
    std::size_t best = 0;
    std::vector<const Target*> found;
    for (const auto& [words, target] : table.items) {
      if (words.size() < best || pos_ + words.size() > tokens_.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < words.size() && ok; ++k) {
        const std::string tok = case_sensitive_first ? tokens_[pos_ + k] : word(pos_ + k);
        ok = tok == words[k];
      }
      if (!ok) continue;
      if (words.size() > best) {
        best = words.size();
        found.clear();
      }
      if (std::none_of(found.begin(), found.end(), [&](const Target* t) { return *t == target; })) {
        found.push_back(&target);
      }
    }
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) {
      std::string msg = "ambiguous '";
      for (std::size_t k = 0; k < best; ++k) msg += (k ? " " : "") + tokens_[pos_ + k];
      msg += "':";
      for (const auto* t : found) msg += " " + describe(*t);
      diagnostics_.push_back(msg);
    }
    pos_ += best;
    return *found.front();
  }

  EntityRef noun(bool plural) {
    if (auto e = match(plural ? lex_.nouns_pl : lex_.nouns_sg)) return *e;
    fail(plural ? "a plural noun" : "a noun");
  }

  std::uint32_t number() {
    const std::string w = word(pos_);
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) {
      fail("a number");
    }
    ++pos_;
    try {
      return static_cast<std::uint32_t>(std::stoul(w));
    } catch (const std::exception&) {
      fail("a number in range");
    }
  }

  ClassExpression counted(std::uint32_t n) {
    if (accept(n == 1 ? "thing" : "things")) return ClassExpression::thing();
    return ClassExpression::named(noun(n != 1));
  }

  ObjectPhrase object_phrase() {
    if (accept("something")) return {K::SomeValuesFrom, 0, ClassExpression::thing()};
    if (at("a") || at("an")) {
      ++pos_;
      return {K::SomeValuesFrom, 0, ClassExpression::named(noun(false))};
    }
    if (accept("nothing")) {
      expect("but");
      if (accept("things")) return {K::AllValuesFrom, 0, ClassExpression::thing()};
      return {K::AllValuesFrom, 0, ClassExpression::named(noun(true))};
    }
    if (accept("at")) {
      K kind;
      if (accept("least")) {
        kind = K::MinCardinality;
      } else if (accept("most")) {
        kind = K::MaxCardinality;
      } else {
        fail("'least' or 'most'");
      }
      const std::uint32_t n = number();
      return {kind, n, counted(n)};
    }
    if (accept("exactly")) {
      const std::uint32_t n = number();
      return {K::ExactCardinality, n, counted(n)};
    }
    fail("a noun phrase");
  }

  EntityRef has_noun() {
    if (auto e = match(lex_.has_nouns)) return *e;
    fail("a property noun");
  }

  ClassExpression vp() {
    const std::size_t start = pos_;
    if (auto p = match(lex_.relations)) {
      return object_phrase().with(*p);
    }
    if (accept("has")) {
      ObjectPhrase obj = object_phrase();
      expect("as");
      EntityRef prop = has_noun();
      if (prop.kind != EntityKind::ObjectProperty) fail("an object property noun");
      return obj.with(PropertyExpression{prop, false});
    }
    if (accept("is")) {
      if (accept("not")) {
        if (!accept("a") && !accept("an")) fail("'a' or 'an'");
        return ClassExpression::complement_of(ClassExpression::named(noun(false)));
      }
      if (accept("something")) return ClassExpression::thing();
      if (!accept("a") && !accept("an")) fail("'a', 'an', 'not' or 'something'");
      // "is an advisor of ..." (inverse has-noun) or "is a course".
      const std::size_t after_article = pos_;
      try {
        EntityRef prop = has_noun();
        expect("of");
        if (prop.kind != EntityKind::ObjectProperty) fail("an object property noun");
        return object_phrase().with(PropertyExpression{prop, true});
      } catch (const ReadError&) {
        pos_ = after_article;
      }
      return ClassExpression::named(noun(false));
    }
    pos_ = start;
    fail("a verb phrase");
  }

  // Verb phrases joined by a single connective.
  ClassExpression vps() {
    std::vector<ClassExpression> parts{vp()};
    std::string glue;
    while (at("and") || at("or")) {
      if (!glue.empty() && !at(glue)) fail("'" + glue + "'");
      glue = word(pos_);
      ++pos_;
      parts.push_back(vp());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return glue == "and" ? ClassExpression::intersection_of(std::move(parts))
                         : ClassExpression::union_of(std::move(parts));
  }

  // "X teaches Y", "Y is taught by X", "X has Y as advisor", "Y is an advisor of X".
  PropertyExpression relation(std::string_view subject, std::string_view object) {
    expect(subject);
    PropertyExpression p;
    if (auto rel = match(lex_.relations)) {
      p = *rel;
    } else if (accept("has")) {
      expect(object);
      expect("as");
      EntityRef prop = has_noun();
      return PropertyExpression{prop, false};
    } else if (accept("is")) {
      if (!accept("a") && !accept("an")) fail("'a' or 'an'");
      EntityRef prop = has_noun();
      expect("of");
      p = PropertyExpression{prop, true};
    } else {
      fail("a relation");
    }
    expect(object);
    return p;
  }

  static EntityRef named_only(const PropertyExpression& p, const std::string& what) {
    if (p.inverted) throw ReadError("", what + " expects plain properties");
    return p.base;
  }

  AxiomBody if_then() {
    PropertyExpression p = relation("X", "Y");
    expect("then");
    if (accept("it")) {
      expect("is");
      expect("false");
      expect("that");
      PropertyExpression q = relation("X", "Y");
      return DisjointObjectProperties{named_only(p, "disjointness"), named_only(q, "disjointness")};
    }
    if (at("Y")) {
      PropertyExpression q = relation("Y", "X");
      return InverseObjectProperties{named_only(p, "inverse"), named_only(q, "inverse")};
    }
    PropertyExpression q = relation("X", "Y");
    return SubObjectPropertyOf{p, q};
  }

  std::optional<AxiomBody> data_domain() {
    const std::size_t start = pos_;
    if (accept("has") && (accept("a") || accept("an"))) {
      if (auto prop = match(lex_.has_nouns); prop && prop->kind == EntityKind::DataProperty && !at("as")) {
        return DataPropertyDomain{*prop, vps()};
      }
    }
    pos_ = start;
    return std::nullopt;
  }

  AxiomBody about_individual(const EntityRef& subject) {
    const std::size_t start = pos_;
    // Data assertion: "Alice has 25 as age."
    if (accept("has") && !at_end()) {
      const std::string& tok = tokens_[pos_];
      const bool digits = std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
      const bool quoted = tok.size() >= 2 && tok.front() == '"' && tok.back() == '"';
      if (digits || quoted) {
        ++pos_;
        expect("as");
        EntityRef prop = has_noun();
        if (prop.kind != EntityKind::DataProperty) fail("a data property noun");
        Literal value = digits ? Literal{tok, "integer"} : Literal{tok.substr(1, tok.size() - 2), "string"};
        return DataPropertyAssertion{prop, subject, value};
      }
    }
    pos_ = start;
    // Object assertion: "Alice is enrolled in Computer Science."
    try {
      if (auto rel = match(lex_.relations)) {
        if (auto object = match(lex_.names, true); object && at_end()) {
          if (rel->inverted) return ObjectPropertyAssertion{rel->base, *object, subject};
          return ObjectPropertyAssertion{rel->base, subject, *object};
        }
      }
      pos_ = start;
      if (accept("has")) {
        if (auto object = match(lex_.names, true); object && accept("as")) {
          EntityRef prop = has_noun();
          if (prop.kind == EntityKind::ObjectProperty && at_end()) {
            return ObjectPropertyAssertion{prop, subject, *object};
          }
        }
      }
      pos_ = start;
      if (accept("is") && (accept("a") || accept("an"))) {
        if (auto prop = match(lex_.has_nouns); prop && prop->kind == EntityKind::ObjectProperty && accept("of")) {
          if (auto object = match(lex_.names, true); object && at_end()) {
            return ObjectPropertyAssertion{*prop, *object, subject};
          }
        }
      }
    } catch (const ReadError&) {
    }
    pos_ = start;
    return ClassAssertion{vps(), subject};
  }

  const AceReader::Impl& lex_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> diagnostics_;
};

AxiomBody SentenceParser::sentence() {
  AxiomBody out;
  if (auto subject = match(lex_.names, true)) {
    out = about_individual(*subject);
  } else if (accept("if")) {
    out = if_then();
  } else if (accept("every")) {
    ClassExpression sub = ClassExpression::named(noun(false));
    out = SubClassOf{std::move(sub), vps()};
  } else if (accept("everything")) {
    if (accept("that")) {
      if (auto dd = data_domain()) {
        out = std::move(*dd);
      } else {
        ClassExpression sub = vps();
        out = SubClassOf{std::move(sub), vps()};
      }
    } else {
      out = SubClassOf{ClassExpression::thing(), vps()};
    }
  } else if (accept("no")) {
    ClassExpression a = ClassExpression::named(noun(false));
    out = DisjointClasses{{std::move(a), vps()}};
  } else if (accept("nothing")) {
    if (accept("that")) {
      ClassExpression a = vps();
      out = DisjointClasses{{std::move(a), vps()}};
    } else {
      out = DisjointClasses{{ClassExpression::thing(), vps()}};
    }
  } else {
    fail("the start of a sentence");
  }
  if (!at_end()) fail("the end of the sentence");
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
      ++i;
      continue;
    }
    std::string tok;
    if (text[i] == '"') {
      const std::size_t close = text.find('"', i + 1);
      if (close == std::string_view::npos) throw ReadError(std::string(text.substr(i)), "unterminated quote");
      tok = std::string(text.substr(i, close - i + 1));
      i = close + 1;
    } else {
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n') tok += text[i++];
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::string key(const AxiomBody& b) { return to_functional(normalize(b)); }
std::string key(const ClassExpression& e) { return to_functional(normalize(e)); }

}  // namespace

AceReader::AceReader(const Lexicon& lex) : impl_(std::make_unique<const Impl>(lex)) {}
AceReader::~AceReader() = default;

ReaderResult AceReader::read_sentence(std::string_view text) const {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed.empty()) throw ReadError("", "empty sentence");

  std::optional<ReadError> ace_error;
  if (trimmed.back() == '.') {
    try {
      SentenceParser parser(*impl_, tokenize(trimmed.substr(0, trimmed.size() - 1)));
      AxiomBody body = parser.sentence();
      ReaderResult r{Axiom{"", std::move(body)}, parser.ambiguous() ? Confidence::Ambiguous : Confidence::Exact,
                     parser.diagnostics()};
      return r;
    } catch (const ReadError& e) {
      ace_error = e;
    }
  }
  try {
    return ReaderResult{Axiom{"", paraphrase_normalize(parse_axiom(trimmed, impl_->lookup))}, Confidence::Exact, {}};
  } catch (const ParseError&) {
    if (ace_error) throw *ace_error;
    const auto tokens = tokenize(trimmed);
    throw ReadError(tokens.empty() ? "" : tokens.back(), "sentence does not end with '.'");
  }
}

ReaderResult AceReader::read_sentences(std::span<const std::string> sentences) const {
  std::vector<AxiomBody> parts;
  ReaderResult out;
  for (const auto& s : sentences) {
    ReaderResult r = read_sentence(s);
    if (r.confidence == Confidence::Ambiguous) out.confidence = Confidence::Ambiguous;
    out.diagnostics.insert(out.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
    parts.push_back(std::move(r.axiom.body));
  }
  out.axiom.body = assemble(parts);
  return out;
}

ReaderResult read_sentence(std::string_view text, const Lexicon& lex) { return AceReader(lex).read_sentence(text); }

AxiomBody assemble(const std::vector<AxiomBody>& parts) {
  if (parts.empty()) throw ReadError("", "no sentences");
  if (parts.size() == 1) return parts.front();

  auto all_of_kind = [&](auto tag) {
    using T = decltype(tag);
    return std::all_of(parts.begin(), parts.end(), [](const AxiomBody& b) { return std::holds_alternative<T>(b); });
  };
  const std::string first_key = key(parts.front());
  if (std::all_of(parts.begin(), parts.end(), [&](const AxiomBody& b) { return key(b) == first_key; })) {
    return parts.front();
  }

  if (all_of_kind(SubClassOf{})) {
    // Mutual subclass pairs around a shared anchor: an equivalence.
    std::vector<ClassExpression> operands;
    std::map<std::string, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto intern = [&](const ClassExpression& e) {
      auto [it, fresh] = index.emplace(key(e), operands.size());
      if (fresh) operands.push_back(e);
      return it->second;
    };
    for (const auto& b : parts) {
      const auto& s = std::get<SubClassOf>(b);
      edges.insert({intern(s.sub), intern(s.sup)});
    }
    for (const auto& [a, b] : edges) {
      if (!edges.count({b, a})) throw ReadError("", "subclass sentences do not pair up into an equivalence");
    }
    return EquivalentClasses{std::move(operands)};
  }
  if (all_of_kind(DisjointClasses{})) {
    std::vector<ClassExpression> operands;
    std::set<std::string> seen;
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& b : parts) {
      const auto& d = std::get<DisjointClasses>(b);
      if (d.operands.size() != 2) throw ReadError("", "expected pairwise disjointness");
      auto ka = key(d.operands[0]), kb = key(d.operands[1]);
      pairs.insert(std::minmax(ka, kb));
      for (const auto& op : d.operands) {
        if (seen.insert(key(op)).second) operands.push_back(op);
      }
    }
    if (pairs.size() != operands.size() * (operands.size() - 1) / 2) {
      throw ReadError("", "disjointness sentences do not cover every pair");
    }
    return DisjointClasses{std::move(operands)};
  }
  if (all_of_kind(SubObjectPropertyOf{})) {
    std::vector<PropertyExpression> operands;
    std::set<std::pair<std::string, std::string>> edges;
    auto name = [&](const PropertyExpression& p) {
      if (std::find(operands.begin(), operands.end(), p) == operands.end()) operands.push_back(p);
      return to_functional(p);
    };
    for (const auto& b : parts) {
      const auto& s = std::get<SubObjectPropertyOf>(b);
      edges.insert({name(s.sub), name(s.sup)});
    }
    for (const auto& [a, b] : edges) {
      if (!edges.count({b, a})) throw ReadError("", "sub-property sentences do not pair up into an equivalence");
    }
    return EquivalentObjectProperties{std::move(operands)};
  }
  throw ReadError("", "sentences do not describe a single axiom");
}

}  // namespace owlverb
