#include "owlverb/manchester.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <tuple>

namespace owlverb {

std::string to_string(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::Error ? "error: " : "warning: ") + d.message;
}

std::size_t ParseResult::error_count() const {
  return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                [](const auto& d) { return d.severity == Severity::Error; }));
}

namespace {

std::string first_error_message(const std::vector<ParseDiagnostic>& ds) {
  for (const auto& d : ds) {
    if (d.severity == Severity::Error) return to_string(d);
  }
  return "parse error";
}

}  // namespace

ParseError::ParseError(std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(first_error_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

// --- lexer -----------------------------------------------------------------------

enum class Tok { Ident, Keyword, Integer, String, LParen, RParen, Comma, LBrace, RBrace, Caret2, Iri, Colon, At, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(std::vector<ParseDiagnostic>& diags) {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      const int line = line_, col = col_;
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      auto emit = [&](Tok t, std::string text) { out.push_back(Token{t, std::move(text), line, col}); };
      switch (c) {
        case '(': advance(); emit(Tok::LParen, "("); continue;
        case ')': advance(); emit(Tok::RParen, ")"); continue;
        case ',': advance(); emit(Tok::Comma, ","); continue;
        case '{': advance(); emit(Tok::LBrace, "{"); continue;
        case '}': advance(); emit(Tok::RBrace, "}"); continue;
        case ':': advance(); emit(Tok::Colon, ":"); continue;
        case '@': advance(); emit(Tok::At, "@"); continue;
        default: break;
      }
      if (c == '^') {
        if (peek(1) == '^') {
          advance(), advance();
          emit(Tok::Caret2, "^^");
        } else {
          diags.push_back({line, col, Severity::Error, "unexpected character '^'"});
          advance();
        }
        continue;
      }
      if (c == '<') {
        std::string iri;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '>' && src_[pos_] != '\n') iri += take();
        if (pos_ >= src_.size() || src_[pos_] != '>') {
          diags.push_back({line, col, Severity::Error, "unterminated IRI"});
          continue;
        }
        advance();
        emit(Tok::Iri, std::move(iri));
        continue;
      }
      if (c == '"') {
        std::string text;
        advance();
        bool closed = false;
        while (pos_ < src_.size()) {
          char ch = take();
          if (ch == '"') {
            closed = true;
            break;
          }
          if (ch == '\\' && pos_ < src_.size()) ch = take();
          text += ch;
        }
        if (!closed) {
          diags.push_back({line, col, Severity::Error, "unterminated string literal"});
          continue;
        }
        emit(Tok::String, std::move(text));
        continue;
      }
      if (std::isdigit(c) || (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        std::string text(1, take());
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) text += take();
        if (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) {
          while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) text += take();
          diags.push_back({line, col, Severity::Error, "malformed token '" + text + "'"});
          continue;
        }
        emit(Tok::Integer, std::move(text));
        continue;
      }
      if (ident_start(c)) {
        std::string text;
        while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) text += take();
        if (pos_ < src_.size() && src_[pos_] == ':') {
          if (ident_start(static_cast<unsigned char>(peek(1)))) {
            text += take();  // prefixed name
            while (pos_ < src_.size() && ident_char(static_cast<unsigned char>(src_[pos_]))) text += take();
          } else {
            advance();
            emit(Tok::Keyword, std::move(text));
            continue;
          }
        }
        emit(Tok::Ident, std::move(text));
        continue;
      }
      diags.push_back({line, col, Severity::Error, std::string("unexpected character '") + static_cast<char>(c) + "'"});
      advance();
    }
    out.push_back(Token{Tok::End, "", line_, col_});
    return out;
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  char take() {
    char c = src_[pos_];
    advance();
    return c;
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// --- parser ------------------------------------------------------------------------

struct SyntaxFailure {
  ParseDiagnostic diag;
};

constexpr std::array kOperatorWords = {"and", "or", "not", "that", "some", "only", "min", "max", "exactly",
                                       "value", "inverse"};
constexpr std::array kMiscFrameWords = {"DisjointClasses", "EquivalentClasses", "DisjointProperties",
                                        "EquivalentProperties"};
constexpr std::array kAxiomWords = {"SubClassOf", "EquivalentTo", "DisjointWith", "Domain",
                                    "Range",      "InverseOf",    "SubPropertyOf", "Type"};
constexpr std::array kBuiltinDatatypes = {"integer",  "int",     "string",  "boolean",
                                          "decimal",  "float",   "double",  "dateTime",
                                          "nonNegativeInteger", "positiveInteger", "date", "anyURI"};

template <std::size_t N>
bool one_of(std::string_view s, const std::array<const char*, N>& words) {
  return std::any_of(words.begin(), words.end(), [&](const char* w) { return s == w; });
}

std::optional<EntityKind> frame_kind(std::string_view word) {
  if (word == "Class") return EntityKind::Class;
  if (word == "ObjectProperty") return EntityKind::ObjectProperty;
  if (word == "DataProperty") return EntityKind::DataProperty;
  if (word == "Individual") return EntityKind::NamedIndividual;
  if (word == "Datatype") return EntityKind::Datatype;
  return std::nullopt;
}

std::string_view frame_word(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::NamedIndividual: return "Individual";
    case EntityKind::Datatype: return "Datatype";
  }
  return "";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Ontology& lookup, Ontology* target,
         std::vector<ParseDiagnostic>& diags)
      : tokens_(std::move(tokens)), lookup_(lookup), target_(target), diags_(diags) {
    prefixes_[""] = std::string(kDefaultNamespace);
    prefixes_["owl"] = std::string(kOwlNamespace);
    prefixes_["xsd"] = std::string(kXsdNamespace);
    prefixes_["rdfs"] = "http://www.w3.org/2000/01/rdf-schema#";
    prefixes_["rdf"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
  }

  // Document-level entry points (target_ must be set).
  void scan_declarations();
  void parse_document();

  ClassExpression description();
  AxiomBody axiom_line();
  void expect_end() {
    if (peek().type != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).type == Tok::Ident && peek(k).text == w;
  }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    next();
    return true;
  }
  const Token& expect(Tok t, std::string_view what) {
    if (peek().type != t) fail(peek(), "expected " + std::string(what) + describe(peek()));
    return next();
  }
  static std::string describe(const Token& t) {
    if (t.type == Tok::End) return " but reached end of input";
    return " but found '" + t.text + (t.type == Tok::Keyword ? ":'" : "'");
  }
  [[noreturn]] void fail(const Token& at, std::string msg) const {
    throw SyntaxFailure{{at.line, at.col, Severity::Error, std::move(msg)}};
  }
  void warn(const Token& at, std::string msg) { diags_.push_back({at.line, at.col, Severity::Warning, std::move(msg)}); }

  // names
  std::pair<std::string, std::string> split_prefixed(const Token& t) const {
    auto colon = t.text.find(':');
    if (colon == std::string::npos) return {"", t.text};
    return {t.text.substr(0, colon), t.text.substr(colon + 1)};
  }
  EntityRef entity_for(EntityKind kind, const Token& t) const {
    auto [prefix, local] = split_prefixed(t);
    if (kind == EntityKind::Class && local == "Thing" && (prefix.empty() || prefix == "owl")) return owl_thing();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail(t, "unknown prefix '" + prefix + ":'");
    return make_entity(kind, local, it->second);
  }
  const Token& name_token() {
    const Token& t = peek();
    if (t.type != Tok::Ident) fail(t, "expected a name" + describe(t));
    if (one_of(t.text, kOperatorWords)) fail(t, "'" + t.text + "' is a reserved word, not a name");
    return next();
  }
  std::optional<EntityRef> lookup(EntityKind kind, const Token& t) const {
    EntityRef want = entity_for(kind, t);
    if (lookup_.is_declared(want)) return want;
    return std::nullopt;
  }
  EntityRef resolve(EntityKind kind, const Token& t) const {
    if (auto e = lookup(kind, t)) return *e;
    std::string what;
    switch (kind) {
      case EntityKind::Class: what = "class"; break;
      case EntityKind::ObjectProperty: what = "object property"; break;
      case EntityKind::DataProperty: what = "data property"; break;
      case EntityKind::NamedIndividual: what = "individual"; break;
      case EntityKind::Datatype: what = "datatype"; break;
    }
    if (kind == EntityKind::ObjectProperty && lookup(EntityKind::DataProperty, t)) {
      fail(t, "data property '" + t.text + "' cannot be used in a class expression");
    }
    fail(t, "unknown " + what + " '" + t.text + "'");
  }
  EntityRef datatype(const Token& t) {
    if (auto e = lookup(EntityKind::Datatype, t)) return *e;
    auto [prefix, local] = split_prefixed(t);
    if ((prefix.empty() || prefix == "xsd") && one_of(local, kBuiltinDatatypes)) {
      EntityRef dt = make_entity(EntityKind::Datatype, local, kXsdNamespace);
      if (target_) target_->declare(dt);
      return dt;
    }
    fail(t, "unknown datatype '" + t.text + "'");
  }

  // expressions
  ClassExpression conjunction();
  ClassExpression unary();
  ClassExpression restriction();
  PropertyExpression property_expression();
  bool starts_primary() const {
    const Token& t = peek();
    if (t.type == Tok::LParen) return true;
    if (t.type != Tok::Ident) return false;
    return t.text == "not" || t.text == "inverse" || !one_of(t.text, kOperatorWords);
  }
  bool starts_property() const {
    if (at_word("inverse")) return true;
    if (peek().type != Tok::Ident || one_of(peek().text, kOperatorWords)) return false;
    const Token& after = peek(1);
    return after.type == Tok::Ident &&
           (after.text == "some" || after.text == "only" || after.text == "min" || after.text == "max" ||
            after.text == "exactly" || after.text == "value");
  }
  Literal literal();

  // document
  void recover_to_keyword(bool frames_only);
  void add(AxiomBody body, const Token& at);
  void class_frame();
  void object_property_frame();
  void data_property_frame();
  void individual_frame();
  void misc_frame(const Token& kw);
  void prefix_decl();
  template <class Entry>
  void entries(const Token& slot, Entry&& entry);
  void annotation_entry(const EntityRef& subject);
  void unknown_slot(const Token& slot, std::string_view frame);

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ontology& lookup_;
  Ontology* target_;
  std::vector<ParseDiagnostic>& diags_;
  std::map<std::string, std::string> prefixes_;
};

ClassExpression Parser::description() {
  std::vector<ClassExpression> ops{conjunction()};
  while (at_word("or")) {
    next();
    ops.push_back(conjunction());
  }
  if (ops.size() == 1) return std::move(ops.front());
  return ClassExpression::union_of(std::move(ops));
}

ClassExpression Parser::conjunction() {
  std::vector<ClassExpression> ops{unary()};
  while (at_word("and") || at_word("that")) {
    next();
    ops.push_back(unary());
  }
  if (ops.size() == 1) return std::move(ops.front());
  return ClassExpression::intersection_of(std::move(ops));
}

ClassExpression Parser::unary() {
  if (at_word("not")) {
    next();
    return ClassExpression::complement_of(unary());
  }
  if (peek().type == Tok::LParen) {
    next();
    ClassExpression e = description();
    expect(Tok::RParen, "')'");
    return e;
  }
  if (peek().type == Tok::LBrace) fail(peek(), "enumerations of individuals are not supported");
  if (starts_property()) return restriction();
  const Token& t = name_token();
  auto [prefix, local] = split_prefixed(t);
  if (prefix.empty() || prefix == "owl") {
    if (local == "Thing") return ClassExpression::thing();
    if (local == "Nothing") return ClassExpression::nothing();
  }
  return ClassExpression::named(resolve(EntityKind::Class, t));
}

PropertyExpression Parser::property_expression() {
  bool inverted = false;
  while (at_word("inverse")) {
    next();
    inverted = !inverted;
  }
  if (accept(Tok::LParen)) {
    PropertyExpression inner = property_expression();
    expect(Tok::RParen, "')'");
    if (inverted) inner = inner.inverse();
    return inner;
  }
  const Token& t = name_token();
  return PropertyExpression{resolve(EntityKind::ObjectProperty, t), inverted};
}

ClassExpression Parser::restriction() {
  PropertyExpression p = property_expression();
  const Token& kw = peek();
  if (kw.type != Tok::Ident) fail(kw, "expected 'some', 'only', 'min', 'max' or 'exactly'" + describe(kw));
  std::string word = kw.text;
  next();
  if (word == "some") return ClassExpression::some(std::move(p), unary());
  if (word == "only") return ClassExpression::only(std::move(p), unary());
  if (word == "value") fail(kw, "'value' restrictions are not supported");
  if (word == "min" || word == "max" || word == "exactly") {
    const Token& n = expect(Tok::Integer, "a non-negative integer");
    if (n.text.front() == '-') fail(n, "cardinality must be non-negative");
    std::uint32_t count = 0;
    try {
      count = static_cast<std::uint32_t>(std::stoul(n.text));
    } catch (const std::exception&) {
      fail(n, "cardinality out of range");
    }
    ClassExpression filler = starts_primary() ? unary() : ClassExpression::thing();
    if (word == "min") return ClassExpression::min(count, std::move(p), std::move(filler));
    if (word == "max") return ClassExpression::max(count, std::move(p), std::move(filler));
    return ClassExpression::exactly(count, std::move(p), std::move(filler));
  }
  fail(kw, "expected 'some', 'only', 'min', 'max' or 'exactly'" + describe(kw));
}

Literal Parser::literal() {
  const Token& t = peek();
  if (t.type == Tok::Integer) {
    next();
    return Literal{t.text, "integer"};
  }
  if (t.type == Tok::String) {
    Literal l{t.text, "string"};
    next();
    if (accept(Tok::Caret2)) {
      const Token& dt = name_token();
      l.datatype = datatype(dt).name;
    } else if (accept(Tok::At)) {
      name_token();  // language tag, dropped
    }
    return l;
  }
  fail(t, "expected a literal" + describe(t));
}

// --- document -------------------------------------------------------------------------

void Parser::scan_declarations() {
  for (std::size_t i = 0; i + 1 < tokens_.size(); ++i) {
    const Token& t = tokens_[i];
    if (t.type != Tok::Keyword) continue;
    if (t.text == "Prefix") {
      std::size_t j = i + 1;
      std::string name;
      if (tokens_[j].type == Tok::Keyword) {
        name = tokens_[j].text;
      } else if (tokens_[j].type != Tok::Colon) {
        continue;
      }
      if (tokens_[j + 1].type == Tok::Iri) prefixes_[name] = tokens_[j + 1].text;
      continue;
    }
    auto kind = frame_kind(t.text);
    const Token& name = tokens_[i + 1];
    if (!kind || name.type != Tok::Ident || one_of(name.text, kOperatorWords)) continue;
    try {
      target_->declare(entity_for(*kind, name));
    } catch (const SyntaxFailure&) {
      // reported again when the frame itself is parsed
    } catch (const OntologyError& e) {
      diags_.push_back({name.line, name.col, Severity::Error, e.what()});
    }
  }
}

void Parser::recover_to_keyword(bool frames_only) {
  while (peek().type != Tok::End) {
    if (peek().type == Tok::Keyword) {
      if (!frames_only) return;
      if (frame_kind(peek().text) || one_of(peek().text, kMiscFrameWords) || peek().text == "Prefix" ||
          peek().text == "Ontology") {
        return;
      }
    }
    next();
  }
}

void Parser::add(AxiomBody body, const Token& at) {
  try {
    target_->add_axiom(std::move(body));
  } catch (const OntologyError& e) {
    fail(at, e.what());
  }
}

template <class Entry>
void Parser::entries(const Token& slot, Entry&& entry) {
  try {
    if (peek().type == Tok::Keyword || peek().type == Tok::End) fail(peek(), "empty '" + slot.text + ":' slot");
    do {
      entry();
    } while (accept(Tok::Comma));
    if (peek().type != Tok::Keyword && peek().type != Tok::End) {
      fail(peek(), "unexpected '" + peek().text + "' in '" + slot.text + ":' slot");
    }
  } catch (const SyntaxFailure& f) {
    diags_.push_back(f.diag);
    recover_to_keyword(false);
  }
}

void Parser::unknown_slot(const Token& slot, std::string_view frame) {
  diags_.push_back({slot.line, slot.col, Severity::Error,
                    "unsupported slot '" + slot.text + ":' in " + std::string(frame) + " frame"});
  next();
  recover_to_keyword(false);
}

void Parser::annotation_entry(const EntityRef& subject) {
  const Token& prop = name_token();
  Literal value = literal();
  if (split_prefixed(prop).second == "label") {
    target_->add_label(subject, value.lexical);
  } else {
    warn(prop, "annotation '" + prop.text + "' ignored");
  }
}

bool is_slot_of(std::string_view word, std::initializer_list<std::string_view> slots) {
  return std::find(slots.begin(), slots.end(), word) != slots.end();
}

bool ends_frame(const Token& t) {
  return t.type == Tok::End ||
         (t.type == Tok::Keyword && (frame_kind(t.text) || one_of(t.text, kMiscFrameWords) ||
                                     t.text == "Prefix" || t.text == "Ontology"));
}

void Parser::class_frame() {
  const Token& name = name_token();
  const EntityRef self = entity_for(EntityKind::Class, name);
  add(Declaration{self}, name);
  const auto self_expr = is_owl_thing(self) ? ClassExpression::thing() : ClassExpression::named(self);
  while (!ends_frame(peek())) {
    const Token slot = peek();
    if (slot.type != Tok::Keyword) fail(slot, "expected a slot such as 'SubClassOf:'" + describe(slot));
    if (!is_slot_of(slot.text, {"SubClassOf", "EquivalentTo", "DisjointWith", "Annotations"})) {
      unknown_slot(slot, "Class");
      continue;
    }
    next();
    entries(slot, [&] {
      if (slot.text == "Annotations") return annotation_entry(self);
      const Token& at = peek();
      ClassExpression e = description();
      if (slot.text == "SubClassOf") add(SubClassOf{self_expr, std::move(e)}, at);
      if (slot.text == "EquivalentTo") add(EquivalentClasses{{self_expr, std::move(e)}}, at);
      if (slot.text == "DisjointWith") add(DisjointClasses{{self_expr, std::move(e)}}, at);
    });
  }
}

void Parser::object_property_frame() {
  const Token& name = name_token();
  const EntityRef self = entity_for(EntityKind::ObjectProperty, name);
  add(Declaration{self}, name);
  const PropertyExpression self_p{self, false};
  while (!ends_frame(peek())) {
    const Token slot = peek();
    if (slot.type != Tok::Keyword) fail(slot, "expected a slot such as 'Domain:'" + describe(slot));
    if (!is_slot_of(slot.text, {"Domain", "Range", "InverseOf", "SubPropertyOf", "EquivalentTo", "DisjointWith",
                                "Characteristics", "Annotations"})) {
      unknown_slot(slot, "ObjectProperty");
      continue;
    }
    next();
    entries(slot, [&] {
      const Token& at = peek();
      if (slot.text == "Annotations") return annotation_entry(self);
      if (slot.text == "Characteristics") {
        const Token& c = name_token();
        warn(c, "characteristic '" + c.text + "' ignored");
        return;
      }
      if (slot.text == "Domain") return add(ObjectPropertyDomain{self_p, description()}, at);
      if (slot.text == "Range") return add(ObjectPropertyRange{self_p, description()}, at);
      if (slot.text == "InverseOf") {
        PropertyExpression other = property_expression();
        if (other.inverted) fail(at, "InverseOf expects a named object property");
        return add(InverseObjectProperties{self, other.base}, at);
      }
      if (slot.text == "SubPropertyOf") return add(SubObjectPropertyOf{self_p, property_expression()}, at);
      if (slot.text == "EquivalentTo") {
        return add(EquivalentObjectProperties{{self_p, property_expression()}}, at);
      }
      PropertyExpression other = property_expression();
      if (other.inverted) fail(at, "DisjointWith expects a named object property");
      add(DisjointObjectProperties{self, other.base}, at);
    });
  }
}

void Parser::data_property_frame() {
  const Token& name = name_token();
  const EntityRef self = entity_for(EntityKind::DataProperty, name);
  add(Declaration{self}, name);
  while (!ends_frame(peek())) {
    const Token slot = peek();
    if (slot.type != Tok::Keyword) fail(slot, "expected a slot such as 'Domain:'" + describe(slot));
    if (!is_slot_of(slot.text, {"Domain", "Range", "Characteristics", "Annotations"})) {
      unknown_slot(slot, "DataProperty");
      continue;
    }
    next();
    entries(slot, [&] {
      const Token& at = peek();
      if (slot.text == "Annotations") return annotation_entry(self);
      if (slot.text == "Characteristics") {
        const Token& c = name_token();
        warn(c, "characteristic '" + c.text + "' ignored");
        return;
      }
      if (slot.text == "Domain") return add(DataPropertyDomain{self, description()}, at);
      add(DataPropertyRange{self, datatype(name_token())}, at);
    });
  }
}

void Parser::individual_frame() {
  const Token& name = name_token();
  const EntityRef self = entity_for(EntityKind::NamedIndividual, name);
  add(Declaration{self}, name);
  while (!ends_frame(peek())) {
    const Token slot = peek();
    if (slot.type != Tok::Keyword) fail(slot, "expected a slot such as 'Types:'" + describe(slot));
    if (!is_slot_of(slot.text, {"Types", "Facts", "Annotations"})) {
      unknown_slot(slot, "Individual");
      continue;
    }
    next();
    entries(slot, [&] {
      const Token& at = peek();
      if (slot.text == "Annotations") return annotation_entry(self);
      if (slot.text == "Types") return add(ClassAssertion{description(), self}, at);
      if (at_word("not")) fail(at, "negative property assertions are not supported");
      const Token& prop = name_token();
      if (auto op = lookup(EntityKind::ObjectProperty, prop)) {
        EntityRef object = resolve(EntityKind::NamedIndividual, name_token());
        return add(ObjectPropertyAssertion{*op, self, object}, at);
      }
      if (auto dp = lookup(EntityKind::DataProperty, prop)) {
        return add(DataPropertyAssertion{*dp, self, literal()}, at);
      }
      fail(prop, "unknown property '" + prop.text + "'");
    });
  }
}

void Parser::misc_frame(const Token& kw) {
  const std::string word = kw.text;
  std::vector<ClassExpression> classes;
  std::vector<PropertyExpression> props;
  entries(kw, [&] {
    if (word == "DisjointClasses" || word == "EquivalentClasses") {
      classes.push_back(description());
    } else {
      props.push_back(property_expression());
    }
  });
  const std::size_t n = std::max(classes.size(), props.size());
  if (n < 2) {
    diags_.push_back({kw.line, kw.col, Severity::Error, "'" + word + ":' needs at least two operands"});
    return;
  }
  try {
    if (word == "DisjointClasses") {
      add(DisjointClasses{std::move(classes)}, kw);
    } else if (word == "EquivalentClasses") {
      add(EquivalentClasses{std::move(classes)}, kw);
    } else if (word == "EquivalentProperties") {
      add(EquivalentObjectProperties{std::move(props)}, kw);
    } else {
      for (const auto& p : props) {
        if (p.inverted) fail(kw, "DisjointProperties expects named object properties");
      }
      for (std::size_t i = 0; i < props.size(); ++i) {
        for (std::size_t j = i + 1; j < props.size(); ++j) {
          add(DisjointObjectProperties{props[i].base, props[j].base}, kw);
        }
      }
    }
  } catch (const SyntaxFailure& f) {
    diags_.push_back(f.diag);
  }
}

void Parser::prefix_decl() {
  if (peek().type == Tok::Keyword || peek().type == Tok::Colon) next();
  expect(Tok::Iri, "an IRI in angle brackets");
}

void Parser::parse_document() {
  while (peek().type != Tok::End) {
    const Token kw = peek();
    try {
      if (kw.type != Tok::Keyword) fail(kw, "expected a frame such as 'Class:'" + describe(kw));
      next();
      if (kw.text == "Prefix") {
        prefix_decl();
      } else if (kw.text == "Ontology") {
        accept(Tok::Iri);
      } else if (kw.text == "Import") {
        accept(Tok::Iri);
        warn(kw, "imports are ignored");
      } else if (kw.text == "Class") {
        class_frame();
      } else if (kw.text == "ObjectProperty") {
        object_property_frame();
      } else if (kw.text == "DataProperty") {
        data_property_frame();
      } else if (kw.text == "Individual") {
        individual_frame();
      } else if (kw.text == "Datatype") {
        add(Declaration{entity_for(EntityKind::Datatype, name_token())}, kw);
      } else if (one_of(kw.text, kMiscFrameWords)) {
        misc_frame(kw);
      } else {
        fail(kw, "unknown frame '" + kw.text + ":'");
      }
    } catch (const SyntaxFailure& f) {
      diags_.push_back(f.diag);
      if (peek().type == Tok::Keyword && &peek() != &kw) next();
      recover_to_keyword(true);
    }
  }
}

// --- single-line axioms -------------------------------------------------------------

std::vector<Token> slice(const std::vector<Token>& toks, std::size_t from, std::size_t to) {
  std::vector<Token> out(toks.begin() + static_cast<std::ptrdiff_t>(from),
                         toks.begin() + static_cast<std::ptrdiff_t>(to));
  const Token& end = to < toks.size() ? toks[to] : toks.back();
  out.push_back(Token{Tok::End, "", end.line, end.col});
  return out;
}

AxiomBody Parser::axiom_line() {
  const Token first = peek();
  if (first.type == Tok::Keyword) {
    next();
    if (auto kind = frame_kind(first.text)) {
      const Token& name = name_token();
      EntityRef e = *kind == EntityKind::Datatype ? datatype(name) : resolve(*kind, name);
      return Declaration{e};
    }
    if (!one_of(first.text, kMiscFrameWords)) fail(first, "unknown axiom form '" + first.text + ":'");
    std::vector<ClassExpression> classes;
    std::vector<PropertyExpression> props;
    do {
      if (first.text == "DisjointClasses" || first.text == "EquivalentClasses") {
        classes.push_back(description());
      } else {
        props.push_back(property_expression());
      }
    } while (accept(Tok::Comma));
    expect_end();
    if (std::max(classes.size(), props.size()) < 2) fail(first, "needs at least two operands");
    if (first.text == "DisjointClasses") return DisjointClasses{std::move(classes)};
    if (first.text == "EquivalentClasses") return EquivalentClasses{std::move(classes)};
    if (first.text == "EquivalentProperties") return EquivalentObjectProperties{std::move(props)};
    if (props.size() != 2 || props[0].inverted || props[1].inverted) {
      fail(first, "DisjointProperties expects exactly two named object properties");
    }
    return DisjointObjectProperties{props[0].base, props[1].base};
  }

  // Locate the connective at parenthesis depth zero.
  std::size_t k = 0;
  int depth = 0;
  for (; k < tokens_.size(); ++k) {
    const Token& t = tokens_[k];
    if (t.type == Tok::LParen) ++depth;
    if (t.type == Tok::RParen) --depth;
    if (depth == 0 && t.type == Tok::Ident && one_of(t.text, kAxiomWords)) break;
  }
  if (k >= tokens_.size()) {
    // Property assertion: subject property object
    const Token& subj = name_token();
    const Token& prop = name_token();
    EntityRef s = resolve(EntityKind::NamedIndividual, subj);
    if (auto op = lookup(EntityKind::ObjectProperty, prop)) {
      EntityRef o = resolve(EntityKind::NamedIndividual, name_token());
      expect_end();
      return ObjectPropertyAssertion{*op, s, o};
    }
    if (auto dp = lookup(EntityKind::DataProperty, prop)) {
      Literal l = literal();
      expect_end();
      return DataPropertyAssertion{*dp, s, std::move(l)};
    }
    fail(prop, "unknown property '" + prop.text + "'");
  }

  const Token connective = tokens_[k];
  const std::string word = connective.text;
  Parser lhs(slice(tokens_, 0, k), lookup_, nullptr, diags_);
  Parser rhs(slice(tokens_, k + 1, tokens_.size() - 1), lookup_, nullptr, diags_);
  if (k == 0) fail(connective, "missing left-hand side before '" + word + "'");

  // A lone name on the left decides between class and property readings.
  const bool single = k == 1 || (k == 2 && tokens_[0].type == Tok::Ident && tokens_[0].text == "inverse");
  const Token& head = tokens_[k - 1];
  auto is_object_property = [&] {
    return single && lookup(EntityKind::ObjectProperty, head) &&
           !(k == 1 && lookup(EntityKind::Class, head));
  };
  auto is_data_property = [&] { return k == 1 && lookup(EntityKind::DataProperty, head).has_value(); };

  auto finish = [](Parser& p) { p.expect_end(); };
  if (word == "SubClassOf") {
    ClassExpression sub = lhs.description();
    finish(lhs);
    ClassExpression sup = rhs.description();
    finish(rhs);
    return SubClassOf{std::move(sub), std::move(sup)};
  }
  if (word == "Type") {
    EntityRef i = resolve(EntityKind::NamedIndividual, lhs.name_token());
    finish(lhs);
    ClassExpression c = rhs.description();
    finish(rhs);
    return ClassAssertion{std::move(c), i};
  }
  if (word == "Domain" || word == "Range") {
    if (is_data_property() && !lookup(EntityKind::ObjectProperty, head)) {
      EntityRef p = *lookup(EntityKind::DataProperty, head);
      if (word == "Domain") {
        ClassExpression c = rhs.description();
        finish(rhs);
        return DataPropertyDomain{p, std::move(c)};
      }
      EntityRef dt = rhs.datatype(rhs.name_token());
      finish(rhs);
      return DataPropertyRange{p, dt};
    }
    PropertyExpression p = lhs.property_expression();
    finish(lhs);
    ClassExpression c = rhs.description();
    finish(rhs);
    if (word == "Domain") return ObjectPropertyDomain{std::move(p), std::move(c)};
    return ObjectPropertyRange{std::move(p), std::move(c)};
  }
  if (word == "InverseOf" || word == "SubPropertyOf" ||
      ((word == "EquivalentTo" || word == "DisjointWith") && is_object_property())) {
    PropertyExpression a = lhs.property_expression();
    finish(lhs);
    PropertyExpression b = rhs.property_expression();
    finish(rhs);
    if (word == "SubPropertyOf") return SubObjectPropertyOf{std::move(a), std::move(b)};
    if (word == "EquivalentTo") return EquivalentObjectProperties{{std::move(a), std::move(b)}};
    if (a.inverted || b.inverted) fail(connective, word + " expects named object properties");
    if (word == "InverseOf") return InverseObjectProperties{a.base, b.base};
    return DisjointObjectProperties{a.base, b.base};
  }
  ClassExpression a = lhs.description();
  finish(lhs);
  ClassExpression b = rhs.description();
  finish(rhs);
  if (word == "EquivalentTo") return EquivalentClasses{{std::move(a), std::move(b)}};
  return DisjointClasses{{std::move(a), std::move(b)}};
}

}  // namespace

// --- public entry points ------------------------------------------------------------

ParseResult parse_ontology(std::string_view source) {
  ParseResult result;
  Ontology onto;
  std::vector<Token> tokens = Lexer(source).run(result.diagnostics);
  Parser parser(std::move(tokens), onto, &onto, result.diagnostics);
  parser.scan_declarations();
  parser.parse_document();
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), [](const auto& a, const auto& b) {
    return std::tie(a.line, a.column) < std::tie(b.line, b.column);
  });
  if (result.error_count() == 0) result.ontology = std::move(onto);
  return result;
}

ClassExpression parse_class_expression(std::string_view text, const Ontology& o) {
  std::vector<ParseDiagnostic> diags;
  std::vector<Token> tokens = Lexer(text).run(diags);
  if (!diags.empty()) throw ParseError(std::move(diags));
  Parser parser(std::move(tokens), o, nullptr, diags);
  try {
    ClassExpression e = parser.description();
    parser.expect_end();
    return e;
  } catch (const SyntaxFailure& f) {
    diags.push_back(f.diag);
    throw ParseError(std::move(diags));
  }
}

AxiomBody parse_axiom(std::string_view text, const Ontology& o) {
  std::vector<ParseDiagnostic> diags;
  std::vector<Token> tokens = Lexer(text).run(diags);
  if (!diags.empty()) throw ParseError(std::move(diags));
  Parser parser(std::move(tokens), o, nullptr, diags);
  try {
    return parser.axiom_line();
  } catch (const SyntaxFailure& f) {
    diags.push_back(f.diag);
    throw ParseError(std::move(diags));
  }
}

// --- rendering ----------------------------------------------------------------------

std::string render_manchester(const PropertyExpression& p) {
  return p.inverted ? "inverse " + p.base.name : p.base.name;
}

namespace {

std::string render_operand(const ClassExpression& e, bool paren_nary) {
  std::string s = render_manchester(e);
  if (paren_nary && e.is_nary()) return "(" + s + ")";
  return s;
}

std::string literal_text(const Literal& l) {
  if (l.datatype == "integer" && !l.lexical.empty() &&
      std::all_of(l.lexical.begin() + (l.lexical.front() == '-' ? 1 : 0), l.lexical.end(),
                  [](unsigned char c) { return std::isdigit(c); }) &&
      l.lexical != "-") {
    return l.lexical;
  }
  std::string out = "\"";
  for (char c : l.lexical) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  if (l.datatype != "string") out += "^^" + l.datatype;
  return out;
}

std::string join_rendered(std::span<const ClassExpression> xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += render_manchester(x);
  }
  return out;
}

struct ManchesterRenderer {
  std::string operator()(const SubClassOf& a) const {
    return render_manchester(a.sub) + " SubClassOf " + render_manchester(a.sup);
  }
  std::string operator()(const EquivalentClasses& a) const {
    if (a.operands.size() == 2) {
      return render_manchester(a.operands[0]) + " EquivalentTo " + render_manchester(a.operands[1]);
    }
    return "EquivalentClasses: " + join_rendered(a.operands);
  }
  std::string operator()(const DisjointClasses& a) const {
    if (a.operands.size() == 2) {
      return render_manchester(a.operands[0]) + " DisjointWith " + render_manchester(a.operands[1]);
    }
    return "DisjointClasses: " + join_rendered(a.operands);
  }
  std::string operator()(const ObjectPropertyDomain& a) const {
    return render_manchester(a.property) + " Domain " + render_manchester(a.domain);
  }
  std::string operator()(const ObjectPropertyRange& a) const {
    return render_manchester(a.property) + " Range " + render_manchester(a.range);
  }
  std::string operator()(const DataPropertyDomain& a) const {
    return a.property.name + " Domain " + render_manchester(a.domain);
  }
  std::string operator()(const DataPropertyRange& a) const { return a.property.name + " Range " + a.datatype.name; }
  std::string operator()(const InverseObjectProperties& a) const {
    return a.first.name + " InverseOf " + a.second.name;
  }
  std::string operator()(const SubObjectPropertyOf& a) const {
    return render_manchester(a.sub) + " SubPropertyOf " + render_manchester(a.sup);
  }
  std::string operator()(const EquivalentObjectProperties& a) const {
    if (a.operands.size() == 2) {
      return render_manchester(a.operands[0]) + " EquivalentTo " + render_manchester(a.operands[1]);
    }
    std::string out = "EquivalentProperties: ";
    for (std::size_t i = 0; i < a.operands.size(); ++i) {
      if (i) out += ", ";
      out += render_manchester(a.operands[i]);
    }
    return out;
  }
  std::string operator()(const DisjointObjectProperties& a) const {
    return a.first.name + " DisjointWith " + a.second.name;
  }
  std::string operator()(const ClassAssertion& a) const {
    return a.individual.name + " Type " + render_manchester(a.type);
  }
  std::string operator()(const ObjectPropertyAssertion& a) const {
    return a.subject.name + " " + a.property.name + " " + a.object.name;
  }
  std::string operator()(const DataPropertyAssertion& a) const {
    return a.subject.name + " " + a.property.name + " " + literal_text(a.value);
  }
  std::string operator()(const Declaration& a) const {
    return std::string(frame_word(a.entity.kind)) + ": " + a.entity.name;
  }
};

}  // namespace

std::string render_manchester(const ClassExpression& e) {
  using K = ClassExpression::Kind;
  switch (e.kind()) {
    case K::Named: return is_owl_thing(e.entity()) ? "Thing" : e.entity().name;
    case K::Thing: return "Thing";
    case K::Nothing: return "Nothing";
    case K::IntersectionOf:
    case K::UnionOf: {
      const bool conj = e.kind() == K::IntersectionOf;
      std::string out;
      for (const auto& op : e.operands()) {
        if (!out.empty()) out += conj ? " and " : " or ";
        // Intersections bind tighter than unions, so only nested unions (and
        // any nested n-ary operand of an intersection) need parentheses.
        out += render_operand(op, conj || op.kind() == K::UnionOf);
      }
      return out;
    }
    case K::ComplementOf: return "not " + render_operand(e.filler(), true);
    case K::SomeValuesFrom:
      return render_manchester(e.property()) + " some " + render_operand(e.filler(), true);
    case K::AllValuesFrom:
      return render_manchester(e.property()) + " only " + render_operand(e.filler(), true);
    case K::MinCardinality:
    case K::MaxCardinality:
    case K::ExactCardinality: {
      std::string_view word = e.kind() == K::MinCardinality ? " min " : e.kind() == K::MaxCardinality ? " max " : " exactly ";
      return render_manchester(e.property()) + std::string(word) + std::to_string(e.cardinality()) + " " +
             render_operand(e.filler(), true);
    }
  }
  return {};
}

std::string render_manchester(const AxiomBody& body) { return std::visit(ManchesterRenderer{}, body); }

}  // namespace owlverb
