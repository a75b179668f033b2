// Surface forms for entity names: derived from camelCase identifiers and
// optionally corrected by a .lex override file.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlverb/owl.hpp"

namespace owlverb {

enum class Category { CommonNoun, TransitiveVerb, ProperName, HasNoun };

std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view s);

/// Form keys: "sg", "pl" (nouns and has-noun), "vbz", "vb", "vbp-passive"
/// (verbs), "phrase" (proper names). A verb may also carry "inv", the active
/// phrase used for its inverse; without it the inverse reads
/// "is <vbp-passive> by".
struct LexiconEntry {
  EntityRef entity;
  Category category = Category::CommonNoun;
  std::map<std::string, std::string> forms;

  const std::string& form(const std::string& key) const;
  bool has(const std::string& key) const { return forms.count(key) != 0; }

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Malformed override file; `line` is 1-based.
class LexiconError : public std::runtime_error {
 public:
  LexiconError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Lexicon {
 public:
  void insert(LexiconEntry entry);
  /// Throws NotFoundError naming the entity.
  const LexiconEntry& at(const EntityRef& e) const;
  const LexiconEntry* find(const EntityRef& e) const;
  const std::map<EntityRef, LexiconEntry>& entries() const { return entries_; }

  /// Declared datatypes, kept so readers can resolve data-range fallbacks.
  std::set<EntityRef> datatypes;
  /// Derivation warnings, one per entity that fell back to regular morphology.
  std::vector<std::string> warnings;

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

 private:
  std::map<EntityRef, LexiconEntry> entries_;
};

/// Lowercase words; camelCase, digit runs, '_' and '-' separate words and an
/// all-caps run stays one word ("HTMLParser" -> html, parser).
std::vector<std::string> split_name(std::string_view name);

std::string pluralize(std::string_view noun_sg);
/// "a" or "an" for the first word of `phrase`.
std::string indefinite_article(std::string_view phrase);

/// Irregular-table queries, exposed for tests.
std::optional<std::string> irregular_participle(std::string_view base);
std::optional<std::string> irregular_plural(std::string_view sg);
std::size_t irregular_verb_count();
std::size_t irregular_noun_count();

/// Third-person singular of a base verb ("teach" -> "teaches").
std::string third_person(std::string_view base);
/// Best-effort base form of a third-person singular verb ("teaches" -> "teach").
std::string base_from_third_person(std::string_view vbz);
std::string past_participle(std::string_view base);

/// If `warning` is non-null it receives a message when no rule matched.
LexiconEntry derive_entry(const EntityRef& e, std::string* warning = nullptr);
/// One entry per declared Class (except owl:Thing), ObjectProperty,
/// DataProperty and NamedIndividual.
Lexicon derive_lexicon(const Ontology& o);

/// Applies a .lex override file: one entry per line, `name key=value ...`,
/// values may be double-quoted, '#' starts a comment. Keys are the form keys
/// above plus `category`. Throws LexiconError for malformed lines or names
/// that match no entity in `lex`.
Lexicon merge_overrides(const Lexicon& lex, std::string_view overrides);

}  // namespace owlverb
