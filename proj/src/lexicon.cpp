#include "owlverb/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "embedded.hpp"

namespace owlverb {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::CommonNoun: return "common-noun";
    case Category::TransitiveVerb: return "transitive-verb";
    case Category::ProperName: return "proper-name";
    case Category::HasNoun: return "has-noun";
  }
  return "";
}

std::optional<Category> category_from_string(std::string_view s) {
  for (auto c : {Category::CommonNoun, Category::TransitiveVerb, Category::ProperName, Category::HasNoun}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

const std::string& LexiconEntry::form(const std::string& key) const {
  auto it = forms.find(key);
  if (it == forms.end()) {
    throw NotFoundError("lexicon entry '" + entity.name + "' has no form '" + key + "'");
  }
  return it->second;
}

void Lexicon::insert(LexiconEntry entry) {
  EntityRef key = entry.entity;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

const LexiconEntry* Lexicon::find(const EntityRef& e) const {
  auto it = entries_.find(e);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry& Lexicon::at(const EntityRef& e) const {
  if (const auto* entry = find(e)) return *entry;
  throw NotFoundError("no lexicon entry for '" + e.name + "'");
}

// --- tables -------------------------------------------------------------------------

namespace {

struct Tables {
  std::unordered_map<std::string, std::string> participle;  // base -> participle
  std::unordered_map<std::string, std::string> base_of;     // participle -> base
  std::unordered_map<std::string, std::string> plural;      // singular -> plural

  Tables() {
    std::istringstream verbs{std::string(embedded::kIrregularVerbs)};
    for (std::string line; std::getline(verbs, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string base, past, pp;
      fields >> base >> past >> pp;
      if (pp.empty()) continue;
      participle.emplace(base, pp);
      base_of.emplace(pp, base);
    }
    std::istringstream nouns{std::string(embedded::kIrregularNouns)};
    for (std::string line; std::getline(nouns, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string sg, pl;
      fields >> sg >> pl;
      if (!pl.empty()) plural.emplace(sg, pl);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }
bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}
bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string join(const std::vector<std::string>& words, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < words.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

std::string with_rest(std::string head, const std::vector<std::string>& words, std::size_t from) {
  std::string rest = join(words, from);
  return rest.empty() ? head : head + " " + rest;
}

}  // namespace

std::optional<std::string> irregular_participle(std::string_view base) {
  auto it = tables().participle.find(std::string(base));
  if (it == tables().participle.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> irregular_plural(std::string_view sg) {
  auto it = tables().plural.find(std::string(sg));
  if (it == tables().plural.end()) return std::nullopt;
  return it->second;
}

std::size_t irregular_verb_count() { return tables().participle.size(); }
std::size_t irregular_noun_count() { return tables().plural.size(); }

// --- morphology -----------------------------------------------------------------------

namespace {

std::vector<std::string> split_raw(std::string_view name) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (c == '_' || c == '-' || std::isspace(c)) {
      flush();
      continue;
    }
    if (!cur.empty()) {
      const unsigned char prev = static_cast<unsigned char>(cur.back());
      const bool digit_edge = static_cast<bool>(std::isdigit(prev)) != static_cast<bool>(std::isdigit(c));
      const bool lower_upper = std::islower(prev) && std::isupper(c);
      // End of an all-caps run: "HTMLParser" splits before 'P'.
      const bool caps_end = std::isupper(prev) && std::isupper(c) && i + 1 < name.size() &&
                            std::islower(static_cast<unsigned char>(name[i + 1]));
      if (digit_edge || lower_upper || caps_end) flush();
    }
    cur += static_cast<char>(c);
  }
  flush();
  return words;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::vector<std::string> split_name(std::string_view name) {
  std::vector<std::string> words = split_raw(name);
  for (auto& w : words) w = lower(std::move(w));
  return words;
}

std::string pluralize(std::string_view noun_sg) {
  std::string s(noun_sg);
  const auto space = s.rfind(' ');
  const std::string head = space == std::string::npos ? "" : s.substr(0, space + 1);
  const std::string last = space == std::string::npos ? s : s.substr(space + 1);
  if (last.empty()) return s;
  if (auto irregular = irregular_plural(last)) return head + *irregular;
  if (last.size() >= 2 && last.back() == 'y' && !is_vowel(last[last.size() - 2])) {
    return head + last.substr(0, last.size() - 1) + "ies";
  }
  if (ends_with(last, "s") || ends_with(last, "x") || ends_with(last, "z") || ends_with(last, "ch") ||
      ends_with(last, "sh")) {
    return head + last + "es";
  }
  return head + last + "s";
}

std::string indefinite_article(std::string_view phrase) {
  std::string w = lower(std::string(phrase.substr(0, phrase.find(' '))));
  if (w.empty()) return "a";
  for (std::string_view p : {"uni", "one", "once", "use", "usu", "eu", "ewe"}) {
    if (starts_with(w, p)) return "a";
  }
  for (std::string_view p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (starts_with(w, p)) return "an";
  }
  if (std::isdigit(static_cast<unsigned char>(w[0]))) {
    return w[0] == '8' || starts_with(w, "11") || starts_with(w, "18") ? "an" : "a";
  }
  return is_vowel(w[0]) ? "an" : "a";
}

std::string third_person(std::string_view base) {
  std::string b(base);
  if (b == "have") return "has";
  if (b == "be") return "is";
  if (b.size() >= 2 && b.back() == 'y' && !is_vowel(b[b.size() - 2])) return b.substr(0, b.size() - 1) + "ies";
  if (ends_with(b, "s") || ends_with(b, "x") || ends_with(b, "z") || ends_with(b, "ch") || ends_with(b, "sh") ||
      ends_with(b, "o")) {
    return b + "es";
  }
  return b + "s";
}

std::string base_from_third_person(std::string_view vbz) {
  std::string w(vbz);
  if (w == "has") return "have";
  if (w == "is") return "be";
  const auto& t = tables().participle;
  if (w.size() > 1 && w.back() == 's' && t.count(w.substr(0, w.size() - 1))) return w.substr(0, w.size() - 1);
  if (ends_with(w, "es") && t.count(w.substr(0, w.size() - 2))) return w.substr(0, w.size() - 2);
  if (ends_with(w, "ies") && w.size() > 3) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view sib : {"ches", "shes", "sses", "xes", "zes", "oes"}) {
    if (ends_with(w, sib)) return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "s") && !ends_with(w, "ss")) return w.substr(0, w.size() - 1);
  return w;
}

std::string past_participle(std::string_view base) {
  std::string b(base);
  if (auto irregular = irregular_participle(b)) return *irregular;
  if (b.empty()) return b;
  if (b.back() == 'e') return b + "d";
  if (b.size() >= 2 && b.back() == 'y' && !is_vowel(b[b.size() - 2])) return b.substr(0, b.size() - 1) + "ied";
  // Short consonant-vowel-consonant verbs double the final consonant.
  const std::size_t n = b.size();
  if (n >= 3 && n <= 4 && !is_vowel(b[n - 1]) && is_vowel(b[n - 2]) && !is_vowel(b[n - 3]) &&
      std::string_view("wxy").find(b[n - 1]) == std::string_view::npos) {
    return b + b.back() + "ed";
  }
  return b + "ed";
}

namespace {

bool is_participle(std::string_view w) {
  return tables().base_of.count(std::string(w)) != 0 || (w.size() > 3 && ends_with(w, "ed"));
}

std::string base_from_participle(std::string_view pp) {
  std::string w(pp);
  if (auto it = tables().base_of.find(w); it != tables().base_of.end()) return it->second;
  if (ends_with(w, "ied")) return w.substr(0, w.size() - 3) + "y";
  if (!ends_with(w, "ed")) return w;
  std::string stem = w.substr(0, w.size() - 2);
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
      std::string_view("lsfz").find(stem[n - 1]) == std::string_view::npos) {
    return stem.substr(0, n - 1);
  }
  for (std::string_view e_stem : {"at", "iz", "ys", "ov", "iv", "uc", "ut", "ud", "ir", "ur", "bl", "as"}) {
    if (ends_with(stem, e_stem)) return stem + "e";
  }
  return stem;
}

bool looks_third_person(std::string_view w) {
  if (w == "has" || w == "is") return true;
  return w.size() > 2 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is");
}

void set_noun(LexiconEntry& e, std::string sg) {
  e.forms["pl"] = pluralize(sg);
  e.forms["sg"] = std::move(sg);
}

void set_verb(LexiconEntry& e, const std::vector<std::string>& words, const std::string& base, std::string vbz) {
  e.category = Category::TransitiveVerb;
  e.forms["vbz"] = with_rest(std::move(vbz), words, 1);
  e.forms["vb"] = with_rest(base, words, 1);
  e.forms["vbp-passive"] = with_rest(past_participle(base), words, 1);
}

// "is enrolled in": copula plus participle; the inverse reads with the
// participle's active verb ("enrolls").
void set_copula(LexiconEntry& e, const std::vector<std::string>& words, std::size_t participle_at) {
  e.category = Category::TransitiveVerb;
  const std::string rest = join(words, participle_at);
  e.forms["vbz"] = "is " + rest;
  e.forms["vb"] = "be " + rest;
  e.forms["vbp-passive"] = rest;
  e.forms["inv"] = third_person(base_from_participle(words[participle_at]));
}

}  // namespace

LexiconEntry derive_entry(const EntityRef& e, std::string* warning) {
  LexiconEntry entry;
  entry.entity = e;
  std::vector<std::string> words = split_name(e.name);
  if (words.empty()) words.push_back(lower(e.name));

  switch (e.kind) {
    case EntityKind::Class:
    case EntityKind::Datatype:
      entry.category = Category::CommonNoun;
      set_noun(entry, join(words));
      return entry;
    case EntityKind::NamedIndividual: {
      entry.category = Category::ProperName;
      std::vector<std::string> raw = split_raw(e.name);
      for (auto& w : raw) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
      entry.forms["phrase"] = raw.empty() ? e.name : join(raw);
      return entry;
    }
    case EntityKind::DataProperty:
      entry.category = Category::HasNoun;
      set_noun(entry, join(words, words.size() >= 2 && words[0] == "has" ? 1 : 0));
      return entry;
    case EntityKind::ObjectProperty:
      break;
  }

  const std::string& first = words[0];
  if (first == "has" && words.size() >= 2) {
    if (is_participle(words[1])) {
      // Perfect tense: "hasEnrolled" -> "has enrolled".
      entry.category = Category::TransitiveVerb;
      const std::string rest = join(words, 1);
      entry.forms["vbz"] = "has " + rest;
      entry.forms["vb"] = "have " + rest;
      entry.forms["vbp-passive"] = rest;
      return entry;
    }
    entry.category = Category::HasNoun;
    set_noun(entry, join(words, 1));
    return entry;
  }
  if (first == "is" && words.size() >= 2 && is_participle(words[1])) {
    set_copula(entry, words, 1);
    return entry;
  }
  if (words.size() >= 2 && is_participle(first)) {
    set_copula(entry, words, 0);
    return entry;
  }
  if (tables().participle.count(first) && first != "be" && first != "have") {
    set_verb(entry, words, first, third_person(first));
    return entry;
  }
  if (looks_third_person(first) && first != "is") {
    set_verb(entry, words, base_from_third_person(first), first);
    return entry;
  }
  if (warning) *warning = "no verb pattern for '" + e.name + "'; using regular morphology";
  set_verb(entry, words, first, third_person(first));
  return entry;
}

Lexicon derive_lexicon(const Ontology& o) {
  Lexicon lex;
  for (const auto& e : o.declarations()) {
    if (e.kind == EntityKind::Datatype) {
      lex.datatypes.insert(e);
      continue;
    }
    if (is_owl_thing(e)) continue;
    std::string warning;
    lex.insert(derive_entry(e, &warning));
    if (!warning.empty()) lex.warnings.push_back(std::move(warning));
  }
  return lex;
}

// --- overrides ------------------------------------------------------------------------

namespace {

constexpr std::string_view kFormKeys[] = {"sg", "pl", "vbz", "vb", "vbp-passive", "phrase", "inv"};

struct OverrideLine {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;
};

OverrideLine parse_override_line(std::string_view line, int lineno) {
  OverrideLine out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  skip_ws();
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) out.name += line[i++];
  if (out.name.find('=') != std::string::npos) throw LexiconError(lineno, "expected an entity name first");
  while (true) {
    skip_ws();
    if (i >= line.size() || line[i] == '#') break;
    std::string key;
    while (i < line.size() && line[i] != '=' && !std::isspace(static_cast<unsigned char>(line[i]))) key += line[i++];
    if (i >= line.size() || line[i] != '=' || key.empty()) {
      throw LexiconError(lineno, "expected key=value, found '" + key + "'");
    }
    ++i;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') value += line[i++];
      if (i >= line.size()) throw LexiconError(lineno, "unterminated quoted value for '" + key + "'");
      ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) value += line[i++];
    }
    if (value.empty()) throw LexiconError(lineno, "empty value for '" + key + "'");
    out.pairs.emplace_back(std::move(key), std::move(value));
  }
  if (out.pairs.empty()) throw LexiconError(lineno, "no key=value pairs for '" + out.name + "'");
  return out;
}

void check_entry(const LexiconEntry& e, int lineno) {
  std::vector<std::string> required;
  switch (e.category) {
    case Category::CommonNoun:
    case Category::HasNoun: required = {"sg", "pl"}; break;
    case Category::TransitiveVerb: required = {"vbz", "vb", "vbp-passive"}; break;
    case Category::ProperName: required = {"phrase"}; break;
  }
  for (const auto& key : required) {
    if (!e.has(key)) {
      throw LexiconError(lineno, "entry '" + e.entity.name + "' lacks form '" + key + "' required by " +
                                     std::string(to_string(e.category)));
    }
  }
  for (const auto& [key, value] : e.forms) {
    if (key == "phrase") continue;
    if (std::any_of(value.begin(), value.end(), [](unsigned char c) { return std::isupper(c); })) {
      throw LexiconError(lineno, "form '" + key + "' of '" + e.entity.name + "' must be lowercase");
    }
  }
}

}  // namespace

Lexicon merge_overrides(const Lexicon& lex, std::string_view overrides) {
  Lexicon out = lex;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= overrides.size()) {
    std::size_t end = overrides.find('\n', start);
    if (end == std::string_view::npos) end = overrides.size();
    std::string_view line = overrides.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // Keep '#' inside quoted values.
      bool quoted = false;
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '"') quoted = !quoted;
        if (line[k] == '#' && !quoted) {
          line = line.substr(0, k);
          break;
        }
      }
    }
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      if (end == overrides.size()) break;
      continue;
    }
    OverrideLine parsed = parse_override_line(line, lineno);
    std::vector<LexiconEntry> targets;
    for (const auto& [entity, entry] : out.entries()) {
      if (entity.name == parsed.name) targets.push_back(entry);
    }
    if (targets.empty()) throw LexiconError(lineno, "unknown entity '" + parsed.name + "'");
    for (auto& entry : targets) {
      for (const auto& [key, value] : parsed.pairs) {
        if (key == "category") {
          auto c = category_from_string(value);
          if (!c) throw LexiconError(lineno, "unknown category '" + value + "'");
          entry.category = *c;
        } else if (std::find(std::begin(kFormKeys), std::end(kFormKeys), key) != std::end(kFormKeys)) {
          entry.forms[key] = value;
        } else {
          throw LexiconError(lineno, "unknown key '" + key + "'");
        }
      }
      check_entry(entry, lineno);
      out.insert(std::move(entry));
    }
    if (end == overrides.size()) break;
  }
  return out;
}

}  // namespace owlverb
