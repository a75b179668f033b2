#include "owlverb/fixtures.hpp"

#include <sstream>

#include "embedded.hpp"
#include "owlverb/owl.hpp"

namespace owlverb {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Reconstructed: return "reconstructed";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

namespace {

Provenance tag_from(const std::string& s) {
  if (s == "paper") return Provenance::Paper;
  if (s == "reconstructed") return Provenance::Reconstructed;
  if (s == "derived") return Provenance::Derived;
  throw std::runtime_error("bad provenance tag '" + s + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<GoldenBlock> parse_golden(std::string_view text) {
  std::vector<GoldenBlock> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::istringstream header(line.substr(1, line.size() - 2));
      GoldenBlock block;
      std::string flag;
      header >> block.element;
      if (header >> block.scope && header >> flag) block.direct_reading = flag == "direct-reading";
      if (block.scope.empty()) block.scope = "direct";
      out.push_back(std::move(block));
      continue;
    }
    const auto bar = line.find(" | ");
    if (out.empty() || bar == std::string::npos) throw std::runtime_error("bad golden line: " + line);
    out.back().sentences.push_back({tag_from(line.substr(0, bar)), line.substr(bar + 3)});
  }
  return out;
}

std::vector<ProvenanceEntry> parse_provenance(std::string_view text) {
  std::vector<ProvenanceEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad provenance line: " + line);
    out.push_back({tag_from(line.substr(0, tab)), trim(line.substr(tab + 1))});
  }
  return out;
}

}  // namespace

const GoldenBlock& Fixture::block(std::string_view element) const {
  for (const auto& b : golden) {
    if (b.element == element) return b;
  }
  throw NotFoundError("fixture " + name + " has no golden block for '" + std::string(element) + "'");
}

std::vector<std::string> fixture_names() { return {"simple-fragment", "mini-university"}; }

Fixture fixture(std::string_view name) {
  namespace e = embedded;
  if (name == "simple-fragment") {
    return {std::string(name), std::string(e::kSimpleFragmentOmn), std::string(e::kSimpleFragmentLex),
            parse_golden(e::kSimpleFragmentGolden), parse_provenance(e::kSimpleFragmentProvenance)};
  }
  if (name == "mini-university") {
    return {std::string(name), std::string(e::kMiniUniversityOmn), std::string(e::kMiniUniversityLex),
            parse_golden(e::kMiniUniversityGolden), parse_provenance(e::kMiniUniversityProvenance)};
  }
  throw NotFoundError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace owlverb
