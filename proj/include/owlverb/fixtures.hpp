// The two example ontologies shipped with the library, with their lexicons,
// expected sentences and per-axiom provenance.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace owlverb {

enum class Provenance { Paper, Reconstructed, Derived };

std::string_view to_string(Provenance p);

struct GoldenSentence {
  /// Paper: verbatim quote. Derived: pipeline output, reviewed by hand.
  Provenance tag = Provenance::Derived;
  std::string text;
};

/// Header "[element]", "[element scope]" or "[element scope direct-reading]".
struct GoldenBlock {
  std::string element;
  std::string scope = "direct";
  bool direct_reading = false;
  std::vector<GoldenSentence> sentences;
};

struct ProvenanceEntry {
  Provenance tag = Provenance::Reconstructed;
  /// Normalized functional rendering, as produced by to_functional.
  std::string axiom;
};

struct Fixture {
  std::string name;
  std::string omn_source;
  std::string lexicon_source;
  std::vector<GoldenBlock> golden;
  std::vector<ProvenanceEntry> provenance;

  /// First block for `element`. Throws NotFoundError.
  const GoldenBlock& block(std::string_view element) const;
};

/// "simple-fragment" or "mini-university"; anything else throws NotFoundError.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace owlverb
