// Reader for the ACE sentences the verbalizer emits. It accepts exactly that
// companion grammar (plus Manchester fallback lines), not general ACE.
#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owlverb/lexicon.hpp"
#include "owlverb/owl.hpp"

namespace owlverb {

enum class Confidence { Exact, Ambiguous };

struct ReaderResult {
  Axiom axiom;
  Confidence confidence = Confidence::Exact;
  /// One line per ambiguous surface form, listing the candidates.
  std::vector<std::string> diagnostics;
};

class ReadError : public std::runtime_error {
 public:
  ReadError(std::string token, const std::string& message)
      : std::runtime_error(message), token_(std::move(token)) {}
  /// First token that could not be matched (empty at end of input).
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class AceReader {
 public:
  explicit AceReader(const Lexicon& lex);
  ~AceReader();

  /// One sentence. A line that is not ACE but parses as a Manchester axiom is
  /// accepted and returned in paraphrase-normalized form. Throws ReadError.
  ReaderResult read_sentence(std::string_view text) const;
  /// The sentences produced for a single axiom, merged back into it: mutual
  /// subclass sentences become an equivalence, pairwise disjointness becomes
  /// one n-ary axiom, and both directions of an inverse pair collapse.
  ReaderResult read_sentences(std::span<const std::string> sentences) const;

  struct Impl;

 private:
  std::unique_ptr<const Impl> impl_;
};

ReaderResult read_sentence(std::string_view text, const Lexicon& lex);

/// Merges the axioms read from one axiom's sentences. Throws ReadError when
/// they do not describe a single axiom.
AxiomBody assemble(const std::vector<AxiomBody>& parts);

}  // namespace owlverb
