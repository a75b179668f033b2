// OWL-to-ACE verbalization: paraphrase normalization, the sentence pattern
// table and the axiom-type ordering of sentence lists.
#pragma once

#include <string>
#include <vector>

#include "owlverb/lexicon.hpp"
#include "owlverb/owl.hpp"

namespace owlverb {

struct Sentence {
  std::string text;
  std::vector<std::string> axiom_ids;
  bool inferred = false;
  std::string rule;
  /// Manchester rendering used because no ACE pattern applies.
  bool fallback = false;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// An axiom together with whether it was derived rather than asserted.
struct TaggedAxiom {
  Axiom axiom;
  bool inferred = false;
};

/// Rewrites applied once, at the top level, before verbalization:
///   SubClassOf(A, only(inverse P, B))  ->  SubClassOf(P some A, B)
///   ObjectPropertyDomain(P, C)         ->  SubClassOf(P some Thing, C)
///   ObjectPropertyRange(P, C)          ->  SubClassOf(inverse P some Thing, C)
/// Anything else is returned unchanged. The id is kept.
AxiomBody paraphrase_normalize(const AxiomBody& body);
Axiom paraphrase_normalize(const Axiom& a);

/// One sentence for most axioms. Equivalences yield one sentence per
/// direction, n-ary disjointness one per pair, inverse properties two. Axioms
/// outside the pattern table yield a single fallback sentence. Throws
/// NotFoundError if an entity has no lexicon entry.
std::vector<Sentence> verbalize_axiom(const Axiom& a, const Lexicon& lex);

/// The reading of `a` without paraphrase normalization ("Every mandatory
/// course is taught by nothing but professors."). Empty when `a` would not be
/// paraphrased or the direct reading has no ACE pattern.
std::vector<Sentence> direct_reading(const Axiom& a, const Lexicon& lex);

struct VerbalizeOptions {
  /// Follow each `only` paraphrase with its direct reading.
  bool direct_reading = false;
};

/// Position of an axiom kind in the sentence order.
int axiom_type_rank(AxiomKind kind);
/// Asserted ids ("1", "2", ...) numerically, then inferred ids ("i1", ...).
bool axiom_id_less(const std::string& a, const std::string& b);
void sort_by_axiom_type(std::vector<TaggedAxiom>& axioms);

std::vector<Sentence> verbalize_axioms(std::vector<TaggedAxiom> axioms, const Lexicon& lex,
                                       const VerbalizeOptions& options = {});
std::vector<Sentence> verbalize_axioms(const std::vector<Axiom>& axioms, const Lexicon& lex,
                                       const VerbalizeOptions& options = {});

}  // namespace owlverb
