// Structural inference (four closure rules) and a brute-force small-model
// checker for equivalence and entailment at toy scale.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "owlverb/owl.hpp"

namespace owlverb {

struct InferredAxiom {
  /// Ids are "i1", "i2", ... in derivation order.
  Axiom axiom;
  /// subclass-transitivity, equivalence-intersection, assertion-propagation
  /// or domain-range-typing.
  std::string rule;
  std::vector<std::string> premises;
};

/// Fixed point of:
///   A < B, B < C                          => A < C
///   A = (... and C and ...)               => A < C     (also A = C)
///   i : A, A < B                          => i : B
///   P(s, o), P Domain C  /  P Range C     => s : C  /  o : C
/// for named classes. Results never duplicate an asserted axiom; conclusions
/// about Thing are omitted.
std::vector<InferredAxiom> infer(const Ontology& o);

/// Premise ids of `id`, expanded through inferred premises down to asserted
/// axioms.
std::vector<std::string> asserted_premises(const std::vector<InferredAxiom>& inferred, const std::string& id);

/// Raised when a check would exceed the signature or enumeration bounds, or
/// mentions data properties.
class ModelBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelBounds {
  int max_classes = 4;
  int max_properties = 3;
  int max_individuals = 3;
  /// Upper bound on the number of interpretations visited.
  std::uint64_t max_interpretations = std::uint64_t{1} << 27;
};

/// True iff `a` and `b` hold in exactly the same interpretations over every
/// domain of size 1..max_domain (max_domain <= 4).
bool small_model_equivalent(const AxiomBody& a, const AxiomBody& b, int max_domain, const ModelBounds& bounds = {});
inline bool small_model_equivalent(const Axiom& a, const Axiom& b, int max_domain, const ModelBounds& bounds = {}) {
  return small_model_equivalent(a.body, b.body, max_domain, bounds);
}

/// True iff every interpretation over domains 1..max_domain satisfying all
/// premises also satisfies the conclusion.
bool small_model_entails(std::span<const AxiomBody> premises, const AxiomBody& conclusion, int max_domain,
                         const ModelBounds& bounds = {});

}  // namespace owlverb
