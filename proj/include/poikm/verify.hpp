#ifndef POIKM_VERIFY_HPP_
#define POIKM_VERIFY_HPP_

#include <sstream>
#include <string>

#include "block_monoid.hpp"
#include "congruence.hpp"
#include "enumeration.hpp"
#include "presentations.hpp"

namespace poikm {

//! Outcome of checking that a preset presentation defines the block
//! monoid: (1) the generator images satisfy every relation, so the
//! induced map from the quotient onto the monoid is a well-defined
//! surjection (each generator is a letter image), and (2) the quotient
//! has exactly as many classes as the monoid has elements, so that
//! surjection is a bijection.
struct PresentationVerdict {
  Preset preset;
  unsigned k = 0;
  unsigned m = 0;
  std::size_t relation_count = 0;
  bool relations_pass = false;
  std::vector<RelationCheckFailure> failures;
  std::size_t quotient_classes = 0;
  BigCount target = 0;
  bool size_match = false;

  bool pass() const { return relations_pass && size_match; }

  std::string summary_line() const {
    std::ostringstream os;
    os << (pass() ? "PASS" : "FAIL") << " preset=" << preset_name(preset)
       << " k=" << k << " m=" << m << " relations=" << relation_count
       << " quotient=" << quotient_classes << " target=" << target;
    return os.str();
  }
};

inline PresentationVerdict verify_presentation(BlockSpec const& spec,
                                               Preset preset,
                                               std::size_t bound) {
  auto const k = spec.num_blocks;
  auto const m = spec.block_size;
  auto bundle = build_preset(k, m, preset);
  PresentationVerdict verdict;
  verdict.preset = preset;
  verdict.k = k;
  verdict.m = m;
  verdict.relation_count = bundle.presentation.relations.size();
  auto report = check_relations(bundle.presentation, bundle.interpretation);
  verdict.relations_pass = report.pass();
  verdict.failures = std::move(report.failures);
  auto quotient = quotient_enumerate(bundle.presentation, bound);
  verdict.quotient_classes = quotient.size();
  verdict.target = size_formula(k, m);
  verdict.size_match = BigCount(verdict.quotient_classes) == verdict.target;
  return verdict;
}

}  // namespace poikm

#endif  // POIKM_VERIFY_HPP_
