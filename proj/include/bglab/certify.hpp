#pragma once

// End-to-end verification of one semigroup: every structural property the
// library relies on is re-checked, and the representation kernels are compared
// with the brute-force congruence oracles.

#include <cstddef>
#include <string>
#include <vector>

#include "bglab/congruence.hpp"
#include "bglab/semigroup.hpp"

namespace bglab {

  struct CheckResult {
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct CertificationReport {
    std::string              target;
    std::size_t              order = 0;
    bool                     block_group = false;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    CheckResult const* find(std::string_view name) const noexcept;
  };

  struct CertifyOptions {
    // Oracle comparisons are skipped (and reported as such) above this order.
    std::size_t max_order = default_congruence_order_cap;
  };

  // Never throws for a valid semigroup: failures, including exceptions raised
  // by the checks themselves, become failed CheckResults.
  CertificationReport certify(FiniteSemigroup const& s,
                              std::string            target,
                              CertifyOptions const&  options = {});

  // The witness really consists of two distinct idempotents with equal right
  // (resp. left) ideals, recomputed without the cached Green data.
  bool witness_is_valid(FiniteSemigroup const& s, BlockGroupWitness const& w);

}  // namespace bglab
