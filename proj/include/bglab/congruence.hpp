#pragma once

// Congruences of small finite semigroups, and the brute-force oracles for the
// largest congruence separating regular elements and the largest
// idempotent-separating congruence.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bglab/semigroup.hpp"

namespace bglab {

  // A partition of {0, ..., n - 1} in canonical form: the class of element 0
  // has id 0, the next element in a new class gets id 1, and so on. Equal
  // partitions have equal class_id vectors.
  class Congruence {
   public:
    Congruence() = default;

    // Canonicalises arbitrary class labels.
    static Congruence from_class_ids(std::vector<std::size_t> const& ids);
    static Congruence identity(std::size_t n);
    static Congruence universal(std::size_t n);

    std::vector<std::size_t> const& class_id() const noexcept {
      return _class_id;
    }

    std::size_t size() const noexcept {
      return _class_id.size();
    }

    std::size_t class_count() const noexcept {
      return _class_count;
    }

    bool related(element_type a, element_type b) const noexcept {
      return _class_id[a] == _class_id[b];
    }

    // Blocks in order of their canonical id, each sorted.
    std::vector<std::vector<element_type>> blocks() const;

    // Every class of *this lies inside a class of that.
    bool refines(Congruence const& that) const;

    bool operator==(Congruence const&) const = default;
    auto operator<=>(Congruence const&) const = default;

   private:
    std::vector<std::size_t> _class_id;
    std::size_t              _class_count = 0;
  };

  // "{{0,2},{1}}"
  std::string to_string(Congruence const& c);

  // Two-sided compatibility of the partition given by arbitrary class ids.
  // Throws malformed_input if the partition does not have one entry per element.
  bool is_congruence(FiniteSemigroup const& s, std::vector<std::size_t> const& partition);
  bool is_congruence(FiniteSemigroup const& s, Congruence const& c);

  // The smallest congruence containing every pair already related by `seed`
  // (an equivalence given as class ids) and the extra pairs.
  Congruence congruence_closure(FiniteSemigroup const&                                   s,
                                std::vector<std::size_t> const&                          seed,
                                std::vector<std::pair<element_type, element_type>> const& pairs = {});

  Congruence principal_congruence(FiniteSemigroup const& s, element_type a, element_type b);

  // Smallest congruence containing both.
  Congruence join(FiniteSemigroup const& s, Congruence const& a, Congruence const& b);

  // Common refinement.
  Congruence meet(Congruence const& a, Congruence const& b);

  inline constexpr std::size_t default_congruence_order_cap = 8;

  // The full congruence lattice, sorted. Throws order_too_large when the order
  // exceeds `max_order`.
  std::vector<Congruence> all_congruences(FiniteSemigroup const& s,
                                          std::size_t max_order = default_congruence_order_cap);

  // Every class holds at most one regular element.
  bool separates_regular(FiniteSemigroup const& s, Congruence const& c);

  // Every class holds at most one idempotent.
  bool separates_idempotents(FiniteSemigroup const& s, Congruence const& c);

  // Returned when the admissible congruences have several maximal members.
  struct AmbiguityReport {
    std::vector<Congruence> maximal;
  };

  using OracleResult = std::variant<Congruence, AmbiguityReport>;

  OracleResult largest_separating_oracle(FiniteSemigroup const& s,
                                         std::size_t max_order = default_congruence_order_cap);

  OracleResult largest_idempotent_separating_oracle(
      FiniteSemigroup const& s,
      std::size_t            max_order = default_congruence_order_cap);

}  // namespace bglab
