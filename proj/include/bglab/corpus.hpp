#pragma once

// Named example semigroups and exhaustive enumeration of small tables.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bglab/automata.hpp"
#include "bglab/semigroup.hpp"

namespace bglab {

  FiniteSemigroup cyclic_group(std::size_t n);
  // {0 < 1 < ... < n-1} under min.
  FiniteSemigroup chain_semilattice(std::size_t n);
  FiniteSemigroup left_zero_semigroup(std::size_t n);
  FiniteSemigroup right_zero_semigroup(std::size_t n);
  // n - 1 nonzero elements whose products are all 0; the zero is the last index.
  FiniteSemigroup null_semigroup(std::size_t n);
  // <a | a^(index + period) = a^index>, elements a, a^2, ..., a^(index + period - 1).
  FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period);
  // The Brandt semigroup B_n: matrix units e_ij (at index i * n + j) and zero.
  FiniteSemigroup brandt_semigroup(std::size_t n);
  // All total maps on n points.
  FiniteSemigroup full_transformation_monoid(std::size_t n);
  // All partial injections on n points.
  FiniteSemigroup symmetric_inverse_monoid(std::size_t n);

  // The minimal DFAs behind the syntactic monoids in the corpus.
  Dfa dfa_all_words();       // a*         over {a}
  Dfa dfa_even_length();     // (aa)*      over {a}
  Dfa dfa_ends_in_b();       // (a|b)*b    over {a, b}

  struct NamedSemigroup {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  std::vector<NamedSemigroup> const& corpus();

  std::optional<FiniteSemigroup> find_in_corpus(std::string_view name);

  // Every associative n x n table, in lexicographic order of the row-major
  // table; isomorphic copies are all included.
  std::vector<FiniteSemigroup> all_associative_tables(std::size_t n);

}  // namespace bglab
