#pragma once

// Test-input generators: semigroups of transformations given by generators,
// and transition / syntactic monoids of deterministic finite automata.
//
// Transformations act on the right, like partial injections: in the product
// f g the map f is applied first.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bglab/semigroup.hpp"

namespace bglab {

  // images[q] is the image of point q.
  using Transformation = std::vector<element_type>;

  inline constexpr std::size_t default_closure_cap = 5000;

  // The semigroup generated by total maps on n_points points. Elements are
  // numbered in breadth-first discovery order, starting with the distinct
  // generators; labels are the image lists, e.g. "[1,0]". Throws
  // malformed_input for bad generators and closure_too_large past `cap`.
  FiniteSemigroup generate_from_transformations(std::size_t                        n_points,
                                                std::vector<Transformation> const& generators,
                                                std::size_t cap = default_closure_cap);

  // Generator file for generate_from_transformations:
  //   points 2
  //   map 1 0
  //   map 0 0
  struct TransformationSpec {
    std::size_t                 points;
    std::vector<Transformation> generators;
  };

  TransformationSpec parse_maps_file(std::string_view text);

  struct Dfa {
    std::size_t              state_count = 0;
    std::vector<std::string> alphabet;
    // transition[q][a]
    std::vector<std::vector<std::size_t>> transition;
    std::size_t                           initial = 0;
    std::vector<bool>                     accepting;
  };

  // Throws malformed_input unless the transition function is total and all
  // states are in range.
  void validate(Dfa const& dfa);

  // DFA file:
  //   states 2
  //   alphabet a b
  //   initial 0
  //   accepting 1
  //   trans 0 a 0
  //   ...
  Dfa parse_dfa_file(std::string_view text);

  bool accepts(Dfa const& dfa, std::vector<std::string> const& word);

  // The minimal DFA: unreachable states dropped, Moore partition refinement,
  // states renumbered breadth-first from the initial state in alphabet order.
  Dfa minimize(Dfa const& dfa);

  // The monoid of state transformations induced by words, with the empty word
  // (the identity) at index 0 labelled "1" and every other element labelled by
  // its shortlex-least word. Throws empty_alphabet.
  FiniteSemigroup transition_monoid(Dfa const& dfa);

  // transition_monoid(minimize(dfa)).
  FiniteSemigroup syntactic_monoid(Dfa const& dfa);

}  // namespace bglab
