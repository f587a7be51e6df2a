#pragma once

// The Vagner-Preston representation phi and the Munn representation delta of
// a finite block-group, both into the symmetric inverse semigroup.
//
// For s in S:
//   R(s) = { e in E(S) : e <=_R s }        L(s) = { e in E(S) : e <=_L s }
//   D(s) = union of Se over e in R(s)      I(s) = union of Se over e in L(s)
//
//   phi_s   : D(s) -> I(s),  x -> xs
//   delta_s : R(s) -> L(s),  e -> (es)^-1 (es)
//
// I(s) is built from the left ideals Se (not eS) for e in L(s). Maps act on
// the right, see partial_injection.hpp.

#include <cstddef>
#include <string>
#include <vector>

#include "bglab/congruence.hpp"
#include "bglab/partial_injection.hpp"
#include "bglab/semigroup.hpp"

namespace bglab {

  // Sorted sets of element indices.
  std::vector<element_type> r_set(FiniteSemigroup const& s, element_type x);
  std::vector<element_type> l_set(FiniteSemigroup const& s, element_type x);
  std::vector<element_type> d_set(FiniteSemigroup const& s, element_type x);
  std::vector<element_type> i_set(FiniteSemigroup const& s, element_type x);

  enum class RepresentationKind { munn, vagner_preston };

  // Which pair of sets a map runs between: D(s) -> I(s) for phi, R(s) -> L(s)
  // for delta.
  enum class DomainKind { d_to_i, r_to_l };

  struct RepElement {
    element_type     source;
    PartialInjection map;
    DomainKind       domain_kind;
  };

  struct Representation {
    RepresentationKind      kind = RepresentationKind::vagner_preston;
    std::vector<RepElement> elements;
    Congruence              kernel;

    PartialInjection const& operator[](element_type s) const {
      return elements[s].map;
    }
  };

  // phi_s. Throws not_block_group, or bijection_failure if x -> xs fails to
  // be a bijection D(s) -> I(s).
  PartialInjection vp_map(FiniteSemigroup const& s, element_type x);

  // All phi_s, with every defining property re-checked:
  //   * phi_s phi_t = phi_st              (multiplicativity_failure {s, t})
  //   * regular s != t => phi_s != phi_t  (regular_collision {s, t})
  //   * regular s => D(s) = S s s^-1 and I(s) = S s^-1 s
  //                                       (internal_inconsistency {s})
  //   * the kernel is a congruence        (internal_inconsistency)
  Representation vp_representation(FiniteSemigroup const& s);

  // delta_s, a partial injection on element indices supported on idempotents.
  PartialInjection munn_map(FiniteSemigroup const& s, element_type x);

  // All delta_s; checks multiplicativity and that distinct idempotents have
  // distinct images.
  Representation munn_representation(FiniteSemigroup const& s);

  // The partition of S into fibres of s -> map(s).
  Congruence kernel(Representation const& rep);

  // x -> xs on S s s^-1, built directly from the unique inverses of an
  // inverse semigroup. Throws malformed_input if s is not inverse.
  PartialInjection classical_vp_map(FiniteSemigroup const& s, element_type x);

  // e -> s^-1 e s on E s s^-1, the classical Munn map of an inverse semigroup.
  PartialInjection classical_munn_map(FiniteSemigroup const& s, element_type x);

  using LemmaReport = PropertyReport;

  // Exhaustively checks, for every element (and pair, where relevant):
  //   regular-es    e in R(s) => es regular; e in L(s) => se regular
  //   identity-chain
  //                 e in R(s) => e = (es)(es)^-1 = s(es)^-1 = s(es)^-1 e,
  //                 (es)^-1(es) in L(s) and D-related to e; and the dual
  //   d-sets        D(s) = D(t) <=> R(s) = R(t); I(s) = I(t) <=> L(s) = L(t)
  //   bijection     x -> xs is a bijection D(s) -> I(s) with x R xs
  // Throws not_block_group.
  LemmaReport verify_lemmas(FiniteSemigroup const& s);

}  // namespace bglab
