#pragma once

// Omega-terms, pseudoidentities evaluated by brute force over a finite
// semigroup, and membership tests for BG, Ecom, EI and N.
//
// Term syntax: variables are a letter optionally followed by digits (x, y2);
// juxtaposition is the product; a "^w" suffix is the omega-power; parentheses
// group; whitespace is ignored. "w" is a variable unless it follows "^".
// An identity is two or more terms separated by "=".

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bglab/partial_injection.hpp"
#include "bglab/semigroup.hpp"

namespace bglab {

  class PseudoTerm {
    struct Node;

   public:
    enum class Kind { variable, product, omega_power };

    static PseudoTerm variable(std::string name);
    static PseudoTerm product(PseudoTerm left, PseudoTerm right);
    static PseudoTerm omega_power(PseudoTerm child);

    Kind               kind() const noexcept;
    std::string const& name() const;   // variable
    PseudoTerm         left() const;   // product
    PseudoTerm         right() const;  // product
    PseudoTerm         child() const;  // omega_power

    // Distinct variable names in order of first occurrence.
    std::vector<std::string> variables() const;

   private:
    explicit PseudoTerm(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  std::string to_string(PseudoTerm const& t);

  // Throws ParseError.
  PseudoTerm parse_term(std::string_view text);

  struct Pseudoidentity {
    PseudoTerm               lhs;
    PseudoTerm               rhs;
    std::vector<std::string> variables;
  };

  Pseudoidentity make_pseudoidentity(PseudoTerm lhs, PseudoTerm rhs);

  // "t1 = t2 = ... = tk" becomes the identities t1 = t2, t2 = t3, ...
  std::vector<Pseudoidentity> parse_pseudoidentities(std::string_view text);

  std::string to_string(Pseudoidentity const& id);

  using Assignment = std::map<std::string, element_type>;

  // Throws unbound_variable.
  element_type eval_term(FiniteSemigroup const& s, PseudoTerm const& t, Assignment const& assignment);

  struct Satisfaction {
    bool                      holds;
    std::optional<Assignment> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  inline constexpr std::size_t default_variable_cap = 3;

  // Tries all |S|^k assignments. Throws too_many_variables when k exceeds
  // `max_variables`.
  Satisfaction satisfies(FiniteSemigroup const& s,
                         Pseudoidentity const&  id,
                         std::size_t            max_variables = default_variable_cap);

  // All identities at once; the counterexample comes from the first failure.
  Satisfaction satisfies(FiniteSemigroup const&           s,
                         std::span<Pseudoidentity const> ids,
                         std::size_t                      max_variables = default_variable_cap);

  inline constexpr std::string_view bg_identity = "(x^w y^w)^w = (y^w x^w)^w";
  inline constexpr std::string_view bg_two_sided_identity
      = "(x^w y^w)^w x^w = (x^w y^w)^w = y^w (x^w y^w)^w";
  inline constexpr std::string_view ecom_identity = "x^w y^w = y^w x^w";
  inline constexpr std::string_view ei_identity   = "x^w = y^w";

  // The three block-group criteria side by side.
  struct BlockGroupCriteria {
    bool green_classes;
    bool identity;
    bool two_sided_identity;

    bool agree() const noexcept {
      return green_classes == identity && identity == two_sided_identity;
    }
  };

  BlockGroupCriteria block_group_criteria(FiniteSemigroup const& s);

  // Idempotents commute. Cross-checked against ecom_identity.
  bool is_ecom(FiniteSemigroup const& s);

  // Exactly one idempotent. Cross-checked against ei_identity.
  bool is_ei(FiniteSemigroup const& s);

  // S^k = {z} for a zero z and some k <= |S|. Cross-checked against "exactly
  // one regular element" and against every x^w being a zero; throws
  // internal_inconsistency if these disagree.
  bool is_nilpotent(FiniteSemigroup const& s);

  struct Fiber {
    PartialInjection          idempotent;
    std::vector<element_type> members;
    bool                      is_subsemigroup;
    bool                      is_nilpotent;
  };

  struct FiberReport {
    std::size_t        image_size = 0;
    std::vector<Fiber> fibers;
    bool               image_ecom = false;

    bool ok() const noexcept;
  };

  // For each idempotent epsilon of Im(phi), checks that the preimage of
  // epsilon is a nilpotent subsemigroup; also checks that the idempotents of
  // Im(phi) commute. Throws not_block_group, or fiber_not_nilpotent with the
  // fibre's members as witness.
  FiberReport malcev_fiber_check(FiniteSemigroup const& s);

}  // namespace bglab
