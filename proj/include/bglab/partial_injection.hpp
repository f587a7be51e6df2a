#pragma once

// Elements of the symmetric inverse semigroup I(X) on X = {0, ..., n - 1}.
//
// Maps act on the RIGHT: we write x f for the image of x under f, and the
// product f g means "first f, then g", so that x (f g) = (x f) g. This is the
// convention under which s -> phi_s (x -> xs) is a homomorphism rather than
// an anti-homomorphism. Every composition in this library follows it.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bglab/semigroup.hpp"

namespace bglab {

  class PartialInjection {
   public:
    using pair_type = std::pair<element_type, element_type>;

    explicit PartialInjection(std::size_t universe_size = 0) : _universe(universe_size) {}

    // Throws index_out_of_range, malformed_input (a point mapped twice) or
    // not_injective (two points with the same image).
    static PartialInjection from_pairs(std::size_t universe_size, std::vector<pair_type> pairs);

    // The partial identity on `points`.
    static PartialInjection identity_on(std::size_t universe_size, std::span<element_type const> points);

    std::size_t universe_size() const noexcept {
      return _universe;
    }

    // (x, xf) sorted by x.
    std::vector<pair_type> const& pairs() const noexcept {
      return _pairs;
    }

    std::size_t size() const noexcept {
      return _pairs.size();
    }

    bool empty() const noexcept {
      return _pairs.empty();
    }

    std::optional<element_type> operator()(element_type x) const;

    std::vector<element_type> domain() const;
    // Sorted.
    std::vector<element_type> image() const;

    bool is_idempotent() const;

    bool operator==(PartialInjection const&) const = default;
    auto operator<=>(PartialInjection const&) const = default;

   private:
    std::size_t            _universe;
    std::vector<pair_type> _pairs;
  };

  // x (f g) = (x f) g. Throws universe_mismatch.
  PartialInjection compose(PartialInjection const& f, PartialInjection const& g);

  PartialInjection invert(PartialInjection const& f);

  inline bool equals(PartialInjection const& f, PartialInjection const& g) {
    return f == g;
  }

  // True iff all idempotent members commute pairwise. Throws not_closed
  // (witness: positions of the two members) when the set is not closed under
  // composition.
  bool idempotents_commute_in_image(std::span<PartialInjection const> maps);

  // "{0↦1, 2↦2}"; the second form prints element labels.
  std::string to_string(PartialInjection const& f);
  std::string to_string(PartialInjection const& f, FiniteSemigroup const& s);

}  // namespace bglab
