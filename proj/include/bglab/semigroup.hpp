#pragma once

// Finite semigroups given by their Cayley table, together with the derived
// data every other module relies on: idempotents, regular elements and their
// inverses, omega-powers, and Green's relations.
//
// Elements are the indices 0, ..., n - 1. Labels are only used for display.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bglab {

  using element_type = std::uint32_t;

  // Square boolean matrix stored as packed 64-bit rows.
  class BoolMatrix {
   public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n) : _n(n), _words((n + 63) / 64), _bits(n * _words, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _words + j / 64] >> (j % 64)) & 1U;
    }

    void set(std::size_t i, std::size_t j) noexcept {
      _bits[i * _words + j / 64] |= std::uint64_t(1) << (j % 64);
    }

    std::span<std::uint64_t const> row(std::size_t i) const noexcept {
      return {_bits.data() + i * _words, _words};
    }

    // row(i) |= row(j)
    void merge_row(std::size_t i, std::size_t j) noexcept {
      for (std::size_t w = 0; w < _words; ++w) {
        _bits[i * _words + w] |= _bits[j * _words + w];
      }
    }

    bool operator==(BoolMatrix const&) const = default;

   private:
    std::size_t                _n     = 0;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _bits;
  };

  struct RegularityData {
    std::vector<bool>                        is_idempotent;
    std::vector<bool>                        is_regular;
    std::vector<std::vector<element_type>>   inverses;
    std::vector<std::optional<element_type>> unique_inverse;
    // E(S) in increasing order.
    std::vector<element_type> idempotents;
  };

  // Green's quasi-orders and the class identifiers of R, L, H and D. Class
  // identifiers are numbered by first occurrence in element order.
  struct GreenSummary {
    std::vector<std::size_t> r_class_id;
    std::vector<std::size_t> l_class_id;
    std::vector<std::size_t> h_class_id;
    std::vector<std::size_t> d_class_id;
    // leq_r(s, t) iff sS^1 is contained in tS^1, i.e. s is in tS^1.
    BoolMatrix leq_r;
    // leq_l(s, t) iff S^1 s is contained in S^1 t, i.e. s is in S^1 t.
    BoolMatrix leq_l;
  };

  class FiniteSemigroup {
    struct Cache;

   public:
    std::size_t order() const noexcept {
      return _order;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _table[std::size_t(a) * _order + b];
    }

    // Row a of the Cayley table: the products a * b for b = 0, ..., n - 1.
    std::span<element_type const> row(element_type a) const noexcept {
      return {_table.data() + std::size_t(a) * _order, _order};
    }

    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    bool has_adjoined_identity() const noexcept {
      return _has_adjoined_identity;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // The label of x if labels are present, otherwise its index.
    std::string label(element_type x) const;

    std::optional<element_type> identity() const;
    std::optional<element_type> zero() const;

    // Derived data, computed on first use and shared between copies.
    RegularityData const& regularity() const;
    GreenSummary const&   green() const;

    bool is_idempotent(element_type x) const noexcept {
      return product(x, x) == x;
    }

    bool operator==(FiniteSemigroup const& that) const noexcept {
      return _order == that._order && _table == that._table;
    }

   private:
    friend FiniteSemigroup load_table(std::size_t,
                                      std::vector<std::vector<element_type>> const&,
                                      std::vector<std::string>);
    friend FiniteSemigroup adjoin_identity(FiniteSemigroup const&);
    friend FiniteSemigroup subsemigroup(FiniteSemigroup const&, std::vector<element_type>);

    FiniteSemigroup(std::size_t               order,
                    std::vector<element_type> table,
                    std::vector<std::string>  labels,
                    bool                      has_adjoined_identity);

    std::size_t               _order;
    std::vector<element_type> _table;
    std::vector<std::string>  _labels;
    bool                      _has_adjoined_identity;
    std::shared_ptr<Cache>    _cache;
  };

  // Validates and builds a semigroup from an n x n table where entries[i][j]
  // is the product i * j. Throws Error with code malformed_input (bad shape),
  // index_out_of_range (witness {i, j}) or not_associative (witness {i, j, k}).
  FiniteSemigroup load_table(std::size_t                                   order,
                             std::vector<std::vector<element_type>> const& entries,
                             std::vector<std::string>                      labels = {});

  // S^1: returns s itself if it already has a two-sided identity, otherwise a
  // copy with a new identity at index n.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  // The unique idempotent power of x.
  element_type omega(FiniteSemigroup const& s, element_type x);

  // Index m and period r of x: x^m = x^(m + r) with m, r minimal.
  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
  };
  IndexPeriod index_and_period(FiniteSemigroup const& s, element_type x);

  // Exhaustive computation, without caching.
  RegularityData compute_regularity(FiniteSemigroup const& s);
  GreenSummary   compute_green(FiniteSemigroup const& s);

  inline RegularityData const& regularity(FiniteSemigroup const& s) {
    return s.regularity();
  }

  inline GreenSummary const& green(FiniteSemigroup const& s) {
    return s.green();
  }

  // The cached data lives inside the semigroup, so a temporary would leave the
  // reference dangling.
  RegularityData const& regularity(FiniteSemigroup&&) = delete;
  GreenSummary const&   green(FiniteSemigroup&&)      = delete;

  // J-class identifiers from two-sided ideals S^1 s S^1, independent of the
  // R/L-based D-class computation.
  std::vector<std::size_t> j_class_ids(FiniteSemigroup const& s);

  enum class GreenKind { R, L };

  struct BlockGroupWitness {
    element_type e;
    element_type f;
    GreenKind    kind;
  };

  struct BlockGroupVerdict {
    bool                             is_block_group;
    std::optional<BlockGroupWitness> witness;

    explicit operator bool() const noexcept {
      return is_block_group;
    }
  };

  // True iff no R-class and no L-class holds two idempotents. The verdict is
  // cross-checked against the unique-inverse criterion and an Error with code
  // internal_inconsistency is thrown if the two disagree.
  BlockGroupVerdict is_block_group(FiniteSemigroup const& s);

  // Every element has exactly one inverse.
  bool is_inverse_semigroup(FiniteSemigroup const& s);

  // The infimum (ef)^omega of two idempotents of a block-group.
  element_type idempotent_meet(FiniteSemigroup const& s, element_type e, element_type f);

  // e <= f in the natural partial order: e = ef = fe.
  bool natural_leq(FiniteSemigroup const& s, element_type e, element_type f);

  struct PropertyViolation {
    std::string               property;
    std::vector<element_type> witness;
  };

  // Outcome of an exhaustive property sweep.
  struct PropertyReport {
    std::size_t                    checks = 0;
    std::vector<PropertyViolation> violations;

    void record(bool ok, std::string property, std::vector<element_type> witness) {
      ++checks;
      if (!ok) {
        violations.push_back({std::move(property), std::move(witness)});
      }
    }

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // On a block-group: e <= f iff e = ef iff e = fe for all idempotents, and
  // (ef)^omega is a commutative, associative, idempotent meet that is the
  // greatest lower bound of e and f. Throws not_block_group.
  PropertyReport verify_idempotent_semilattice(FiniteSemigroup const& s);

  // H refines R and L, R and L refine D, and D coincides with J.
  PropertyReport verify_green(FiniteSemigroup const& s);

  // The subsemigroup on `members` (any order, no duplicates), reindexed in
  // increasing order of the original indices. Throws not_closed.
  FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<element_type> members);

}  // namespace bglab
