#include "bglab/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bglab/error.hpp"

namespace bglab {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // True if a merge happened.
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        _parent[std::max(a, b)] = std::min(a, b);
        return true;
      }

      std::vector<std::size_t> labels() {
        std::vector<std::size_t> out(_parent.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = find(i);
        }
        return out;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    void check_partition_size(FiniteSemigroup const& s, std::size_t size) {
      if (size != s.order()) {
        throw Error(ErrorCode::malformed_input,
                    "partition has " + std::to_string(size) + " entries for a semigroup of order "
                        + std::to_string(s.order()));
      }
    }

    void check_order(FiniteSemigroup const& s, std::size_t max_order) {
      if (s.order() > max_order) {
        throw Error(ErrorCode::order_too_large,
                    "congruence lattice enumeration is capped at order " + std::to_string(max_order)
                        + " but the semigroup has order " + std::to_string(s.order())
                        + "; raise the cap (--max-order) to proceed",
                    {s.order(), max_order});
      }
    }

    template <typename Filter>
    OracleResult largest_with(FiniteSemigroup const& s, std::size_t max_order, Filter&& admissible) {
      check_order(s, max_order);
      std::vector<Congruence> candidates;
      for (auto& c : all_congruences(s, max_order)) {
        if (admissible(c)) {
          candidates.push_back(std::move(c));
        }
      }
      std::vector<Congruence> maximal;
      for (auto const& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](auto const& d) {
          return d != c && c.refines(d);
        });
        if (!dominated) {
          maximal.push_back(c);
        }
      }
      if (maximal.size() == 1) {
        return maximal.front();
      }
      return AmbiguityReport{std::move(maximal)};
    }
  }  // namespace

  Congruence Congruence::from_class_ids(std::vector<std::size_t> const& ids) {
    std::map<std::size_t, std::size_t> seen;
    Congruence                         c;
    c._class_id.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      c._class_id[i] = seen.emplace(ids[i], seen.size()).first->second;
    }
    c._class_count = seen.size();
    return c;
  }

  Congruence Congruence::identity(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_class_ids(ids);
  }

  Congruence Congruence::universal(std::size_t n) {
    return from_class_ids(std::vector<std::size_t>(n, 0));
  }

  std::vector<std::vector<element_type>> Congruence::blocks() const {
    std::vector<std::vector<element_type>> out(_class_count);
    for (std::size_t i = 0; i < _class_id.size(); ++i) {
      out[_class_id[i]].push_back(element_type(i));
    }
    return out;
  }

  bool Congruence::refines(Congruence const& that) const {
    if (size() != that.size()) {
      return false;
    }
    std::vector<std::size_t> image(_class_count, std::size_t(-1));
    for (std::size_t i = 0; i < _class_id.size(); ++i) {
      auto& slot = image[_class_id[i]];
      if (slot == std::size_t(-1)) {
        slot = that._class_id[i];
      } else if (slot != that._class_id[i]) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Congruence const& c) {
    std::string out = "{";
    bool        first_block = true;
    for (auto const& block : c.blocks()) {
      if (!first_block) {
        out += ",";
      }
      first_block = false;
      out += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        out += (i ? "," : "") + std::to_string(block[i]);
      }
      out += "}";
    }
    return out + "}";
  }

  bool is_congruence(FiniteSemigroup const& s, std::vector<std::size_t> const& partition) {
    check_partition_size(s, partition.size());
    std::size_t const n = s.order();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (partition[a] != partition[b]) {
          continue;
        }
        for (element_type c = 0; c < n; ++c) {
          if (partition[s.product(c, a)] != partition[s.product(c, b)]
              || partition[s.product(a, c)] != partition[s.product(b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_congruence(FiniteSemigroup const& s, Congruence const& c) {
    return is_congruence(s, c.class_id());
  }

  Congruence congruence_closure(FiniteSemigroup const&                                    s,
                                std::vector<std::size_t> const&                           seed,
                                std::vector<std::pair<element_type, element_type>> const& pairs) {
    check_partition_size(s, seed.size());
    std::size_t const n = s.order();
    UnionFind         uf(n);
    // Generating pairs whose translates still need to be merged. Translating
    // generating pairs suffices: a translate of a chain is a chain of
    // translates, and union-find supplies transitivity.
    std::vector<std::pair<element_type, element_type>> work;
    auto relate = [&](element_type a, element_type b) {
      if (uf.unite(a, b)) {
        work.emplace_back(a, b);
      }
    };
    std::map<std::size_t, element_type> representative;
    for (element_type x = 0; x < n; ++x) {
      auto [it, inserted] = representative.emplace(seed[x], x);
      if (!inserted) {
        relate(it->second, x);
      }
    }
    for (auto [a, b] : pairs) {
      relate(a, b);
    }
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      for (element_type c = 0; c < n; ++c) {
        relate(s.product(c, a), s.product(c, b));
        relate(s.product(a, c), s.product(b, c));
      }
    }
    return Congruence::from_class_ids(uf.labels());
  }

  Congruence principal_congruence(FiniteSemigroup const& s, element_type a, element_type b) {
    if (a >= s.order() || b >= s.order()) {
      throw Error(ErrorCode::index_out_of_range, "no such element", {a, b});
    }
    return congruence_closure(s, Congruence::identity(s.order()).class_id(), {{a, b}});
  }

  Congruence join(FiniteSemigroup const& s, Congruence const& a, Congruence const& b) {
    std::vector<std::pair<element_type, element_type>> pairs;
    for (auto const& block : b.blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        pairs.emplace_back(block[0], block[i]);
      }
    }
    return congruence_closure(s, a.class_id(), pairs);
  }

  Congruence meet(Congruence const& a, Congruence const& b) {
    std::vector<std::size_t> ids(a.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ids[i] = a.class_id()[i] * a.size() + b.class_id()[i];
    }
    return Congruence::from_class_ids(ids);
  }

  std::vector<Congruence> all_congruences(FiniteSemigroup const& s, std::size_t max_order) {
    check_order(s, max_order);
    std::size_t const    n = s.order();
    std::set<Congruence> principal;
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        principal.insert(principal_congruence(s, a, b));
      }
    }
    // Every congruence is the join of the principal congruences it contains,
    // so closing {identity} under joins with principal ones reaches them all.
    std::set<Congruence>    lattice{Congruence::identity(n)};
    std::vector<Congruence> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
      Congruence c = std::move(frontier.back());
      frontier.pop_back();
      for (auto const& p : principal) {
        if (p.refines(c)) {
          continue;
        }
        Congruence j = join(s, c, p);
        if (lattice.insert(j).second) {
          frontier.push_back(std::move(j));
        }
      }
    }
    return {lattice.begin(), lattice.end()};
  }

  namespace {
    bool at_most_one_per_class(Congruence const& c, std::vector<bool> const& marked) {
      std::vector<bool> taken(c.class_count(), false);
      for (std::size_t x = 0; x < c.size(); ++x) {
        if (!marked[x]) {
          continue;
        }
        if (taken[c.class_id()[x]]) {
          return false;
        }
        taken[c.class_id()[x]] = true;
      }
      return true;
    }
  }  // namespace

  bool separates_regular(FiniteSemigroup const& s, Congruence const& c) {
    check_partition_size(s, c.size());
    return at_most_one_per_class(c, s.regularity().is_regular);
  }

  bool separates_idempotents(FiniteSemigroup const& s, Congruence const& c) {
    check_partition_size(s, c.size());
    return at_most_one_per_class(c, s.regularity().is_idempotent);
  }

  OracleResult largest_separating_oracle(FiniteSemigroup const& s, std::size_t max_order) {
    return largest_with(
        s, max_order, [&](Congruence const& c) { return separates_regular(s, c); });
  }

  OracleResult largest_idempotent_separating_oracle(FiniteSemigroup const& s,
                                                    std::size_t            max_order) {
    return largest_with(
        s, max_order, [&](Congruence const& c) { return separates_idempotents(s, c); });
  }

}  // namespace bglab
