#pragma once

// Deliberately naive re-implementations used only by the tests. None of these
// touch the cached data or helper routines of the library under test.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "bglab/congruence.hpp"
#include "bglab/partial_injection.hpp"
#include "bglab/semigroup.hpp"

namespace oracle {

  using bglab::element_type;
  using bglab::FiniteSemigroup;
  using Set = std::set<element_type>;

  inline element_type mul(FiniteSemigroup const& s, element_type a, element_type b) {
    return s.table()[std::size_t(a) * s.order() + b];
  }

  // sS^1
  inline Set right_ideal(FiniteSemigroup const& s, element_type x) {
    Set r{x};
    for (element_type y = 0; y < s.order(); ++y) {
      r.insert(mul(s, x, y));
    }
    return r;
  }

  // S^1 s
  inline Set left_ideal(FiniteSemigroup const& s, element_type x) {
    Set l{x};
    for (element_type y = 0; y < s.order(); ++y) {
      l.insert(mul(s, y, x));
    }
    return l;
  }

  // S^1 s S^1
  inline Set two_sided_ideal(FiniteSemigroup const& s, element_type x) {
    Set j;
    for (element_type y : left_ideal(s, x)) {
      auto const r = right_ideal(s, y);
      j.insert(r.begin(), r.end());
    }
    return j;
  }

  inline bool is_idempotent(FiniteSemigroup const& s, element_type x) {
    return mul(s, x, x) == x;
  }

  inline std::vector<element_type> idempotents(FiniteSemigroup const& s) {
    std::vector<element_type> e;
    for (element_type x = 0; x < s.order(); ++x) {
      if (is_idempotent(s, x)) {
        e.push_back(x);
      }
    }
    return e;
  }

  inline std::vector<element_type> inverses(FiniteSemigroup const& s, element_type x) {
    std::vector<element_type> inv;
    for (element_type y = 0; y < s.order(); ++y) {
      if (mul(s, mul(s, x, y), x) == x && mul(s, mul(s, y, x), y) == y) {
        inv.push_back(y);
      }
    }
    return inv;
  }

  inline bool is_regular(FiniteSemigroup const& s, element_type x) {
    return !inverses(s, x).empty();
  }

  // Every element has at most one inverse.
  inline bool is_block_group(FiniteSemigroup const& s) {
    for (element_type x = 0; x < s.order(); ++x) {
      if (inverses(s, x).size() > 1) {
        return false;
      }
    }
    return true;
  }

  inline element_type unique_inverse(FiniteSemigroup const& s, element_type x) {
    return inverses(s, x).at(0);
  }

  // The idempotent among x, x^2, ..., x^(2n).
  inline element_type omega(FiniteSemigroup const& s, element_type x) {
    element_type p = x;
    for (std::size_t k = 1; k <= 2 * s.order(); ++k, p = mul(s, p, x)) {
      if (is_idempotent(s, p)) {
        return p;
      }
    }
    return p;
  }

  // D(s) written as a union of left ideals Se over the idempotents e <=_R s.
  inline std::vector<element_type> d_set(FiniteSemigroup const& s, element_type x) {
    Set       d;
    Set const xs1 = right_ideal(s, x);
    for (element_type e : idempotents(s)) {
      if (xs1.count(e)) {
        for (element_type y = 0; y < s.order(); ++y) {
          d.insert(mul(s, y, e));
        }
      }
    }
    return {d.begin(), d.end()};
  }

  inline std::vector<element_type> i_set(FiniteSemigroup const& s, element_type x) {
    Set       d;
    Set const s1x = left_ideal(s, x);
    for (element_type e : idempotents(s)) {
      if (s1x.count(e)) {
        for (element_type y = 0; y < s.order(); ++y) {
          d.insert(mul(s, y, e));
        }
      }
    }
    return {d.begin(), d.end()};
  }

  // Classical Vagner-Preston map of an inverse semigroup: x -> xs on S s s^-1.
  inline bglab::PartialInjection classical_vp(FiniteSemigroup const& s, element_type x) {
    element_type const xinv = unique_inverse(s, x);
    element_type const e    = mul(s, x, xinv);
    Set                dom;
    for (element_type y = 0; y < s.order(); ++y) {
      dom.insert(mul(s, y, e));
    }
    std::vector<std::pair<element_type, element_type>> pairs;
    for (element_type y : dom) {
      pairs.emplace_back(y, mul(s, y, x));
    }
    return bglab::PartialInjection::from_pairs(s.order(), pairs);
  }

  inline bool is_compatible(FiniteSemigroup const& s, std::vector<std::size_t> const& ids) {
    for (element_type a = 0; a < s.order(); ++a) {
      for (element_type b = 0; b < s.order(); ++b) {
        if (ids[a] != ids[b]) {
          continue;
        }
        for (element_type c = 0; c < s.order(); ++c) {
          if (ids[mul(s, c, a)] != ids[mul(s, c, b)] || ids[mul(s, a, c)] != ids[mul(s, b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every set partition of {0, ..., n - 1} as restricted growth strings.
  inline void for_each_partition(std::size_t n, std::function<void(std::vector<std::size_t> const&)> const& f) {
    std::vector<std::size_t> ids(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
      if (i == n) {
        f(ids);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        ids[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (n > 0) {
      rec(1, 1);
    }
  }

  inline std::vector<bglab::Congruence> congruences(FiniteSemigroup const& s) {
    std::vector<bglab::Congruence> out;
    for_each_partition(s.order(), [&](std::vector<std::size_t> const& ids) {
      if (is_compatible(s, ids)) {
        out.push_back(bglab::Congruence::from_class_ids(ids));
      }
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool refines(bglab::Congruence const& a, bglab::Congruence const& b) {
    for (element_type x = 0; x < a.size(); ++x) {
      for (element_type y = 0; y < a.size(); ++y) {
        if (a.related(x, y) && !b.related(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  // The maximum of the congruences satisfying `keep`, or nothing when the
  // admissible set has several maximal members.
  template <typename Pred>
  std::optional<bglab::Congruence> largest(FiniteSemigroup const& s, Pred keep) {
    std::vector<bglab::Congruence> ok;
    for (auto const& c : congruences(s)) {
      if (keep(c)) {
        ok.push_back(c);
      }
    }
    for (auto const& c : ok) {
      if (std::all_of(ok.begin(), ok.end(), [&](auto const& d) { return refines(d, c); })) {
        return c;
      }
    }
    return std::nullopt;
  }

  inline std::optional<bglab::Congruence> largest_regular_separating(FiniteSemigroup const& s) {
    return largest(s, [&](bglab::Congruence const& c) {
      for (element_type a = 0; a < s.order(); ++a) {
        for (element_type b = a + 1; b < s.order(); ++b) {
          if (c.related(a, b) && is_regular(s, a) && is_regular(s, b)) {
            return false;
          }
        }
      }
      return true;
    });
  }

  inline std::optional<bglab::Congruence> largest_idempotent_separating(FiniteSemigroup const& s) {
    return largest(s, [&](bglab::Congruence const& c) {
      for (element_type a = 0; a < s.order(); ++a) {
        for (element_type b = a + 1; b < s.order(); ++b) {
          if (c.related(a, b) && is_idempotent(s, a) && is_idempotent(s, b)) {
            return false;
          }
        }
      }
      return true;
    });
  }

  // Generate-and-filter over all n^(n^2) tables; returns them row-major.
  inline std::vector<std::vector<element_type>> associative_tables(std::size_t n) {
    std::vector<std::vector<element_type>> out;
    std::vector<element_type>              t(n * n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          for (std::size_t c = 0; c < n && ok; ++c) {
            ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
          }
        }
      }
      if (ok) {
        out.push_back(t);
      }
      std::size_t i = t.size();
      while (i > 0 && ++t[i - 1] == n) {
        t[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

}  // namespace oracle
