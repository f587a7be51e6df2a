#include "bglab/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "bglab/error.hpp"

namespace bglab {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::index_out_of_range: return "IndexOutOfRange";
      case ErrorCode::not_associative: return "NotAssociative";
      case ErrorCode::malformed_input: return "MalformedInput";
      case ErrorCode::internal_inconsistency: return "InternalInconsistency";
      case ErrorCode::not_block_group: return "NotBlockGroup";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::universe_mismatch: return "UniverseMismatch";
      case ErrorCode::not_injective: return "NotInjective";
      case ErrorCode::not_closed: return "NotClosed";
      case ErrorCode::bijection_failure: return "BijectionFailure";
      case ErrorCode::multiplicativity_failure: return "MultiplicativityFailure";
      case ErrorCode::regular_collision: return "RegularCollision";
      case ErrorCode::order_too_large: return "OrderTooLarge";
      case ErrorCode::unbound_variable: return "UnboundVariable";
      case ErrorCode::too_many_variables: return "TooManyVariables";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::closure_too_large: return "ClosureTooLarge";
      case ErrorCode::empty_alphabet: return "EmptyAlphabet";
      case ErrorCode::fiber_not_nilpotent: return "FiberNotNilpotent";
    }
    return "UnknownError";
  }

  struct FiniteSemigroup::Cache {
    std::once_flag regularity_flag;
    std::once_flag green_flag;
    RegularityData regularity;
    GreenSummary   green;
  };

  FiniteSemigroup::FiniteSemigroup(std::size_t               order,
                                   std::vector<element_type> table,
                                   std::vector<std::string>  labels,
                                   bool                      has_adjoined_identity)
      : _order(order),
        _table(std::move(table)),
        _labels(std::move(labels)),
        _has_adjoined_identity(has_adjoined_identity),
        _cache(std::make_shared<Cache>()) {}

  std::string FiniteSemigroup::label(element_type x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  std::optional<element_type> FiniteSemigroup::identity() const {
    for (element_type e = 0; e < _order; ++e) {
      bool ok = true;
      for (element_type x = 0; x < _order && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<element_type> FiniteSemigroup::zero() const {
    for (element_type z = 0; z < _order; ++z) {
      bool ok = true;
      for (element_type x = 0; x < _order && ok; ++x) {
        ok = product(z, x) == z && product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  RegularityData const& FiniteSemigroup::regularity() const {
    std::call_once(_cache->regularity_flag,
                   [this] { _cache->regularity = compute_regularity(*this); });
    return _cache->regularity;
  }

  GreenSummary const& FiniteSemigroup::green() const {
    std::call_once(_cache->green_flag, [this] { _cache->green = compute_green(*this); });
    return _cache->green;
  }

  FiniteSemigroup load_table(std::size_t                                   order,
                             std::vector<std::vector<element_type>> const& entries,
                             std::vector<std::string>                      labels) {
    if (order == 0) {
      throw Error(ErrorCode::malformed_input, "a semigroup must have at least one element");
    }
    if (entries.size() != order) {
      throw Error(ErrorCode::malformed_input,
                  "expected " + std::to_string(order) + " rows, found "
                      + std::to_string(entries.size()));
    }
    if (!labels.empty() && labels.size() != order) {
      throw Error(ErrorCode::malformed_input,
                  "expected " + std::to_string(order) + " labels, found "
                      + std::to_string(labels.size()));
    }
    std::vector<element_type> table;
    table.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      if (entries[i].size() != order) {
        throw Error(ErrorCode::malformed_input,
                    "row " + std::to_string(i) + " has " + std::to_string(entries[i].size())
                        + " entries, expected " + std::to_string(order));
      }
      for (std::size_t j = 0; j < order; ++j) {
        if (entries[i][j] >= order) {
          throw Error(ErrorCode::index_out_of_range,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j)
                          + ") = " + std::to_string(entries[i][j]) + " is not below "
                          + std::to_string(order),
                      {i, j});
        }
        table.push_back(entries[i][j]);
      }
    }
    auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        std::size_t const ij = at(i, j);
        for (std::size_t k = 0; k < order; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw Error(ErrorCode::not_associative,
                        "(" + std::to_string(i) + " * " + std::to_string(j) + ") * "
                            + std::to_string(k) + " != " + std::to_string(i) + " * ("
                            + std::to_string(j) + " * " + std::to_string(k) + ")",
                        {i, j, k});
          }
        }
      }
    }
    return FiniteSemigroup(order, std::move(table), std::move(labels), false);
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    if (s.identity()) {
      return s;
    }
    std::size_t const         n = s.order();
    std::vector<element_type> table((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        element_type v;
        if (i == n) {
          v = element_type(j);
        } else if (j == n) {
          v = element_type(i);
        } else {
          v = s.product(element_type(i), element_type(j));
        }
        table[i * (n + 1) + j] = v;
      }
    }
    std::vector<std::string> labels = s.labels();
    if (!labels.empty()) {
      labels.emplace_back("1");
    }
    return FiniteSemigroup(n + 1, std::move(table), std::move(labels), true);
  }

  IndexPeriod index_and_period(FiniteSemigroup const& s, element_type x) {
    // first_seen[y] is the exponent k at which x^k = y first appeared.
    std::vector<std::size_t> first_seen(s.order(), 0);
    element_type             power = x;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[power] != 0) {
        return {first_seen[power], k - first_seen[power]};
      }
      first_seen[power] = k;
      power             = s.product(power, x);
    }
  }

  element_type omega(FiniteSemigroup const& s, element_type x) {
    // The cyclic subsemigroup <x> has exactly one idempotent, so the first
    // idempotent power met is x^omega.
    element_type power = x;
    while (!s.is_idempotent(power)) {
      power = s.product(power, x);
    }
    return power;
  }

  RegularityData compute_regularity(FiniteSemigroup const& s) {
    std::size_t const n = s.order();
    RegularityData    result;
    result.is_idempotent.assign(n, false);
    result.is_regular.assign(n, false);
    result.inverses.assign(n, {});
    result.unique_inverse.assign(n, std::nullopt);
    for (element_type x = 0; x < n; ++x) {
      if (s.is_idempotent(x)) {
        result.is_idempotent[x] = true;
        result.idempotents.push_back(x);
      }
      for (element_type y = 0; y < n; ++y) {
        if (s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y) {
          result.inverses[x].push_back(y);
        }
      }
      result.is_regular[x] = !result.inverses[x].empty();
      if (result.inverses[x].size() == 1) {
        result.unique_inverse[x] = result.inverses[x].front();
      }
    }
    return result;
  }

  namespace {
    // Numbers the distinct rows of `m` by first occurrence; two elements get
    // the same id iff their rows are equal.
    std::vector<std::size_t> ids_from_rows(BoolMatrix const& m) {
      std::map<std::vector<std::uint64_t>, std::size_t> seen;
      std::vector<std::size_t>                          ids(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto row  = m.row(i);
        auto [it, inserted]
            = seen.emplace(std::vector<std::uint64_t>(row.begin(), row.end()), seen.size());
        ids[i] = it->second;
      }
      return ids;
    }

    std::vector<std::size_t> renumber(std::vector<std::size_t> const& raw) {
      std::map<std::size_t, std::size_t> seen;
      std::vector<std::size_t>           ids(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        ids[i] = seen.emplace(raw[i], seen.size()).first->second;
      }
      return ids;
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GreenSummary compute_green(FiniteSemigroup const& s) {
    std::size_t const n = s.order();
    // right_ideal(t, x) iff x in tS^1; left_ideal(t, x) iff x in S^1 t.
    BoolMatrix right_ideal(n), left_ideal(n);
    for (element_type t = 0; t < n; ++t) {
      right_ideal.set(t, t);
      left_ideal.set(t, t);
      for (element_type x = 0; x < n; ++x) {
        right_ideal.set(t, s.product(t, x));
        left_ideal.set(t, s.product(x, t));
      }
    }
    GreenSummary g;
    g.leq_r = BoolMatrix(n);
    g.leq_l = BoolMatrix(n);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t x = 0; x < n; ++x) {
        if (right_ideal(t, x)) {
          g.leq_r.set(x, t);
        }
        if (left_ideal(t, x)) {
          g.leq_l.set(x, t);
        }
      }
    }
    g.r_class_id = ids_from_rows(right_ideal);
    g.l_class_id = ids_from_rows(left_ideal);

    std::vector<std::size_t> h_raw(n);
    for (std::size_t x = 0; x < n; ++x) {
      h_raw[x] = g.r_class_id[x] * n + g.l_class_id[x];
    }
    g.h_class_id = renumber(h_raw);

    // D is the join of R and L.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> r_rep(n, n), l_rep(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t& r = r_rep[g.r_class_id[x]];
      std::size_t& l = l_rep[g.l_class_id[x]];
      if (r == n) {
        r = x;
      }
      if (l == n) {
        l = x;
      }
      parent[find_root(parent, x)] = find_root(parent, r);
      parent[find_root(parent, x)] = find_root(parent, l);
    }
    std::vector<std::size_t> d_raw(n);
    for (std::size_t x = 0; x < n; ++x) {
      d_raw[x] = find_root(parent, x);
    }
    g.d_class_id = renumber(d_raw);
    return g;
  }

  std::vector<std::size_t> j_class_ids(FiniteSemigroup const& s) {
    std::size_t const n = s.order();
    BoolMatrix        two_sided(n);
    for (element_type t = 0; t < n; ++t) {
      // S^1 t S^1 = union of S^1 y over y in tS^1
      std::vector<element_type> right{t};
      for (element_type x = 0; x < n; ++x) {
        right.push_back(s.product(t, x));
      }
      for (element_type y : right) {
        two_sided.set(t, y);
        for (element_type x = 0; x < n; ++x) {
          two_sided.set(t, s.product(x, y));
        }
      }
    }
    return ids_from_rows(two_sided);
  }

  BlockGroupVerdict is_block_group(FiniteSemigroup const& s) {
    auto const& reg = s.regularity();
    auto const& g   = s.green();

    BlockGroupVerdict verdict{true, std::nullopt};
    auto scan = [&](std::vector<std::size_t> const& class_id, GreenKind kind) {
      std::map<std::size_t, element_type> first;
      for (element_type e : reg.idempotents) {
        auto [it, inserted] = first.emplace(class_id[e], e);
        if (!inserted) {
          verdict = {false, BlockGroupWitness{it->second, e, kind}};
          return;
        }
      }
    };
    scan(g.r_class_id, GreenKind::R);
    if (verdict.is_block_group) {
      scan(g.l_class_id, GreenKind::L);
    }

    bool const unique_inverses = std::all_of(reg.inverses.begin(),
                                             reg.inverses.end(),
                                             [](auto const& inv) { return inv.size() <= 1; });
    if (unique_inverses != verdict.is_block_group) {
      throw Error(ErrorCode::internal_inconsistency,
                  "Green-class and unique-inverse block-group criteria disagree");
    }
    return verdict;
  }

  bool is_inverse_semigroup(FiniteSemigroup const& s) {
    auto const& reg = s.regularity();
    return std::all_of(reg.inverses.begin(), reg.inverses.end(), [](auto const& inv) {
      return inv.size() == 1;
    });
  }

  bool natural_leq(FiniteSemigroup const& s, element_type e, element_type f) {
    return s.product(e, f) == e && s.product(f, e) == e;
  }

  element_type idempotent_meet(FiniteSemigroup const& s, element_type e, element_type f) {
    if (!is_block_group(s)) {
      throw Error(ErrorCode::not_block_group, "idempotent meets need a block-group");
    }
    for (element_type x : {e, f}) {
      if (x >= s.order()) {
        throw Error(ErrorCode::index_out_of_range, "no element " + std::to_string(x), {x});
      }
      if (!s.is_idempotent(x)) {
        throw Error(ErrorCode::not_idempotent, s.label(x) + " is not idempotent", {x});
      }
    }
    return omega(s, s.product(e, f));
  }

  FiniteSemigroup subsemigroup(FiniteSemigroup const& s, std::vector<element_type> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      throw Error(ErrorCode::malformed_input, "a subsemigroup must be nonempty");
    }
    std::vector<element_type> position(s.order(), element_type(-1));
    for (std::size_t i = 0; i < members.size(); ++i) {
      position[members[i]] = element_type(i);
    }
    std::size_t const         k = members.size();
    std::vector<element_type> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        element_type p = s.product(members[i], members[j]);
        if (position[p] == element_type(-1)) {
          throw Error(ErrorCode::not_closed,
                      s.label(members[i]) + " * " + s.label(members[j])
                          + " leaves the subset",
                      {members[i], members[j]});
        }
        table[i * k + j] = position[p];
      }
    }
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      for (element_type m : members) {
        labels.push_back(s.labels()[m]);
      }
    }
    return FiniteSemigroup(k, std::move(table), std::move(labels), false);
  }

}  // namespace bglab

namespace bglab {

  PropertyReport verify_idempotent_semilattice(FiniteSemigroup const& s) {
    PropertyReport report;
    auto const&    idempotents = s.regularity().idempotents;
    auto           mul         = [&s](element_type a, element_type b) { return s.product(a, b); };
    auto           meet        = [&s](element_type e, element_type f) {
      return idempotent_meet(s, e, f);
    };
    for (element_type e : idempotents) {
      report.record(meet(e, e) == e, "meet-idempotent", {e});
      for (element_type f : idempotents) {
        bool const right = mul(e, f) == e;
        bool const left  = mul(f, e) == e;
        report.record(right == left && left == natural_leq(s, e, f), "order-collapse", {e, f});

        element_type const m = meet(e, f);
        report.record(m == meet(f, e), "meet-commutative", {e, f});
        report.record(s.is_idempotent(m) && natural_leq(s, m, e) && natural_leq(s, m, f),
                      "meet-lower-bound",
                      {e, f});
        for (element_type g : idempotents) {
          report.record(meet(meet(e, f), g) == meet(e, meet(f, g)), "meet-associative", {e, f, g});
          if (natural_leq(s, g, e) && natural_leq(s, g, f)) {
            report.record(natural_leq(s, g, m), "meet-greatest", {e, f, g});
          }
        }
      }
    }
    return report;
  }

  PropertyReport verify_green(FiniteSemigroup const& s) {
    PropertyReport report;
    auto const&    g = s.green();
    auto const     j = j_class_ids(s);
    for (element_type x = 0; x < s.order(); ++x) {
      for (element_type y = 0; y < s.order(); ++y) {
        bool const r = g.r_class_id[x] == g.r_class_id[y];
        bool const l = g.l_class_id[x] == g.l_class_id[y];
        bool const h = g.h_class_id[x] == g.h_class_id[y];
        bool const d = g.d_class_id[x] == g.d_class_id[y];
        report.record(r == (g.leq_r(x, y) && g.leq_r(y, x)), "R-from-order", {x, y});
        report.record(l == (g.leq_l(x, y) && g.leq_l(y, x)), "L-from-order", {x, y});
        report.record(h == (r && l), "H-is-R-and-L", {x, y});
        report.record(!(r || l) || d, "R-L-within-D", {x, y});
        report.record(d == (j[x] == j[y]), "D-equals-J", {x, y});
      }
    }
    return report;
  }

}  // namespace bglab
