#include "bglab/representation.hpp"

#include <algorithm>
#include <map>

#include "bglab/error.hpp"

namespace bglab {

  namespace {
    void require_block_group(FiniteSemigroup const& s) {
      if (auto verdict = is_block_group(s); !verdict) {
        throw Error(ErrorCode::not_block_group,
                    "idempotents " + s.label(verdict.witness->e) + " and "
                        + s.label(verdict.witness->f) + " share an "
                        + (verdict.witness->kind == GreenKind::R ? "R" : "L") + "-class",
                    {verdict.witness->e, verdict.witness->f});
      }
    }

    void require_element(FiniteSemigroup const& s, element_type x) {
      if (x >= s.order()) {
        throw Error(ErrorCode::index_out_of_range, "no element " + std::to_string(x), {x});
      }
    }

    // The unique inverse of a regular element of a block-group.
    element_type inv(FiniteSemigroup const& s, element_type x) {
      auto const& u = s.regularity().unique_inverse[x];
      if (!u) {
        throw Error(ErrorCode::internal_inconsistency,
                    s.label(x) + " has no unique inverse",
                    {x});
      }
      return *u;
    }

    // { x : x = xe for some e in idempotents }
    std::vector<element_type> fixed_by_some(FiniteSemigroup const&           s,
                                            std::vector<element_type> const& idempotents) {
      std::vector<element_type> result;
      for (element_type x = 0; x < s.order(); ++x) {
        if (std::any_of(idempotents.begin(), idempotents.end(), [&](element_type e) {
              return s.product(x, e) == x;
            })) {
          result.push_back(x);
        }
      }
      return result;
    }

    std::vector<element_type> right_multiples(FiniteSemigroup const& s, element_type e) {
      // S e
      std::vector<element_type> result;
      for (element_type x = 0; x < s.order(); ++x) {
        result.push_back(s.product(x, e));
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    PartialInjection vp_map_unchecked(FiniteSemigroup const& s, element_type x) {
      std::vector<PartialInjection::pair_type> pairs;
      for (element_type d : d_set(s, x)) {
        pairs.emplace_back(d, s.product(d, x));
      }
      PartialInjection f;
      try {
        f = PartialInjection::from_pairs(s.order(), std::move(pairs));
      } catch (Error const&) {
        throw Error(ErrorCode::bijection_failure,
                    "x -> x" + s.label(x) + " is not injective on D(" + s.label(x) + ")",
                    {x});
      }
      if (f.image() != i_set(s, x)) {
        throw Error(ErrorCode::bijection_failure,
                    "x -> x" + s.label(x) + " does not map D(" + s.label(x) + ") onto I("
                        + s.label(x) + ")",
                    {x});
      }
      return f;
    }

    PartialInjection munn_map_unchecked(FiniteSemigroup const& s, element_type x) {
      std::vector<PartialInjection::pair_type> pairs;
      for (element_type e : r_set(s, x)) {
        element_type const ex = s.product(e, x);
        pairs.emplace_back(e, s.product(inv(s, ex), ex));
      }
      return PartialInjection::from_pairs(s.order(), std::move(pairs));
    }

    void check_multiplicative(FiniteSemigroup const& s, Representation const& rep) {
      for (element_type a = 0; a < s.order(); ++a) {
        for (element_type b = 0; b < s.order(); ++b) {
          if (compose(rep[a], rep[b]) != rep[s.product(a, b)]) {
            throw Error(ErrorCode::multiplicativity_failure,
                        "map(" + s.label(a) + ") map(" + s.label(b) + ") != map("
                            + s.label(s.product(a, b)) + ")",
                        {a, b});
          }
        }
      }
    }

    void check_kernel(FiniteSemigroup const& s, Representation const& rep) {
      if (!is_congruence(s, rep.kernel)) {
        throw Error(ErrorCode::internal_inconsistency,
                    "kernel " + to_string(rep.kernel) + " is not a congruence");
      }
    }
  }  // namespace

  std::vector<element_type> r_set(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    auto const&               g = s.green();
    std::vector<element_type> result;
    for (element_type e : s.regularity().idempotents) {
      if (g.leq_r(e, x)) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::vector<element_type> l_set(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    auto const&               g = s.green();
    std::vector<element_type> result;
    for (element_type e : s.regularity().idempotents) {
      if (g.leq_l(e, x)) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::vector<element_type> d_set(FiniteSemigroup const& s, element_type x) {
    return fixed_by_some(s, r_set(s, x));
  }

  std::vector<element_type> i_set(FiniteSemigroup const& s, element_type x) {
    return fixed_by_some(s, l_set(s, x));
  }

  PartialInjection vp_map(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    require_block_group(s);
    return vp_map_unchecked(s, x);
  }

  Congruence kernel(Representation const& rep) {
    std::map<PartialInjection, std::size_t> fibre;
    std::vector<std::size_t>                ids;
    for (auto const& r : rep.elements) {
      ids.push_back(fibre.emplace(r.map, fibre.size()).first->second);
    }
    return Congruence::from_class_ids(ids);
  }

  Representation vp_representation(FiniteSemigroup const& s) {
    require_block_group(s);
    Representation rep{RepresentationKind::vagner_preston, {}, {}};
    for (element_type x = 0; x < s.order(); ++x) {
      rep.elements.push_back({x, vp_map_unchecked(s, x), DomainKind::d_to_i});
    }
    check_multiplicative(s, rep);

    auto const& reg = s.regularity();
    for (element_type x = 0; x < s.order(); ++x) {
      if (!reg.is_regular[x]) {
        continue;
      }
      element_type const xi = inv(s, x);
      if (rep[x].domain() != right_multiples(s, s.product(x, xi))
          || rep[x].image() != right_multiples(s, s.product(xi, x))) {
        throw Error(ErrorCode::internal_inconsistency,
                    "phi_" + s.label(x) + " does not run from S s s^-1 to S s^-1 s",
                    {x});
      }
      for (element_type y = 0; y < x; ++y) {
        if (reg.is_regular[y] && rep[x] == rep[y]) {
          throw Error(ErrorCode::regular_collision,
                      "regular elements " + s.label(y) + " and " + s.label(x)
                          + " have the same image",
                      {y, x});
        }
      }
    }
    rep.kernel = kernel(rep);
    check_kernel(s, rep);
    return rep;
  }

  PartialInjection munn_map(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    require_block_group(s);
    return munn_map_unchecked(s, x);
  }

  Representation munn_representation(FiniteSemigroup const& s) {
    require_block_group(s);
    Representation rep{RepresentationKind::munn, {}, {}};
    for (element_type x = 0; x < s.order(); ++x) {
      rep.elements.push_back({x, munn_map_unchecked(s, x), DomainKind::r_to_l});
    }
    check_multiplicative(s, rep);
    auto const& idempotents = s.regularity().idempotents;
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (rep[idempotents[i]] == rep[idempotents[j]]) {
          throw Error(ErrorCode::internal_inconsistency,
                      "idempotents " + s.label(idempotents[j]) + " and "
                          + s.label(idempotents[i]) + " have the same Munn image",
                      {idempotents[j], idempotents[i]});
        }
      }
    }
    rep.kernel = kernel(rep);
    check_kernel(s, rep);
    return rep;
  }

  PartialInjection classical_vp_map(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    if (!is_inverse_semigroup(s)) {
      throw Error(ErrorCode::malformed_input, "the classical map needs an inverse semigroup");
    }
    element_type const                       xi = *s.regularity().unique_inverse[x];
    std::vector<PartialInjection::pair_type> pairs;
    for (element_type y : right_multiples(s, s.product(x, xi))) {
      pairs.emplace_back(y, s.product(y, x));
    }
    return PartialInjection::from_pairs(s.order(), std::move(pairs));
  }

  PartialInjection classical_munn_map(FiniteSemigroup const& s, element_type x) {
    require_element(s, x);
    if (!is_inverse_semigroup(s)) {
      throw Error(ErrorCode::malformed_input, "the classical map needs an inverse semigroup");
    }
    element_type const        xi  = *s.regularity().unique_inverse[x];
    element_type const        xxi = s.product(x, xi);
    std::vector<element_type> domain;
    for (element_type f : s.regularity().idempotents) {
      domain.push_back(s.product(f, xxi));
    }
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    std::vector<PartialInjection::pair_type> pairs;
    for (element_type e : domain) {
      pairs.emplace_back(e, s.product(s.product(xi, e), x));
    }
    return PartialInjection::from_pairs(s.order(), std::move(pairs));
  }

  LemmaReport verify_lemmas(FiniteSemigroup const& s) {
    require_block_group(s);
    LemmaReport report;
    auto        check = [&report](bool ok, char const* property, std::vector<element_type> witness) {
      report.record(ok, property, std::move(witness));
    };

    auto const&       reg = s.regularity();
    auto const&       g   = s.green();
    std::size_t const n   = s.order();
    auto              mul = [&](element_type a, element_type b) { return s.product(a, b); };
    auto              contains = [](std::vector<element_type> const& v, element_type x) {
      return std::binary_search(v.begin(), v.end(), x);
    };

    std::vector<std::vector<element_type>> rs(n), ls(n), ds(n), is(n);
    for (element_type x = 0; x < n; ++x) {
      rs[x] = r_set(s, x);
      ls[x] = l_set(s, x);
      ds[x] = d_set(s, x);
      is[x] = i_set(s, x);
    }

    for (element_type x = 0; x < n; ++x) {
      for (element_type e : rs[x]) {
        element_type const u = mul(e, x);
        check(reg.is_regular[u], "regular-es", {x, e});
        if (!reg.is_regular[u]) {
          continue;
        }
        element_type const ui = inv(s, u);
        check(e == mul(u, ui) && e == mul(x, ui) && e == mul(mul(x, ui), e),
              "identity-chain-R",
              {x, e});
        element_type const f = mul(ui, u);
        check(contains(ls[x], f), "identity-chain-R-in-L", {x, e});
        check(g.d_class_id[f] == g.d_class_id[e], "identity-chain-R-D", {x, e});
      }
      for (element_type e : ls[x]) {
        element_type const u = mul(x, e);
        check(reg.is_regular[u], "regular-se", {x, e});
        if (!reg.is_regular[u]) {
          continue;
        }
        element_type const ui = inv(s, u);
        check(e == mul(ui, u) && e == mul(ui, x) && e == mul(e, mul(ui, x)),
              "identity-chain-L",
              {x, e});
        element_type const f = mul(u, ui);
        check(contains(rs[x], f), "identity-chain-L-in-R", {x, e});
        check(g.d_class_id[f] == g.d_class_id[e], "identity-chain-L-D", {x, e});
      }
    }

    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        check((ds[x] == ds[y]) == (rs[x] == rs[y]), "d-sets-R", {x, y});
        check((is[x] == is[y]) == (ls[x] == ls[y]), "d-sets-L", {x, y});
      }
    }

    for (element_type x = 0; x < n; ++x) {
      std::vector<element_type> image;
      for (element_type d : ds[x]) {
        element_type const dx = mul(d, x);
        image.push_back(dx);
        check(g.r_class_id[d] == g.r_class_id[dx], "bijection-R-class", {x, d});
      }
      std::sort(image.begin(), image.end());
      bool const injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      check(injective, "bijection-injective", {x});
      check(image == is[x], "bijection-onto", {x});
    }
    return report;
  }

}  // namespace bglab
