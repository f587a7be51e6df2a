#include <variant>

#include "bglab/congruence.hpp"
#include "bglab/corpus.hpp"
#include "bglab/error.hpp"
#include "bglab/representation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bglab;

namespace {

  using Set   = std::vector<element_type>;
  using Pairs = std::vector<PartialInjection::pair_type>;

  PartialInjection pi(std::size_t n, Pairs pairs) {
    return PartialInjection::from_pairs(n, std::move(pairs));
  }

  // Index layout of B2: e11 e12 e21 e22 0.
  constexpr element_type e11 = 0, e12 = 1, e21 = 2, e22 = 3, b0 = 4;

}  // namespace

TEST_CASE("r_set and l_set") {
  auto const z2 = cyclic_group(2);
  CHECK(r_set(z2, 1) == Set{0});
  CHECK(l_set(z2, 1) == Set{0});

  auto const null2 = null_semigroup(2);
  CHECK(r_set(null2, 0) == Set{1});
  CHECK(l_set(null2, 0) == Set{1});

  auto const chain = chain_semilattice(2);
  CHECK(r_set(chain, 1) == Set{0, 1});

  CHECK(l_set(left_zero_semigroup(2), 0) == Set{0, 1});
}

TEST_CASE("d_set and i_set") {
  auto const z2 = cyclic_group(2);
  CHECK(d_set(z2, 1) == Set{0, 1});

  auto const null2 = null_semigroup(2);
  CHECK(d_set(null2, 0) == Set{1});

  auto const chain = chain_semilattice(2);
  CHECK(d_set(chain, 1) == Set{0, 1});
  CHECK(d_set(chain, 0) == Set{0});

  for (auto const& m : corpus()) {
    CAPTURE(m.name);
    auto const& s = m.semigroup;
    for (element_type x = 0; x < s.order(); ++x) {
      CHECK(d_set(s, x) == oracle::d_set(s, x));
      CHECK(i_set(s, x) == oracle::i_set(s, x));
    }
  }
}

TEST_CASE("vp_map examples") {
  auto const z2 = cyclic_group(2);
  CHECK(vp_map(z2, 1) == pi(2, {{0, 1}, {1, 0}}));

  auto const null2 = null_semigroup(2);
  CHECK(vp_map(null2, 0) == pi(2, {{1, 1}}));
  CHECK(vp_map(null2, 0) == vp_map(null2, 1));

  auto const chain = chain_semilattice(2);
  CHECK(vp_map(chain, 1) == pi(2, {{0, 0}, {1, 1}}));
  CHECK(vp_map(chain, 0) == pi(2, {{0, 0}}));

  try {
    vp_map(left_zero_semigroup(2), 0);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_block_group);
  }
}

TEST_CASE("vp_representation examples") {
  auto const z2 = vp_representation(cyclic_group(2));
  CHECK(z2.kind == RepresentationKind::vagner_preston);
  CHECK(z2.kernel == Congruence::identity(2));

  auto const null2 = vp_representation(null_semigroup(2));
  CHECK(null2.kernel == Congruence::universal(2));

  auto const mono = monogenic_semigroup(2, 1);
  auto const rep  = vp_representation(mono);
  CHECK(rep[0] == pi(2, {{1, 1}}));
  CHECK(rep[1] == pi(2, {{1, 1}}));
  CHECK(kernel(rep) == Congruence::universal(2));

  auto const b2 = brandt_semigroup(2);
  auto const vb = vp_representation(b2);
  CHECK(vb.kernel == Congruence::identity(5));
  for (element_type x = 0; x < 5; ++x) {
    CHECK(vb[x] == oracle::classical_vp(b2, x));
    CHECK(vb[x] == classical_vp_map(b2, x));
    CHECK(vb.elements[x].domain_kind == DomainKind::d_to_i);
  }
}

TEST_CASE("munn examples") {
  auto const z2 = munn_representation(cyclic_group(2));
  CHECK(z2.kind == RepresentationKind::munn);
  CHECK(z2[0] == pi(2, {{0, 0}}));
  CHECK(z2[1] == pi(2, {{0, 0}}));
  CHECK(z2.kernel == Congruence::universal(2));

  auto const chain = chain_semilattice(2);
  CHECK(munn_map(chain, 1) == pi(2, {{0, 0}, {1, 1}}));
  CHECK(munn_representation(chain_semilattice(3)).kernel == Congruence::identity(3));

  auto const b2 = brandt_semigroup(2);
  CHECK(munn_map(b2, e12) == pi(5, {{e11, e22}, {b0, b0}}));
  CHECK(munn_map(b2, e21) == pi(5, {{e22, e11}, {b0, b0}}));
  CHECK(munn_representation(b2).kernel == Congruence::identity(5));
  for (element_type x = 0; x < 5; ++x) {
    CHECK(munn_map(b2, x) == classical_munn_map(b2, x));
  }
}

TEST_CASE("classical maps need an inverse semigroup") {
  try {
    classical_vp_map(null_semigroup(2), 0);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::malformed_input);
  }
}

TEST_CASE("representations are homomorphisms with the oracle kernels") {
  for (auto const& m : corpus()) {
    auto const& s = m.semigroup;
    if (!oracle::is_block_group(s)) {
      continue;
    }
    CAPTURE(m.name);
    auto const vp = vp_representation(s);
    auto const mu = munn_representation(s);
    for (element_type a = 0; a < s.order(); ++a) {
      CHECK(vp[a].domain() == oracle::d_set(s, a));
      CHECK(vp[a].image() == oracle::i_set(s, a));
      for (element_type b = 0; b < s.order(); ++b) {
        CHECK(compose(vp[a], vp[b]) == vp[s.product(a, b)]);
        CHECK(compose(mu[a], mu[b]) == mu[s.product(a, b)]);
        if (a != b && oracle::is_regular(s, a) && oracle::is_regular(s, b)) {
          CHECK(vp[a] != vp[b]);
        }
      }
    }
    if (s.order() <= 8) {
      auto const sep  = oracle::largest_regular_separating(s);
      auto const isep = oracle::largest_idempotent_separating(s);
      REQUIRE(sep.has_value());
      REQUIRE(isep.has_value());
      CHECK(vp.kernel == *sep);
      CHECK(mu.kernel == *isep);
    }
    CHECK(verify_lemmas(s).ok());
  }
}

TEST_CASE("Sss^-1 and Ss^-1s for regular s") {
  for (auto const& m : corpus()) {
    auto const& s = m.semigroup;
    if (!oracle::is_block_group(s)) {
      continue;
    }
    CAPTURE(m.name);
    for (element_type x = 0; x < s.order(); ++x) {
      if (!oracle::is_regular(s, x)) {
        continue;
      }
      auto const inv = oracle::unique_inverse(s, x);
      oracle::Set dom, im;
      for (element_type y = 0; y < s.order(); ++y) {
        dom.insert(oracle::mul(s, y, oracle::mul(s, x, inv)));
        im.insert(oracle::mul(s, y, oracle::mul(s, inv, x)));
      }
      CHECK(vp_map(s, x).domain() == Set(dom.begin(), dom.end()));
      CHECK(vp_map(s, x).image() == Set(im.begin(), im.end()));
    }
  }
}

TEST_CASE("lemma sweep reports nothing on every block-group up to order 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : all_associative_tables(n)) {
      if (oracle::is_block_group(s)) {
        auto const r = verify_lemmas(s);
        CHECK(r.ok());
        CHECK(r.checks > 0);
      }
    }
  }
}
