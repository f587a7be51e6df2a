#include <algorithm>
#include <numeric>
#include <random>

#include "bglab/corpus.hpp"
#include "bglab/error.hpp"
#include "bglab/partial_injection.hpp"
#include "bglab/representation.hpp"
#include "doctest.h"

using namespace bglab;

namespace {

  using Pairs = std::vector<PartialInjection::pair_type>;

  PartialInjection pi(std::size_t n, Pairs pairs) {
    return PartialInjection::from_pairs(n, std::move(pairs));
  }

  PartialInjection random_injection(std::mt19937& rng, std::size_t n) {
    std::vector<element_type> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    std::bernoulli_distribution keep(0.6);
    Pairs                       pairs;
    for (element_type x = 0; x < n; ++x) {
      if (keep(rng)) {
        pairs.emplace_back(x, image[x]);
      }
    }
    return pi(n, pairs);
  }

}  // namespace

TEST_CASE("from_pairs validates") {
  CHECK_THROWS_AS(pi(2, {{0, 2}}), Error);
  try {
    pi(3, {{0, 1}, {2, 1}});
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_injective);
  }
  try {
    pi(3, {{0, 1}, {0, 2}});
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::malformed_input);
  }
}

TEST_CASE("compose applies left to right") {
  auto const f = pi(2, {{0, 1}});
  CHECK(compose(f, pi(2, {{1, 0}})) == pi(2, {{0, 0}}));
  CHECK(compose(f, pi(2, {{0, 1}})).empty());

  std::vector<element_type> const all{0, 1, 2};
  auto const                      g = pi(3, {{0, 2}, {2, 1}});
  CHECK(compose(PartialInjection::identity_on(3, all), g) == g);
  std::vector<element_type> const a{2};
  CHECK(compose(PartialInjection::identity_on(3, a), g) == pi(3, {{2, 1}}));

  try {
    compose(f, g);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::universe_mismatch);
  }
}

TEST_CASE("invert and equals") {
  CHECK(invert(PartialInjection(3)) == PartialInjection(3));
  CHECK(invert(pi(3, {{0, 1}, {1, 2}})) == pi(3, {{1, 0}, {2, 1}}));

  auto const f = pi(3, {{2, 0}, {0, 1}});
  CHECK(equals(f, f));
  CHECK(equals(f, pi(3, {{0, 1}, {2, 0}})));
  CHECK_FALSE(equals(pi(2, {{0, 0}}), PartialInjection(2)));
  CHECK_FALSE(equals(PartialInjection(2), PartialInjection(3)));
  CHECK(f(2) == element_type(0));
  CHECK_FALSE(f(1).has_value());
  CHECK(f.domain() == std::vector<element_type>{0, 2});
  CHECK(f.image() == std::vector<element_type>{0, 1});
}

TEST_CASE("rendering") {
  CHECK(to_string(pi(3, {{2, 2}, {0, 1}})) == "{0↦1, 2↦2}");
  CHECK(to_string(PartialInjection(2)) == "{}");
  auto const b2 = brandt_semigroup(2);
  CHECK(to_string(pi(5, {{0, 3}}), b2) == "{e11↦e22}");
}

TEST_CASE("random partial injections") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto const        f = random_injection(rng, n);
    auto const        g = random_injection(rng, n);
    auto const        h = random_injection(rng, n);

    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(invert(invert(f)) == f);
    CHECK(compose(compose(f, invert(f)), f) == f);
    CHECK(compose(f, invert(f)) == PartialInjection::identity_on(n, f.domain()));
    CHECK(compose(invert(f), f) == PartialInjection::identity_on(n, f.image()));
    CHECK(invert(compose(f, g)) == compose(invert(g), invert(f)));

    bool const partial_identity
        = std::all_of(f.pairs().begin(), f.pairs().end(), [](auto const& p) { return p.first == p.second; });
    CHECK(f.is_idempotent() == partial_identity);
    CHECK((compose(f, f) == f) == partial_identity);

    auto const fg = compose(f, g);
    for (auto [x, y] : fg.pairs()) {
      CHECK(g(*f(x)) == y);
    }
  }
}

TEST_CASE("idempotents_commute_in_image") {
  std::vector<element_type> const all{0, 1};
  std::vector<PartialInjection>   one{PartialInjection::identity_on(2, all)};
  CHECK(idempotents_commute_in_image(one));

  std::vector<PartialInjection> ids;
  for (std::vector<element_type> pts : {std::vector<element_type>{}, {0}, {1}, {0, 1}}) {
    ids.push_back(PartialInjection::identity_on(2, pts));
  }
  CHECK(idempotents_commute_in_image(ids));

  auto const                    b2 = brandt_semigroup(2);
  auto const                    rep = vp_representation(b2);
  std::vector<PartialInjection> image;
  for (auto const& e : rep.elements) {
    image.push_back(e.map);
  }
  CHECK(idempotents_commute_in_image(image));

  std::vector<PartialInjection> open{pi(2, {{0, 1}})};
  try {
    idempotents_commute_in_image(open);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_closed);
  }
}
