#include <algorithm>
#include <random>

#include "bglab/corpus.hpp"
#include "bglab/error.hpp"
#include "bglab/semigroup.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bglab;

namespace {

  FiniteSemigroup z2() {
    return load_table(2, {{0, 1}, {1, 0}});
  }

  FiniteSemigroup null2() {
    return load_table(2, {{1, 1}, {1, 1}});
  }

  FiniteSemigroup left_zero2() {
    return load_table(2, {{0, 0}, {1, 1}});
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no exception");
    return ErrorCode::internal_inconsistency;
  }

}  // namespace

TEST_CASE("load_table accepts valid tables") {
  auto const t = load_table(1, {{0}});
  CHECK(t.order() == 1);
  CHECK(t.product(0, 0) == 0);

  auto const z = z2();
  CHECK(z.identity() == element_type(0));
  CHECK(z.product(1, 1) == 0);
  CHECK_FALSE(z.has_adjoined_identity());
}

TEST_CASE("load_table rejects bad input") {
  SUBCASE("out of range entry") {
    try {
      load_table(2, {{0, 2}, {1, 0}});
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::index_out_of_range);
      CHECK(e.witness() == std::vector<std::size_t>{0, 1});
    }
  }
  SUBCASE("wrong shape") {
    CHECK(code_of([] { load_table(2, {{0, 1}}); }) == ErrorCode::malformed_input);
    CHECK(code_of([] { load_table(2, {{0, 1}, {1}}); }) == ErrorCode::malformed_input);
    CHECK(code_of([] { load_table(0, {}); }) == ErrorCode::malformed_input);
  }
  SUBCASE("not associative") {
    std::vector<std::vector<element_type>> const entries{{1, 0}, {0, 0}};
    try {
      load_table(2, entries);
      FAIL("accepted");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::not_associative);
      REQUIRE(e.witness().size() == 3);
      auto const i = e.witness()[0], j = e.witness()[1], k = e.witness()[2];
      CHECK(entries[entries[i][j]][k] != entries[i][entries[j][k]]);
    }
  }
}

TEST_CASE("adjoin_identity") {
  auto const t = load_table(1, {{0}});
  CHECK(adjoin_identity(t) == t);
  CHECK(adjoin_identity(z2()) == z2());

  auto const m = adjoin_identity(null2());
  REQUIRE(m.order() == 3);
  CHECK(m.has_adjoined_identity());
  CHECK(m.identity() == element_type(2));
  for (element_type x = 0; x < 2; ++x) {
    for (element_type y = 0; y < 2; ++y) {
      CHECK(m.product(x, y) == 1);
    }
    CHECK(m.product(x, 2) == x);
    CHECK(m.product(2, x) == x);
  }
  CHECK(m.product(2, 2) == 2);
}

TEST_CASE("omega") {
  CHECK(omega(z2(), 1) == 0);
  auto const mono = load_table(2, {{1, 1}, {1, 1}}, {"a", "a^2"});
  CHECK(omega(mono, 0) == 1);
  CHECK(omega(mono, 1) == 1);

  for (auto const& m : corpus()) {
    auto const& s = m.semigroup;
    for (element_type x = 0; x < s.order(); ++x) {
      CAPTURE(m.name);
      CHECK(omega(s, x) == oracle::omega(s, x));
      auto const w = omega(s, x);
      CHECK(s.product(w, w) == w);
    }
  }
}

TEST_CASE("index_and_period") {
  auto const s = monogenic_semigroup(3, 2);
  auto const [m, r] = index_and_period(s, 0);
  CHECK(m == 3);
  CHECK(r == 2);
  auto const z = index_and_period(cyclic_group(3), 1);
  CHECK(z.index == 1);
  CHECK(z.period == 3);
}

TEST_CASE("regularity examples") {
  auto const z2s = z2();
  auto const ns  = null2();
  auto const lzs = left_zero2();
  auto const z = regularity(z2s);
  CHECK(z.is_regular == std::vector<bool>{true, true});
  CHECK(z.inverses[0] == std::vector<element_type>{0});
  CHECK(z.inverses[1] == std::vector<element_type>{1});
  CHECK(z.unique_inverse[1] == element_type(1));

  auto const n = regularity(ns);
  CHECK(n.is_regular == std::vector<bool>{false, true});
  CHECK(n.inverses[0].empty());
  CHECK_FALSE(n.unique_inverse[0].has_value());

  auto const lz = regularity(lzs);
  CHECK(lz.idempotents == std::vector<element_type>{0, 1});
  CHECK(lz.inverses[0] == std::vector<element_type>{0, 1});
  CHECK_FALSE(lz.unique_inverse[0].has_value());
}

TEST_CASE("regularity matches brute force on the corpus") {
  for (auto const& m : corpus()) {
    CAPTURE(m.name);
    auto const& s = m.semigroup;
    auto const& r = regularity(s);
    CHECK(r.idempotents == oracle::idempotents(s));
    for (element_type x = 0; x < s.order(); ++x) {
      CHECK(r.inverses[x] == oracle::inverses(s, x));
      CHECK(r.is_regular[x] == oracle::is_regular(s, x));
      CHECK(r.unique_inverse[x].has_value() == (r.inverses[x].size() == 1));
    }
  }
}

TEST_CASE("green examples") {
  auto const  z2s = z2();
  auto const& z   = green(z2s);
  CHECK(z.r_class_id == std::vector<std::size_t>{0, 0});
  CHECK(z.l_class_id == std::vector<std::size_t>{0, 0});

  auto const  lzs = left_zero2();
  auto const& lz  = green(lzs);
  CHECK(lz.r_class_id == std::vector<std::size_t>{0, 1});
  CHECK(lz.l_class_id == std::vector<std::size_t>{0, 0});

  auto const  ns = null2();
  auto const& n  = green(ns);
  CHECK(n.r_class_id == std::vector<std::size_t>{0, 1});
  CHECK(n.l_class_id == std::vector<std::size_t>{0, 1});
  CHECK(n.d_class_id == std::vector<std::size_t>{0, 1});
  CHECK(n.leq_r(1, 0));
  CHECK_FALSE(n.leq_r(0, 1));
  CHECK(n.leq_r(0, 0));
}

TEST_CASE("green quasi-orders match ideal containment") {
  for (auto const& m : corpus()) {
    CAPTURE(m.name);
    auto const& s = m.semigroup;
    auto const& g = green(s);
    auto const  j = j_class_ids(s);
    for (element_type x = 0; x < s.order(); ++x) {
      for (element_type y = 0; y < s.order(); ++y) {
        auto const rx = oracle::right_ideal(s, x), ry = oracle::right_ideal(s, y);
        auto const lx = oracle::left_ideal(s, x), ly = oracle::left_ideal(s, y);
        CHECK(g.leq_r(x, y) == std::includes(ry.begin(), ry.end(), rx.begin(), rx.end()));
        CHECK(g.leq_l(x, y) == std::includes(ly.begin(), ly.end(), lx.begin(), lx.end()));
        CHECK((g.r_class_id[x] == g.r_class_id[y]) == (rx == ry));
        CHECK((g.l_class_id[x] == g.l_class_id[y]) == (lx == ly));
        CHECK((j[x] == j[y]) == (oracle::two_sided_ideal(s, x) == oracle::two_sided_ideal(s, y)));
      }
    }
    CHECK(verify_green(s).ok());
  }
}

TEST_CASE("is_block_group examples") {
  CHECK(is_block_group(z2()).is_block_group);
  CHECK_FALSE(is_block_group(z2()).witness.has_value());

  auto const lz = is_block_group(left_zero2());
  REQUIRE_FALSE(lz.is_block_group);
  REQUIRE(lz.witness.has_value());
  CHECK(lz.witness->kind == GreenKind::L);
  CHECK(std::min(lz.witness->e, lz.witness->f) == 0);
  CHECK(std::max(lz.witness->e, lz.witness->f) == 1);

  auto const rz = is_block_group(right_zero_semigroup(2));
  REQUIRE(rz.witness.has_value());
  CHECK(rz.witness->kind == GreenKind::R);

  auto const b2 = *find_in_corpus("B2");
  CHECK(b2.order() == 5);
  CHECK(is_block_group(b2).is_block_group);
  CHECK(is_inverse_semigroup(b2));
}

TEST_CASE("is_block_group agrees with the inverse-count oracle on all tables up to order 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : all_associative_tables(n)) {
      auto const v = is_block_group(s);
      CHECK(v.is_block_group == oracle::is_block_group(s));
      if (!v.is_block_group) {
        REQUIRE(v.witness.has_value());
        auto const [e, f, kind] = *v.witness;
        CHECK(e != f);
        CHECK(oracle::is_idempotent(s, e));
        CHECK(oracle::is_idempotent(s, f));
        if (kind == GreenKind::R) {
          CHECK(oracle::right_ideal(s, e) == oracle::right_ideal(s, f));
        } else {
          CHECK(oracle::left_ideal(s, e) == oracle::left_ideal(s, f));
        }
      }
    }
  }
}

TEST_CASE("idempotent_meet") {
  auto const chain = chain_semilattice(2);
  CHECK(idempotent_meet(chain, 1, 0) == 0);
  CHECK(idempotent_meet(chain, 1, 1) == 1);

  auto const b2 = brandt_semigroup(2);
  CHECK(idempotent_meet(b2, 0, 3) == 4);
  CHECK(idempotent_meet(b2, 0, 0) == 0);

  CHECK(code_of([&] { idempotent_meet(b2, 1, 0); }) == ErrorCode::not_idempotent);
  CHECK(code_of([&] { idempotent_meet(left_zero2(), 0, 1); }) == ErrorCode::not_block_group);
}

TEST_CASE("idempotents of block-groups form a meet-semilattice") {
  for (auto const& m : corpus()) {
    if (!oracle::is_block_group(m.semigroup)) {
      continue;
    }
    CAPTURE(m.name);
    auto const& s = m.semigroup;
    auto const  e = oracle::idempotents(s);
    for (auto a : e) {
      CHECK(idempotent_meet(s, a, a) == a);
      for (auto b : e) {
        auto const ab = idempotent_meet(s, a, b);
        CHECK(ab == idempotent_meet(s, b, a));
        CHECK(natural_leq(s, ab, a));
        CHECK(natural_leq(s, ab, b));
        bool const right = oracle::mul(s, a, b) == a;
        bool const left  = oracle::mul(s, b, a) == a;
        CHECK(right == left);
        CHECK(natural_leq(s, a, b) == right);
        for (auto c : e) {
          CHECK(idempotent_meet(s, ab, c) == idempotent_meet(s, a, idempotent_meet(s, b, c)));
          if (natural_leq(s, c, a) && natural_leq(s, c, b)) {
            CHECK(natural_leq(s, c, ab));
          }
        }
      }
    }
    CHECK(verify_idempotent_semilattice(s).ok());
  }
}

TEST_CASE("subsemigroup") {
  auto const b2  = brandt_semigroup(2);
  auto const sub = subsemigroup(b2, {4, 0});
  CHECK(sub.order() == 2);
  CHECK(sub.product(0, 1) == 1);
  CHECK(code_of([&] { subsemigroup(b2, {1}); }) == ErrorCode::not_closed);
}

TEST_CASE("random tables are rejected unless associative") {
  std::mt19937                                rng(7);
  std::uniform_int_distribution<element_type> pick(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<element_type>> t(4, std::vector<element_type>(4));
    std::vector<element_type>              flat;
    for (auto& row : t) {
      for (auto& v : row) {
        v = pick(rng);
        flat.push_back(v);
      }
    }
    bool assoc = true;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t c = 0; c < 4; ++c) {
          assoc = assoc && t[t[a][b]][c] == t[a][t[b][c]];
        }
      }
    }
    bool loaded = true;
    try {
      load_table(4, t);
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::not_associative);
      loaded = false;
    }
    CHECK(loaded == assoc);
  }
}
