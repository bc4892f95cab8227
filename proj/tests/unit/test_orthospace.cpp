#include "doctest.h"
#include "oracles.hpp"
#include "seplat/random_spaces.hpp"

using namespace seplat;

namespace {

OrthoSpace empty_relation(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return OrthoSpace::make(names, {});
}

OrthoSpace fully_orthogonal(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(names[i], names[j]);
  return OrthoSpace::make(names, pairs);
}

}  // namespace

TEST_SUITE("orthospace") {
  TEST_CASE("make_space builds the symmetric closure") {
    const auto s = OrthoSpace::make({"a", "a*"}, {{"a", "a*"}});
    CHECK(s.size() == 2);
    CHECK(s.orthogonal(0, 1));
    CHECK(s.orthogonal(1, 0));
    CHECK_FALSE(s.orthogonal(0, 0));
    CHECK(s.ortho_pairs().size() == 1);

    const auto t = OrthoSpace::make({"a", "b", "c"}, {});
    CHECK(t.size() == 3);
    CHECK(t.ortho_pairs().empty());
    CHECK(t.index_of("c") == 2);
  }

  TEST_CASE("make_space rejects bad input with the offender named") {
    CHECK_THROWS_WITH_AS(OrthoSpace::make({"a", "a"}, {}), doctest::Contains("duplicate state name 'a'"), InvalidSpace);
    CHECK_THROWS_WITH_AS(OrthoSpace::make({"a", "b"}, {{"a", "z"}}), doctest::Contains("'z'"), InvalidSpace);
    CHECK_THROWS_WITH_AS(OrthoSpace::make({"a", "b"}, {{"b", "b"}}), doctest::Contains("'b'"), InvalidSpace);
    CHECK_THROWS_AS(OrthoSpace::make({}, {}), InvalidSpace);
  }

  TEST_CASE("mo_space") {
    const auto m1 = mo_space(1);
    CHECK(m1.names() == std::vector<std::string>{"p1", "p1*"});
    CHECK(m1.ortho_pairs().size() == 1);

    const auto m2 = mo_space(2);
    CHECK(m2.size() == 4);
    CHECK(m2.ortho_pairs().size() == 2);

    const auto m3 = mo_space(3);
    CHECK(m3.size() == 6);
    for (StateIndex p = 0; p < m3.size(); ++p) {
      std::size_t non_orth = 0;
      for (StateIndex q = 0; q < m3.size(); ++q)
        if (q != p && !m3.orthogonal(p, q)) ++non_orth;
      CHECK(non_orth == 4);
    }
    CHECK_THROWS_AS(mo_space(0), InvalidSpace);
  }

  TEST_CASE("perp examples") {
    const auto m2 = mo_space(2);
    CHECK(perp(m2, m2.set_of({"p1"})) == m2.set_of({"p1*"}));
    CHECK(perp(m2, m2.empty_set()) == m2.all_states());
    CHECK(perp(m2, m2.set_of({"p1", "p2"})).empty());
    CHECK(perp(m2, m2.all_states()).empty());
    const auto e = empty_relation(3);
    CHECK(perp(e, e.empty_set()) == e.all_states());
  }

  TEST_CASE("closure examples") {
    const auto m3 = mo_space(3);
    CHECK(closure(m3, m3.set_of({"p1"})) == m3.set_of({"p1"}));
    const auto m2 = mo_space(2);
    CHECK(closure(m2, m2.set_of({"p1", "p2"})) == m2.all_states());
    CHECK(closure(m2, m2.all_states()) == m2.all_states());
  }

  TEST_CASE("is_t1 and is_nontrivial") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(is_t1(mo_space(n)));
    CHECK_FALSE(is_t1(empty_relation(3)));
    CHECK(closure(empty_relation(3), empty_relation(3).singleton(0)).is_full());
    CHECK(is_t1(fully_orthogonal(2)));

    CHECK_FALSE(is_nontrivial(mo_space(1)));
    CHECK(is_nontrivial(mo_space(2)));
    CHECK_FALSE(is_nontrivial(fully_orthogonal(4)));
  }

  TEST_CASE("enumerate_closed matches brute force over all subsets") {
    const auto m2 = mo_space(2);
    const auto fam = enumerate_closed(m2);
    CHECK(fam == oracle::brute_closed_sets(m2));
    REQUIRE(fam.size() == 6);
    CHECK(fam.front().empty());
    CHECK(fam.back().is_full());
    for (std::size_t k = 1; k <= 4; ++k) CHECK(fam[k].count() == 1);

    const auto m1 = mo_space(1);
    CHECK(enumerate_closed(m1) == oracle::brute_closed_sets(m1));
    CHECK(enumerate_closed(m1).size() == 4);

    const auto e = empty_relation(3);
    const auto fe = enumerate_closed(e);
    REQUIRE(fe.size() == 2);
    CHECK(fe[0].empty());
    CHECK(fe[1].is_full());

    SpaceRng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const auto s = random_space(rng, rng.between(1, 8));
      CHECK(enumerate_closed(s) == oracle::brute_closed_sets(s));
    }
  }

  TEST_CASE("enumerate_closed honours the cap") {
    CHECK_THROWS_AS(enumerate_closed(mo_space(3), 5), CapExceeded);
    CHECK(enumerate_closed(mo_space(3), 8).size() == 8);
  }

  TEST_CASE("enumerate_closed output is intersection-closed with both bounds") {
    SpaceRng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = random_space(rng, rng.between(2, 9));
      const auto fam = enumerate_closed(s);
      CHECK(fam.front().empty());
      CHECK(fam.back().is_full());
      for (const auto& a : fam)
        for (const auto& b : fam) CHECK(std::find(fam.begin(), fam.end(), a & b) != fam.end());
    }
  }

  TEST_CASE("product_space orthogonality") {
    const auto m2 = mo_space(2);
    const auto p = product_space(m2, m2);
    CHECK(p.size() == 16);
    const auto a = m2.index_of("p1");
    const auto as = m2.index_of("p1*");
    const auto b = m2.index_of("p2");
    for (StateIndex x = 0; x < 4; ++x)
      for (StateIndex y = 0; y < 4; ++y) CHECK(p.orthogonal(product_index(m2, a, x), product_index(m2, as, y)));
    // a not⊥ b and x not⊥ y gives non-orthogonal product states.
    CHECK_FALSE(p.orthogonal(product_index(m2, a, a), product_index(m2, b, b)));
    CHECK(p.name(product_index(m2, a, b)) == "(p1,p2)");
    for (StateIndex i = 0; i < p.size(); ++i) CHECK_FALSE(p.orthogonal(i, i));
  }
}

TEST_SUITE("orthospace properties") {
  TEST_CASE("perp is antitone, extensive twice, and stable under triple application") {
    SpaceRng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto s = random_space(rng, rng.between(1, 10));
      const auto a = random_subset(rng, s);
      const auto b = a | random_subset(rng, s);
      CHECK(perp(s, a) == oracle::naive_perp(s, a));
      CHECK(perp(s, b).is_subset_of(perp(s, a)));
      CHECK(a.is_subset_of(closure(s, a)));
      CHECK(perp(s, closure(s, a)) == perp(s, a));
      CHECK(is_closed(s, closure(s, a)));
    }
  }

  TEST_CASE("perp of a union is the intersection of perps") {
    SpaceRng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const auto s = random_space(rng, rng.between(1, 10));
      const std::size_t k = rng.between(1, 4);
      StateSet uni(s.size());
      StateSet inter = s.all_states();
      for (std::size_t j = 0; j < k; ++j) {
        const auto m = random_subset(rng, s);
        uni |= m;
        inter &= perp(s, m);
      }
      CHECK(perp(s, uni) == inter);
    }
  }

  TEST_CASE("perps in a product space decompose coordinatewise") {
    SpaceRng rng(9);
    for (int trial = 0; trial < 150; ++trial) {
      const auto s1 = random_space(rng, rng.between(1, 5));
      const auto s2 = random_space(rng, rng.between(1, 5));
      const auto p = product_space(s1, s2);
      const auto full1 = s1.all_states();
      const auto full2 = s2.all_states();
      const auto m1 = random_subset(rng, s1);
      const auto m2 = random_subset(rng, s2);
      const auto p1 = rng.between(0, s1.size() - 1);
      const auto p2 = rng.between(0, s2.size() - 1);

      const auto point = p.singleton(product_index(s2, p1, p2));
      CHECK(perp(p, point) == (product_set(s1, s2, s1.perp_of(p1), full2) | product_set(s1, s2, full1, s2.perp_of(p2))));
      CHECK(perp(p, product_set(s1, s2, s1.singleton(p1), m2)) ==
            (product_set(s1, s2, s1.perp_of(p1), full2) | product_set(s1, s2, full1, perp(s2, m2))));
      CHECK(perp(p, product_set(s1, s2, m1, m2)) ==
            (product_set(s1, s2, perp(s1, m1), full2) | product_set(s1, s2, full1, perp(s2, m2))));
    }
  }

  TEST_CASE("two states differing in both coordinates form a closed set in a product of T1 spaces") {
    SpaceRng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
      const auto s1 = random_t1_space(rng, 5);
      const auto s2 = random_t1_space(rng, 5);
      const auto p = product_space(s1, s2);
      const auto p1 = rng.between(0, s1.size() - 1);
      auto q1 = rng.between(0, s1.size() - 2);
      if (q1 >= p1) ++q1;
      const auto p2 = rng.between(0, s2.size() - 1);
      auto q2 = rng.between(0, s2.size() - 2);
      if (q2 >= p2) ++q2;
      StateSet two(p.size());
      two.insert(product_index(s2, p1, p2));
      two.insert(product_index(s2, q1, q2));
      CHECK(closure(p, two) == two);
    }
  }
}
