#include "doctest.h"
#include "seplat/coproduct.hpp"

using namespace seplat;

namespace {

CoproductLattice mo_coproduct(std::size_t n) {
  const auto l = PropertyLattice::from_space(mo_space(n));
  return coproduct(l, l);
}

Element pair(const CoproductLattice& c, Element a, Element b) { return c.index_of(cop::Pair{a, b}); }

Element named(const PropertyLattice& l, const char* name) { return l.index_of(l.space().set_of({name})); }

}  // namespace

TEST_SUITE("coproduct") {
  TEST_CASE("element and atom counts") {
    const auto c2 = mo_coproduct(2);
    CHECK(c2.size() == 26);
    CHECK(c2.atoms().size() == 16);
    const auto c1 = mo_coproduct(1);
    CHECK(c1.size() == 10);
    CHECK(c1.atoms().size() == 4);
  }

  TEST_CASE("index round trip and labels") {
    const auto c = mo_coproduct(2);
    for (Element k = 0; k < c.size(); ++k) CHECK(c.index_of(c.element(k)) == k);
    CHECK(c.label(c.bottom()) == "0");
    CHECK(c.label(c.top()) == "({p1,p2,p1*,p2*},{p1,p2,p1*,p2*})");
    CHECK_THROWS_AS(c.index_of(cop::Pair{0, 1}), PreconditionError);
  }

  TEST_CASE("meet and join") {
    const auto c = mo_coproduct(2);
    const auto& l = c.first();
    const auto a = named(l, "p1");
    const auto b = named(l, "p2");
    const auto top = l.top();
    CHECK(c.meet(pair(c, a, top), pair(c, top, b)) == pair(c, a, b));
    CHECK(c.meet(pair(c, a, a), pair(c, b, a)) == c.bottom());
    CHECK(c.join(pair(c, a, a), pair(c, b, a)) == pair(c, top, a));
    CHECK(c.join(c.bottom(), pair(c, a, b)) == pair(c, a, b));
  }

  TEST_CASE("componentwise orthocomplement") {
    const auto c = mo_coproduct(2);
    const auto& l = c.first();
    const auto a = named(l, "p1");
    const auto as = named(l, "p1*");
    const auto b = named(l, "p2");
    const auto bs = named(l, "p2*");
    CHECK(c.ortho(pair(c, a, b)) == pair(c, as, bs));
    CHECK(c.ortho(c.bottom()) == c.top());
    CHECK(c.ortho(c.top()) == c.bottom());
    CHECK(c.ortho(pair(c, l.top(), a)) == c.bottom());
  }

  TEST_CASE("the componentwise complement breaks the ortholattice laws") {
    const auto c = mo_coproduct(2);
    const auto w = check_ortho_laws(c);
    REQUIRE(w.has_value());
    CHECK(reverify_generic(c, *w));
    const auto x = pair(c, c.first().top(), named(c.first(), "p1"));
    CHECK(c.ortho(c.ortho(x)) != x);
    CHECK_THROWS_AS(require_ortholattice(c), PreconditionError);
  }

  TEST_CASE("no orthocomplementation exists: atoms and coatoms differ in number") {
    const auto c = mo_coproduct(2);
    std::size_t coatoms = 0;
    for (Element k = 0; k < c.size(); ++k)
      if (c.covers(k, c.top())) ++coatoms;
    // An order-reversing involution would biject atoms with coatoms.
    CHECK(c.atoms().size() == 16);
    CHECK(coatoms == 8);
  }

  TEST_CASE("covering fails on the two-component MO(1) case") {
    const auto c = mo_coproduct(1);
    const auto& l = c.first();
    const auto p = named(l, "p1");
    const auto ps = named(l, "p1*");
    const auto atom = pair(c, p, p);
    const auto x = pair(c, ps, ps);
    CHECK(c.meet(atom, x) == c.bottom());
    CHECK(c.join(atom, x) == c.top());
    const auto mid = pair(c, l.top(), ps);
    CHECK(c.leq(x, mid));
    CHECK(mid != x);
    CHECK(mid != c.top());
    CHECK_FALSE(covering_at(c, atom, x));

    const auto r = coproduct_checks(c);
    CHECK(r.elements == 10);
    CHECK(r.atoms == 4);
    REQUIRE(r.covering.has_value());
    CHECK(reverify_generic(c, *r.covering));
    CHECK(r.ortho_laws.has_value());
    CHECK_FALSE(r.atomistic.has_value());
  }

  TEST_CASE("checks on the MO(2) coproduct") {
    const auto c = mo_coproduct(2);
    const auto r = coproduct_checks(c);
    CHECK(r.elements == 26);
    CHECK(r.atoms == 16);
    CHECK(r.covering.has_value());
    CHECK(r.exchange.has_value());
    CHECK_FALSE(r.atomistic.has_value());
    for (const auto* w : {&r.ortho_laws, &r.orthomodular, &r.covering, &r.exchange})
      if (w->has_value()) CHECK(reverify_generic(c, **w));
  }
}

TEST_SUITE("coproduct properties") {
  TEST_CASE("order, meet and join agree with the componentwise product order") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
      const auto l1 = PropertyLattice::from_space(mo_space(m));
      const auto l2 = PropertyLattice::from_space(mo_space(n));
      const auto c = coproduct(l1, l2);
      auto sets = [&](Element k) {
        const auto p = std::get<cop::Pair>(c.element(k));
        return std::pair{l1.set(p.first), l2.set(p.second)};
      };
      for (Element a = 1; a < c.size(); ++a)
        for (Element b = 1; b < c.size(); ++b) {
          const auto [a1, a2] = sets(a);
          const auto [b1, b2] = sets(b);
          CHECK(c.leq(a, b) == (a1.is_subset_of(b1) && a2.is_subset_of(b2)));
          const auto i1 = a1 & b1;
          const auto i2 = a2 & b2;
          if (i1.empty() || i2.empty()) {
            CHECK(c.meet(a, b) == c.bottom());
          } else {
            CHECK(sets(c.meet(a, b)) == std::pair{i1, i2});
          }
          // Least upper bound by exhaustive scan.
          Element best = c.top();
          for (Element u = 1; u < c.size(); ++u)
            if (c.leq(a, u) && c.leq(b, u) && c.leq(u, best)) best = u;
          CHECK(c.join(a, b) == best);
        }
    }
  }

  TEST_CASE("atoms are the minimal nonzero elements and covers are exact") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto c = mo_coproduct(n);
      for (Element a = 1; a < c.size(); ++a) {
        bool minimal = true;
        for (Element b = 1; b < c.size(); ++b)
          if (b != a && c.leq(b, a)) minimal = false;
        CHECK(c.is_atom(a) == minimal);
      }
      for (Element a = 0; a < c.size(); ++a)
        for (Element b = 0; b < c.size(); ++b) {
          bool between = false;
          for (Element z = 0; z < c.size(); ++z)
            if (z != a && z != b && c.leq(a, z) && c.leq(z, b)) between = true;
          CHECK(c.covers(a, b) == (a != b && c.leq(a, b) && !between));
        }
    }
  }
}
