#include "doctest.h"
#include "oracles.hpp"
#include "seplat/errors.hpp"
#include "seplat/separated.hpp"

using namespace seplat;

namespace {

struct Fixture {
  SeparatedProduct sp{mo_space(2), mo_space(2)};
  StateIndex a = sp.first().index_of("p1");
  StateIndex as = sp.first().index_of("p1*");
  StateIndex b = sp.first().index_of("p2");
  StateIndex bs = sp.first().index_of("p2*");
};

}  // namespace

TEST_SUITE("separated") {
  TEST_CASE("construction requires antipodal components") {
    CHECK_NOTHROW(SeparatedProduct(mo_space(1), mo_space(3)));
    CHECK_THROWS_AS(SeparatedProduct(mo_space(2), OrthoSpace::make({"a", "b", "c"}, {{"a", "b"}})), InvalidSpace);
    CHECK_THROWS_AS(SeparatedProduct(OrthoSpace::make({"a", "b"}, {}), mo_space(2)), InvalidSpace);
    CHECK(SeparatedProduct(mo_space(1), mo_space(2)).classical());
    CHECK_FALSE(SeparatedProduct(mo_space(2), mo_space(2)).classical());
  }

  TEST_CASE("denote") {
    Fixture f;
    const auto& s1 = f.sp.first();
    const auto& s2 = f.sp.second();
    CHECK(f.sp.denote(sep::Bottom{}).empty());
    CHECK(f.sp.denote(sep::Top{}).is_full());
    CHECK(f.sp.denote(sep::Row{f.a}) == product_set(s1, s2, s1.singleton(f.a), s2.all_states()));
    CHECK(f.sp.denote(sep::Col{f.b}) == product_set(s1, s2, s1.all_states(), s2.singleton(f.b)));
    CHECK(f.sp.denote(sep::Point{f.a, f.b}) == f.sp.space().singleton(product_index(s2, f.a, f.b)));
    CHECK(f.sp.denote(sep::Butterfly{f.a, f.b}).count() == 7);
    const auto pr = make_pair({f.a, f.a}, {f.b, f.b});
    CHECK(f.sp.denote(pr).count() == 2);
  }

  TEST_CASE("make_pair orders and validates") {
    Fixture f;
    CHECK(make_pair({f.b, f.b}, {f.a, f.a}) == make_pair({f.a, f.a}, {f.b, f.b}));
    CHECK_THROWS_AS(make_pair({f.a, f.a}, {f.a, f.b}), PreconditionError);
    CHECK_THROWS_AS(make_pair({f.a, f.b}, {f.b, f.b}), PreconditionError);
  }

  TEST_CASE("classify inverts denote and rejects non-closed sets") {
    Fixture f;
    for (const auto& e : f.sp.elements()) CHECK(f.sp.classify(f.sp.denote(e)) == e);
    StateSet three(16);
    three.insert(product_index(f.sp.second(), f.a, f.a));
    three.insert(product_index(f.sp.second(), f.b, f.b));
    three.insert(product_index(f.sp.second(), f.as, f.bs));
    CHECK_FALSE(f.sp.classify(three).has_value());
  }

  TEST_CASE("perp table") {
    Fixture f;
    CHECK(f.sp.perp(sep::Bottom{}) == SepElement{sep::Top{}});
    CHECK(f.sp.perp(sep::Top{}) == SepElement{sep::Bottom{}});
    CHECK(f.sp.perp(sep::Point{f.a, f.b}) == SepElement{sep::Butterfly{f.as, f.bs}});
    CHECK(f.sp.perp(sep::Butterfly{f.a, f.b}) == SepElement{sep::Point{f.as, f.bs}});
    CHECK(f.sp.perp(sep::Row{f.a}) == SepElement{sep::Row{f.as}});
    CHECK(f.sp.perp(sep::Col{f.b}) == SepElement{sep::Col{f.bs}});
    const auto pr = make_pair({f.a, f.a}, {f.b, f.b});
    CHECK(f.sp.perp(pr) == SepElement{make_pair({f.as, f.bs}, {f.bs, f.as})});
  }

  TEST_CASE("pair perp is crossed, not uncrossed") {
    Fixture f;
    const auto pr = make_pair({f.a, f.a}, {f.b, f.b});
    const auto truth = oracle::naive_perp(f.sp.space(), f.sp.denote(pr));
    CHECK(f.sp.denote(f.sp.perp(pr)) == truth);
    CHECK(f.sp.uncrossed_pair_perp(pr) != truth);
  }

  TEST_CASE("meet examples") {
    Fixture f;
    CHECK(f.sp.meet(sep::Row{f.a}, sep::Col{f.b}) == SepElement{sep::Point{f.a, f.b}});
    CHECK(f.sp.meet(sep::Row{f.a}, sep::Row{f.b}) == SepElement{sep::Bottom{}});
    CHECK(f.sp.meet(sep::Butterfly{f.a, f.b}, sep::Butterfly{f.b, f.a}) ==
          SepElement{make_pair({f.a, f.a}, {f.b, f.b})});
    CHECK(f.sp.meet(sep::Top{}, sep::Col{f.b}) == SepElement{sep::Col{f.b}});
  }

  TEST_CASE("join examples") {
    Fixture f;
    CHECK(f.sp.join(sep::Point{f.a, f.a}, sep::Point{f.a, f.b}) == SepElement{sep::Row{f.a}});
    CHECK(f.sp.join(sep::Point{f.a, f.a}, sep::Point{f.b, f.b}) == SepElement{make_pair({f.a, f.a}, {f.b, f.b})});
    CHECK(f.sp.join(sep::Row{f.a}, sep::Col{f.b}) == SepElement{sep::Butterfly{f.a, f.b}});
    CHECK(f.sp.join(sep::Row{f.a}, sep::Row{f.b}) == SepElement{sep::Top{}});
    // Three points in general position close to the whole space.
    const auto pr = make_pair({f.a, f.a}, {f.b, f.b});
    CHECK(f.sp.join(pr, sep::Point{f.as, f.as}) == SepElement{sep::Top{}});
  }

  TEST_CASE("sasaki examples") {
    Fixture f;
    const sep::Point p{f.b, f.a};
    CHECK(f.sp.sasaki(sep::Point{f.a, f.b}, p) == SepElement{sep::Point{f.a, f.b}});
    CHECK(f.sp.sasaki(sep::Row{f.a}, p) == SepElement{sep::Point{f.a, f.a}});
    CHECK(f.sp.sasaki(sep::Col{f.b}, p) == SepElement{sep::Point{f.b, f.b}});
    const auto pr = make_pair({f.a, f.a}, {f.b, f.b});
    CHECK(f.sp.sasaki(pr, sep::Point{f.a, f.b}) == SepElement{pr});
    CHECK_THROWS_AS(f.sp.sasaki(sep::Row{f.a}, sep::Point{f.as, f.b}), PreconditionError);
    CHECK_THROWS_AS(f.sp.sasaki(sep::Bottom{}, p), PreconditionError);
  }

  TEST_CASE("element listing and histogram") {
    Fixture f;
    const auto all = f.sp.elements();
    CHECK(all.size() == 114);
    FamilyHistogram h;
    for (const auto& e : all) ++h[family(e)];
    CHECK(h == f.sp.expected_histogram());
    CHECK(h.render() == "T=2 A1=4 A2=4 S=16 U=16 P=72");
    CHECK(h.total() == 114);
  }

  TEST_CASE("oracle equivalence on small products") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
      const auto r = oracle_equivalence(m, n);
      CHECK_MESSAGE(r.ok, r.counterexample);
      CHECK(r.brute_elements == r.symbolic_elements);
      CHECK(r.pair_perp_crossed_matches == r.pair_perp_instances);
    }
    const auto r22 = oracle_equivalence(2, 2);
    CHECK(r22.brute_elements == 114);
    CHECK(r22.pair_perp_instances == 72);
    CHECK(r22.pair_perp_uncrossed_matches == 0);
  }
}

TEST_SUITE("separated properties") {
  TEST_CASE("perp is an antitone involution on every element") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
      const SeparatedProduct sp(mo_space(m), mo_space(n));
      const auto all = sp.elements();
      for (const auto& e : all) {
        CHECK(sp.perp(sp.perp(e)) == e);
        CHECK(sp.denote(sp.perp(e)) == oracle::naive_perp(sp.space(), sp.denote(e)));
      }
      if (m * n > 4) continue;
      for (const auto& x : all)
        for (const auto& y : all)
          if (sp.denote(x).is_subset_of(sp.denote(y))) CHECK(sp.denote(sp.perp(y)).is_subset_of(sp.denote(sp.perp(x))));
    }
  }

  TEST_CASE("meet and join match set operations") {
    const SeparatedProduct sp(mo_space(2), mo_space(3));
    const auto all = sp.elements();
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 5) {
        const auto x = sp.denote(all[i]);
        const auto y = sp.denote(all[j]);
        CHECK(sp.denote(sp.meet(all[i], all[j])) == (x & y));
        CHECK(sp.denote(sp.join(all[i], all[j])) == oracle::naive_closure(sp.space(), x | y));
      }
  }
}
