#include "seplat/separated.hpp"

#include <algorithm>
#include <stdexcept>

#include "seplat/axioms.hpp"

namespace seplat {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Family family(const SepElement& e) {
  return std::visit(overloaded{
                        [](const sep::Bottom&) { return Family::T; },
                        [](const sep::Top&) { return Family::T; },
                        [](const sep::Row&) { return Family::A1; },
                        [](const sep::Col&) { return Family::A2; },
                        [](const sep::Point&) { return Family::S; },
                        [](const sep::Butterfly&) { return Family::U; },
                        [](const sep::Pair&) { return Family::P; },
                    },
                    e);
}

std::string to_string(Family f) {
  static constexpr const char* names[] = {"T", "A1", "A2", "S", "U", "P"};
  return names[static_cast<std::size_t>(f)];
}

std::size_t FamilyHistogram::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::string FamilyHistogram::render() const {
  std::string out;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) out += ' ';
    out += to_string(static_cast<Family>(k)) + "=" + std::to_string(counts[k]);
  }
  return out;
}

sep::Pair make_pair(sep::Point a, sep::Point b) {
  if (a.first == b.first || a.second == b.second)
    throw PreconditionError("pair points must differ in both coordinates");
  if (b < a) std::swap(a, b);
  return {a, b};
}

namespace {

std::vector<StateIndex> antipodes(const OrthoSpace& s, const char* which) {
  if (!is_antipodal(s))
    throw InvalidSpace(std::string(which) + " component is not antipodal: every state needs exactly one orthogonal partner");
  std::vector<StateIndex> out(s.size());
  for (StateIndex i = 0; i < s.size(); ++i) out[i] = s.perp_of(i).members().front();
  return out;
}

// A product of two component sets, each a single state or the whole
// component (nullopt).
struct Rect {
  std::optional<StateIndex> x;
  std::optional<StateIndex> y;
  bool operator==(const Rect&) const = default;
};

bool within(const Rect& r, const Rect& s) {
  return (!s.x || r.x == s.x) && (!s.y || r.y == s.y);
}

std::optional<std::optional<StateIndex>> meet_coord(std::optional<StateIndex> a, std::optional<StateIndex> b) {
  if (!a) return b;
  if (!b) return a;
  if (*a == *b) return a;
  return std::nullopt;  // empty
}

std::vector<Rect> to_rects(const SepElement& e) {
  return std::visit(overloaded{
                        [](const sep::Bottom&) { return std::vector<Rect>{}; },
                        [](const sep::Top&) { return std::vector<Rect>{{std::nullopt, std::nullopt}}; },
                        [](const sep::Row& r) { return std::vector<Rect>{{r.first, std::nullopt}}; },
                        [](const sep::Col& c) { return std::vector<Rect>{{std::nullopt, c.second}}; },
                        [](const sep::Point& p) { return std::vector<Rect>{{p.first, p.second}}; },
                        [](const sep::Butterfly& b) {
                          return std::vector<Rect>{{b.first, std::nullopt}, {std::nullopt, b.second}};
                        },
                        [](const sep::Pair& p) {
                          return std::vector<Rect>{{p.lo.first, p.lo.second}, {p.hi.first, p.hi.second}};
                        },
                    },
                    e);
}

std::vector<Rect> normalize(std::vector<Rect> rs) {
  std::vector<Rect> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < rs.size() && !absorbed; ++j) {
      if (i == j || !within(rs[i], rs[j])) continue;
      // Identical rects: keep only the first occurrence.
      absorbed = !(rs[i] == rs[j]) || j < i;
    }
    if (!absorbed) out.push_back(rs[i]);
  }
  return out;
}

SepElement from_rects(const std::vector<Rect>& raw) {
  const auto rs = normalize(raw);
  if (rs.empty()) return sep::Bottom{};
  for (const auto& r : rs)
    if (!r.x && !r.y) return sep::Top{};
  if (rs.size() == 1) {
    const auto& r = rs.front();
    if (r.x && r.y) return sep::Point{*r.x, *r.y};
    if (r.x) return sep::Row{*r.x};
    return sep::Col{*r.y};
  }
  if (rs.size() == 2) {
    const auto& a = rs[0];
    const auto& b = rs[1];
    if (a.x && a.y && b.x && b.y && *a.x != *b.x && *a.y != *b.y)
      return make_pair({*a.x, *a.y}, {*b.x, *b.y});
    if (a.x && !a.y && !b.x && b.y) return sep::Butterfly{*a.x, *b.y};
    if (!a.x && a.y && b.x && !b.y) return sep::Butterfly{*b.x, *a.y};
  }
  throw std::logic_error("set falls outside the separated-product families");
}

}  // namespace

SeparatedProduct::SeparatedProduct(OrthoSpace first, OrthoSpace second)
    : first_(std::move(first)),
      second_(std::move(second)),
      space_(product_space(first_, second_)),
      anti1_(antipodes(first_, "first")),
      anti2_(antipodes(second_, "second")) {}

sep::Point SeparatedProduct::point_of(StateIndex s) const { return {s / second_.size(), s % second_.size()}; }

StateSet SeparatedProduct::denote(const SepElement& e) const {
  StateSet out(space_.size());
  for (const auto& r : to_rects(e)) {
    for (StateIndex i = 0; i < first_.size(); ++i) {
      if (r.x && *r.x != i) continue;
      for (StateIndex j = 0; j < second_.size(); ++j)
        if (!r.y || *r.y == j) out.insert(state_of({i, j}));
    }
  }
  return out;
}

bool SeparatedProduct::contains(const SepElement& e, sep::Point p) const {
  for (const auto& r : to_rects(e))
    if ((!r.x || *r.x == p.first) && (!r.y || *r.y == p.second)) return true;
  return false;
}

std::optional<SepElement> SeparatedProduct::classify(const StateSet& s) const {
  if (s.universe() != space_.size()) throw PreconditionError("state set does not belong to this product space");
  if (s.empty()) return sep::Bottom{};
  if (s.is_full()) return sep::Top{};
  std::vector<sep::Point> pts;
  s.for_each([&](StateIndex k) { pts.push_back(point_of(k)); });
  if (pts.size() == 1) return pts.front();
  if (pts.size() == 2) {
    if (pts[0].first != pts[1].first && pts[0].second != pts[1].second) return make_pair(pts[0], pts[1]);
  }

  std::vector<StateIndex> full_rows;
  std::vector<StateIndex> full_cols;
  for (StateIndex i = 0; i < first_.size(); ++i) {
    bool full = true;
    for (StateIndex j = 0; j < second_.size() && full; ++j) full = s.contains(state_of({i, j}));
    if (full) full_rows.push_back(i);
  }
  for (StateIndex j = 0; j < second_.size(); ++j) {
    bool full = true;
    for (StateIndex i = 0; i < first_.size() && full; ++i) full = s.contains(state_of({i, j}));
    if (full) full_cols.push_back(j);
  }

  std::optional<SepElement> candidate;
  if (full_rows.size() == 1 && full_cols.empty()) candidate = sep::Row{full_rows.front()};
  if (full_rows.empty() && full_cols.size() == 1) candidate = sep::Col{full_cols.front()};
  if (full_rows.size() == 1 && full_cols.size() == 1) candidate = sep::Butterfly{full_rows.front(), full_cols.front()};
  if (candidate && denote(*candidate) == s) return candidate;
  return std::nullopt;
}

SepElement SeparatedProduct::perp(const SepElement& e) const {
  return std::visit(overloaded{
                        [](const sep::Bottom&) -> SepElement { return sep::Top{}; },
                        [](const sep::Top&) -> SepElement { return sep::Bottom{}; },
                        [&](const sep::Row& r) -> SepElement { return sep::Row{anti1_[r.first]}; },
                        [&](const sep::Col& c) -> SepElement { return sep::Col{anti2_[c.second]}; },
                        [&](const sep::Point& p) -> SepElement {
                          return sep::Butterfly{anti1_[p.first], anti2_[p.second]};
                        },
                        [&](const sep::Butterfly& b) -> SepElement {
                          return sep::Point{anti1_[b.first], anti2_[b.second]};
                        },
                        // Crossed: {(p1,p2),(q1,q2)}^⊥ = {(p1*,q2*),(q1*,p2*)}.
                        [&](const sep::Pair& p) -> SepElement {
                          return make_pair({anti1_[p.lo.first], anti2_[p.hi.second]},
                                           {anti1_[p.hi.first], anti2_[p.lo.second]});
                        },
                    },
                    e);
}

SepElement SeparatedProduct::meet(const SepElement& a, const SepElement& b) const {
  std::vector<Rect> out;
  for (const auto& r : to_rects(a))
    for (const auto& s : to_rects(b)) {
      const auto x = meet_coord(r.x, s.x);
      const auto y = meet_coord(r.y, s.y);
      if (x && y) out.push_back({*x, *y});
    }
  return from_rects(out);
}

SepElement SeparatedProduct::join(const SepElement& a, const SepElement& b) const {
  return perp(meet(perp(a), perp(b)));
}

SepElement SeparatedProduct::sasaki(const SepElement& m, sep::Point p) const {
  if (contains(perp(m), p))
    throw PreconditionError("sasaki: state " + render(p) + " is orthogonal to " + render(m));
  // ({p} ∪ M^⊥)^⊥⊥ = ({p}^⊥ ∩ M)^⊥ for closed M.
  const SepElement inner = meet(perp(SepElement{p}), m);
  return meet(perp(inner), m);
}

StateSet SeparatedProduct::uncrossed_pair_perp(const sep::Pair& pair) const {
  StateSet out(space_.size());
  out.insert(state_of({anti1_[pair.lo.first], anti2_[pair.hi.second]}));
  out.insert(state_of({anti1_[pair.hi.first], anti2_[pair.hi.second]}));
  return out;
}

std::vector<SepElement> SeparatedProduct::elements() const {
  std::vector<SepElement> out{sep::Bottom{}, sep::Top{}};
  const auto n1 = first_.size();
  const auto n2 = second_.size();
  for (StateIndex i = 0; i < n1; ++i) out.push_back(sep::Row{i});
  for (StateIndex j = 0; j < n2; ++j) out.push_back(sep::Col{j});
  for (StateIndex i = 0; i < n1; ++i)
    for (StateIndex j = 0; j < n2; ++j) out.push_back(sep::Point{i, j});
  for (StateIndex i = 0; i < n1; ++i)
    for (StateIndex j = 0; j < n2; ++j) out.push_back(sep::Butterfly{i, j});
  for (StateIndex a = 0; a < n1 * n2; ++a)
    for (StateIndex b = a + 1; b < n1 * n2; ++b) {
      const auto pa = point_of(a);
      const auto pb = point_of(b);
      if (pa.first != pb.first && pa.second != pb.second) out.push_back(make_pair(pa, pb));
    }
  return out;
}

FamilyHistogram SeparatedProduct::expected_histogram() const {
  FamilyHistogram h;
  for (const auto& e : elements()) ++h[family(e)];
  return h;
}

std::string SeparatedProduct::render(sep::Point p) const {
  return "(" + first_.name(p.first) + "," + second_.name(p.second) + ")";
}

std::string SeparatedProduct::render(const SepElement& e) const {
  return std::visit(overloaded{
                        [](const sep::Bottom&) -> std::string { return "Bottom"; },
                        [](const sep::Top&) -> std::string { return "Top"; },
                        [&](const sep::Row& r) { return "Row(" + first_.name(r.first) + ")"; },
                        [&](const sep::Col& c) { return "Col(" + second_.name(c.second) + ")"; },
                        [&](const sep::Point& p) { return "Point" + render(p); },
                        [&](const sep::Butterfly& b) {
                          return "Butterfly(" + first_.name(b.first) + "," + second_.name(b.second) + ")";
                        },
                        [&](const sep::Pair& p) { return "Pair{" + render(p.lo) + "," + render(p.hi) + "}"; },
                    },
                    e);
}

OracleReport oracle_equivalence(std::size_t m, std::size_t n, std::size_t cap) {
  OracleReport r;
  r.m = m;
  r.n = n;
  const SeparatedProduct sp(mo_space(m), mo_space(n));
  const auto lat = PropertyLattice::from_space(sp.space(), cap);
  const auto symbolic = sp.elements();
  r.brute_elements = lat.size();
  r.symbolic_elements = symbolic.size();

  auto fail = [&](std::string what) {
    r.ok = false;
    r.counterexample = std::move(what);
    return r;
  };

  for (Element a = 0; a < lat.size(); ++a) {
    const auto c = sp.classify(lat.set(a));
    if (!c) return fail("closed set " + lat.label(a) + " matches no family");
    ++r.histogram[family(*c)];
  }

  // Bijection between symbolic elements and brute-force closed sets.
  std::vector<Element> index(symbolic.size());
  std::vector<bool> hit(lat.size(), false);
  for (std::size_t k = 0; k < symbolic.size(); ++k) {
    const auto d = sp.denote(symbolic[k]);
    const auto found = lat.find(d);
    if (!found) return fail(sp.render(symbolic[k]) + " denotes a set that is not closed: " + sp.space().render(d));
    if (hit[*found]) return fail(sp.render(symbolic[k]) + " denotes an already matched set " + lat.label(*found));
    if (sp.classify(d) != symbolic[k]) return fail("classify does not invert denote at " + sp.render(symbolic[k]));
    hit[*found] = true;
    index[k] = *found;
  }
  if (symbolic.size() != lat.size())
    return fail("element counts differ: symbolic " + std::to_string(symbolic.size()) + ", brute force " +
                std::to_string(lat.size()));

  auto idx = [&](const SepElement& e) { return lat.find(sp.denote(e)); };

  for (std::size_t k = 0; k < symbolic.size(); ++k) {
    const auto& e = symbolic[k];
    ++r.perp_checks;
    if (idx(sp.perp(e)) != lat.ortho(index[k]))
      return fail("perp disagrees at " + sp.render(e) + ": symbolic " + sp.render(sp.perp(e)) + ", brute force " +
                  lat.label(lat.ortho(index[k])));
    if (const auto* pair = std::get_if<sep::Pair>(&e)) {
      ++r.pair_perp_instances;
      const auto& truth = lat.set(lat.ortho(index[k]));
      if (sp.denote(sp.perp(e)) == truth) ++r.pair_perp_crossed_matches;
      if (sp.uncrossed_pair_perp(*pair) == truth) ++r.pair_perp_uncrossed_matches;
    }
  }

  for (std::size_t i = 0; i < symbolic.size(); ++i)
    for (std::size_t j = 0; j < symbolic.size(); ++j) {
      const auto& a = symbolic[i];
      const auto& b = symbolic[j];
      ++r.meet_checks;
      const auto sm = sp.meet(a, b);
      if (idx(sm) != lat.meet(index[i], index[j]))
        return fail("meet disagrees at " + sp.render(a) + " ^ " + sp.render(b) + ": symbolic " + sp.render(sm));
      ++r.join_checks;
      const auto sj = sp.join(a, b);
      if (idx(sj) != lat.join(index[i], index[j]))
        return fail("join disagrees at " + sp.render(a) + " v " + sp.render(b) + ": symbolic " + sp.render(sj));
    }

  for (std::size_t k = 0; k < symbolic.size(); ++k) {
    const auto& mperp = lat.set(lat.ortho(index[k]));
    for (StateIndex p = 0; p < sp.space().size(); ++p) {
      if (mperp.contains(p)) continue;
      ++r.sasaki_checks;
      const auto img = sp.sasaki(symbolic[k], sp.point_of(p));
      if (sp.denote(img) != sasaki_state(lat, index[k], p))
        return fail("sasaki disagrees at M=" + sp.render(symbolic[k]) + ", p=" + sp.render(sp.point_of(p)) +
                    ": symbolic " + sp.render(img));
    }
  }

  r.ok = true;
  return r;
}

}  // namespace seplat
