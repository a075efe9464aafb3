// Regenerates data/registry.json: make_registry > data/registry.json
#include <iostream>

#include "selgame/topology/registry.hpp"

using namespace selgame;
using namespace selgame::topology;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n) / Rational(d); }

PointId nat(Nat n) { return PointId::nat(n); }
PointId rat(long long n, long long d = 1) { return PointId::rat(q(n, d)); }
PointId pair(PointId a, PointId b) { return PointId::tuple({std::move(a), std::move(b)}); }

SetDesc nat_set(std::initializer_list<Nat> xs) {
  std::vector<PointId> ps;
  for (Nat x : xs) ps.push_back(nat(x));
  return points(std::move(ps));
}

SetDesc segment(Nat n) {
  std::vector<PointId> ps;
  for (Nat i = 0; i <= n; ++i) ps.push_back(nat(i));
  return points(std::move(ps));
}

SpacePtr discrete() {
  Batteries b;
  for (Nat i = 0; i <= 24; ++i) b.points.push_back(nat(i));
  for (Nat i = 0; i <= 8; ++i) b.finite_sets.push_back(nat_set({i}));
  for (Nat i = 0; i <= 4; ++i)
    for (Nat j = i + 1; j <= 4; ++j) b.finite_sets.push_back(nat_set({i, j}));
  b.finite_sets.push_back(nat_set({0, 1, 2}));
  for (Nat n : {0, 1, 3, 7, 12, 20, 31}) b.compacts.push_back(segment(n));
  b.compacts.push_back(nat_set({3, 17, 29}));
  b.compacts.push_back(nat_set({30, 31}));
  b.compacts.push_back(nat_set({}));
  b.relcompacts = b.compacts;
  return with_data(make_space("DiscreteN", SpaceKind::DiscreteN), b,
                   {{"initial_segments", witness_from_pattern(WitnessKind::Hemicompact, "initial_segments", 64)},
                    {"naturals", witness_from_pattern(WitnessKind::TopologicallyCountable, "naturals", 64)}});
}

SpacePtr real_line() {
  Batteries b;
  for (long long k = -20; k <= 20; ++k) b.points.push_back(rat(k, 2));
  b.points.push_back(rat(1, 3));
  b.points.push_back(rat(-22, 7));
  b.finite_sets.push_back(points({rat(0)}));
  b.finite_sets.push_back(points({rat(-1), rat(1)}));
  b.finite_sets.push_back(points({rat(-5), rat(1, 3), rat(5)}));
  b.finite_sets.push_back(points({rat(2), rat(7, 2)}));
  b.finite_sets.push_back(points({rat(-4), rat(-3), rat(-1, 2)}));
  for (auto [lo, hi] : std::vector<std::pair<long long, long long>>{{0, 0}, {-1, 1}, {0, 5}, {-7, -3}, {-12, 12}, {20, 29}, {-30, 30}}) {
    b.compacts.push_back(closed(q(lo), q(hi)));
  }
  b.compacts.push_back(closed(q(1, 3), q(2, 3)));
  b.compacts.push_back(points({rat(-9), rat(4), rat(17, 2)}));
  b.relcompacts = b.compacts;
  for (auto [lo, hi] : std::vector<std::pair<long long, long long>>{{-1, 1}, {0, 5}, {-29, 29}, {3, 4}}) {
    b.relcompacts.push_back(open_set(q(lo), q(hi)));
  }
  return with_data(make_space("RealLineModel", SpaceKind::RealLine), b,
                   {{"balls", witness_from_pattern(WitnessKind::Hemicompact, "balls", 64)},
                    {"open_balls", witness_from_pattern(WitnessKind::RelativelyHemicompact, "open_balls", 64)}});
}

// 7 x 7 closed rectangles over the given interval list.
std::vector<SetDesc> rectangles(const std::vector<std::pair<Rational, Rational>>& ivs) {
  std::vector<SetDesc> out;
  for (const auto& [a, b] : ivs)
    for (const auto& [c, d] : ivs) out.push_back(product({closed(a, b), closed(c, d)}));
  return out;
}

SpacePtr real_plane(const SpacePtr& r, const std::string& id, long long span) {
  Batteries b;
  for (long long x = -span; x <= span; ++x)
    for (long long y = -span; y <= span; y += 2) b.points.push_back(pair(rat(x), rat(y)));
  b.finite_sets.push_back(points({pair(rat(0), rat(0)), pair(rat(1), rat(-1))}));
  b.finite_sets.push_back(points({pair(rat(-span), rat(span)), pair(rat(1, 2), rat(1, 3)), pair(rat(span), rat(0))}));
  std::vector<std::pair<Rational, Rational>> ivs;
  if (span == 2) {
    ivs = {{q(-2), q(2)}, {q(-1), q(1)}, {q(0), q(2)}, {q(-2), q(0)}, {q(-1, 2), q(3, 2)}, {q(1), q(2)}, {q(-2), q(-1)}};
  } else {
    ivs = {{q(-5), q(5)}, {q(-3), q(4)}, {q(0), q(5)}, {q(-5), q(0)}, {q(1), q(2)}, {q(-4), q(-2)}, {q(2), q(5)}};
  }
  b.compacts = rectangles(ivs);
  b.relcompacts = b.compacts;
  b.relcompacts.push_back(product({open_set(q(-span), q(span)), open_set(q(0), q(1))}));
  return with_data(make_power(id, r, 2), b, {});
}

SpacePtr real_space3(const SpacePtr& r) {
  Batteries b;
  for (long long x = -1; x <= 1; ++x) b.points.push_back(PointId::tuple({rat(x), rat(-x), rat(x, 2)}));
  b.finite_sets.push_back(points({PointId::tuple({rat(0), rat(0), rat(0)}), PointId::tuple({rat(1), rat(1), rat(-1)})}));
  std::vector<std::pair<Rational, Rational>> ivs{{q(-1), q(1)}, {q(0), q(1)}};
  for (const auto& [a, b1] : ivs)
    for (const auto& [c, d] : ivs)
      for (const auto& [e, f] : ivs) b.compacts.push_back(product({closed(a, b1), closed(c, d), closed(e, f)}));
  b.relcompacts = b.compacts;
  return with_data(make_power("RealLine3", r, 3), b, {});
}

SpacePtr discrete_plane(const SpacePtr& d, const std::string& id, Nat side, std::size_t count) {
  Batteries b;
  std::vector<PointId> grid;
  for (Nat x = 0; x < side; ++x)
    for (Nat y = 0; y < side; ++y) grid.push_back(pair(nat(x), nat(y)));
  b.points = grid;
  b.finite_sets.push_back(points({grid[0], grid.back()}));
  b.finite_sets.push_back(points({grid[1], grid[side], grid[side + 1]}));
  // Deterministic spread of nonempty subsets of the grid.
  std::uint64_t s = 12345;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<PointId> pick;
    for (std::size_t k = 0; pick.size() < 1 + i % 5; ++k) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      const PointId& p = grid[(s >> 33) % grid.size()];
      if (std::find(pick.begin(), pick.end(), p) == pick.end()) pick.push_back(p);
    }
    b.compacts.push_back(points(std::move(pick)));
  }
  b.relcompacts = b.compacts;
  return with_data(make_power(id, d, 2), b, {});
}

SpacePtr baire() {
  Batteries b;
  for (Word w : std::vector<Word>{{0}, {1}, {0, 0}, {2, 5}, {7, 0, 3}, {1, 1, 1, 1}}) b.points.push_back(PointId::word(w));
  b.finite_sets.push_back(points({PointId::word({0}), PointId::word({1, 2})}));
  return with_data(make_space("BaireModel", SpaceKind::Baire), b,
                   {{"words", witness_from_pattern(WitnessKind::TopologicallyCountable, "words", 64)}});
}

SpacePtr fortissimo() {
  Batteries b;
  for (Nat i = 0; i <= 10; ++i) b.points.push_back(nat(i));
  b.points.push_back(PointId::infinity());
  b.finite_sets.push_back(points({nat(0), PointId::infinity()}));
  b.finite_sets.push_back(points({nat(3), nat(5)}));
  b.compacts.push_back(points({PointId::infinity()}));
  b.compacts.push_back(points({nat(1), nat(2), PointId::infinity()}));
  b.relcompacts = b.compacts;
  return with_data(make_space("FortissimoModel", SpaceKind::Fortissimo), b, {});
}

SpacePtr right_order() {
  Batteries b;
  for (long long k = -50; k < 50; ++k) b.points.push_back(rat(k, 3));
  b.finite_sets.push_back(points({rat(-5, 3), rat(7, 2)}));
  return with_data(make_space("RightOrderModel", SpaceKind::RightOrder), b,
                   {{"integers", witness_from_pattern(WitnessKind::TopologicallyCountable, "integers", 64)}});
}

SpacePtr sorgenfrey() {
  Batteries b;
  for (long long k = -6; k <= 6; ++k) b.points.push_back(rat(k, 2));
  b.finite_sets.push_back(points({rat(0), rat(1, 2)}));
  return with_data(make_space("SorgenfreyModel", SpaceKind::Sorgenfrey), b, {});
}

SpacePtr unit_interval() {
  Batteries b;
  for (long long k = 0; k <= 8; ++k) b.points.push_back(rat(k, 8));
  b.finite_sets.push_back(points({rat(0), rat(1)}));
  b.compacts.push_back(closed(q(0), q(1)));
  b.compacts.push_back(closed(q(1, 4), q(1, 3)));
  b.relcompacts = b.compacts;
  b.relcompacts.push_back(open_set(q(0), q(1, 2)));
  return with_data(make_space("UnitInterval", SpaceKind::UnitInterval), b,
                   {{"whole", WitnessFamily{WitnessKind::Hemicompact, {closed(q(0), q(1))}, std::nullopt, 0}}});
}

SpacePtr chq(const SpacePtr& i, const SpacePtr& f) {
  Batteries b;
  for (long long k = 0; k <= 4; ++k) b.points.push_back(PointId::inject(0, rat(k, 4)));
  b.points.push_back(PointId::inject(1, PointId::infinity()));
  b.points.push_back(PointId::inject(1, nat(7)));
  auto compact = [](std::vector<PointId> named) {
    named.insert(named.begin(), PointId::infinity());
    return set_union({inject(0, closed(q(0), q(1))), inject(1, points(std::move(named)))});
  };
  b.compacts.push_back(compact({}));
  b.compacts.push_back(compact({nat(0)}));
  b.compacts.push_back(compact({nat(3), nat(11)}));
  b.compacts.push_back(compact({nat(5), nat(17), nat(39)}));
  b.compacts.push_back(compact({nat(2), nat(8), nat(21), nat(33)}));
  b.compacts.push_back(set_union({inject(0, closed(q(1, 3), q(1, 2))), inject(1, points({nat(9)}))}));
  b.relcompacts = b.compacts;
  return with_data(make_sum("CHQ", {i, f}), b, {});
}

SpacePtr one_point() {
  Batteries b;
  auto s = make_space("OnePoint", SpaceKind::OnePoint);
  b.points.push_back(point_at(*s, 0));
  b.finite_sets.push_back(points({b.points[0]}));
  b.compacts.push_back(points({b.points[0]}));
  b.relcompacts = b.compacts;
  return with_data(s, b, {{"point", witness_from_pattern(WitnessKind::TopologicallyCountable, "naturals", 1)}});
}

SpacePtr with_one_point(const std::string& id, const SpacePtr& x, const SpacePtr& o) {
  Batteries b;
  const PointId pt = o->batteries.points.front();
  for (const auto& p : x->batteries.points) b.points.push_back(pair(p, pt));
  for (const auto& k : x->batteries.compacts) b.compacts.push_back(product({k, points({pt})}));
  b.relcompacts = b.compacts;
  return with_data(make_product(id, {x, o}), b, {});
}

}  // namespace

int main() {
  SpaceRegistry reg;
  auto d = discrete();
  auto r = real_line();
  auto o = one_point();
  auto u = unit_interval();
  auto f = fortissimo();
  for (const auto& s : {d, r, o, u, f, baire(), right_order(), sorgenfrey()}) reg.add(s);
  reg.add(make_space("RationalLine", SpaceKind::RationalLine));
  reg.add(real_plane(r, "RealLine2", 2));
  reg.add(real_plane(r, "RealLine2Wide", 5));
  reg.add(real_space3(r));
  reg.add(discrete_plane(d, "DiscreteN2", 3, 48));
  reg.add(discrete_plane(d, "DiscreteN2Wide", 6, 48));
  reg.add(chq(u, f));
  reg.add(with_one_point("RealLineXOnePoint", r, o));
  reg.add(with_one_point("DiscreteNXOnePoint", d, o));
  std::cout << reg.serialize();
}
