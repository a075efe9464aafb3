#include "selgame/strategies/witness_ops.hpp"

#include <set>

#include "detail.hpp"
#include "selgame/witnesses/witnesses.hpp"

namespace selgame::strategies {

using namespace topology;

namespace {

WitnessFamily checked(const Space& s, WitnessFamily w) {
  auto v = witnesses::validate_family(s, w);
  if (!v.ok) throw Error(Errc::ConstraintViolation, v.detail);
  return w;
}

const std::vector<PointId>& member_points(const SetDesc& m) {
  auto ps = std::get_if<sets::Points>(&m.v);
  if (!ps) throw Error(Errc::TypeMismatch, "expected a finite set, got " + to_string(m));
  return ps->points;
}

}  // namespace

WitnessFamily points_to_finite_sets(const Space& s, const WitnessFamily& w) {
  if (w.kind != WitnessKind::TopologicallyCountable) {
    throw Error(Errc::TypeMismatch, std::string("expected point witnesses, got ") + witness_kind_name(w.kind));
  }
  WitnessFamily out;
  out.kind = WitnessKind::FiniteSetCofinal;
  std::vector<PointId> prefix;
  for (const auto& m : w.members) {
    const auto& pts = member_points(m);
    prefix.insert(prefix.end(), pts.begin(), pts.end());
    out.members.push_back(points(prefix));
  }
  return checked(s, out);
}

WitnessFamily finite_sets_to_points(const Space& s, const WitnessFamily& w) {
  if (w.kind != WitnessKind::FiniteSetCofinal) {
    throw Error(Errc::TypeMismatch, std::string("expected finite-set witnesses, got ") + witness_kind_name(w.kind));
  }
  WitnessFamily out;
  out.kind = WitnessKind::TopologicallyCountable;
  std::set<PointId> seen;
  for (const auto& m : w.members) {
    for (const auto& p : member_points(m)) {
      if (seen.insert(p).second) out.members.push_back(point_set(p));
    }
  }
  return checked(s, out);
}

WitnessFamily product_witnesses(const Space& prod, const WitnessFamily& wx, const WitnessFamily& wy,
                                std::size_t count) {
  if (prod.kind != SpaceKind::Product) throw Error(Errc::TypeMismatch, prod.id + " is not a product");
  if (wx.kind != wy.kind) {
    throw Error(Errc::TypeMismatch, std::string("mixed witness kinds ") + witness_kind_name(wx.kind) + " and " +
                                        witness_kind_name(wy.kind));
  }
  const std::size_t n = prod.arity();
  WitnessFamily out;
  out.kind = wx.kind;
  for (std::size_t t = 0; t < count; ++t) {
    auto [a, b] = combinatorics::cantor_unpair(t);
    if (wx.kind == WitnessKind::TopologicallyCountable) {
      const auto& x = member_points(wx.at(a)).front();
      const auto& y = member_points(wy.at(b)).front();
      out.members.push_back(point_set(join_point(x, y, n)));
    } else {
      out.members.push_back(detail::join_set(wx.at(a), wy.at(b), n));
    }
  }
  return checked(prod, out);
}

}  // namespace selgame::strategies
