#include "selgame/witnesses/witnesses.hpp"

#include <algorithm>

#include "selgame/topology/cover_ops.hpp"

namespace selgame::witnesses {

using namespace topology;

const char* cof_mode_name(CofMode m) { return m == CofMode::Cof ? "cof" : "cof-hat"; }

CofinalityResult check_cofinality(const Space& s, const WitnessFamily& w, const std::vector<SetDesc>& battery,
                                  CofMode mode, std::size_t bound) {
  CofinalityResult out;
  CofinalityClaim claim{mode, battery, {}};
  const std::size_t last = std::min(bound, w.members.empty() ? 0 : w.members.size() - 1);
  for (const auto& b : battery) {
    std::optional<std::size_t> hit;
    for (std::size_t n = 0; n <= last && !w.members.empty(); ++n) {
      bool in = mode == CofMode::Cof ? subset(s, b, w.members[n]) : subset_sat(s, b, w.members[n]);
      if (in) {
        hit = n;
        break;
      }
    }
    if (!hit) {
      out.counterexample = b;
      return out;
    }
    claim.witness.push_back(*hit);
  }
  out.claim = std::move(claim);
  return out;
}

namespace {

std::vector<SetDesc> point_sets(const Space& s) {
  std::vector<SetDesc> out;
  for (const auto& p : s.batteries.points) out.push_back(point_set(p));
  return out;
}

bool singleton(const SetDesc& m) {
  auto ps = std::get_if<sets::Points>(&m.v);
  return ps && ps->points.size() == 1;
}

Validation fail(std::string detail) { return {false, std::move(detail)}; }

}  // namespace

Validation validate_family(const Space& s, const WitnessFamily& w) {
  if (w.members.empty()) return fail("empty family");
  std::vector<SetDesc> battery;
  CofMode mode = CofMode::Cof;
  for (std::size_t n = 0; n < w.members.size(); ++n) {
    const SetDesc& m = w.members[n];
    bool shape = true;
    switch (w.kind) {
      case WitnessKind::TopologicallyCountable: shape = singleton(m); break;
      case WitnessKind::FiniteSetCofinal: shape = std::holds_alternative<sets::Points>(m.v); break;
      case WitnessKind::Hemicompact:
      case WitnessKind::NearlyHemicompact: shape = is_compact(s, m); break;
      case WitnessKind::RelativelyHemicompact:
      case WitnessKind::WeaklyRelativelyHemicompact:
      case WitnessKind::SigmaRelativelyCompact: shape = is_relatively_compact(s, m); break;
    }
    if (!shape) {
      return fail("member " + std::to_string(n) + " " + to_string(m) + " does not fit " + witness_kind_name(w.kind));
    }
  }
  switch (w.kind) {
    case WitnessKind::TopologicallyCountable:
      battery = point_sets(s);
      mode = CofMode::CofHat;
      break;
    case WitnessKind::FiniteSetCofinal:
      battery = s.batteries.finite_sets;
      mode = CofMode::CofHat;
      break;
    case WitnessKind::Hemicompact:
    case WitnessKind::WeaklyRelativelyHemicompact: battery = s.batteries.compacts; break;
    case WitnessKind::NearlyHemicompact:
      battery = s.batteries.compacts;
      mode = CofMode::CofHat;
      break;
    case WitnessKind::RelativelyHemicompact: battery = s.batteries.relcompacts; break;
    case WitnessKind::SigmaRelativelyCompact: battery = point_sets(s); break;
  }
  auto r = check_cofinality(s, w, battery, mode, w.members.size() - 1);
  if (!r.ok()) {
    return fail(std::string(witness_kind_name(w.kind)) + ": no member serves " + to_string(*r.counterexample) +
                " (" + cof_mode_name(mode) + ")");
  }
  return {};
}

namespace {

WitnessFamily checked(const Space& s, WitnessFamily w) {
  auto v = validate_family(s, w);
  if (!v.ok) throw Error(Errc::ConstraintViolation, v.detail);
  return w;
}

WitnessFamily retagged(const WitnessFamily& w, WitnessKind k) {
  WitnessFamily out = w;
  out.kind = k;
  return out;
}

}  // namespace

WitnessFamily implication_chain(const Space& s, const WitnessFamily& w) {
  switch (w.kind) {
    case WitnessKind::Hemicompact:
    case WitnessKind::RelativelyHemicompact:
      return checked(s, retagged(w, WitnessKind::WeaklyRelativelyHemicompact));
    case WitnessKind::WeaklyRelativelyHemicompact:
      return checked(s, retagged(w, WitnessKind::SigmaRelativelyCompact));
    case WitnessKind::TopologicallyCountable: {
      WitnessFamily out;
      out.kind = WitnessKind::NearlyHemicompact;
      std::vector<PointId> prefix;
      for (const auto& m : w.members) {
        const auto& pts = std::get<sets::Points>(m.v).points;
        prefix.insert(prefix.end(), pts.begin(), pts.end());
        out.members.push_back(points(prefix));
      }
      return checked(s, out);
    }
    default: break;
  }
  throw Error(Errc::Unsupported, std::string("no implication leaves ") + witness_kind_name(w.kind));
}

WitnessFamily regular_collapse(const Space& s, const WitnessFamily& w) {
  if (!s.flags.regular) throw Error(Errc::Unsupported, s.id + " is not flagged regular");
  WitnessKind target;
  if (w.kind == WitnessKind::RelativelyHemicompact) {
    target = WitnessKind::Hemicompact;
  } else if (w.kind == WitnessKind::Hemicompact) {
    target = WitnessKind::RelativelyHemicompact;
  } else {
    throw Error(Errc::Unsupported, std::string("regular collapse does not apply to ") + witness_kind_name(w.kind));
  }
  WitnessFamily out;
  out.kind = target;
  for (const auto& m : w.members) {
    auto c = closure(s, m);
    if (!c) throw Error(Errc::Unsupported, "closure unavailable for " + to_string(m) + " in " + s.id);
    out.members.push_back(std::move(*c));
  }
  return checked(s, out);
}

BridgeResult markov_menger_relcover_bridge(const game::P2CoverStrategy& sigma, const std::vector<Cover>& probes,
                                           std::size_t n) {
  if (probes.empty()) throw Error(Errc::Config, "bridge needs at least one probe");
  auto d = sigma.factory(0);
  BridgeResult out;
  std::optional<OpenDesc> acc;
  const Space& s = *probes.front().space();
  for (const auto& probe : probes) {
    UnionClosure fin = finite_union_closure(probe);
    auto picks = d(game::Window<Cover>{n, {fin.cover}}, nullptr);
    OpenDesc u;
    std::vector<std::size_t> used;
    for (std::size_t i : picks) {
      auto e = fin.cover.element(i);
      if (!e) throw Error(Errc::SelectorFailure, "selection index " + std::to_string(i) + " is out of range");
      u = unite(u, *e);
      auto m = fin.members(i);
      used.insert(used.end(), m.begin(), m.end());
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    try {
      acc = acc ? intersect(*acc, u) : u;
    } catch (const Error& e) {
      throw Error(Errc::NotExpressible, "bridge intersection with probe " + probe.name() + ": " + e.what());
    }
    out.subcovers.push_back(std::move(used));
  }
  out.a = *acc;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    OpenDesc cov;
    for (std::size_t j : out.subcovers[i]) cov = unite(cov, *probes[i].element(j));
    if (!open_subset(s, out.a, cov)) {
      throw Error(Errc::SelectorFailure, "bridge set is not inside the selection from probe " + probes[i].name());
    }
  }
  return out;
}

}  // namespace selgame::witnesses
