#include "selgame/topology/witness_family.hpp"

#include <algorithm>

#include "selgame/error.hpp"

namespace selgame::topology {
namespace {

constexpr std::pair<WitnessKind, const char*> kKindNames[] = {
    {WitnessKind::TopologicallyCountable, "TopologicallyCountable"},
    {WitnessKind::SigmaRelativelyCompact, "SigmaRelativelyCompact"},
    {WitnessKind::Hemicompact, "Hemicompact"},
    {WitnessKind::NearlyHemicompact, "NearlyHemicompact"},
    {WitnessKind::RelativelyHemicompact, "RelativelyHemicompact"},
    {WitnessKind::WeaklyRelativelyHemicompact, "WeaklyRelativelyHemicompact"},
    {WitnessKind::FiniteSetCofinal, "FiniteSetCofinal"},
};

}  // namespace

const char* witness_kind_name(WitnessKind k) {
  for (auto [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

WitnessKind parse_witness_kind(const std::string& name) {
  for (auto [kind, n] : kKindNames) {
    if (name == n) return kind;
  }
  throw Error(Errc::Config, "unknown witness kind '" + name + "'");
}

const SetDesc& WitnessFamily::at(std::size_t n) const {
  if (members.empty()) throw Error(Errc::MissingWitness, "empty witness family");
  return members[std::min(n, members.size() - 1)];
}

WitnessFamily witness_from_pattern(WitnessKind kind, const std::string& pattern, std::size_t count) {
  WitnessFamily w;
  w.kind = kind;
  w.pattern = pattern;
  w.pattern_count = count;
  for (std::size_t n = 0; n < count; ++n) {
    Rational r(n);
    if (pattern == "balls") {
      w.members.push_back(closed(-r, r));
    } else if (pattern == "open_balls") {
      w.members.push_back(open_set(-r, r));
    } else if (pattern == "initial_segments") {
      std::vector<PointId> pts;
      for (Nat i = 0; i <= n; ++i) pts.push_back(PointId::nat(i));
      w.members.push_back(points(std::move(pts)));
    } else if (pattern == "naturals") {
      w.members.push_back(point_set(PointId::nat(n)));
    } else if (pattern == "integers") {
      Rational z = n % 2 == 0 ? Rational(n / 2) : Rational(-static_cast<long long>((n + 1) / 2));
      w.members.push_back(point_set(PointId::rat(z)));
    } else if (pattern == "words") {
      w.members.push_back(point_set(PointId::word(combinatorics::enum_finseq(n))));
    } else {
      throw Error(Errc::Config, "unknown witness pattern '" + pattern + "'");
    }
  }
  return w;
}

}  // namespace selgame::topology
