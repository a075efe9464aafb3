#include "selgame/strategies/chq.hpp"

#include <algorithm>
#include <set>

#include "selgame/topology/serialize.hpp"

namespace selgame::strategies {

using namespace topology;
using game::Window;

std::vector<PointId> named_complement(const OpenDesc& u) {
  bool all = false;
  std::optional<std::set<PointId>> named;
  std::set<PointId> singles;
  auto take = [&](const Atom& a) {
    if (std::holds_alternative<atoms::Whole>(a)) {
      all = true;
    } else if (auto c = std::get_if<atoms::CoNamed>(&a)) {
      std::set<PointId> ex(c->excluded.begin(), c->excluded.end());
      if (!named) {
        named = ex;
      } else {
        std::set<PointId> both;
        std::set_intersection(named->begin(), named->end(), ex.begin(), ex.end(), std::inserter(both, both.end()));
        named = both;
      }
    } else if (auto s = std::get_if<atoms::Singleton>(&a)) {
      singles.insert(s->point);
    }
  };
  for (const auto& a : u.atoms) {
    if (std::holds_alternative<atoms::Whole>(a)) return {};
    if (auto in = std::get_if<atoms::Inject>(&a); in && in->summand == 1) {
      for (const auto& b : in->inner->atoms) take(b);
    }
  }
  if (all) return {};
  if (!named) throw Error(Errc::NotExpressible, to_string(u) + " is not a named complement on the Fortissimo summand");
  std::vector<PointId> out;
  for (const auto& p : *named) {
    if (!singles.count(p)) out.push_back(p);
  }
  return out;
}

SetDesc chq_k(const std::vector<std::vector<PointId>>& a, std::size_t n) {
  std::vector<PointId> pts{PointId::infinity()};
  std::set<PointId> seen(pts.begin(), pts.end());
  for (std::size_t j = 0; j < n && j < a.size(); ++j) {
    for (std::size_t k = 0; k < n && k < a[j].size(); ++k) {
      if (seen.insert(a[j][k]).second) pts.push_back(a[j][k]);
    }
  }
  return set_union({inject(0, closed(0, 1)), inject(1, points(std::move(pts)))});
}

P1DualStrategy chq_p1_compact_open() {
  P1DualStrategy s;
  s.name = "chq_p1_compact_open";
  s.owner = game::Owner::P1;
  s.strength = game::Strength::Full;
  s.factory = [](std::uint64_t) {
    return [](const Window<OpenDesc>& w, nlohmann::json* audit) {
      std::vector<std::vector<PointId>> a;
      for (const auto& u : w.history) a.push_back(named_complement(u));
      SetDesc k = chq_k(a, w.round);
      if (audit) {
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto& aj : a) sizes.push_back(aj.size());
        *audit = {{"n", w.round}, {"named", sizes}, {"K", to_json(k)}};
      }
      return k;
    };
  };
  return s;
}

P2DualStrategy chq_naive_p2(std::size_t per_round, std::size_t pool) {
  P2DualStrategy s;
  s.name = "chq_naive_p2";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.factory = [per_round, pool](std::uint64_t seed) {
    return [per_round, pool, seed](const Window<SetDesc>& w, nlohmann::json*) {
      const SetDesc& k = w.history.back();
      std::vector<PointId> names;
      for (std::size_t i = 0; i < per_round; ++i) {
        PointId p = PointId::nat(game::splitmix64(seed + 31 * w.round + i) % pool);
        if (in_set(PointId::inject(1, p), k)) continue;
        if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
      }
      return unite(inject(0, whole()), inject(1, co_named(std::move(names))));
    };
  };
  return s;
}

P2DualStrategy chq_p2_finite_open() {
  P2DualStrategy s;
  s.name = "chq_p2_finite_open";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.factory = [](std::uint64_t) {
    return [](const Window<SetDesc>& w, nlohmann::json* audit) {
      auto ps = std::get_if<sets::Points>(&w.history.back().v);
      if (!ps) throw Error(Errc::TypeMismatch, "finite-open move is not a finite set");
      std::vector<Rational> xs;
      for (const auto& p : ps->points) {
        auto in = p.injected();
        if (in && in->summand == 0) xs.push_back(*in->point->numeric());
      }
      OpenDesc u = inject(1, whole());
      Rational length = 0;
      if (!xs.empty()) {
        Rational r = Rational(1) / (pow2(static_cast<unsigned>(w.round + 4)) * Rational(xs.size()));
        for (const auto& x : xs) u = unite(u, inject(0, interval(x - r, x + r)));
        length = 2 * r * Rational(xs.size());
      }
      if (audit) *audit = {{"n", w.round}, {"m", xs.size()}, {"length", to_string(length)}};
      return u;
    };
  };
  return s;
}

P1DualStrategy chq_point_enumerator(const SpacePtr& space, std::size_t per_round) {
  P1DualStrategy s;
  s.name = "chq_point_enumerator";
  s.owner = game::Owner::P1;
  s.strength = game::Strength::Predetermined;
  s.factory = [space, per_round](std::uint64_t) {
    return [space, per_round](const Window<OpenDesc>& w, nlohmann::json*) {
      std::vector<PointId> pts;
      for (std::size_t i = 0; i < per_round; ++i) pts.push_back(point_at(*space, w.round * per_round + i));
      return points(std::move(pts));
    };
  };
  return s;
}

namespace {

Rational interval_length(const OpenDesc& inner) {
  Rational sum = 0;
  for (const auto& a : inner.atoms) {
    if (std::holds_alternative<atoms::Whole>(a)) {
      sum += 1;
    } else if (auto iv = std::get_if<atoms::Interval>(&a)) {
      Rational lo = iv->lo ? std::max(*iv->lo, Rational(0)) : Rational(0);
      Rational hi = iv->hi ? std::min(*iv->hi, Rational(1)) : Rational(1);
      if (hi > lo) sum += hi - lo;
    }
  }
  return sum;
}

}  // namespace

MeasureLedger chq_measure_ledger(const Transcript& t) {
  MeasureLedger out;
  out.total = 0;
  for (const auto& r : t.rounds) {
    Rational len = 0;
    for (const auto& u : r.selected) {
      for (const auto& a : u.atoms) {
        if (std::holds_alternative<atoms::Whole>(a)) len += 1;
        if (auto in = std::get_if<atoms::Inject>(&a); in && in->summand == 0) len += interval_length(*in->inner);
      }
    }
    if (len * pow2(static_cast<unsigned>(r.n + 2)) >= 1) out.per_round_ok = false;
    out.per_round.push_back(len);
    out.total += len;
  }
  out.total_ok = out.total * 2 < 1;
  return out;
}

}  // namespace selgame::strategies
