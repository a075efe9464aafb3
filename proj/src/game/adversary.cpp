#include "selgame/game/adversary.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "selgame/combinatorics/sequences.hpp"

namespace selgame::game {

using namespace topology;

namespace {

constexpr std::size_t kScan = 4096;
constexpr Nat kFar = 1000000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return state_ = splitmix64(state_); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // One of 0, 1/8, ..., 7/8.
  Rational eighth() { return Rational(static_cast<long long>(below(8))) / 8; }

 private:
  std::uint64_t state_;
};

bool line_like(SpaceKind k) {
  return k == SpaceKind::RealLine || k == SpaceKind::RationalLine || k == SpaceKind::DiscreteN;
}

// Open set of one factor containing every point of magnitude <= q.
OpenDesc level_open(const Space& s, std::size_t q, Rng& rng) {
  Rational lo = -Rational(static_cast<long long>(q)) - Rational(1, 2) - rng.eighth();
  Rational hi = Rational(static_cast<long long>(q)) + Rational(1, 2) + rng.eighth();
  switch (s.kind) {
    case SpaceKind::RealLine:
    case SpaceKind::RationalLine:
    case SpaceKind::DiscreteN: return interval(lo, hi);
    case SpaceKind::UnitInterval: return q == 0 ? interval(Rational(-1), Rational(1, 2) + rng.eighth() / 4) : whole();
    case SpaceKind::RightOrder: return right_ray(lo);
    case SpaceKind::Sorgenfrey: return half_open(lo, hi);
    case SpaceKind::OnePoint: return whole();
    case SpaceKind::Fortissimo: return co_named({PointId::nat(q + 1 + rng.below(3))});
    case SpaceKind::Baire: {
      OpenDesc u;
      for (Nat d = 0; d <= q; ++d) u = unite(u, cylinder({d}));
      return u;
    }
    default: throw Error(Errc::Unsupported, std::string("no adversary covers for ") + kind_label(s));
  }
}

OpenDesc level_element(const Space& s, std::size_t i, Rng& rng) {
  if (s.kind != SpaceKind::Product) return level_open(s, i, rng);
  const std::size_t n = s.parts.size();
  std::vector<OpenDesc> a, b;
  for (std::size_t f = 0; f < n; ++f) {
    a.push_back(level_open(*s.parts[f], f == 0 ? i : i + 1, rng));
    b.push_back(level_open(*s.parts[f], f == 0 ? i + 1 : i, rng));
  }
  return unite(rectangle(a), rectangle(b));
}

OpenDesc decoy(const Space& s, Rng& rng) {
  Nat far = kFar + rng.below(1000);
  if (line_like(s.kind) || s.kind == SpaceKind::Sorgenfrey) {
    Rational lo(static_cast<long long>(far));
    return s.kind == SpaceKind::Sorgenfrey ? half_open(lo, lo + 1) : interval(lo, lo + 1);
  }
  switch (s.kind) {
    case SpaceKind::Fortissimo: return singleton(PointId::nat(far));
    case SpaceKind::Baire: return cylinder({far});
    case SpaceKind::Product: {
      std::vector<OpenDesc> fs;
      for (const auto& p : s.parts) fs.push_back(decoy(*p, rng));
      return rectangle(fs);
    }
    default: return empty_open();
  }
}

Rational magnitude(const PointId& p) {
  if (auto r = p.numeric()) return abs(*r);
  if (auto w = p.as_word()) return w->empty() ? Rational(0) : Rational(static_cast<long long>(w->front()));
  if (auto cs = p.coords()) {
    Rational m = 0;
    for (const auto& c : *cs) m = std::max(m, magnitude(c));
    return m;
  }
  if (auto in = p.injected()) return magnitude(*in->point);
  return 0;
}

Rational magnitude(const SetDesc& k) {
  return std::visit(
      [](const auto& v) -> Rational {
        using T = std::decay_t<decltype(v)>;
        Rational m = 0;
        if constexpr (std::is_same_v<T, sets::Points>) {
          for (const auto& p : v.points) m = std::max(m, magnitude(p));
        } else if constexpr (std::is_same_v<T, sets::Closed> || std::is_same_v<T, sets::Open>) {
          m = std::max(abs(v.lo), abs(v.hi));
        } else if constexpr (std::is_same_v<T, sets::Product>) {
          for (const auto& f : v.factors) m = std::max(m, magnitude(f));
        } else if constexpr (std::is_same_v<T, sets::Inject>) {
          m = magnitude(*v.inner);
        } else {
          for (const auto& p : v.parts) m = std::max(m, magnitude(p));
        }
        return m;
      },
      k.v);
}

}  // namespace

Cover cylinder_cover(const SpacePtr& space, CoverClass cls) {
  auto elem = [](std::size_t i) -> std::optional<OpenDesc> { return cylinder(combinatorics::enum_finseq(i + 1)); };
  // The least index containing a set of words is the one-digit cylinder of their shared first digit.
  auto sel = [](const SetDesc& k) -> std::optional<std::size_t> {
    auto ps = std::get_if<sets::Points>(&k.v);
    if (!ps || ps->points.empty()) return std::nullopt;
    auto first = [](const PointId& p) {
      const Word& w = *p.as_word();
      return w.empty() ? Nat(0) : w.front();
    };
    Nat d = first(ps->points.front());
    for (const auto& p : ps->points) {
      if (first(p) != d) return std::nullopt;
    }
    return combinatorics::finseq_index({d}) - 1;
  };
  return Cover("cylinders", space, cls, elem, sel);
}

Cover adversary_cover(const SpacePtr& space, CoverClass cls, std::uint64_t seed) {
  const Space& s = *space;
  if (s.kind == SpaceKind::Baire && cls == CoverClass::O) return cylinder_cover(space, cls);
  if (s.kind == SpaceKind::OnePoint) {
    std::size_t first = Rng(seed).below(3);
    auto elem = [first](std::size_t i) -> std::optional<OpenDesc> { return i >= first ? whole() : empty_open(); };
    auto sel = [first](const SetDesc&) -> std::optional<std::size_t> { return first; };
    return Cover("adversary", space, cls, elem, sel);
  }
  Rng probe(seed);
  level_element(s, 0, probe);
  // Shared by the stream and the selector, which scans the stream.
  struct Memo {
    std::mutex mu;
    std::unordered_map<std::size_t, OpenDesc> elements;
  };
  auto memo = std::make_shared<Memo>();
  auto elem = [space, seed, memo](std::size_t i) -> std::optional<OpenDesc> {
    {
      std::lock_guard lock(memo->mu);
      if (auto it = memo->elements.find(i); it != memo->elements.end()) return it->second;
    }
    Rng rng(splitmix64(seed + i));
    OpenDesc e = level_element(*space, i, rng);
    std::lock_guard lock(memo->mu);
    return memo->elements.emplace(i, std::move(e)).first->second;
  };
  auto sel = [space, elem](const SetDesc& k) -> std::optional<std::size_t> {
    Rational m = magnitude(k);
    std::size_t start = 0;
    if (space->kind != SpaceKind::Fortissimo && m > 2) start = static_cast<std::size_t>(floor(m)) - 2;
    for (std::size_t i = start; i < start + kScan; ++i) {
      if (contains(k, *elem(i))) return i;
    }
    return std::nullopt;
  };
  return Cover("adversary", space, cls, elem, sel);
}

Cover mangle(const Cover& c, std::uint64_t seed, std::size_t block, std::size_t decoys) {
  const std::size_t width = block + decoys;
  auto perm = [seed, width](std::size_t b) {
    std::vector<std::size_t> p(width);
    for (std::size_t i = 0; i < width; ++i) p[i] = i;
    Rng rng(splitmix64(seed ^ (b * 0x9e3779b97f4a7c15ULL)));
    for (std::size_t i = width; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return p;
  };
  SpacePtr space = c.space();
  auto elem = [c, perm, width, block, seed, space](std::size_t m) -> std::optional<OpenDesc> {
    std::size_t b = m / width;
    std::size_t v = perm(b)[m % width];
    if (v >= block) {
      Rng rng(splitmix64(seed + m));
      return decoy(*space, rng);
    }
    auto e = c.element(b * block + v);
    return e ? *e : empty_open();
  };
  auto sel = [c, perm, width, block](const SetDesc& k) -> std::optional<std::size_t> {
    auto j = c.select(k);
    if (!j) return std::nullopt;
    std::size_t b = *j / block;
    auto p = perm(b);
    for (std::size_t s = 0; s < width; ++s) {
      if (p[s] == *j % block) return b * width + s;
    }
    return std::nullopt;
  };
  return Cover(c.name() + "~mangled", space, c.cover_class(), elem, sel);
}

P1CoverStrategy adversary_strategy(const SpacePtr& space, CoverClass cls) {
  P1CoverStrategy s;
  s.name = "adversary";
  s.owner = Owner::P1;
  s.strength = Strength::Predetermined;
  s.factory = [space, cls](std::uint64_t seed) {
    return [space, cls, seed](const Window<Selected>& w, nlohmann::json*) {
      std::uint64_t r = splitmix64(seed + 2 * w.round);
      Cover c = adversary_cover(space, cls, r);
      if (space->kind == SpaceKind::Baire && cls == CoverClass::O) return c.renamed("cylinders@" + std::to_string(w.round));
      return mangle(c, splitmix64(r + 1)).renamed("adversary@" + std::to_string(w.round));
    };
  };
  return s;
}

}  // namespace selgame::game
