#include "selgame/topology/space.hpp"

#include <algorithm>

#include "selgame/error.hpp"

namespace selgame::topology {
namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

constexpr std::pair<SpaceKind, const char*> kKindNames[] = {
    {SpaceKind::DiscreteN, "DiscreteN"},   {SpaceKind::RationalLine, "RationalLine"},
    {SpaceKind::RealLine, "RealLine"},     {SpaceKind::UnitInterval, "UnitInterval"},
    {SpaceKind::Baire, "Baire"},           {SpaceKind::Fortissimo, "Fortissimo"},
    {SpaceKind::RightOrder, "RightOrder"}, {SpaceKind::Sorgenfrey, "Sorgenfrey"},
    {SpaceKind::OnePoint, "OnePoint"},     {SpaceKind::Sum, "Sum"},
    {SpaceKind::Product, "Product"},
};

bool numeric_kind(SpaceKind k) {
  return k == SpaceKind::RationalLine || k == SpaceKind::RealLine || k == SpaceKind::UnitInterval ||
         k == SpaceKind::RightOrder || k == SpaceKind::Sorgenfrey;
}

[[noreturn]] void mismatch(const Space& s, const std::string& what) {
  throw Error(Errc::TypeMismatch, what + " does not belong to space " + s.id + " (" + space_kind_name(s.kind) + ")");
}

bool in_unit(const Rational& x) { return x >= 0 && x <= 1; }

}  // namespace

const char* space_kind_name(SpaceKind k) {
  for (auto [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

SpaceKind parse_space_kind(const std::string& name) {
  for (auto [kind, n] : kKindNames) {
    if (name == n) return kind;
  }
  throw Error(Errc::Config, "unknown space kind '" + name + "'");
}

const char* kind_label(const Space& s) { return s.power ? "Power" : space_kind_name(s.kind); }

const WitnessFamily& Space::witness(const std::string& name) const {
  auto it = witnesses.find(name);
  if (it == witnesses.end()) throw Error(Errc::MissingWitness, "space " + id + " has no witness '" + name + "'");
  return it->second;
}

SpaceFlags default_flags(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Fortissimo: return {true, true, false, true};
    case SpaceKind::RightOrder: return {false, false, true, false};
    case SpaceKind::Sorgenfrey: return {true, true, false, false};
    default: return {};
  }
}

SpacePtr make_space(std::string id, SpaceKind kind) {
  if (kind == SpaceKind::Sum || kind == SpaceKind::Product) {
    throw Error(Errc::Config, "compound spaces need their parts");
  }
  auto s = std::make_shared<Space>();
  s->id = std::move(id);
  s->kind = kind;
  s->flags = default_flags(kind);
  return s;
}

namespace {

SpaceFlags combined_flags(const std::vector<SpacePtr>& parts) {
  SpaceFlags f;
  for (const auto& p : parts) {
    f.t1 = f.t1 && p->flags.t1;
    f.regular = f.regular && p->flags.regular;
    f.second_countable = f.second_countable && p->flags.second_countable;
    f.fidelity_caveat = f.fidelity_caveat || p->flags.fidelity_caveat;
  }
  return f;
}

}  // namespace

SpacePtr make_product(std::string id, std::vector<SpacePtr> factors) {
  if (factors.empty()) throw Error(Errc::Config, "product needs factors");
  auto s = std::make_shared<Space>();
  s->id = std::move(id);
  s->kind = SpaceKind::Product;
  s->flags = combined_flags(factors);
  if (factors.size() == 2) {
    s->tail = factors[1];
  } else if (factors.size() > 2) {
    s->tail = make_product(s->id + "/tail", std::vector<SpacePtr>(factors.begin() + 1, factors.end()));
  }
  s->parts = std::move(factors);
  return s;
}

SpacePtr make_power(std::string id, SpacePtr base, std::size_t n) {
  auto p = make_product(std::move(id), std::vector<SpacePtr>(n, base));
  std::const_pointer_cast<Space>(p)->power = true;
  return p;
}

SpacePtr make_sum(std::string id, std::vector<SpacePtr> summands) {
  if (summands.empty()) throw Error(Errc::Config, "sum needs summands");
  auto s = std::make_shared<Space>();
  s->id = std::move(id);
  s->kind = SpaceKind::Sum;
  s->flags = combined_flags(summands);
  s->parts = std::move(summands);
  return s;
}

SpacePtr with_data(const SpacePtr& base, Batteries batteries, std::map<std::string, WitnessFamily> witnesses) {
  auto s = std::make_shared<Space>(*base);
  s->batteries = std::move(batteries);
  s->witnesses = std::move(witnesses);
  return s;
}

bool valid_point(const Space& s, const PointId& p) {
  switch (s.kind) {
    case SpaceKind::DiscreteN: return std::holds_alternative<Nat>(p.v);
    case SpaceKind::UnitInterval: {
      auto r = std::get_if<Rational>(&p.v);
      return r && in_unit(*r);
    }
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::RightOrder:
    case SpaceKind::Sorgenfrey: return std::holds_alternative<Rational>(p.v);
    case SpaceKind::Baire: return std::holds_alternative<Word>(p.v);
    case SpaceKind::Fortissimo: return std::holds_alternative<Nat>(p.v) || std::holds_alternative<Infinity>(p.v);
    case SpaceKind::OnePoint: {
      auto n = std::get_if<Nat>(&p.v);
      return n && *n == 0;
    }
    case SpaceKind::Product: {
      auto cs = p.coords();
      if (!cs || cs->size() != s.parts.size()) return false;
      for (std::size_t i = 0; i < cs->size(); ++i) {
        if (!valid_point(*s.parts[i], (*cs)[i])) return false;
      }
      return true;
    }
    case SpaceKind::Sum: {
      auto ip = p.injected();
      return ip && ip->summand < s.parts.size() && valid_point(*s.parts[ip->summand], *ip->point);
    }
  }
  return false;
}

void check_point(const Space& s, const PointId& p) {
  if (!valid_point(s, p)) mismatch(s, "point " + to_string(p));
}

void check_open(const Space& s, const OpenDesc& u) {
  for (const auto& a : u.atoms) {
    if (std::holds_alternative<atoms::Whole>(a)) continue;
    bool ok = std::visit(
        overloaded{
            [&](const atoms::Singleton& x) {
              if (s.kind == SpaceKind::Fortissimo) return std::holds_alternative<Nat>(x.point.v);
              return (s.kind == SpaceKind::DiscreteN || s.kind == SpaceKind::OnePoint) && valid_point(s, x.point);
            },
            [&](const atoms::Interval& iv) {
              if (s.kind == SpaceKind::RightOrder) return !iv.hi.has_value();
              return numeric_kind(s.kind) || s.kind == SpaceKind::DiscreteN;
            },
            [&](const atoms::HalfOpen&) { return s.kind == SpaceKind::Sorgenfrey; },
            [&](const atoms::Cylinder&) { return s.kind == SpaceKind::Baire; },
            [&](const atoms::CoNamed& c) {
              if (s.kind == SpaceKind::Fortissimo) {
                return std::all_of(c.excluded.begin(), c.excluded.end(),
                                   [](const PointId& p) { return std::holds_alternative<Nat>(p.v); });
              }
              return s.kind == SpaceKind::DiscreteN &&
                     std::all_of(c.excluded.begin(), c.excluded.end(),
                                 [&](const PointId& p) { return valid_point(s, p); });
            },
            [&](const atoms::Rectangle& r) {
              if (s.kind != SpaceKind::Product || r.factors.size() != s.parts.size()) return false;
              for (std::size_t i = 0; i < r.factors.size(); ++i) check_open(*s.parts[i], r.factors[i]);
              return true;
            },
            [&](const atoms::Inject& in) {
              if (s.kind != SpaceKind::Sum || in.summand >= s.parts.size()) return false;
              check_open(*s.parts[in.summand], *in.inner);
              return true;
            },
            [&](const atoms::Whole&) { return true; },
        },
        a);
    if (!ok) mismatch(s, "open set " + to_string(OpenDesc{{a}}));
  }
}

void check_set(const Space& s, const SetDesc& k) {
  bool ok = std::visit(overloaded{
                           [&](const sets::Points& ps) {
                             for (const auto& p : ps.points) check_point(s, p);
                             return true;
                           },
                           [&](const sets::Closed& c) {
                             if (s.kind == SpaceKind::UnitInterval) return in_unit(c.lo) && in_unit(c.hi);
                             return numeric_kind(s.kind);
                           },
                           [&](const sets::Open& o) {
                             if (s.kind == SpaceKind::UnitInterval) return in_unit(o.lo) && in_unit(o.hi);
                             return numeric_kind(s.kind);
                           },
                           [&](const sets::Product& pr) {
                             if (s.kind != SpaceKind::Product || pr.factors.size() != s.parts.size()) return false;
                             for (std::size_t i = 0; i < pr.factors.size(); ++i) check_set(*s.parts[i], pr.factors[i]);
                             return true;
                           },
                           [&](const sets::Inject& in) {
                             if (s.kind != SpaceKind::Sum || in.summand >= s.parts.size()) return false;
                             check_set(*s.parts[in.summand], *in.inner);
                             return true;
                           },
                           [&](const sets::Union& u) {
                             for (const auto& part : u.parts) check_set(s, part);
                             return true;
                           },
                       },
                       k.v);
  if (!ok) mismatch(s, "set " + to_string(k));
}

bool member(const Space& s, const PointId& p, const OpenDesc& u) {
  check_point(s, p);
  check_open(s, u);
  return topology::member(p, u);
}

bool contains(const Space& s, const SetDesc& k, const OpenDesc& u) {
  check_set(s, k);
  check_open(s, u);
  return topology::contains(k, u);
}

bool subset(const Space& s, const SetDesc& b, const SetDesc& a) {
  check_set(s, b);
  check_set(s, a);
  return topology::subset(b, a);
}

namespace {

struct Span {
  Rational lo, hi;
};

Span cut_span(const Cuts& cuts) {
  Rational lo = 0, hi = 0;
  if (!cuts.values.empty()) {
    lo = std::min(lo, *cuts.values.begin());
    hi = std::max(hi, *cuts.values.rbegin());
  }
  return {lo - 1, hi + 1};
}

std::vector<PointId> naturals_upto(const Cuts& cuts) {
  Span sp = cut_span(cuts);
  std::vector<PointId> out;
  Nat top = static_cast<Nat>(floor(sp.hi));
  for (Nat i = 0; i <= top; ++i) out.push_back(PointId::nat(i));
  return out;
}

const Cuts kEmptyCuts{};

std::optional<SetDesc> atom_region(const Space& s, const Atom& a, const Cuts& cuts);

std::optional<SetDesc> open_region(const Space& s, const OpenDesc& u, const Cuts& cuts) {
  std::vector<SetDesc> parts;
  for (const auto& a : u.atoms) {
    auto r = atom_region(s, a, cuts);
    if (!r) return std::nullopt;
    parts.push_back(std::move(*r));
  }
  if (parts.size() == 1) return parts.front();
  return set_union(std::move(parts));
}

std::optional<SetDesc> atom_region(const Space& s, const Atom& a, const Cuts& cuts) {
  if (std::holds_alternative<atoms::Whole>(a)) return whole_region(s, cuts);
  if (auto x = std::get_if<atoms::Singleton>(&a)) return point_set(x->point);
  switch (s.kind) {
    case SpaceKind::DiscreteN:
    case SpaceKind::Fortissimo: {
      std::vector<PointId> pts;
      if (s.kind == SpaceKind::Fortissimo) pts.push_back(PointId::infinity());
      for (auto& p : naturals_upto(cuts)) pts.push_back(std::move(p));
      std::vector<PointId> kept;
      for (auto& p : pts) {
        if (member(p, a)) kept.push_back(std::move(p));
      }
      return points(std::move(kept));
    }
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::RightOrder:
    case SpaceKind::Sorgenfrey:
    case SpaceKind::UnitInterval: {
      Span sp = cut_span(cuts);
      Rational lo, hi;
      bool closed_lo = false;
      if (auto iv = std::get_if<atoms::Interval>(&a)) {
        lo = iv->lo ? *iv->lo : sp.lo;
        hi = iv->hi ? *iv->hi : sp.hi;
      } else if (auto h = std::get_if<atoms::HalfOpen>(&a)) {
        lo = h->lo;
        hi = h->hi;
        closed_lo = true;
      } else {
        return std::nullopt;
      }
      std::vector<SetDesc> parts;
      if (s.kind == SpaceKind::UnitInterval) {
        for (Rational end : {Rational(0), Rational(1)}) {
          if (member(PointId::rat(end), a)) parts.push_back(point_set(PointId::rat(end)));
        }
        lo = std::max(lo, Rational(0));
        hi = std::min(hi, Rational(1));
      }
      if (lo < hi) parts.push_back(open_set(lo, hi));
      if (closed_lo) parts.push_back(point_set(PointId::rat(lo)));
      return set_union(std::move(parts));
    }
    case SpaceKind::OnePoint: return point_set(PointId::nat(0));
    case SpaceKind::Baire: return std::nullopt;
    case SpaceKind::Product: {
      auto r = std::get_if<atoms::Rectangle>(&a);
      if (!r) return std::nullopt;
      std::vector<SetDesc> fs;
      for (std::size_t i = 0; i < r->factors.size(); ++i) {
        const Cuts* c = cuts.find_child(i);
        auto f = open_region(*s.parts[i], r->factors[i], c ? *c : kEmptyCuts);
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
      }
      return product(std::move(fs));
    }
    case SpaceKind::Sum: {
      auto in = std::get_if<atoms::Inject>(&a);
      if (!in) return std::nullopt;
      const Cuts* c = cuts.find_child(in->summand);
      auto f = open_region(*s.parts[in->summand], *in->inner, c ? *c : kEmptyCuts);
      if (!f) return std::nullopt;
      return inject(in->summand, std::move(*f));
    }
  }
  return std::nullopt;
}

bool word_prefix(const Word& prefix, const Word& w) {
  if (prefix.size() > w.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), w.begin());
}

}  // namespace

std::optional<SetDesc> whole_region(const Space& s, const Cuts& cuts) {
  switch (s.kind) {
    case SpaceKind::DiscreteN: return points(naturals_upto(cuts));
    case SpaceKind::Fortissimo: {
      auto pts = naturals_upto(cuts);
      pts.push_back(PointId::infinity());
      return points(std::move(pts));
    }
    case SpaceKind::UnitInterval: return closed(0, 1);
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::RightOrder:
    case SpaceKind::Sorgenfrey: {
      Span sp = cut_span(cuts);
      return closed(sp.lo, sp.hi);
    }
    case SpaceKind::OnePoint: return point_set(PointId::nat(0));
    case SpaceKind::Baire: return std::nullopt;
    case SpaceKind::Product: {
      std::vector<SetDesc> fs;
      for (std::size_t i = 0; i < s.parts.size(); ++i) {
        const Cuts* c = cuts.find_child(i);
        auto f = whole_region(*s.parts[i], c ? *c : kEmptyCuts);
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
      }
      return product(std::move(fs));
    }
    case SpaceKind::Sum: {
      std::vector<SetDesc> parts;
      for (std::size_t i = 0; i < s.parts.size(); ++i) {
        const Cuts* c = cuts.find_child(i);
        auto f = whole_region(*s.parts[i], c ? *c : kEmptyCuts);
        if (!f) return std::nullopt;
        parts.push_back(inject(i, std::move(*f)));
      }
      return set_union(std::move(parts));
    }
  }
  return std::nullopt;
}

bool open_subset(const Space& s, const OpenDesc& u, const OpenDesc& w) {
  check_open(s, u);
  check_open(s, w);
  for (const auto& a : u.atoms) {
    if (s.kind == SpaceKind::Baire) {
      bool whole_w = std::any_of(w.atoms.begin(), w.atoms.end(),
                                 [](const Atom& b) { return std::holds_alternative<atoms::Whole>(b); });
      if (whole_w) continue;
      const Word* t = nullptr;
      if (auto c = std::get_if<atoms::Cylinder>(&a)) t = &c->prefix;
      static const Word kRoot;
      if (std::holds_alternative<atoms::Whole>(a)) t = &kRoot;
      bool covered = t && std::any_of(w.atoms.begin(), w.atoms.end(), [&](const Atom& b) {
                       auto c = std::get_if<atoms::Cylinder>(&b);
                       return c && word_prefix(c->prefix, *t);
                     });
      if (!covered) return false;
      continue;
    }
    Cuts cuts;
    collect_cuts(u, cuts);
    collect_cuts(w, cuts);
    auto region = atom_region(s, a, cuts);
    if (!region) throw Error(Errc::Unsupported, "open inclusion undecided for " + to_string(OpenDesc{{a}}));
    for (const auto& p : representatives(*region, cuts)) {
      if (!topology::member(p, w)) return false;
    }
  }
  return true;
}

bool in_sat(const Space& s, const PointId& x, const SetDesc& a) {
  check_point(s, x);
  if (s.flags.t1) return in_set(x, a);
  if (auto u = std::get_if<sets::Union>(&a.v)) {
    return std::any_of(u->parts.begin(), u->parts.end(), [&](const SetDesc& p) { return in_sat(s, x, p); });
  }
  switch (s.kind) {
    case SpaceKind::RightOrder: {
      Rational v = *x.numeric();
      if (auto ps = std::get_if<sets::Points>(&a.v)) {
        return std::any_of(ps->points.begin(), ps->points.end(),
                           [&](const PointId& p) { return v >= *p.numeric(); });
      }
      if (auto c = std::get_if<sets::Closed>(&a.v)) return c->lo <= c->hi && v >= c->lo;
      if (auto o = std::get_if<sets::Open>(&a.v)) return o->lo < o->hi && v > o->lo;
      break;
    }
    case SpaceKind::Product: {
      const auto& xs = *x.coords();
      if (auto pr = std::get_if<sets::Product>(&a.v)) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (!in_sat(*s.parts[i], xs[i], pr->factors[i])) return false;
        }
        return true;
      }
      if (auto ps = std::get_if<sets::Points>(&a.v)) {
        return std::any_of(ps->points.begin(), ps->points.end(), [&](const PointId& p) {
          for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!in_sat(*s.parts[i], xs[i], point_set((*p.coords())[i]))) return false;
          }
          return true;
        });
      }
      break;
    }
    case SpaceKind::Sum: {
      const auto* ip = x.injected();
      if (auto in = std::get_if<sets::Inject>(&a.v)) {
        return in->summand == ip->summand && in_sat(*s.parts[ip->summand], *ip->point, *in->inner);
      }
      if (auto ps = std::get_if<sets::Points>(&a.v)) {
        return std::any_of(ps->points.begin(), ps->points.end(), [&](const PointId& p) {
          auto pi = p.injected();
          return pi->summand == ip->summand && in_sat(*s.parts[ip->summand], *ip->point, point_set(*pi->point));
        });
      }
      break;
    }
    default: break;
  }
  throw Error(Errc::Unsupported, std::string("saturation unavailable on ") + space_kind_name(s.kind));
}

bool subset_sat(const Space& s, const SetDesc& b, const SetDesc& a) {
  check_set(s, b);
  check_set(s, a);
  Cuts cuts;
  collect_cuts(a, cuts);
  for (const auto& p : representatives(b, cuts)) {
    if (!in_sat(s, p, a)) return false;
  }
  return true;
}

bool is_compact(const Space& s, const SetDesc& k) {
  if (is_empty(k)) return true;
  return std::visit(overloaded{
                        [](const sets::Points&) { return true; },
                        [&](const sets::Closed&) {
                          return s.kind == SpaceKind::RealLine || s.kind == SpaceKind::UnitInterval ||
                                 s.kind == SpaceKind::RightOrder;
                        },
                        [](const sets::Open&) { return false; },
                        [&](const sets::Product& pr) {
                          if (s.kind != SpaceKind::Product) return false;
                          for (std::size_t i = 0; i < pr.factors.size(); ++i) {
                            if (!is_compact(*s.parts[i], pr.factors[i])) return false;
                          }
                          return true;
                        },
                        [&](const sets::Inject& in) {
                          return s.kind == SpaceKind::Sum && is_compact(*s.parts[in.summand], *in.inner);
                        },
                        [&](const sets::Union& u) {
                          return std::all_of(u.parts.begin(), u.parts.end(),
                                             [&](const SetDesc& p) { return is_compact(s, p); });
                        },
                    },
                    k.v);
}

bool is_relatively_compact(const Space& s, const SetDesc& k) {
  if (is_compact(s, k)) return true;
  return std::visit(overloaded{
                        [&](const sets::Open&) {
                          return s.kind == SpaceKind::RealLine || s.kind == SpaceKind::UnitInterval ||
                                 s.kind == SpaceKind::RightOrder;
                        },
                        [&](const sets::Product& pr) {
                          if (s.kind != SpaceKind::Product) return false;
                          for (std::size_t i = 0; i < pr.factors.size(); ++i) {
                            if (!is_relatively_compact(*s.parts[i], pr.factors[i])) return false;
                          }
                          return true;
                        },
                        [&](const sets::Inject& in) {
                          return s.kind == SpaceKind::Sum && is_relatively_compact(*s.parts[in.summand], *in.inner);
                        },
                        [&](const sets::Union& u) {
                          return std::all_of(u.parts.begin(), u.parts.end(),
                                             [&](const SetDesc& p) { return is_relatively_compact(s, p); });
                        },
                        [](const auto&) { return false; },
                    },
                    k.v);
}

namespace {

std::vector<Nat> split_code(Nat k, std::size_t n) {
  std::vector<Nat> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto [a, rest] = combinatorics::cantor_unpair(k);
    out.push_back(a);
    k = rest;
  }
  out.push_back(k);
  return out;
}

}  // namespace

PointId point_at(const Space& s, Nat k) {
  switch (s.kind) {
    case SpaceKind::DiscreteN: return PointId::nat(k);
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::RightOrder:
    case SpaceKind::Sorgenfrey: return PointId::rat(rational_from_code(k));
    case SpaceKind::UnitInterval: {
      Rational r = abs(rational_from_code(k));
      return PointId::rat(r / (1 + r));
    }
    case SpaceKind::Baire: return PointId::word(combinatorics::enum_finseq(k));
    case SpaceKind::Fortissimo: return k == 0 ? PointId::infinity() : PointId::nat(k - 1);
    case SpaceKind::OnePoint: return PointId::nat(0);
    case SpaceKind::Product: {
      auto codes = split_code(k, s.parts.size());
      std::vector<PointId> cs;
      for (std::size_t i = 0; i < codes.size(); ++i) cs.push_back(point_at(*s.parts[i], codes[i]));
      return PointId::tuple(std::move(cs));
    }
    case SpaceKind::Sum: {
      std::size_t n = s.parts.size();
      return PointId::inject(k % n, point_at(*s.parts[k % n], k / n));
    }
  }
  return PointId::nat(0);
}

std::optional<OpenDesc> basis_at(const Space& s, Nat k) {
  switch (s.kind) {
    case SpaceKind::DiscreteN: return singleton(PointId::nat(k));
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::UnitInterval: {
      auto [a, b] = combinatorics::cantor_unpair(k);
      Rational lo = rational_from_code(a), hi = rational_from_code(b);
      if (lo >= hi) return std::nullopt;
      return interval(lo, hi);
    }
    case SpaceKind::RightOrder: return right_ray(rational_from_code(k));
    case SpaceKind::Baire: return cylinder(combinatorics::enum_finseq(k));
    case SpaceKind::OnePoint: return k == 0 ? std::optional<OpenDesc>(whole()) : std::nullopt;
    case SpaceKind::Product: {
      auto codes = split_code(k, s.parts.size());
      std::vector<OpenDesc> fs;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        auto f = basis_at(*s.parts[i], codes[i]);
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
      }
      return rectangle(std::move(fs));
    }
    case SpaceKind::Sum: {
      std::size_t n = s.parts.size();
      auto f = basis_at(*s.parts[k % n], k / n);
      if (!f) return std::nullopt;
      return inject(k % n, std::move(*f));
    }
    case SpaceKind::Fortissimo:
    case SpaceKind::Sorgenfrey: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::optional<OpenDesc> basic_in_atom(const Space& s, const PointId& x, const Atom& a) {
  if (!topology::member(x, a)) return std::nullopt;
  auto xv = x.numeric();
  switch (s.kind) {
    case SpaceKind::DiscreteN: return singleton(x);
    case SpaceKind::OnePoint: return whole();
    case SpaceKind::Fortissimo:
      if (std::holds_alternative<Nat>(x.v)) return singleton(x);
      if (std::holds_alternative<atoms::Whole>(a)) return co_named({});
      return OpenDesc{{a}};
    case SpaceKind::Baire:
      if (std::holds_alternative<atoms::Whole>(a)) return cylinder({});
      return OpenDesc{{a}};
    case SpaceKind::RightOrder:
      if (auto iv = std::get_if<atoms::Interval>(&a)) return right_ray(*iv->lo);
      return right_ray(*xv - 1);
    case SpaceKind::Sorgenfrey:
      if (auto h = std::get_if<atoms::HalfOpen>(&a)) return half_open(h->lo, h->hi);
      if (auto iv = std::get_if<atoms::Interval>(&a)) {
        return half_open(*xv, iv->hi ? *iv->hi : *xv + 1);
      }
      return half_open(*xv, *xv + 1);
    case SpaceKind::RationalLine:
    case SpaceKind::RealLine:
    case SpaceKind::UnitInterval:
      if (auto iv = std::get_if<atoms::Interval>(&a)) {
        return interval(iv->lo ? *iv->lo : *xv - 1, iv->hi ? *iv->hi : *xv + 1);
      }
      return interval(*xv - 1, *xv + 1);
    case SpaceKind::Product: {
      const auto& xs = *x.coords();
      std::vector<OpenDesc> fs;
      auto r = std::get_if<atoms::Rectangle>(&a);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        auto f = basic_around(*s.parts[i], xs[i], r ? r->factors[i] : whole());
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
      }
      return rectangle(std::move(fs));
    }
    case SpaceKind::Sum: {
      const auto* ip = x.injected();
      auto in = std::get_if<atoms::Inject>(&a);
      auto f = basic_around(*s.parts[ip->summand], *ip->point, in ? *in->inner : whole());
      if (!f) return std::nullopt;
      return inject(ip->summand, std::move(*f));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OpenDesc> basic_around(const Space& s, const PointId& x, const OpenDesc& u) {
  for (const auto& a : u.atoms) {
    if (auto b = basic_in_atom(s, x, a)) return b;
  }
  return std::nullopt;
}

std::optional<PointId> point_outside(const Space& s, const OpenDesc& u) {
  if (s.kind == SpaceKind::Baire) {
    Nat top = 0;
    for (const auto& a : u.atoms) {
      if (std::holds_alternative<atoms::Whole>(a)) return std::nullopt;
      if (auto c = std::get_if<atoms::Cylinder>(&a)) {
        if (c->prefix.empty()) return std::nullopt;
        top = std::max(top, c->prefix.front() + 1);
      }
    }
    return PointId::word({top});
  }
  Cuts cuts;
  collect_cuts(u, cuts);
  if (auto region = whole_region(s, cuts)) {
    for (const auto& p : representatives(*region, cuts)) {
      if (!topology::member(p, u)) return p;
    }
    return std::nullopt;
  }
  for (Nat k = 0; k < 4096; ++k) {
    PointId p = point_at(s, k);
    if (!topology::member(p, u)) return p;
  }
  return std::nullopt;
}

std::optional<SetDesc> closure(const Space& s, const SetDesc& k) {
  if (s.kind == SpaceKind::Product) {
    if (auto pr = std::get_if<sets::Product>(&k.v)) {
      std::vector<SetDesc> fs;
      for (std::size_t i = 0; i < pr->factors.size(); ++i) {
        auto f = closure(*s.parts[i], pr->factors[i]);
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
      }
      return product(std::move(fs));
    }
  }
  if (s.kind == SpaceKind::Sum) {
    if (auto in = std::get_if<sets::Inject>(&k.v)) {
      auto f = closure(*s.parts[in->summand], *in->inner);
      if (!f) return std::nullopt;
      return inject(in->summand, std::move(*f));
    }
  }
  if (auto u = std::get_if<sets::Union>(&k.v)) {
    std::vector<SetDesc> parts;
    for (const auto& p : u->parts) {
      auto c = closure(s, p);
      if (!c) return std::nullopt;
      parts.push_back(std::move(*c));
    }
    return set_union(std::move(parts));
  }
  // Finite sets are closed in T1 spaces.
  if (std::holds_alternative<sets::Points>(k.v)) {
    if (s.flags.t1) return k;
    return std::nullopt;
  }
  bool line = s.kind == SpaceKind::RealLine || s.kind == SpaceKind::UnitInterval || s.kind == SpaceKind::RationalLine;
  if (!line) return std::nullopt;
  if (std::holds_alternative<sets::Closed>(k.v)) return k;
  if (auto o = std::get_if<sets::Open>(&k.v)) {
    if (o->lo >= o->hi) return points({});
    return closed(o->lo, o->hi);
  }
  return std::nullopt;
}

}  // namespace selgame::topology
