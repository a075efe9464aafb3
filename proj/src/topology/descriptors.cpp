#include "selgame/topology/descriptors.hpp"

#include <algorithm>
#include <sstream>

#include "selgame/error.hpp"

namespace selgame::topology {

bool operator==(const InjectedPoint& a, const InjectedPoint& b) {
  return a.summand == b.summand && *a.point == *b.point;
}
bool operator<(const InjectedPoint& a, const InjectedPoint& b) {
  if (a.summand != b.summand) return a.summand < b.summand;
  return *a.point < *b.point;
}

namespace atoms {
bool operator==(const Rectangle& a, const Rectangle& b) { return a.factors == b.factors; }
bool operator==(const Inject& a, const Inject& b) { return a.summand == b.summand && *a.inner == *b.inner; }
}  // namespace atoms

namespace sets {
bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }
bool operator==(const Inject& a, const Inject& b) { return a.summand == b.summand && *a.inner == *b.inner; }
bool operator==(const Union& a, const Union& b) { return a.parts == b.parts; }
}  // namespace sets

std::optional<Rational> PointId::numeric() const {
  if (auto n = std::get_if<Nat>(&v)) return Rational(*n);
  if (auto r = std::get_if<Rational>(&v)) return *r;
  return std::nullopt;
}

OpenDesc empty_open() { return {}; }
OpenDesc whole() { return {{atoms::Whole{}}}; }
OpenDesc singleton(PointId p) { return {{atoms::Singleton{std::move(p)}}}; }
OpenDesc interval(std::optional<Rational> lo, std::optional<Rational> hi) {
  if (lo && hi && *lo >= *hi) return {};
  return {{atoms::Interval{std::move(lo), std::move(hi)}}};
}
OpenDesc right_ray(Rational lo) { return interval(std::move(lo), std::nullopt); }
OpenDesc half_open(Rational lo, Rational hi) {
  if (lo >= hi) return {};
  return {{atoms::HalfOpen{std::move(lo), std::move(hi)}}};
}
OpenDesc cylinder(Word prefix) { return {{atoms::Cylinder{std::move(prefix)}}}; }
OpenDesc co_named(std::vector<PointId> excluded) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return {{atoms::CoNamed{std::move(excluded)}}};
}
OpenDesc rectangle(std::vector<OpenDesc> factors) {
  for (const auto& f : factors) {
    if (f.is_empty()) return {};
  }
  return {{atoms::Rectangle{std::move(factors)}}};
}
OpenDesc inject(std::size_t summand, OpenDesc inner) {
  if (inner.is_empty()) return {};
  return {{atoms::Inject{summand, Box<OpenDesc>(std::move(inner))}}};
}
OpenDesc unite(const OpenDesc& a, const OpenDesc& b) {
  OpenDesc out = a;
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  return out;
}
OpenDesc unite(const std::vector<OpenDesc>& parts) {
  OpenDesc out;
  for (const auto& p : parts) out.atoms.insert(out.atoms.end(), p.atoms.begin(), p.atoms.end());
  return out;
}

SetDesc points(std::vector<PointId> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return {sets::Points{std::move(pts)}};
}
SetDesc point_set(PointId p) { return {sets::Points{{std::move(p)}}}; }
SetDesc closed(Rational lo, Rational hi) { return {sets::Closed{std::move(lo), std::move(hi)}}; }
SetDesc open_set(Rational lo, Rational hi) { return {sets::Open{std::move(lo), std::move(hi)}}; }
SetDesc product(std::vector<SetDesc> factors) { return {sets::Product{std::move(factors)}}; }
SetDesc inject(std::size_t summand, SetDesc inner) { return {sets::Inject{summand, Box<SetDesc>(std::move(inner))}}; }
SetDesc set_union(std::vector<SetDesc> parts) { return {sets::Union{std::move(parts)}}; }

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

bool word_extends(const Word& w, const Word& prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Nat digit = i < w.size() ? w[i] : 0;
    if (digit != prefix[i]) return false;
  }
  return true;
}

}  // namespace

bool member(const PointId& p, const Atom& a) {
  return std::visit(
      overloaded{
          [&](const atoms::Singleton& s) { return s.point == p; },
          [&](const atoms::Interval& iv) {
            if (auto n = std::get_if<Nat>(&p.v)) {
              const auto x = static_cast<unsigned long long>(*n);
              return (!iv.lo || *iv.lo < x) && (!iv.hi || *iv.hi > x);
            }
            auto x = std::get_if<Rational>(&p.v);
            return x && (!iv.lo || *iv.lo < *x) && (!iv.hi || *x < *iv.hi);
          },
          [&](const atoms::HalfOpen& h) {
            auto x = p.numeric();
            return x && h.lo <= *x && *x < h.hi;
          },
          [&](const atoms::Cylinder& c) {
            auto w = p.as_word();
            return w && word_extends(*w, c.prefix);
          },
          [&](const atoms::CoNamed& c) {
            return std::find(c.excluded.begin(), c.excluded.end(), p) == c.excluded.end();
          },
          [&](const atoms::Rectangle& r) {
            auto cs = p.coords();
            if (!cs || cs->size() != r.factors.size()) return false;
            for (std::size_t i = 0; i < cs->size(); ++i) {
              if (!member((*cs)[i], r.factors[i])) return false;
            }
            return true;
          },
          [&](const atoms::Inject& in) {
            auto ip = p.injected();
            return ip && ip->summand == in.summand && member(*ip->point, *in.inner);
          },
          [&](const atoms::Whole&) { return true; },
      },
      a);
}

bool member(const PointId& p, const OpenDesc& u) {
  return std::any_of(u.atoms.begin(), u.atoms.end(), [&](const Atom& a) { return member(p, a); });
}

bool in_set(const PointId& p, const SetDesc& s) {
  return std::visit(overloaded{
                        [&](const sets::Points& ps) {
                          return std::find(ps.points.begin(), ps.points.end(), p) != ps.points.end();
                        },
                        [&](const sets::Closed& c) {
                          auto x = p.numeric();
                          return x && c.lo <= *x && *x <= c.hi;
                        },
                        [&](const sets::Open& o) {
                          auto x = p.numeric();
                          return x && o.lo < *x && *x < o.hi;
                        },
                        [&](const sets::Product& pr) {
                          auto cs = p.coords();
                          if (!cs || cs->size() != pr.factors.size()) return false;
                          for (std::size_t i = 0; i < cs->size(); ++i) {
                            if (!in_set((*cs)[i], pr.factors[i])) return false;
                          }
                          return true;
                        },
                        [&](const sets::Inject& in) {
                          auto ip = p.injected();
                          return ip && ip->summand == in.summand && in_set(*ip->point, *in.inner);
                        },
                        [&](const sets::Union& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(),
                                             [&](const SetDesc& part) { return in_set(p, part); });
                        },
                    },
                    s.v);
}

bool is_empty(const SetDesc& s) {
  return std::visit(overloaded{
                        [](const sets::Points& ps) { return ps.points.empty(); },
                        [](const sets::Closed& c) { return c.lo > c.hi; },
                        [](const sets::Open& o) { return o.lo >= o.hi; },
                        [](const sets::Product& pr) {
                          return std::any_of(pr.factors.begin(), pr.factors.end(),
                                             [](const SetDesc& f) { return is_empty(f); });
                        },
                        [](const sets::Inject& in) { return is_empty(*in.inner); },
                        [](const sets::Union& u) {
                          return std::all_of(u.parts.begin(), u.parts.end(),
                                             [](const SetDesc& part) { return is_empty(part); });
                        },
                    },
                    s.v);
}

const Cuts* Cuts::find_child(std::size_t i) const {
  auto it = children.find(i);
  return it == children.end() ? nullptr : &it->second;
}

void collect_cuts(const PointId& p, Cuts& out) {
  if (auto x = p.numeric()) {
    out.values.insert(*x);
  } else if (auto cs = p.coords()) {
    for (std::size_t i = 0; i < cs->size(); ++i) collect_cuts((*cs)[i], out.child(i));
  } else if (auto ip = p.injected()) {
    collect_cuts(*ip->point, out.child(ip->summand));
  }
}

void collect_cuts(const OpenDesc& u, Cuts& out) {
  for (const auto& a : u.atoms) {
    std::visit(overloaded{
                   [&](const atoms::Singleton& s) { collect_cuts(s.point, out); },
                   [&](const atoms::Interval& iv) {
                     if (iv.lo) out.values.insert(*iv.lo);
                     if (iv.hi) out.values.insert(*iv.hi);
                   },
                   [&](const atoms::HalfOpen& h) {
                     out.values.insert(h.lo);
                     out.values.insert(h.hi);
                   },
                   [&](const atoms::Cylinder&) {},
                   [&](const atoms::CoNamed& c) {
                     for (const auto& p : c.excluded) collect_cuts(p, out);
                   },
                   [&](const atoms::Rectangle& r) {
                     for (std::size_t i = 0; i < r.factors.size(); ++i) collect_cuts(r.factors[i], out.child(i));
                   },
                   [&](const atoms::Inject& in) { collect_cuts(*in.inner, out.child(in.summand)); },
                   [&](const atoms::Whole&) {},
               },
               a);
  }
}

void collect_cuts(const SetDesc& s, Cuts& out) {
  std::visit(overloaded{
                 [&](const sets::Points& ps) {
                   for (const auto& p : ps.points) collect_cuts(p, out);
                 },
                 [&](const sets::Closed& c) {
                   out.values.insert(c.lo);
                   out.values.insert(c.hi);
                 },
                 [&](const sets::Open& o) {
                   out.values.insert(o.lo);
                   out.values.insert(o.hi);
                 },
                 [&](const sets::Product& pr) {
                   for (std::size_t i = 0; i < pr.factors.size(); ++i) collect_cuts(pr.factors[i], out.child(i));
                 },
                 [&](const sets::Inject& in) { collect_cuts(*in.inner, out.child(in.summand)); },
                 [&](const sets::Union& u) {
                   for (const auto& part : u.parts) collect_cuts(part, out);
                 },
             },
             s.v);
}

namespace {

// Cut values strictly inside (lo, hi) plus the midpoints between neighbours.
std::vector<Rational> cell_samples(const Rational& lo, const Rational& hi, bool closed_ends, const Cuts* cuts) {
  std::vector<Rational> marks{lo};
  if (cuts) {
    for (auto it = cuts->values.upper_bound(lo); it != cuts->values.end() && *it < hi; ++it) marks.push_back(*it);
  }
  marks.push_back(hi);
  std::vector<Rational> out;
  if (closed_ends) out.push_back(lo);
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    out.push_back((marks[i] + marks[i + 1]) / 2);
    if (i + 2 < marks.size()) out.push_back(marks[i + 1]);
  }
  if (closed_ends && hi != lo) out.push_back(hi);
  return out;
}

const Cuts kNoCuts{};

}  // namespace

std::vector<PointId> representatives(const SetDesc& s, const Cuts& cuts) {
  return std::visit(
      overloaded{
          [&](const sets::Points& ps) { return ps.points; },
          [&](const sets::Closed& c) {
            std::vector<PointId> out;
            if (c.lo > c.hi) return out;
            if (c.lo == c.hi) return std::vector<PointId>{PointId::rat(c.lo)};
            for (auto& x : cell_samples(c.lo, c.hi, true, &cuts)) out.push_back(PointId::rat(std::move(x)));
            return out;
          },
          [&](const sets::Open& o) {
            std::vector<PointId> out;
            if (o.lo >= o.hi) return out;
            for (auto& x : cell_samples(o.lo, o.hi, false, &cuts)) out.push_back(PointId::rat(std::move(x)));
            return out;
          },
          [&](const sets::Product& pr) {
            std::vector<std::vector<PointId>> axes;
            for (std::size_t i = 0; i < pr.factors.size(); ++i) {
              const Cuts* c = cuts.find_child(i);
              axes.push_back(representatives(pr.factors[i], c ? *c : kNoCuts));
              if (axes.back().empty()) return std::vector<PointId>{};
            }
            std::vector<PointId> out;
            std::vector<std::size_t> idx(axes.size(), 0);
            for (;;) {
              std::vector<PointId> coords;
              for (std::size_t i = 0; i < axes.size(); ++i) coords.push_back(axes[i][idx[i]]);
              out.push_back(PointId::tuple(std::move(coords)));
              std::size_t i = 0;
              for (; i < axes.size(); ++i) {
                if (++idx[i] < axes[i].size()) break;
                idx[i] = 0;
              }
              if (i == axes.size()) break;
            }
            return out;
          },
          [&](const sets::Inject& in) {
            const Cuts* c = cuts.find_child(in.summand);
            std::vector<PointId> out;
            for (auto& p : representatives(*in.inner, c ? *c : kNoCuts)) out.push_back(PointId::inject(in.summand, p));
            return out;
          },
          [&](const sets::Union& u) {
            std::vector<PointId> out;
            for (const auto& part : u.parts) {
              auto r = representatives(part, cuts);
              out.insert(out.end(), r.begin(), r.end());
            }
            return out;
          },
      },
      s.v);
}

namespace {

// Sufficient syntactic check: one atom swallows the whole set.
bool atom_contains(const Atom& a, const SetDesc& s) {
  if (is_empty(s)) return true;
  if (std::holds_alternative<atoms::Whole>(a)) return true;
  if (auto u = std::get_if<sets::Union>(&s.v)) {
    return std::all_of(u->parts.begin(), u->parts.end(), [&](const SetDesc& p) { return atom_contains(a, p); });
  }
  if (auto ps = std::get_if<sets::Points>(&s.v)) {
    return std::all_of(ps->points.begin(), ps->points.end(), [&](const PointId& p) { return member(p, a); });
  }
  if (auto iv = std::get_if<atoms::Interval>(&a)) {
    if (auto c = std::get_if<sets::Closed>(&s.v)) return (!iv->lo || *iv->lo < c->lo) && (!iv->hi || c->hi < *iv->hi);
    if (auto o = std::get_if<sets::Open>(&s.v)) return (!iv->lo || *iv->lo <= o->lo) && (!iv->hi || o->hi <= *iv->hi);
    return false;
  }
  if (auto h = std::get_if<atoms::HalfOpen>(&a)) {
    if (auto c = std::get_if<sets::Closed>(&s.v)) return h->lo <= c->lo && c->hi < h->hi;
    if (auto o = std::get_if<sets::Open>(&s.v)) return h->lo <= o->lo && o->hi <= h->hi;
    return false;
  }
  if (auto r = std::get_if<atoms::Rectangle>(&a)) {
    auto pr = std::get_if<sets::Product>(&s.v);
    if (!pr || pr->factors.size() != r->factors.size()) return false;
    for (std::size_t i = 0; i < pr->factors.size(); ++i) {
      const auto& f = r->factors[i];
      bool ok = std::any_of(f.atoms.begin(), f.atoms.end(),
                            [&](const Atom& fa) { return atom_contains(fa, pr->factors[i]); });
      if (!ok) return false;
    }
    return true;
  }
  if (auto in = std::get_if<atoms::Inject>(&a)) {
    auto si = std::get_if<sets::Inject>(&s.v);
    if (!si || si->summand != in->summand) return false;
    const auto& inner = *in->inner;
    return std::any_of(inner.atoms.begin(), inner.atoms.end(),
                       [&](const Atom& ia) { return atom_contains(ia, *si->inner); });
  }
  return false;
}

}  // namespace

bool contains(const SetDesc& k, const OpenDesc& u) {
  for (const auto& a : u.atoms) {
    if (atom_contains(a, k)) return true;
  }
  // Coarse samples first; most failures show up there.
  for (const auto& p : representatives(k, kNoCuts)) {
    if (!member(p, u)) return false;
  }
  if (std::holds_alternative<sets::Points>(k.v)) return true;
  Cuts cuts;
  collect_cuts(u, cuts);
  for (const auto& p : representatives(k, cuts)) {
    if (!member(p, u)) return false;
  }
  return true;
}

bool subset(const SetDesc& b, const SetDesc& a) {
  Cuts cuts;
  collect_cuts(a, cuts);
  for (const auto& p : representatives(b, cuts)) {
    if (!in_set(p, a)) return false;
  }
  return true;
}

namespace {

[[noreturn]] void not_expressible(const Atom& a, const Atom& b) {
  throw Error(Errc::NotExpressible,
              "cannot intersect " + to_string(OpenDesc{{a}}) + " with " + to_string(OpenDesc{{b}}));
}

std::optional<Atom> intersect_atoms(const Atom& a, const Atom& b) {
  if (std::holds_alternative<atoms::Whole>(a)) return b;
  if (std::holds_alternative<atoms::Whole>(b)) return a;
  if (auto s = std::get_if<atoms::Singleton>(&a)) return member(s->point, b) ? std::optional<Atom>(a) : std::nullopt;
  if (auto s = std::get_if<atoms::Singleton>(&b)) return member(s->point, a) ? std::optional<Atom>(b) : std::nullopt;

  auto ia = std::get_if<atoms::Interval>(&a);
  auto ib = std::get_if<atoms::Interval>(&b);
  auto ha = std::get_if<atoms::HalfOpen>(&a);
  auto hb = std::get_if<atoms::HalfOpen>(&b);
  if (ia && ib) {
    std::optional<Rational> lo = ia->lo, hi = ia->hi;
    if (ib->lo && (!lo || *ib->lo > *lo)) lo = ib->lo;
    if (ib->hi && (!hi || *ib->hi < *hi)) hi = ib->hi;
    if (lo && hi && *lo >= *hi) return std::nullopt;
    return atoms::Interval{lo, hi};
  }
  if (ha && hb) {
    Rational lo = std::max(ha->lo, hb->lo), hi = std::min(ha->hi, hb->hi);
    if (lo >= hi) return std::nullopt;
    return atoms::HalfOpen{lo, hi};
  }
  if ((ia && hb) || (ha && ib)) {
    const auto& iv = ia ? *ia : *ib;
    const auto& h = ha ? *ha : *hb;
    Rational hi = iv.hi ? std::min(*iv.hi, h.hi) : h.hi;
    if (iv.lo && *iv.lo >= h.lo) {
      if (*iv.lo >= hi) return std::nullopt;
      return atoms::Interval{iv.lo, hi};
    }
    if (h.lo >= hi) return std::nullopt;
    return atoms::HalfOpen{h.lo, hi};
  }
  auto ca = std::get_if<atoms::Cylinder>(&a);
  auto cb = std::get_if<atoms::Cylinder>(&b);
  if (ca && cb) {
    const Word& shorter = ca->prefix.size() <= cb->prefix.size() ? ca->prefix : cb->prefix;
    const Word& longer = ca->prefix.size() <= cb->prefix.size() ? cb->prefix : ca->prefix;
    if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) return std::nullopt;
    return atoms::Cylinder{longer};
  }
  auto na = std::get_if<atoms::CoNamed>(&a);
  auto nb = std::get_if<atoms::CoNamed>(&b);
  if (na && nb) {
    std::vector<PointId> ex = na->excluded;
    ex.insert(ex.end(), nb->excluded.begin(), nb->excluded.end());
    return co_named(std::move(ex)).atoms.front();
  }
  auto ra = std::get_if<atoms::Rectangle>(&a);
  auto rb = std::get_if<atoms::Rectangle>(&b);
  if (ra && rb) {
    if (ra->factors.size() != rb->factors.size()) not_expressible(a, b);
    std::vector<OpenDesc> fs;
    for (std::size_t i = 0; i < ra->factors.size(); ++i) {
      fs.push_back(intersect(ra->factors[i], rb->factors[i]));
      if (fs.back().is_empty()) return std::nullopt;
    }
    return atoms::Rectangle{std::move(fs)};
  }
  auto ja = std::get_if<atoms::Inject>(&a);
  auto jb = std::get_if<atoms::Inject>(&b);
  if (ja && jb) {
    if (ja->summand != jb->summand) return std::nullopt;
    OpenDesc inner = intersect(*ja->inner, *jb->inner);
    if (inner.is_empty()) return std::nullopt;
    return atoms::Inject{ja->summand, Box<OpenDesc>(std::move(inner))};
  }
  not_expressible(a, b);
}

}  // namespace

OpenDesc intersect(const OpenDesc& a, const OpenDesc& b) {
  OpenDesc out;
  for (const auto& x : a.atoms) {
    for (const auto& y : b.atoms) {
      if (auto z = intersect_atoms(x, y)) out.atoms.push_back(std::move(*z));
    }
  }
  return out;
}

OpenDesc project(const OpenDesc& u, std::size_t coord) {
  OpenDesc out;
  for (const auto& a : u.atoms) {
    if (std::holds_alternative<atoms::Whole>(a)) return whole();
    auto r = std::get_if<atoms::Rectangle>(&a);
    if (!r || coord >= r->factors.size()) {
      throw Error(Errc::NotExpressible, "projection of non-rectangle atom " + to_string(OpenDesc{{a}}));
    }
    out = unite(out, r->factors[coord]);
  }
  return out;
}

SetDesc project(const SetDesc& s, std::size_t coord) {
  return std::visit(overloaded{
                        [&](const sets::Points& ps) {
                          std::vector<PointId> out;
                          for (const auto& p : ps.points) {
                            auto cs = p.coords();
                            if (!cs || coord >= cs->size()) {
                              throw Error(Errc::TypeMismatch, "projection of non-tuple point " + to_string(p));
                            }
                            out.push_back((*cs)[coord]);
                          }
                          return points(std::move(out));
                        },
                        [&](const sets::Product& pr) {
                          if (coord >= pr.factors.size()) throw Error(Errc::TypeMismatch, "projection out of range");
                          return pr.factors[coord];
                        },
                        [&](const sets::Union& u) {
                          std::vector<SetDesc> parts;
                          for (const auto& part : u.parts) parts.push_back(project(part, coord));
                          return set_union(std::move(parts));
                        },
                        [&](const auto&) -> SetDesc {
                          throw Error(Errc::TypeMismatch, "projection of non-product set " + to_string(s));
                        },
                    },
                    s.v);
}

std::size_t arity(const SetDesc& s) {
  if (auto pr = std::get_if<sets::Product>(&s.v)) return pr->factors.size();
  if (auto ps = std::get_if<sets::Points>(&s.v)) {
    if (!ps->points.empty()) {
      if (auto cs = ps->points.front().coords()) return cs->size();
    }
  }
  if (auto u = std::get_if<sets::Union>(&s.v)) {
    for (const auto& part : u->parts) {
      if (auto n = arity(part); n != 1) return n;
    }
  }
  return 1;
}

namespace {

std::string bound(const std::optional<Rational>& r, const char* inf) { return r ? selgame::to_string(*r) : inf; }

template <class Seq, class F>
std::string join(const Seq& seq, const char* sep, F f) {
  std::string out;
  bool first = true;
  for (const auto& x : seq) {
    if (!first) out += sep;
    first = false;
    out += f(x);
  }
  return out;
}

}  // namespace

std::string to_string(const PointId& p) {
  return std::visit(overloaded{
                        [](Nat n) { return std::to_string(n); },
                        [](const Rational& r) { return selgame::to_string(r); },
                        [](const Word& w) {
                          return "<" + join(w, ",", [](Nat d) { return std::to_string(d); }) + ">";
                        },
                        [](Infinity) { return std::string("inf"); },
                        [](const std::vector<PointId>& cs) {
                          return "(" + join(cs, ",", [](const PointId& c) { return to_string(c); }) + ")";
                        },
                        [](const InjectedPoint& ip) {
                          return "in" + std::to_string(ip.summand) + ":" + to_string(*ip.point);
                        },
                    },
                    p.v);
}

std::string to_string(const OpenDesc& u) {
  if (u.is_empty()) return "{}";
  return join(u.atoms, " u ", [](const Atom& a) {
    return std::visit(overloaded{
                          [](const atoms::Singleton& s) { return "{" + to_string(s.point) + "}"; },
                          [](const atoms::Interval& iv) {
                            return "(" + bound(iv.lo, "-inf") + "," + bound(iv.hi, "inf") + ")";
                          },
                          [](const atoms::HalfOpen& h) {
                            return "[" + selgame::to_string(h.lo) + "," + selgame::to_string(h.hi) + ")";
                          },
                          [](const atoms::Cylinder& c) {
                            return "[<" + join(c.prefix, ",", [](Nat d) { return std::to_string(d); }) + ">]";
                          },
                          [](const atoms::CoNamed& c) {
                            return "X\\{" + join(c.excluded, ",", [](const PointId& p) { return to_string(p); }) + "}";
                          },
                          [](const atoms::Rectangle& r) {
                            return join(r.factors, " x ", [](const OpenDesc& f) { return "(" + to_string(f) + ")"; });
                          },
                          [](const atoms::Inject& in) { return "in" + std::to_string(in.summand) + ":" + to_string(*in.inner); },
                          [](const atoms::Whole&) { return std::string("X"); },
                      },
                      a);
  });
}

std::string to_string(const SetDesc& s) {
  return std::visit(overloaded{
                        [](const sets::Points& ps) {
                          return "{" + join(ps.points, ",", [](const PointId& p) { return to_string(p); }) + "}";
                        },
                        [](const sets::Closed& c) {
                          return "[" + selgame::to_string(c.lo) + "," + selgame::to_string(c.hi) + "]";
                        },
                        [](const sets::Open& o) {
                          return "(" + selgame::to_string(o.lo) + "," + selgame::to_string(o.hi) + ")";
                        },
                        [](const sets::Product& pr) {
                          return join(pr.factors, " x ", [](const SetDesc& f) { return to_string(f); });
                        },
                        [](const sets::Inject& in) { return "in" + std::to_string(in.summand) + ":" + to_string(*in.inner); },
                        [](const sets::Union& u) {
                          return "(" + join(u.parts, " u ", [](const SetDesc& p) { return to_string(p); }) + ")";
                        },
                    },
                    s.v);
}

}  // namespace selgame::topology
