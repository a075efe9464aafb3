#include "selgame/topology/cover_ops.hpp"

#include <algorithm>

#include "selgame/error.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::topology {

namespace {

bool covered_by_some(const SetDesc& k, const std::vector<OpenDesc>& elements) {
  return std::any_of(elements.begin(), elements.end(), [&](const OpenDesc& e) { return contains(k, e); });
}

}  // namespace

std::set<CoverClass> classify_cover(const Space& s, const std::vector<OpenDesc>& elements,
                                    const ClassifyOptions& opts) {
  for (const auto& e : elements) check_open(s, e);
  const Batteries& bat = opts.batteries ? *opts.batteries : s.batteries;

  bool o = std::all_of(bat.points.begin(), bat.points.end(),
                       [&](const PointId& p) { return covered_by_some(point_set(p), elements); });
  bool finite = std::all_of(bat.finite_sets.begin(), bat.finite_sets.end(),
                            [&](const SetDesc& f) { return covered_by_some(f, elements); });
  bool whole_present = false;
  std::vector<PointId> diagonal;
  for (const auto& e : elements) {
    if (auto x = point_outside(s, e)) {
      diagonal.push_back(*x);
    } else {
      whole_present = true;
    }
  }
  if (opts.diagonal && !whole_present) finite = finite && covered_by_some(points(diagonal), elements);

  bool omega = o && finite;
  bool k = omega && std::all_of(bat.compacts.begin(), bat.compacts.end(),
                                [&](const SetDesc& c) { return covered_by_some(c, elements); });
  bool krel = k && std::all_of(bat.relcompacts.begin(), bat.relcompacts.end(),
                               [&](const SetDesc& c) { return covered_by_some(c, elements); });

  auto multiplicity = [&](const PointId& p) {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [&](const OpenDesc& e) { return member(p, e); }));
  };
  bool gamma_points = std::all_of(bat.points.begin(), bat.points.end(), [&](const PointId& p) {
    return elements.size() - multiplicity(p) <= opts.gamma_tolerance;
  });
  bool lambda_points = std::all_of(bat.points.begin(), bat.points.end(),
                                   [&](const PointId& p) { return multiplicity(p) >= opts.lambda_multiplicity; });

  std::set<CoverClass> out;
  if (o) out.insert(CoverClass::O);
  if (o && (omega || lambda_points)) out.insert(CoverClass::Lambda);
  if (omega) out.insert(CoverClass::Omega);
  if (omega && (whole_present || gamma_points)) out.insert(CoverClass::Gamma);
  if (k) out.insert(CoverClass::K);
  if (krel) out.insert(CoverClass::KRel);
  return out;
}

SetDesc tail_project(const SetDesc& s, std::size_t n) {
  if (n == 2) return project(s, 1);
  if (auto pr = std::get_if<sets::Product>(&s.v)) {
    return product(std::vector<SetDesc>(pr->factors.begin() + 1, pr->factors.end()));
  }
  if (auto ps = std::get_if<sets::Points>(&s.v)) {
    std::vector<PointId> out;
    for (const auto& p : ps->points) {
      const auto& cs = *p.coords();
      out.push_back(PointId::tuple(std::vector<PointId>(cs.begin() + 1, cs.end())));
    }
    return points(std::move(out));
  }
  if (auto u = std::get_if<sets::Union>(&s.v)) {
    std::vector<SetDesc> parts;
    for (const auto& p : u->parts) parts.push_back(tail_project(p, n));
    return set_union(std::move(parts));
  }
  throw Error(Errc::TypeMismatch, "tail projection of non-product set " + to_string(s));
}

PointId join_point(const PointId& head, const PointId& tail, std::size_t n) {
  if (n == 2) return PointId::tuple({head, tail});
  std::vector<PointId> cs{head};
  const auto& rest = *tail.coords();
  cs.insert(cs.end(), rest.begin(), rest.end());
  return PointId::tuple(std::move(cs));
}

std::pair<OpenDesc, OpenDesc> split_atom(const Atom& a, std::size_t n) {
  if (std::holds_alternative<atoms::Whole>(a)) return {whole(), whole()};
  auto r = std::get_if<atoms::Rectangle>(&a);
  if (!r || r->factors.size() != n) {
    throw Error(Errc::NotExpressible, "expected a rectangle atom, got " + to_string(OpenDesc{{a}}));
  }
  if (n == 2) return {r->factors[0], r->factors[1]};
  return {r->factors[0], rectangle(std::vector<OpenDesc>(r->factors.begin() + 1, r->factors.end()))};
}

namespace {

constexpr std::size_t kChainSteps = 4096;

std::optional<std::vector<std::size_t>> interval_chain(const Cover& c, const Rational& lo, const Rational& hi) {
  std::vector<std::size_t> out;
  Rational x = lo;
  for (std::size_t step = 0; step < kChainSteps; ++step) {
    auto j = c.select(point_set(PointId::rat(x)));
    if (!j) return std::nullopt;
    auto e = c.element(*j);
    if (!e) return std::nullopt;
    out.push_back(*j);
    std::optional<Rational> reach;
    bool unbounded = false;
    for (const auto& a : e->atoms) {
      if (!member(PointId::rat(x), a)) continue;
      if (std::holds_alternative<atoms::Whole>(a)) {
        unbounded = true;
      } else if (auto iv = std::get_if<atoms::Interval>(&a)) {
        if (!iv->hi) {
          unbounded = true;
        } else if (!reach || *iv->hi > *reach) {
          reach = *iv->hi;
        }
      } else if (auto h = std::get_if<atoms::HalfOpen>(&a)) {
        if (!reach || h->hi > *reach) reach = h->hi;
      }
    }
    if (unbounded || (reach && *reach > hi)) return out;
    if (!reach || *reach <= x) return std::nullopt;
    x = *reach;
  }
  return std::nullopt;
}

// The cover induced on summand i.
Cover summand_cover(const Cover& c, const Space& sum, std::size_t i) {
  auto elem = [c, i](std::size_t j) -> std::optional<OpenDesc> {
    auto e = c.element(j);
    if (!e) return std::nullopt;
    OpenDesc out;
    for (const auto& a : e->atoms) {
      if (std::holds_alternative<atoms::Whole>(a)) return whole();
      if (auto in = std::get_if<atoms::Inject>(&a); in && in->summand == i) out = unite(out, *in->inner);
    }
    return out;
  };
  auto sel = [c, i](const SetDesc& k) { return c.select(inject(i, k)); };
  return Cover(c.name() + "|" + std::to_string(i), sum.parts[i], c.cover_class(), elem, sel, c.size());
}

std::optional<std::vector<std::size_t>> find_in(const Cover& c, const SetDesc& k) {
  const Space& s = *c.space();
  if (is_empty(k)) return std::vector<std::size_t>{};
  if (auto ps = std::get_if<sets::Points>(&k.v)) {
    std::vector<std::size_t> out;
    for (const auto& p : ps->points) {
      auto j = c.select(point_set(p));
      if (!j) return std::nullopt;
      out.push_back(*j);
    }
    return out;
  }
  if (auto u = std::get_if<sets::Union>(&k.v)) {
    std::vector<std::size_t> out;
    for (const auto& part : u->parts) {
      auto f = find_in(c, part);
      if (!f) return std::nullopt;
      out.insert(out.end(), f->begin(), f->end());
    }
    return out;
  }
  if (auto cl = std::get_if<sets::Closed>(&k.v)) return interval_chain(c, cl->lo, cl->hi);
  if (auto op = std::get_if<sets::Open>(&k.v)) return interval_chain(c, op->lo, op->hi);
  if (auto in = std::get_if<sets::Inject>(&k.v)) {
    if (s.kind != SpaceKind::Sum) return std::nullopt;
    return find_in(summand_cover(c, s, in->summand), *in->inner);
  }
  if (std::holds_alternative<sets::Product>(k.v) && s.kind == SpaceKind::Product) {
    std::size_t n = s.parts.size();
    return finite_subcover_product(s, project(k, 0), tail_project(k, n), c, default_finder(), default_finder());
  }
  return std::nullopt;
}

void sort_unique(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::optional<std::vector<std::size_t>> finite_subcover(const Cover& c, const SetDesc& k) {
  auto out = find_in(c, k);
  if (out) sort_unique(*out);
  return out;
}

Finder default_finder() { return [](const Cover& c, const SetDesc& k) { return finite_subcover(c, k); }; }

std::optional<std::vector<std::size_t>> finite_subcover_product(const Space& prod, const SetDesc& a,
                                                                const SetDesc& b, const Cover& c,
                                                                const Finder& finder_a, const Finder& finder_b) {
  const std::size_t n = prod.parts.size();
  SpacePtr x_space = prod.parts[0];
  SpacePtr y_space = prod.tail;

  struct Tube {
    OpenDesc u;
    std::vector<std::size_t> parents;
  };
  auto tubes = std::make_shared<InternTable<Tube>>();
  bool failed = false;

  // Y-cover seen from a fixed x: code (j, atom) ↦ π_Y of that atom of element j.
  auto slice_cover = [&c, n, y_space](const PointId& x) {
    auto elem = [c, n, x](std::size_t code) -> std::optional<OpenDesc> {
      auto [j, ai] = combinatorics::cantor_unpair(code);
      auto e = c.element(j);
      if (!e || ai >= e->atoms.size()) return empty_open();
      auto [p, q] = split_atom(e->atoms[ai], n);
      return member(x, p) ? q : empty_open();
    };
    auto sel = [c, n, x](const SetDesc& k) -> std::optional<std::size_t> {
      auto ps = std::get_if<sets::Points>(&k.v);
      if (!ps || ps->points.size() != 1) return std::nullopt;
      PointId xy = join_point(x, ps->points.front(), n);
      auto j = c.select(point_set(xy));
      if (!j) return std::nullopt;
      auto e = c.element(*j);
      if (!e) return std::nullopt;
      for (std::size_t ai = 0; ai < e->atoms.size(); ++ai) {
        if (member(xy, e->atoms[ai])) return combinatorics::cantor_pair(*j, ai);
      }
      return std::nullopt;
    };
    return Cover(c.name() + "/slice", y_space, CoverClass::O, elem, sel);
  };

  auto x_elem = [tubes](std::size_t i) -> std::optional<OpenDesc> {
    auto t = tubes->at(i);
    if (!t) return empty_open();
    return t->u;
  };
  auto x_sel = [&](const SetDesc& k) -> std::optional<std::size_t> {
    auto ps = std::get_if<sets::Points>(&k.v);
    if (!ps || ps->points.size() != 1) return std::nullopt;
    const PointId& x = ps->points.front();
    Cover slice = slice_cover(x);
    auto codes = finder_b(slice, b);
    if (!codes) {
      failed = true;
      return std::nullopt;
    }
    Tube t{whole(), {}};
    for (std::size_t code : *codes) {
      auto [j, ai] = combinatorics::cantor_unpair(code);
      auto [p, q] = split_atom(c.element(j)->atoms[ai], n);
      t.u = intersect(t.u, p);
      t.parents.push_back(j);
    }
    return tubes->intern(to_json(x).dump(), t);
  };
  Cover x_cover(c.name() + "/tubes", x_space, CoverClass::O, x_elem, x_sel);
  auto picks = finder_a(x_cover, a);
  if (!picks || failed) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i : *picks) {
    auto t = tubes->at(i);
    out.insert(out.end(), t->parents.begin(), t->parents.end());
  }
  if (is_empty(b)) out.clear();
  sort_unique(out);
  return out;
}

UnionClosure finite_union_closure(const Cover& c, Finder finder) {
  auto table = std::make_shared<InternTable<std::vector<std::size_t>>>();
  auto members = [table](std::size_t i) {
    std::vector<std::size_t> out;
    if (i >= kInternBase) {
      if (auto m = table->at(i - kInternBase)) out = *m;
      return out;
    }
    for (std::size_t bit = 0; bit < 62; ++bit) {
      if (i & (std::size_t(1) << bit)) out.push_back(bit);
    }
    return out;
  };
  auto elem = [c, members](std::size_t i) -> std::optional<OpenDesc> {
    OpenDesc out;
    for (std::size_t j : members(i)) {
      if (auto e = c.element(j)) out = unite(out, *e);
    }
    return out;
  };
  auto sel = [c, finder, table](const SetDesc& k) -> std::optional<std::size_t> {
    auto f = finder(c, k);
    if (!f) return std::nullopt;
    sort_unique(*f);
    if (f->empty() || f->back() < 62) {
      std::size_t code = 0;
      for (std::size_t j : *f) code |= std::size_t(1) << j;
      return code;
    }
    std::string key;
    for (std::size_t j : *f) key += std::to_string(j) + ",";
    return kInternBase + table->intern(key, *f);
  };
  return {Cover(c.name() + "^fin", c.space(), CoverClass::KRel, elem, sel), members};
}

std::optional<OpenDesc> wallace_rectangle(const Space& prod, const OpenDesc& w, const SetDesc& e) {
  const std::size_t n = prod.parts.size();
  if (is_empty(e)) return rectangle(std::vector<OpenDesc>(n, empty_open()));
  SetDesc a = project(e, 0);
  SetDesc b = tail_project(e, n);
  std::vector<std::pair<OpenDesc, OpenDesc>> pieces;
  Cuts cuts;
  for (const auto& atom : w.atoms) {
    pieces.push_back(split_atom(atom, n));
    collect_cuts(pieces.back().first, cuts);
  }
  std::set<std::vector<std::size_t>> patterns;
  for (const auto& x : representatives(a, cuts)) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (member(x, pieces[i].first)) s.push_back(i);
    }
    patterns.insert(s);
  }
  OpenDesc u;
  std::optional<OpenDesc> v;
  for (const auto& s : patterns) {
    OpenDesc qs;
    OpenDesc ps = whole();
    for (std::size_t i : s) {
      qs = unite(qs, pieces[i].second);
      ps = intersect(ps, pieces[i].first);
    }
    if (!contains(b, qs)) return std::nullopt;
    u = unite(u, ps);
    v = v ? intersect(*v, qs) : qs;
  }
  if (n == 2) return rectangle({u, *v});
  auto rest = wallace_rectangle(*prod.tail, *v, b);
  if (!rest) return std::nullopt;
  const auto& rf = std::get<atoms::Rectangle>(rest->atoms.front()).factors;
  std::vector<OpenDesc> fs{u};
  fs.insert(fs.end(), rf.begin(), rf.end());
  return rectangle(std::move(fs));
}

namespace {

bool rectangle_shaped(const OpenDesc& e) {
  return e.atoms.size() == 1 && (std::holds_alternative<atoms::Rectangle>(e.atoms.front()) ||
                                 std::holds_alternative<atoms::Whole>(e.atoms.front()));
}

}  // namespace

Refinement rectangle_refine(const Cover& c) {
  const SpacePtr& space = c.space();
  if (space->kind != SpaceKind::Product) throw Error(Errc::TypeMismatch, "rectangle refinement needs a product space");
  const std::size_t n = space->parts.size();
  struct Entry {
    std::size_t parent;
    OpenDesc rect;
  };
  auto table = std::make_shared<InternTable<Entry>>();
  auto elem = [c, n, table](std::size_t i) -> std::optional<OpenDesc> {
    if (i >= kInternBase) {
      auto e = table->at(i - kInternBase);
      if (!e) return std::nullopt;
      return e->rect;
    }
    auto e = c.element(i);
    if (!e) return std::nullopt;
    if (!rectangle_shaped(*e)) return empty_open();
    if (std::holds_alternative<atoms::Whole>(e->atoms.front())) return rectangle(std::vector<OpenDesc>(n, whole()));
    return e;
  };
  auto sel = [c, space, table](const SetDesc& k) -> std::optional<std::size_t> {
    auto p = c.select(k);
    if (!p) return std::nullopt;
    auto e = c.element(*p);
    if (!e) return std::nullopt;
    if (rectangle_shaped(*e)) return p;
    auto r = wallace_rectangle(*space, *e, k);
    if (!r) return std::nullopt;
    return kInternBase + table->intern(std::to_string(*p) + "|" + canonical_key(*r), Entry{*p, *r});
  };
  auto parent = [table](std::size_t i) -> std::optional<std::size_t> {
    if (i < kInternBase) return i;
    auto e = table->at(i - kInternBase);
    if (!e) return std::nullopt;
    return e->parent;
  };
  return {Cover(c.name() + "/rect", space, c.cover_class(), elem, sel), parent};
}

OpenDesc diagonal_core(const OpenDesc& rect, std::size_t n) {
  OpenDesc u = whole();
  for (std::size_t j = 0; j < n; ++j) u = intersect(u, project(rect, j));
  return u;
}

Refinement cube_refine(const Cover& c) {
  const SpacePtr& space = c.space();
  if (!space->power) throw Error(Errc::TypeMismatch, "cube refinement needs a power space");
  const std::size_t n = space->parts.size();
  auto elem = [c, n](std::size_t i) -> std::optional<OpenDesc> {
    auto e = c.element(i);
    if (!e) return std::nullopt;
    return diagonal_core(*e, n);
  };
  auto sel = [c, n](const SetDesc& k) -> std::optional<std::size_t> {
    auto i = c.select(product(std::vector<SetDesc>(n, k)));
    if (!i) return std::nullopt;
    auto e = c.element(*i);
    if (!e || !contains(k, diagonal_core(*e, n))) {
      throw Error(Errc::SelectorFailure,
                  "projection core of element " + std::to_string(*i) + " misses " + to_string(k));
    }
    return i;
  };
  auto parent = [](std::size_t i) -> std::optional<std::size_t> { return i; };
  return {Cover(c.name() + "/cube", space->parts[0], c.cover_class(), elem, sel, c.size()), parent};
}

struct CountableSubcover::State {
  std::mutex mu;
  std::vector<OpenDesc> elements;
  std::vector<std::size_t> parents;
  std::map<std::string, std::size_t> by_union;
  std::map<std::string, std::size_t> by_challenge;
};

std::optional<std::size_t> CountableSubcover::parent(std::size_t i) const {
  std::lock_guard lock(state->mu);
  if (i >= state->parents.size()) return std::nullopt;
  return state->parents[i];
}

std::size_t CountableSubcover::distinct() const {
  std::lock_guard lock(state->mu);
  return state->elements.size();
}

std::size_t CountableSubcover::parents_used() const {
  std::lock_guard lock(state->mu);
  return std::set<std::size_t>(state->parents.begin(), state->parents.end()).size();
}

CountableSubcover countable_k_subcover(const Cover& c, const std::vector<SetDesc>& battery) {
  const SpacePtr& space = c.space();
  if (!space->flags.second_countable) {
    throw Error(Errc::Unsupported, "space " + space->id + " is not flagged second-countable");
  }
  auto state = std::make_shared<CountableSubcover::State>();

  auto basis_union = [c, space](const SetDesc& k) -> std::optional<std::pair<OpenDesc, std::size_t>> {
    auto p = c.select(k);
    if (!p) return std::nullopt;
    auto u = c.element(*p);
    if (!u) return std::nullopt;
    auto basics = std::make_shared<InternTable<OpenDesc>>();
    auto elem = [basics](std::size_t i) -> std::optional<OpenDesc> {
      auto b = basics->at(i);
      if (!b) return empty_open();
      return b;
    };
    OpenDesc target = *u;
    auto sel = [basics, space, target](const SetDesc& q) -> std::optional<std::size_t> {
      auto ps = std::get_if<sets::Points>(&q.v);
      if (!ps || ps->points.size() != 1) return std::nullopt;
      auto b = basic_around(*space, ps->points.front(), target);
      if (!b) return std::nullopt;
      return basics->intern(canonical_key(*b), *b);
    };
    Cover basic_cover(c.name() + "/basic", space, CoverClass::O, elem, sel);
    auto f = finite_subcover(basic_cover, k);
    if (!f) return std::nullopt;
    OpenDesc out;
    for (std::size_t i : *f) out = unite(out, *basics->at(i));
    return std::make_pair(out, *p);
  };

  auto record = [state, basis_union](const SetDesc& k) -> std::optional<std::size_t> {
    std::string ck = canonical_key(k);
    {
      std::lock_guard lock(state->mu);
      if (auto it = state->by_challenge.find(ck); it != state->by_challenge.end()) return it->second;
    }
    auto bu = basis_union(k);
    if (!bu) return std::nullopt;
    std::lock_guard lock(state->mu);
    std::string key = canonical_key(bu->first);
    auto [it, inserted] = state->by_union.emplace(key, state->elements.size());
    if (inserted) {
      state->elements.push_back(bu->first);
      state->parents.push_back(bu->second);
    }
    state->by_challenge.emplace(ck, it->second);
    return it->second;
  };

  for (const auto& k : battery) {
    if (!record(k)) throw Error(Errc::SelectorFailure, "no basis union inside the cover for " + to_string(k));
  }
  auto elem = [state](std::size_t i) -> std::optional<OpenDesc> {
    std::lock_guard lock(state->mu);
    if (i >= state->elements.size()) return std::nullopt;
    return state->elements[i];
  };
  CountableSubcover out;
  out.cover = Cover(c.name() + "/countable", space, CoverClass::K, elem, record);
  out.state = state;
  return out;
}

}  // namespace selgame::topology
