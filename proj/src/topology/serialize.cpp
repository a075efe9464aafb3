#include "selgame/topology/serialize.hpp"

#include "selgame/error.hpp"

namespace selgame::topology {

using nlohmann::json;

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

json rat(const Rational& r) { return selgame::to_string(r); }

Rational rat_from(const json& j) {
  if (!j.is_string()) throw Error(Errc::Config, "rational must be a string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

std::optional<Rational> bound_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return rat_from(j);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::Config, std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

std::string tag(const json& j) { return field(j, "t").get<std::string>(); }

}  // namespace

json to_json(const PointId& p) {
  return std::visit(overloaded{
                        [](Nat n) { return json{{"t", "nat"}, {"v", n}}; },
                        [](const Rational& r) { return json{{"t", "rat"}, {"v", rat(r)}}; },
                        [](const Word& w) { return json{{"t", "word"}, {"v", w}}; },
                        [](Infinity) { return json{{"t", "inf"}}; },
                        [](const std::vector<PointId>& cs) {
                          json arr = json::array();
                          for (const auto& c : cs) arr.push_back(to_json(c));
                          return json{{"t", "tuple"}, {"v", arr}};
                        },
                        [](const InjectedPoint& ip) {
                          return json{{"i", ip.summand}, {"t", "inj"}, {"v", to_json(*ip.point)}};
                        },
                    },
                    p.v);
}

PointId point_from_json(const json& j) {
  std::string t = tag(j);
  if (t == "nat") return PointId::nat(field(j, "v").get<Nat>());
  if (t == "rat") return PointId::rat(rat_from(field(j, "v")));
  if (t == "word") return PointId::word(field(j, "v").get<Word>());
  if (t == "inf") return PointId::infinity();
  if (t == "tuple") {
    std::vector<PointId> cs;
    for (const auto& c : field(j, "v")) cs.push_back(point_from_json(c));
    return PointId::tuple(std::move(cs));
  }
  if (t == "inj") return PointId::inject(field(j, "i").get<std::size_t>(), point_from_json(field(j, "v")));
  throw Error(Errc::Config, "unknown point tag '" + t + "'");
}

json to_json(const OpenDesc& u) {
  json arr = json::array();
  for (const auto& a : u.atoms) {
    arr.push_back(std::visit(
        overloaded{
            [](const atoms::Singleton& s) { return json{{"t", "singleton"}, {"v", to_json(s.point)}}; },
            [](const atoms::Interval& iv) {
              return json{{"hi", iv.hi ? rat(*iv.hi) : json(nullptr)},
                          {"lo", iv.lo ? rat(*iv.lo) : json(nullptr)},
                          {"t", "interval"}};
            },
            [](const atoms::HalfOpen& h) { return json{{"hi", rat(h.hi)}, {"lo", rat(h.lo)}, {"t", "halfopen"}}; },
            [](const atoms::Cylinder& c) { return json{{"t", "cylinder"}, {"v", c.prefix}}; },
            [](const atoms::CoNamed& c) {
              json ex = json::array();
              for (const auto& p : c.excluded) ex.push_back(to_json(p));
              return json{{"t", "conamed"}, {"v", ex}};
            },
            [](const atoms::Rectangle& r) {
              json fs = json::array();
              for (const auto& f : r.factors) fs.push_back(to_json(f));
              return json{{"t", "rect"}, {"v", fs}};
            },
            [](const atoms::Inject& in) { return json{{"i", in.summand}, {"t", "inj"}, {"v", to_json(*in.inner)}}; },
            [](const atoms::Whole&) { return json{{"t", "whole"}}; },
        },
        a));
  }
  return arr;
}

OpenDesc open_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::Config, "open set must be an array of atoms, got " + j.dump());
  OpenDesc out;
  for (const auto& a : j) {
    std::string t = tag(a);
    if (t == "singleton") {
      out.atoms.push_back(atoms::Singleton{point_from_json(field(a, "v"))});
    } else if (t == "interval") {
      out.atoms.push_back(atoms::Interval{bound_from(field(a, "lo")), bound_from(field(a, "hi"))});
    } else if (t == "halfopen") {
      out.atoms.push_back(atoms::HalfOpen{rat_from(field(a, "lo")), rat_from(field(a, "hi"))});
    } else if (t == "cylinder") {
      out.atoms.push_back(atoms::Cylinder{field(a, "v").get<Word>()});
    } else if (t == "conamed") {
      std::vector<PointId> ex;
      for (const auto& p : field(a, "v")) ex.push_back(point_from_json(p));
      out.atoms.push_back(atoms::CoNamed{std::move(ex)});
    } else if (t == "rect") {
      std::vector<OpenDesc> fs;
      for (const auto& f : field(a, "v")) fs.push_back(open_from_json(f));
      out.atoms.push_back(atoms::Rectangle{std::move(fs)});
    } else if (t == "inj") {
      out.atoms.push_back(atoms::Inject{field(a, "i").get<std::size_t>(), Box<OpenDesc>(open_from_json(field(a, "v")))});
    } else if (t == "whole") {
      out.atoms.push_back(atoms::Whole{});
    } else {
      throw Error(Errc::Config, "unknown atom tag '" + t + "'");
    }
  }
  return out;
}

json to_json(const SetDesc& s) {
  return std::visit(overloaded{
                        [](const sets::Points& ps) {
                          json arr = json::array();
                          for (const auto& p : ps.points) arr.push_back(to_json(p));
                          return json{{"t", "points"}, {"v", arr}};
                        },
                        [](const sets::Closed& c) { return json{{"hi", rat(c.hi)}, {"lo", rat(c.lo)}, {"t", "closed"}}; },
                        [](const sets::Open& o) { return json{{"hi", rat(o.hi)}, {"lo", rat(o.lo)}, {"t", "open"}}; },
                        [](const sets::Product& pr) {
                          json arr = json::array();
                          for (const auto& f : pr.factors) arr.push_back(to_json(f));
                          return json{{"t", "product"}, {"v", arr}};
                        },
                        [](const sets::Inject& in) { return json{{"i", in.summand}, {"t", "inj"}, {"v", to_json(*in.inner)}}; },
                        [](const sets::Union& u) {
                          json arr = json::array();
                          for (const auto& p : u.parts) arr.push_back(to_json(p));
                          return json{{"t", "union"}, {"v", arr}};
                        },
                    },
                    s.v);
}

SetDesc set_from_json(const json& j) {
  std::string t = tag(j);
  if (t == "points") {
    std::vector<PointId> pts;
    for (const auto& p : field(j, "v")) pts.push_back(point_from_json(p));
    return SetDesc{sets::Points{std::move(pts)}};
  }
  if (t == "closed") return closed(rat_from(field(j, "lo")), rat_from(field(j, "hi")));
  if (t == "open") return open_set(rat_from(field(j, "lo")), rat_from(field(j, "hi")));
  if (t == "product") {
    std::vector<SetDesc> fs;
    for (const auto& f : field(j, "v")) fs.push_back(set_from_json(f));
    return product(std::move(fs));
  }
  if (t == "inj") return inject(field(j, "i").get<std::size_t>(), set_from_json(field(j, "v")));
  if (t == "union") {
    std::vector<SetDesc> parts;
    for (const auto& p : field(j, "v")) parts.push_back(set_from_json(p));
    return set_union(std::move(parts));
  }
  throw Error(Errc::Config, "unknown set tag '" + t + "'");
}

json to_json(const WitnessFamily& w) {
  json j{{"kind", witness_kind_name(w.kind)}};
  if (w.pattern) {
    j["pattern"] = *w.pattern;
    j["count"] = w.pattern_count;
  } else {
    json arr = json::array();
    for (const auto& m : w.members) arr.push_back(to_json(m));
    j["members"] = arr;
  }
  return j;
}

WitnessFamily witness_from_json(const json& j) {
  WitnessKind kind = parse_witness_kind(field(j, "kind").get<std::string>());
  if (j.contains("pattern")) {
    return witness_from_pattern(kind, j.at("pattern").get<std::string>(), field(j, "count").get<std::size_t>());
  }
  WitnessFamily w;
  w.kind = kind;
  for (const auto& m : field(j, "members")) w.members.push_back(set_from_json(m));
  return w;
}

namespace {

// Tagged prefix encoding; every variant has its own leading character and
// every list is bracketed, so distinct descriptors give distinct keys.
void key(std::string& out, const Rational& r) { out += selgame::to_string(r); }

void key(std::string& out, const PointId& p) {
  std::visit(overloaded{
                 [&](Nat n) { out += 'n' + std::to_string(n); },
                 [&](const Rational& r) {
                   out += 'r';
                   key(out, r);
                 },
                 [&](const Word& w) {
                   out += "w[";
                   for (Nat d : w) out += std::to_string(d) + ',';
                   out += ']';
                 },
                 [&](Infinity) { out += 'i'; },
                 [&](const std::vector<PointId>& cs) {
                   out += "t[";
                   for (const auto& c : cs) {
                     key(out, c);
                     out += ',';
                   }
                   out += ']';
                 },
                 [&](const InjectedPoint& ip) {
                   out += 'j' + std::to_string(ip.summand) + ':';
                   key(out, *ip.point);
                 },
             },
             p.v);
}

void key(std::string& out, const std::optional<Rational>& r) {
  if (r) {
    key(out, *r);
  } else {
    out += '*';
  }
}

void key(std::string& out, const OpenDesc& u) {
  out += "U[";
  for (const auto& a : u.atoms) {
    std::visit(overloaded{
                   [&](const atoms::Singleton& x) {
                     out += 's';
                     key(out, x.point);
                   },
                   [&](const atoms::Interval& x) {
                     out += 'v';
                     key(out, x.lo);
                     out += ',';
                     key(out, x.hi);
                   },
                   [&](const atoms::HalfOpen& x) {
                     out += 'h';
                     key(out, x.lo);
                     out += ',';
                     key(out, x.hi);
                   },
                   [&](const atoms::Cylinder& x) {
                     out += 'c';
                     key(out, PointId::word(x.prefix));
                   },
                   [&](const atoms::CoNamed& x) {
                     out += "x[";
                     for (const auto& e : x.excluded) {
                       key(out, e);
                       out += ',';
                     }
                     out += ']';
                   },
                   [&](const atoms::Rectangle& x) {
                     out += "R[";
                     for (const auto& f : x.factors) key(out, f);
                     out += ']';
                   },
                   [&](const atoms::Inject& x) {
                     out += 'J' + std::to_string(x.summand) + ':';
                     key(out, *x.inner);
                   },
                   [&](const atoms::Whole&) { out += 'W'; },
               },
               a);
    out += ';';
  }
  out += ']';
}

void key(std::string& out, const SetDesc& s) {
  std::visit(overloaded{
                 [&](const sets::Points& x) {
                   out += "P[";
                   for (const auto& p : x.points) {
                     key(out, p);
                     out += ',';
                   }
                   out += ']';
                 },
                 [&](const sets::Closed& x) {
                   out += "C";
                   key(out, x.lo);
                   out += ',';
                   key(out, x.hi);
                   out += ';';
                 },
                 [&](const sets::Open& x) {
                   out += "O";
                   key(out, x.lo);
                   out += ',';
                   key(out, x.hi);
                   out += ';';
                 },
                 [&](const sets::Product& x) {
                   out += "X[";
                   for (const auto& f : x.factors) key(out, f);
                   out += ']';
                 },
                 [&](const sets::Inject& x) {
                   out += 'I' + std::to_string(x.summand) + ':';
                   key(out, *x.inner);
                 },
                 [&](const sets::Union& x) {
                   out += "V[";
                   for (const auto& p : x.parts) key(out, p);
                   out += ']';
                 },
             },
             s.v);
}

}  // namespace

std::string canonical_key(const SetDesc& s) {
  std::string out;
  key(out, s);
  return out;
}

std::string canonical_key(const OpenDesc& u) {
  std::string out;
  key(out, u);
  return out;
}

}  // namespace selgame::topology
