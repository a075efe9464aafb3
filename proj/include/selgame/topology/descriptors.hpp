#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "selgame/box.hpp"
#include "selgame/combinatorics/sequences.hpp"
#include "selgame/rational.hpp"

namespace selgame::topology {

using combinatorics::Nat;
using Word = std::vector<Nat>;

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
  friend bool operator<(Infinity, Infinity) { return false; }
};

struct PointId;

struct InjectedPoint {
  std::size_t summand;
  Box<PointId> point;
  friend bool operator==(const InjectedPoint&, const InjectedPoint&);
  friend bool operator<(const InjectedPoint&, const InjectedPoint&);
};

struct PointId {
  // Word points are eventually-zero sequences given by a finite prefix.
  std::variant<Nat, Rational, Word, Infinity, std::vector<PointId>, InjectedPoint> v;

  static PointId nat(Nat n) { return {n}; }
  static PointId rat(Rational r) { return {std::move(r)}; }
  static PointId word(Word w) { return {std::move(w)}; }
  static PointId infinity() { return {Infinity{}}; }
  static PointId tuple(std::vector<PointId> coords) { return {std::move(coords)}; }
  static PointId inject(std::size_t summand, PointId p) { return {InjectedPoint{summand, std::move(p)}}; }

  std::optional<Rational> numeric() const;
  const std::vector<PointId>* coords() const { return std::get_if<std::vector<PointId>>(&v); }
  const InjectedPoint* injected() const { return std::get_if<InjectedPoint>(&v); }
  const Word* as_word() const { return std::get_if<Word>(&v); }

  friend bool operator==(const PointId& a, const PointId& b) { return a.v == b.v; }
  friend bool operator<(const PointId& a, const PointId& b) { return a.v < b.v; }
};

struct OpenDesc;

namespace atoms {
struct Singleton {
  PointId point;
  friend bool operator==(const Singleton&, const Singleton&) = default;
};
// Open interval; a missing bound is infinite.
struct Interval {
  std::optional<Rational> lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};
// Sorgenfrey basic set [lo, hi).
struct HalfOpen {
  Rational lo, hi;
  friend bool operator==(const HalfOpen&, const HalfOpen&) = default;
};
struct Cylinder {
  Word prefix;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};
// Every point except the named ones.
struct CoNamed {
  std::vector<PointId> excluded;
  friend bool operator==(const CoNamed&, const CoNamed&) = default;
};
struct Rectangle {
  std::vector<OpenDesc> factors;
  friend bool operator==(const Rectangle&, const Rectangle&);
};
struct Inject {
  std::size_t summand;
  Box<OpenDesc> inner;
  friend bool operator==(const Inject&, const Inject&);
};
struct Whole {
  friend bool operator==(const Whole&, const Whole&) = default;
};
}  // namespace atoms

using Atom = std::variant<atoms::Singleton, atoms::Interval, atoms::HalfOpen, atoms::Cylinder, atoms::CoNamed,
                          atoms::Rectangle, atoms::Inject, atoms::Whole>;

// Finite union of atoms; no atoms means the empty set.
struct OpenDesc {
  std::vector<Atom> atoms;

  bool is_empty() const { return atoms.empty(); }
  friend bool operator==(const OpenDesc&, const OpenDesc&) = default;
};

OpenDesc empty_open();
OpenDesc whole();
OpenDesc singleton(PointId p);
OpenDesc interval(std::optional<Rational> lo, std::optional<Rational> hi);
OpenDesc right_ray(Rational lo);
OpenDesc half_open(Rational lo, Rational hi);
OpenDesc cylinder(Word prefix);
OpenDesc co_named(std::vector<PointId> excluded);
OpenDesc rectangle(std::vector<OpenDesc> factors);
OpenDesc inject(std::size_t summand, OpenDesc inner);
OpenDesc unite(const OpenDesc& a, const OpenDesc& b);
OpenDesc unite(const std::vector<OpenDesc>& parts);

struct SetDesc;

namespace sets {
struct Points {
  std::vector<PointId> points;
  friend bool operator==(const Points&, const Points&) = default;
};
struct Closed {
  Rational lo, hi;
  friend bool operator==(const Closed&, const Closed&) = default;
};
// Bounded open interval; relatively compact in line-like models.
struct Open {
  Rational lo, hi;
  friend bool operator==(const Open&, const Open&) = default;
};
struct Product {
  std::vector<SetDesc> factors;
  friend bool operator==(const Product&, const Product&);
};
struct Inject {
  std::size_t summand;
  Box<SetDesc> inner;
  friend bool operator==(const Inject&, const Inject&);
};
struct Union {
  std::vector<SetDesc> parts;
  friend bool operator==(const Union&, const Union&);
};
}  // namespace sets

struct SetDesc {
  std::variant<sets::Points, sets::Closed, sets::Open, sets::Product, sets::Inject, sets::Union> v;

  friend bool operator==(const SetDesc&, const SetDesc&) = default;
};

using CompactDesc = SetDesc;

SetDesc points(std::vector<PointId> pts);
SetDesc point_set(PointId p);
SetDesc closed(Rational lo, Rational hi);
SetDesc open_set(Rational lo, Rational hi);
SetDesc product(std::vector<SetDesc> factors);
SetDesc inject(std::size_t summand, SetDesc inner);
SetDesc set_union(std::vector<SetDesc> parts);

// Descriptor semantics, independent of any ambient space.
bool member(const PointId& p, const OpenDesc& u);
bool member(const PointId& p, const Atom& a);
bool in_set(const PointId& p, const SetDesc& s);
bool is_empty(const SetDesc& s);

// Values at which membership can change, per coordinate path.
struct Cuts {
  std::set<Rational> values;
  std::map<std::size_t, Cuts> children;

  Cuts& child(std::size_t i) { return children[i]; }
  const Cuts* find_child(std::size_t i) const;
};

void collect_cuts(const OpenDesc& u, Cuts& out);
void collect_cuts(const SetDesc& s, Cuts& out);
void collect_cuts(const PointId& p, Cuts& out);

// Finite sample of s that meets every cell of the partition induced by cuts.
std::vector<PointId> representatives(const SetDesc& s, const Cuts& cuts);

bool contains(const SetDesc& k, const OpenDesc& u);
bool subset(const SetDesc& b, const SetDesc& a);

// Throws Error(NotExpressible) naming the offending pair.
OpenDesc intersect(const OpenDesc& a, const OpenDesc& b);
OpenDesc project(const OpenDesc& u, std::size_t coord);
SetDesc project(const SetDesc& s, std::size_t coord);
std::size_t arity(const SetDesc& s);

std::string to_string(const PointId& p);
std::string to_string(const OpenDesc& u);
std::string to_string(const SetDesc& s);

}  // namespace selgame::topology
