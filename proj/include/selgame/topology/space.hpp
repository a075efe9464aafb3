#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selgame/topology/descriptors.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::topology {

enum class SpaceKind {
  DiscreteN,
  RationalLine,
  RealLine,
  UnitInterval,
  Baire,
  Fortissimo,
  RightOrder,
  Sorgenfrey,
  OnePoint,
  Sum,
  Product,
};

const char* space_kind_name(SpaceKind k);
SpaceKind parse_space_kind(const std::string& name);

struct SpaceFlags {
  bool t1 = true;
  bool regular = true;
  bool second_countable = true;
  // Set when the model only approximates the intended space.
  bool fidelity_caveat = false;
  friend bool operator==(const SpaceFlags&, const SpaceFlags&) = default;
};

struct Batteries {
  std::vector<PointId> points;
  std::vector<SetDesc> finite_sets;
  std::vector<SetDesc> compacts;
  std::vector<SetDesc> relcompacts;
};

struct Space;
using SpacePtr = std::shared_ptr<const Space>;

struct Space {
  std::string id;
  SpaceKind kind = SpaceKind::OnePoint;
  // Summands or factors; a power repeats one factor.
  std::vector<SpacePtr> parts;
  bool power = false;
  // Product of parts[1..]; set for products of arity >= 2.
  SpacePtr tail;
  SpaceFlags flags;
  Batteries batteries;
  std::map<std::string, WitnessFamily> witnesses;

  std::size_t arity() const { return parts.size(); }
  const WitnessFamily& witness(const std::string& name) const;
};

SpaceFlags default_flags(SpaceKind kind);

SpacePtr make_space(std::string id, SpaceKind kind);
SpacePtr make_product(std::string id, std::vector<SpacePtr> factors);
SpacePtr make_power(std::string id, SpacePtr base, std::size_t n);
SpacePtr make_sum(std::string id, std::vector<SpacePtr> summands);
// Copy of the space with batteries and witnesses replaced.
SpacePtr with_data(const SpacePtr& base, Batteries batteries, std::map<std::string, WitnessFamily> witnesses);

// Type checks; failures throw Error(TypeMismatch).
void check_point(const Space& s, const PointId& p);
void check_open(const Space& s, const OpenDesc& u);
void check_set(const Space& s, const SetDesc& k);
bool valid_point(const Space& s, const PointId& p);

bool member(const Space& s, const PointId& p, const OpenDesc& u);
bool contains(const Space& s, const SetDesc& k, const OpenDesc& u);
bool subset(const Space& s, const SetDesc& b, const SetDesc& a);
// U ⊆ W for open descriptors, decided over cut cells.
bool open_subset(const Space& s, const OpenDesc& u, const OpenDesc& w);

// x ∈ sat(A), the intersection of all open neighbourhoods of A.
bool in_sat(const Space& s, const PointId& x, const SetDesc& a);
bool subset_sat(const Space& s, const SetDesc& b, const SetDesc& a);

bool is_compact(const Space& s, const SetDesc& k);
bool is_relatively_compact(const Space& s, const SetDesc& k);

PointId point_at(const Space& s, Nat k);
std::optional<OpenDesc> basis_at(const Space& s, Nat k);
// A basic open set around x inside u, when u contains x.
std::optional<OpenDesc> basic_around(const Space& s, const PointId& x, const OpenDesc& u);

// Point of the space outside u, found by searching cut neighbourhoods and an
// enumerated prefix; nullopt means u behaves as the whole space.
std::optional<PointId> point_outside(const Space& s, const OpenDesc& u);

// Closure on descriptor kinds where it is computable; nullopt otherwise.
std::optional<SetDesc> closure(const Space& s, const SetDesc& k);

// Finite sample of the whole space meeting every cell of the cuts.
std::optional<SetDesc> whole_region(const Space& s, const Cuts& cuts);

const char* kind_label(const Space& s);

}  // namespace selgame::topology
