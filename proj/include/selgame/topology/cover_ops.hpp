#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "selgame/topology/cover.hpp"

namespace selgame::topology {

struct ClassifyOptions {
  // Replaces the space's own batteries when set.
  std::optional<Batteries> batteries;
  // Tests a finite list against the finite set {x_i} with x_i outside the i-th element.
  bool diagonal = true;
  // Γ: each battery point may be missed by at most this many elements.
  std::size_t gamma_tolerance = 0;
  // Λ without Ω: each battery point lies in at least this many elements.
  std::size_t lambda_multiplicity = 2;
};

std::set<CoverClass> classify_cover(const Space& s, const std::vector<OpenDesc>& elements,
                                    const ClassifyOptions& opts = {});

// Finite subfamily of an open cover covering a challenge, by element index.
using Finder = std::function<std::optional<std::vector<std::size_t>>(const Cover&, const SetDesc&)>;

// Points are selected one by one, intervals by a greedy chain of covering
// elements, products by the tube lemma, sums summandwise.
std::optional<std::vector<std::size_t>> finite_subcover(const Cover& c, const SetDesc& k);
Finder default_finder();

std::optional<std::vector<std::size_t>> finite_subcover_product(const Space& prod, const SetDesc& a,
                                                                const SetDesc& b, const Cover& c,
                                                                const Finder& finder_a, const Finder& finder_b);

// Indices below this bound are direct; above it they name interned entries.
constexpr std::size_t kInternBase = std::size_t(1) << 62;

struct UnionClosure {
  Cover cover;
  // Indices of the underlying cover joined by element i.
  std::function<std::vector<std::size_t>(std::size_t)> members;
};

UnionClosure finite_union_closure(const Cover& c, Finder finder = default_finder());

struct Refinement {
  Cover cover;
  // Index of the input element containing output element i.
  std::function<std::optional<std::size_t>(std::size_t)> parent;
};

// Rectangle U1×...×Un with e ⊆ it ⊆ w, or nullopt when e ⊄ w.
std::optional<OpenDesc> wallace_rectangle(const Space& prod, const OpenDesc& w, const SetDesc& e);

Refinement rectangle_refine(const Cover& c);
// c lives on a power X^n; the result lives on X.
Refinement cube_refine(const Cover& c);

// Intersection of the coordinate projections of a rectangle.
OpenDesc diagonal_core(const OpenDesc& rect, std::size_t n);

class CountableSubcover {
 public:
  Cover cover;
  std::optional<std::size_t> parent(std::size_t i) const;
  // Distinct basis unions emitted so far.
  std::size_t distinct() const;
  // Distinct input elements chosen for them.
  std::size_t parents_used() const;

  struct State;
  std::shared_ptr<State> state;
};

CountableSubcover countable_k_subcover(const Cover& c, const std::vector<SetDesc>& battery);

// Projection of a product set onto factors 1..n-1 (a plain factor when n = 2).
SetDesc tail_project(const SetDesc& s, std::size_t n);
PointId join_point(const PointId& head, const PointId& tail, std::size_t n);
// Rectangle atom split into (first factor, remaining factors).
std::pair<OpenDesc, OpenDesc> split_atom(const Atom& a, std::size_t n);

}  // namespace selgame::topology
