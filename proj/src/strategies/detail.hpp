#pragma once

#include "selgame/error.hpp"
#include "selgame/topology/cover_ops.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::strategies::detail {

using namespace topology;

// K × L in a product of arity n, where L lives on the tail factors.
inline SetDesc join_set(const SetDesc& k, const SetDesc& l, std::size_t n) {
  if (n == 2) return product({k, l});
  if (auto pr = std::get_if<sets::Product>(&l.v)) {
    std::vector<SetDesc> fs{k};
    fs.insert(fs.end(), pr->factors.begin(), pr->factors.end());
    return product(std::move(fs));
  }
  if (auto ps = std::get_if<sets::Points>(&l.v)) {
    std::vector<SetDesc> parts;
    for (const auto& p : ps->points) {
      std::vector<SetDesc> fs{k};
      for (const auto& c : *p.coords()) fs.push_back(point_set(c));
      parts.push_back(product(std::move(fs)));
    }
    return set_union(std::move(parts));
  }
  if (auto u = std::get_if<sets::Union>(&l.v)) {
    std::vector<SetDesc> parts;
    for (const auto& p : u->parts) parts.push_back(join_set(k, p, n));
    return set_union(std::move(parts));
  }
  throw Error(Errc::NotExpressible, "cannot form a product with tail set " + to_string(l));
}

// (π_X, π_Y) of a single rectangle element.
inline std::optional<std::pair<OpenDesc, OpenDesc>> rect_parts(const OpenDesc& e, std::size_t n) {
  if (e.atoms.size() != 1) return std::nullopt;
  const auto& a = e.atoms.front();
  if (!std::holds_alternative<atoms::Rectangle>(a) && !std::holds_alternative<atoms::Whole>(a)) return std::nullopt;
  if (auto r = std::get_if<atoms::Rectangle>(&a); r && r->factors.size() != n) return std::nullopt;
  return split_atom(a, n);
}

}  // namespace selgame::strategies::detail
