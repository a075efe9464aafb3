#include "selgame/topology/cover.hpp"

#include "selgame/error.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::topology {
namespace {

constexpr std::pair<CoverClass, const char*> kClassNames[] = {
    {CoverClass::O, "O"},         {CoverClass::Lambda, "Lambda"}, {CoverClass::Omega, "Omega"},
    {CoverClass::Gamma, "Gamma"}, {CoverClass::K, "K"},           {CoverClass::KRel, "Krel"},
};

}  // namespace

const char* cover_class_name(CoverClass c) {
  for (auto [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "?";
}

CoverClass parse_cover_class(const std::string& name) {
  for (auto [cls, n] : kClassNames) {
    if (name == n) return cls;
  }
  throw Error(Errc::Config, "unknown cover class '" + name + "'");
}

std::vector<SetDesc> battery_for(const Space& s, CoverClass c) {
  switch (c) {
    case CoverClass::O:
    case CoverClass::Lambda:
    case CoverClass::Gamma: {
      std::vector<SetDesc> out;
      for (const auto& p : s.batteries.points) out.push_back(point_set(p));
      return out;
    }
    case CoverClass::Omega: return s.batteries.finite_sets;
    case CoverClass::K: return s.batteries.compacts;
    case CoverClass::KRel: return s.batteries.relcompacts;
  }
  return {};
}

bool challenge_fits(const Space& s, CoverClass c, const SetDesc& challenge) {
  auto pts = std::get_if<sets::Points>(&challenge.v);
  switch (c) {
    case CoverClass::O:
    case CoverClass::Lambda:
    case CoverClass::Gamma: return pts && pts->points.size() == 1;
    case CoverClass::Omega: return pts != nullptr;
    case CoverClass::K: return is_compact(s, challenge);
    case CoverClass::KRel: return is_relatively_compact(s, challenge);
  }
  return false;
}

Cover::Cover(std::string name, SpacePtr space, CoverClass cls, ElementFn element, SelectFn select,
             std::optional<std::size_t> size)
    : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->space = std::move(space);
  impl_->cls = cls;
  impl_->element = std::move(element);
  impl_->select = std::move(select);
  impl_->size = size;
}

Cover Cover::from_elements(std::string name, SpacePtr space, CoverClass cls, std::vector<OpenDesc> elements) {
  auto elems = std::make_shared<const std::vector<OpenDesc>>(std::move(elements));
  std::size_t n = elems->size();
  auto element = [elems](std::size_t i) -> std::optional<OpenDesc> {
    if (i >= elems->size()) return std::nullopt;
    return (*elems)[i];
  };
  auto select = [elems](const SetDesc& k) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < elems->size(); ++i) {
      if (contains(k, (*elems)[i])) return i;
    }
    return std::nullopt;
  };
  return Cover(std::move(name), std::move(space), cls, element, select, n);
}

const std::string& Cover::name() const { return impl_->name; }
const SpacePtr& Cover::space() const { return impl_->space; }
CoverClass Cover::cover_class() const { return impl_->cls; }
std::optional<std::size_t> Cover::size() const { return impl_->size; }

std::optional<OpenDesc> Cover::element(std::size_t i) const {
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->elements.find(i); it != impl_->elements.end()) return it->second;
  }
  if (impl_->size && i >= *impl_->size) return std::nullopt;
  auto e = impl_->element(i);
  std::lock_guard lock(impl_->mu);
  impl_->elements.emplace(i, e);
  return e;
}

std::optional<std::size_t> Cover::select(const SetDesc& challenge) const {
  std::string key = canonical_key(challenge);
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->selections.find(key); it != impl_->selections.end()) return it->second;
  }
  auto i = impl_->select(challenge);
  std::lock_guard lock(impl_->mu);
  impl_->selections.emplace(std::move(key), i);
  return i;
}

std::optional<std::size_t> Cover::select_checked(const SetDesc& challenge) const {
  auto i = select(challenge);
  if (!i) return std::nullopt;
  auto e = element(*i);
  if (!e || !contains(challenge, *e)) {
    throw Error(Errc::SelectorFailure, "cover " + name() + " selected element " + std::to_string(*i) +
                                           " which does not contain " + to_string(challenge));
  }
  return i;
}

Cover Cover::renamed(std::string name) const {
  Cover c(std::move(name), impl_->space, impl_->cls, impl_->element, impl_->select, impl_->size);
  return c;
}

}  // namespace selgame::topology
