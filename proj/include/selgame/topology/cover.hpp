#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "selgame/topology/descriptors.hpp"
#include "selgame/topology/space.hpp"

namespace selgame::topology {

enum class CoverClass { O, Lambda, Omega, Gamma, K, KRel };

const char* cover_class_name(CoverClass c);
CoverClass parse_cover_class(const std::string& name);

// Challenges a class is judged on: O/Λ/Γ points, Ω finite sets, K compacts,
// K_rel relatively compact sets.
std::vector<SetDesc> battery_for(const Space& s, CoverClass c);
bool challenge_fits(const Space& s, CoverClass c, const SetDesc& challenge);

// Lazy cover: an element stream plus a selector returning the index of an
// element that contains a challenge. Copies share state; elements and
// selections are memoized under a per-instance lock.
class Cover {
 public:
  using ElementFn = std::function<std::optional<OpenDesc>(std::size_t)>;
  using SelectFn = std::function<std::optional<std::size_t>(const SetDesc&)>;

  Cover() = default;
  Cover(std::string name, SpacePtr space, CoverClass cls, ElementFn element, SelectFn select,
        std::optional<std::size_t> size = std::nullopt);

  // Finite cover with least-index selection by containment.
  static Cover from_elements(std::string name, SpacePtr space, CoverClass cls, std::vector<OpenDesc> elements);

  const std::string& name() const;
  const SpacePtr& space() const;
  CoverClass cover_class() const;
  // Reading of the cover-class definitions: i = 2 admits the whole space.
  int convention() const { return 2; }
  std::optional<std::size_t> size() const;

  // nullopt past the end of a finite stream.
  std::optional<OpenDesc> element(std::size_t i) const;
  std::optional<std::size_t> select(const SetDesc& challenge) const;
  // Selection re-verified by containment.
  std::optional<std::size_t> select_checked(const SetDesc& challenge) const;

  bool valid() const { return impl_ != nullptr; }
  Cover renamed(std::string name) const;

 private:
  struct Impl {
    std::string name;
    SpacePtr space;
    CoverClass cls;
    ElementFn element;
    SelectFn select;
    std::optional<std::size_t> size;
    std::mutex mu;
    std::map<std::size_t, std::optional<OpenDesc>> elements;
    std::map<std::string, std::optional<std::size_t>> selections;
  };
  std::shared_ptr<Impl> impl_;
};

// Append-only table assigning stable indices to keys.
template <class Value>
class InternTable {
 public:
  std::size_t intern(const std::string& key, const Value& v) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = index_.emplace(key, values_.size());
    if (inserted) values_.push_back(v);
    return it->second;
  }
  std::optional<Value> at(std::size_t i) const {
    std::lock_guard lock(mu_);
    if (i >= values_.size()) return std::nullopt;
    return values_[i];
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return values_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::size_t> index_;
  std::vector<Value> values_;
};

}  // namespace selgame::topology
