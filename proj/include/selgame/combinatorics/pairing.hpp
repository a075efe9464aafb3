#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "selgame/combinatorics/sequences.hpp"

namespace selgame::combinatorics {

// p_1 = 2, p_2 = 3, ...
Nat nth_prime(Nat n);
bool is_prime_power(Nat m);

// Row 0 lists the non prime powers 0, 1, 6, 10, ...; row n >= 1 is p_n^(k+1).
// Throws std::overflow_error when the value exceeds 64 bits.
Nat beta_star(Nat n, Nat k);
std::pair<Nat, Nat> beta_star_inverse(Nat m);

// r: index n of the enumerated sequence -> finite set of naturals.
struct RangeConstraint {
  std::function<std::vector<Nat>(Nat)> r;

  static RangeConstraint empty();
  // r(s_n) = range of the first half of the n-th split pair.
  static RangeConstraint split_minus_range();
  // r(s_n) = range(s_n) over enum_finseq.
  static RangeConstraint finseq_range();
};

class PairingFamily {
 public:
  static constexpr Nat kDefaultSearchBound = 1'000'000;

  explicit PairingFamily(RangeConstraint r, Nat search_bound = kDefaultSearchBound);

  Nat gamma(Nat n) const;
  Nat beta(Nat n, Nat k) const;
  std::pair<Nat, Nat> inverse(Nat m) const;
  const RangeConstraint& constraint() const { return r_; }

 private:
  void extend_to(Nat n) const;  // caller holds mu_
  Nat gamma_preimage(Nat lambda) const;

  RangeConstraint r_;
  Nat search_bound_;
  mutable std::mutex mu_;
  mutable std::vector<Nat> gamma_;
  mutable std::unordered_map<Nat, Nat> preimage_;
  mutable std::vector<bool> used_;
};

std::shared_ptr<const PairingFamily> build_pairing(RangeConstraint r,
                                                   Nat search_bound = PairingFamily::kDefaultSearchBound);
std::pair<Nat, Nat> beta_inverse(const PairingFamily& pf, Nat m);

}  // namespace selgame::combinatorics
