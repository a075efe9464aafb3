#include "selgame/combinatorics/pairing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "selgame/error.hpp"

namespace selgame::combinatorics {
namespace {

struct PrimeTable {
  std::mutex mu;
  std::vector<Nat> primes;
  Nat sieved_to = 1;

  void sieve_to(Nat limit) {
    if (limit <= sieved_to) return;
    limit = std::max(limit, 2 * sieved_to);
    std::vector<bool> composite(limit + 1, false);
    std::vector<Nat> found;
    for (Nat i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      found.push_back(i);
      for (Nat j = i * i; j <= limit; j += i) composite[j] = true;
    }
    primes = std::move(found);
    sieved_to = limit;
  }
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

struct NonPrimePowers {
  std::mutex mu;
  std::vector<Nat> values;
  Nat next = 0;

  void extend_past_count(std::size_t count) {
    while (values.size() <= count) {
      if (!is_prime_power(next)) values.push_back(next);
      ++next;
    }
  }
  void extend_past_value(Nat m) {
    while (next <= m) {
      if (!is_prime_power(next)) values.push_back(next);
      ++next;
    }
  }
};

NonPrimePowers& non_prime_powers() {
  static NonPrimePowers table;
  return table;
}

Nat checked_pow(Nat base, Nat e) {
  Nat out = 1;
  for (Nat i = 0; i < e; ++i) {
    if (out > UINT64_MAX / base) throw std::overflow_error("prime power exceeds 64 bits");
    out *= base;
  }
  return out;
}

// 1-based index of the prime p.
Nat prime_index(Nat p) {
  auto& t = prime_table();
  std::lock_guard lock(t.mu);
  t.sieve_to(p);
  auto it = std::lower_bound(t.primes.begin(), t.primes.end(), p);
  return static_cast<Nat>(it - t.primes.begin()) + 1;
}

}  // namespace

Nat nth_prime(Nat n) {
  if (n == 0) throw std::invalid_argument("primes are indexed from 1");
  auto& t = prime_table();
  std::lock_guard lock(t.mu);
  while (t.primes.size() < n) t.sieve_to(2 * t.sieved_to + 16);
  return t.primes[n - 1];
}

bool is_prime_power(Nat m) {
  if (m < 2) return false;
  for (Nat p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;
}

Nat beta_star(Nat n, Nat k) {
  if (n >= 1) return checked_pow(nth_prime(n), k + 1);
  auto& t = non_prime_powers();
  std::lock_guard lock(t.mu);
  t.extend_past_count(k);
  return t.values[k];
}

std::pair<Nat, Nat> beta_star_inverse(Nat m) {
  if (is_prime_power(m)) {
    Nat p = 2;
    while (m % p != 0) ++p;
    Nat e = 0;
    for (Nat x = m; x > 1; x /= p) ++e;
    return {prime_index(p), e - 1};
  }
  auto& t = non_prime_powers();
  std::lock_guard lock(t.mu);
  t.extend_past_value(m);
  auto it = std::lower_bound(t.values.begin(), t.values.end(), m);
  return {0, static_cast<Nat>(it - t.values.begin())};
}

RangeConstraint RangeConstraint::empty() {
  return {[](Nat) { return std::vector<Nat>{}; }};
}

RangeConstraint RangeConstraint::split_minus_range() {
  return {[](Nat n) { return enum_split_pairs(n).minus; }};
}

RangeConstraint RangeConstraint::finseq_range() {
  return {[](Nat n) { return enum_finseq(n); }};
}

PairingFamily::PairingFamily(RangeConstraint r, Nat search_bound)
    : r_(std::move(r)), search_bound_(search_bound) {}

void PairingFamily::extend_to(Nat n) const {
  while (gamma_.size() <= n) {
    Nat i = gamma_.size();
    std::vector<Nat> rs = r_.r(i);
    Nat lambda = 0;
    if (!rs.empty()) {
      Nat top = *std::max_element(rs.begin(), rs.end());
      lambda = 1;
      while (beta_star(lambda, 0) <= top) ++lambda;
    }
    while (lambda < used_.size() && used_[lambda]) ++lambda;
    if (lambda >= used_.size()) used_.resize(lambda + 1, false);
    used_[lambda] = true;
    gamma_.push_back(lambda);
    preimage_.emplace(lambda, i);
  }
}

Nat PairingFamily::gamma(Nat n) const {
  std::lock_guard lock(mu_);
  extend_to(n);
  return gamma_[n];
}

Nat PairingFamily::beta(Nat n, Nat k) const { return beta_star(gamma(n), k); }

Nat PairingFamily::gamma_preimage(Nat lambda) const {
  std::lock_guard lock(mu_);
  for (;;) {
    if (auto it = preimage_.find(lambda); it != preimage_.end()) return it->second;
    if (gamma_.size() >= search_bound_) {
      throw Error(Errc::ConstraintViolation,
                  "no row maps to " + std::to_string(lambda) + " within search bound " +
                      std::to_string(search_bound_));
    }
    extend_to(gamma_.size());
  }
}

std::pair<Nat, Nat> PairingFamily::inverse(Nat m) const {
  auto [lambda, k] = beta_star_inverse(m);
  return {gamma_preimage(lambda), k};
}

std::shared_ptr<const PairingFamily> build_pairing(RangeConstraint r, Nat search_bound) {
  return std::make_shared<const PairingFamily>(std::move(r), search_bound);
}

std::pair<Nat, Nat> beta_inverse(const PairingFamily& pf, Nat m) { return pf.inverse(m); }

}  // namespace selgame::combinatorics
