#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace selgame::combinatorics {

using Nat = std::uint64_t;
using FinSeq = std::vector<Nat>;

struct SplitPair {
  FinSeq minus;
  FinSeq plus;

  FinSeq joined() const;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

// Sequences are graded by g = max(length, 1 + max entry) and listed
// lexicographically (prefixes first) inside a grade. s_0 is the empty sequence.
FinSeq enum_finseq(Nat n);
Nat finseq_index(const FinSeq& s);
Nat finseq_grade(const FinSeq& s);

// Number of sequences of grade <= g, i.e. every sequence with length <= g and
// entries < g has index below this bound. Throws std::overflow_error past 2^64.
Nat finseq_prefix_bound(Nat g);

// Pairs of equal-length sequences, graded by max(half length, 1 + max entry),
// lexicographic on the concatenation. Index 0 is (<>, <>).
SplitPair enum_split_pairs(Nat n);
Nat split_pair_index(const SplitPair& p);
Nat split_pair_prefix_bound(Nat g);

Nat cantor_pair(Nat a, Nat b);
std::pair<Nat, Nat> cantor_unpair(Nat z);

}  // namespace selgame::combinatorics
