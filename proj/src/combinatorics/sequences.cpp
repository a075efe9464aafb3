#include "selgame/combinatorics/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace selgame::combinatorics {
namespace {

using Wide = unsigned __int128;
constexpr Wide kCap = Wide(1) << 100;

Wide sat_add(Wide a, Wide b) { return std::min(kCap, a + b); }
Wide sat_mul(Wide a, Wide b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCap / b) return kCap;
  return a * b;
}
Wide sat_pow(Wide base, Nat e) {
  Wide out = 1;
  for (Nat i = 0; i < e; ++i) {
    out = sat_mul(out, base);
    if (out == kCap) break;
  }
  return out;
}

Nat narrow(Wide w) {
  if (w > Wide(UINT64_MAX)) throw std::overflow_error("sequence index exceeds 64 bits");
  return static_cast<Nat>(w);
}

// Words over {0..g-1} whose length is a multiple of `unit` and at most unit*g.
// Grade g collects those of full length or containing the letter g-1.
struct Grader {
  Nat unit;

  Wide prefix_bound(Nat g) const {
    Wide total = 0;
    for (Nat m = 0; m <= g; ++m) total = sat_add(total, sat_pow(g, unit * m));
    return total;
  }

  bool terminal(Nat g, Nat len, bool has_top) const {
    return len % unit == 0 && (has_top || len == unit * g);
  }

  // Grade-g words extending a prefix of length len.
  Wide extensions(Nat g, Nat len, bool has_top) const {
    Wide total = 0, bad = 0;
    for (Nat L = 0; L <= unit * g; L += unit) {
      if (L < len) continue;
      total = sat_add(total, sat_pow(g, L - len));
      if (!has_top && L < unit * g) bad = sat_add(bad, sat_pow(g - 1, L - len));
    }
    return total - std::min(total, bad);
  }

  Nat grade(const FinSeq& w) const {
    Nat g = (w.size() + unit - 1) / unit;
    for (Nat x : w) g = std::max(g, x + 1);
    return g;
  }

  FinSeq unrank(Nat n) const {
    Nat g = 0;
    Wide below = 0;
    for (;; ++g) {
      Wide upto = prefix_bound(g);
      if (Wide(n) < upto) break;
      below = upto;
    }
    Wide r = Wide(n) - below;
    FinSeq w;
    bool has_top = (g == 0);
    for (;;) {
      if (terminal(g, w.size(), has_top)) {
        if (r == 0) return w;
        --r;
      }
      bool descended = false;
      for (Nat d = 0; d < g; ++d) {
        bool top = has_top || d == g - 1;
        Wide c = extensions(g, w.size() + 1, top);
        if (r < c) {
          w.push_back(d);
          has_top = top;
          descended = true;
          break;
        }
        r -= c;
      }
      if (!descended) throw std::logic_error("unrank walked off its grade");
    }
  }

  Nat rank(const FinSeq& w) const {
    if (w.size() % unit != 0) throw std::invalid_argument("word length not a multiple of the unit");
    Nat g = grade(w);
    Wide out = g == 0 ? 0 : prefix_bound(g - 1);
    bool has_top = (g == 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (terminal(g, i, has_top)) out = sat_add(out, 1);
      for (Nat d = 0; d < w[i]; ++d) out = sat_add(out, extensions(g, i + 1, has_top || d == g - 1));
      has_top = has_top || w[i] == g - 1;
    }
    if (out >= kCap) throw std::overflow_error("sequence index exceeds 64 bits");
    return narrow(out);
  }
};

constexpr Grader kSingle{1};
constexpr Grader kDouble{2};

}  // namespace

FinSeq SplitPair::joined() const {
  FinSeq out = minus;
  out.insert(out.end(), plus.begin(), plus.end());
  return out;
}

FinSeq enum_finseq(Nat n) { return kSingle.unrank(n); }
Nat finseq_index(const FinSeq& s) { return kSingle.rank(s); }
Nat finseq_grade(const FinSeq& s) { return kSingle.grade(s); }
Nat finseq_prefix_bound(Nat g) { return narrow(kSingle.prefix_bound(g)); }

SplitPair enum_split_pairs(Nat n) {
  FinSeq w = kDouble.unrank(n);
  std::size_t half = w.size() / 2;
  return {FinSeq(w.begin(), w.begin() + half), FinSeq(w.begin() + half, w.end())};
}

Nat split_pair_index(const SplitPair& p) {
  if (p.minus.size() != p.plus.size()) throw std::invalid_argument("split pair halves differ in length");
  return kDouble.rank(p.joined());
}

Nat split_pair_prefix_bound(Nat g) { return narrow(kDouble.prefix_bound(g)); }

Nat cantor_pair(Nat a, Nat b) {
  Wide s = Wide(a) + b;
  return narrow(s * (s + 1) / 2 + b);
}

std::pair<Nat, Nat> cantor_unpair(Nat z) {
  Nat w = static_cast<Nat>((std::sqrt(8.0L * static_cast<long double>(z) + 1) - 1) / 2);
  auto tri = [](Nat t) { return Wide(t) * (t + 1) / 2; };
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  Nat b = static_cast<Nat>(z - tri(w));
  return {w - b, b};
}

}  // namespace selgame::combinatorics
