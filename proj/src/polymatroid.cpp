#include "omegalab/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace omegalab {

SetFunction::SetFunction(std::size_t n, std::vector<long> values) : n_(n), values_(std::move(values)) {
  if (n > kMaxGroundSet) throw std::invalid_argument("ground set too large (n > 20)");
  if (values_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("set function table must have 2^n entries");
}

SetFunction SetFunction::zero(std::size_t n) { return SetFunction(n, std::vector<long>(std::size_t{1} << n, 0)); }

SetFunction SetFunction::operator+(const SetFunction& o) const {
  if (o.n_ != n_) throw std::invalid_argument("set functions on different ground sets");
  std::vector<long> v(values_.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = values_[s] + o.values_[s];
  return SetFunction(n_, std::move(v));
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (s & (1u << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

std::string PolymatroidCheckReport::describe() const {
  if (ok()) return "polymatroid";
  std::string why = !is_normalized ? "f(empty) != 0"
                    : !nonnegative ? "negative value"
                    : !is_monotone ? "not monotone"
                                   : "not submodular";
  if (violating_pair)
    why += " at S=" + subset_to_string(violating_pair->first) + ", T=" + subset_to_string(violating_pair->second);
  return why;
}

PolymatroidCheckReport is_polymatroid(const SetFunction& f) {
  PolymatroidCheckReport rep;
  const Subset full = f.full();
  if (f(0) != 0) {
    rep.is_normalized = false;
    rep.violating_pair = std::make_pair(Subset{0}, Subset{0});
    return rep;
  }
  for (Subset s = 0; s <= full; ++s)
    if (f(s) < 0) {
      rep.nonnegative = false;
      rep.violating_pair = std::make_pair(s, s);
      return rep;
    }
  // bitmask order over (S, T); monotonicity first, then submodularity
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t) {
      if ((s & t) == s && f(s) > f(t)) {
        rep.is_monotone = false;
        rep.violating_pair = std::make_pair(s, t);
        return rep;
      }
    }
  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t)
      if (f(s | t) + f(s & t) > f(s) + f(t)) {
        rep.is_submodular = false;
        rep.violating_pair = std::make_pair(s, t);
        return rep;
      }
  return rep;
}

bool is_matroid(const SetFunction& f) {
  if (!is_polymatroid(f).ok()) return false;
  for (std::size_t i = 0; i < f.n(); ++i)
    if (f(Subset{1} << i) > 1) return false;
  return true;
}

SetFunction rho_from_support(const ExponentSet& supp) {
  if (supp.empty()) throw std::invalid_argument("empty support");
  const std::size_t n = supp.begin()->size();
  const int d = supp.begin()->degree();
  for (const auto& a : supp)
    if (a.degree() != d) throw std::invalid_argument("inhomogeneous support");
  std::vector<long> v(std::size_t{1} << n, 0);
  for (Subset s = 0; s < v.size(); ++s) {
    long best = 0;
    for (const auto& a : supp) {
      long sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s & (1u << i)) sum += a[i];
      best = std::max(best, sum);
    }
    v[s] = best;
  }
  return SetFunction(n, std::move(v));
}

SetFunction truncate(const SetFunction& r, long k) {
  const long d = r.rank();
  if (k < 0 || k > d) throw std::out_of_range("truncation index out of range");
  std::vector<long> v = r.values();
  for (auto& x : v) x = std::min(d - k, x);
  return SetFunction(r.n(), std::move(v));
}

SetFunction bar_from(const SetFunction& r, long start) {
  SetFunction sum = SetFunction::zero(r.n());
  for (long k = start; k <= r.rank(); ++k) sum = sum + truncate(r, k);
  return sum;
}

SetFunction bar(const SetFunction& r) { return bar_from(r, 0); }

SetFunction matroid_from_bases(std::size_t n, const std::vector<Subset>& bases) {
  if (bases.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  std::vector<long> v(std::size_t{1} << n, 0);
  for (Subset s = 0; s < v.size(); ++s) {
    long best = 0;
    for (Subset b : bases) best = std::max<long>(best, std::popcount(s & b));
    v[s] = best;
  }
  SetFunction f(n, std::move(v));
  if (!is_matroid(f)) throw std::invalid_argument("basis family does not define a matroid");
  const long d = std::popcount(bases.front());
  for (Subset b : bases)
    if (std::popcount(b) != d || f(b) != d)
      throw std::invalid_argument("basis family does not define a matroid");
  return f;
}

bool is_inseparable(const SetFunction& r, Subset s) {
  if (std::popcount(s) <= 1) return true;
  // 2-partitions {A, S\A}; fixing the lowest element in A visits each once
  const Subset low = s & (~s + 1);
  for (Subset a = (s - 1) & s; a != 0; a = (a - 1) & s) {
    if (!(a & low)) continue;
    const Subset b = s & ~a;
    if (b == 0) continue;
    if (r(s) >= r(a) + r(b)) return false;
  }
  return true;
}

SimplicityReport check_simplicity_conditions(const SetFunction& f) {
  if (f.n() > kMaxSimplicityGroundSet) throw std::invalid_argument("ground set too large (n > 8)");
  SimplicityReport rep;
  const Subset full = f.full();
  std::vector<bool> insep(full + 1);
  for (Subset s = 0; s <= full; ++s) insep[s] = is_inseparable(f, s);

  for (Subset s = 0; s <= full; ++s)
    for (Subset t = 0; t <= full; ++t) {
      const Subset i = s & t, u = s | t;
      if (i == 0 || i == s || i == t) continue;
      if (!(f(i) < f(s) && f(i) < f(t))) continue;
      if (!(insep[s] && insep[t] && insep[u])) continue;
      if (!(f(i) + f(u) < f(s) + f(t))) {
        rep.holds = false;
        rep.violating_pair = std::make_pair(s, t);
        return rep;
      }
    }

  // For each union U, find an enclosing inseparable S with equal value; then
  // every set partition of U into >= 2 blocks must be strictly subadditive.
  for (Subset u = 1; u <= full; ++u) {
    if (std::popcount(u) < 2) continue;
    std::optional<Subset> enclosing;
    for (Subset s = u; s <= full; s = (s + 1) | u) {
      if (insep[s] && f(s) == f(u)) {
        enclosing = s;
        break;
      }
      if (s == full) break;
    }
    if (!enclosing) continue;

    std::vector<Subset> blocks;
    std::optional<std::vector<Subset>> bad;
    std::function<void(Subset)> rec = [&](Subset rest) {
      if (bad) return;
      if (rest == 0) {
        if (blocks.size() < 2) return;
        long sum = 0;
        for (Subset b : blocks) sum += f(b);
        if (!(f(u) < sum)) bad = blocks;
        return;
      }
      const Subset low = rest & (~rest + 1);
      const Subset others = rest & ~low;
      // blocks containing the lowest remaining element
      for (Subset extra = others;; extra = (extra - 1) & others) {
        blocks.push_back(low | extra);
        rec(others & ~extra);
        blocks.pop_back();
        if (extra == 0 || bad) break;
      }
    };
    rec(u);
    if (bad) {
      rep.holds = false;
      rep.violating_family = std::make_pair(*enclosing, *bad);
      return rep;
    }
  }
  return rep;
}

long hyperbolic_rank(const SparsePolynomial& h, const RationalVector& e, const RationalVector& v) {
  if (!h.is_homogeneous()) throw std::invalid_argument("hyperbolic rank needs a homogeneous polynomial");
  const auto line = substitute_line(h, e, v);
  if (line.empty()) throw std::domain_error("h(e + t v) vanishes identically");
  return static_cast<long>(line.size()) - 1;
}

SetFunction polymatroid_from_hyperbolic(const SparsePolynomial& h, const RationalVector& e) {
  if (h.evaluate(e) == 0) throw std::domain_error("h(e) = 0");
  const std::size_t n = h.nvars();
  if (n > kMaxGroundSet) throw std::invalid_argument("ground set too large (n > 20)");
  std::vector<long> v(std::size_t{1} << n, 0);
  for (Subset s = 0; s < v.size(); ++s) {
    RationalVector dir(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) dir[i] = 1;
    v[s] = hyperbolic_rank(h, e, dir);
  }
  return SetFunction(n, std::move(v));
}

}  // namespace omegalab
