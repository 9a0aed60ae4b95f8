#include "omegalab/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace omegalab {

namespace {

int grevlex_range(const ExponentVector& a, const ExponentVector& b, std::size_t from, std::size_t to) {
  int da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = to; i-- > from;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (block_ == 0) return grevlex_range(a, b, 0, a.size());
  const int c = grevlex_range(a, b, 0, block_);
  if (c != 0) return c;
  return grevlex_range(a, b, block_, a.size());
}

namespace {

struct Term {
  ExponentVector exp;
  Integer coef;
};

using Terms = std::vector<Term>;

class Engine {
 public:
  Engine(std::size_t nvars, const MonomialOrder& order) : nvars_(nvars), order_(order) {}

  Terms from_poly(const SparsePolynomial& p) const {
    Integer den = 1;
    for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
    Terms t;
    for (const auto& [e, c] : p.terms()) t.push_back(Term{e, Integer(c.get_num() * (den / c.get_den()))});
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order_.compare(a.exp, b.exp) > 0; });
    normalize(t);
    return t;
  }

  SparsePolynomial to_poly(const Terms& t) const {
    SparsePolynomial::TermMap m;
    for (const auto& term : t) m.emplace(term.exp, Rational(term.coef));
    return SparsePolynomial(nvars_, m);
  }

  static void normalize(Terms& t) {
    if (t.empty()) return;
    Integer g = 0;
    for (const auto& term : t) g = gcd(g, term.coef);
    if (t.front().coef < 0) g = -g;
    if (g != 1)
      for (auto& term : t) term.coef /= g;
  }

  // a * f - b * x^shift * g, dropping cancelled terms
  Terms combine(const Terms& f, const Integer& a, const Terms& g, const Integer& b, const ExponentVector& shift) const {
    Terms out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(Term{f[i].exp, a * f[i].coef});
        ++i;
        continue;
      }
      ExponentVector ge = g[j].exp + shift;
      const int c = i == f.size() ? -1 : order_.compare(f[i].exp, ge);
      if (c > 0) {
        out.push_back(Term{f[i].exp, a * f[i].coef});
        ++i;
      } else if (c < 0) {
        out.push_back(Term{std::move(ge), -b * g[j].coef});
        ++j;
      } else {
        Integer v = a * f[i].coef - b * g[j].coef;
        if (v != 0) out.push_back(Term{f[i].exp, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Terms reduce(Terms f, const std::vector<Terms>& basis) const {
    Terms rem;
    std::size_t steps = 0;
    while (!f.empty()) {
      const Terms* divisor = nullptr;
      for (const auto& g : basis)
        if (!g.empty() && g.front().exp.divides(f.front().exp)) {
          divisor = &g;
          break;
        }
      if (!divisor) {
        rem.push_back(std::move(f.front()));
        f.erase(f.begin());
        continue;
      }
      const Integer& lg = divisor->front().coef;
      const Integer& lf = f.front().coef;
      const Integer common = gcd(lg, lf);
      const Integer a = lg / common, b = lf / common;
      const ExponentVector shift = f.front().exp - divisor->front().exp;
      f = combine(f, a, *divisor, b, shift);
      if (a != 1)
        for (auto& t : rem) t.coef *= a;
      if (++steps % 8 == 0) strip_content(f, rem);
    }
    normalize(rem);
    return rem;
  }

  // Reduces every non-leading term; the leading term is irreducible by
  // `basis` (minimal basis) and only gets rescaled.
  Terms reduce_tail(const Terms& g, const std::vector<Terms>& basis) const {
    Terms f(g.begin() + 1, g.end());
    Integer lead = g.front().coef;
    Terms rem;
    while (!f.empty()) {
      const Terms* divisor = nullptr;
      for (const auto& o : basis)
        if (o.front().exp.divides(f.front().exp)) {
          divisor = &o;
          break;
        }
      if (!divisor) {
        rem.push_back(std::move(f.front()));
        f.erase(f.begin());
        continue;
      }
      const Integer common = gcd(divisor->front().coef, f.front().coef);
      const Integer a = divisor->front().coef / common, b = f.front().coef / common;
      f = combine(f, a, *divisor, b, f.front().exp - divisor->front().exp);
      for (auto& t : rem) t.coef *= a;
      lead *= a;
    }
    Terms out{Term{g.front().exp, lead}};
    for (auto& t : rem) out.push_back(std::move(t));
    normalize(out);
    return out;
  }

  static void strip_content(Terms& f, Terms& rem) {
    Integer g = 0;
    for (const auto& t : f) g = gcd(g, t.coef);
    for (const auto& t : rem) g = gcd(g, t.coef);
    if (g > 1) {
      for (auto& t : f) t.coef /= g;
      for (auto& t : rem) t.coef /= g;
    }
  }

  ExponentVector lcm_exp(const ExponentVector& a, const ExponentVector& b) const {
    ExponentVector l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
  }

  Terms spoly(const Terms& f, const Terms& g) const {
    const ExponentVector l = lcm_exp(f.front().exp, g.front().exp);
    const Integer common = gcd(f.front().coef, g.front().coef);
    const Integer a = g.front().coef / common, b = f.front().coef / common;
    // a * (l/lt f) f - b * (l/lt g) g
    Terms fs;
    const ExponentVector sf = l - f.front().exp;
    for (const auto& t : f) fs.push_back(Term{t.exp + sf, t.coef});
    Terms out = combine(fs, a, g, b, l - g.front().exp);
    normalize(out);
    return out;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
};

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::size_t common_nvars(const std::vector<SparsePolynomial>& ps) {
  if (ps.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& p : ps)
    if (p.nvars() != ps.front().nvars()) throw std::invalid_argument("generators in different rings");
  return ps.front().nvars();
}

}  // namespace

bool GroebnerResult::is_unit_ideal() const {
  return complete && basis.size() == 1 && basis.front().degree() == 0;
}

ExponentVector leading_exponent(const SparsePolynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  const ExponentVector* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g, const MonomialOrder& order) {
  Engine eng(common_nvars({f, g}), order);
  return eng.to_poly(eng.spoly(eng.from_poly(f), eng.from_poly(g)));
}

SparsePolynomial normal_form(const SparsePolynomial& p, const std::vector<SparsePolynomial>& basis,
                             const MonomialOrder& order) {
  Engine eng(p.nvars(), order);
  std::vector<Terms> b;
  for (const auto& g : basis) {
    if (g.nvars() != p.nvars()) throw std::invalid_argument("basis element in a different ring");
    if (!g.is_zero()) b.push_back(eng.from_poly(g));
  }
  return eng.to_poly(eng.reduce(eng.from_poly(p), b));
}

GroebnerResult buchberger(const std::vector<SparsePolynomial>& generators, const MonomialOrder& order,
                          const GroebnerOptions& options) {
  const std::size_t nvars = common_nvars(generators);
  Engine eng(nvars, order);
  GroebnerResult result;

  std::vector<Terms> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(eng.from_poly(p));

  auto unit = [&]() {
    result.basis = {SparsePolynomial::constant(nvars, 1)};
    return result;
  };
  for (const auto& t : g)
    if (t.front().exp.degree() == 0) return unit();
  if (g.empty()) return result;

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return eng.lcm_exp(g[pr.first].front().exp, g[pr.second].front().exp);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // normal strategy
    auto best = pending.begin();
    ExponentVector best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      ExponentVector l = pair_lcm(*it);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (coprime(g[i].front().exp, g[j].front().exp)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].front().exp.divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    if (result.pairs_processed >= options.max_pairs) {
      result.complete = false;
      result.basis.clear();
      return result;
    }
    ++result.pairs_processed;

    Terms h = eng.reduce(eng.spoly(g[i], g[j]), g);
    if (h.empty()) continue;
    if (h.front().exp.degree() == 0) return unit();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
  }

  // minimalize, then interreduce
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      if (g[b].front().exp.divides(g[a].front().exp) && (g[b].front().exp != g[a].front().exp || b < a))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Terms> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Terms> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(eng.reduce_tail(minimal[a], others));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().exp, b.front().exp) < 0; });
  for (const auto& t : reduced) result.basis.push_back(eng.to_poly(t));
  return result;
}

}  // namespace omegalab
