#include "omegalab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace omegalab {

ExponentVector::ExponentVector(std::vector<int> e) : e_(std::move(e)) {}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector u(n);
  u.e_.at(i) = 1;
  return u;
}

int ExponentVector::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool ExponentVector::divides(const ExponentVector& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("exponent length mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("exponent length mismatch");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool ExponentVector::nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

int grevlex_compare(const ExponentVector& a, const ExponentVector& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

SparsePolynomial::SparsePolynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

SparsePolynomial::SparsePolynomial(std::size_t nvars, const TermMap& terms) : SparsePolynomial(nvars) {
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw std::invalid_argument("exponent length differs from nvars");
    if (e.nonnegative() == false) throw std::invalid_argument("negative exponent");
    if (c != 0) terms_.emplace(e, c);
  }
}

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, const Rational& c) {
  SparsePolynomial p(nvars);
  if (c != 0) p.terms_.emplace(ExponentVector(nvars), c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& e, const Rational& c) {
  SparsePolynomial p(e.size());
  if (!e.nonnegative()) throw std::invalid_argument("negative exponent");
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t nvars, std::size_t i) {
  return monomial(ExponentVector::unit(nvars, i));
}

Rational SparsePolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  SparsePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const { return *this + (-o); }

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  SparsePolynomial r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      auto [it, inserted] = r.terms_.emplace(ea + eb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
  if (c == 0) return SparsePolynomial(nvars_);
  SparsePolynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rational SparsePolynomial::evaluate(const RationalVector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

SparsePolynomial SparsePolynomial::restrict_to(const ExponentSet& keep) const {
  SparsePolynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (keep.count(e)) r.terms_.emplace(e, c);
  return r;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw std::invalid_argument("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += omegalab::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += omegalab::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

std::string SparsePolynomial::to_string() const { return to_string(default_variable_names(nvars_)); }

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  SparsePolynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    SparsePolynomial result = expression();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer unsigned_integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // expression := [+|-] product {(+|-) product}
  SparsePolynomial expression() {
    skip_ws();
    SparsePolynomial result(vars_.size());
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    result = negate ? -product() : product();
    for (skip_ws(); peek() == '+' || peek() == '-'; skip_ws()) {
      const bool minus = peek() == '-';
      ++pos_;
      result = minus ? result - product() : result + product();
    }
    return result;
  }

  // product := power {* power}
  SparsePolynomial product() {
    SparsePolynomial result = power();
    for (skip_ws(); peek() == '*'; skip_ws()) {
      ++pos_;
      result = result * power();
    }
    return result;
  }

  // power := primary [^ exponent]
  SparsePolynomial power() {
    const SparsePolynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const Integer p = unsigned_integer("exponent");
    if (p <= 0 || p > kMaxParsedExponent) throw ParseError("exponent must be an integer in 1..64", at);
    SparsePolynomial result = base;
    for (long i = 1; i < p.get_si(); ++i) result = result * base;
    return result;
  }

  // primary := integer [/ integer] | name | ( expression )
  SparsePolynomial primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Integer num = unsigned_integer("coefficient");
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        den = unsigned_integer("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return SparsePolynomial::constant(vars_.size(), make_rational(num, den));
    }
    if (peek() == '(') {
      ++pos_;
      SparsePolynomial inner = expression();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (!is_name_start(peek())) throw ParseError("expected variable name, number or '('", start);
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
    return SparsePolynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
  }

  static constexpr long kMaxParsedExponent = 64;

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variable_order) {
  if (variable_order.empty()) throw std::invalid_argument("variable order is empty");
  return Parser(text, variable_order).parse();
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (cur.empty() || !is_name_start(cur[0]) ||
        !std::all_of(cur.begin(), cur.end(), is_name_char))
      throw std::invalid_argument("bad variable name '" + cur + "'");
    if (std::find(names.begin(), names.end(), cur) != names.end())
      throw std::invalid_argument("duplicate variable name '" + cur + "'");
    names.push_back(cur);
  }
  if (names.empty()) throw std::invalid_argument("empty variable list");
  return names;
}

SparsePolynomial partial_derivative(const SparsePolynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw std::out_of_range("variable index out of range");
  SparsePolynomial::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    ExponentVector f = e;
    f[i] -= 1;
    out.emplace(f, c * e[i]);
  }
  return SparsePolynomial(p.nvars(), out);
}

SparsePolynomial directional_derivative(const SparsePolynomial& p, const RationalVector& e) {
  if (e.size() != p.nvars()) throw std::invalid_argument("direction has wrong length");
  SparsePolynomial r(p.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) r = r + partial_derivative(p, i) * e[i];
  return r;
}

ExponentSet support(const SparsePolynomial& p) {
  ExponentSet s;
  for (const auto& [e, c] : p.terms()) s.insert(e);
  return s;
}

namespace {

void poly_mul_into(RationalVector& acc, const RationalVector& f) {
  RationalVector r(acc.size() + f.size() - 1, Rational(0));
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += acc[i] * f[j];
  acc = std::move(r);
}

}  // namespace

RationalVector substitute_line(const SparsePolynomial& p, const RationalVector& e, const RationalVector& v) {
  if (e.size() != p.nvars() || v.size() != p.nvars())
    throw std::invalid_argument("line point has wrong length");
  RationalVector total;
  for (const auto& [ex, c] : p.terms()) {
    RationalVector acc{c};
    for (std::size_t i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < ex[i]; ++k) poly_mul_into(acc, RationalVector{e[i], v[i]});
    if (total.size() < acc.size()) total.resize(acc.size(), Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) total[i] += acc[i];
  }
  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n == 0 || d < 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<SparsePolynomial> partial_derivatives(const SparsePolynomial& p, std::size_t k) {
  std::vector<SparsePolynomial> out;
  for (const auto& ms : multisets(p.nvars(), k)) {
    SparsePolynomial q = p;
    for (auto i : ms) q = partial_derivative(q, i);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace omegalab
