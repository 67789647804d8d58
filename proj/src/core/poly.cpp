#include "core/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualpair::fock {

long Monomial::exponent(const VarIndex& v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

void Monomial::set_exponent(const VarIndex& v, long e) {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const std::pair<VarIndex, long>& f, const VarIndex& key) { return f.first < key; });
  if (it != factors_.end() && it->first == v) {
    if (e == 0)
      factors_.erase(it);
    else
      it->second = e;
  } else if (e != 0) {
    factors_.insert(it, {v, e});
  }
}

long Monomial::degree() const {
  long d = 0;
  for (const auto& [var, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  size_t i = 0, k = 0;
  while (i < factors_.size() || k < o.factors_.size()) {
    if (k == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[k].first)) {
      out.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[k].first < factors_[i].first) {
      out.factors_.push_back(o.factors_[k++]);
    } else {
      out.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[k].second});
      ++i, ++k;
    }
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first < fb[i].first) return false;  // earlier variable = larger monomial
    if (fb[i].first < fa[i].first) return true;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() > fb.size();
}

SparsePoly SparsePoly::constant(Ambient a, GaussianRational c) {
  SparsePoly p(a);
  p.add_term(Monomial(), c);
  return p;
}

SparsePoly SparsePoly::variable(Ambient a, VarIndex v) {
  if (v.alpha < 1 || v.alpha > a.m() || v.j < 1 || v.j > a.n)
    throw std::out_of_range("variable index outside ambient signature");
  Monomial m;
  m.set_exponent(v, 1);
  SparsePoly p(a);
  p.add_term(m, GaussianRational(1));
  return p;
}

long SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool SparsePoly::is_homogeneous(long* deg_out) const {
  if (terms_.empty()) {
    if (deg_out) *deg_out = 0;
    return true;
  }
  long d = terms_.begin()->first.degree();
  for (const auto& [mono, c] : terms_)
    if (mono.degree() != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

bool SparsePoly::supported_on_positive() const {
  for (const auto& [mono, c] : terms_)
    for (const auto& [var, e] : mono.factors())
      if (var.alpha > ambient_.p) return false;
  return true;
}

void SparsePoly::add_term(const Monomial& mono, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparsePoly::check_same(const SparsePoly& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("ambient signature mismatch");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_same(o);
  SparsePoly out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  check_same(o);
  SparsePoly out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, -c);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_same(o);
  SparsePoly out(ambient_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePoly SparsePoly::operator*(const GaussianRational& c) const {
  SparsePoly out(ambient_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coef] : terms_) out.add_term(mono, coef * c);
  return out;
}

SparsePoly SparsePoly::operator-() const { return *this * GaussianRational(-1); }

SparsePoly SparsePoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  SparsePoly acc = constant(ambient_, GaussianRational(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

SparsePoly SparsePoly::partial(VarIndex v) const {
  SparsePoly out(ambient_);
  for (const auto& [mono, c] : terms_) {
    long e = mono.exponent(v);
    if (e == 0) continue;
    Monomial d = mono;
    d.set_exponent(v, e - 1);
    out.add_term(d, c * GaussianRational(Rational(e)));
  }
  return out;
}

GaussianRational SparsePoly::evaluate(
    const std::vector<std::vector<GaussianRational>>& values) const {
  GaussianRational total(0);
  for (const auto& [mono, c] : terms_) {
    GaussianRational t = c;
    for (const auto& [var, e] : mono.factors()) {
      const GaussianRational& v = values.at(static_cast<size_t>(var.alpha - 1))
                                      .at(static_cast<size_t>(var.j - 1));
      for (long k = 0; k < e; ++k) t *= v;
    }
    total += t;
  }
  return total;
}

SparsePoly SparsePoly::substitute_columns(
    const std::vector<std::vector<GaussianRational>>& coeffs) const {
  const size_t n = static_cast<size_t>(ambient_.n);
  if (coeffs.size() != n) throw std::invalid_argument("substitution matrix must be n x n");
  // Image polynomials of the variables are linear forms; cache them.
  SparsePoly out(ambient_);
  for (const auto& [mono, c] : terms_) {
    SparsePoly term = constant(ambient_, c);
    for (const auto& [var, e] : mono.factors()) {
      SparsePoly image(ambient_);
      for (long k = 1; k <= ambient_.n; ++k) {
        const GaussianRational& g =
            coeffs[static_cast<size_t>(var.j - 1)][static_cast<size_t>(k - 1)];
        if (g.is_zero()) continue;
        Monomial mk;
        mk.set_exponent({var.alpha, k}, 1);
        image.add_term(mk, g);
      }
      term = term * image.pow(e);
    }
    out = out + term;
  }
  return out;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str();
    for (const auto& [var, e] : it->first.factors())
      os << "*z[" << var.alpha << "," << var.j << "]^" << e;
  }
  return os.str();
}

namespace {

struct TextCursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw std::invalid_argument("polynomial text: expected '" + std::string(1, c) +
                                                 "' at position " + std::to_string(pos));
    ++pos;
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial text: integer expected");
    return std::stol(s.substr(start, pos - start));
  }
  // "a/b" with optional sign.
  Rational rational() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return parse_rational(s.substr(start, pos - start));
  }
};

}  // namespace

SparsePoly SparsePoly::parse(Ambient a, const std::string& text) {
  SparsePoly out(a);
  TextCursor cur{text};
  if (cur.at_end()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (!cur.at_end()) {
    int sign = 1;
    if (!first || cur.peek() == '+' || cur.peek() == '-') {
      char c = cur.peek();
      if (c == '+') {
        cur.expect('+');
      } else if (c == '-') {
        cur.expect('-');
        sign = -1;
      } else if (!first) {
        throw std::invalid_argument("polynomial text: '+' or '-' expected between terms");
      }
    }
    first = false;
    Rational re = cur.rational();
    if (sign < 0) re = -re;  // a '-' separator binds to the real part
    GaussianRational coef(re);
    // Imaginary part "±c/d*i" or a bare trailing "*i".
    {
      size_t save = cur.pos;
      if (cur.peek() == '+' || cur.peek() == '-') {
        try {
          Rational imag = cur.rational();
          cur.expect('*');
          if (cur.peek() != 'i') throw std::invalid_argument("not imaginary");
          ++cur.pos;
          coef.im = imag;
        } catch (const std::exception&) {
          cur.pos = save;
        }
      }
    }
    if (cur.peek() == '*') {
      size_t save = cur.pos;
      ++cur.pos;
      if (cur.peek() == 'i') {
        ++cur.pos;
        coef = coef * GaussianRational::i();
      } else {
        cur.pos = save;
      }
    }
    Monomial mono;
    while (cur.peek() == '*') {
      cur.expect('*');
      cur.expect('z');
      cur.expect('[');
      long alpha = cur.integer();
      cur.expect(',');
      long j = cur.integer();
      cur.expect(']');
      long e = 1;
      if (cur.peek() == '^') {
        cur.expect('^');
        e = cur.integer();
      }
      if (alpha < 1 || alpha > a.m() || j < 1 || j > a.n)
        throw std::out_of_range("variable z[" + std::to_string(alpha) + "," + std::to_string(j) +
                                "] outside ambient signature");
      if (e < 0) throw std::invalid_argument("negative exponent");
      mono.set_exponent({alpha, j}, mono.exponent({alpha, j}) + e);
    }
    out.add_term(mono, coef);
    if (cur.at_end()) break;
    if (cur.peek() != '+' && cur.peek() != '-')
      throw std::invalid_argument("polynomial text: unexpected character at position " +
                                  std::to_string(cur.pos));
  }
  return out;
}

}  // namespace dualpair::fock
