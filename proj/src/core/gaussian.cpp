#include "core/gaussian.hpp"

#include <sstream>

namespace dualpair {

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero in Q(i)");
  return {re / n, -im / n};
}

static std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

std::string GaussianRational::str() const {
  if (im == 0) return rat_str(re);
  std::string s = rat_str(re);
  if (im > 0) s += "+";
  s += rat_str(im) + "*i";
  return s;
}

Rational parse_rational(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(t, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Accepts "a/b", "a/b+c/d*i", "a/b-c/d*i" and the shorthand "i"/"-i" forms
// emitted by str().
GaussianRational parse_gaussian(const std::string& s) {
  if (s == "i") return GaussianRational::i();
  if (s == "-i") return -GaussianRational::i();
  // Split at the last top-level '+'/'-' that is followed by a "*i" tail.
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
    for (size_t k = s.size() - 2; k > 0; --k) {
      if (s[k] == '+' || s[k] == '-') {
        std::string head = s.substr(0, k);
        std::string tail = s.substr(k, s.size() - k - 2);  // keeps the sign
        if (tail == "+" ) tail = "1";
        if (tail == "-") tail = "-1";
        return {parse_rational(head), parse_rational(tail)};
      }
    }
    // Pure imaginary "c/d*i".
    std::string tail = s.substr(0, s.size() - 2);
    return {Rational(0), parse_rational(tail)};
  }
  return {parse_rational(s), Rational(0)};
}

}  // namespace dualpair
