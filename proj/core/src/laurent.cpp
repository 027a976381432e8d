#include "zdisk/laurent.hpp"

#include <cctype>
#include <iterator>
#include <limits>
#include <sstream>

namespace zdisk {

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, std::int64_t e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

Int LaurentPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPoly::min_exp() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  Terms out = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  Terms out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out[e1 + e2] += c1 * c2;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t j) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e + j] = c;
  return p;
}

Int LaurentPoly::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rat LaurentPoly::evaluate(const Rat& r) const {
  if (r == 0) throw Error(Errc::invalid_argument, "Laurent evaluation at 0");
  Rat s = 0;
  for (const auto& [e, c] : terms_) s += Rat(c) * pow_rat(r, e);
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(Errc::invalid_argument, "division by zero polynomial");
  if (is_zero()) return LaurentPoly::zero();
  // Top-down division.  Each step must divide the current leading coefficient
  // exactly by d's; otherwise no integer quotient exists.  This is valid in
  // Z[t^{±1}]: the quotient's terms are produced from the top degree downward,
  // and any non-integral step rules out divisibility (d is not required to be
  // monic, so divisibility of leading coefficients is checked at every step).
  LaurentPoly r = *this;
  const Int& lead = d.terms_.rbegin()->second;
  const std::int64_t dexp = d.max_exp();
  Terms q;
  while (!r.is_zero() && r.span() >= d.span()) {
    const Int& rc = r.terms_.rbegin()->second;
    if (rc % lead != 0) return std::nullopt;
    Int f = rc / lead;
    std::int64_t shift = r.max_exp() - dexp;
    r = r - d.shifted(shift) * LaurentPoly::constant(f);
    q[shift] = std::move(f);
  }
  if (!r.is_zero()) return std::nullopt;
  return LaurentPoly(std::move(q));
}

bool LaurentPoly::struct_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponents, matching the usual way these polynomials are written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = abs_int(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << a.str();
    } else if (a == 1) {
      os << "t^" << e;
    } else {
      os << a.str() << "*t^" << e;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  char peek() { return s[i]; }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(Errc::parse_error, "polynomial parse error at offset " +
                                       std::to_string(i) + ": " + why);
  }

  Int integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == digits) fail("expected integer");
    return Int(std::string(s.substr(start, i - start)));
  }

  std::int64_t exponent() {
    Int e = integer();
    if (e > 1'000'000 || e < -1'000'000) fail("exponent out of range");
    return (std::int64_t)e;
  }

  // One term: [sign] (coeff ['*' t-part] | t-part), t-part = 't' ['^' exp].
  std::pair<Int, std::int64_t> term(bool leading) {
    skip_ws();
    Int sign = 1;
    if (!leading) {
      if (eof()) fail("expected term");
      if (peek() == '+') {
        ++i;
      } else if (peek() == '-') {
        sign = -1;
        ++i;
      } else {
        fail("expected '+' or '-'");
      }
    } else if (!eof() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++i;
    }
    skip_ws();
    if (eof()) fail("expected term");
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit((unsigned char)peek())) {
      coeff = integer();
      have_coeff = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        ++i;
        skip_ws();
      }
    }
    std::int64_t e = 0;
    if (!eof() && (peek() == 't' || peek() == 'T')) {
      ++i;
      e = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++i;
        e = exponent();
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 't'");
    }
    return {sign * coeff, e};
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Parser p{text};
  if (p.eof()) throw Error(Errc::parse_error, "empty polynomial");
  LaurentPoly::Terms terms;
  bool leading = true;
  while (!p.eof()) {
    auto [c, e] = p.term(leading);
    leading = false;
    terms[e] += c;
  }
  return LaurentPoly(std::move(terms));
}

AlexanderPoly::AlexanderPoly(LaurentPoly p) : poly_(std::move(p)) {
  if (poly_.involute() != poly_) {
    throw Error(Errc::bad_shape, "Alexander polynomial must be symmetric: " + poly_.str());
  }
  if (poly_.evaluate_at_one() != -1) {
    throw Error(Errc::bad_shape, "Alexander polynomial must evaluate to -1 at t = 1: " + poly_.str());
  }
}

AlexanderPoly delta_n(std::int64_t n) {
  LaurentPoly::Terms terms;
  if (n != 0) {
    terms[1] = n;
    terms[-1] = n;
  }
  terms[0] = -(Int(2) * n + 1);
  return AlexanderPoly(LaurentPoly(std::move(terms)));
}

AlexanderPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::bad_shape, "cannot normalize the zero polynomial");
  // Center: only an even span can be made symmetric around exponent 0.
  std::int64_t lo = p.min_exp(), hi = p.max_exp();
  if ((hi - lo) % 2 != 0) {
    throw Error(Errc::bad_shape, "no unit multiple of " + p.str() + " is symmetric (odd span)");
  }
  LaurentPoly q = p.shifted(-(lo + hi) / 2);
  if (q.involute() != q) {
    throw Error(Errc::bad_shape, "no unit multiple of " + p.str() + " is symmetric");
  }
  Int v1 = q.evaluate_at_one();
  if (v1 == 1) q = -q;
  else if (v1 != -1) {
    throw Error(Errc::bad_shape, "polynomial value at 1 is " + v1.str() + ", expected ±1");
  }
  return AlexanderPoly(std::move(q));
}

std::optional<std::int64_t> recognize_quadratic(const AlexanderPoly& p) {
  const LaurentPoly& q = p.poly();
  if (q == LaurentPoly::constant(-1)) return 0;
  if (q.span() != 2 || q.terms().size() > 3) return std::nullopt;
  Int n = q.coeff(1);
  if (n == 0 || q.coeff(-1) != n || q.coeff(0) != -(2 * n + 1)) return std::nullopt;
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return (std::int64_t)n;
}

}  // namespace zdisk
