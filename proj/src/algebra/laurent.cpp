#include "fibcalc/algebra/laurent.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace fibcalc {

LaurentPoly::LaurentPoly(Int constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Int coeff, Int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<Int>& coeffs, Int lowest_exponent) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(checked::add(lowest_exponent, static_cast<Int>(i)), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(Int exponent, Int coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
    return;
  }
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Int LaurentPoly::coefficient(Int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Int LaurentPoly::min_exponent() const {
  if (is_zero()) throw PreconditionError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

Int LaurentPoly::max_exponent() const {
  if (is_zero()) throw PreconditionError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Int LaurentPoly::width() const { return is_zero() ? -1 : max_exponent() - min_exponent(); }

Int LaurentPoly::leading_coefficient() const { return is_zero() ? 0 : terms_.rbegin()->second; }

std::vector<Int> LaurentPoly::dense_coefficients() const {
  if (is_zero()) return {};
  std::vector<Int> out(static_cast<std::size_t>(width() + 1), 0);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - min_exponent())] = c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, checked::neg(c));
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly() - *this; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(checked::add(e1, e2), checked::mul(c1, c2));
  return out;
}

LaurentPoly LaurentPoly::shift(Int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked::add(e, k), c);
  return out;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked::neg(e), c);
  return out;
}

Int LaurentPoly::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s = checked::add(s, c);
  return s;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = checked::gcd(g, c);
  return g;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os;
}

std::string to_string(const LaurentPoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top; the remainder must vanish.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const Int bmax = b.max_exponent();
  const Int blead = b.leading_coefficient();
  while (!rem.is_zero()) {
    if (rem.width() < b.width()) throw PreconditionError("polynomial division is not exact");
    const Int lead = rem.leading_coefficient();
    if (lead % blead != 0) throw PreconditionError("polynomial division is not exact");
    const LaurentPoly step = LaurentPoly::monomial(lead / blead, checked::sub(rem.max_exponent(), bmax));
    quot += step;
    rem -= step * b;
  }
  return quot;
}

namespace {

// Ordinary polynomial (lowest exponent 0) helpers for the gcd.
LaurentPoly to_polynomial(const LaurentPoly& p) { return p.is_zero() ? p : p.shift(-p.min_exponent()); }

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const Int c = p.content();
  LaurentPoly out;
  for (const auto& [e, coef] : p.terms()) out += LaurentPoly::monomial(coef / c, e);
  return out;
}

// Pseudo-remainder of a by b (both polynomials), scaled to stay integral.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const Int blead = b.leading_coefficient();
  const Int bdeg = b.max_exponent();
  while (!a.is_zero() && a.max_exponent() >= bdeg) {
    const Int alead = a.leading_coefficient();
    const Int g = checked::gcd(alead, blead);
    const Int sa = blead / g;
    const Int sb = alead / g;
    a = a * LaurentPoly(sa) - b.shift(a.max_exponent() - bdeg) * LaurentPoly(sb);
    a = primitive_part(a);
  }
  return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalize_alexander(b);
  if (b.is_zero()) return normalize_alexander(a);
  const Int content = checked::gcd(a.content(), b.content());
  LaurentPoly x = primitive_part(to_polynomial(a));
  LaurentPoly y = primitive_part(to_polynomial(b));
  if (x.max_exponent() < y.max_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = to_polynomial(pseudo_remainder(x, y));
    x = std::move(y);
    y = primitive_part(r);
  }
  return normalize_alexander(primitive_part(x) * LaurentPoly(content));
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  LaurentPoly out = p.shift(checked::neg(p.min_exponent()));
  if (out.coefficient(0) < 0) out = -out;
  return out;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_alexander(a) == normalize_alexander(b);
}

LaurentPoly determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return LaurentPoly(1);
  LaurentPoly sign(1);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          swap = r;
          break;
        }
      if (swap == n) return {};
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly char_poly(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  LaurentMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPoly entry(checked::neg(a(i, j)));
      if (i == j) entry += LaurentPoly::t();
      m[i][j] = entry;
    }
  return determinant(std::move(m));
}

}  // namespace fibcalc
