#include "gl3/qpoly.hpp"

#include <sstream>
#include <utility>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("QPoly coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("QPoly coefficient overflow");
  return r;
}

}  // namespace

QPoly::QPoly(std::int64_t c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { normalize(); }

QPoly::QPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(std::int64_t c, int k) {
  if (k < 0) throw Error("negative exponent in QPoly monomial");
  QPoly r;
  if (c == 0) return r;
  r.c_.assign(k + 1, 0);
  r.c_[k] = c;
  return r;
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t QPoly::eval(std::int64_t q) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, q), *it);
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  c_ = std::move(r);
  normalize();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw Error("negative power of QPoly");
  QPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

bool QPoly::divides_by(const QPoly& d, QPoly& out) const {
  if (d.is_zero()) return false;
  if (is_zero()) {
    out = QPoly();
    return true;
  }
  if (d.degree() > degree()) return false;
  std::vector<std::int64_t> rem = c_;
  std::vector<std::int64_t> quo(degree() - d.degree() + 1, 0);
  const std::int64_t lead = d.c_.back();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    std::int64_t top = rem[k + d.degree()];
    if (top % lead != 0) return false;
    std::int64_t f = top / lead;
    quo[k] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(f, d.c_[j]));
  }
  for (auto x : rem)
    if (x != 0) return false;
  out = QPoly(std::move(quo));
  return true;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t a = c_[k];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    std::int64_t m = a < 0 ? -a : a;
    if (k == 0 || m != 1) os << m;
    if (k >= 1) os << ((k == 0 || m != 1) ? " q" : "q");
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::string QPoly::factored() const {
  if (is_zero()) return "0";
  struct Candidate {
    QPoly poly;
    const char* name;
  };
  const Candidate candidates[] = {
      {QPoly{0, 1}, "q"},   {QPoly{-1, 1}, "(q-1)"}, {QPoly{1, 1}, "(q+1)"},
      {QPoly{-2, 1}, "(q-2)"}, {QPoly{-3, 1}, "(q-3)"}, {QPoly{1, 1, 1}, "(q^2+q+1)"},
  };
  QPoly rest = *this;
  std::ostringstream os;
  bool any = false;
  for (const auto& cand : candidates) {
    int mult = 0;
    QPoly quo;
    while (rest.degree() >= 1 && rest.divides_by(cand.poly, quo)) {
      rest = quo;
      ++mult;
    }
    if (mult == 0) continue;
    os << cand.name;
    if (mult > 1) os << "^" << mult;
    any = true;
  }
  if (!any) return str();
  std::string head;
  if (rest == QPoly(-1)) {
    head = "-";
  } else if (!rest.is_constant()) {
    head = "(" + rest.str() + ")";
  } else if (rest != QPoly(1)) {
    head = rest.str();
  }
  return head + os.str();
}

}  // namespace gl3
