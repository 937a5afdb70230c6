#include "gl3/residue.hpp"

#include <limits>
#include <sstream>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Smallest primitive root modulo the odd prime p.
std::uint64_t primitive_root_mod_p(std::uint64_t p) {
  std::uint64_t n = p - 1;
  std::array<std::uint64_t, 64> factors{};
  int nf = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors[nf++] = d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors[nf++] = n;
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int i = 0; i < nf && ok; ++i) ok = powmod(g, (p - 1) / factors[i], p) != 1;
    if (ok) return g;
  }
  return 1;  // p = 2 never reaches here
}

}  // namespace

RingCtx::RingCtx(std::uint64_t p, int level) : p_(p), level_(level) {
  if (p < 3 || !is_prime(p)) throw Error("residue characteristic must be an odd prime, got " + std::to_string(p));
  if (level < 1) throw Error("level N must be >= 1");
  std::uint64_t m = 1;
  for (int i = 0; i < level; ++i) {
    if (m > std::numeric_limits<std::uint64_t>::max() / p) throw ScaleExceeded("p^N does not fit in 64 bits");
    m *= p;
  }
  modulus_ = m;
  // A primitive root g mod p lifts to all p^N unless g^(p-1) = 1 mod p^2, in which case g + p does.
  std::uint64_t g = primitive_root_mod_p(p);
  if (level >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  root_ = g % modulus_;
  if (modulus_ <= (1u << 20)) {
    auto table = std::make_shared<std::vector<Residue>>(modulus_, 0);
    for (Residue a = 1; a < modulus_; ++a)
      if (a % p_ != 0) (*table)[a] = powmod(a, unit_count() - 1, modulus_);
    inv_table_ = std::move(table);
  }
}

Residue RingCtx::reduce(std::int64_t x) const {
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = x % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

Residue RingCtx::add(Residue a, Residue b) const {
  Residue s = a + b;
  return (s >= modulus_ || s < a) ? s - modulus_ : s;
}

Residue RingCtx::sub(Residue a, Residue b) const { return a >= b ? a - b : a + (modulus_ - b); }

Residue RingCtx::mul(Residue a, Residue b) const {
  if (modulus_ <= 0xffffffffull) return a * b % modulus_;
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % modulus_);
}

Residue RingCtx::pow(Residue a, std::uint64_t e) const { return powmod(a, e, modulus_); }

Residue RingCtx::p_pow(int k) const {
  if (k >= level_) return 0;
  Residue r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

Residue RingCtx::inv(Residue a) const {
  if (!is_unit(a)) throw NotInvertible("residue " + std::to_string(a) + " is not a unit");
  if (inv_table_) return (*inv_table_)[a];
  // Units form a group of order (p-1)p^(N-1).
  return pow(a, unit_count() - 1);
}

int RingCtx::trunc_val(Residue x) const {
  if (x == 0) return level_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

Residue RingCtx::unit_part(Residue x) const {
  if (x == 0) return 0;
  while (x % p_ == 0) x /= p_;
  return x;
}

RingMat RingMat::identity() {
  RingMat m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1;
  return m;
}

RingMat RingMat::w0() {
  RingMat m;
  m(0, 2) = m(1, 1) = m(2, 0) = 1;
  return m;
}

std::string RingMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << (i ? " (" : "(");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ")";
  }
  return os.str();
}

RingMat mat_mul(const RingCtx& ctx, const RingMat& a, const RingMat& b) {
  RingMat c;
  const unsigned __int128 m = ctx.modulus();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      unsigned __int128 s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<unsigned __int128>(a(i, k)) * b(k, j) % m;
      c(i, j) = static_cast<Residue>(s % m);
    }
  return c;
}

Residue mat_det(const RingCtx& ctx, const RingMat& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return ctx.sub(ctx.mul(a(r0, c0), a(r1, c1)), ctx.mul(a(r0, c1), a(r1, c0)));
  };
  Residue d = ctx.mul(a(0, 0), minor(1, 2, 1, 2));
  d = ctx.sub(d, ctx.mul(a(0, 1), minor(1, 2, 0, 2)));
  return ctx.add(d, ctx.mul(a(0, 2), minor(1, 2, 0, 1)));
}

bool is_invertible(const RingCtx& ctx, const RingMat& a) { return ctx.is_unit(mat_det(ctx, a)); }

RingMat mat_inv(const RingCtx& ctx, const RingMat& a) {
  Residue det = mat_det(ctx, a);
  if (!ctx.is_unit(det)) throw NotInvertible("matrix determinant " + std::to_string(det) + " is not a unit");
  Residue di = ctx.inv(det);
  // Adjugate: inv(i,j) = cofactor(j,i) / det.
  RingMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      Residue cof = ctx.sub(ctx.mul(a(r0, c0), a(r1, c1)), ctx.mul(a(r0, c1), a(r1, c0)));
      r(i, j) = ctx.mul(cof, di);
    }
  return r;
}

RingMat elem_matrix(const RingCtx& ctx, int i, int j, Residue t) {
  if (i == j || i < 1 || i > 3 || j < 1 || j > 3) throw Error("elem_matrix needs distinct 1-based indices");
  RingMat m = RingMat::identity();
  m(i - 1, j - 1) = t % ctx.modulus();
  return m;
}

RingMat diag_unit(const RingCtx& ctx, int i, Residue u) {
  if (i < 1 || i > 3) throw Error("diag_unit index out of range");
  if (!ctx.is_unit(u)) throw NotInvertible("diagonal entry " + std::to_string(u) + " is not a unit");
  RingMat m = RingMat::identity();
  m(i - 1, i - 1) = u % ctx.modulus();
  return m;
}

RingMat random_gl3(const RingCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, ctx.modulus() - 1);
  for (;;) {
    RingMat m;
    for (auto& x : m.e) x = dist(rng);
    if (is_invertible(ctx, m)) return m;
  }
}

}  // namespace gl3
