#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace gl3 {

/// Canonical residue in [0, p^N).
using Residue = std::uint64_t;

/// The residue ring Z/p^N for an odd prime p. Immutable after construction.
class RingCtx {
 public:
  RingCtx(std::uint64_t p, int level);

  std::uint64_t p() const { return p_; }
  int level() const { return level_; }
  std::uint64_t modulus() const { return modulus_; }
  /// Generator of the cyclic unit group (Z/p^N)^x.
  Residue primitive_root() const { return root_; }
  /// |(Z/p^N)^x| = (p-1) p^(N-1).
  std::uint64_t unit_count() const { return (p_ - 1) * (modulus_ / p_); }

  Residue reduce(std::int64_t x) const;
  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const;
  Residue pow(Residue a, std::uint64_t e) const;
  /// p^k, which is the zero residue once k >= N.
  Residue p_pow(int k) const;
  Residue inv(Residue a) const;
  bool is_unit(Residue a) const { return a % p_ != 0; }

  /// Largest k <= N with p^k | x; N for x = 0.
  int trunc_val(Residue x) const;
  /// x / p^trunc_val(x), defined modulo p^(N - val). Returns 0 for x = 0.
  Residue unit_part(Residue x) const;

  bool operator==(const RingCtx& o) const { return p_ == o.p_ && level_ == o.level_; }

 private:
  std::uint64_t p_;
  int level_;
  std::uint64_t modulus_;
  Residue root_;
  std::shared_ptr<const std::vector<Residue>> inv_table_;
};

/// 3x3 matrix over Z/p^N, row-major. Entries are canonical residues.
struct RingMat {
  std::array<Residue, 9> e{};

  Residue operator()(int i, int j) const { return e[3 * i + j]; }
  Residue& operator()(int i, int j) { return e[3 * i + j]; }

  static RingMat identity();
  /// The longest Weyl element: anti-diagonal permutation matrix.
  static RingMat w0();

  friend bool operator==(const RingMat&, const RingMat&) = default;
  std::string str() const;
};

RingMat mat_mul(const RingCtx& ctx, const RingMat& a, const RingMat& b);
Residue mat_det(const RingCtx& ctx, const RingMat& a);
/// Throws NotInvertible unless det(a) is a unit.
RingMat mat_inv(const RingCtx& ctx, const RingMat& a);
bool is_invertible(const RingCtx& ctx, const RingMat& a);

/// Identity plus t in position (i, j); indices are 1-based as in e_{ij}.
RingMat elem_matrix(const RingCtx& ctx, int i, int j, Residue t);
/// Identity with the (i, i) entry replaced by the unit u (1-based).
RingMat diag_unit(const RingCtx& ctx, int i, Residue u);

/// Uniform sample from GL(3, Z/p^N) by rejection.
RingMat random_gl3(const RingCtx& ctx, std::mt19937_64& rng);

}  // namespace gl3
