#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gl3/residue.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

/// Largest coset space the oracle will enumerate.
inline constexpr std::uint64_t kMaxCosets = 1'000'000;

/// Canonical label of a coset g C_d. C_d is exactly the stabiliser of the
/// lattice pair L1 = R + P^d1 + P^d3 and L2 = R + R + P^d2 (column vectors),
/// so gC_d is labelled by the echelon (Howell) forms of g L1 and g L2 as
/// submodules of (Z/p^N)^3.
struct CosetKey {
  std::array<Residue, 18> e{};
  friend bool operator==(const CosetKey&, const CosetKey&) = default;
};

struct CosetKeyHash {
  std::size_t operator()(const CosetKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : k.e) h = (h ^ x) * 0xff51afd7ed558ccdull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

/// Reduced echelon form of the submodule of (Z/p^N)^3 spanned by `gens`:
/// row j holds the generator with pivot in column j (pivot p^e), or zeros.
std::array<Residue, 9> howell_form(const RingCtx& ctx, const std::vector<std::array<Residue, 3>>& gens);

CosetKey coset_key(const RingCtx& ctx, const Triple& d, const RingMat& g);

/// The coset space G_N / C_d with dense ids, enumerated breadth-first from the
/// identity under a fixed generating set of GL(3, Z/p^N).
class CosetSpace {
 public:
  /// Throws LevelTooSmall (N < d3) or ScaleExceeded ([K:C_d](p) > kMaxCosets).
  CosetSpace(const Triple& d, const RingCtx& ctx);

  const Triple& triple() const { return d_; }
  const RingCtx& ctx() const { return ctx_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<RingMat>& reps() const { return reps_; }

  /// Id of the coset g C_d. Throws Error if g is not invertible.
  std::uint32_t locate(const RingMat& g) const;
  std::optional<std::uint32_t> find(const RingMat& g) const;

  /// Permutation of coset ids induced by left multiplication with s. Uses a
  /// precomputed table when s is one of the standard generators.
  std::vector<std::uint32_t> action(const RingMat& s) const;
  const std::vector<std::uint32_t>* cached_action(const RingMat& s) const;

  /// Left-multiplication steps performed during construction.
  std::uint64_t construction_steps() const { return steps_; }

 private:
  Triple d_;
  RingCtx ctx_;
  std::vector<RingMat> reps_;
  std::unordered_map<CosetKey, std::uint32_t, CosetKeyHash> index_;
  std::vector<std::pair<RingMat, std::vector<std::uint32_t>>> tables_;
  std::uint64_t steps_ = 0;
};

/// Orbits of C_c acting on G_N / C_d from the left.
struct DoubleCosetPartition {
  Triple c;
  Triple d;
  std::vector<std::uint32_t> class_of;  // coset id -> class id (first-appearance order)
  std::vector<std::uint64_t> class_sizes;
  std::size_t class_count = 0;
  std::uint64_t merges = 0;
};

DoubleCosetPartition double_cosets(const Triple& c, const CosetSpace& space);

/// Number of (C_c, C_d)-double cosets contained in C_ambient; requires c, d ⪰ ambient.
std::size_t double_cosets_within(const Triple& ambient, const Triple& c, const CosetSpace& space_d);

/// Whether g and h lie in the same double coset C_c g C_d.
bool same_double_coset(const RingMat& g, const RingMat& h, const DoubleCosetPartition& part, const CosetSpace& space);
bool same_double_coset(const RingMat& g, const RingMat& h, const Triple& c, const Triple& d, const RingCtx& ctx);

inline constexpr const char* kToolVersion = "gl3branch-1.0.0";

/// Persistent store of oracle counts as newline-delimited JSON.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path path);

  std::optional<std::uint64_t> lookup(std::uint64_t p, int N, const Triple& c, const Triple& d,
                                      const std::optional<Triple>& ambient) const;
  void store(std::uint64_t p, int N, const Triple& c, const Triple& d, const std::optional<Triple>& ambient,
             std::uint64_t count);
  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const;

 private:
  using Key = std::tuple<std::uint64_t, int, Triple, Triple, std::optional<Triple>>;
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<Key, std::uint64_t> entries_;
};

/// Default cache location: $GL3BRANCH_CACHE_DIR/oracle_counts.ndjson if set.
std::optional<std::filesystem::path> default_cache_path();

struct OracleStats {
  std::uint64_t spaces_built = 0;
  std::uint64_t cosets_enumerated = 0;
  std::uint64_t construction_steps = 0;
  std::uint64_t partitions = 0;
  std::uint64_t merges = 0;
  std::uint64_t cache_hits = 0;
};

/// Memoising front end for double-coset counts at a fixed (p, N).
class Oracle {
 public:
  explicit Oracle(RingCtx ctx, std::shared_ptr<CountCache> cache = nullptr);

  const RingCtx& ctx() const { return ctx_; }
  const CosetSpace& space(const Triple& d);
  std::uint64_t count(const Triple& c, const Triple& d);
  std::uint64_t count_within(const Triple& ambient, const Triple& c, const Triple& d);

  /// Computes counts for all pairs, running independent partitions on `jobs`
  /// threads. Results are identical for any job count.
  void prefetch(const std::vector<std::pair<Triple, Triple>>& pairs, int jobs);

  OracleStats stats() const;

 private:
  std::uint64_t compute_count(const Triple& c, const Triple& d);
  void check_level(const Triple& t) const;

  RingCtx ctx_;
  std::shared_ptr<CountCache> cache_;
  mutable std::mutex mu_;
  std::map<Triple, std::unique_ptr<CosetSpace>> spaces_;
  std::map<std::pair<Triple, Triple>, std::uint64_t> counts_;
  std::map<std::tuple<Triple, Triple, Triple>, std::uint64_t> within_;
  OracleStats stats_;
};

}  // namespace gl3
