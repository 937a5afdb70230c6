#include "gl3/coset_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "gl3/errors.hpp"
#include "gl3/parahoric.hpp"

namespace gl3 {

namespace {

using Row = std::array<Residue, 3>;

// Union-find over dense ids; the smaller id always becomes the root so the
// final forest does not depend on merge order.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::vector<std::vector<std::uint32_t>> generator_tables(const CosetSpace& space, const Triple& c) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& g : Parahoric(c, space.ctx()).generators()) {
    if (g == RingMat::identity()) continue;
    if (const auto* t = space.cached_action(g)) {
      out.push_back(*t);
    } else {
      out.push_back(space.action(g));
    }
  }
  return out;
}

void require_level(const RingCtx& ctx, const Triple& t) {
  require_in_T(t);
  if (ctx.level() < t.c3)
    throw LevelTooSmall("level N=" + std::to_string(ctx.level()) + " is below the third entry of " + t.str());
}

}  // namespace

std::array<Residue, 9> howell_form(const RingCtx& ctx, const std::vector<Row>& gens) {
  const int N = ctx.level();
  std::array<Row, 12> pending{};
  std::size_t n = 0;
  for (const auto& g : gens)
    if (g != Row{0, 0, 0}) pending[n++] = g;

  std::array<Row, 3> h{};
  std::array<int, 3> pivot_val{N, N, N};
  for (int j = 0; j < 3; ++j) {
    int best = N;
    std::size_t at = n;
    for (std::size_t r = 0; r < n; ++r) {
      int v = ctx.trunc_val(pending[r][j]);
      if (v < best) {
        best = v;
        at = r;
      }
    }
    if (at == n) continue;
    Row piv = pending[at];
    pending[at] = pending[--n];
    const Residue scale = ctx.inv(ctx.unit_part(piv[j]));
    for (auto& x : piv) x = ctx.mul(x, scale);
    const Residue pe = ctx.p_pow(best);
    std::size_t kept = 0;
    for (std::size_t r = 0; r < n; ++r) {
      Row row = pending[r];
      const Residue t = row[j] / pe;
      for (int k = j; k < 3; ++k) row[k] = ctx.sub(row[k], ctx.mul(t, piv[k]));
      if (row != Row{0, 0, 0}) pending[kept++] = row;
    }
    n = kept;
    // p^(N-e) * pivot vanishes in column j; keep it so later columns see the
    // full intersection with the coordinate subspace.
    const Residue annihilator = ctx.p_pow(N - best);
    Row extra{};
    for (int k = 0; k < 3; ++k) extra[k] = ctx.mul(piv[k], annihilator);
    if (extra != Row{0, 0, 0}) pending[n++] = extra;
    h[j] = piv;
    pivot_val[j] = best;
  }
  for (int j = 0; j < 3; ++j) {
    if (pivot_val[j] == N) continue;
    const Residue pe = ctx.p_pow(pivot_val[j]);
    for (int i = 0; i < j; ++i) {
      const Residue t = h[i][j] / pe;
      if (t == 0) continue;
      for (int k = j; k < 3; ++k) h[i][k] = ctx.sub(h[i][k], ctx.mul(t, h[j][k]));
    }
  }
  std::array<Residue, 9> out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[3 * i + k] = h[i][k];
  return out;
}

CosetKey coset_key(const RingCtx& ctx, const Triple& d, const RingMat& g) {
  const Residue s1 = ctx.p_pow(d.c1), s2 = ctx.p_pow(d.c2), s3 = ctx.p_pow(d.c3);
  auto column = [&](int j, Residue scale) { return Row{ctx.mul(g(0, j), scale), ctx.mul(g(1, j), scale), ctx.mul(g(2, j), scale)}; };
  const auto l1 = howell_form(ctx, {column(0, 1), column(1, s1), column(2, s3)});
  const auto l2 = howell_form(ctx, {column(0, 1), column(1, 1), column(2, s2)});
  CosetKey key;
  std::copy(l1.begin(), l1.end(), key.e.begin());
  std::copy(l2.begin(), l2.end(), key.e.begin() + 9);
  return key;
}

CosetSpace::CosetSpace(const Triple& d, const RingCtx& ctx) : d_(d), ctx_(ctx) {
  require_level(ctx, d);
  const std::int64_t expected = index_in_K(d).eval(static_cast<std::int64_t>(ctx.p()));
  if (static_cast<std::uint64_t>(expected) > kMaxCosets)
    throw ScaleExceeded("coset space for " + d.str() + " has " + std::to_string(expected) + " cosets (limit " +
                        std::to_string(kMaxCosets) + ")");

  // Standard generators: upper unipotents, diagonal primitive roots, and lower
  // unipotents e21/e32/e31 with every power of p below N. The first nine
  // (lower entries equal to 1) generate GL(3, Z/p^N).
  std::vector<RingMat> gens;
  const Residue root = ctx.primitive_root();
  gens.push_back(elem_matrix(ctx, 1, 2, 1));
  gens.push_back(elem_matrix(ctx, 1, 3, 1));
  gens.push_back(elem_matrix(ctx, 2, 3, 1));
  for (int i = 1; i <= 3; ++i) gens.push_back(diag_unit(ctx, i, root));
  for (int k = 0; k < ctx.level(); ++k) {
    gens.push_back(elem_matrix(ctx, 2, 1, ctx.p_pow(k)));
    gens.push_back(elem_matrix(ctx, 3, 2, ctx.p_pow(k)));
    gens.push_back(elem_matrix(ctx, 3, 1, ctx.p_pow(k)));
  }
  constexpr std::size_t kGenerating = 9;

  reps_.reserve(static_cast<std::size_t>(expected));
  index_.reserve(static_cast<std::size_t>(expected) * 2);
  reps_.push_back(RingMat::identity());
  index_.emplace(coset_key(ctx_, d_, reps_[0]), 0);
  tables_.resize(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) tables_[s].first = gens[s];
  for (std::size_t head = 0; head < reps_.size(); ++head) {
    for (std::size_t s = 0; s < kGenerating; ++s) {
      RingMat h = mat_mul(ctx_, gens[s], reps_[head]);
      ++steps_;
      auto [it, inserted] = index_.emplace(coset_key(ctx_, d_, h), static_cast<std::uint32_t>(reps_.size()));
      if (inserted) {
        if (reps_.size() >= kMaxCosets) throw ScaleExceeded("coset enumeration exceeded limit");
        reps_.push_back(h);
      }
      tables_[s].second.push_back(it->second);
    }
  }
  for (std::size_t s = kGenerating; s < gens.size(); ++s) {
    auto& table = tables_[s].second;
    table.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      table[i] = locate(mat_mul(ctx_, gens[s], reps_[i]));
      ++steps_;
    }
  }
}

std::optional<std::uint32_t> CosetSpace::find(const RingMat& g) const {
  auto it = index_.find(coset_key(ctx_, d_, g));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t CosetSpace::locate(const RingMat& g) const {
  if (!is_invertible(ctx_, g)) throw Error("locate: matrix is not in GL(3, Z/p^N)");
  auto id = find(g);
  if (!id) throw Error("locate: coset missing from enumeration");
  return *id;
}

const std::vector<std::uint32_t>* CosetSpace::cached_action(const RingMat& s) const {
  for (const auto& [g, table] : tables_)
    if (g == s) return &table;
  return nullptr;
}

std::vector<std::uint32_t> CosetSpace::action(const RingMat& s) const {
  if (const auto* t = cached_action(s)) return *t;
  std::vector<std::uint32_t> out(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) out[i] = locate(mat_mul(ctx_, s, reps_[i]));
  return out;
}

DoubleCosetPartition double_cosets(const Triple& c, const CosetSpace& space) {
  require_level(space.ctx(), c);
  const std::size_t n = space.size();
  DisjointSets sets(n);
  DoubleCosetPartition part;
  part.c = c;
  part.d = space.triple();
  for (const auto& table : generator_tables(space, c))
    for (std::uint32_t i = 0; i < n; ++i)
      if (sets.unite(i, table[i])) ++part.merges;

  part.class_of.assign(n, 0);
  std::vector<std::uint32_t> root_class(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t r = sets.find(i);
    if (root_class[r] == UINT32_MAX) {
      root_class[r] = static_cast<std::uint32_t>(part.class_sizes.size());
      part.class_sizes.push_back(0);
    }
    part.class_of[i] = root_class[r];
    ++part.class_sizes[root_class[r]];
  }
  part.class_count = part.class_sizes.size();
  return part;
}

std::size_t double_cosets_within(const Triple& ambient, const Triple& c, const CosetSpace& space_d) {
  require_level(space_d.ctx(), ambient);
  require_level(space_d.ctx(), c);
  if (!precedes(ambient, c) || !precedes(ambient, space_d.triple()))
    throw OutOfRange("double_cosets_within needs c, d ⪰ ambient");
  const std::size_t n = space_d.size();
  // Cosets x C_d with x ∈ C_ambient: the orbit of the identity coset (id 0).
  std::vector<char> inside(n, 0);
  std::vector<std::uint32_t> queue{0};
  inside[0] = 1;
  const auto amb_tables = generator_tables(space_d, ambient);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& t : amb_tables) {
      std::uint32_t nxt = t[queue[head]];
      if (!inside[nxt]) {
        inside[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  DisjointSets sets(n);
  for (const auto& table : generator_tables(space_d, c))
    for (std::uint32_t i : queue) sets.unite(i, table[i]);
  std::vector<char> is_root(n, 0);
  std::size_t count = 0;
  for (std::uint32_t i : queue) {
    std::uint32_t r = sets.find(i);
    if (!is_root[r]) {
      is_root[r] = 1;
      ++count;
    }
  }
  return count;
}

bool same_double_coset(const RingMat& g, const RingMat& h, const DoubleCosetPartition& part, const CosetSpace& space) {
  return part.class_of[space.locate(g)] == part.class_of[space.locate(h)];
}

bool same_double_coset(const RingMat& g, const RingMat& h, const Triple& c, const Triple& d, const RingCtx& ctx) {
  CosetSpace space(d, ctx);
  return same_double_coset(g, h, double_cosets(c, space), space);
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json triple_json(const Triple& t) { return nlohmann::json::array({t.c1, t.c2, t.c3}); }

Triple json_triple(const nlohmann::json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

}  // namespace

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (j.value("tool_version", std::string()) != kToolVersion) continue;
      std::optional<Triple> amb;
      if (!j.at("ambient").is_null()) amb = json_triple(j.at("ambient"));
      entries_[Key{j.at("p").get<std::uint64_t>(), j.at("N").get<int>(), json_triple(j.at("c")), json_triple(j.at("d")),
                   amb}] = j.at("count").get<std::uint64_t>();
    } catch (const nlohmann::json::exception&) {
      // Torn or foreign lines are ignored; the count is recomputed.
    }
  }
}

std::optional<std::uint64_t> CountCache::lookup(std::uint64_t p, int N, const Triple& c, const Triple& d,
                                                const std::optional<Triple>& ambient) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(Key{p, N, c, d, ambient});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(std::uint64_t p, int N, const Triple& c, const Triple& d, const std::optional<Triple>& ambient,
                       std::uint64_t count) {
  std::lock_guard lock(mu_);
  auto [it, inserted] = entries_.emplace(Key{p, N, c, d, ambient}, count);
  if (!inserted) return;
  nlohmann::json j = {{"p", p},
                      {"N", N},
                      {"c", triple_json(c)},
                      {"d", triple_json(d)},
                      {"ambient", ambient ? triple_json(*ambient) : nlohmann::json(nullptr)},
                      {"count", count},
                      {"tool_version", kToolVersion}};
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::optional<std::filesystem::path> default_cache_path() {
  const char* dir = std::getenv("GL3BRANCH_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "oracle_counts.ndjson";
}

Oracle::Oracle(RingCtx ctx, std::shared_ptr<CountCache> cache) : ctx_(std::move(ctx)), cache_(std::move(cache)) {}

void Oracle::check_level(const Triple& t) const { require_level(ctx_, t); }

const CosetSpace& Oracle::space(const Triple& d) {
  check_level(d);
  std::lock_guard lock(mu_);
  auto& slot = spaces_[d];
  if (!slot) {
    slot = std::make_unique<CosetSpace>(d, ctx_);
    ++stats_.spaces_built;
    stats_.cosets_enumerated += slot->size();
    stats_.construction_steps += slot->construction_steps();
  }
  return *slot;
}

std::uint64_t Oracle::compute_count(const Triple& c, const Triple& d) {
  const auto part = double_cosets(c, space(d));
  std::lock_guard lock(mu_);
  ++stats_.partitions;
  stats_.merges += part.merges;
  return part.class_count;
}

std::uint64_t Oracle::count(const Triple& c, const Triple& d) {
  check_level(c);
  check_level(d);
  {
    std::lock_guard lock(mu_);
    if (auto it = counts_.find({c, d}); it != counts_.end()) return it->second;
  }
  std::uint64_t result;
  if (auto hit = cache_ ? cache_->lookup(ctx_.p(), ctx_.level(), c, d, std::nullopt) : std::nullopt) {
    result = *hit;
    std::lock_guard lock(mu_);
    ++stats_.cache_hits;
  } else {
    result = compute_count(c, d);
    if (cache_) cache_->store(ctx_.p(), ctx_.level(), c, d, std::nullopt, result);
  }
  std::lock_guard lock(mu_);
  counts_[{c, d}] = result;
  return result;
}

std::uint64_t Oracle::count_within(const Triple& ambient, const Triple& c, const Triple& d) {
  check_level(ambient);
  check_level(c);
  check_level(d);
  {
    std::lock_guard lock(mu_);
    if (auto it = within_.find({ambient, c, d}); it != within_.end()) return it->second;
  }
  std::uint64_t result;
  if (auto hit = cache_ ? cache_->lookup(ctx_.p(), ctx_.level(), c, d, ambient) : std::nullopt) {
    result = *hit;
  } else {
    result = double_cosets_within(ambient, c, space(d));
    if (cache_) cache_->store(ctx_.p(), ctx_.level(), c, d, ambient, result);
  }
  std::lock_guard lock(mu_);
  within_[{ambient, c, d}] = result;
  return result;
}

void Oracle::prefetch(const std::vector<std::pair<Triple, Triple>>& pairs, int jobs) {
  // Spaces are built up front in sorted order so construction is sequential
  // and deterministic; only the read-only partition work runs in parallel.
  std::vector<Triple> ds;
  for (const auto& pr : pairs) ds.push_back(pr.second);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (const auto& d : ds) space(d);

  jobs = std::max(1, jobs);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](std::size_t w) {
    try {
      for (std::size_t i = next++; i < pairs.size(); i = next++) count(pairs[i].first, pairs[i].second);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

OracleStats Oracle::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

}  // namespace gl3
