#include <chrono>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl3/catalog.hpp"
#include "gl3/coset_oracle.hpp"
#include "gl3/errors.hpp"
#include "gl3/intertwine.hpp"
#include "gl3/report_json.hpp"
#include "gl3/steinberg.hpp"
#include "gl3/theorem_harness.hpp"

using namespace gl3;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "table";
  std::optional<std::uint64_t> p;
  std::optional<int> N;
  std::optional<std::int64_t> q;
  bool symbolic = false;
  int jobs = 1;
  std::string cache;
};

void add_format(CLI::App* cmd, Common& o) {
  cmd->add_option("--format", o.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

void add_oracle(CLI::App* cmd, Common& o) {
  cmd->add_option("--p", o.p, "Odd prime for the enumeration oracle");
  cmd->add_option("--N", o.N, "Truncation level N (default max(c3, d3, 1))");
  cmd->add_option("--cache", o.cache, "Oracle count cache file (default $GL3BRANCH_CACHE_DIR/oracle_counts.ndjson)");
  cmd->add_option("--jobs", o.jobs, "Worker threads for independent oracle jobs")->capture_default_str();
}

std::shared_ptr<CountCache> open_cache(const Common& o) {
  if (!o.cache.empty()) return std::make_shared<CountCache>(o.cache);
  if (auto path = default_cache_path()) return std::make_shared<CountCache>(*path);
  return nullptr;
}

std::unique_ptr<Oracle> make_oracle(const Common& o, int min_level) {
  if (!o.p) return nullptr;
  const int N = o.N.value_or(std::max(min_level, 1));
  if (N < min_level)
    throw UsageError("--N " + std::to_string(N) + " is below the required level " + std::to_string(min_level));
  return std::make_unique<Oracle>(RingCtx(*o.p, N), open_cache(o));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- count

int cmd_count(const std::string& cs, const std::string& ds, const Common& o) {
  const Triple c = parse_triple(cs), d = parse_triple(ds);
  if (o.symbolic && o.p) throw UsageError("--symbolic cannot be combined with --p");
  const QPoly total = catalog_count(c, d);
  std::map<Weyl, QPoly> bw;
  for (Weyl w : kAllWeyl) bw[w] = catalog_count_w(c, d, w);
  auto oracle = make_oracle(o, std::max(c.c3, d.c3));
  std::optional<std::int64_t> formula, counted;
  if (oracle) {
    formula = total.eval(static_cast<std::int64_t>(*o.p));
    counted = static_cast<std::int64_t>(oracle->count(c, d));
  }
  const bool agree = !oracle || *formula == *counted;
  if (o.format == "json") {
    json j{{"c", c}, {"d", d}, {"total", total}, {"total_str", total.str()}, {"by_weyl", weyl_map_json(bw)}};
    if (oracle) {
      j["p"] = *o.p;
      j["N"] = oracle->ctx().level();
      j["formula"] = *formula;
      j["oracle"] = *counted;
      j["agree"] = agree;
    }
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "c,d,total,1,s1,s2,s1s2,s2s1,w0" << (oracle ? ",p,N,formula,oracle,agree" : "") << "\n";
    std::cout << csv_quote(c.str()) << "," << csv_quote(d.str()) << "," << csv_quote(total.str());
    for (Weyl w : kAllWeyl) std::cout << "," << csv_quote(bw[w].str());
    if (oracle)
      std::cout << "," << *o.p << "," << oracle->ctx().level() << "," << *formula << "," << *counted << ","
                << (agree ? "yes" : "no");
    std::cout << "\n";
  } else {
    std::cout << "c      " << c.str() << "\n"
              << "d      " << d.str() << "\n"
              << "total  " << total.str() << "\n";
    for (Weyl w : kAllWeyl) std::cout << "  " << std::left << std::setw(5) << weyl_name(w) << bw[w].str() << "\n";
    if (oracle)
      std::cout << "p=" << *o.p << " N=" << oracle->ctx().level() << "  formula " << *formula << "  oracle " << *counted
                << "  " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : kExitFail;
}

// ----------------------------------------------------------- intertwine

int cmd_intertwine(const std::string& cs, const std::string& ds, const std::string& kind, std::optional<int> restricted,
                   const Common& o) {
  const Triple c = parse_triple(cs), d = parse_triple(ds);
  if (o.symbolic && (o.p || o.q)) throw UsageError("--symbolic cannot be combined with --p or --q");
  QPoly total;
  std::optional<IntertwiningReport> rep;
  if (restricted) {
    if (c != d) throw UsageError("--i needs --c equal to --d");
    total = intertwine_restricted(c, *restricted);
  } else if (kind == "VV") {
    rep = intertwine_VV(c, d);
    total = rep->total;
  } else if (kind == "VU") {
    total = intertwine_VU(c, d);
  } else {
    total = intertwine_UU(c, d);
  }
  std::optional<std::int64_t> at_q = o.q ? std::optional(total.eval(*o.q)) : std::nullopt;
  auto oracle = make_oracle(o, std::max(c.c3, d.c3));
  std::optional<std::int64_t> formula, counted;
  if (oracle) {
    formula = total.eval(static_cast<std::int64_t>(*o.p));
    if (restricted) {
      counted = oracle_restricted(*oracle, c, *restricted);
    } else if (kind == "VV") {
      counted = oracle_intertwine_VV(*oracle, c, d);
    } else if (kind == "VU") {
      counted = oracle_intertwine_VU(*oracle, c, d);
    } else {
      counted = static_cast<std::int64_t>(oracle->count(c, d));
    }
  }
  const bool agree = !oracle || *formula == *counted;
  const std::string label = restricted ? "restricted i=" + std::to_string(*restricted) : kind;
  if (o.format == "json") {
    json j = rep ? report_json(*rep) : json{{"c", c}, {"d", d}, {"total", total}};
    j["kind"] = label;
    j["total_str"] = total.str();
    j["factored"] = total.factored();
    if (at_q) j["value_at_q"] = {{"q", *o.q}, {"value", *at_q}};
    if (oracle) {
      j["p"] = *o.p;
      j["N"] = oracle->ctx().level();
      j["formula"] = *formula;
      j["oracle"] = *counted;
      j["agree"] = agree;
    }
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "kind,c,d,total,factored" << (at_q ? ",q,value" : "") << (oracle ? ",p,N,formula,oracle,agree" : "")
              << "\n";
    std::cout << csv_quote(label) << "," << csv_quote(c.str()) << "," << csv_quote(d.str()) << ","
              << csv_quote(total.str()) << "," << csv_quote(total.factored());
    if (at_q) std::cout << "," << *o.q << "," << *at_q;
    if (oracle)
      std::cout << "," << *o.p << "," << oracle->ctx().level() << "," << *formula << "," << *counted << ","
                << (agree ? "yes" : "no");
    std::cout << "\n";
  } else {
    std::cout << label << "  " << c.str() << " " << d.str() << "\n"
              << "total     " << total.str() << "\n"
              << "factored  " << total.factored() << "\n";
    if (rep)
      for (const auto& [w, v] : rep->by_weyl) std::cout << "  " << std::left << std::setw(5) << weyl_name(w) << v.str() << "\n";
    if (at_q) std::cout << "at q=" << *o.q << ": " << *at_q << "\n";
    if (oracle)
      std::cout << "p=" << *o.p << " N=" << oracle->ctx().level() << "  formula " << *formula << "  oracle " << *counted
                << "  " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : kExitFail;
}

// ------------------------------------------------------------------ dim

int cmd_dim(const std::string& cs, const Common& o) {
  const Triple c = parse_triple(cs);
  const QPoly dim = dim_V(c), idx = index_in_K(c);
  if (o.format == "json") {
    json j{{"c", c}, {"dim", dim}, {"dim_str", dim.str()}, {"factored", dim.factored()}, {"index", idx}};
    if (o.q) j["value_at_q"] = {{"q", *o.q}, {"dim", dim.eval(*o.q)}, {"index", idx.eval(*o.q)}};
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "c,dim,factored,index" << (o.q ? ",q,dim_value,index_value" : "") << "\n"
              << csv_quote(c.str()) << "," << csv_quote(dim.str()) << "," << csv_quote(dim.factored()) << ","
              << csv_quote(idx.str());
    if (o.q) std::cout << "," << *o.q << "," << dim.eval(*o.q) << "," << idx.eval(*o.q);
    std::cout << "\n";
  } else {
    std::cout << "c         " << c.str() << "\n"
              << "dim V_c   " << dim.factored() << "\n"
              << "expanded  " << dim.str() << "\n"
              << "[K:C_c]   " << idx.factored() << "\n";
    if (o.q) std::cout << "at q=" << *o.q << ": dim " << dim.eval(*o.q) << ", index " << idx.eval(*o.q) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- catalog

int cmd_catalog(const std::string& cs, const std::string& ds, const Common& o) {
  const Triple c = parse_triple(cs), d = parse_triple(ds);
  if (!o.p) throw UsageError("catalog needs --p (and optionally --N)");
  const int need = std::max({c.c3, d.c3, 1});
  const int N = o.N.value_or(need);
  if (N < need) throw UsageError("--N " + std::to_string(N) + " is below the required level " + std::to_string(need));
  RingCtx ctx(*o.p, N);
  const auto reps = materialize(c, d, ctx);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [r, g] : reps) {
      json row = json::array();
      for (int i = 0; i < 3; ++i) row.push_back({g(i, 0), g(i, 1), g(i, 2)});
      arr.push_back({{"descriptor", descriptor_json(r)}, {"matrix", row}});
    }
    print_json({{"c", c}, {"d", d}, {"p", *o.p}, {"N", N}, {"count", reps.size()}, {"representatives", arr}});
  } else if (o.format == "csv") {
    std::cout << "descriptor,matrix\n";
    for (const auto& [r, g] : reps) std::cout << csv_quote(r.str()) << "," << csv_quote(g.str()) << "\n";
  } else {
    std::cout << reps.size() << " representatives for " << c.str() << " " << d.str() << " at p=" << *o.p << " N=" << N
              << "\n";
    for (const auto& [r, g] : reps) std::cout << std::left << std::setw(24) << r.str() << g.str() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string claim;
  int max_level = 6;
  int r = 4;
  std::uint64_t p = 3;
  int N = 2;
  std::string bound = "2,2,2";
};

std::vector<TheoremReport> run_claims(const VerifyArgs& v, const Common& o) {
  using Task = std::function<TheoremReport()>;
  std::vector<Task> tasks;
  const bool all = v.claim == "all";
  const Triple bound = parse_triple(v.bound);
  auto want = [&](const char* name) { return all || v.claim == name; };
  if (want("one-descendant")) tasks.push_back([&] { return verify_one_descendant(v.max_level); });
  if (want("two-descendant")) tasks.push_back([&] { return verify_two_descendant(v.max_level); });
  if (want("three-descendant")) tasks.push_back([&] { return verify_three_descendant(v.max_level); });
  if (want("restricted")) tasks.push_back([&] { return verify_restricted(v.max_level); });
  if (want("dimensions")) tasks.push_back([&] { return verify_dimensions(v.max_level, std::min(v.max_level, 5)); });
  if (want("symmetry")) tasks.push_back([&] { return verify_symmetry(std::min(v.max_level, 4)); });
  if (want("steinberg"))
    tasks.push_back([&] {
      auto rep = verify_steinberg(v.r);
      rep.merge(verify_bases(v.max_level));
      return rep;
    });
  std::shared_ptr<Oracle> oracle;
  if (want("cross")) {
    if (v.N < bound.c3) throw UsageError("--N is below the third entry of --bound");
    oracle = std::make_shared<Oracle>(RingCtx(v.p, v.N), open_cache(o));
    const int jobs = o.jobs;
    tasks.push_back([oracle, bound, jobs] {
      auto rep = cross_validate(*oracle, bound, jobs);
      rep.merge(oracle_intertwining(*oracle, bound, jobs));
      return rep;
    });
  }
  std::vector<TheoremReport> out(tasks.size());
  if (o.jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
  } else {
    std::vector<std::future<TheoremReport>> fs;
    for (auto& t : tasks) fs.push_back(std::async(std::launch::async, t));
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fs[i].get();
  }
  return out;
}

int cmd_verify(const VerifyArgs& v, const Common& o) {
  const auto reports = run_claims(v, o);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    print_json({{"status", ok ? "pass" : "fail"}, {"reports", arr}});
  } else if (o.format == "csv") {
    std::cout << "claim,status,checks,counterexamples,range\n";
    for (const auto& r : reports)
      std::cout << r.claim << "," << (r.pass ? "pass" : "fail") << "," << r.checks << "," << r.counterexamples.size()
                << "," << csv_quote(r.range) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(18) << r.claim << std::setw(6) << (r.pass ? "pass" : "FAIL") << std::right
                << std::setw(8) << r.checks << " checks  " << r.range << "\n";
      for (const auto& ce : r.counterexamples) {
        std::cout << "    " << ce.clause << " c=" << ce.c.str() << " d=" << ce.d.str() << " expected "
                  << ce.expected.str() << " computed " << ce.computed.str();
        if (!ce.note.empty()) std::cout << " (" << ce.note << ")";
        std::cout << "\n";
      }
    }
    if (v.claim == "steinberg" || v.claim == "all")
      for (int r = 0; r <= v.r; ++r) {
        const auto pos = is_true_representation(steinberg_r(r));
        std::cout << "S_" << r << ": " << (pos.true_representation ? "true representation" : "not a representation");
        if (pos.witness) std::cout << ", witness class " << pos.witness->key.str() << " total " << pos.witness->total;
        std::cout << "\n";
      }
    std::cout << "overall " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitFail;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const std::string& bound_s, const Common& o) {
  const Triple bound = parse_triple(bound_s);
  if (!o.p) throw UsageError("bench needs --p");
  const int N = o.N.value_or(std::max(bound.c3, 1));
  if (N < bound.c3) throw UsageError("--N is below the third entry of --bound");
  RingCtx ctx(*o.p, N);
  if (index_in_K(bound).eval(static_cast<std::int64_t>(*o.p)) > static_cast<std::int64_t>(kMaxCosets))
    throw ScaleExceeded("coset space for " + bound.str() + " exceeds " + std::to_string(kMaxCosets) + " cosets");
  Oracle oracle(ctx);
  using clock = std::chrono::steady_clock;
  const auto all = triples_below(bound);
  auto t0 = clock::now();
  for (const auto& d : all) oracle.space(d);
  auto t1 = clock::now();
  std::vector<std::pair<Triple, Triple>> pairs;
  for (const auto& d : all)
    for (const auto& c : all) pairs.emplace_back(c, d);
  oracle.prefetch(pairs, o.jobs);
  auto t2 = clock::now();
  const auto st = oracle.stats();
  const double build_s = std::chrono::duration<double>(t1 - t0).count();
  const double part_s = std::chrono::duration<double>(t2 - t1).count();
  const double cosets_per_s = build_s > 0 ? static_cast<double>(st.cosets_enumerated) / build_s : 0.0;
  const double merges_per_s = part_s > 0 ? static_cast<double>(st.merges) / part_s : 0.0;
  if (o.format == "json") {
    print_json({{"p", *o.p},
                {"N", N},
                {"bound", bound},
                {"jobs", o.jobs},
                {"spaces", st.spaces_built},
                {"cosets", st.cosets_enumerated},
                {"construction_steps", st.construction_steps},
                {"partitions", st.partitions},
                {"merges", st.merges},
                {"build_seconds", build_s},
                {"partition_seconds", part_s},
                {"cosets_per_second", cosets_per_s},
                {"merges_per_second", merges_per_s}});
  } else if (o.format == "csv") {
    std::cout << "p,N,bound,jobs,spaces,cosets,construction_steps,partitions,merges,build_seconds,partition_seconds\n"
              << *o.p << "," << N << "," << csv_quote(bound.str()) << "," << o.jobs << "," << st.spaces_built << ","
              << st.cosets_enumerated << "," << st.construction_steps << "," << st.partitions << "," << st.merges << ","
              << build_s << "," << part_s << "\n";
  } else {
    std::cout << "p=" << *o.p << " N=" << N << " bound " << bound.str() << " jobs " << o.jobs << "\n"
              << "coset spaces        " << st.spaces_built << "\n"
              << "cosets              " << st.cosets_enumerated << "\n"
              << "construction steps  " << st.construction_steps << "\n"
              << "partitions          " << st.partitions << "\n"
              << "orbit merges        " << st.merges << "\n"
              << std::fixed << std::setprecision(3) << "build time          " << build_s << " s ("
              << std::setprecision(0) << cosets_per_s << " cosets/s)\n"
              << std::setprecision(3) << "partition time      " << part_s << " s (" << std::setprecision(0)
              << merges_per_s << " merges/s)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cosets, intertwining numbers and branching checks for GL(3) parahoric subgroups"};
  app.require_subcommand(1);
  Common o;
  std::string cs, ds, kind = "VV", bound = "2,2,2";
  std::optional<int> restricted;
  VerifyArgs va;

  auto* count = app.add_subcommand("count", "Double-coset count from the catalog, optionally against the oracle");
  count->add_option("--c", cs, "Triple c1,c2,c3")->required();
  count->add_option("--d", ds, "Triple d1,d2,d3")->required();
  count->add_flag("--symbolic", o.symbolic, "Symbolic count only (default)");
  add_oracle(count, o);
  add_format(count, o);
  count->footer("CSV columns: c,d,total,1,s1,s2,s1s2,s2s1,w0 and, with --p, p,N,formula,oracle,agree");

  auto* inter = app.add_subcommand("intertwine", "Intertwining number as a polynomial in q");
  inter->add_option("--c", cs, "Triple c1,c2,c3")->required();
  inter->add_option("--d", ds, "Triple d1,d2,d3")->required();
  inter->add_option("--kind", kind, "VV, VU or UU")->check(CLI::IsMember({"VV", "VU", "UU"}))->capture_default_str();
  inter->add_option("--i", restricted, "Restricted intertwining I(V^i_c, V^i_c); needs c = d");
  inter->add_flag("--symbolic", o.symbolic, "Symbolic result only (default)");
  inter->add_option("--q", o.q, "Also evaluate at this q");
  add_oracle(inter, o);
  add_format(inter, o);
  inter->footer("CSV columns: kind,c,d,total,factored; q,value with --q; p,N,formula,oracle,agree with --p");

  auto* dim = app.add_subcommand("dim", "Dimension of V_c and the index [K:C_c]");
  dim->add_option("--c", cs, "Triple c1,c2,c3")->required();
  dim->add_option("--q", o.q, "Also evaluate at this q");
  add_format(dim, o);
  dim->footer("CSV columns: c,dim,factored,index; q,dim_value,index_value with --q");

  auto* cat = app.add_subcommand("catalog", "List materialised double-coset representatives");
  cat->add_option("--c", cs, "Triple c1,c2,c3")->required();
  cat->add_option("--d", ds, "Triple d1,d2,d3")->required();
  cat->add_option("--p", o.p, "Odd prime")->required();
  cat->add_option("--N", o.N, "Truncation level (default max(c3, d3, 1))");
  add_format(cat, o);
  cat->footer("CSV columns: descriptor,matrix (rows as (a,b,c) triples)");

  auto* ver = app.add_subcommand("verify", "Run theorem checks; exit 1 on any failure");
  ver->add_option("claim", va.claim, "Claim selector")
      ->required()
      ->check(CLI::IsMember({"one-descendant", "two-descendant", "three-descendant", "restricted", "dimensions",
                             "symmetry", "steinberg", "cross", "all"}));
  ver->add_option("--max-level", va.max_level, "Largest triple entry for symbolic sweeps")->capture_default_str();
  ver->add_option("--r", va.r, "Largest r for the Steinberg checks")->capture_default_str();
  ver->add_option("--p", va.p, "Prime for the oracle claim")->capture_default_str();
  ver->add_option("--N", va.N, "Level for the oracle claim")->capture_default_str();
  ver->add_option("--bound", va.bound, "Bound triple for the oracle claim")->capture_default_str();
  ver->add_option("--jobs", o.jobs, "Parallel claim/oracle jobs")->capture_default_str();
  ver->add_option("--cache", o.cache, "Oracle count cache file");
  add_format(ver, o);
  ver->footer("CSV columns: claim,status,checks,counterexamples,range. Exit 0 all pass, 1 any failure, 2 usage or scale error");

  auto* bench = app.add_subcommand("bench", "Time the enumeration kernel");
  bench->add_option("--p", o.p, "Odd prime")->required();
  bench->add_option("--N", o.N, "Truncation level (default third entry of --bound)");
  bench->add_option("--bound", bound, "Bound triple")->capture_default_str();
  bench->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_format(bench, o);
  bench->footer(
      "CSV columns: p,N,bound,jobs,spaces,cosets,construction_steps,partitions,merges,build_seconds,partition_seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(cs, ds, o);
    if (*inter) return cmd_intertwine(cs, ds, kind, restricted, o);
    if (*dim) return cmd_dim(cs, o);
    if (*cat) return cmd_catalog(cs, ds, o);
    if (*ver) return cmd_verify(va, o);
    if (*bench) return cmd_bench(bound, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
