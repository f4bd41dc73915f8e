// majd: enumeration, statistics, distributions, verification sweeps, and
// pipeline traces for maj_d on permutations and standard Young tableaux.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "majd/dist.hpp"
#include "majd/stats.hpp"
#include "majd/verify.hpp"

namespace {

using nlohmann::json;
using namespace majd;

constexpr const char* kCacheVersion = "majd-dist-v1";

struct CommonOpts {
  std::string format = "plain";  // plain | json | csv
  std::string out;               // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write the report to a file instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
  file << text;
}

WeightReading parse_reading(const std::string& name) {
  if (name == "BoundA") return WeightReading::BoundA;
  if (name == "BoundB") return WeightReading::BoundB;
  if (name == "CellLabel") return WeightReading::CellLabel;
  throw CLI::ValidationError("--reading", "unknown reading: " + name);
}

json pairs_to_json(const std::vector<WeightedPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs)
    arr.push_back({{"low", p.low}, {"high", p.high}, {"weight", p.weight}});
  return arr;
}

std::string pairs_to_text(const std::vector<WeightedPair>& pairs) {
  std::ostringstream os;
  for (const auto& p : pairs) {
    if (os.tellp() > 0) os << ' ';
    os << '(' << p.low << ',' << p.high << ')';
    if (p.weight != 1) os << 'x' << p.weight;
  }
  return os.str();
}

void for_each_perm(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// On-disk distribution cache. One JSON file per key under the cache
// directory; files carry the full key so hash collisions stay harmless.
class DiskCache {
 public:
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

  DistCacheHooks hooks() const {
    DistCacheHooks h;
    h.load = [this](const std::string& key) { return load(key); };
    h.store = [this](const std::string& key, const DistPolynomial& dist) {
      store(key, dist);
    };
    return h;
  }

 private:
  std::filesystem::path file_for(const std::string& key) const {
    const std::uint64_t h =
        std::hash<std::string>{}(std::string(kCacheVersion) + "|" + key);
    std::ostringstream name;
    name << std::hex << h << ".json";
    return std::filesystem::path(dir_) / name.str();
  }

  std::optional<DistPolynomial> load(const std::string& key) const {
    std::ifstream file(file_for(key));
    if (!file) return std::nullopt;
    json doc = json::parse(file, nullptr, false);
    if (doc.is_discarded() || doc.value("key", "") != key ||
        doc.value("version", "") != kCacheVersion)
      return std::nullopt;
    DistPolynomial dist;
    dist.coeffs = doc.at("coeffs").get<std::vector<std::uint64_t>>();
    return dist;
  }

  void store(const std::string& key, const DistPolynomial& dist) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // cache is best-effort
    std::ofstream file(file_for(key));
    if (!file) return;
    file << json{{"version", kCacheVersion}, {"key", key}, {"coeffs", dist.coeffs}};
  }

  std::string dir_;
};

// ---- enumerate ----

struct EnumerateOpts {
  std::string shape;
  int n = 0;
  bool count_only = false;
  CommonOpts common;
};

int run_enumerate(const EnumerateOpts& o) {
  json report{{"command", "enumerate"}};
  std::vector<std::string> items;
  std::uint64_t count = 0;
  if (!o.shape.empty()) {
    const Partition shape = Partition::parse(o.shape);
    report["shape"] = shape.to_text();
    count = count_syt(shape);
    if (!o.count_only)
      for (const StandardTableau& t : enumerate_syt(shape)) items.push_back(t.to_text());
  } else {
    if (o.n < 1 || o.n > kMaxTableauSize)
      throw std::invalid_argument("enumerate needs --shape, or --n between 1 and 20");
    if (!o.count_only && o.n > kMaxEnumSize)
      throw std::domain_error("n too large to list; use --count");
    report["n"] = o.n;
    count = factorial(o.n);
    if (!o.count_only)
      for_each_perm(o.n, [&](const Permutation& p) { items.push_back(p.to_text()); });
  }
  report["count"] = count;
  if (!o.count_only) report["items"] = items;

  std::ostringstream os;
  if (o.common.format == "json") {
    os << report.dump(2) << "\n";
  } else if (o.common.format == "csv") {
    if (o.count_only) {
      os << "count\n" << count << "\n";
    } else {
      os << "item\n";
      for (const auto& item : items) os << '"' << item << "\"\n";
    }
  } else {
    for (const auto& item : items) os << item << "\n";
    os << "count: " << count << "\n";
  }
  emit(o.common, os.str());
  return 0;
}

// ---- stat ----

struct StatOpts {
  std::string object;
  std::string stat;
  int d = 0;
  bool has_d = false;
  std::string reading = "CellLabel";
  CommonOpts common;
};

bool stat_needs_d(const std::string& stat) {
  return stat == "majd" || stat == "majd_tab" || stat == "naive";
}

int run_stat(const StatOpts& o) {
  if (stat_needs_d(o.stat) != o.has_d)
    throw CLI::ValidationError(
        "--d", o.has_d ? "--d does not apply to " + o.stat : o.stat + " requires --d");

  json report{{"command", "stat"}, {"stat", o.stat}, {"input", o.object}};
  if (o.has_d) report["d"] = o.d;
  long long value = 0;
  std::vector<WeightedPair> pairs;
  bool has_pairs = false;

  if (o.stat == "inv" || o.stat == "maj" || o.stat == "majd") {
    const Permutation p = Permutation::parse(o.object);
    value = o.stat == "inv"   ? inv(p)
            : o.stat == "maj" ? maj(p)
                              : maj_d_perm(p, o.d);
  } else {
    const StandardTableau t = StandardTableau::parse(o.object);
    if (o.stat == "inv_hs") {
      pairs = hs_inversion_set(t);
      has_pairs = true;
      value = static_cast<long long>(pairs.size());
    } else if (o.stat == "maj_tab") {
      value = maj_tab(t);
    } else if (o.stat == "majd_tab") {
      const WeightedResult w = maj_d_weighted(t, o.d, parse_reading(o.reading));
      pairs = w.pairs;
      has_pairs = true;
      value = maj_d_transform(t, o.d);
      report["weighted_value"] = w.value;
      report["reading"] = o.reading;
    } else if (o.stat == "naive") {
      value = naive_weighted(t, o.d);
    } else {
      throw CLI::ValidationError("--stat", "unknown statistic: " + o.stat);
    }
  }
  report["value"] = value;
  if (has_pairs) report["pairs"] = pairs_to_json(pairs);

  std::ostringstream os;
  if (o.common.format == "json") {
    os << report.dump(2) << "\n";
  } else if (o.common.format == "csv") {
    os << "stat,input,value\n" << o.stat << ",\"" << o.object << "\"," << value << "\n";
  } else {
    os << o.stat << "(" << o.object << ")";
    if (o.has_d) os << " d=" << o.d;
    os << " = " << value << "\n";
    if (has_pairs) os << "pairs: " << pairs_to_text(pairs) << "\n";
  }
  emit(o.common, os.str());
  return 0;
}

// ---- dist ----

struct DistOpts {
  std::string shape;
  int n = 0;
  std::string stat;
  int d = 0;
  bool has_d = false;
  int jobs = 1;
  bool no_cache = false;
  std::string cache_dir = ".majd-cache";
  CommonOpts common;
};

int run_dist(const DistOpts& o) {
  if (stat_needs_d(o.stat) != o.has_d)
    throw CLI::ValidationError(
        "--d", o.has_d ? "--d does not apply to " + o.stat : o.stat + " requires --d");

  std::string key;
  std::function<DistPolynomial()> compute;
  json report{{"command", "dist"}, {"stat", o.stat}, {"jobs", o.jobs}};
  if (o.has_d) report["d"] = o.d;

  if (!o.shape.empty()) {
    const Partition shape = Partition::parse(o.shape);
    report["shape"] = shape.to_text();
    TabStat stat;
    if (o.stat == "maj_tab") stat = TabStat::MajTab;
    else if (o.stat == "majd_tab") stat = TabStat::MajDTab;
    else if (o.stat == "inv_hs") stat = TabStat::InvHS;
    else if (o.stat == "naive") stat = TabStat::Naive;
    else throw CLI::ValidationError("--stat", o.stat + " is not a tableau statistic");
    key = "tab|shape=" + shape.to_text() + "|stat=" + o.stat +
          (o.has_d ? "|d=" + std::to_string(o.d) : "");
    compute = [=] { return tab_distribution(shape, stat, o.d, o.jobs); };
  } else {
    report["n"] = o.n;
    PermStat stat;
    if (o.stat == "inv") stat = PermStat::Inv;
    else if (o.stat == "maj") stat = PermStat::Maj;
    else if (o.stat == "majd") stat = PermStat::MajD;
    else throw CLI::ValidationError("--stat", o.stat + " is not a permutation statistic");
    key = "perm|n=" + std::to_string(o.n) + "|stat=" + o.stat +
          (o.has_d ? "|d=" + std::to_string(o.d) : "");
    compute = [=] { return perm_distribution(o.n, stat, o.d, o.jobs); };
  }

  DistPolynomial dist;
  if (o.no_cache) {
    dist = compute();
  } else {
    DiskCache cache(o.cache_dir);
    const DistCacheHooks hooks = cache.hooks();
    if (auto hit = hooks.load(key)) {
      dist = *hit;
    } else {
      dist = compute();
      hooks.store(key, dist);
    }
  }

  report["coeffs"] = dist.coeffs;
  report["total"] = dist.total();

  std::ostringstream os;
  if (o.common.format == "json") {
    os << report.dump(2) << "\n";
  } else if (o.common.format == "csv") {
    os << "power,coeff\n";
    for (std::size_t i = 0; i < dist.coeffs.size(); ++i)
      os << i << "," << dist.coeffs[i] << "\n";
  } else {
    os << dist.to_text() << "\n";
  }
  emit(o.common, os.str());
  return 0;
}

// ---- verify ----

struct VerifyOpts {
  std::vector<std::string> suites;
  int max_n = 8;
  int jobs = 1;
  bool no_cache = false;
  std::string cache_dir = ".majd-cache";
  CommonOpts common;
};

int run_verify(const VerifyOpts& o) {
  std::vector<std::string> names = o.suites.empty() ? suite_names() : o.suites;
  SweepBounds bounds;
  bounds.max_n_dist = o.max_n;
  bounds.max_n_pointwise = std::min(o.max_n, 7);
  bounds.jobs = o.jobs;
  DiskCache cache(o.cache_dir);
  const DistCacheHooks hooks = o.no_cache ? DistCacheHooks{} : cache.hooks();

  json report{{"command", "verify"}, {"max_n", o.max_n}, {"jobs", o.jobs}};
  json suites = json::array();
  std::ostringstream plain;
  bool all_pass = true;
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, bounds, hooks);
    all_pass = all_pass && r.pass;
    suites.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"checks", r.checks},
                      {"seconds", r.seconds},
                      {"note", r.note},
                      {"counterexamples", r.counterexamples}});
    plain << (r.pass ? "PASS" : "FAIL") << " " << r.name << " checks=" << r.checks
          << " (" << r.seconds << "s)";
    if (!r.note.empty()) plain << "\n  note: " << r.note;
    plain << "\n";
    for (const auto& c : r.counterexamples) plain << "  counterexample: " << c << "\n";
  }
  report["suites"] = suites;
  report["pass"] = all_pass;
  plain << (all_pass ? "all suites pass" : "FAILURES present") << "\n";

  std::ostringstream csv;
  csv << "suite,pass,checks,seconds\n";
  for (const auto& s : suites)
    csv << s["name"].get<std::string>() << "," << (s["pass"].get<bool>() ? 1 : 0) << ","
        << s["checks"].get<long long>() << "," << s["seconds"].get<double>() << "\n";

  emit(o.common, o.common.format == "json"  ? report.dump(2) + "\n"
                 : o.common.format == "csv" ? csv.str()
                                            : plain.str());
  return all_pass ? 0 : 1;
}

// ---- trace ----

struct TraceOpts {
  std::string tableau;
  int d = 0;
  std::string reading = "CellLabel";
  std::string swap_mode = "FixedPath";
  CommonOpts common;
};

int run_trace(const TraceOpts& o) {
  const StandardTableau t = StandardTableau::parse(o.tableau);
  const int n = t.size();
  if (o.d < 1) throw CLI::ValidationError("--d", "d must be positive");

  // The block-cycling pipeline is the engine; RecomputedPath reruns every
  // stage through the swap chain and reports any divergence.
  PipelineTrace trace = psi_pipeline(t, o.d);
  std::optional<std::string> swap_divergence;
  if (o.swap_mode == "RecomputedPath") {
    StandardTableau cur = t;
    for (int i = 0; i < n; ++i) {
      cur = psi_k_d_via_swaps(cur, n - i, o.d, SwapMode::RecomputedPath);
      if (!(cur == trace.stage(i + 1)) && !swap_divergence)
        swap_divergence = "swap chain diverges at stage " + std::to_string(i + 1);
    }
  } else if (o.swap_mode != "FixedPath") {
    throw CLI::ValidationError("--swap-mode", "unknown mode: " + o.swap_mode);
  }

  const WeightedResult weighted = maj_d_weighted(t, o.d, parse_reading(o.reading));
  const long long transform = maj_d_transform(t, o.d);

  json report{{"command", "trace"}, {"input", o.tableau}, {"d", o.d},
              {"reading", o.reading}, {"swap_mode", o.swap_mode}};
  json stages = json::array();
  std::ostringstream plain;
  plain << "trace of " << t.to_text() << " with d=" << o.d << "\n";
  for (int i = 0; i < static_cast<int>(trace.stages.size()); ++i) {
    const PipelineStage& stage = trace.stages[i];
    json js{{"index", i}, {"tableau", stage.after.to_text()}};
    plain << "T_" << i << " = " << stage.after.to_text();
    if (i > 0) {
      const int k = stage.k;
      js["k"] = k;
      if (stage.path) {
        js["path_steps"] = stage.path->step_text();
        js["path_heights"] = stage.path->heights;
        plain << "  [Psi_" << k << " path " << stage.path->step_text() << " heights (";
        for (std::size_t h = 0; h < stage.path->heights.size(); ++h)
          plain << (h ? "," : "") << stage.path->heights[h];
        plain << ")";
      }
      if (stage.block_partition) {
        js["blocks"] = stage.block_partition->to_text();
        plain << " blocks " << stage.block_partition->to_text();
      }
      if (stage.path || stage.block_partition) plain << "]";
    }
    plain << "\n";
    stages.push_back(std::move(js));
  }
  report["stages"] = stages;

  json per_stage = json::array();
  for (const StageWeights& sw : weighted.per_stage) {
    per_stage.push_back(
        {{"k", sw.k}, {"ell", sw.ell}, {"pairs", pairs_to_json(sw.pairs)}});
    if (!sw.pairs.empty())
      plain << "k=" << sw.k << " (label " << sw.ell
            << "): " << pairs_to_text(sw.pairs) << "\n";
  }
  report["per_stage_pairs"] = per_stage;
  report["pairs"] = pairs_to_json(weighted.pairs);
  report["weighted_value"] = weighted.value;
  report["transform_value"] = transform;
  if (swap_divergence) report["swap_divergence"] = *swap_divergence;

  plain << "weighted pairs: " << pairs_to_text(weighted.pairs) << "\n";
  if (swap_divergence) plain << *swap_divergence << "\n";
  plain << "maj_" << o.d << " = " << transform << " (transform), " << weighted.value
        << " (weighted)\n";

  std::ostringstream csv;
  csv << "low,high,weight\n";
  for (const auto& p : weighted.pairs)
    csv << p.low << "," << p.high << "," << p.weight << "\n";

  emit(o.common, o.common.format == "json"  ? report.dump(2) + "\n"
                 : o.common.format == "csv" ? csv.str()
                                            : plain.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maj_d statistics on permutations and standard Young tableaux"};
  app.require_subcommand(1);

  EnumerateOpts eo;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List or count SYT(shape) or S_n");
  CLI::Option* eshape = enumerate->add_option("--shape", eo.shape, "Partition, e.g. 3,3,3");
  enumerate->add_option("--n", eo.n, "Permutation degree")->excludes(eshape);
  enumerate->add_flag("--count", eo.count_only, "Count only, skip the listing");
  add_common(enumerate, eo.common);

  StatOpts so;
  CLI::App* stat = app.add_subcommand("stat", "Evaluate one statistic on one object");
  stat->add_option("object", so.object, "Permutation or tableau text")->required();
  stat->add_option("--stat", so.stat, "inv | maj | majd | inv_hs | maj_tab | majd_tab | naive")
      ->required()
      ->check(CLI::IsMember({"inv", "maj", "majd", "inv_hs", "maj_tab", "majd_tab", "naive"}));
  CLI::Option* sd = stat->add_option("--d", so.d, "Band width for the maj_d family");
  stat->add_option("--reading", so.reading, "BoundA | BoundB | CellLabel")
      ->capture_default_str();
  add_common(stat, so.common);

  DistOpts dopt;
  CLI::App* dist = app.add_subcommand("dist", "Distribution polynomial of a statistic");
  CLI::Option* dshape = dist->add_option("--shape", dopt.shape, "Partition");
  dist->add_option("--n", dopt.n, "Permutation degree")->excludes(dshape);
  dist->add_option("--stat", dopt.stat, "Statistic selector")->required();
  CLI::Option* dd = dist->add_option("--d", dopt.d, "Band width");
  dist->add_option("--jobs", dopt.jobs, "Worker threads")->capture_default_str();
  dist->add_flag("--no-cache", dopt.no_cache, "Skip the on-disk cache");
  dist->add_option("--cache-dir", dopt.cache_dir, "Cache directory")->capture_default_str();
  add_common(dist, dopt.common);

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
  verify->add_option("suites", vo.suites, "Suite names (default: all)");
  verify->add_option("--max-n", vo.max_n, "Distribution sweep bound")->capture_default_str();
  verify->add_option("--jobs", vo.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--no-cache", vo.no_cache, "Never read or write the cache");
  verify->add_option("--cache-dir", vo.cache_dir, "Cache directory")->capture_default_str();
  add_common(verify, vo.common);

  TraceOpts to;
  CLI::App* trace = app.add_subcommand("trace", "Render the full Psi^(d) pipeline");
  trace->add_option("tableau", to.tableau, "Tableau text")->required();
  trace->add_option("--d", to.d, "Band width")->required();
  trace->add_option("--reading", to.reading, "BoundA | BoundB | CellLabel")
      ->capture_default_str();
  trace->add_option("--swap-mode", to.swap_mode, "FixedPath | RecomputedPath")
      ->capture_default_str();
  add_common(trace, to.common);

  try {
    app.parse(argc, argv);
    so.has_d = sd->count() > 0;
    dopt.has_d = dd->count() > 0;
    if (enumerate->parsed()) return run_enumerate(eo);
    if (stat->parsed()) return run_stat(so);
    if (dist->parsed()) return run_dist(dopt);
    if (verify->parsed()) return run_verify(vo);
    if (trace->parsed()) return run_trace(to);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
