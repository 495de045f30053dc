// qvol: command-line front end for the volume engines and q-series checks.
//
// Exit codes: 0 success, 1 a verification did not pass, 2 usage error,
// 3 internal error (consistency failure, I/O).

#include "qvol/cache.hpp"
#include "qvol/config.hpp"
#include "qvol/qseries.hpp"
#include "qvol/serialize.hpp"
#include "qvol/super.hpp"
#include "qvol/volume.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <functional>
#include <future>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

using namespace qvol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string flavor = "q";
  unsigned g = 0;
  unsigned n = 1;
  std::optional<unsigned> m_max;
  std::string format;
  std::vector<std::string> q;
  std::string k;
  std::string budget;
  unsigned precision = 0;
  std::string cache_dir;
  std::string config_path;
  bool no_cache = false;
  bool odd = false;
  bool even_and_odd = false;
  std::string y = "0";
  std::string r = "1/2";
  unsigned max_level = 3;
  unsigned threads = 0;
  unsigned max_N = 4096;
  bool kernel = false;
  bool super_kernel = false;
  std::string x = "1";
  std::vector<std::string> r_seq{"9/10", "19/20", "99/100"};
};

Config resolve_config(const Options& o) {
  Config c = o.config_path.empty() ? Config{} : load_config(o.config_path);
  if (!o.q.empty()) {
    c.q_samples.clear();
    for (const auto& s : o.q) c.q_samples.push_back(parse_rat(s));
  }
  if (!o.k.empty()) std::tie(c.k_min, c.k_max) = parse_k_range(o.k);
  if (!o.budget.empty()) c.budget = parse_rat(o.budget);
  if (o.precision) c.precision = o.precision;
  if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
  if (!o.format.empty()) c.format = parse_format(o.format);
  if (c.cache_dir.empty()) c.cache_dir = default_cache_dir();
  c.validate();
  return c;
}

Flavor classical_flavor(const std::string& s) {
  const Flavor f = parse_flavor(s);
  if (is_super(f)) throw UsageError("flavor '" + s + "' is a super flavor; use super-volume");
  return f;
}

// "q" and "wp" are accepted as shorthands for the super flavors here.
Flavor super_flavor(const std::string& s) {
  const Flavor f = parse_flavor(s);
  if (f == Flavor::QClassical) return Flavor::QSuper;
  if (f == Flavor::WpClassical) return Flavor::WpSuper;
  return f;
}

void require_stable(unsigned g, unsigned n) {
  if (n == 0 || 2 * static_cast<long>(g) - 2 + static_cast<long>(n) < 1)
    throw UsageError("(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                     ") is not stable: need n >= 1 and 2g - 2 + n >= 1");
}

// Looks a document up in the cache, computing and storing it on a miss.
std::string cached_payload(const Config& c, bool use_cache, const std::string& key,
                           const std::function<std::string()>& compute) {
  if (!use_cache) return compute();
  DiskCache cache(c.cache_dir);
  DiskCache::Lookup status;
  if (auto hit = cache.load(key, &status)) return *hit;
  if (status == DiskCache::Lookup::Corrupt)
    std::cerr << "qvol: cache entry for " << key << " is corrupt, recomputing\n";
  std::string payload = compute();
  try {
    cache.store(key, payload);
  } catch (const std::exception& e) {
    std::cerr << "qvol: cache write skipped: " << e.what() << "\n";
  }
  return payload;
}

std::string volume_payload(const Config& c, bool use_cache, Flavor f, unsigned g, unsigned n) {
  const std::string key = "volume/" + std::string(flavor_name(f)) + "/" + std::to_string(g) + "/" + std::to_string(n);
  return cached_payload(c, use_cache, key, [&] { return dump(to_json(VolumeDoc{f, g, n, volume(f, g, n)})); });
}

std::string render_volume(const std::string& payload, Format fmt) {
  if (fmt == Format::Json) return payload;
  const VolumeDoc doc = volume_from_json(Json::parse(payload));
  return (fmt == Format::Latex ? to_latex(doc.poly) : to_text(doc.poly)) + "\n";
}

int cmd_volume(const Options& o) {
  const Config c = resolve_config(o);
  const Flavor f = classical_flavor(o.flavor);
  require_stable(o.g, o.n);
  std::cout << render_volume(volume_payload(c, !o.no_cache, f, o.g, o.n), c.format);
  return kExitOk;
}

int cmd_super_volume(const Options& o) {
  const Config c = resolve_config(o);
  const Flavor f = super_flavor(o.flavor);
  if (o.n == 0) throw UsageError("super volumes need n >= 1");
  const unsigned m_max = o.m_max.value_or(4);
  const std::string key = "super/" + std::string(flavor_name(f)) + "/" + std::to_string(o.g) + "/" +
                          std::to_string(o.n) + "/" + std::to_string(m_max);
  const std::string payload = cached_payload(c, !o.no_cache, key, [&] {
    return dump(to_json(super_volume(f, o.g, o.n, m_max)));
  });
  if (c.format == Format::Json) {
    std::cout << payload;
  } else {
    const SuperSeries s = super_from_json(Json::parse(payload));
    std::cout << (c.format == Format::Latex ? to_latex(s) : to_text(s)) << "\n";
  }
  return kExitOk;
}

// Rescaled q-kernel against its q -> 1 limit along r_seq, at the configured precision.
int cmd_kernel_trend(const Options& o, const Config& c) {
  std::vector<Rat> rs;
  for (const auto& r : o.r_seq) rs.push_back(parse_rat(r));
  const TrendReport t = kernel_limit_trend(parse_rat(o.x), parse_rat(o.y), rs, c.precision, o.super_kernel);
  if (c.format == Format::Json) {
    std::cout << dump(to_json(t));
  } else {
    for (std::size_t i = 0; i < rs.size(); ++i)
      std::cout << "r=" << to_string(rs[i]) << " discrepancy=" << t.discrepancy[i] << "\n";
    std::cout << (t.strictly_decreasing ? "strictly decreasing PASS" : "not strictly decreasing FAIL") << "\n";
  }
  return t.strictly_decreasing ? kExitOk : kExitFailed;
}

int cmd_limit_check(const Options& o) {
  const Config c = resolve_config(o);
  if (o.kernel) return cmd_kernel_trend(o, c);
  Json report;
  bool pass = false;
  if (o.m_max) {
    if (o.n == 0) throw UsageError("super volumes need n >= 1");
    const SuperSeries lhs = super_limit(super_volume(Flavor::QSuper, o.g, o.n, *o.m_max));
    const SuperSeries rhs = super_volume(Flavor::WpSuper, o.g, o.n, *o.m_max);
    pass = lhs == rhs;
    report = Json{{"check", "super_limit"}, {"g", o.g}, {"n", o.n}, {"m_max", *o.m_max}, {"pass", pass}};
    if (!pass) report["limit_of_q"] = to_json(lhs), report["wp"] = to_json(rhs);
  } else {
    require_stable(o.g, o.n);
    const VolumePoly lhs = classical_limit(volume(Flavor::QClassical, o.g, o.n));
    const VolumePoly rhs = volume(Flavor::WpClassical, o.g, o.n);
    pass = lhs == rhs;
    report = Json{{"check", "classical_limit"}, {"g", o.g}, {"n", o.n}, {"pass", pass}};
    if (!pass)
      report["limit_of_q"] = to_json(VolumeDoc{Flavor::WpClassical, o.g, o.n, lhs}),
      report["wp"] = to_json(VolumeDoc{Flavor::WpClassical, o.g, o.n, rhs});
  }
  if (c.format == Format::Json) {
    std::cout << dump(report);
  } else {
    std::cout << report["check"].get<std::string>() << " g=" << o.g << " n=" << o.n;
    if (o.m_max) std::cout << " m_max=" << *o.m_max;
    std::cout << (pass ? " PASS" : " FAIL") << "\n";
  }
  return pass ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o) {
  Options opts = o;
  if (opts.format.empty()) opts.format = "json";
  const Config c = resolve_config(opts);
  std::vector<std::pair<bool, std::pair<int, Rat>>> jobs;
  for (const Rat& q : c.q_samples)
    for (int k = c.k_min; k <= c.k_max; ++k) {
      if (!o.odd || o.even_and_odd) jobs.push_back({false, {k, q}});
      if (o.odd || o.even_and_odd) jobs.push_back({true, {k, q}});
    }
  std::vector<std::future<IdentityReport>> futures;
  for (const auto& [odd, kq] : jobs)
    futures.push_back(std::async(std::launch::async, [&c, max_N = o.max_N, odd = odd, k = kq.first, q = kq.second] {
      return verify_qident_to(k, q, c.budget, odd, max_N);
    }));
  Json out = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const IdentityReport r = futures[i].get();
    all = all && r.pass;
    Json j = to_json(r);
    j["identity"] = jobs[i].first ? "odd" : "even";
    out.push_back(j);
    if (c.format != Format::Json)
      std::cout << (jobs[i].first ? "odd " : "even") << " k=" << r.k << " q=" << to_string(r.q) << " N=" << r.N
                << " discrepancy=" << to_decimal(r.discrepancy, 6) << " budget=" << to_decimal(r.budget, 6)
                << (r.pass ? " PASS" : " FAIL") << "\n";
  }
  if (c.format == Format::Json) std::cout << dump(out);
  return all ? kExitOk : kExitFailed;
}

int cmd_oracle_f(const Options& o) {
  Options opts = o;
  if (opts.format.empty()) opts.format = "json";
  if (opts.budget.empty()) opts.budget = "1e-25";
  const Config c = resolve_config(opts);
  const Flavor f = parse_flavor(o.flavor);
  if (!is_q(f)) throw UsageError("oracle-f needs flavor q or qsuper");
  const unsigned k = o.k.empty() ? 0u : static_cast<unsigned>(parse_k_range(o.k).first);
  const Rat y = parse_rat(o.y);
  const Rat r = parse_rat(o.r);
  if (r <= 0 || r >= 1) throw UsageError("--r must lie in (0,1)");
  if (y < 0) throw UsageError("--y must be non-negative");
  const OracleReport rep = compare_f_oracle_to(f, k, y, r, c.budget, o.max_N);
  if (c.format == Format::Json) {
    std::cout << dump(to_json(rep));
  } else {
    std::cout << flavor_name(f) << " k=" << k << " y=" << to_string(y) << " r=" << to_string(r) << " N=" << rep.N
              << " oracle=" << to_decimal(rep.oracle, 30) << " discrepancy=" << to_decimal(rep.discrepancy, 6)
              << " budget=" << to_decimal(rep.budget, 6) << (rep.pass ? " PASS" : " FAIL") << "\n";
  }
  return rep.pass ? kExitOk : kExitFailed;
}

int cmd_table(const Options& o) {
  const Config c = resolve_config(o);
  const Flavor f = classical_flavor(o.flavor);
  std::vector<std::pair<unsigned, unsigned>> targets;
  for (unsigned level = 1; level <= o.max_level; ++level)
    for (unsigned g = 0; 2 * g <= level + 1; ++g) {
      const long n = static_cast<long>(level) + 2 - 2 * static_cast<long>(g);
      if (n >= 1) targets.emplace_back(g, static_cast<unsigned>(n));
    }
  // engines are thread-safe; each worker takes the next target
  std::vector<std::string> payloads(targets.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(o.threads ? o.threads : std::thread::hardware_concurrency(), targets.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < targets.size();) {
        try {
          payloads[i] = volume_payload(c, !o.no_cache, f, targets[i].first, targets[i].second);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (c.format == Format::Json) {
    Json out = Json::array();
    for (const auto& p : payloads) out.push_back(Json::parse(p));
    std::cout << dump(out);
    return kExitOk;
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto [g, n] = targets[i];
    if (c.format == Format::Latex)
      std::cout << "V_{" << g << "," << n << "} = " << render_volume(payloads[i], c.format);
    else
      std::cout << "V(" << g << "," << n << ") = " << render_volume(payloads[i], c.format);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed and super Weil-Petersson volume polynomials"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json | latex | text");
    s->add_option("--config", o.config_path, "JSON config file");
    s->add_option("--cache-dir", o.cache_dir, "cache directory (default $QVOL_CACHE_DIR or ~/.cache/qvol)");
    s->add_option("--precision", o.precision, "decimal digits for real arithmetic (>= 30)");
  };

  auto* vol = app.add_subcommand("volume", "classical volume polynomial V_{g,n}");
  common(vol);
  vol->add_option("--flavor", o.flavor, "q | wp")->capture_default_str();
  vol->add_option("--g", o.g)->required();
  vol->add_option("--n", o.n)->required();
  vol->add_flag("--no-cache", o.no_cache);

  auto* sup = app.add_subcommand("super-volume", "super volume series up to s^m_max/m_max!");
  common(sup);
  sup->add_option("--flavor", o.flavor, "qsuper | wpsuper (q, wp accepted)")->capture_default_str();
  sup->add_option("--g", o.g)->required();
  sup->add_option("--n", o.n)->required();
  sup->add_option("--m-max", o.m_max, "highest s-power (default 4)");
  sup->add_flag("--no-cache", o.no_cache);

  auto* lim = app.add_subcommand("limit-check", "q -> 1 limit of the q-volume against the WP volume");
  common(lim);
  lim->add_option("--g", o.g);
  lim->add_option("--n", o.n);
  lim->add_option("--m-max", o.m_max, "check the super series up to this order instead");
  lim->add_flag("--kernel", o.kernel, "numeric trend of the rescaled kernel instead of the volumes");
  lim->add_flag("--super", o.super_kernel, "with --kernel: the super kernel");
  lim->add_option("--x", o.x, "with --kernel")->capture_default_str();
  lim->add_option("--y", o.y, "with --kernel (|y| <= x)")->capture_default_str();
  lim->add_option("--r", o.r_seq, "with --kernel: increasing r values, q = r^2")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "q-series identities at rational q with proven tail budgets");
  common(ver);
  ver->add_option("--k", o.k, "k range a..b (default -4..6)");
  ver->add_option("--q", o.q, "q values (default 1/4 1/2)");
  ver->add_option("--budget", o.budget, "target tail budget (default 1e-30)");
  ver->add_flag("--odd", o.odd, "the odd-m identity instead");
  ver->add_flag("--both", o.even_and_odd, "both identities");
  ver->add_option("--max-n", o.max_N, "largest truncation tried before giving up")->capture_default_str();

  auto* orc = app.add_subcommand("oracle-f", "termwise-integrated F_{2k+1}(y) against the symbolic polynomial");
  common(orc);
  orc->add_option("--flavor", o.flavor, "q | qsuper")->capture_default_str();
  orc->add_option("--k", o.k, "k >= 0")->required();
  orc->add_option("--y", o.y)->capture_default_str();
  orc->add_option("--r", o.r, "q = r^2")->capture_default_str();
  orc->add_option("--budget", o.budget, "target tail budget (default 1e-25)");
  orc->add_option("--max-n", o.max_N, "largest truncation tried before giving up")->capture_default_str();

  auto* tab = app.add_subcommand("table", "every stable (g,n) with 2g-2+n <= max-level");
  common(tab);
  tab->add_option("--flavor", o.flavor, "q | wp")->capture_default_str();
  tab->add_option("--max-level", o.max_level)->capture_default_str();
  tab->add_option("--threads", o.threads, "worker threads (default: hardware)");
  tab->add_flag("--no-cache", o.no_cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vol) return cmd_volume(o);
    if (*sup) return cmd_super_volume(o);
    if (*lim) return cmd_limit_check(o);
    if (*ver) return cmd_verify(o);
    if (*orc) return cmd_oracle_f(o);
    if (*tab) return cmd_table(o);
  } catch (const UsageError& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qvol: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
