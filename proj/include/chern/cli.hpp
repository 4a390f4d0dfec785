#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "chern/euler_hypersurface.hpp"
#include "chern/hirzebruch.hpp"
#include "chern/serialize.hpp"
#include "chern/verify.hpp"

namespace chern::cli {

inline constexpr const char *kEngineVersion = "chern-calc/1.0.0";
inline constexpr const char *kCacheEnv = "CHERN_CALC_CACHE";
inline constexpr unsigned kMaxDimension = 40;

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// One computed invariant with the request parameters that produced it.
struct ResultRecord {
  std::optional<unsigned> n;
  std::optional<BigInt> d;
  std::string invariant;
  Json values;
  std::string engine = kEngineVersion;

  friend bool operator==(const ResultRecord &, const ResultRecord &) = default;
};

inline Json to_json(const ResultRecord &r) {
  Json j = Json::object();
  if (r.n)
    j["n"] = *r.n;
  if (r.d)
    j["d"] = to_json_value(*r.d);
  j["invariant"] = r.invariant;
  j["values"] = r.values;
  j["engine"] = r.engine;
  return j;
}

inline ResultRecord record_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("invariant") || !j.contains("values") || !j.contains("engine"))
    throw domain_error("not a result record: " + j.dump());
  ResultRecord r;
  if (j.contains("n"))
    r.n = j.at("n").get<unsigned>();
  if (j.contains("d"))
    r.d = bigint_from_json(j.at("d"));
  r.invariant = j.at("invariant").get<std::string>();
  r.values = j.at("values");
  r.engine = j.at("engine").get<std::string>();
  return r;
}

/// A named exhaustive check run by `verify`; `group` is "fulton" or "oracle".
struct Check {
  std::string group;
  std::string name;
  std::function<SweepResult(const SweepBounds &)> run;
};
using CheckRegistry = std::vector<Check>;

inline CheckRegistry default_checks() {
  return {
      {"fulton", "fulton-identity", sweep_fulton_identity},
      {"fulton", "fulton-specialization", sweep_fulton_specialization},
      {"oracle", "theorem-oracle", sweep_theorem_oracle},
      {"oracle", "chern-normalization", sweep_chern_normalization},
      {"oracle", "section-identity", sweep_section_identity},
      {"oracle", "chi-y-oracle", sweep_chi_y_oracle},
  };
}

namespace detail {

struct Range {
  long long lo = 0;
  long long hi = -1;
};

inline Range parse_range(const std::string &text, const char *what) {
  auto dots = text.find("..");
  try {
    Range r;
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(text, &used);
      if (used != text.size())
        throw std::invalid_argument(text);
    } else {
      std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoll(a, &used);
      if (used != a.size())
        throw std::invalid_argument(text);
      r.hi = std::stoll(b, &used);
      if (used != b.size())
        throw std::invalid_argument(text);
    }
    if (r.hi < r.lo)
      throw domain_error(std::string("empty range for ") + what + ": " + text);
    return r;
  } catch (const domain_error &) {
    throw;
  } catch (const std::exception &) {
    throw domain_error(std::string("malformed range for ") + what + ": '" + text + "' (expected A..B)");
  }
}

inline unsigned check_n(long long n) {
  if (n < 1 || n > kMaxDimension)
    throw domain_error("n must be in 1.." + std::to_string(kMaxDimension) + ", got " +
                       std::to_string(n));
  return static_cast<unsigned>(n);
}

inline BigInt check_d(const std::string &text) {
  BigInt d = parse_bigint(text);
  if (d < 1)
    throw domain_error("d must be >= 1, got " + text);
  return d;
}

inline std::string csv_cell(const Json &v) {
  if (v.is_number_integer())
    return v.dump();
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string quoted = "\"";
  for (char c : s)
    quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

inline std::string optional_text(const std::optional<BigInt> &d) { return d ? d->str() : ""; }

inline void render(const std::vector<ResultRecord> &records, const std::string &format,
                   std::ostream &out) {
  if (format == "json") {
    for (const auto &r : records)
      out << to_json(r).dump() << "\n";
  } else if (format == "csv") {
    out << "n,d,invariant,value\n";
    for (const auto &r : records)
      out << (r.n ? std::to_string(*r.n) : "") << "," << optional_text(r.d) << "," << r.invariant
          << "," << csv_cell(r.values) << "\n";
  } else {
    for (const auto &r : records)
      out << "n=" << (r.n ? std::to_string(*r.n) : "-") << " d=" << (r.d ? r.d->str() : "-")
          << " " << r.invariant << " " << r.values.dump() << "\n";
  }
}

// Record builders shared by the single-shot subcommands and `table`.

inline ResultRecord chi_record(unsigned n, const BigInt &d) {
  return {n, d, "chi", to_json_value(euler_polynomial(n)(d))};
}

inline ResultRecord chern_numbers_record(unsigned n, const BigInt &d,
                                         const std::optional<Partition> &only, bool literal) {
  Json values = Json::object();
  std::vector<Partition> parts = only ? std::vector<Partition>{*only} : partitions_of(n - 1);
  for (const auto &p : parts)
    values[p.key()] = to_json_value(literal ? corollary_product(n, d, p) : chern_number(n, d, p));
  return {n, d, literal ? "corollary_products" : "chern_numbers", values};
}

inline ResultRecord sections_record(unsigned n, const BigInt &d) {
  Json values = Json::array();
  for (const auto &x : section_euler_values(n, d))
    values.push_back(to_json_value(x));
  return {n, d, "sections", values};
}

inline ResultRecord hodge3_record(const BigInt &d) {
  HodgePair h = hodge_numbers_threefold(d);
  Json values = Json::object();
  values["h03"] = to_json_value(h.h03);
  values["h12"] = to_json_value(h.h12);
  return {4u, d, "hodge3", values};
}

inline ResultRecord chi_y_record(unsigned n, const BigInt &d) {
  if (n < 2)
    throw domain_error("chi-y needs n >= 2");
  return {n, d, "chi_y", to_json_value(chi_y(n, d).poly)};
}

inline std::string sub(unsigned n) { return "_" + std::to_string(n); }

using CacheKey = std::tuple<std::string, std::string, unsigned, std::string>;

inline CacheKey cache_key(const ResultRecord &r) {
  return {r.engine, r.invariant, r.n.value_or(0), optional_text(r.d)};
}

inline std::map<CacheKey, ResultRecord> load_cache(const std::filesystem::path &path) {
  std::map<CacheKey, ResultRecord> cache;
  std::ifstream in(path);
  if (!in)
    return cache;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    try {
      ResultRecord r = record_from_json(Json::parse(line));
      cache.emplace(cache_key(r), std::move(r));
    } catch (const std::exception &e) {
      throw domain_error("cache " + path.string() + " line " + std::to_string(lineno) +
                         " is malformed: " + e.what());
    }
  }
  return cache;
}

} // namespace detail

/// Parses argv-style arguments (without the program name) and runs one
/// subcommand. Results go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
               const CheckRegistry &checks = default_checks()) {
  CLI::App app{"Exact characteristic-class invariants of smooth hypersurfaces in P^n",
               "chern-calc"};
  app.require_subcommand(1);

  long long n = 0, k = 0;
  std::string d_text, partition_text, display = "ascending", format = "text";
  bool literal = false, symbolic = false;
  int at = 0;

  auto add_display = [&](CLI::App *c) {
    c->add_option("--display", display, "Polynomial term order")
        ->check(CLI::IsMember({"ascending", "paper"}));
  };
  auto add_format = [&](CLI::App *c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto *euler = app.add_subcommand("euler", "Euler polynomial E_n(t), optionally evaluated at d");
  euler->add_option("--n", n, "Ambient dimension")->required();
  auto *euler_d = euler->add_option("--d", d_text, "Hypersurface degree");
  add_display(euler);
  add_format(euler);

  auto *theta_cmd = app.add_subcommand("theta", "theta^k E_n(t)");
  theta_cmd->add_option("--n", n)->required();
  theta_cmd->add_option("--k", k)->required();
  add_display(theta_cmd);
  add_format(theta_cmd);

  auto *chern_poly_cmd = app.add_subcommand("chern-poly", "Pushforward Chern polynomial C_n(s,t)");
  chern_poly_cmd->add_option("--n", n)->required();
  add_display(chern_poly_cmd);
  add_format(chern_poly_cmd);

  auto *numbers = app.add_subcommand("chern-numbers", "Chern numbers of a degree-d hypersurface");
  numbers->add_option("--n", n)->required();
  numbers->add_option("--d", d_text)->required();
  auto *numbers_partition = numbers->add_option("--partition", partition_text, "j1,j2,...");
  numbers->add_flag("--literal", literal, "Print the unnormalized product of pushforwards");
  add_format(numbers);

  auto *sections = app.add_subcommand("sections", "Euler characteristics of hyperplane sections");
  sections->add_option("--n", n)->required();
  auto *sections_d = sections->add_option("--d", d_text);
  add_display(sections);
  add_format(sections);

  auto *hodge = app.add_subcommand("hodge3", "h^{0,3} and h^{1,2} of a degree-d threefold in P^4");
  hodge->add_option("--d", d_text)->required();
  add_format(hodge);

  auto *chiy = app.add_subcommand("chi-y", "chi_y genus via the Hirzebruch class");
  chiy->add_option("--n", n)->required();
  chiy->add_option("--d", d_text)->required();
  auto *chiy_at = chiy->add_option("--at", at, "Evaluate at y = -1, 0 or 1")
                      ->check(CLI::IsMember({-1, 0, 1}));
  chiy->add_flag("--symbolic", symbolic, "Print the polynomial in y");
  add_display(chiy);
  add_format(chiy);

  bool fulton = false, oracle = false, all = false;
  unsigned n_max = 8, d_max = 10;
  auto *verify = app.add_subcommand("verify", "Run exhaustive identity sweeps");
  verify->add_flag("--fulton", fulton, "Fulton-class identity and its specialization");
  verify->add_flag("--oracle", oracle, "Oracle sweeps (adjunction, sections, chi_y)");
  verify->add_flag("--all", all, "Everything");
  verify->add_option("--n-max", n_max)->check(CLI::Range(1u, kMaxDimension));
  verify->add_option("--d-max", d_max)->check(CLI::Range(1u, 1000u));

  std::string invariant, n_range, d_range, out_path, cache_path;
  auto *table = app.add_subcommand("table", "Batch table over ranges of n and d");
  table->add_option("--invariant", invariant)
      ->required()
      ->check(CLI::IsMember({"chi", "chern-numbers", "sections", "hodge3", "chi-y"}));
  table->add_option("--n", n_range, "A..B")->required();
  table->add_option("--d", d_range, "C..E")->required();
  add_format(table);
  table->add_option("--out", out_path, "Write the table to this file");
  table->add_option("--cache", cache_path, "JSON-lines cache file");

  std::vector<std::string> storage{"chern-calc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : storage)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  bool descending = display == "paper";
  std::ostringstream text;
  std::vector<ResultRecord> records;

  try {
    if (euler->parsed()) {
      unsigned nn = detail::check_n(n);
      EulerPolynomial e = euler_polynomial(nn);
      ResultRecord r{nn, std::nullopt, "euler_polynomial", Json::object()};
      r.values["poly"] = to_json_value(e.poly);
      text << "E" << detail::sub(nn) << "(t) = " << e.poly.to_string(descending) << "\n";
      if (*euler_d) {
        BigInt d = detail::check_d(d_text);
        r.d = d;
        r.values["value"] = to_json_value(e(d));
        text << "E" << detail::sub(nn) << "(" << d << ") = " << e(d) << "\n";
      }
      records.push_back(std::move(r));
    } else if (theta_cmd->parsed()) {
      unsigned nn = detail::check_n(n);
      if (k < 0 || k > nn)
        throw domain_error("k must be in 0..n");
      IntPoly p = theta_euler(nn, static_cast<unsigned>(k));
      ResultRecord r{nn, std::nullopt, "theta", Json::object()};
      r.values["k"] = k;
      r.values["poly"] = to_json_value(p);
      text << "theta^" << k << " E" << detail::sub(nn) << "(t) = " << p.to_string(descending) << "\n";
      records.push_back(std::move(r));
    } else if (chern_poly_cmd->parsed()) {
      unsigned nn = detail::check_n(n);
      BivariatePolynomial c = chern_poly(nn);
      records.push_back({nn, std::nullopt, "chern_poly", to_json_value(c)});
      text << "C" << detail::sub(nn) << "(s,t) = " << c.to_string(descending) << "\n";
    } else if (numbers->parsed()) {
      unsigned nn = detail::check_n(n);
      BigInt d = detail::check_d(d_text);
      std::optional<Partition> only;
      if (*numbers_partition) {
        only = Partition::parse(partition_text);
        if (only->sum() != nn - 1)
          throw domain_error("partition " + only->key() + " does not sum to n-1 = " +
                             std::to_string(nn - 1));
      }
      ResultRecord r = detail::chern_numbers_record(nn, d, only, literal);
      for (const auto &[key, value] : r.values.items())
        text << key << " " << value.dump() << "\n";
      records.push_back(std::move(r));
    } else if (sections->parsed()) {
      unsigned nn = detail::check_n(n);
      if (*sections_d) {
        ResultRecord r = detail::sections_record(nn, detail::check_d(d_text));
        for (std::size_t i = 0; i < r.values.size(); ++i)
          text << "r=" << i << " " << r.values[i].dump() << "\n";
        records.push_back(std::move(r));
      } else {
        BivariatePolynomial e = section_euler_poly(nn);
        records.push_back({nn, std::nullopt, "section_euler_poly", to_json_value(e)});
        text << "e" << detail::sub(nn) << "(s,t) = " << e.to_string(descending) << "\n";
      }
    } else if (hodge->parsed()) {
      ResultRecord r = detail::hodge3_record(detail::check_d(d_text));
      text << "h03 = " << r.values["h03"].dump() << "\nh12 = " << r.values["h12"].dump() << "\n";
      records.push_back(std::move(r));
    } else if (chiy->parsed()) {
      unsigned nn = detail::check_n(n);
      BigInt d = detail::check_d(d_text);
      if (nn < 2)
        throw domain_error("chi-y needs n >= 2");
      ChiYGenus g = chi_y(nn, d);
      ResultRecord r{nn, d, "chi_y", Json::object()};
      r.values["poly"] = to_json_value(g.poly);
      if (!*chiy_at || symbolic)
        text << "chi_y = " << g.poly.to_string(descending) << "\n";
      if (*chiy_at) {
        r.values["at"] = at;
        r.values["value"] = to_json_value(g.at(at));
        text << "chi_y(" << at << ") = " << g.at(at) << "\n";
      }
      records.push_back(std::move(r));
    } else if (verify->parsed()) {
      if (!fulton && !oracle && !all)
        throw domain_error("verify needs --fulton, --oracle or --all");
      SweepBounds bounds{n_max, d_max};
      bool failed = false;
      for (const auto &check : checks) {
        if (!all && !(fulton && check.group == "fulton") && !(oracle && check.group == "oracle"))
          continue;
        SweepResult s = check.run(bounds);
        out << check.name << ": " << (s.ok() ? "OK" : "FAIL") << " (" << s.passed << "/" << s.total
            << ")";
        if (!s.ok())
          out << " first mismatch at " << s.first_failure;
        out << "\n";
        failed = failed || !s.ok();
      }
      return failed ? kVerificationFailure : kSuccess;
    } else if (table->parsed()) {
      detail::Range nr = detail::parse_range(n_range, "--n");
      detail::Range dr = detail::parse_range(d_range, "--d");
      detail::check_n(nr.lo);
      detail::check_n(nr.hi);
      if (dr.lo < 1)
        throw domain_error("d must be >= 1");
      if (invariant == "hodge3" && (nr.lo != 4 || nr.hi != 4))
        throw domain_error("hodge3 is only defined for n = 4");
      if (invariant == "chi-y" && nr.lo < 2)
        throw domain_error("chi-y needs n >= 2");

      std::filesystem::path cache_file = cache_path;
      if (cache_file.empty())
        if (const char *env = std::getenv(kCacheEnv))
          cache_file = env;
      std::map<detail::CacheKey, ResultRecord> cache;
      if (!cache_file.empty())
        cache = detail::load_cache(cache_file);

      std::vector<ResultRecord> fresh;
      for (long long nn = nr.lo; nn <= nr.hi; ++nn)
        for (long long dd = dr.lo; dd <= dr.hi; ++dd) {
          unsigned nu = static_cast<unsigned>(nn);
          BigInt d(dd);
          std::string name = invariant == "chern-numbers" ? "chern_numbers"
                             : invariant == "chi-y"       ? "chi_y"
                                                          : invariant;
          auto hit = cache.find({kEngineVersion, name, nu, d.str()});
          if (hit != cache.end()) {
            records.push_back(hit->second);
            continue;
          }
          ResultRecord r = invariant == "chi"             ? detail::chi_record(nu, d)
                           : invariant == "chern-numbers" ? detail::chern_numbers_record(nu, d, {}, false)
                           : invariant == "sections"      ? detail::sections_record(nu, d)
                           : invariant == "hodge3"        ? detail::hodge3_record(d)
                                                          : detail::chi_y_record(nu, d);
          records.push_back(r);
          fresh.push_back(std::move(r));
        }

      std::ostringstream rendered;
      detail::render(records, format, rendered);
      if (out_path.empty()) {
        out << rendered.str();
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
          throw domain_error("cannot open output file " + out_path);
        f << rendered.str();
      }
      if (!cache_file.empty() && !fresh.empty()) {
        std::ofstream c(cache_file, std::ios::app | std::ios::binary);
        if (!c)
          throw domain_error("cannot open cache file " + cache_file.string());
        for (const auto &r : fresh)
          c << to_json(r).dump() << "\n";
      }
      return kSuccess;
    }
  } catch (const domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const internal_error &e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }

  if (format == "text")
    out << text.str();
  else
    detail::render(records, format, out);
  return kSuccess;
}

} // namespace chern::cli
