// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "chern/chern.hpp"
#include "chern/cli.hpp"
#include "test_support.hpp"

using namespace chern;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void expect(bool good, const std::string &what) {
    if (!good && ok) {
      ok = false;
      detail = what;
    }
  }
};

IntPoly t_poly(std::vector<long long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return IntPoly(b, "t");
}

BivariatePolynomial printed_e4() {
  return BivariatePolynomial::from_s_coefficients({
      t_poly({0, 10, -10, 5, -1}),
      t_poly({0, -6, 4, -1}),
      t_poly({0, 3, -1}),
      t_poly({0, -1}),
  });
}

// The section construction applied to an arbitrary list of s-coefficients of
// the dual polynomial, so a candidate theta E_4 can be tried in place of the
// computed one.
std::optional<BivariatePolynomial> sections_from_dual(const std::vector<IntPoly> &dual_coeffs) {
  using SPoly = DensePolynomial<IntPoly>;
  SPoly dual = BivariatePolynomial::from_s_coefficients(dual_coeffs).nested();
  SPoly numerator = dual.compose(SPoly({IntPoly(-1), IntPoly(-1)}, "s")).shift(1) +
                    SPoly::constant(dual.coefficient(0), "s");
  try {
    return BivariatePolynomial::from_nested(poly_divide_exact(numerator, SPoly({IntPoly(1), IntPoly(1)}, "s")));
  } catch (const domain_error &) {
    return std::nullopt;
  }
}

Criterion ac1() {
  Criterion c;
  c.expect(euler_polynomial(4).poly == t_poly({0, 10, -10, 5, -1}), "E_4");
  c.expect(theta_euler(4, 2) == t_poly({0, 5, -1}), "theta^2 E_4");
  c.expect(section_euler_poly(4) == printed_e4(), "e_4 = " + section_euler_poly(4).to_string());
  return c;
}

Criterion ac2() {
  Criterion c;
  IntPoly theta_e4 = theta_euler(4, 1);
  IntPoly printed_variant = t_poly({0, 10, -5, -1});
  c.expect(theta_e4 == t_poly({0, 10, -5, 1}), "theta E_4 = " + theta_e4.to_string());
  c.expect(section_euler_poly(4) == printed_e4(), "e_4 expansion");
  c.expect(chern_number(4, 1, Partition({1, 2})) == 24, "c1c2(P^3)");

  // The chern number [1,2] at d = 1 is (theta^2 E_4)(1) * (theta E_4)(1).
  BigInt t2 = theta_euler(4, 2).evaluate(BigInt(1));
  c.expect(t2 * theta_e4.evaluate(BigInt(1)) == 24, "definition gives 24");
  c.expect(t2 * printed_variant.evaluate(BigInt(1)) == 16, "printed variant gives 16");

  std::vector<IntPoly> dual{euler_polynomial(4).poly, theta_e4, theta_euler(4, 2), theta_euler(4, 3)};
  c.expect(sections_from_dual(dual) == printed_e4(), "definition reproduces e_4");
  dual[1] = printed_variant;
  auto variant = sections_from_dual(dual);
  c.expect(!variant || *variant != printed_e4(), "printed variant also reproduces e_4");
  return c;
}

Criterion ac3() {
  Criterion c;
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned d = 1; d <= 10; ++d) {
      ChernData oracle = chern_oracle(n, d);
      auto by_hand = chern::testing::adjunction_gammas(n, d);
      for (unsigned k = 0; k < n; ++k) {
        BigInt lhs = theta_euler(n, n - (k + 1)).evaluate(BigInt(d));
        std::string at = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k);
        c.expect(lhs == oracle.gamma.at(k) * d, at);
        c.expect(lhs == BigInt(by_hand.at(k)) * d, at + " (hand expansion)");
      }
    }
  return c;
}

Criterion ac4() {
  Criterion c;
  SweepResult s = sweep_chern_normalization({8, 10});
  c.expect(s.ok() && s.total == 80, s.first_failure);
  return c;
}

Criterion ac5() {
  Criterion c;
  c.expect(euler_polynomial(2)(3) == 0, "E_2(3)");
  c.expect(euler_polynomial(3)(3) == 9, "E_3(3)");
  c.expect(euler_polynomial(3)(4) == 24, "E_3(4)");
  c.expect(euler_polynomial(4)(5) == -200, "E_4(5)");
  const std::vector<std::pair<int, int>> hodge{{0, 0}, {0, 0}, {0, 5}, {0, 30}, {1, 101}};
  for (int d = 1; d <= 5; ++d) {
    HodgePair h = hodge_numbers_threefold(d);
    c.expect(h.h03 == hodge[d - 1].first && h.h12 == hodge[d - 1].second,
             "hodge d=" + std::to_string(d));
  }
  c.expect(section_euler_values(4, 5) == std::vector<BigInt>{-200, 55, -10, 5}, "sections(4,5)");
  for (int d = 1; d <= 10; ++d)
    c.expect(euler_polynomial(3)(d) == chern::testing::euler_value(3, d), "E_3 direct sum");
  return c;
}

Criterion ac6() {
  Criterion c;
  for (unsigned n = 1; n <= 8; ++n)
    c.expect(verify_identity(n), "verify_identity n=" + std::to_string(n));
  SweepResult s = sweep_fulton_specialization({8, 10});
  c.expect(s.ok() && s.total == 80, s.first_failure);
  return c;
}

Criterion ac7() {
  Criterion c;
  for (unsigned n = 2; n <= 10; ++n) {
    BivariatePolynomial e = section_euler_poly(n);
    for (unsigned r = 1; r < n; ++r) {
      IntPoly coeff = e.s_coefficient(r);
      c.expect((r % 2 == 0 ? coeff : -coeff) == euler_polynomial(n - r).poly,
               "n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return c;
}

Criterion ac8() {
  Criterion c;
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned d = 1; d <= 8; ++d) {
      std::string at = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      ChiYGenus g = chi_y(n, d);
      c.expect(g == chi_y_oracle(n, d), at + " oracle");
      c.expect(g.at(-1) == euler_polynomial(n)(d), at + " chi_-1");
      unsigned dim = n - 1;
      for (unsigned p = 0; p <= dim; ++p) {
        BigInt a = g.poly.coefficient(p), b = g.poly.coefficient(dim - p);
        c.expect(a == (dim % 2 == 0 ? b : BigInt(-b)), at + " Serre symmetry");
      }
      if (n == 3) {
        auto surface = chern::testing::surface_chi_y(d);
        for (unsigned p = 0; p < 3; ++p)
          c.expect(g.poly.coefficient(p) == surface[p], at + " surface Hodge numbers");
      }
    }
  ChiYGenus k3 = chi_y(3, 4);
  c.expect(k3.at(-1) == 24 && k3.at(0) == 2 && k3.at(1) == -16, "K3 triple");
  return c;
}

Criterion ac9() {
  Criterion c;
  using QSeries = TruncatedSeries<ExactRational>;
  using chern::testing::random_rational;
  using chern::testing::random_series;
  std::mt19937 rng(9001);
  const QSeries one({ExactRational(1)}, 8);
  for (int i = 0; i < 50; ++i) {
    QSeries g = random_series(rng, 8, true);
    c.expect(series_exp(series_log(one + g)) == one + g, "exp(log(1+g))");
    c.expect(series_log(series_exp(g)) == g, "log(exp(g))");
  }
  for (int i = 0; i < 50; ++i) {
    QSeries f = random_series(rng, 8), g = random_series(rng, 8);
    c.expect(series_derivative(f * g) ==
                 series_derivative(f) * g.truncate(7) + f.truncate(7) * series_derivative(g),
             "Leibniz");
  }
  for (int i = 0; i < 50; ++i) {
    QSeries f = random_series(rng, 6), g = random_series(rng, 6), h = random_series(rng, 6);
    ExactRational a = random_rational(rng), b = random_rational(rng);
    c.expect(hadamard(a * f + b * g, h) == a * hadamard(f, h) + b * hadamard(g, h), "Hadamard");
  }
  for (int i = 0; i < 50; ++i) {
    QSeries f = random_series(rng, 8), g = random_series(rng, 8);
    if (g[0].is_zero())
      g = g + one;
    c.expect(series_div(f, g) * g == f, "series division");
  }
  IntPoly s_plus_1({1, 1}, "s");
  for (int i = 0; i < 50; ++i) {
    IntPoly p = chern::testing::random_int_poly(rng, 8);
    IntPoly q = chern::testing::random_int_poly(rng, 3);
    if (q.is_zero())
      q = s_plus_1;
    c.expect(poly_divide_exact(q * p, q) == p, "exact polynomial division");
  }
  return c;
}

int cli_run(const std::vector<std::string> &args, std::string *out = nullptr,
            const cli::CheckRegistry &checks = cli::default_checks()) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e, checks);
  if (out)
    *out = o.str();
  return code;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Criterion ac10() {
  Criterion c;
  fs::path dir = fs::temp_directory_path() / "chern_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  for (std::string fmt : {"text", "json", "csv"}) {
    std::vector<std::string> args{"table", "--invariant", "chi-y", "--n", "2..5", "--d", "1..4",
                                  "--format", fmt};
    std::string a, b;
    c.expect(cli_run(args, &a) == 0 && cli_run(args, &b) == 0 && a == b, "determinism " + fmt);
  }

  std::string json;
  cli_run({"chern-numbers", "--n", "5", "--d", "7", "--format", "json"}, &json);
  cli::ResultRecord rec = cli::record_from_json(Json::parse(json));
  c.expect(cli::to_json(rec).dump() + "\n" == json, "JSON round trip");
  c.expect(rec == cli::detail::chern_numbers_record(5, 7, std::nullopt, false), "JSON record equality");

  fs::path cache = dir / "cache.jsonl";
  std::vector<std::string> table{"table", "--invariant", "sections", "--n", "2..4", "--d", "1..3",
                                 "--cache", cache.string()};
  c.expect(cli_run(table) == 0, "table with cache");
  std::string first = slurp(cache);
  c.expect(cli_run(table) == 0 && slurp(cache) == first, "cache idempotence");

  c.expect(cli_run({"euler", "--n", "4"}) == 0, "exit 0");
  c.expect(cli_run({"frobnicate"}) == 2, "exit 2 unknown subcommand");
  c.expect(cli_run({"chern-numbers", "--n", "4", "--d", "5", "--partition", "1,,2"}) == 2,
           "exit 2 malformed partition");
  c.expect(cli_run({"euler", "--n", "0"}) == 2, "exit 2 n out of range");
  fs::path out = dir / "empty.csv";
  c.expect(cli_run({"table", "--invariant", "chi", "--n", "3..2", "--d", "1..2", "--out", out.string()}) == 2 &&
               !fs::exists(out),
           "exit 2 empty range");
  cli::CheckRegistry failing{{"oracle", "always-fails", [](const SweepBounds &) {
                                SweepResult s;
                                s.record(false, "injected");
                                return s;
                              }}};
  c.expect(cli_run({"verify", "--oracle"}, nullptr, failing) == 1, "exit 1 verification failure");
  c.expect(cli_run({"verify", "--all"}) == 0, "verify --all");

  fs::remove_all(dir);
  return c;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"AC1 paper values: E_4, theta^2 E_4, e_4", ac1},
      {"AC2 theta E_4 = 10t - 5t^2 + t^3 with e_4 and c1c2(P^3) = 24", ac2},
      {"AC3 theta ladder vs adjunction oracle, n<=8, d<=10", ac3},
      {"AC4 chern number normalization, n<=8, d<=10", ac4},
      {"AC5 classical anchors: Euler, Hodge, sections", ac5},
      {"AC6 Fulton identity n<=8 and specialization d<=10", ac6},
      {"AC7 section identity, 2<=n<=10", ac7},
      {"AC8 chi_y Hirzebruch path vs oracle, K3, Serre symmetry", ac8},
      {"AC9 randomized kernel properties", ac9},
      {"AC10 CLI determinism, JSON, cache, exit codes", ac10},
  };
  int failures = 0;
  for (const auto &[name, check] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Criterion result;
    try {
      result = check();
    } catch (const std::exception &e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << name;
    if (!result.ok)
      std::cout << " -- " << result.detail;
    std::printf(" (%.0f ms)\n", ms);
    std::cout.flush();
    failures += result.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
