#include "fme/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <optional>

#include "fme/bench.hpp"
#include "fme/errors.hpp"
#include "fme/fit.hpp"
#include "fme/inverse_pairs.hpp"
#include "fme/matrix.hpp"
#include "fme/modexp.hpp"
#include "fme/numtheory.hpp"
#include "fme/tuner.hpp"

namespace fme {

namespace {

struct GlobalFlags {
  bool trust_factors = false;
  bool quiet = false;
  std::uint64_t seed = 1;
};

std::vector<mpz_class> parse_integer_list(std::string_view text) {
  std::vector<mpz_class> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_integer(text.substr(pos, comma == text.npos ? text.npos : comma - pos)));
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint32_t parse_small(std::string_view text, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

// --t given: validated verbatim; omitted: the tuner picks with default weights.
ParameterVector choose_parameters(const FactoredModulus& fm, const std::string& t_text) {
  if (!t_text.empty()) return ParameterVector(fm, parse_parameter_list(t_text));
  return tune_parameters(fm).params;
}

std::string format_steps(const StepCount& s) {
  return "steps: mul=" + std::to_string(s.multiplications) + " div=" +
         std::to_string(s.divisions) + " inv=" + std::to_string(s.inversions);
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast modular exponentiation with a factored modulus"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  app.add_flag("--trust-factors", global.trust_factors, "Skip primality checks on factors");
  app.add_flag("-q,--quiet", global.quiet, "Suppress informational diagnostics");
  app.add_option("--seed", global.seed, "Seed for randomized sweeps");

  std::optional<int> status;
  auto run = [&](auto&& body) {
    return [&status, body = std::forward<decltype(body)>(body)] { status = body(); };
  };

  // modexp
  auto* modexp = app.add_subcommand("modexp", "Compute a^n mod m");
  std::string mx_base, mx_exp, mx_factors, mx_t, mx_mode = "recursive";
  bool mx_count = false, mx_baseline = false, mx_paranoid = false;
  modexp->add_option("--base", mx_base, "Base a (decimal)")->required();
  modexp->add_option("--exp", mx_exp, "Exponent n (decimal, unbounded)")->required();
  modexp->add_option("--factors", mx_factors, "Modulus factorization, e.g. 2^3*5*11^4")->required();
  modexp->add_option("--t", mx_t, "Parameters t1,t2,... (default: tuned)");
  modexp->add_option("--mode", mx_mode, "Inverse pairs: recursive|direct");
  modexp->add_flag("--count-steps", mx_count, "Print the step counts");
  modexp->add_flag("--baseline", mx_baseline, "Use plain repeated squaring");
  modexp->add_flag("--paranoid", mx_paranoid,
                   "Use direct inverses and cross-check against repeated squaring");
  modexp->callback(run([&]() -> int {
    const FactoredModulus fm = parse_factored_modulus(mx_factors, global.trust_factors);
    const Natural a = parse_natural(mx_base);
    const Natural n = parse_natural(mx_exp);
    InverseMode mode = parse_inverse_mode(mx_mode);
    if (mx_paranoid) mode = InverseMode::kDirect;
    CountedResidue result;
    if (mx_baseline) {
      result.residue = mod_exp_baseline(a, n, fm.value(), &result.steps);
    } else {
      const ParameterVector tv = choose_parameters(fm, mx_t);
      result = fast_mod_exp_counted(a, n, fm, tv, mode);
      if (mx_paranoid) {
        const Natural expected = mod_exp_baseline(a, n, fm.value());
        if (expected != result.residue) {
          throw ResultMismatch("fast path " + to_decimal(result.residue) +
                               " disagrees with repeated squaring " + to_decimal(expected));
        }
      }
    }
    out << to_decimal(result.residue) << '\n';
    if (mx_count) out << format_steps(result.steps) << '\n';
    return kExitOk;
  }));

  // inverse-pairs
  auto* pairs = app.add_subcommand("inverse-pairs", "Print inverse pairs 0..l as 'i u v'");
  std::string ip_factors, ip_mode = "recursive";
  std::uint64_t ip_upto = 1;
  pairs->add_option("--factors", ip_factors, "Modulus factorization")->required();
  pairs->add_option("--upto", ip_upto, "Largest index l (>= 1)")->required();
  pairs->add_option("--mode", ip_mode, "recursive|direct");
  pairs->callback(run([&]() -> int {
    const FactoredModulus fm = parse_factored_modulus(ip_factors, global.trust_factors);
    const InverseMode mode = parse_inverse_mode(ip_mode);
    if (ip_upto < 1) throw ParameterOutOfRange("--upto must be at least 1");
    if (from_u64(ip_upto) >= fm.value()) {
      throw ParameterOutOfRange("--upto must be below the modulus");
    }
    const InversePairTable table = inverse_pair_table(ip_upto, fm.value(), fm.primes(), mode);
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << i << ' ' << to_decimal(table[i].u) << ' ' << table[i].v << '\n';
    }
    return kExitOk;
  }));

  // matexp
  auto* matexp = app.add_subcommand("matexp", "Compute A^n for A in GL_d(Z/mZ)");
  std::string me_factors, me_matrix, me_exp, me_t;
  matexp->add_option("--factors", me_factors, "Modulus factorization")->required();
  matexp->add_option("--matrix", me_matrix, "Rows separated by ';', entries by ','")->required();
  matexp->add_option("--exp", me_exp, "Exponent n")->required();
  matexp->add_option("--t", me_t, "Parameters t1,t2,... (default: tuned)");
  matexp->callback(run([&]() -> int {
    const FactoredModulus fm = parse_factored_modulus(me_factors, global.trust_factors);
    const MatrixModM a = parse_matrix(me_matrix, fm.value());
    const Natural n = parse_natural(me_exp);
    out << mat_fast_exp(a, n, fm, choose_parameters(fm, me_t)).to_string() << '\n';
    return kExitOk;
  }));

  // recurrence
  auto* rec = app.add_subcommand("recurrence", "Compute u_N of a linear recurrence mod m");
  std::string rc_coeffs, rc_init, rc_index, rc_factors, rc_t;
  rec->add_option("--coeffs", rc_coeffs, "c_{d-1},...,c_0 (use --coeffs=-1,2 for negatives)")
      ->required();
  rec->add_option("--init", rc_init, "u_0,...,u_{d-1}")->required();
  rec->add_option("--index", rc_index, "N")->required();
  rec->add_option("--factors", rc_factors, "Modulus factorization")->required();
  rec->add_option("--t", rc_t, "Parameters t1,t2,... (default: tuned)");
  rec->callback(run([&]() -> int {
    const FactoredModulus fm = parse_factored_modulus(rc_factors, global.trust_factors);
    RecurrenceSpec spec{parse_integer_list(rc_coeffs), parse_integer_list(rc_init)};
    const Natural index = parse_natural(rc_index);
    out << to_decimal(recurrence_term(spec, index, fm, choose_parameters(fm, rc_t))) << '\n';
    return kExitOk;
  }));

  // gauss
  auto* gauss = app.add_subcommand("gauss", "Compute (re + im*i)^n in Z[i]/p^k");
  std::string gs_re, gs_im, gs_exp, gs_p, gs_k;
  gauss->add_option("--re", gs_re, "Real part")->required();
  gauss->add_option("--im", gs_im, "Imaginary part")->required();
  gauss->add_option("--exp", gs_exp, "Exponent n")->required();
  gauss->add_option("--p", gs_p, "Prime p = 3 (mod 4)")->required();
  gauss->add_option("--k", gs_k, "Power k >= 1")->required();
  gauss->callback(run([&]() -> int {
    GaussianResidue z{parse_integer(gs_re), parse_integer(gs_im)};
    const Natural n = parse_natural(gs_exp);
    const Natural p = parse_natural(gs_p);
    const std::uint32_t k = parse_small(gs_k, "k");
    out << to_string(gaussian_fast_exp(z, n, p, k)) << '\n';
    return kExitOk;
  }));

  // tune
  auto* tune = app.add_subcommand("tune", "Choose the parameter vector t");
  std::string tn_factors, tn_weights;
  bool tn_calibrate = false;
  tune->add_option("--factors", tn_factors, "Modulus factorization")->required();
  tune->add_flag("--calibrate", tn_calibrate, "Fit the cost weights by timing this machine");
  tune->add_option("--weights", tn_weights, "alpha,beta,overhead (default 1,1.5,0)");
  tune->callback(run([&]() -> int {
    const FactoredModulus fm = parse_factored_modulus(tn_factors, global.trust_factors);
    CostWeights w;
    if (!tn_weights.empty()) w = parse_weights(tn_weights);
    if (tn_calibrate) w = calibrate_weights(fm);
    const TuneResult r = tune_parameters(fm, w);
    out << r.params.to_string() << '\n';
    out << "cost: " << format_real(r.cost) << '\n';
    out << "series-length: " << r.target_length << '\n';
    if (tn_calibrate) {
      out << "weights: " << format_real(w.alpha) << ',' << format_real(w.beta) << ','
          << format_real(w.overhead) << '\n';
    }
    return kExitOk;
  }));

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark sweeps written as CSV");
  bench->require_subcommand(1);
  std::string bn_out;
  std::uint64_t bn_iterations = 20;
  int bn_repeats = 5;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", bn_out, "CSV output path")->required();
    sub->add_option("--iterations", bn_iterations, "Number of sweep iterations");
    sub->add_option("--repeats", bn_repeats, "Timed repeats per point (>= 3)");
  };
  auto make_config = [&] {
    SweepConfig config;
    config.seed = global.seed;
    config.iterations = bn_iterations;
    config.repeats = bn_repeats;
    return config;
  };
  auto finish = [&](const std::vector<BenchPoint>& points) {
    write_csv(points, bn_out);
    out << points.size() << '\n';
    if (!global.quiet) err << "wrote " << points.size() << " points to " << bn_out << '\n';
  };

  auto* sp = bench->add_subcommand("sweep-primes", "Ratio sweep over prime powers p^k, k ~ ln p");
  add_common(sp);
  std::string sp_lo = "10000", sp_hi = "1000000";
  sp->add_option("--p-min", sp_lo, "Smallest prime");
  sp->add_option("--p-max", sp_hi, "Largest prime");
  sp->callback(run([&]() -> int {
    finish(sweep_primes(parse_natural(sp_lo), parse_natural(sp_hi), make_config()));
    return kExitOk;
  }));

  auto* st = bench->add_subcommand("sweep-t", "Scalar t sweep on a fixed instance");
  add_common(st);
  std::string st_p = "101", st_a = "13", st_n;
  std::uint32_t st_e = 200, st_tmax = 50;
  st->add_option("--p", st_p, "Prime (default 101)");
  st->add_option("--e", st_e, "Exponent of p (default 200)");
  st->add_option("--a", st_a, "Base (default 13)");
  st->add_option("--n", st_n, "Exponent n (default floor(p^e / 3))");
  st->add_option("--t-max", st_tmax, "Sweep t = 1..t-max (default 50)");
  st->callback(run([&]() -> int {
    const Natural p = parse_natural(st_p);
    Natural n;
    if (st_n.empty()) {
      mpz_pow_ui(n.get_mpz_t(), p.get_mpz_t(), st_e);
      n /= 3;
    } else {
      n = parse_natural(st_n);
    }
    const auto points = sweep_t(p, st_e, parse_natural(st_a), n, 1, st_tmax, make_config());
    finish(points);
    std::vector<Point2> xy;
    for (const auto& pt : points) xy.push_back({double(pt.t), double(pt.steps_fast)});
    if (xy.size() >= 2) {
      const FitResult fit = fit_t_curve(xy);
      out << "fit: a=" << format_real(fit.coefficients[0]) << " b="
          << format_real(fit.coefficients[1]) << " r2=" << format_real(fit.r_squared) << '\n';
    }
    return kExitOk;
  }));

  auto* sq = bench->add_subcommand("sweep-sqrt", "m = P(n)^n family, P(n) first prime > 10^n");
  add_common(sq);
  std::uint32_t sq_lo = 2, sq_hi = 20;
  sq->add_option("--n-min", sq_lo, "Smallest n (default 2)");
  sq->add_option("--n-max", sq_hi, "Largest n (default 20)");
  sq->callback(run([&]() -> int {
    const auto points = sweep_sqrt_family(sq_lo, sq_hi, make_config());
    finish(points);
    std::vector<Point2> xy;
    for (const auto& pt : points) xy.push_back({pt.log10_m, pt.step_ratio()});
    if (xy.size() >= 2) {
      const FitResult fit = fit_sqrt_curve(xy);
      out << "fit: c=" << format_real(fit.coefficients[0])
          << " r2=" << format_real(fit.r_squared) << '\n';
    }
    return kExitOk;
  }));

  // stats
  auto* stats = app.add_subcommand("stats", "Number-theoretic statistics");
  stats->require_subcommand(1);
  auto* niven = stats->add_subcommand("niven", "Average of H(k) for k <= limit");
  std::uint64_t nv_limit = 0;
  niven->add_option("--limit", nv_limit, "Upper limit (cap from FME_SIEVE_CAP, default 10^7)")
      ->required();
  niven->callback(run([&]() -> int {
    out << format_real(niven_average(nv_limit, sieve_cap_from_env())) << '\n';
    return kExitOk;
  }));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.category()) {
      case ErrorCategory::kDomain:
        return kExitDomain;
      case ErrorCategory::kValidation:
        return kExitValidation;
      case ErrorCategory::kResource:
        return kExitResource;
    }
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return status.value_or(kExitOk);
}

}  // namespace fme
