#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "report_io.hpp"

namespace padic::cli {

namespace {

std::string fmt_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string im = fmt_double(z.imag());
  if (im[0] != '-') im = "+" + im;
  return fmt_double(z.real()) + im + "i";
}

std::string fmt_rational(const Rational& q) { return q.get_str() + " (" + fmt_double(q.get_d()) + ")"; }

/// Thrown for verify/erdelyi mismatches after the report is written.
struct AssertionFailure {
  std::string what;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string params;  // echoed with any error
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("output.path", "cannot write '" + path + "'");
  f << text;
}

std::string config_params(const RunConfig& cfg) {
  std::ostringstream os;
  os << "p=" << cfg.prime.value();
  if (cfg.distribution) os << " f=" << cfg.distribution->describe();
  if (cfg.test_function) os << " phi=D^" << cfg.test_function->l() << "_" << cfg.test_function->N();
  return os.str();
}

const QahDistribution& need_distribution(const RunConfig& cfg) {
  if (!cfg.distribution) throw ConfigError("distribution", "missing required field");
  return *cfg.distribution;
}

const TestFunction& need_test_function(const RunConfig& cfg) {
  if (!cfg.test_function) throw ConfigError("test_function", "missing required field");
  return *cfg.test_function;
}

void emit_report(const StabilizationReport& r, const RunConfig& cfg, const std::string& out_path,
                 const std::string& format, Context& ctx) {
  const std::string fmt = format.empty() ? cfg.output.format : format;
  const std::string path = out_path.empty() ? cfg.output.path : out_path;
  if (fmt != "csv" && fmt != "json") throw ConfigError("--format", "expected csv or json");
  write_output(fmt == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n", path, ctx.out);
  if (!r.passed()) {
    std::int64_t bad = 0;
    for (const auto& row : r.rows) {
      if (row.asserted && !row.stabilized) ++bad;
    }
    throw AssertionFailure{std::to_string(bad) + " asserted row(s) not stabilized (" + r.description + ")"};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic singular Fourier integrals and stabilized asymptotics", "padic"};
  app.require_subcommand(1);
  Context ctx{out, err, ""};
  std::function<void()> action;

  // gamma
  std::int64_t g_p = 2;
  std::string g_alpha;
  int g_order = 0;
  std::string g_char = "trivial";
  auto* gamma = app.add_subcommand("gamma", "Gamma_p(alpha) or Gamma_p(pi_alpha) and its alpha-derivatives");
  gamma->add_option("--p", g_p, "prime")->required();
  gamma->add_option("--alpha", g_alpha, "complex alpha, e.g. 2 or -0.7+0.3i")->required();
  gamma->add_option("--order", g_order, "highest derivative")->check(CLI::Range(0, 16));
  gamma->add_option("--character", g_char, "trivial or quadratic")->check(CLI::IsMember({"trivial", "quadratic"}));
  gamma->callback([&] {
    action = [&] {
      ctx.params = "p=" + std::to_string(g_p) + " alpha=" + g_alpha + " character=" + g_char;
      const Prime p = [&] {
        try {
          return Prime(g_p);
        } catch (const Error& e) {
          throw ConfigError("--p", e.what());
        }
      }();
      std::complex<double> alpha;
      try {
        alpha = parse_complex(g_alpha);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("--alpha", e.what());
      }
      Jet jet(0);
      if (g_char == "trivial") {
        jet = gamma_p(p, alpha, g_order);
      } else {
        jet = gamma_pi(MultChar{alpha, NormedMultChar::quadratic(p)}, g_order);
      }
      for (int k = 0; k <= g_order; ++k) ctx.out << fmt_complex(jet.derivative(k)) << "\n";
    };
  });

  // chi
  std::int64_t c_p = 2;
  std::string c_x;
  auto* chi_cmd = app.add_subcommand("chi", "additive character chi_p(x) = exp(2 pi i {x}_p)");
  chi_cmd->add_option("--p", c_p, "prime")->required();
  chi_cmd->add_option("--x", c_x, "rational x, e.g. 3/4")->required();
  chi_cmd->callback([&] {
    action = [&] {
      ctx.params = "p=" + std::to_string(c_p) + " x=" + c_x;
      const Prime p(c_p);
      const PadicPoint x = PadicPoint::parse(c_x);
      const RootOfUnity w = chi(x, p);
      ctx.out << "frac " << fmt_rational(fractional_part(x, p)) << "\n";
      ctx.out << "angle " << fmt_rational(w.angle()) << "\n";
      ctx.out << "chi " << fmt_complex(w.to_complex()) << "\n";
    };
  });

  // shared --config
  std::string cfg_path;
  auto load = [&] {
    RunConfig cfg = load_config(cfg_path);
    ctx.params = config_params(cfg);
    return cfg;
  };

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of the config's test function");
  fourier_cmd->add_option("--config", cfg_path, "run config (JSON)")->required();
  fourier_cmd->callback([&] {
    action = [&] {
      const RunConfig cfg = load();
      const TestFunction F = fourier(need_test_function(cfg));
      ctx.out << "# F[phi] in D^" << F.l() << "_" << F.N() << ", canonical coset order\n";
      ctx.out << "index,re,im\n";
      for (std::size_t i = 0; i < F.size(); ++i) {
        ctx.out << i << ',' << fmt_double(F.values()[i].real()) << ',' << fmt_double(F.values()[i].imag()) << "\n";
      }
    };
  });

  auto* eval_cmd = app.add_subcommand("eval-dist", "pairing <f, phi>");
  eval_cmd->add_option("--config", cfg_path, "run config (JSON)")->required();
  eval_cmd->callback([&] {
    action = [&] {
      const RunConfig cfg = load();
      ctx.out << fmt_complex(apply(need_distribution(cfg), need_test_function(cfg))) << "\n";
    };
  });

  std::string s_t;
  std::optional<std::int64_t> s_split;
  bool s_oracle = false;
  int s_refine = 0;
  auto* sing = app.add_subcommand("singular", "J(t) = <f chi_p(xt), phi> and its parts");
  sing->add_option("--config", cfg_path, "run config (JSON)")->required();
  sing->add_option("--t", s_t, "rational t, e.g. 1/2")->required();
  sing->add_option("--split-level", s_split, "l0 (default l)");
  sing->add_flag("--oracle", s_oracle, "also run the brute-force oracle");
  sing->add_option("--refine", s_refine, "oracle cell refinement")->check(CLI::Range(0, 6));
  sing->callback([&] {
    action = [&] {
      const RunConfig cfg = load();
      ctx.params += " t=" + s_t;
      PadicPoint t;
      try {
        t = PadicPoint::parse(s_t);
      } catch (const Error& e) {
        throw ConfigError("--t", e.what());
      }
      SingularIntegralRequest req{need_distribution(cfg), need_test_function(cfg), t,
                                  s_split ? s_split : cfg.split_level};
      const SingularParts parts = decompose(req);
      ctx.out << "J " << fmt_complex(parts.total()) << "\n";
      ctx.out << "J1 " << fmt_complex(parts.j1) << "\n";
      ctx.out << "J2 " << fmt_complex(parts.j2) << "\n";
      ctx.out << "J0 " << fmt_complex(parts.j0) << "\n";
      ctx.out << "phi0 " << fmt_complex(parts.phi0) << "\n";
      ctx.out << "split_level " << parts.split_level << "\n";
      if (s_oracle || cfg.oracle) {
        ctx.out << "oracle " << fmt_complex(brute_force_oracle(req, std::max(s_refine, cfg.oracle_refine))) << "\n";
      }
    };
  });

  std::string v_theorem = "auto";
  std::string v_out;
  std::string v_format;
  auto* verify = app.add_subcommand("verify", "sweep t and compare J(t) with the stabilized formula");
  verify->add_option("--config", cfg_path, "run config (JSON)")->required();
  verify->add_option("--theorem", v_theorem, "auto, 2-1, 2-1a, 2-1b, 2-2, 3 or delta");
  verify->add_option("--out", v_out, "output path (default: config output.path or stdout)");
  verify->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->callback([&] {
    action = [&] {
      const RunConfig cfg = load();
      const QahDistribution& f = need_distribution(cfg);
      const Theorem actual = theorem_for(f);
      if (v_theorem != "auto") {
        const auto want = parse_theorem(v_theorem);
        const bool family = v_theorem == "2-1";
        if (!want && !family) throw ConfigError("--theorem", "unknown theorem '" + v_theorem + "'");
        const bool match = family ? (actual == Theorem::Th2_1a || actual == Theorem::Th2_1b) : *want == actual;
        if (!match) {
          throw ConfigError("--theorem", "config describes theorem " + std::string(to_string(actual)) + ", not " +
                                             v_theorem);
        }
      }
      VerifyOptions opt;
      opt.tolerance = cfg.tolerance;
      opt.split_level = cfg.split_level;
      opt.oracle_cross_check = cfg.oracle;
      opt.oracle_refine = cfg.oracle_refine;
      const StabilizationReport r = verify_stabilization(f, need_test_function(cfg), cfg.t_grid.M_min,
                                                         cfg.t_grid.M_max, cfg.t_grid.units_per_sphere, opt);
      emit_report(r, cfg, v_out, v_format, ctx);
    };
  });

  auto* erd = app.add_subcommand("erdelyi", "direct integral vs the power-log asymptotics (Re alpha > 0)");
  erd->add_option("--config", cfg_path, "run config (JSON)")->required();
  erd->add_option("--out", v_out, "output path");
  erd->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  erd->callback([&] {
    action = [&] {
      const RunConfig cfg = load();
      const StabilizationReport r =
          erdelyi_check(need_distribution(cfg), need_test_function(cfg), cfg.t_grid.M_min, cfg.t_grid.M_max,
                        cfg.t_grid.units_per_sphere, cfg.tolerance);
      emit_report(r, cfg, v_out, v_format, ctx);
    };
  });

  int b_upto = 0;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_n (B_1 = -1/2)");
  bern->add_option("--upto", b_upto, "n")->required()->check(CLI::Range(0, 200));
  bern->callback([&] {
    action = [&] {
      for (int r = 0; r <= b_upto; ++r) ctx.out << "B_" << r << " " << fmt_rational(bernoulli(r)) << "\n";
    };
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidation;
    return kValidation;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what << " [" << ctx.params << "]\n";
    return kAssertion;
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << " [" << ctx.params << "]\n";
    return kValidation;
  } catch (const Error& e) {
    err << (is_numeric(e.kind()) ? "numeric error: " : "invalid argument: ") << e.what() << " [" << ctx.params
        << "]\n";
    return is_numeric(e.kind()) ? kNumeric : kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << " [" << ctx.params << "]\n";
    return kValidation;
  }
}

}  // namespace padic::cli
