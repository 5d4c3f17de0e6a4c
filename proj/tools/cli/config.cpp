#include "config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace padic::cli {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(join(path, key), "missing required field");
  return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

std::complex<double> as_complex(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_complex(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path, e.what());
    }
  }
  if (j.is_object()) {
    const double re = j.contains("re") ? as_number(j.at("re"), join(path, "re")) : 0.0;
    const double im = j.contains("im") ? as_number(j.at("im"), join(path, "im")) : 0.0;
    return {re, im};
  }
  if (j.is_array() && j.size() == 2) return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
  throw ConfigError(path, "expected a complex number: \"a+bi\", {re, im} or [re, im]");
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(BigInt(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) {
    try {
      return PadicPoint::parse(j.get<std::string>()).value();
    } catch (const Error& e) {
      throw ConfigError(path, e.what());
    }
  }
  throw ConfigError(path, "expected an exact rational (integer or \"p/q\" string)");
}

template <class F>
auto wrap(const std::string& path, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const char* b = s.c_str();
  const char* end = b + s.size();
  auto bad = [&] { return std::invalid_argument("cannot parse complex number '" + text + "'"); };

  char* p = nullptr;
  errno = 0;
  double first = std::strtod(b, &p);
  if (p == b) {
    // "i", "-i", "+i"
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    throw bad();
  }
  if (p == end) return {first, 0.0};
  if (*p == 'i' && p + 1 == end) return {0.0, first};
  if (*p != '+' && *p != '-') throw bad();
  const char* q = p;
  double second;
  if ((q[1] == 'i') && q + 2 == end) {
    second = *q == '-' ? -1.0 : 1.0;
  } else {
    char* r = nullptr;
    second = std::strtod(q, &r);
    if (r == q || r + 1 != end || *r != 'i') throw bad();
  }
  return {first, second};
}

CharacterSpec parse_character(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string k = j.get<std::string>();
    if (k == "trivial") return CharacterSpec::trivial();
    if (k == "quadratic") return CharacterSpec::quadratic();
    throw ConfigError(path, "unknown character '" + k + "'");
  }
  if (!j.is_object()) throw ConfigError(path, "expected a character object");
  const std::string kind = as_string(require(j, "kind", path), join(path, "kind"));
  if (kind == "trivial") return CharacterSpec::trivial();
  if (kind == "quadratic") return CharacterSpec::quadratic();
  if (kind != "table") throw ConfigError(join(path, "kind"), "expected trivial, quadratic or table");
  const std::int64_t k0 = as_int(require(j, "modulus_exponent", path), join(path, "modulus_exponent"));
  const json& vals = require(j, "values", path);
  const std::string vpath = join(path, "values");
  std::map<std::uint64_t, Rational> table;
  auto put = [&](const std::string& key, const json& v, const std::string& p) {
    char* e = nullptr;
    const unsigned long long u = std::strtoull(key.c_str(), &e, 10);
    if (key.empty() || *e != '\0') throw ConfigError(p, "table key must be a nonnegative integer");
    table[u] = as_rational(v, p);
  };
  if (vals.is_object()) {
    for (const auto& [k, v] : vals.items()) put(k, v, vpath + "." + k);
  } else if (vals.is_array()) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::string p = vpath + "[" + std::to_string(i) + "]";
      if (!vals[i].is_array() || vals[i].size() != 2) throw ConfigError(p, "expected [unit, angle]");
      put(std::to_string(as_int(vals[i][0], p + "[0]")), vals[i][1], p + "[1]");
    }
  } else {
    throw ConfigError(vpath, "expected {unit: angle} or [[unit, angle], ...]");
  }
  return CharacterSpec::table(k0, std::move(table));
}

TestFunction parse_test_function(const json& j, const Prime& p, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected a test-function object");
  const std::string kind = as_string(require(j, "kind", path), join(path, "kind"));
  if (kind == "delta") {
    const std::int64_t k = as_int(require(j, "k", path), join(path, "k"));
    return wrap(path, [&] { return delta_indicator(p, k); });
  }
  const std::int64_t N = as_int(require(j, "N", path), join(path, "N"));
  const std::int64_t l = as_int(require(j, "l", path), join(path, "l"));
  if (l > N) throw ConfigError(join(path, "l"), "l must be <= N");
  if (kind == "random") {
    const json& s = require(j, "seed", path);
    if (!s.is_number_unsigned() && !s.is_number_integer()) throw ConfigError(join(path, "seed"), "expected an integer");
    return wrap(path, [&] { return random_testfn(p, N, l, s.get<std::uint64_t>()); });
  }
  if (kind != "table") throw ConfigError(join(path, "kind"), "expected delta, table or random");
  const json& vals = require(j, "values", path);
  if (!vals.is_array()) throw ConfigError(join(path, "values"), "expected an array of [re, im]");
  std::vector<std::complex<double>> v;
  v.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    v.push_back(as_complex(vals[i], join(path, "values") + "[" + std::to_string(i) + "]"));
  }
  return wrap(join(path, "values"), [&] { return TestFunction(p, N, l, std::move(v)); });
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  RunConfig cfg;
  const std::int64_t pv = as_int(require(j, "prime", ""), "prime");
  cfg.prime = wrap("prime", [&] { return Prime(pv); });

  if (j.contains("distribution")) {
    const json& d = j.at("distribution");
    const std::string path = "distribution";
    if (!d.is_object()) throw ConfigError(path, "expected an object");
    const std::string variant = as_string(require(d, "variant", path), join(path, "variant"));
    // alpha, m and character may sit inside the distribution or at top level.
    auto field = [&](const std::string& key) -> std::pair<const json*, std::string> {
      if (d.contains(key)) return {&d.at(key), join(path, key)};
      if (j.contains(key)) return {&j.at(key), key};
      return {nullptr, join(path, key)};
    };
    if (variant == "delta") {
      cfg.distribution = QahDistribution::dirac(cfg.prime);
    } else if (variant == "p-log") {
      auto [mj, mp] = field("m");
      if (!mj) throw ConfigError(mp, "missing required field");
      const std::int64_t m = as_int(*mj, mp);
      if (m < 1) throw ConfigError(mp, "p-log needs m >= 1");
      cfg.distribution = QahDistribution::p_log(cfg.prime, static_cast<int>(m));
    } else if (variant == "pi-alpha-log") {
      auto [aj, ap] = field("alpha");
      if (!aj) throw ConfigError(ap, "missing required field");
      const auto alpha = as_complex(*aj, ap);
      auto [mj, mp] = field("m");
      const std::int64_t m = mj ? as_int(*mj, mp) : 0;
      if (m < 0 || m > 16) throw ConfigError(mp, "m must be in [0, 16]");
      auto [cj, cp] = field("character");
      const CharacterSpec cs = cj ? parse_character(*cj, cp) : CharacterSpec::trivial();
      const NormedMultChar chr = wrap(cp, [&] { return make_character(cfg.prime, cs); });
      cfg.distribution = wrap(path, [&] { return QahDistribution::pi_alpha_log(alpha, chr, static_cast<int>(m)); });
    } else {
      throw ConfigError(join(path, "variant"), "expected pi-alpha-log, p-log or delta");
    }
  }

  if (j.contains("test_function")) {
    cfg.test_function = parse_test_function(j.at("test_function"), cfg.prime, "test_function");
  }

  if (j.contains("t_grid")) {
    const json& g = j.at("t_grid");
    if (!g.is_object()) throw ConfigError("t_grid", "expected an object");
    cfg.t_grid.M_min = as_int(require(g, "M_min", "t_grid"), "t_grid.M_min");
    cfg.t_grid.M_max = as_int(require(g, "M_max", "t_grid"), "t_grid.M_max");
    if (g.contains("units_per_sphere")) {
      const std::int64_t u = as_int(g.at("units_per_sphere"), "t_grid.units_per_sphere");
      if (u < 1 || u > 64) throw ConfigError("t_grid.units_per_sphere", "must be in [1, 64]");
      cfg.t_grid.units_per_sphere = static_cast<int>(u);
    }
    if (cfg.t_grid.M_min > cfg.t_grid.M_max) throw ConfigError("t_grid.M_max", "must be >= M_min");
  }

  if (j.contains("split_level") && !j.at("split_level").is_null()) {
    cfg.split_level = as_int(j.at("split_level"), "split_level");
    if (cfg.test_function && *cfg.split_level > cfg.test_function->N()) {
      throw ConfigError("split_level", "must be <= test_function N");
    }
  }
  if (j.contains("tolerance") && !j.at("tolerance").is_null()) {
    cfg.tolerance = as_number(j.at("tolerance"), "tolerance");
    if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance", "must be positive");
  }
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    if (o.is_boolean()) {
      cfg.oracle = o.get<bool>();
    } else if (o.is_object()) {
      cfg.oracle = o.contains("enabled") ? o.at("enabled").get<bool>() : true;
      if (o.contains("refine")) {
        const std::int64_t r = as_int(o.at("refine"), "oracle.refine");
        if (r < 0 || r > 6) throw ConfigError("oracle.refine", "must be in [0, 6]");
        cfg.oracle_refine = static_cast<int>(r);
      }
    } else {
      throw ConfigError("oracle", "expected a boolean or {enabled, refine}");
    }
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) throw ConfigError("output", "expected an object");
    if (o.contains("format")) {
      cfg.output.format = as_string(o.at("format"), "output.format");
      if (cfg.output.format != "csv" && cfg.output.format != "json") {
        throw ConfigError("output.format", "expected csv or json");
      }
    }
    if (o.contains("path")) cfg.output.path = as_string(o.at("path"), "output.path");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace padic::cli
