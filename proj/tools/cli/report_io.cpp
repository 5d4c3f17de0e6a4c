#include "report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace padic::cli {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

}  // namespace

std::string to_csv(const StabilizationReport& r) {
  std::ostringstream os;
  os << "# theorem=" << to_string(r.theorem) << " f=" << r.description << " p=" << r.prime << " l=" << r.l
     << " N=" << r.N << " tol=" << fmt_double(r.tolerance) << " passed=" << (r.passed() ? 1 : 0)
     << " below_threshold_violation=" << (r.below_threshold_violation ? 1 : 0) << "\n";
  os << "M,t_unit,J_re,J_im,rhs_re,rhs_im,abs_err,stabilized,s_pred_exponent,s_emp_exponent\n";
  const std::string s_emp = r.s_emp_exponent ? std::to_string(*r.s_emp_exponent) : "";
  for (const auto& row : r.rows) {
    os << row.M << ',' << row.t_unit << ',' << fmt_double(row.J.real()) << ',' << fmt_double(row.J.imag()) << ','
       << fmt_double(row.rhs.real()) << ',' << fmt_double(row.rhs.imag()) << ',' << fmt_double(row.abs_err) << ','
       << (row.stabilized ? 1 : 0) << ',' << r.s_pred_exponent << ',' << s_emp << "\n";
  }
  return os.str();
}

json to_json(const StabilizationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o{{"M", row.M},
           {"t_unit", row.t_unit},
           {"J", complex_json(row.J)},
           {"rhs", complex_json(row.rhs)},
           {"abs_err", row.abs_err},
           {"stabilized", row.stabilized},
           {"asserted", row.asserted}};
    o["oracle"] = row.oracle ? complex_json(*row.oracle) : json(nullptr);
    rows.push_back(std::move(o));
  }
  json j{{"theorem", std::string(to_string(r.theorem))},
         {"description", r.description},
         {"prime", r.prime},
         {"l", r.l},
         {"N", r.N},
         {"s_pred_exponent", r.s_pred_exponent},
         {"tolerance", r.tolerance},
         {"below_threshold_violation", r.below_threshold_violation},
         {"passed", r.passed()},
         {"rows", std::move(rows)}};
  j["s_emp_exponent"] = r.s_emp_exponent ? json(*r.s_emp_exponent) : json(nullptr);
  return j;
}

StabilizationReport report_from_json(const json& j) {
  try {
    StabilizationReport r;
    const auto th = parse_theorem(j.at("theorem").get<std::string>());
    if (!th) throw std::runtime_error("unknown theorem tag");
    r.theorem = *th;
    r.description = j.at("description").get<std::string>();
    r.prime = j.at("prime").get<std::int64_t>();
    r.l = j.at("l").get<std::int64_t>();
    r.N = j.at("N").get<std::int64_t>();
    r.s_pred_exponent = j.at("s_pred_exponent").get<std::int64_t>();
    if (!j.at("s_emp_exponent").is_null()) r.s_emp_exponent = j.at("s_emp_exponent").get<std::int64_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.below_threshold_violation = j.at("below_threshold_violation").get<bool>();
    for (const auto& o : j.at("rows")) {
      StabilizationRow row;
      row.M = o.at("M").get<std::int64_t>();
      row.t_unit = o.at("t_unit").get<std::uint64_t>();
      row.J = complex_from(o.at("J"));
      row.rhs = complex_from(o.at("rhs"));
      row.abs_err = o.at("abs_err").get<double>();
      row.stabilized = o.at("stabilized").get<bool>();
      row.asserted = o.at("asserted").get<bool>();
      if (o.contains("oracle") && !o.at("oracle").is_null()) row.oracle = complex_from(o.at("oracle"));
      r.rows.push_back(row);
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace padic::cli
