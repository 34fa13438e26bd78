#include <sstream>

#include "coulomb/anomaly.hpp"
#include "coulomb/cli.hpp"
#include "coulomb/kostant_suite.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/series.hpp"

namespace coulomb::cli {

namespace {

json weights_json(const lie::WeightRep& r) {
  json out = json::array();
  for (const auto& [chi, m] : r.entries()) out.push_back({{"weight", chi}, {"multiplicity", m}});
  return out;
}

json matrix_json(const lie::IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json series_json(const HilbertSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({to_string(e), to_string(c)});
  return {{"complete_through", to_string(s.order())}, {"terms", terms}, {"text", s.to_string()}};
}

json group_json(const lie::RootDatum& d) {
  json factors = json::array();
  for (const auto& f : d.factors()) factors.push_back(f.name);
  return {{"name", d.name()}, {"rank", d.rank()}, {"factors", factors}, {"roots", d.roots().size()}};
}

bool is_sl2(const lie::RootDatum& d) {
  return d.rank() == 1 && d.simple_roots().size() == 1 && d.simple_roots().front() == lie::Weight{2};
}

bool is_rank_one_semisimple(const lie::RootDatum& d) { return d.rank() == 1 && d.simple_roots().size() == 1; }

json isotypic_json(const std::map<int, std::int64_t>& dec) {
  json out = json::object();
  for (const auto& [k, m] : dec) out[std::to_string(k)] = m;
  return out;
}

Report start(const std::string& command, const RepSpec& spec) {
  Report r;
  r.command = command;
  r.inputs["spec"] = spec.source;
  return r;
}

json verdict_json(const anomaly::AnomalyVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.coroot_failures) {
    failures.push_back({{"index", f.index}, {"coroot", f.coroot}, {"trace_form_value", f.value}});
  }
  json witness = nullptr;
  if (v.witness) witness = json::array({v.witness->first, v.witness->second});
  return {{"pass", v.pass},
          {"half_trace_form_integral", v.half_integral},
          {"coroot_failures", failures},
          {"odd_gram_witness", witness}};
}

void render(std::ostringstream& out, const json& value, const std::string& indent) {
  for (const auto& [key, item] : value.items()) {
    if (item.is_object() && !item.empty()) {
      out << indent << key << ":\n";
      render(out, item, indent + "  ");
    } else if (item.is_string()) {
      out << indent << key << ": " << item.get<std::string>() << '\n';
    } else {
      out << indent << key << ": " << item.dump() << '\n';
    }
  }
}

}  // namespace

json Report::to_json() const {
  return {{"schema", kReportSchema},
          {"command", command},
          {"inputs", inputs},
          {"results", results},
          {"warnings", warnings},
          {"exit_status", exit_status}};
}

Report Report::from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kReportSchema) {
    throw ValidationError(std::string("report: expected schema ") + kReportSchema);
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.exit_status = j.at("exit_status").get<int>();
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  render(out, results, "");
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  out << "exit status: " << exit_status << '\n';
  return out.str();
}

Report invalid_input_report(const std::string& command, const std::string& message) {
  Report r;
  r.command = command;
  r.results["error"] = message;
  r.exit_status = kInvalidInput;
  return r;
}

Report cmd_rep_info(const RepSpec& spec) {
  Report r = start("rep-info", spec);
  const auto& d = spec.datum;
  auto& res = r.results;
  res["group"] = group_json(d);
  res["dimension"] = spec.rep.dimension();
  res["weights"] = weights_json(spec.rep);
  const auto check = lie::is_symplectic_weights(d, spec.rep);
  res["symplectic"] = {{"ok", check.ok}, {"diagnostic", check.diagnostic}};
  if (auto split = lie::weight_level_cotangent_split(spec.rep)) {
    res["cotangent_split"] = weights_json(*split);
  } else {
    res["cotangent_split"] = nullptr;
  }
  if (is_rank_one_semisimple(d)) {
    try {
      res["isotypic_decomposition"] = isotypic_json(lie::sl2_isotypic_decomposition(d, spec.rep));
    } catch (const ValidationError& e) {
      res["isotypic_decomposition"] = nullptr;
      r.warnings.push_back(std::string("no isotypic decomposition: ") + e.what());
    }
  }
  return r;
}

Report cmd_anomaly(const RepSpec& spec) {
  Report r = start("anomaly", spec);
  const auto& d = spec.datum;
  auto& res = r.results;
  res["group"] = group_json(d);
  const auto check = lie::is_symplectic_weights(d, spec.rep);
  res["symplectic"] = {{"ok", check.ok}, {"diagnostic", check.diagnostic}};
  if (!check) {
    r.warnings.push_back("representation is not symplectic: " + check.diagnostic);
    r.exit_status = kInvalidInput;
    return r;
  }
  res["trace_form"] = matrix_json(anomaly::trace_form(d, spec.rep).gram);
  const auto verdict = anomaly::anomaly_check(d, spec.rep);
  res["verdict"] = verdict_json(verdict);
  if (is_sl2(d)) {
    const auto n = anomaly::sl2_monopole_number(d, spec.rep);
    const auto dec = lie::sl2_isotypic_decomposition(d, spec.rep);
    res["sl2"] = {{"monopole_number", to_string(n)},
                  {"monopole_number_integral", is_integer(n)},
                  {"isotypic_decomposition", isotypic_json(dec)},
                  {"parity_criterion", anomaly::sl2_parity_criterion(dec)}};
  }
  r.exit_status = verdict.pass ? kSuccess : kMathFail;
  return r;
}

Report cmd_hilbert(const RepSpec& spec, const HilbertFlags& flags) {
  Report r = start("hilbert", spec);
  r.inputs["order"] = flags.order;
  r.inputs["shell_cap"] = flags.shell_cap;
  const auto& d = spec.datum;
  auto& res = r.results;
  res["group"] = group_json(d);
  if (flags.order < 0) {
    r.results["error"] = "order must be non-negative";
    r.exit_status = kInvalidInput;
    return r;
  }
  const auto check = lie::is_symplectic_weights(d, spec.rep);
  if (!check) {
    res["error"] = "representation is not symplectic: " + check.diagnostic;
    r.exit_status = kInvalidInput;
    return r;
  }
  json deltas = json::array();
  for (const auto& coroot : d.simple_coroots()) {
    deltas.push_back({{"coweight", coroot}, {"delta", to_string(monopole::delta(d, spec.rep, coroot))}});
  }
  res["delta_at_simple_coroots"] = deltas;

  monopole::MonopoleSeries ms;
  try {
    ms = monopole::monopole_hilbert_series(d, spec.rep, flags.order, {flags.shell_cap, flags.threads});
  } catch (const ConvergenceError& e) {
    if (!anomaly::anomaly_check(d, spec.rep).pass) r.warnings.push_back("anomalous; exponents in 1/2 Z");
    res["error"] = e.what();
    r.exit_status = kNonConvergent;
    return r;
  }
  r.warnings.insert(r.warnings.end(), ms.warnings.begin(), ms.warnings.end());
  res["anomaly_free"] = ms.anomaly_free;
  res["box_radius"] = ms.box_radius;
  res["contributing_coweights"] = ms.contributing_coweights;
  res["series"] = series_json(ms.series);

  if (is_sl2(d) && ms.anomaly_free) {
    const auto p = monopole::sl2_presentation(d, spec.rep);
    res["presentation"] = {{"monopole_number", p.n},
                           {"relation", p.relation},
                           {"degrees", {{"delta", p.degree_delta}, {"eta", p.degree_eta}, {"xi", p.degree_xi}}},
                           {"homogeneous", p.is_homogeneous()}};
    if (p.n >= 3) {
      const auto ps = monopole::presentation_hilbert_series(p, flags.order);
      const auto cmp = compare_series(ms.series, ps);
      res["presentation_series"] = series_json(ps);
      json mismatch = nullptr;
      if (cmp.first_mismatch) mismatch = to_string(*cmp.first_mismatch);
      res["comparison"] = {{"verdict", cmp.equal ? "MATCH" : "MISMATCH"},
                           {"compared_through", to_string(cmp.compared_through)},
                           {"first_mismatch", mismatch}};
      if (!cmp.equal) r.exit_status = kMathFail;
    }
  }
  return r;
}

Report cmd_kostant_verify(int n, std::size_t samples, std::uint64_t seed, unsigned threads) {
  Report r;
  r.command = "kostant-verify";
  r.inputs = {{"n", n}, {"samples", samples}, {"seed", seed}};
  if (n != 1 && n != 2) {
    r.results["error"] = "n = " + std::to_string(n) +
                         " is unsupported: seed points of Y are stored for n = 1 and n = 2 only; rerun with --n 1 or --n 2";
    r.exit_status = kInvalidInput;
    return r;
  }
  const auto report = kostant::run_kostant_suite(n, samples, seed, threads);
  json props = json::array();
  for (const auto& p : report.properties) {
    json ce = nullptr;
    if (p.first_counterexample) ce = *p.first_counterexample;
    props.push_back({{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}, {"first_counterexample", ce}});
  }
  r.results["properties"] = props;
  r.results["all_passed"] = report.all_passed();
  r.exit_status = report.all_passed() ? kSuccess : kMathFail;
  return r;
}

}  // namespace coulomb::cli
