#include "wolfkit/workbench.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wolfkit/butterfly.hpp"
#include "wolfkit/catalog.hpp"
#include "wolfkit/certificate.hpp"
#include "wolfkit/errors.hpp"
#include "wolfkit/orbit.hpp"

namespace wolfkit {

Report& AnalysisReport::section(const std::string& name) {
  for (auto& [n, r] : sections)
    if (n == name) return r;
  sections.emplace_back(name, Report{});
  return sections.back().second;
}

bool AnalysisReport::any_failed() const {
  for (const auto& [n, r] : sections)
    if (r.any_failed()) return true;
  return false;
}

namespace {

constexpr std::size_t kMetricSamples = 20;

// Generators to work with, or the abstract algebra when its form is
// degenerate and no ambient realization exists.
struct Prepared {
  std::vector<AffineIsometry> generators;
  std::optional<MetricNilAlgebra> abstract;
};

// For algebra instances the form section is filled in first; returns false
// when invariance fails.
bool prepare(const Instance& inst, AnalysisReport& rep, Prepared& out) {
  if (!inst.algebra) {
    out.generators = inst.generators;
    return true;
  }
  const MetricNilAlgebra& m = *inst.algebra;
  Report& form = rep.section("form");
  form.append(invariance_check(m.form, m.algebra));
  const Inertia sig = inertia(m.form);
  form.add("form_signature", Status::Pass, to_string(sig));
  if (form.any_failed()) return false;
  if (sig.null == 0) {
    out.generators = wolf_from_metric_algebra(m).left;
    form.add("realization", Status::Pass, "left translations on R^" + std::to_string(m.algebra.dim()));
  } else {
    out.abstract = m;
    form.add("realization", Status::Skip, "form is degenerate: no ambient realization");
  }
  return true;
}

const std::vector<AffineIsometry>& require_generators(const Prepared& p, const char* command) {
  if (p.abstract)
    throw UsageError(std::string(command) +
                     ": instance is an abstract algebra with a degenerate form; an ambient "
                     "realization is required");
  return p.generators;
}

void text_report(std::ostream& os, const Report& r) {
  for (const CheckEntry& e : r.entries) {
    std::string status(to_string(e.status));
    os << "  " << status << std::string(10 - status.size(), ' ') << e.name;
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
    if (e.witness) os << "            witness: " << to_string(*e.witness) << "\n";
  }
}

void orbit_section(const NilLieAlgebra& alg, const OrbitMetric& metric, Report& orbit) {
  orbit.add("metric_gram", Status::Pass, "Gram of the orbit metric on the algebra basis", metric.gram);
  orbit.add("signature", Status::Pass, to_string(metric.signature));
  orbit.add("radical", Status::Pass, "dim " + std::to_string(metric.radical.cols()),
            metric.radical.cols() ? std::optional<Matrix>(metric.radical) : std::nullopt);
  orbit.append(invariance_check(metric.gram, alg));
  orbit.append(connection(alg).report);
}

void abstract_analysis(const MetricNilAlgebra& m, AnalysisReport& rep) {
  Report& orbit = rep.section("orbit");
  orbit_section(m.algebra, metric_from_form(m.algebra, m.form), orbit);
  rep.section("holonomy").add("holonomy_abelian", Status::Skip, "no ambient realization");
  ButterflyResult b = extract_butterfly(m.algebra, m.form);
  Report& bf = rep.section("butterfly");
  if (b.frame)
    bf.add("butterfly", Status::Evidence, "frame found", b.frame->vectors);
  else
    bf.add("butterfly", Status::Skip, std::string("none: ") + std::string(to_string(*b.reason)));
  rep.section("bundle").add("trivialization", Status::Skip, "no ambient realization");
}

void realized_analysis(const std::vector<AffineIsometry>& gens, const WorkbenchOptions& opts,
                       AnalysisReport& rep) {
  NilLieAlgebra alg = algebra_from_lattice(gens);
  const std::size_t n = gens.front().dim();
  const Matrix origin(n, 1);
  Report& orbit = rep.section("orbit");
  OrbitChart chart = orbit_chart(alg, origin);
  orbit.add("orbit_dimension", Status::Pass,
            "k = " + std::to_string(chart.dim()) + " in R^" + std::to_string(n), chart.directions);
  OrbitMetric metric = [&] {
    try {
      OrbitMetric m = orbit_metric(alg, origin, {opts.seed, kMetricSamples});
      orbit.add("metric_point_independent", Status::Pass,
                "origin and " + std::to_string(kMetricSamples) + " random points");
      return m;
    } catch (const ConsistencyError& e) {
      orbit.add("metric_point_independent", Status::Fail, e.what());
      return metric_from_form(alg, Matrix(alg.dim(), alg.dim()));
    }
  }();
  if (orbit.any_failed()) return;
  orbit_section(alg, metric, orbit);

  Report& hol = rep.section("holonomy");
  Report& bf = rep.section("butterfly");
  if (metric.signature.null == 0) {
    NondegenerateAnalysis na = nondegenerate_analysis(gens, {opts.seed, kMetricSamples});
    for (const CheckEntry& e : na.report.entries) (e.name == "holonomy_abelian" ? hol : bf).entries.push_back(e);
  } else {
    const bool ab = holonomy_abelian(gens);
    hol.add("holonomy_abelian", Status::Evidence,
            ab ? "abelian" : "non-abelian (allowed: orbit metric is degenerate)");
    if (alg.is_abelian()) {
      bf.add("butterfly", Status::Skip, "algebra is abelian");
    } else {
      ButterflyResult b = extract_butterfly(alg, metric.gram);
      if (b.frame)
        bf.add("butterfly", Status::Evidence, "frame found in a degenerate orbit metric", b.frame->vectors);
      else
        bf.add("butterfly", Status::Skip, std::string("none: ") + std::string(to_string(*b.reason)));
    }
  }

  Report& bundle = rep.section("bundle");
  try {
    auto res = trivialize(alg, {opts.seed, 100, 50});
    if (auto* t = std::get_if<Trivialization>(&res))
      bundle.append(t->verification);
    else
      bundle.add("trivialization", Status::Skip,
                 "central slicing stalled at stage " + std::to_string(std::get<NotSliceable>(res).stage + 1));
  } catch (const ConsistencyError& e) {
    bundle.add("trivialization", Status::Fail, e.what());
  }
}

Json report_json(const AnalysisReport& report, const std::string& command, std::uint64_t seed,
                 int exit_code) {
  Json j;
  j["command"] = command;
  j["seed"] = seed;
  j["exit_code"] = exit_code;
  Json secs = Json::object();
  for (const auto& [name, r] : report.sections) secs[name] = report_to_json(r);
  j["sections"] = std::move(secs);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string polynomial_lines(const PolynomialMap& f, const std::string& name) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.out_vars(); ++i)
    os << "  " << name << "_" << i + 1 << " = " << to_string(f[i]) << "\n";
  if (f.out_vars() == 0) os << "  " << name << " has no components\n";
  return os.str();
}

Matrix parse_point(const std::string& text, const std::string& what) {
  std::vector<Rational> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(parse_rational(tok));
    } catch (const UsageError& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  Matrix p(vals.size(), 1);
  for (std::size_t i = 0; i < vals.size(); ++i) p[i] = vals[i];
  return p;
}

}  // namespace

std::string render(const AnalysisReport& report, const WorkbenchOptions& opts,
                   const std::string& command, int exit_code) {
  if (opts.format == OutputFormat::Json) return dump(report_json(report, command, opts.seed, exit_code));
  std::ostringstream os;
  for (const auto& [name, r] : report.sections) {
    os << "[" << name << "]\n";
    text_report(os, r);
  }
  os << "result: " << (exit_code == kExitPass ? "pass" : "fail") << " (exit " << exit_code << ")\n";
  return os.str();
}

Instance load_instance(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_instance_file(arg);
  CatalogEntry e = lookup_catalog(arg);
  Instance inst;
  inst.space = e.space;
  inst.generators = std::move(e.generators);
  inst.catalog = e.name;
  return inst;
}

CommandResult cmd_check(const Instance& inst, const WorkbenchOptions& opts) {
  AnalysisReport rep;
  Prepared prep;
  if (!prepare(inst, rep, prep)) return {kExitCheckFailure, render(rep, opts, "check", kExitCheckFailure)};
  const auto& gens = require_generators(prep, "check");
  WolfCertificate cert = wolf_certificate(gens, {opts.seed, 100, kMetricSamples});
  rep.section("certificate").append(cert.to_report());
  const int code = cert.necessary_conditions_pass() ? kExitPass : kExitCheckFailure;
  return {code, render(rep, opts, "check", code)};
}

CommandResult cmd_analyze(const Instance& inst, const WorkbenchOptions& opts) {
  AnalysisReport rep;
  Prepared prep;
  if (!prepare(inst, rep, prep)) return {kExitCheckFailure, render(rep, opts, "analyze", kExitCheckFailure)};
  if (prep.abstract) {
    abstract_analysis(*prep.abstract, rep);
  } else {
    WolfCertificate cert = wolf_certificate(prep.generators, {opts.seed, 100, kMetricSamples});
    rep.section("certificate").append(cert.to_report());
    if (cert.necessary_conditions_pass()) realized_analysis(prep.generators, opts, rep);
  }
  const int code = rep.any_failed() ? kExitCheckFailure : kExitPass;
  return {code, render(rep, opts, "analyze", code)};
}

CommandResult cmd_trivialize(const Instance& inst, const WorkbenchOptions& opts,
                             const std::string& output_path) {
  AnalysisReport rep;
  Prepared prep;
  if (!prepare(inst, rep, prep)) return {kExitCheckFailure, render(rep, opts, "trivialize", kExitCheckFailure)};
  const auto& gens = require_generators(prep, "trivialize");
  WolfCertificate cert = wolf_certificate(gens, {opts.seed, 100, kMetricSamples});
  if (!cert.necessary_conditions_pass()) {
    rep.section("certificate").append(cert.to_report());
    return {kExitCheckFailure, render(rep, opts, "trivialize", kExitCheckFailure)};
  }
  NilLieAlgebra alg = algebra_from_lattice(gens);
  auto res = trivialize(alg, {opts.seed, 100, 50});

  if (auto* stalled = std::get_if<NotSliceable>(&res)) {
    Json dumpj = not_sliceable_to_json(*stalled);
    if (opts.format == OutputFormat::Json) {
      Json j;
      j["command"] = "trivialize";
      j["exit_code"] = kExitNotSliceable;
      j["not_sliceable"] = std::move(dumpj);
      return {kExitNotSliceable, dump(j)};
    }
    return {kExitNotSliceable, "NOT_SLICEABLE at stage " + std::to_string(stalled->stage + 1) + "\n" + dump(dumpj)};
  }

  const Trivialization& t = std::get<Trivialization>(res);
  Json tj = trivialization_to_json(t);
  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (!f) throw UsageError(output_path + ": cannot write file");
    f << dump(tj);
  }
  if (opts.format == OutputFormat::Json) {
    Json j;
    j["command"] = "trivialize";
    j["exit_code"] = kExitPass;
    j["trivialization"] = std::move(tj);
    j["verification"] = report_to_json(t.verification);
    return {kExitPass, dump(j)};
  }
  std::ostringstream os;
  os << "base dimension " << t.projection.out_vars() << " (n = " << alg.space()->dim()
     << ", k = " << alg.dim() << ")\n";
  os << "projection (degree " << t.projection.degree() << "):\n" << polynomial_lines(t.projection, "pi");
  os << "section (degree " << t.section.degree() << "):\n" << polynomial_lines(t.section, "sigma");
  os << "slicing history:\n";
  for (std::size_t i = 0; i < t.history.size(); ++i) {
    const SliceStep& s = t.history[i];
    os << "  step " << i + 1 << ": direction " << to_string(s.direction.transpose()) << ", phi "
       << to_string(s.functional) << ", eliminated x" << s.eliminated + 1 << ", retraction degree "
       << s.retraction.degree() << "\n";
  }
  os << "verification:\n";
  text_report(os, t.verification);
  return {kExitPass, os.str()};
}

CommandResult cmd_beta(const Instance& inst, const Matrix& q, const Matrix& p, const WorkbenchOptions& opts) {
  AnalysisReport rep;
  Prepared prep;
  if (!prepare(inst, rep, prep)) return {kExitCheckFailure, render(rep, opts, "beta", kExitCheckFailure)};
  const auto& gens = require_generators(prep, "beta");
  const std::size_t n = gens.front().dim();
  if (q.rows() != n || p.rows() != n)
    throw UsageError("beta: points must have " + std::to_string(n) + " coordinates");
  NilLieAlgebra alg = algebra_from_lattice(gens);
  std::optional<Matrix> t = beta(q, p, alg);
  const int code = t ? kExitPass : kExitCheckFailure;
  if (opts.format == OutputFormat::Json) {
    Json j;
    j["command"] = "beta";
    j["exit_code"] = code;
    j["t"] = t ? vector_to_json(*t) : Json(nullptr);
    return {code, dump(j)};
  }
  if (!t) return {code, "q is not in the orbit of p\n"};
  return {code, "t = " + to_string(t->transpose()) + "\n"};
}

CommandResult cmd_catalog_list(const WorkbenchOptions& opts) {
  if (opts.format == OutputFormat::Json) return {kExitPass, dump(Json(catalog_names()))};
  std::string out;
  for (const auto& n : catalog_names()) out += n + "\n";
  return {kExitPass, out};
}

CommandResult cmd_catalog_emit(const std::string& name) {
  CatalogEntry e = lookup_catalog(name);
  Instance inst;
  inst.space = e.space;
  inst.generators = std::move(e.generators);
  inst.catalog = e.name;
  return {kExitPass, dump(instance_to_json(inst))};
}

int run_workbench(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of Wolf groups and flat pseudo-Riemannian homogeneous spaces", "wolfkit"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  app.fallthrough();

  std::string instance, output_path, q_text, p_text, emit_name;
  auto* check = app.add_subcommand("check", "Wolf certificate and transitivity evidence");
  check->add_option("instance", instance, "Instance file or catalog name")->required();
  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  analyze->add_option("instance", instance, "Instance file or catalog name")->required();
  auto* triv = app.add_subcommand("trivialize", "Polynomial section and projection of the orbit bundle");
  triv->add_option("instance", instance, "Instance file or catalog name")->required();
  triv->add_option("-o,--output", output_path, "Write the trivialization JSON here");
  auto* bet = app.add_subcommand("beta", "Exponential coordinates t with exp(sum t_i X_i).p = q");
  bet->add_option("instance", instance, "Instance file or catalog name")->required();
  bet->add_option("--q", q_text, "Target point, comma separated rationals")->required();
  bet->add_option("--p", p_text, "Base point, comma separated rationals")->required();
  auto* cat = app.add_subcommand("catalog", "Built-in instances");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog names");
  auto* cat_emit = cat->add_subcommand("emit", "Print a catalog entry as instance JSON");
  cat_emit->add_option("name", emit_name, "Catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  WorkbenchOptions opts{format == "json" ? OutputFormat::Json : OutputFormat::Text, seed};
  try {
    CommandResult r;
    if (check->parsed()) r = cmd_check(load_instance(instance), opts);
    else if (analyze->parsed()) r = cmd_analyze(load_instance(instance), opts);
    else if (triv->parsed()) r = cmd_trivialize(load_instance(instance), opts, output_path);
    else if (bet->parsed())
      r = cmd_beta(load_instance(instance), parse_point(q_text, "--q"), parse_point(p_text, "--p"), opts);
    else if (cat_list->parsed()) r = cmd_catalog_list(opts);
    else r = cmd_catalog_emit(emit_name);
    out << r.output;
    return r.exit_code;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "violation: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kExitCheckFailure;
  } catch (const ConsistencyError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace wolfkit
