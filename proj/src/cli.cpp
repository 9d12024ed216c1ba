#include "finslie/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "finslie/classify.hpp"
#include "finslie/definition.hpp"
#include "finslie/flagcurv.hpp"
#include "finslie/hypercomplex.hpp"
#include "finslie/randers.hpp"
#include "finslie/sampling.hpp"

namespace finslie::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fmt12(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

const char* yes_no(bool ok) { return ok ? "ok" : "FAILED"; }

/// Algebra, metric and optional Q taken from --case or --file.
DefinitionFile resolve_input(const std::optional<int>& case_id, const std::string& file) {
  if (case_id && !file.empty()) throw UsageError("give either --case or --file, not both");
  if (!case_id && file.empty()) throw UsageError("one of --case or --file is required");
  if (!file.empty()) return load_definition(file);
  return DefinitionFile{catalog(*case_id), std::nullopt, std::nullopt, std::nullopt};
}

ExactVector resolve_q(const DefinitionFile& def, const std::string& q_text) {
  ExactVector q;
  if (!q_text.empty()) {
    q = parse_rational_list(q_text);
  } else if (def.q) {
    q = *def.q;
  } else {
    throw UsageError("--Q is required (or a Q section in the definition file)");
  }
  require_same_dim(q.dim(), def.algebra.dim(), "--Q");
  return q;
}

void print_bracket_table(const LieAlgebra& g, std::ostream& out, const std::string& indent) {
  bool any = false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const ExactVector b = g.basis_bracket(i, j);
      if (b.is_zero()) continue;
      out << indent << "[" << g.label(i) << ", " << g.label(j) << "] = " << describe_vector(b, g.labels()) << "\n";
      any = true;
    }
  if (!any) out << indent << "(all brackets vanish)\n";
}

std::string bracket_summary(const LieAlgebra& g) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const ExactVector b = g.basis_bracket(i, j);
      if (b.is_zero()) continue;
      if (!first) os << "; ";
      os << "[" << g.label(i) << "," << g.label(j) << "]=" << describe_vector(b, g.labels());
      first = false;
    }
  return first ? "abelian" : os.str();
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------- catalog

int cmd_catalog(bool csv, std::ostream& out) {
  const MetricTensor metric = MetricTensor::identity(4);
  if (csv) out << "case,brackets,jacobi,derived_algebra,douglas_subspace,berwald_subspace\n";
  for (int c : kCatalogCases) {
    const LieAlgebra g = catalog(c);
    const bool jacobi_ok = jacobi_check(g).empty();
    const CaseReport report = case_report(c, g, metric);
    const std::string derived = derived_algebra(g).describe(g.labels());
    if (csv) {
      out << c << "," << csv_quote(bracket_summary(g)) << "," << yes_no(jacobi_ok) << "," << csv_quote(derived) << ","
          << csv_quote(report.douglas.describe(g.labels())) << "," << csv_quote(report.berwald.describe(g.labels()))
          << "\n";
      continue;
    }
    out << "case " << c << (c == 0 ? " (abelian)" : "") << "\n";
    print_bracket_table(g, out, "  ");
    out << "  jacobi: " << yes_no(jacobi_ok) << "\n";
    out << "  derived algebra: " << derived << "\n";
    out << "  douglas subspace: " << report.douglas.describe(g.labels()) << "\n";
    out << "  berwald subspace: " << report.berwald.describe(g.labels()) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- theorem

LieAlgebra perturbed(const LieAlgebra& g) {
  // add e_0 to the first nonzero bracket
  LieAlgebra out = g;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      ExactVector b = g.basis_bracket(i, j);
      if (b.is_zero()) continue;
      b[0] += 1;
      out.set_bracket(i, j, b);
      return out;
    }
  return out;
}

int cmd_theorem(bool csv, std::optional<int> perturb, std::ostream& out) {
  if (perturb && (*perturb < 1 || *perturb > 4)) throw std::invalid_argument("--perturb expects a case in 1..4");
  const auto expected = expected_theorem();
  const MetricTensor metric = MetricTensor::identity(4);
  const std::vector<std::string> labels{"X", "Y", "Z", "W"};
  bool all_match = true;
  if (csv) out << "case,douglas_expected,douglas_computed,berwald_expected,berwald_computed,match\n";
  for (const auto& want : expected) {
    LieAlgebra g = catalog(want.case_id);
    if (perturb && *perturb == want.case_id) g = perturbed(g);
    const CaseReport got = case_report(want.case_id, g, metric);
    const bool match = got == want;
    all_match = all_match && match;
    if (csv) {
      out << want.case_id << "," << csv_quote(want.douglas.describe(labels)) << ","
          << csv_quote(got.douglas.describe(labels)) << "," << csv_quote(want.berwald.describe(labels)) << ","
          << csv_quote(got.berwald.describe(labels)) << "," << (match ? "true" : "false") << "\n";
      continue;
    }
    out << "case " << want.case_id << (perturb && *perturb == want.case_id ? " (perturbed)" : "") << ": "
        << (match ? "match" : "MISMATCH") << "\n";
    out << "  douglas: computed " << got.douglas.describe(labels) << ", expected " << want.douglas.describe(labels)
        << "\n";
    out << "  berwald: computed " << got.berwald.describe(labels) << ", expected " << want.berwald.describe(labels)
        << "\n";
    const bool both = !got.berwald.is_zero() && got.berwald != got.douglas;
    const char* verdict = got.douglas.is_zero()                ? "no Douglas-type Randers metrics"
                          : got.berwald == got.douglas         ? "only Berwaldian Douglas metrics"
                          : both                               ? "both Berwaldian and non-Berwaldian Douglas metrics"
                                                               : "only non-Berwaldian Douglas metrics (Q != 0)";
    out << "  admits: " << verdict << "\n";
  }
  if (!csv) out << (all_match ? "theorem reproduced: all cases match\n" : "theorem NOT reproduced\n");
  return all_match ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- classify

void print_classification(const RandersStructure& r, std::ostream& out) {
  const auto& labels = r.algebra().labels();
  const RandersClass cls = classify_randers(r);
  out << "Q = " << describe_vector(r.q_field(), labels) << "\n";
  out << "g(Q,Q) = " << r.norm_q_squared() << "\n";
  out << "douglas: " << (cls.douglas.douglas ? "yes" : "no") << "\n";
  for (const auto& d : cls.douglas.evidence) {
    out << "  g(Q, " << describe_vector(d.derived_vector, labels) << ") = " << d.pairing << "\n";
  }
  if (cls.berwald) {
    out << "berwald: " << (cls.berwald->berwald ? "yes" : "no") << "\n";
    for (const auto& d : cls.berwald->evidence) {
      out << "  nabla_" << labels[d.direction] << " Q = " << describe_vector(d.derivative, labels) << "\n";
    }
  }
  out << "class: " << to_string(cls.kind) << "\n";
}

int cmd_classify(const std::optional<int>& case_id, const std::string& file, const std::string& q_text,
                 std::ostream& out) {
  DefinitionFile def = resolve_input(case_id, file);
  const ExactVector q = resolve_q(def, q_text);
  const RandersStructure r = make_randers(def.algebra, def.metric_or_identity(), q);
  print_classification(r, out);
  return kOk;
}

// ---------------------------------------------------------------- flag

std::optional<CaseParameters> case_parameters(int case_id, const ExactVector& q, const ExactVector& v) {
  if (q.dim() != 4) return std::nullopt;
  CaseParameters s{0, 0, v[0].to_double(), v[1].to_double(), v[2].to_double(), v[3].to_double()};
  if (case_id == 2 && q[0].is_zero() && q[1].is_zero()) {
    s.p = q[2].to_double();
    s.q = q[3].to_double();
    return s;
  }
  if ((case_id == 3 || case_id == 4) && q[1].is_zero() && q[2].is_zero() && q[3].is_zero()) {
    s.q = q[0].to_double();
    return s;
  }
  return std::nullopt;
}

int cmd_flag(const std::optional<int>& case_id, const std::string& file, const std::string& q_text,
             const std::string& v_text, const std::string& u_text, std::ostream& out) {
  DefinitionFile def = resolve_input(case_id, file);
  const ExactVector q = resolve_q(def, q_text);
  const Flag flag{parse_rational_list(v_text), parse_rational_list(u_text)};
  require_same_dim(flag.pole.dim(), def.algebra.dim(), "--V");
  require_same_dim(flag.transverse.dim(), def.algebra.dim(), "--U");
  const DouglasFlagCurvature eval(make_randers(def.algebra, def.metric_or_identity(), q));
  const FlagCurvatureResult dh = eval.deng_hou(flag);
  const FlagCurvatureResult simp = eval.simplified(flag);
  const auto& labels = def.algebra.labels();
  out << "Q = " << describe_vector(q, labels) << "\n";
  out << "V = " << describe_vector(flag.pole, labels) << "\n";
  out << "U = " << describe_vector(flag.transverse, labels) << "\n";
  out << "F(V) = " << fmt12(dh.f_value) << "\n";
  out << "g(V,V) = " << fmt12(dh.pole_norm_sq) << "\n";
  out << "K_g = " << fmt12(dh.k_g) << " (exact " << dh.exact_k_g << ")\n";
  out << "correction = " << fmt12(dh.correction) << "\n";
  out << "K_F = " << fmt12(dh.k_f) << "\n";
  out << "K_F (simplified formula) = " << fmt12(simp.k_f) << "\n";
  if (case_id) {
    if (auto params = case_parameters(*case_id, q, flag.pole)) {
      out << "K_F (case " << *case_id << " closed form) = " << fmt12(flag_curvature_case(*case_id, *params, dh.k_g))
          << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepRow {
  ExactVector pole;
  FlagCurvatureResult result;
};

int cmd_sweep(int case_id, const std::string& q_text, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  const LieAlgebra g = catalog(case_id);
  const ExactVector q = parse_rational_list(q_text);
  require_same_dim(q.dim(), g.dim(), "--Q");
  const DouglasFlagCurvature eval(make_randers(g, MetricTensor::identity(g.dim()), q));

  std::vector<std::optional<SweepRow>> rows(samples);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < samples; i += workers) {
          auto rng = sample_engine(seed, i);
          Flag flag{random_vector(rng, g.dim()), random_vector(rng, g.dim())};
          while (Subspace::span(g.dim(), {flag.pole, flag.transverse}).dim() < 2) {
            flag = Flag{random_vector(rng, g.dim()), random_vector(rng, g.dim())};
          }
          rows[i] = SweepRow{flag.pole, eval.simplified(flag)};
        }
      });
    }
  }
  out << "a,b,c,d,K_g,K_F,correction,sign_match\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < 4; ++k) out << fmt12(row->pole[k].to_double()) << ",";
    const auto& r = row->result;
    out << fmt12(r.k_g) << "," << fmt12(r.k_f) << "," << fmt12(r.correction) << ","
        << (sign_of(r.k_f) == r.exact_k_g.sign() ? "true" : "false") << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- check / hyper-verify

bool report_hypercomplex(const DefinitionFile& def, std::ostream& out) {
  const ComplexStructureTriple& t = *def.hypercomplex;
  const HypercomplexReport hc = verify_hypercomplex(def.algebra, t);
  const HyperHermitianReport hh = verify_hyper_hermitian(def.metric_or_identity(), t);
  for (std::size_t k = 0; k < 3; ++k) {
    out << "  J" << k + 1 << ": square " << yes_no(hc.structures[k].square_ok) << ", integrable "
        << yes_no(hc.structures[k].integrable) << ", metric-compatible " << yes_no(hh.preserved[k]) << "\n";
  }
  out << "  J1 J2 = J3: " << yes_no(hc.product_ok) << "\n";
  out << "  J2 J1 = -J3: " << yes_no(hc.anticommute_ok) << "\n";
  for (const auto& d : hc.diagnostics) out << "  ! " << d << "\n";
  for (const auto& v : hh.violations) {
    out << "  ! g(J" << v.structure + 1 << " " << def.algebra.label(v.i) << ", J" << v.structure + 1 << " "
        << def.algebra.label(v.j) << ") != g(" << def.algebra.label(v.i) << ", " << def.algebra.label(v.j) << ")\n";
  }
  const bool ok = hc.ok() && hh.ok();
  out << "  hyper-Hermitian hypercomplex structure: " << (ok ? "yes" : "no") << "\n";
  return ok;
}

int cmd_check(const std::string& file, std::ostream& out) {
  const DefinitionFile def = load_definition(file);
  const LieAlgebra& g = def.algebra;
  const MetricTensor metric = def.metric_or_identity();
  bool ok = true;

  out << "dim: " << g.dim() << "\n";
  out << "brackets:\n";
  print_bracket_table(g, out, "  ");
  const auto violations = jacobi_check(g);
  out << "jacobi: " << yes_no(violations.empty()) << "\n";
  for (const auto& v : violations) {
    out << "  ! (" << g.label(v.i) << ", " << g.label(v.j) << ", " << g.label(v.k)
        << "): cyclic sum = " << describe_vector(v.residual, g.labels()) << "\n";
  }
  ok = ok && violations.empty();
  out << "metric: " << (def.metric ? "given" : "identity") << ", positive definite\n";
  out << "derived algebra: " << derived_algebra(g).describe(g.labels()) << "\n";
  if (violations.empty()) {
    out << "douglas subspace: " << douglas_subspace(g, metric).describe(g.labels()) << "\n";
    out << "berwald subspace: " << berwald_subspace(g, metric).describe(g.labels()) << "\n";
  }
  if (def.q) {
    try {
      const RandersStructure r = make_randers(g, metric, *def.q);
      out << "randers: valid\n";
      if (violations.empty()) print_classification(r, out);
    } catch (const NormTooLarge& e) {
      out << "randers: FAILED (" << e.what() << ")\n";
      ok = false;
    }
  }
  if (def.hypercomplex) {
    out << "hypercomplex:\n";
    ok = report_hypercomplex(def, out) && ok;
  }
  out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_hyper_verify(const std::string& file, std::ostream& out) {
  const DefinitionFile def = load_definition(file);
  if (!def.hypercomplex) throw std::invalid_argument("definition file has no hypercomplex section");
  out << "hypercomplex:\n";
  return report_hypercomplex(def, out) ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant Riemannian and Randers geometry on Lie groups", "finslie"};
  app.require_subcommand(1);

  bool csv = false;
  std::optional<int> case_id;
  std::optional<int> perturb;
  std::string file, q_text, v_text, u_text;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  auto* catalog_cmd = app.add_subcommand("catalog", "List the catalog algebras with derived and Douglas subspaces");
  catalog_cmd->add_flag("--csv", csv, "CSV output");

  auto* check_cmd = app.add_subcommand("check", "Validate a definition file");
  check_cmd->add_option("file", file, "definition file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Douglas/Berwald classification of a Randers metric");
  classify_cmd->add_option("--case", case_id, "catalog case 0..4");
  classify_cmd->add_option("--file", file, "definition file");
  classify_cmd->add_option("--Q", q_text, "vector field Q as p/q list");

  auto* theorem_cmd = app.add_subcommand("theorem", "Reproduce the Douglas/Berwald classification of cases 1-4");
  theorem_cmd->add_flag("--csv", csv, "CSV output");
  theorem_cmd->add_option("--perturb", perturb, "negative control: corrupt one bracket of this case");

  auto* flag_cmd = app.add_subcommand("flag", "Flag curvature of a Douglas-type Randers metric");
  flag_cmd->add_option("--case", case_id, "catalog case 0..4");
  flag_cmd->add_option("--file", file, "definition file");
  flag_cmd->add_option("--Q", q_text, "vector field Q");
  flag_cmd->add_option("--V", v_text, "flag pole V")->required();
  flag_cmd->add_option("--U", u_text, "second vector of the flag plane")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep over seeded random flags");
  sweep_cmd->add_option("--case", case_id, "catalog case 0..4")->required();
  sweep_cmd->add_option("--Q", q_text, "vector field Q")->required();
  sweep_cmd->add_option("--samples", samples, "number of flags")->required();
  sweep_cmd->add_option("--seed", seed, "sample seed")->required();

  auto* hyper_cmd = app.add_subcommand("hyper-verify", "Verify the hypercomplex section of a definition file");
  hyper_cmd->add_option("file", file, "definition file")->required();

  std::vector<std::string> argv_store{"finslie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(csv, out);
    if (*check_cmd) return cmd_check(file, out);
    if (*classify_cmd) return cmd_classify(case_id, file, q_text, out);
    if (*theorem_cmd) return cmd_theorem(csv, perturb, out);
    if (*flag_cmd) return cmd_flag(case_id, file, q_text, v_text, u_text, out);
    if (*sweep_cmd) return cmd_sweep(*case_id, q_text, samples, seed, out);
    if (*hyper_cmd) return cmd_hyper_verify(file, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MetricDefinitionError& e) {
    err << "InvalidMetric: " << e.what() << "\n";
    return kInvalidMetric;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NormTooLarge& e) {
    err << "NormTooLarge: " << e.what() << "\n";
    return kNormTooLarge;
  } catch (const NotDouglas& e) {
    err << "NotDouglas: " << e.what() << "\n";
    return kNotDouglas;
  } catch (const DegenerateFlag& e) {
    err << "DegenerateFlag: " << e.what() << "\n";
    return kDegenerateFlag;
  } catch (const DegeneratePlane& e) {
    err << "DegenerateFlag: " << e.what() << "\n";
    return kDegenerateFlag;
  } catch (const InvalidMetric& e) {
    err << "InvalidMetric: " << e.what() << "\n";
    return kInvalidMetric;
  } catch (const DimensionMismatch& e) {
    err << "DimensionMismatch: " << e.what() << "\n";
    return kDimensionMismatch;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgument;
  }
  return kUsage;
}

}  // namespace finslie::cli
