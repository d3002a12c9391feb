// nlk: construct, check and classify metric n-Lie algebras from the shell.
//
// Exit codes: 0 all checks pass, 1 mathematical violation, 2 parse/IO error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlk/catalog.hpp"
#include "nlk/classifier.hpp"
#include "nlk/error.hpp"
#include "nlk/io.hpp"
#include "nlk/metric.hpp"
#include "nlk/sweep.hpp"

namespace {

using nlk::io::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kError = 2;

int emit_report(const std::string& command, int code, json payload) {
  const char* status = code == kOk ? "ok" : (code == kViolation ? "violation" : "error");
  json report = {{"command", command}, {"status", status}, {"payload", std::move(payload)}};
  std::cout << report.dump(2) << "\n";
  return code;
}

nlk::MetricAlgebra require_form(const nlk::io::AlgebraFile& f) {
  if (!f.form) throw nlk::ParseError("this command needs a \"form\" in the algebra file");
  return nlk::MetricAlgebra(f.algebra, *f.form);
}

/// Loads and verifies; returns nullopt (after printing a violation report)
/// when the input fails a metric check.
std::optional<nlk::MetricAlgebra> load_verified(const std::string& command, const std::string& path, int workers,
                                                int& code) {
  nlk::MetricAlgebra ma = require_form(nlk::io::read_file(path));
  const nlk::MetricReport r = ma.verify({workers});
  if (!r.ok()) {
    code = emit_report(command, kViolation, {{"error", "input is not a metric n-Lie algebra"}, {"checks", nlk::io::to_json(r)}});
    return std::nullopt;
  }
  return ma;
}

json algebra_payload(const nlk::MetricAlgebra& ma) { return nlk::io::to_json(nlk::io::from_metric(ma)); }

void maybe_write(const std::string& out, const nlk::MetricAlgebra& ma) {
  if (!out.empty()) nlk::io::write_file(out, nlk::io::from_metric(ma));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction, verification and classification of metric n-Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;

  auto* check = app.add_subcommand("check", "Run the bracket and form axiom checks");
  check->add_option("file", path, "Algebra JSON file")->required();

  auto* invariants = app.add_subcommand("invariants", "Print center/derived-algebra invariants");
  invariants->add_option("file", path, "Algebra JSON file")->required();

  std::string family;
  nlk::FamilyParams params;
  std::string a_text = "1", c_text = "1", lambda_text = "1", mu_text = "1";
  auto* build = app.add_subcommand("build", "Build a catalog algebra");
  build->add_option("family", family, "abelian | simple | g0 | case1 | case2 | case3 | ortho_sum")->required();
  build->add_option("--n", params.n, "Arity");
  build->add_option("--k", params.k, "Dimension offset, dim = n + k");
  build->add_option("--l", params.l, "Nondegenerate central block size (case3)");
  build->add_option("--d", params.d, "Dimension (abelian)");
  build->add_option("--copies", params.copies, "Number of g0 copies (ortho_sum)");
  build->add_option("--a", a_text, "Parameter a (case1, case3)");
  build->add_option("--c", c_text, "Parameter c (simple, case2)");
  build->add_option("--lambda", lambda_text, "Parameter lambda (g0, ortho_sum)");
  build->add_option("--mu", mu_text, "Parameter mu (g0, ortho_sum)");
  build->add_option("--out", out_path, "Write the algebra file here");

  auto* classify = app.add_subcommand("classify", "Classify an (n+k)-dimensional metric n-Lie algebra");
  classify->add_option("file", path, "Algebra JSON file")->required();

  auto* forms = app.add_subcommand("forms", "Basis of the invariant symmetric bilinear forms");
  forms->add_option("file", path, "Algebra JSON file")->required();

  std::string ideal_text;
  auto* quotient = app.add_subcommand("quotient", "Metric quotient by an isotropic ideal");
  quotient->add_option("file", path, "Algebra JSON file")->required();
  quotient->add_option("--ideal", ideal_text, "Spanning vectors, e.g. \"1,0,0;0,1,0\"")->required();
  quotient->add_option("--out", out_path, "Write the quotient algebra file here");

  int reduce_l = 0;
  auto* reduce = app.add_subcommand("reduce", "Lower the arity by pairing with isotropic center duals");
  reduce->add_option("file", path, "Algebra JSON file")->required();
  reduce->add_option("--l", reduce_l, "Number of central vectors to absorb")->required();
  reduce->add_option("--out", out_path, "Write the reduced algebra file here");

  auto* orthosplit = app.add_subcommand("orthosplit", "Split off a nondegenerate central ideal");
  orthosplit->add_option("file", path, "Algebra JSON file")->required();

  std::vector<std::string> s_texts;
  std::string r_text, iso_text;
  auto* levi = app.add_subcommand("verify-levi", "Check a claimed Levi decomposition");
  levi->add_option("file", path, "Algebra JSON file")->required();
  levi->add_option("--s", s_texts, "Spanning vectors of one simple part (repeatable)");
  levi->add_option("--r", r_text, "Spanning vectors of the radical")->required();
  levi->add_option("--iso", iso_text, "Spanning vectors of a claimed isomaximal ideal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const int workers = nlk::kernels::workers_from_env();

    if (*check) {
      const auto f = nlk::io::read_file(path);
      json checks = json::array();
      checks.push_back(nlk::io::to_json(nlk::check_fundamental_identity(f.algebra, {workers})));
      bool ok = checks.back()["ok"].get<bool>();
      if (f.form) {
        if (f.form->dim() != f.algebra.udim()) throw nlk::ParseError("form dimension does not match dim");
        for (const auto& r : {nlk::check_symmetry(*f.form), nlk::check_invariance(f.algebra, *f.form, {workers}),
                              nlk::check_nondegeneracy(*f.form)}) {
          checks.push_back(nlk::io::to_json(r));
          ok = ok && r.ok();
        }
      }
      return emit_report(command, ok ? kOk : kViolation, {{"checks", std::move(checks)}, {"has_form", f.form.has_value()}});
    }

    if (*invariants) {
      const auto f = nlk::io::read_file(path);
      const nlk::Algebra& a = f.algebra;
      const nlk::Subspace c = nlk::center(a);
      const nlk::Subspace g1 = nlk::derived_algebra(a);
      json p = {{"dim", a.dim()},
                {"arity", a.arity()},
                {"dim_center", c.dim()},
                {"dim_derived", g1.dim()},
                {"perfect", g1.is_full()},
                {"solvable", nlk::is_solvable(a, nlk::Subspace::full(a.udim()))},
                {"center_isotropic", nullptr},
                {"derived_eq_center_perp", nullptr}};
      if (f.form) {
        if (f.form->dim() != a.udim()) throw nlk::ParseError("form dimension does not match dim");
        p["center_isotropic"] = nlk::is_isotropic(*f.form, c);
        p["derived_eq_center_perp"] = (g1 == nlk::orthogonal_complement(*f.form, c));
      }
      return emit_report(command, kOk, std::move(p));
    }

    if (*build) {
      params.family = nlk::parse_family(family);
      params.a = nlk::parse_scalar(a_text);
      params.c = nlk::parse_scalar(c_text);
      params.lambda = nlk::parse_scalar(lambda_text);
      params.mu = nlk::parse_scalar(mu_text);
      nlk::MetricAlgebra ma;
      try {
        ma = nlk::build(params);
      } catch (const nlk::PreconditionError& e) {
        throw nlk::ParseError(std::string("invalid parameters: ") + e.what());
      }
      maybe_write(out_path, ma);
      return emit_report(command, kOk, {{"family", family}, {"algebra", algebra_payload(ma)}});
    }

    if (*forms) {
      const auto f = nlk::io::read_file(path);
      const nlk::FormSpace space = nlk::invariant_form_space(f.algebra);
      json basis = json::array();
      for (const auto& b : space.basis) basis.push_back(nlk::io::to_json(b.gram()));
      return emit_report(command, kOk, {{"dimension", space.dimension}, {"basis", std::move(basis)}});
    }

    int code = kOk;
    auto ma = load_verified(command, path, workers, code);
    if (!ma) return code;

    if (*classify) {
      try {
        return emit_report(command, kOk, nlk::io::to_json(nlk::classify(*ma)));
      } catch (const nlk::InconsistencyError& e) {
        return emit_report(command, kViolation, {{"error", "inconsistency"}, {"detail", e.what()}});
      }
    }

    if (*quotient) {
      const auto vs = nlk::io::parse_vectors(ideal_text, ma->udim());
      const nlk::MetricQuotient q = nlk::metric_quotient(*ma, nlk::span(vs, ma->udim()));
      maybe_write(out_path, q.algebra);
      return emit_report(command, kOk,
                         {{"collapsed", q.collapsed},
                          {"transversal", nlk::io::to_json(q.transversal)},
                          {"algebra", algebra_payload(q.algebra)}});
    }

    if (*reduce) {
      const nlk::MetricAlgebra r = nlk::reduce_by_center(*ma, reduce_l);
      maybe_write(out_path, r);
      return emit_report(command, kOk, {{"arity", r.arity()}, {"algebra", algebra_payload(r)}});
    }

    if (*orthosplit) {
      const nlk::OrthoSplit s = nlk::ortho_split(*ma);
      return emit_report(command, kOk, {{"central", nlk::io::to_json(s.central)}, {"core", nlk::io::to_json(s.core)}});
    }

    if (*levi) {
      nlk::LeviAnnotation ann;
      for (const auto& t : s_texts) ann.simple_parts.push_back(nlk::span(nlk::io::parse_vectors(t, ma->udim()), ma->udim()));
      ann.radical = nlk::span(nlk::io::parse_vectors(r_text, ma->udim()), ma->udim());
      if (!iso_text.empty()) ann.iso_ideal = nlk::span(nlk::io::parse_vectors(iso_text, ma->udim()), ma->udim());
      const nlk::LeviReport r = nlk::verify_levi(*ma, ann);
      return emit_report(command, r.ok() ? kOk : kViolation, nlk::io::to_json(r));
    }
  } catch (const nlk::ParseError& e) {
    return emit_report(command, kError, {{"error", "parse"}, {"detail", e.what()}});
  } catch (const nlk::DimensionError& e) {
    return emit_report(command, kError, {{"error", "dimension"}, {"detail", e.what()}});
  } catch (const nlk::Error& e) {
    return emit_report(command, kViolation, {{"error", "violation"}, {"detail", e.what()}});
  }
  return kError;
}
