// modcurve: command-line driver for the X0(108) verification pipeline.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modcurve/errors.hpp"
#include "modcurve/fixtures.hpp"
#include "modcurve/verify.hpp"

namespace mc = modcurve;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Options {
  std::size_t precision = mc::kDefaultPrecision;
  std::uint64_t prime = 31;
  int branch = 0;
  bool json = false;
  std::string out;
  bool census = false;
  bool no_census = false;
};

std::string error_name(const mc::Error& e) {
#define MODCURVE_NAME(T) \
  if (dynamic_cast<const mc::T*>(&e)) return #T;
  MODCURVE_NAME(InsufficientPrecision)
  MODCURVE_NAME(NotSplit)
  MODCURVE_NAME(InvalidPrime)
  MODCURVE_NAME(NonIntegral)
  MODCURVE_NAME(ModelMismatch)
  MODCURVE_NAME(NotAnAutomorphism)
  MODCURVE_NAME(UnexpectedVariety)
  MODCURVE_NAME(GroupTooLarge)
  MODCURVE_NAME(NotABasis)
  MODCURVE_NAME(ParseError)
  MODCURVE_NAME(DivisionByZero)
#undef MODCURVE_NAME
  return "Error";
}

/// Writes to --out when given, else stdout.
void emit(const Options& o, const std::function<void(std::ostream&)>& body) {
  if (o.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot open " + o.out);
  body(f);
}

int finish(const Options& o, const mc::VerificationReport& r) {
  emit(o, [&](std::ostream& out) {
    if (o.json) {
      out << r.to_json() << '\n';
    } else {
      r.write_text(out);
    }
  });
  for (const auto& c : r.checks()) {
    if (c.status == mc::Status::fail) std::cerr << "failed: " << c.check_id << '\n';
  }
  return r.all_pass() ? kPass : kFail;
}

mc::PipelineConfig config_of(const Options& o) {
  mc::PipelineConfig c;
  c.precision = o.precision;
  c.prime = o.prime;
  c.branch = o.branch;
  c.census = o.no_census ? false : (o.census || o.prime == 31);
  return c;
}

using Stage = std::function<void(mc::Pipeline&, mc::VerificationReport&)>;

int run_stages(const Options& o, const std::vector<std::pair<std::string, Stage>>& stages) {
  mc::Pipeline p(config_of(o));
  mc::VerificationReport r;
  std::string current;
  try {
    for (const auto& [name, stage] : stages) {
      current = name;
      stage(p, r);
    }
  } catch (const mc::Error& e) {
    std::cerr << "error in " << current << ": " << error_name(e) << ": " << e.what() << '\n';
    return kFail;
  }
  return finish(o, r);
}

Stage qexp = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_qexp(r); };
Stage model = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_model(r); };
Stage group = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_group(r); };
Stage solve = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_solve(r); };
Stage verify = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_verify(r); };
Stage modp = [](mc::Pipeline& p, mc::VerificationReport& r) { p.run_modp(r, p.config().prime); };

int write_fixtures(const Options& o) {
  const std::filesystem::path dir = o.out.empty() ? "fixtures" : o.out;
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "quadrics.txt");
    for (const auto& q : mc::fixtures::quadric_text()) f << q << '\n';
  }
  {
    std::ofstream f(dir / "matrices.txt");
    mc::write_matrix(f, "w4", mc::fixtures::w4());
    mc::write_matrix(f, "w27", mc::fixtures::w27());
    mc::write_matrix(f, "S2", mc::fixtures::s2());
    mc::write_matrix(f, "S3", mc::fixtures::s3());
  }
  {
    std::ofstream f(dir / "theorem_map.txt");
    mc::write_matrix(f, "T", mc::fixtures::theorem_map());
  }
  std::cout << "wrote quadrics.txt, matrices.txt, theorem_map.txt to " << dir.string() << '\n';
  return kPass;
}

int dump_basis(const Options& o) {
  try {
    const mc::CuspFormBasis b = mc::standard_basis(o.precision);
    emit(o, [&](std::ostream& out) {
      for (std::size_t i = 0; i < b.e.size(); ++i) {
        out << 'e' << i + 1;
        for (std::size_t n = 1; n <= b.precision; ++n) out << ' ' << mc::to_string(b.e[i][n]);
        out << '\n';
      }
    });
  } catch (const mc::Error& e) {
    std::cerr << "error in basis: " << error_name(e) << ": " << e.what() << '\n';
    return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the automorphism group of X0(108)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "q-expansion precision (at least 38)")->capture_default_str();
  app.add_option("--p", o.prime, "split prime for the finite-field suite")->capture_default_str();
  app.add_option("--branch", o.branch, "which solution a to use for u")->check(CLI::Range(0, 2))->capture_default_str();
  app.add_flag("--json", o.json, "emit the report as JSON");
  app.add_option("--out", o.out, "write output to FILE (a directory for fixtures)");
  app.add_flag("--census", o.census, "force the fixed-point census at --p");
  app.add_flag("--no-census", o.no_census, "skip the fixed-point census");

  auto* c_model = app.add_subcommand("model", "q-expansions, canonical model, cubic rank");
  auto* c_group = app.add_subcommand("group", "the 108-element group B0(108)");
  auto* c_solve = app.add_subcommand("solve", "condition ideal, Groebner basis, the three solutions");
  auto* c_verify = app.add_subcommand("verify", "every characteristic-zero check");
  auto* c_modp = app.add_subcommand("modp", "reduction of the 216 automorphisms at --p");
  auto* c_all = app.add_subcommand("all", "model, group, solve, verify, modp");
  auto* c_report = app.add_subcommand("report", "same as all; use --json for the stable schema");
  auto* c_fixtures = app.add_subcommand("fixtures", "write the embedded ground-truth data");
  auto* c_basis = app.add_subcommand("basis", "print the coefficients of e1..e10");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (c_model->parsed()) return run_stages(o, {{"qexp", qexp}, {"model", model}});
    if (c_group->parsed()) return run_stages(o, {{"group", group}});
    if (c_solve->parsed()) return run_stages(o, {{"solve", solve}});
    if (c_verify->parsed()) {
      return run_stages(o, {{"qexp", qexp}, {"model", model}, {"group", group}, {"solve", solve},
                            {"verify", verify}});
    }
    if (c_modp->parsed()) return run_stages(o, {{"modp", modp}});
    if (c_all->parsed() || c_report->parsed()) {
      return run_stages(o, {{"qexp", qexp}, {"model", model}, {"group", group}, {"solve", solve},
                            {"verify", verify}, {"modp", modp}});
    }
    if (c_fixtures->parsed()) return write_fixtures(o);
    if (c_basis->parsed()) return dump_basis(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
