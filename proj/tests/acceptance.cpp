// Acceptance runner: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/verify.hpp"
#include "properties.hpp"

using namespace modcurve;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Every listed check must be present and pass; names the ones that do not.
Outcome require(const VerificationReport& r, const std::vector<std::string>& ids) {
  Outcome o;
  for (const auto& id : ids) {
    const CheckResult* c = r.find(id);
    if (!c || c->status != Status::pass) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "failed: " : ", ") + id +
                  (c ? " (" + c->witness + ")" : " (missing)");
    }
  }
  return o;
}

Outcome within(Outcome o, double elapsed, double limit) {
  if (elapsed >= limit) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + secs(elapsed) + " (limit " + secs(limit) + ")";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << n << ". " << title << "  [" << o.detail << "]"
              << std::endl;
  };

  Pipeline p(PipelineConfig{kDefaultPrecision, 31, 0, false, 1});
  VerificationReport r;

  report(1, "q-expansion replication", [&] {
    const auto t0 = Clock::now();
    p.run_qexp(r);
    return within(require(r, {"qexp.printed.f27", "qexp.printed.f36", "qexp.printed.f108",
                              "qexp.printed.f54_1", "qexp.printed.f54_2", "qexp.eta_matches_newform"}),
                  since(t0), 1.0);
  });

  report(2, "canonical model", [&] {
    const auto t0 = Clock::now();
    p.run_model(r);
    return within(require(r, {"model.relation_count", "model.span_equals_listed", "model.span_at_floor"}),
                  since(t0), 10.0);
  });

  report(3, "non-trigonality", [&] {
    const auto t0 = Clock::now();
    const std::size_t rank3 = cubic_rank(p.model().quadrics);
    Outcome o = require(r, {"model.cubic_rank", "model.degree2_count"});
    o.ok = o.ok && rank3 == 175;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("cubic rank ") + std::to_string(rank3);
    return within(o, since(t0), 30.0);
  });

  report(4, "group structure", [&] {
    p.run_group(r);
    return require(r, {"group.order", "group.center", "group.fingerprint", "group.tau3_action"});
  });

  report(5, "Groebner solve", [&] {
    const auto t0 = Clock::now();
    p.run_solve(r);
    return within(require(r, {"solve.groebner_basis", "solve.solution_count", "solve.theorem_map",
                              "solve.branches_tau3"}),
                  since(t0), 10.0);
  });

  VerificationReport v;
  report(6, "conjugation relations on all branches", [&] {
    p.run_verify(v);
    std::vector<std::string> ids;
    for (int k = 0; k < 3; ++k) {
      for (const char* rel : {"u_w4_u", "u_w27_u", "u_s2_u", "u_s3_u", "u_squared", "sigma_twist"}) {
        ids.push_back("lemma.branch" + std::to_string(k) + "." + rel);
      }
    }
    Outcome o = require(v, ids);
    if (!o.ok) {
      const CheckResult* fixed = v.find("lemma.branch0.u_s3_u_corrected");
      if (fixed && fixed->status == Status::pass) o.detail += "; u S3 u = w4 S2 tau3 holds instead";
    }
    return o;
  });

  report(7, "full group", [&] {
    return require(v, {"full.order", "full.b0_index_two", "full.span_preserved"});
  });

  report(8, "cusps", [&] {
    return require(v, {"cusps.orbit_size", "cusps.on_curve_and_closed", "cusps.u_disjoint"});
  });

  VerificationReport m;
  report(9, "differential action", [&] {
    Pipeline q(PipelineConfig{kDefaultPrecision, 31, 0, true, 1});
    q.run_modp(m, 31);
    Outcome o = require(v, {"differential.multiplicities", "differential.plus_sign_rejected"});
    const Outcome c = require(m, {"modp.31.census_consistent"});
    o.ok = o.ok && c.ok;
    if (!c.ok) o.detail += c.detail;
    const CheckResult* minus = v.find("differential.minus_sign");
    const CheckResult* census = m.find("modp.31.census");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("-M: ") + (minus ? minus->witness : "?") +
                "; census: " + (census ? census->witness : "?");
    return o;
  });

  report(10, "mod-p suite at 31, 43, 109", [&] {
    Outcome o;
    for (std::uint64_t prime : {31u, 43u, 109u}) {
      VerificationReport s;
      p.run_modp(s, prime);
      const std::string id = "modp." + std::to_string(prime);
      const Outcome k = require(s, {id + ".quadric_rank", id + ".distinct", id + ".span_preserved"});
      if (!k.ok) {
        o.ok = false;
        o.detail += k.detail + "; ";
      }
    }
    const NFMatrix& u = p.branches()[0].raw;
    auto t0 = Clock::now();
    fixed_point_census(residue_map(31), p.model().quadrics, u, 1);
    const double single = since(t0);
    t0 = Clock::now();
    fixed_point_census(residue_map(31), p.model().quadrics, u, 8);
    const double eight = since(t0);
    o.ok = o.ok && single < 300.0 && eight < 60.0;
    o.detail += "census at 31: " + secs(single) + " on 1 thread, " + secs(eight) + " on 8 threads";
    return o;
  });

  report(11, "property suites", [&] {
    const std::uint64_t seed = props::seed();
    const std::vector<std::pair<std::string, std::string>> runs{
        {"field axioms", props::field_axioms(seed)},
        {"sigma", props::sigma_homomorphism(seed)},
        {"kernel/rank", props::kernel_rank_duality(seed)},
        {"LLL", props::lll_preserves_lattice(seed)},
        {"Buchberger", props::buchberger_membership(seed)},
        {"Hasse", props::hasse_and_supersingular(150)},
    };
    Outcome o;
    for (const auto& [name, err] : runs) {
      if (!err.empty()) {
        o.ok = false;
        o.detail += name + ": " + err + "; ";
      }
    }
    o.detail += "seed " + std::to_string(seed);
    return o;
  });

  std::cout << (11 - failures) << "/11 criteria pass" << std::endl;
  return failures ? 1 : 0;
}
