// Command-line front end: computes the discriminant, index, and a certified
// triangular integral basis for the cubic function field defined by the
// given generator equation.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cubicbasis/parse.hpp"
#include "cubicbasis/pipeline.hpp"
#include "json.hpp"

namespace {

using cubic::errc;
using nlohmann::json;

int exit_code_for(errc code) {
  switch (code) {
    case errc::usage_error:
    case errc::parse_error:
      return 2;
    case errc::verify_failed:
      return 4;
    case errc::budget_exceeded:
      return 5;
    case errc::pure_cubic:
    case errc::not_reducible_here:
    case errc::not_standard_form:
    case errc::degenerate_input:
    case errc::reducible_cubic:
    case errc::reducible_input:
    case errc::inseparable:
    case errc::inseparable_model:
    case errc::zero_input:
    case errc::zero_denominator:
    case errc::division_by_zero:
    case errc::wrong_characteristic:
    case errc::non_prime_p:
    case errc::reducible_modulus:
    case errc::degree_mismatch:
    case errc::unsupported:
      return 3;
    default:
      return 1;
  }
}

json ideal_json(const cubic::IdealFactored& ideal, const cubic::Field& f) {
  json factors = json::array();
  for (const auto& [prime, e] : ideal.factors)
    factors.push_back({{"prime", prime.str()}, {"exponent", e}});
  return {{"factors", factors}, {"generator", ideal.generator(f).str()}};
}

json report_json(const cubic::JobSpec& job, const cubic::Report& rep) {
  const cubic::Field& f = job.field;
  std::string var = f.p() == 3 ? "z" : "y";

  json j;
  j["field"] = {{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
  j["seed"] = job.seed;
  j["normalized"] = {{"coefficient", rep.normalized_coeff.str()},
                     {"model", rep.params.frame.str(var)},
                     {"branch", cubic::branch_name(rep.params.branch)}};
  if (rep.reduction3) {
    json steps = json::array();
    for (const auto& step : rep.reduction3->trace)
      steps.push_back({{"place", step.place.prime().str()},
                       {"coefficient", step.a_next.str()}});
    j["standard_form_steps"] = steps;
  }
  j["delta_omega"] = rep.params.report.delta_omega.str();
  j["omega_scale"] = rep.params.omega_scale.str();
  j["disc"] = ideal_json(rep.params.report.disc, f);
  j["index"] = ideal_json(rep.params.report.index, f);
  if (rep.params.report.eta)
    j["eta"] = {rep.params.report.eta->first.str(), rep.params.report.eta->second.str()};
  if (!rep.params.report.ell.empty()) {
    json ell = json::array();
    for (const auto& [place, l] : rep.params.report.ell)
      ell.push_back({{"place", place.prime().str()}, {"ell", l}});
    j["ell"] = ell;
  }
  json ram = json::array();
  for (const auto& [place, kind] : rep.params.report.ram)
    ram.push_back({{"place", place.prime().str()}, {"kind", cubic::ram_kind_name(kind)}});
  j["ramification"] = ram;

  json elems = json::array();
  for (const auto& e : rep.basis.elems)
    elems.push_back({{"coords", {e.c0.str(), e.c1.str(), e.c2.str()}},
                     {"den", e.den.str()},
                     {"display", e.str(var)}});
  j["basis"] = {{"variable", var}, {"elements", elems}};

  const cubic::VerifyReport& v = rep.verdicts;
  json pmax = json::array();
  for (const auto& [prime, good] : v.pmax)
    pmax.push_back({{"prime", prime.str()}, {"maximal", good}});
  json skipped = json::array();
  for (const auto& prime : v.pmax_skipped) skipped.push_back(prime.str());
  j["verification"] = {{"level", cubic::verify_level_name(job.level)},
                       {"integral", v.integral},
                       {"closed", v.closed},
                       {"disc_match", v.disc_match},
                       {"pmax", pmax},
                       {"pmax_skipped", skipped},
                       {"model_chain", v.model_chain},
                       {"ok", v.ok()}};
  j["elapsed_sec"] = rep.elapsed_sec;
  return j;
}

void print_pretty(const cubic::JobSpec& job, const cubic::Report& rep) {
  const cubic::Field& f = job.field;
  std::string var = f.p() == 3 ? "z" : "y";
  std::cout << "field: GF(" << f.p();
  if (f.n() > 1) std::cout << "^" << f.n();
  std::cout << ")\n";
  std::cout << "model: " << rep.params.frame.str(var) << " = 0  [branch "
            << cubic::branch_name(rep.params.branch) << "]\n";
  if (rep.reduction3 && !rep.reduction3->trace.empty())
    std::cout << "standard-form steps: " << rep.reduction3->trace.size()
              << " (final b = " << rep.normalized_coeff.str() << ")\n";
  std::cout << "disc ideal:  (" << rep.params.report.disc.generator(f).str() << ")\n";
  std::cout << "index ideal: (" << rep.params.report.index.generator(f).str() << ")\n";
  std::cout << "integral basis:\n";
  for (const auto& e : rep.basis.elems) std::cout << "  " << e.str(var) << "\n";
  std::cout << "verification [" << cubic::verify_level_name(job.level)
            << "]: " << (rep.verdicts.ok() ? "ok" : "FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral bases of impure cubic function fields"};
  std::string field_text, modulus_text, a_text, b_text, cubic_text, json_path,
      level_text = "full";
  std::uint64_t seed = 0;
  bool pretty = false;

  app.add_option("--field", field_text, "base field, P or P^N")->required();
  app.add_option("--modulus", modulus_text,
                 "field modulus coefficients c0,c1,... (lowest first)");
  auto* oa = app.add_option("--a", a_text, "coefficient of y^3 - 3y - a (p != 3)");
  auto* ob = app.add_option("--b", b_text, "coefficient of z^3 + bz + b^2 (p = 3)");
  auto* oc = app.add_option("--cubic", cubic_text, "general cubic: b,c,d");
  app.add_option("--seed", seed, "randomness seed (default 0)");
  app.add_option("--verify", level_text, "fast | full | paranoid")
      ->check(CLI::IsMember({"fast", "full", "paranoid"}));
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_flag("--pretty", pretty, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    int modes = (oa->count() > 0) + (ob->count() > 0) + (oc->count() > 0);
    cubic::require(modes == 1, errc::usage_error,
                   "give exactly one of --a, --b, --cubic");

    cubic::FieldSpec spec = cubic::parse_field_spec(field_text);
    if (!modulus_text.empty()) spec.modulus = cubic::parse_modulus_list(modulus_text);

    cubic::JobSpec job;
    job.field = cubic::make_field(spec);
    job.seed = seed;
    if (level_text == "fast") job.level = cubic::VerifyLevel::fast;
    else if (level_text == "paranoid") job.level = cubic::VerifyLevel::paranoid;
    else job.level = cubic::VerifyLevel::full;

    if (oa->count() > 0) {
      job.mode = cubic::JobSpec::Mode::coeff_a;
      job.coeff = cubic::parse_ratfn(a_text, job.field);
    } else if (ob->count() > 0) {
      job.mode = cubic::JobSpec::Mode::coeff_b;
      job.coeff = cubic::parse_ratfn(b_text, job.field);
    } else {
      job.mode = cubic::JobSpec::Mode::general_cubic;
      job.cubic = cubic::parse_cubic_coeffs(cubic_text, job.field);
    }

    cubic::Report rep = cubic::run_pipeline(job);

    json doc = report_json(job, rep);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      cubic::require(out.good(), errc::usage_error, "cannot write " + json_path);
      out << doc.dump(2) << "\n";
    }
    if (pretty) print_pretty(job, rep);
    else if (json_path.empty()) std::cout << doc.dump(2) << "\n";

    if (!rep.verdicts.ok()) {
      std::cerr << "error: verification failed\n";
      return 4;
    }
    return 0;
  } catch (const cubic::Error& e) {
    std::cerr << "error [" << cubic::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
