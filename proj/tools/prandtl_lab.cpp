// Command-line front end: one subcommand per experiment or certificate run.

#include <CLI11.hpp>

#include "prandtl/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical lab for the unsteady Prandtl boundary layer in Crocco variables"};
  app.require_subcommand(1);

  prandtl::PipelineOptions opts;
  std::string config, out, run_dir, inject;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config, "INI file with [params], [grid], [experiment]")->check(CLI::ExistingFile);
    sub->add_option("-o,--out", out, "output directory (default out/<subcommand>)");
  };

  for (const auto& name : prandtl::subcommands()) {
    static const std::map<std::string, std::string> help{
        {"constants", "derived constants beta, b, K, delta, beta0"},
        {"blasius", "shoot the Blasius profile"},
        {"solve", "steady base plus one perturbed run; writes velocity.csv and base.csv"},
        {"check", "hypotheses, invariant set and velocity envelopes"},
        {"certify", "barrier certificate battery"},
        {"orbital", "orbital stability over the amplitude ladder"},
        {"asymptotic", "decay-rate fit with a decaying inflow perturbation"},
        {"serrin", "downstream convergence of a bumped steady state"}};
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name == "check" || name == "certify") {
      sub->add_option("--run", run_dir, "reuse the output directory of an earlier solve")->check(CLI::ExistingDirectory);
    }
    if (name == "certify") {
      sub->add_option("--inject", inject, "apply the documented violation for one certificate")
          ->check(CLI::IsMember({"upper_barrier", "temporal_lower", "derivative_growth", "concave_weight",
                                 "xi_exponential", "uniform_lower", "comparison", "stability_operator"}));
    }
    if (name == "blasius") {
      sub->add_option("--zeta-max", opts.zeta_max, "integration length")->capture_default_str();
      sub->add_option("--steps", opts.blasius_steps, "RK4 steps")->capture_default_str();
      sub->add_option("--tol", opts.blasius_tol, "shooting tolerance on f'(zeta_max) - 1")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return prandtl::kExitUsage;
  }

  opts.subcommand = app.get_subcommands().front()->get_name();
  opts.config = config;
  opts.out = out;
  opts.run_dir = run_dir;
  if (!inject.empty()) opts.inject = inject;
  return prandtl::run_pipeline(opts);
}
