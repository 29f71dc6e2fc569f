#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace monogenica::cli;

int main(int argc, char** argv) {
  CLI::App app{"monogenica: monogenic functions in commutative algebras"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keeps -h free for the step flag

  Options opts;
  std::string job_path;
  std::string method = "explicit";
  std::vector<double> point;

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help");
    sub->add_option("job", job_path, "job file (JSON)")->required();
    sub->add_option("--method", method, "explicit | integral | special")
        ->check(CLI::IsMember({"explicit", "integral", "special"}));
    sub->add_option("--order", opts.order, "derivative order r");
    sub->add_flag("--compare", opts.compare, "print the deviation between evaluation methods");
    sub->add_option("--tol-cr", opts.tol_cr, "Cauchy-Riemann tolerance (relative)");
    sub->add_option("--tol-pde", opts.tol_pde, "PDE residual tolerance (relative)");
    sub->add_option("--h", opts.h, "finite-difference step");
    sub->add_option("--nodes", opts.nodes, "initial quadrature nodes");
    sub->add_option("--out", opts.out, "output path");
    sub->add_option("--point", point, "evaluation point x y z")->expected(3);
  };
  auto* validate = app.add_subcommand("validate", "check algebra axioms and triad conditions");
  auto* eval = app.add_subcommand("eval", "evaluate Phi or a Gateaux derivative at one point");
  auto* grid = app.add_subcommand("grid", "write components on a grid as CSV");
  auto* check = app.add_subcommand("check", "Cauchy-Riemann and PDE residual checks");
  for (auto* sub : {validate, eval, grid, check}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  if (method == "integral") opts.method = Method::Integral;
  if (method == "special") opts.method = Method::Special;
  if (point.size() == 3) opts.point = std::array<double, 3>{point[0], point[1], point[2]};

  return guarded(
      [&] {
        const Job job = load_job(job_path);
        if (*validate) return cmd_validate(job, opts, std::cout);
        if (*eval) return cmd_eval(job, opts, std::cout);
        if (*grid) return cmd_grid(job, opts, std::cout);
        return cmd_check(job, opts, std::cout);
      },
      std::cerr);
}
