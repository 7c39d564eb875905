#include "sutor/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

namespace {

bool use_color() {
  const char* env = std::getenv("SUTOR_COLOR");
  if (env && std::string(env) == "0") return false;
  return ::isatty(STDOUT_FILENO);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sutor::cli;
  CLI::App app{"Torsion of balanced sutured manifolds from group presentations"};
  app.require_subcommand(1);
  const Style style{use_color()};

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "compute tau from a sutured input JSON");
  c->add_option("input", compute.path, "input file, or - for stdin")->required();
  c->add_flag("--json", compute.json, "print a JSON report");
  c->add_flag("--timing", compute.timing, "report wall time of the determinant");

  PolytopeOptions poly;
  auto* p = app.add_subcommand("polytope", "support, vertices and widths of tau");
  p->add_option("input", poly.path, "sutured input or tau JSON")->required();
  p->add_option("--alpha", poly.alphas, "covector for a width, e.g. 1,0 (repeatable)");
  p->add_option("--svg", poly.svg, "write a 2D SVG plot");
  p->add_option("--tsv", poly.tsv, "write the support as TSV");
  p->add_flag("--diff", poly.diff, "print the difference polytope");

  CheckOptions check;
  auto* k = app.add_subcommand("check", "sanity checks and the product-disk obstruction");
  k->add_option("input", check.path, "sutured input or tau JSON")->required();
  k->add_flag("--eval", check.eval, "evaluation check in Z[H_1(M, R_-)]");
  k->add_flag("--aug", check.aug, "augmentation versus |H_1(M, R_-)|");
  k->add_option("--disk", check.disk, "product-disk obstruction up to p_max");

  std::string family;
  auto* g = app.add_subcommand("gen", "emit a family instance as JSON");
  g->add_option("family", family, "solid-torus, pretzel-odd, pretzel-even, cantwell-conlon, trefoil, figure-eight, wirtinger, goda")->required();
  g->allow_extras();
  g->footer("Family parameters follow the name, e.g. `gen pretzel-odd 1 2 3` or\n`gen wirtinger '[[1,5,2,4],[3,1,4,6],[5,3,6,2]]'`.");

  BatchOptions batch;
  auto* b = app.add_subcommand("batch", "run a manifest of inputs");
  b->add_option("manifest", batch.manifest, "manifest JSON")->required();
  b->add_option("--parallel", batch.parallel, "worker threads")->check(CLI::PositiveNumber);

  app.add_subcommand("version", "print the version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) return cmd_compute(compute, std::cout, std::cerr);
    if (*p) return cmd_polytope(poly, std::cout, std::cerr);
    if (*k) return cmd_check(check, std::cout, std::cerr, style);
    if (*g) return cmd_gen(family, g->remaining(), std::cout, std::cerr);
    if (*b) return cmd_batch(batch, std::cout, style);
    std::cout << "sutor " << kVersion << '\n';
    return kOk;
  } catch (const sutor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
