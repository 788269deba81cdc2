#include <iostream>

#include <CLI11.hpp>

#include "toresolve/job.hpp"

int main(int argc, char** argv) {
  using namespace toresolve;
  CLI::App app{"Classification and crepant resolution of toric singularities"};
  app.require_subcommand(1, 1);

  JobSpec spec;
  std::string completion;
  unsigned degree_bound = 0;

  for (const char* name : {"classify", "hilbert", "resolve2d", "resolve3d", "render"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--in", spec.input, "input JSON document")->required();
    sub->add_option("--out", spec.output, "output report (SVG for render)")->required();
    sub->add_option("--svg", spec.svg, "also render the polygon complexes");
    sub->add_option("--completion", completion, "completion INDEX or all");
    sub->add_option("--degree-bound", degree_bound, "emit binomial relations up to this degree");
    sub->add_option("--scale", spec.scale, "pixels per lattice unit")->check(CLI::Range(4u, 400u));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::parse_error;
  }

  auto* sub = app.get_subcommands().front();
  spec.command = *parse_command(sub->get_name());
  if (sub->count("--completion")) spec.completion = completion;
  if (sub->count("--degree-bound")) spec.degree_bound = degree_bound;
  return run(spec, std::cerr);
}
