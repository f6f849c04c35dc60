#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quartica/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact bitangent-line toolkit for quartic surfaces and curves"};
  app.require_subcommand(1);

  quartica::RunConfig cfg;
  std::string out_path, poly_file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "coefficient field: GF(p^k) or QQ");
    sub->add_option("--seed", cfg.seed, "seed for every randomized draw");
    sub->add_option("--samples", cfg.samples, "sample count for randomized checks");
    sub->add_option("--k-max", cfg.k_max, "largest extension degree scanned");
    sub->add_option("--workers", cfg.workers, "worker thread count");
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    return sub;
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family,
                    "family spec: ordinary:a,b,c | rank1:alpha,beta | supersingular:alpha"
                    " | center:a,b | rotation (params may be 'rand')");
    sub->add_option("--poly", cfg.poly, "input polynomial");
    sub->add_option("--poly-file", poly_file, "file holding the input polynomial");
    return sub;
  };

  auto* verify = add_common(app.add_subcommand(
      "verify-kummer", "run the full verification suite for one family"));
  verify->add_option("--family", cfg.family, "family spec (required)")->required();

  auto* count = add_inputs(add_common(app.add_subcommand(
      "count", "count bitangent rays through a point or in a plane")));
  count->add_option("--mode", cfg.mode, "point | plane");

  auto* disc = add_common(
      app.add_subcommand("disc", "universal binary discriminant in characteristic 2"));
  disc->add_option("--degree", cfg.degree, "form degree, 2..6");

  auto* wall = add_inputs(add_common(
      app.add_subcommand("wall", "stabilized bitangent count and 2-rank of a plane quartic")));
  wall->add_option("--kind", cfg.kind, "run the pinned fixture of this kind: I..IV");

  add_common(app.add_subcommand("fixtures", "print the built-in reference fixtures"));

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  if (!poly_file.empty()) {
    std::ifstream in(poly_file);
    if (!in) {
      std::cerr << "cannot read " << poly_file << "\n";
      return quartica::kInputError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    cfg.poly = ss.str();
  }

  std::string report;
  int code = quartica::run_command(cfg, report);

  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return quartica::kInputError;
    }
    out << report;
  }
  return code;
}
