#include <CLI11.hpp>

#include <iostream>

#include "framedcob/commands.hpp"

int main(int argc, char** argv) {
  using namespace framedcob;
  CLI::App app{"Framed cobordism invariants: homology, degree, residue, Arf, stable stems"};
  app.require_subcommand(1);

  std::string path;
  std::string coeffs = "z";
  auto* hom = app.add_subcommand("homology", "Simplicial homology of a complex file");
  hom->add_option("file", path, "complex JSON")->required();
  hom->add_option("--coefficients", coeffs, "z or z2")->check(CLI::IsMember({"z", "z2"}));

  auto* deg = app.add_subcommand("degree", "Degree of a simplicial map (preimage count and homology)");
  deg->add_option("file", path, "map JSON")->required();

  auto* res = app.add_subcommand("residue", "Residue of a framed link");
  res->add_option("file", path, "framed-link JSON")->required();

  auto* arf = app.add_subcommand("arf", "Arf invariant of a quadratic refinement");
  arf->add_option("file", path, "form JSON")->required();

  bool as_json = false;
  auto* report = app.add_subcommand("report", "Built-in reports");
  report->require_subcommand(1);
  auto* stems = report->add_subcommand("stems", "Reproduce the first three stable stems");
  stems->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*hom)
      cli::cmd_homology(path, coeffs == "z2" ? Coefficients::Z2 : Coefficients::Z, std::cout);
    else if (*deg)
      cli::cmd_degree(path, std::cout);
    else if (*res)
      cli::cmd_residue(path, std::cout);
    else if (*arf)
      cli::cmd_arf(path, std::cout);
    else if (*stems)
      cli::cmd_report_stems(as_json, std::cout);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
