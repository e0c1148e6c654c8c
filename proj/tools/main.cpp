#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using steenrod::cli::Command;
  CLI::App app{"Steenrod coalgebra toolkit for delta-complexes and simplicial sets"};
  app.require_subcommand(1);
  Command cmd;

  auto* validate = app.add_subcommand("validate", "Check the face identities of a complex file");
  validate->add_option("file", cmd.inputs, "Complex file")->required();

  auto* chain = app.add_subcommand("chain", "Print the normalized chain complex");
  chain->add_option("file", cmd.inputs, "Complex file")->required();
  chain->add_flag("--homology", cmd.homology, "Also print integral homology");

  auto* diagonal = app.add_subcommand("diagonal", "Evaluate the canonical structure on one simplex");
  diagonal->add_option("file", cmd.inputs, "Complex file")->required();
  diagonal->add_option("--simplex", cmd.simplex, "Simplex id")->required();
  diagonal->add_option("--i", cmd.i, "Bar-resolution degree")->required();
  diagonal->add_flag("--twist", cmd.twist, "Evaluate on T·e_i");

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild the 2-skeleton from the coalgebra");
  reconstruct->add_option("file", cmd.inputs, "Complex file")->required();
  reconstruct->add_option("--out", cmd.out, "Write the reconstructed complex here");

  auto* compare = app.add_subcommand("compare", "Verify a Steenrod coalgebra morphism and derive the induced maps");
  compare->add_option("files", cmd.inputs, "SRC TGT MAPFILE")->required()->expected(3);
  compare->add_option("--i-max", cmd.i_max, "Highest bar degree to check");

  auto* pi1 = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  pi1->add_option("file", cmd.inputs, "Complex file")->required();
  pi1->add_option("--base", cmd.base, "Basepoint vertex");

  auto* convert = app.add_subcommand("convert", "Apply the free-degeneracy or forgetful functor");
  convert->add_option("file", cmd.inputs, "Complex file")->required();
  convert->add_option("--to", cmd.to, "simplicial or delta")->required()->check(CLI::IsMember({"simplicial", "delta"}));
  convert->add_option("--max-dim", cmd.max_dim, "Dimension bound")->required();
  convert->add_option("--out", cmd.out, "Output path");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", cmd.json, "Print a machine-readable JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : steenrod::cli::kParseError;
  }
  cmd.name = app.get_subcommands().front()->get_name();
  const auto result = steenrod::cli::run(cmd);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
