#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lgk/error.hpp"
#include "lgk/harness.hpp"
#include "lgk/rootdatum.hpp"

namespace {

constexpr int kInvalidInput = 2;

int printDatum(std::string type, int rank, bool adjoint, bool wantDual) {
  const auto iso = adjoint ? lgk::Isogeny::Adjoint : lgk::Isogeny::SimplyConnected;
  const auto digits = type.find_first_of("0123456789");
  if (digits != std::string::npos) {
    const int labelled = std::stoi(type.substr(digits));
    if (rank != 0 && rank != labelled) throw lgk::Error(lgk::ErrorCode::InvalidType, "--rank disagrees with --type");
    rank = labelled;
    type.resize(digits);
  }
  lgk::DatumPtr d = lgk::buildFromType(type, rank, iso);
  if (wantDual) d = lgk::dual(*d);
  std::cout << lgk::toJson(*d).dump(2) << "\n";
  return 0;
}

int verify(const std::string& specPath, std::optional<std::uint64_t> seed, const std::string& out, bool timings) {
  const lgk::SuiteSpec spec = lgk::loadSuiteSpec(specPath);
  const lgk::Report rep = lgk::runSuite(spec, {seed, timings});
  const std::string text = rep.toJson().dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw lgk::Error(lgk::ErrorCode::InvalidSpec, "cannot write " + out);
    f << text;
  }
  return rep.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for Chevalley involutions, Tits sections and endoscopic Fourier inversion"};
  app.set_version_flag("--version", std::string(lgk::version()));
  app.require_subcommand(1);

  std::string type;
  int rank = 0;
  bool adjoint = false, wantDual = false;
  auto* datum = app.add_subcommand("datum", "Print a based root datum as JSON");
  datum->add_option("--type", type, "Cartan type: A, B, C, D, G or a label such as B2")->required();
  datum->add_option("--rank", rank, "Rank, when --type is a bare family");
  datum->add_flag("--adjoint", adjoint, "Adjoint isogeny (default simply connected)");
  datum->add_flag("--dual", wantDual, "Print the dual datum");

  std::string specPath, out;
  std::optional<std::uint64_t> seed;
  bool timings = false;
  auto* ver = app.add_subcommand("verify", "Run the suites named in a spec file and print a JSON report");
  ver->add_option("--spec", specPath, "Spec file (.json or .toml)")->required();
  ver->add_option("--seed", seed, "Override data.seed");
  ver->add_option("--out", out, "Write the report here instead of stdout");
  ver->add_flag("--timings", timings, "Record runtimeMs (reports are then not byte-stable)");

  auto* suites = app.add_subcommand("suites", "List suite names as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*datum) return printDatum(type, rank, adjoint, wantDual);
    if (*ver) return verify(specPath, seed, out, timings);
    if (*suites) {
      std::cout << nlohmann::json(lgk::suiteNames()).dump(2) << "\n";
      return 0;
    }
  } catch (const lgk::Error& e) {
    std::cerr << "lgk: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
