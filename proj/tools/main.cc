#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spatch/errors.hh"
#include "spatch/io.hh"

namespace {

std::string readFile(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw spatch::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void writeFile(const std::string &path, const std::string &text) {
  std::ofstream f(path);
  if (!f)
    throw spatch::ValidationError("cannot write " + path);
  f << text;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"n-sided S-patch to trimmed rational Bezier patch converter"};
  app.require_subcommand(1);

  auto *cmdConvert = app.add_subcommand("convert", "convert an S-patch file");
  std::string inPath, outPath, meshPath, reportPath;
  int resolution = 30;
  cmdConvert->add_option("input", inPath, "S-patch JSON file")->required();
  cmdConvert->add_option("-o,--output", outPath, "trimmed patch JSON output")
      ->required();
  cmdConvert->add_option("--mesh", meshPath, "OBJ mesh of the trimmed patch");
  cmdConvert->add_option("--resolution", resolution, "mesh sampling resolution");
  cmdConvert->add_option("--report", reportPath, "diagnostics report JSON");

  auto *cmdEval = app.add_subcommand("eval", "evaluate an S-patch at (u,v)");
  std::string evalPath, atArg;
  cmdEval->add_option("input", evalPath, "S-patch JSON file")->required();
  cmdEval->add_option("--at", atArg, "u,v parameter pair")->required();

  auto *cmdBench = app.add_subcommand("bench", "time the composition stage");
  int sides = 5, depth = 3;
  std::string algoName = "efficient";
  unsigned seed = 1;
  cmdBench->add_option("--sides", sides, "number of sides")->required();
  cmdBench->add_option("--depth", depth, "patch depth")->required();
  cmdBench->add_option("--algo", algoName, "naive|efficient")
      ->check(CLI::IsMember({"naive", "efficient"}));
  cmdBench->add_option("--seed", seed, "control net seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cmdConvert->parsed()) {
      spatch::SPatch S = spatch::spatchFromJson(readFile(inPath));

      auto t0 = std::chrono::steady_clock::now();
      spatch::BezierSimplex quad = spatch::toQuadSpatch(S);
      auto t1 = std::chrono::steady_clock::now();
      spatch::BezierSimplex hom = spatch::changeCoords(quad);
      auto t2 = std::chrono::steady_clock::now();
      spatch::TrimmedPatch T;
      T.patch = spatch::toTensor(hom);
      T.trim = spatch::makeTrimLoop(S.sides);
      auto t3 = std::chrono::steady_clock::now();

      writeFile(outPath, spatch::toJson(T));
      if (!meshPath.empty())
        writeFile(meshPath, spatch::sampleMesh(T, resolution));
      if (!reportPath.empty()) {
        auto ms = [](auto a, auto b) {
          return std::chrono::duration<double, std::milli>(b - a).count();
        };
        auto report = spatch::analyzeConversion(S, T, ms(t0, t1), ms(t1, t2),
                                                ms(t2, t3));
        writeFile(reportPath, spatch::toJson(report));
        std::cout << "degree [" << report.degreeU << "," << report.degreeV
                  << "], max oracle error " << report.maxOracleError << "\n";
      } else {
        std::cout << "degree [" << T.patch.degreeU << "," << T.patch.degreeV
                  << "]\n";
      }
    } else if (cmdEval->parsed()) {
      double u, v;
      char comma;
      std::istringstream is(atArg);
      if (!(is >> u >> comma >> v) || comma != ',')
        throw spatch::ValidationError("--at expects u,v");
      spatch::SPatch S = spatch::spatchFromJson(readFile(evalPath));
      spatch::Point3 p = spatch::evalUv(S, {u, v});
      std::cout.precision(15);
      std::cout << p[0] << " " << p[1] << " " << p[2] << "\n";
    } else if (cmdBench->parsed()) {
      auto algo = algoName == "naive" ? spatch::CompositionAlgorithm::Naive
                                      : spatch::CompositionAlgorithm::Efficient;
      double ms = spatch::benchmark(sides, depth, algo, seed);
      std::cout << algoName << " composition, " << sides << " sides, depth "
                << depth << ": " << ms << " ms\n";
    }
  } catch (const spatch::NumericalError &e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
