#include <iostream>

#include <CLI11.hpp>

#include "crig/cli.hpp"
#include "crig/error.hpp"

namespace crig {
namespace {

using Command = CommandOutput (*)(const RunConfig&);

void common_flags(CLI::App& app, RunConfig& cfg) {
  app.add_option("--iters", cfg.iters, "iteration count n for certified intervals")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--tol", cfg.tol, "relator tolerance for loaded representations");
  app.add_option("--out", cfg.out, "output file");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Certified computations for circle actions of surface and orbifold groups", "crig"};
  app.set_config("--config", "", "TOML file mirroring the flags");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  common_flags(app, cfg);
  Command command = nullptr;
  auto bind = [&](CLI::App* sub, Command fn) { sub->callback([&command, fn] { command = fn; }); };

  auto* rot = app.add_subcommand("rot", "translation and rotation numbers of group elements");
  rot->add_option("--rep", cfg.rep, "representation JSON")->required();
  rot->add_option("--word", cfg.words, "extra words to evaluate (capital letter = inverse)");
  rot->add_option("--max-order", cfg.max_order, "largest order tried for exact finite-order values");
  bind(rot, cmd_rot);

  auto* euler = app.add_subcommand("euler", "Euler number by relator and pants methods");
  euler->add_option("--rep", cfg.rep, "representation JSON")->required();
  euler->add_option("--pants", cfg.pants, "pants decomposition JSON");
  euler->add_option("--method", cfg.method, "relator, pants or both")->check(CLI::IsMember({"relator", "pants", "both"}));
  bind(euler, cmd_euler);

  auto* chi = app.add_subcommand("orbifold-chi", "orbifold Euler characteristic");
  chi->add_option("--sig", cfg.sig, "signature such as (0;3,3,4), or a JSON file")->required();
  bind(chi, cmd_orbifold_chi);

  auto* cover = app.add_subcommand("verify-cover", "certify a finite quotient and its torsion-free kernel");
  cover->add_option("--sig", cfg.sig, "signature or signature JSON");
  cover->add_option("--hom", cfg.hom, "hom JSON, or 2222g:G / 334")->required();
  cover->add_option("--kernel-words", cfg.kernel_words, "random kernel words to scan");
  cover->add_option("--max-length", cfg.max_length, "longest random word");
  bind(cover, cmd_verify_cover);

  auto* fuchsian = app.add_subcommand("fuchsian", "geometric representations");
  fuchsian->require_subcommand(1);
  auto* build = fuchsian->add_subcommand("build", "build a shipped Fuchsian representation");
  build->add_option("--kind", cfg.kind, "surface, 2222g or 334")->check(CLI::IsMember({"surface", "2222g", "334"}));
  build->add_option("--genus", cfg.genus, "genus g");
  bind(build, cmd_fuchsian_build);

  auto* denjoy = app.add_subcommand("denjoy", "Denjoy blow-up and semi-conjugacy");
  denjoy->require_subcommand(1);
  auto* blow = denjoy->add_subcommand("blow-up", "blow up the orbit of a point");
  blow->add_option("--rep", cfg.rep, "representation JSON")->required();
  blow->add_option("--lambda", cfg.lambda, "total length scale, 0 < lambda < 1/2");
  blow->add_option("--depth", cfg.depth, "word length for freeness and minimality checks");
  blow->add_option("--point", cfg.point, "marked point in turns");
  blow->add_option("--samples", cfg.samples, "orbit points for the semi-conjugacy check");
  blow->add_option("--census-depth", cfg.census_depth, "word length given intervals in the mesh");
  blow->add_option("--mesh", cfg.mesh, "base mesh size of the realization");
  blow->add_option("--words", cfg.sampled_words, "sampled words for rotation numbers");
  bind(blow, cmd_denjoy_blow_up);
  auto* check = denjoy->add_subcommand("check", "check a semi-conjugacy between two actions");
  check->add_option("--a", cfg.a, "representation or blown-up JSON")->required();
  check->add_option("--b", cfg.b, "representation or blown-up JSON")->required();
  check->add_option("--samples", cfg.samples, "orbit points");
  check->add_option("--point", cfg.point, "start point in turns for circle actions");
  check->add_option("--correspondence", cfg.correspondence, "auto, identity, flip or collapse")
      ->check(CLI::IsMember({"auto", "identity", "flip", "collapse"}));
  bind(check, cmd_denjoy_check);

  auto* report = app.add_subcommand("report", "report utilities");
  report->require_subcommand(1);
  auto* validate = report->add_subcommand("validate", "validate a report against schema 1");
  validate->add_option("file", cfg.report, "report JSON")->required();
  bind(validate, cmd_report_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }

  try {
    CommandOutput result = command(cfg);
    const Json report_json = result.report.to_json();
    if (result.artifact) {
      if (cfg.out.empty()) throw InputError("--out is required for this command");
      write_json_file(cfg.out, *result.artifact);
    } else if (!cfg.out.empty()) {
      write_json_file(cfg.out, report_json);
    }
    std::cout << dump_json(report_json);
    return static_cast<int>(result.report.exit_code());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::CheckFailure);
  }
}

}  // namespace crig
