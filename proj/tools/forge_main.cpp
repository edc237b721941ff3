#include <CLI11.hpp>

#include "forge_cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mandelstam-forge: build, iterate, check and report "
               "crossing-symmetric scattering amplitudes"};
  app.require_subcommand(1);

  mandelstam::cli::CliOptions opts;
  for (const char* name : {"build", "iterate", "check", "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opts.config_path, "JSON run configuration")
        ->required();
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_flag("--resume", opts.resume, "resume from a checkpoint");
    sub->add_option("--tol", opts.tol, "tolerance override");
    sub->add_option("--threads", opts.threads, "worker thread count");
    sub->callback([&opts, name] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : mandelstam::cli::kExitConfigError;
  }
  return mandelstam::cli::run_forge(opts);
}
