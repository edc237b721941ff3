#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "forge_cli.hpp"

using namespace mandelstam;
using namespace mandelstam::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string write_config(const std::string& dir, const json& j) {
  fs::create_directories(dir);
  const std::string path = dir + "/config.json";
  std::ofstream(path) << j.dump(2);
  return path;
}

int run(const std::string& cmd, const std::string& config_path,
        const std::string& out_dir, bool resume = false, double tol = 0.0) {
  CliOptions opts;
  opts.command = cmd;
  opts.config_path = config_path;
  opts.out_dir = out_dir;
  opts.resume = resume;
  opts.tol = tol;
  return run_forge(opts);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json small_template(double scale = 1e-3) {
  return json{{"kind", "mandelstam"}, {"scale", scale},
              {"nx", 32},           {"ny", 32}};
}

json small_fixpoint(double omega_scale, double tol = 1e-9) {
  return json{{"tol", tol},         {"omega_scale", omega_scale},
              {"nx", 32},           {"ny", 32},
              {"at_cache_n", 256},  {"kernel_order", 6}};
}

struct TempDir {
  std::string path;
  explicit TempDir(const std::string& name) : path("cli_" + name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("build tags recipes and caches forward values") {
  TempDir d("build");
  // fixed pole at alpha0 = 1, i.e. gamma = 1/2
  const json regge{{"amplitude",
                    json{{"kind", "regge"},
                         {"trajectory", json{{"type", "fixed"}, {"alpha0", 1.0}}},
                         {"residue", json{{"a", 1.0}, {"q", 2.0}}}}},
                   {"grid", json{{"lo", 20.0}, {"hi", 100.0}, {"n", 4}}}};
  CHECK(run("build", write_config(d.path, regge), d.path) == kExitPass);
  json art = read_json(d.path + "/artifact.json");
  CHECK(art.at("tag") == "fixed-pole");
  CHECK(art.at("cache").at("forward").size() == 4);

  const json dbl{{"amplitude", json{{"kind", "double-pole"}}},
                 {"grid", json{{"lo", 20.0}, {"hi", 100.0}, {"n", 3}}}};
  CHECK(run("build", write_config(d.path, dbl), d.path) == kExitPass);
  CHECK(read_json(d.path + "/artifact.json").at("tag") == "double-pole");

  const json khuri{{"amplitude", json{{"kind", "khuri"},
                                      {"sigma", 0.8},
                                      {"alpha_inf", -0.7},
                                      {"chi_level", 0.05}}},
                   {"grid", json{{"lo", 6.0}, {"hi", 12.0}, {"n", 3}}}};
  CHECK(run("build", write_config(d.path, khuri), d.path) == kExitPass);
  art = read_json(d.path + "/artifact.json");
  CHECK(art.at("tag") == "khuri");
  CHECK(art.at("parameters").at("intercept").get<double>() < 0.8);
}

TEST_CASE("build emits a positivity certificate for the template") {
  TempDir d("pos");
  const json cfg{{"amplitude", small_template()},
                 {"grid", json{{"lo", 10.0}, {"hi", 100.0}, {"n", 3}}}};
  CHECK(run("build", write_config(d.path, cfg), d.path) == kExitPass);
  const json art = read_json(d.path + "/artifact.json");
  CHECK(art.at("positivity").at("pass").get<bool>());
  CHECK(art.at("positivity").at("min_sample").get<double>() >= 0.0);
}

TEST_CASE("invalid configurations exit with the config error code") {
  TempDir d("bad");
  // froissart smear interval exceeding 1/kappa is rejected by name
  const json froi{{"amplitude", json{{"kind", "froissart"},
                                     {"kappa", 0.8},
                                     {"rho_hi", 1.3}}}};
  CHECK(run("build", write_config(d.path, froi), d.path) == kExitConfigError);

  const json unknown{{"amplitude", json{{"kind", "nope"}}}};
  CHECK(run("build", write_config(d.path, unknown), d.path) == kExitConfigError);

  const json badgrid{{"amplitude", small_template()},
                     {"grid", json{{"lo", -1.0}}}};
  CHECK(run("build", write_config(d.path, badgrid), d.path) == kExitConfigError);

  CHECK(run("build", d.path + "/missing.json", d.path) == kExitConfigError);
  std::ofstream(d.path + "/broken.json") << "{ not json";
  CHECK(run("build", d.path + "/broken.json", d.path) == kExitConfigError);
  CHECK(run("explode", write_config(d.path, json{{"amplitude", small_template()}}),
            d.path) == kExitConfigError);
}

TEST_CASE("iterate: trivial fixed point, divergence, resume") {
  TempDir d("iter");
  // omega = 0: psi stays zero and converges immediately
  const json trivial{{"fixpoint", small_fixpoint(0.0)}};
  CHECK(run("iterate", write_config(d.path, trivial), d.path) == kExitPass);
  json conv = read_json(d.path + "/convergence.json");
  CHECK(conv.at("status") == "converged");
  CHECK(conv.at("iterations").get<int>() == 1);
  CHECK(conv.at("support_leak").get<double>() == 0.0);

  // an oversized driving term diverges -> exit 3
  TempDir d2("div");
  json divergent{{"fixpoint", small_fixpoint(1e5, 1e-12)}};
  divergent["fixpoint"]["max_iterations"] = 8;
  CHECK(run("iterate", write_config(d2.path, divergent), d2.path) ==
        kExitNoConvergence);
  CHECK(read_json(d2.path + "/convergence.json").at("status") == "diverged");

  // budget of one iteration -> exit 3, then resume to convergence
  TempDir d3("resume");
  json one{{"fixpoint", small_fixpoint(0.3)}};
  one["fixpoint"]["max_iterations"] = 1;
  one["fixpoint"]["checkpoint_every"] = 1;
  const std::string cfg1 = write_config(d3.path, one);
  CHECK(run("iterate", cfg1, d3.path) == kExitNoConvergence);
  CHECK(read_json(d3.path + "/convergence.json").at("status") ==
        "max_iterations");
  json full{{"fixpoint", small_fixpoint(0.3)}};
  const std::string cfg2 = write_config(d3.path, full);
  CHECK(run("iterate", cfg2, d3.path, /*resume=*/true) == kExitPass);
  conv = read_json(d3.path + "/convergence.json");
  CHECK(conv.at("status") == "converged");
  CHECK(conv.at("iterations").get<int>() > 1);
  for (double r : conv.at("ratios").get<std::vector<double>>())
    CHECK(r < 1.0);

  // the converged checkpoint feeds the check command
  const json chk{{"amplitude", json{{"kind", "fixpoint"},
                                    {"checkpoint", d3.path + "/checkpoint.bin"}}},
                 {"checks", json::array({"elastic"})},
                 {"tol_elastic", 5e-3},
                 {"pw_grid", json{{"lo", 6.0}, {"hi", 15.0}, {"n", 4}}},
                 {"l_max", 4}};
  CHECK(run("check", write_config(d3.path, chk), d3.path) == kExitPass);
  const json cert = read_json(d3.path + "/certificate.json");
  CHECK(cert.at("pass").get<bool>());
}

TEST_CASE("check aggregates certificates and exit codes") {
  TempDir d("check");
  json cfg{{"amplitude", small_template()},
           {"checks", json::array({"crossing", "inelastic", "linear"})},
           {"crossing_points", 20},
           {"pw_grid", json{{"lo", 5.0}, {"hi", 60.0}, {"n", 5}}},
           {"l_max", 4}};
  const std::string path = write_config(d.path, cfg);
  CHECK(run("check", path, d.path) == kExitPass);
  json cert = read_json(d.path + "/certificate.json");
  CHECK(cert.at("pass").get<bool>());
  CHECK(cert.at("checks").size() == 3);
  for (const auto& c : cert.at("checks")) CHECK(c.at("pass").get<bool>());

  // an unattainable tolerance turns the crossing check into a failure
  CHECK(run("check", path, d.path, false, 1e-30) == kExitCheckFailure);
  cert = read_json(d.path + "/certificate.json");
  CHECK_FALSE(cert.at("pass").get<bool>());
  CHECK(cert.at("worst").get<double>() > 0.0);

  // unknown check names are config errors
  cfg["checks"] = json::array({"crossing", "nonsense"});
  CHECK(run("check", write_config(d.path, cfg), d.path) == kExitConfigError);
}

TEST_CASE("report tables are byte-identical across runs") {
  TempDir d("rep");
  const json cfg{{"amplitude", small_template()},
                 {"grid", json{{"lo", 10.0}, {"hi", 1e3}, {"n", 5}}},
                 {"peak_s", 100.0},
                 {"peak_n", 9},
                 {"pw_grid", json{{"lo", 4.5}, {"hi", 30.0}, {"n", 4}}},
                 {"l_max", 4},
                 {"fit_window", json{{"lo", 1e3}, {"hi", 1e6}, {"n", 8}}}};
  const std::string path = write_config(d.path, cfg);
  CHECK(run("report", path, d.path + "/a") == kExitPass);
  CHECK(run("report", path, d.path + "/b") == kExitPass);
  for (const char* f :
       {"sigma_tot.csv", "forward_peak.csv", "pw.csv", "fits.json"}) {
    const std::string fa = read_file(d.path + "/a/" + f);
    CHECK(fa == read_file(d.path + "/b/" + f));
    CHECK(fa.size() > 16); // populated tables
  }
  // sigma_tot decreases for the positive template at large s
  std::istringstream sig(read_file(d.path + "/a/sigma_tot.csv"));
  std::string line;
  std::getline(sig, line);
  CHECK(line == "s,sigma_tot");
  double prev = 1e300;
  int rows = 0;
  while (std::getline(sig, line)) {
    const double v = std::stod(line.substr(line.find(',') + 1));
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
    ++rows;
  }
  CHECK(rows == 5);

  // an explicitly empty table list produces header-only files
  json empty = cfg;
  empty["tables"] = json::array();
  CHECK(run("report", write_config(d.path, empty), d.path + "/e") == kExitPass);
  CHECK(read_file(d.path + "/e/sigma_tot.csv") == "s,sigma_tot\n");
  CHECK(read_file(d.path + "/e/forward_peak.csv") == "t,re_f,im_f\n");
  CHECK(read_file(d.path + "/e/pw.csv") == "s,l,re_a,im_a\n");
}
