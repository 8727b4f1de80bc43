// lindyn — command line front end for the linear-dynamics experiments.
//
// One command = one experiment = one output directory with report.json and
// data.csv. Every config key can be set in a config file and overridden on
// the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "lindyn/config.hpp"
#include "lindyn/runner.hpp"

namespace {

struct Override {
  std::string section;
  std::string key;
  std::string value;
  bool set = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lindyn: chaos experiments for weighted backward shifts"};
  app.require_subcommand(1);

  std::string config_path;
  std::string weights;
  std::string declared_sup;
  std::string out_dir;
  std::string seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (flat key/value with sections)");
    sub->add_option("--weights", weights,
                    "weight rule: constant(c) | ratio_plus_one | "
                    "scaled_ratio(c) | list([...],tail=constant(c))");
    sub->add_option("--declared-sup", declared_sup, "override the declared sup of the weights");
    sub->add_option("--out", out_dir, "output directory (default: run)");
    sub->add_option("--seed", seed, "seed echoed into the report");
  };

  // (section, key, flag, help) tuples per command keep the CLI and the
  // config file in one-to-one correspondence.
  struct Opt {
    const char* flag;
    const char* key;
    const char* help;
  };
  const std::vector<std::pair<std::string, std::vector<Opt>>> commands = {
      {"orbit",
       {{"--vector", "vector", "start vector as JSON [[re,im],...]"},
        {"--basis", "basis", "start from the basis vector e_k"},
        {"--n-max", "n_max", "orbit length (default 32)"}}},
      {"eigen",
       {{"--omega-re", "omega_re", "eigenvalue real part"},
        {"--omega-im", "omega_im", "eigenvalue imaginary part"},
        {"--order", "order", "derivative order (default 0)"},
        {"--trunc-len", "trunc_len", "truncation length (default 64)"},
        {"--rho-margin", "rho_margin", "tail ratio margin in (0,1)"}}},
      {"radius", {{"--probe-len", "probe_len", "probe length (default 512)"}}},
      {"mixing",
       {{"--x-part", "x_part", "inner part: re,im:cre,cim; ... (|lambda|<1)"},
        {"--y-part", "y_part", "outer part: re,im:cre,cim; ... (|rho|>1)"},
        {"--eps", "eps", "approach tolerance (default 0.01)"},
        {"--trunc-len", "trunc_len", "truncation length (default 400)"}}},
      {"periodic",
       {{"--p", "p", "root of unity numerator"},
        {"--q", "q", "root of unity denominator"},
        {"--depth", "depth", "generalized kernel depth (default 1)"},
        {"--trunc-len", "trunc_len", "truncation length (default 200)"},
        {"--tol", "tol", "period residual tolerance (default 1e-8)"},
        {"--target", "target", "target vector as JSON [[re,im],...]"}}},
      {"witness",
       {{"--gamma", "gamma", "growth rate, > 1"},
        {"--m", "m", "growth horizon"}}},
      {"scramble",
       {{"--gamma", "gamma", "norm-unimodal rate, > 1"},
        {"--K", "K", "construction depth (default 4)"},
        {"--eps", "eps", "eps rule: pow2 | geometric(q) | list(...)"},
        {"--P", "P", "pair family size (default 2)"},
        {"--tau", "tau", "comma list of tau values (default 1)"}}},
      {"stats",
       {{"--x", "x", "first vector as JSON [[re,im],...]"},
        {"--y", "y", "second vector as JSON [[re,im],...]"},
        {"--tau", "tau", "comma list of tau values"},
        {"--window", "window", "comma list of sample points n"}}},
  };

  std::vector<std::vector<Override>> overrides(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    CLI::App* sub = app.add_subcommand(commands[c].first, "");
    add_common(sub);
    overrides[c].resize(commands[c].second.size());
    for (std::size_t o = 0; o < commands[c].second.size(); ++o) {
      const Opt& opt = commands[c].second[o];
      overrides[c][o].section = commands[c].first;
      overrides[c][o].key = opt.key;
      sub->add_option(opt.flag, overrides[c][o].value, opt.help)
          ->each([&overrides, c, o](const std::string&) {
            overrides[c][o].set = true;
          });
    }
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  std::size_t chosen = 0;
  for (std::size_t c = 0; c < subs.size(); ++c) {
    if (subs[c]->parsed()) chosen = c;
  }
  const std::string command = commands[chosen].first;

  lindyn::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) {
      cfg = lindyn::ExperimentConfig::load_file(config_path);
    }
    if (!weights.empty()) cfg.set("common", "weights", weights);
    if (!declared_sup.empty()) cfg.set("common", "declared_sup", declared_sup);
    if (!out_dir.empty()) cfg.set("common", "out", out_dir);
    if (!seed.empty()) cfg.set("common", "seed", seed);
    for (const Override& ov : overrides[chosen]) {
      if (ov.set) cfg.set(ov.section, ov.key, ov.value);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  const lindyn::RunResult res = lindyn::run(command, cfg);
  if (res.exit_status == 0) {
    std::printf("ok: %s -> %s\n", command.c_str(), res.report_path.c_str());
  } else {
    std::fprintf(stderr, "error: %s\n", res.message.c_str());
  }
  return res.exit_status;
}
