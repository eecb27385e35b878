// llg: command-line front end for the framing identity suites.
//
//   llg list
//   llg eval <source> --tensor NAME --at c1,c2,... [--to c1,c2,...]
//   llg constants <source> [options]
//   llg verify <source> [options]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "llg/catalog.hpp"
#include "llg/error.hpp"
#include "llg/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  llg::RunConfig config;
  std::string format = "text";
  std::string pairing;
  std::string tensor;
  std::vector<double> at;
  std::vector<double> to;
  std::string out;
};

void add_run_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("source", o.config.source, "example:<name> or a framing JSON file")->required();
  cmd.add_option("--points", o.config.points, "sample points")->capture_default_str();
  cmd.add_option("--seed", o.config.seed, "SplitMix64 seed")->capture_default_str();
  cmd.add_option("--tol", o.config.tol, "defect tolerance (env LLG_TOL sets the default)");
  cmd.add_option("--pairing", o.pairing, "model pairing for J and omega")
      ->check(CLI::IsMember({"interleaved", "split"}));
  cmd.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--out", o.out, "write the report to this file");
}

void apply_env_tol(Options& o) {
  const char* env = std::getenv("LLG_TOL");
  if (env == nullptr || *env == '\0') return;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) throw llg::InvalidArgument(fmt::format("LLG_TOL is not a number: '{}'", env));
  o.config.tol = v;
}

void finish_config(Options& o) {
  if (!o.pairing.empty()) o.config.pairing = o.pairing == "split" ? llg::Pairing::kSplit : llg::Pairing::kInterleaved;
  o.config.format = o.format == "json" ? llg::OutputFormat::kJson : llg::OutputFormat::kText;
  o.config.validate();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw llg::InvalidArgument("cannot open '" + out + "' for writing");
  file << text;
}

int cmd_list() {
  for (const llg::CatalogEntry& e : llg::catalog()) {
    std::cout << fmt::format("{} dim={} {}\n", e.spec.name, e.spec.dim, e.expect_flat ? "flat" : "nonflat");
  }
  return kExitPass;
}

int cmd_eval(const Options& o) {
  const llg::Framing f = llg::load_source(o.config.source);
  std::optional<llg::Point> to;
  if (!o.to.empty()) to = o.to;
  const llg::Tensor t = llg::eval_tensor(f, o.tensor, o.at, to, o.config.convention());
  const std::string text = o.config.format == llg::OutputFormat::kJson ? llg::render_tensor_json(o.tensor, o.at, t)
                                                                        : llg::render_tensor_text(o.tensor, o.at, t);
  emit(text, o.out);
  return kExitPass;
}

int cmd_report(const Options& o, bool full) {
  const llg::Framing f = llg::load_source(o.config.source);
  const llg::VerificationReport r = full ? llg::run_verify(f, o.config) : llg::run_constants(f, o.config);
  emit(o.config.format == llg::OutputFormat::kJson ? llg::render_json(r) : llg::render_text(r), o.out);
  return r.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of framings, their torsion and canonical structures"};
  app.require_subcommand(1);

  Options o;
  try {
    apply_env_tol(o);
  } catch (const llg::Error& e) {
    std::cerr << "llg: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* list = app.add_subcommand("list", "list catalog framings");

  CLI::App* eval = app.add_subcommand("eval", "evaluate one tensor at a point");
  add_run_flags(*eval, o);
  eval->add_option("--tensor", o.tensor, "tensor name")->required()->check(CLI::IsMember(llg::eval_tensor_names()));
  eval->add_option("--at", o.at, "point c1,c2,...")->required()->delimiter(',');
  eval->add_option("--to", o.to, "second point, for epsilon")->delimiter(',');

  CLI::App* constants = app.add_subcommand("constants", "flatness certificate and model-space constants");
  add_run_flags(*constants, o);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_run_flags(*verify, o);
  verify->add_flag("--fd-check", o.config.fd_check, "cross-check jets against finite differences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list();
    finish_config(o);
    if (eval->parsed()) return cmd_eval(o);
    if (constants->parsed()) return cmd_report(o, false);
    return cmd_report(o, true);
  } catch (const llg::Error& e) {
    std::cerr << "llg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "llg: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
