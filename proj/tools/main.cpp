#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "vmeasure/vmeasure.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string format = "text";
  bool approx = false;
  uint64_t seed = 0;
  uint32_t dual_samples = 0;
  uint32_t jobs = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_seed) {
  cmd->add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--approx", c.approx, "Euclidean norms as doubles (tolerance 1e-9)");
  cmd->add_option("--dual-samples", c.dual_samples, "dual-ball samples per set");
  cmd->add_option("--jobs", c.jobs, "scenarios run concurrently")->check(CLI::PositiveNumber);
  if (with_seed) cmd->add_option("--seed", c.seed, "sampling seed");
}

vm_run_options options_from(const Common& c) {
  vm_run_options o;
  vm_run_options_init(&o);
  o.approximate = c.approx ? 1 : 0;
  o.seed = c.seed;
  if (c.dual_samples) o.dual_samples = c.dual_samples;
  o.jobs = c.jobs;
  return o;
}

int input_error(vm_status status) {
  std::cerr << "error: " << vm_status_name(status) << ": " << vm_last_error() << "\n";
  return kExitInput;
}

int emit(vm_report* report, const std::string& format) {
  char* text = nullptr;
  const vm_status s = format == "json" ? vm_report_json(report, &text) : vm_report_text(report, &text);
  if (s != VM_OK) {
    vm_report_free(report);
    return input_error(s);
  }
  std::fputs(text, stdout);
  vm_string_free(text);
  const int code = vm_report_passed(report) ? kExitPass : kExitFail;
  vm_report_free(report);
  return code;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int run_verify(const std::string& path, const Common& c) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitInput;
  }
  vm_scenarios* scenarios = nullptr;
  if (vm_status s = vm_scenarios_parse(text.c_str(), &scenarios); s != VM_OK) return input_error(s);
  const vm_run_options o = options_from(c);
  vm_report* report = nullptr;
  const vm_status s = vm_run(scenarios, &o, path.c_str(), &report);
  vm_scenarios_free(scenarios);
  if (s != VM_OK) return input_error(s);
  return emit(report, c.format);
}

int run_gallery(const std::string& name, bool list, const Common& c) {
  if (list) {
    for (size_t i = 0; i < vm_gallery_count(); ++i)
      std::cout << vm_gallery_name(i) << "\t" << vm_gallery_summary(i) << "\n";
    return kExitPass;
  }
  const vm_run_options o = options_from(c);
  vm_report* report = nullptr;
  if (vm_status s = vm_gallery_run(name.empty() ? nullptr : name.c_str(), &o, &report); s != VM_OK)
    return input_error(s);
  return emit(report, c.format);
}

int run_fuzz(uint64_t seed, size_t cases, const Common& c) {
  const vm_run_options o = options_from(c);
  vm_report* report = nullptr;
  if (vm_status s = vm_fuzz(seed, cases, &o, &report); s != VM_OK) return input_error(s);
  return emit(report, c.format);
}

int run_compute(const std::string& path) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitInput;
  }
  char* out = nullptr;
  if (vm_status s = vm_compute(text.c_str(), &out); s != VM_OK) return input_error(s);
  std::fputs(out, stdout);
  vm_string_free(out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of vector measures with densities"};
  app.require_subcommand(1);

  Common verify_opts, gallery_opts, fuzz_opts;
  std::string file, gallery_name, compute_file;
  bool list = false;
  uint64_t fuzz_seed = 0;
  size_t cases = 100;

  auto* verify = app.add_subcommand("verify", "run the checks of a scenario file");
  verify->add_option("file", file, "scenario JSON file ('-' for stdin)")->required();
  add_common(verify, verify_opts, true);

  auto* gallery = app.add_subcommand("gallery", "run the built-in counterexamples");
  gallery->add_option("name", gallery_name, "gallery entry (all when omitted)");
  gallery->add_flag("--list", list, "list the entries");
  add_common(gallery, gallery_opts, true);

  auto* fuzz = app.add_subcommand("fuzz", "run generated scenarios through every invariant");
  fuzz->add_option("--seed", fuzz_seed, "generator seed")->required();
  fuzz->add_option("--cases", cases, "number of scenarios")->required();
  add_common(fuzz, fuzz_opts, false);

  auto* compute = app.add_subcommand("compute", "evaluate one JSON request");
  compute->add_option("file", compute_file, "request JSON file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*verify) return run_verify(file, verify_opts);
  if (*gallery) return run_gallery(gallery_name, list, gallery_opts);
  if (*fuzz) {
    fuzz_opts.seed = fuzz_seed;
    return run_fuzz(fuzz_seed, cases, fuzz_opts);
  }
  return run_compute(compute_file);
}
