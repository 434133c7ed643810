#include "vmeasure/vmeasure.h"

#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "verify/checks.hpp"
#include "verify/fuzz.hpp"
#include "verify/gallery.hpp"

struct vm_scenarios {
  std::vector<vmeasure::verify::Scenario> items;
};

struct vm_report {
  vmeasure::verify::Report report;
};

namespace {

using namespace vmeasure;
using verify::Json;

thread_local std::string g_last_error;

template <class Fn>
vm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<vm_status>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VM_ERR_INTERNAL;
  }
}

vm_status invalid(const char* what) {
  g_last_error = what;
  return VM_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

verify::RunOptions to_run_options(const vm_run_options* options) {
  verify::RunOptions out;
  if (!options) return out;
  out.approximate = options->approximate != 0;
  out.seed = options->seed;
  if (options->dual_samples) out.dual_samples = options->dual_samples;
  if (options->jobs) out.jobs = options->jobs;
  return out;
}

Json compute(const Json& request) {
  using namespace serial;
  if (!request.is_object() || !request.contains("op") || !request["op"].is_string())
    throw ValidationError("field 'op': missing");
  const std::string op = request["op"];
  if (!request.contains("space")) throw ValidationError("field 'space': missing");
  if (!request.contains("target")) throw ValidationError("field 'target': missing");
  if (!request.contains("F")) throw ValidationError("field 'F': missing");
  const AtomicMeasureSpace space = read_space(request["space"], "space");
  const Target target = read_target(request["target"], "target");
  const VectorFunction f = read_function(request["F"], target, "F");
  auto set = [&] {
    return request.contains("set") ? read_set(request["set"], "set") : RepresentableSet::all();
  };
  auto multiplier = [&] {
    if (!request.contains("g")) throw ValidationError("field 'g': missing");
    return read_sequence(request["g"], "g");
  };
  if (op == "decide") {
    const auto v = pettis_decide(f, space);
    return Json{{"bochner", v.bochner}, {"pettis", v.pettis}, {"dunford", v.dunford},
                {"dunford_norm", write(v.dunford_norm)}, {"bochner_norm", write(v.bochner_norm)},
                {"witness", v.witness}};
  }
  if (op == "local") {
    const auto l = locally_integrable(f, space);
    return Json{{"locally_pettis", l.locally_pettis}, {"locally_bochner", l.locally_bochner}};
  }
  const DensityMeasure nu(f, space);
  if (op == "evaluate") return Json{{"value", write(nu.evaluate(set()))}};
  if (op == "variation") return Json{{"value", write(nu.variation(set()))}};
  if (op == "variation_bruteforce") {
    const auto p = nu.variation_bruteforce(set());
    return Json{{"value", write(p.value)}, {"partition", p.partition}};
  }
  if (op == "semivariation") return Json{{"value", write(nu.semivariation(set()))}};
  if (op == "classify") return write(classify_multiplier(multiplier(), nu));
  if (op == "integrate") return Json{{"value", write(integrate(multiplier(), nu, set()))}};
  throw ValidationError("field 'op': unknown operation '" + op + "'");
}

}  // namespace

extern "C" {

void vm_run_options_init(vm_run_options* options) {
  if (!options) return;
  options->approximate = 0;
  options->seed = 0;
  options->dual_samples = static_cast<uint32_t>(vmeasure::verify::RunOptions{}.dual_samples);
  options->jobs = 1;
}

const char* vm_last_error(void) { return g_last_error.c_str(); }

const char* vm_status_name(vm_status status) {
  switch (status) {
    case VM_OK: return "OK";
    case VM_ERR_NOT_FOUND: return "NotFoundError";
    case VM_ERR_INTERNAL: return "InternalError";
    default: return vmeasure::error_code_name(static_cast<vmeasure::ErrorCode>(status));
  }
}

vm_status vm_scenarios_parse(const char* json, vm_scenarios** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] { *out = new vm_scenarios{vmeasure::verify::parse_scenarios(json)}; });
}

size_t vm_scenarios_count(const vm_scenarios* scenarios) { return scenarios ? scenarios->items.size() : 0; }

void vm_scenarios_free(vm_scenarios* scenarios) { delete scenarios; }

vm_status vm_run(const vm_scenarios* scenarios, const vm_run_options* options, const char* title,
                 vm_report** out) {
  if (!scenarios || !out) return invalid("null argument");
  return guarded([&] {
    *out = new vm_report{vmeasure::verify::run_scenarios(scenarios->items, to_run_options(options),
                                                         title ? title : "verify")};
  });
}

size_t vm_gallery_count(void) { return vmeasure::verify::gallery().size(); }

const char* vm_gallery_name(size_t index) {
  const auto& g = vmeasure::verify::gallery();
  return index < g.size() ? g[index].name.c_str() : nullptr;
}

const char* vm_gallery_summary(size_t index) {
  const auto& g = vmeasure::verify::gallery();
  return index < g.size() ? g[index].summary.c_str() : nullptr;
}

vm_status vm_gallery_run(const char* name, const vm_run_options* options, vm_report** out) {
  if (!out) return invalid("null argument");
  std::vector<vmeasure::verify::Scenario> scenarios;
  if (name) {
    const auto* entry = vmeasure::verify::find_gallery_entry(name);
    if (!entry) {
      g_last_error = std::string("no gallery entry named '") + name + "'";
      return VM_ERR_NOT_FOUND;
    }
    scenarios = entry->scenarios;
  } else {
    for (const auto& e : vmeasure::verify::gallery())
      scenarios.insert(scenarios.end(), e.scenarios.begin(), e.scenarios.end());
  }
  return guarded([&] {
    *out = new vm_report{
        vmeasure::verify::run_scenarios(scenarios, to_run_options(options), name ? name : "gallery")};
  });
}

vm_status vm_fuzz(uint64_t seed, size_t cases, const vm_run_options* options, vm_report** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    vmeasure::verify::FuzzOptions f;
    f.seed = seed;
    f.cases = cases;
    f.run = to_run_options(options);
    *out = new vm_report{vmeasure::verify::fuzz(f)};
  });
}

int vm_report_passed(const vm_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t vm_report_checks(const vm_report* report) { return report ? report->report.records.size() : 0; }

size_t vm_report_failures(const vm_report* report) { return report ? report->report.failures() : 0; }

vm_status vm_report_text(const vm_report* report, char** out) {
  if (!report || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(report->report.text()); });
}

vm_status vm_report_json(const vm_report* report, char** out) {
  if (!report || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(report->report.json()); });
}

void vm_report_free(vm_report* report) { delete report; }

vm_status vm_compute(const char* request_json, char** out) {
  if (!request_json || !out) return invalid("null argument");
  return guarded([&] {
    Json request;
    try {
      request = Json::parse(request_json);
    } catch (const Json::parse_error& e) {
      throw vmeasure::ParseError(std::string("malformed JSON: ") + e.what());
    }
    *out = copy_string(compute(request).dump() + "\n");
  });
}

void vm_string_free(char* s) { delete[] s; }

}  // extern "C"
