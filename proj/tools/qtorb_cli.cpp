// qtorb command-line tool.
//
// A thin shim over the qtorb C API: reads the model file, dispatches to the
// matching qtorb_report_* entry point, prints the report, and maps
// qtorb_status values to process exit codes (0 ok, 1 validation, 2 usage,
// 3 internal).  All domain logic lives behind the C API.

#include <qtorb/qtorb.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct ModelGuard {
  qtorb_model* model = nullptr;
  ~ModelGuard() { qtorb_model_free(model); }
  ModelGuard() = default;
  ModelGuard(const ModelGuard&) = delete;
  ModelGuard& operator=(const ModelGuard&) = delete;
};

struct StringGuard {
  char* text = nullptr;
  ~StringGuard() { qtorb_string_free(text); }
  StringGuard() = default;
  StringGuard(const StringGuard&) = delete;
  StringGuard& operator=(const StringGuard&) = delete;
};

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return !in.bad();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return false;
  }
  out << text;
  out.flush();
  return out.good();
}

int report_error(qtorb_status status) {
  std::cerr << "error: " << qtorb_last_error() << "\n";
  return static_cast<int>(status);
}

// Loads and parses the model file shared by every subcommand except
// `validate`.  On failure prints diagnostics to stderr and stores the exit
// code in *exit_code.
bool load_model(const std::string& path, ModelGuard* guard, int* exit_code) {
  std::string text;
  if (!read_file(path, &text)) {
    std::cerr << "error: cannot read model file: " << path << "\n";
    *exit_code = 2;
    return false;
  }
  const qtorb_status status = qtorb_model_parse(text.c_str(), &guard->model);
  if (status != QTORB_OK) {
    *exit_code = report_error(status);
    return false;
  }
  return true;
}

// Prints the report (stdout) produced by a successful call, or the error
// (stderr) otherwise, and returns the process exit code.
int finish(qtorb_status status, const StringGuard& report) {
  if (status != QTORB_OK) {
    return report_error(status);
  }
  std::cout << report.text;
  return 0;
}

// Writes the model produced by blowup/resolve to `out_path` when requested.
int write_result_model(qtorb_model* model, const std::string& out_path) {
  if (out_path.empty()) {
    return 0;
  }
  StringGuard text;
  const qtorb_status status = qtorb_model_write(model, &text.text);
  if (status != QTORB_OK) {
    return report_error(status);
  }
  if (!write_file(out_path, text.text)) {
    std::cerr << "error: cannot write model file: " << out_path << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of omnioriented quasitoric orbifolds"};
  app.require_subcommand(1);

  std::string model_path;
  std::string face_arg;
  std::string lambda0_arg;
  std::string s1_arg;
  std::string s2_arg;
  std::string out_path;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("model", model_path, "Model JSON file")->required();
    sub->add_flag("--json", as_json, "Emit a machine-readable JSON report");
  };

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Check a model file and list diagnostics");
  add_common(cmd_validate);

  CLI::App* cmd_info = app.add_subcommand(
      "info", "Vertex group orders, signs, and the manifold flag");
  add_common(cmd_info);

  CLI::App* cmd_sectors =
      app.add_subcommand("sectors", "Twisted sectors with ages and degree shifts");
  add_common(cmd_sectors);

  CLI::App* cmd_betti =
      app.add_subcommand("betti", "Chen-Ruan Betti table and ordinary Betti numbers");
  add_common(cmd_betti);

  CLI::App* cmd_euler = app.add_subcommand(
      "euler", "Chen-Ruan Euler characteristic by both formulas");
  add_common(cmd_euler);

  CLI::App* cmd_quasi_sl =
      app.add_subcommand("quasi-sl", "Quasi-SL test with offending sectors");
  add_common(cmd_quasi_sl);

  CLI::App* cmd_blowup = app.add_subcommand(
      "blowup", "Blow up along a face with a chosen new characteristic vector");
  add_common(cmd_blowup);
  cmd_blowup->add_option("--face", face_arg, "Face as comma-separated facet names")
      ->required();
  cmd_blowup
      ->add_option("--lambda0", lambda0_arg,
                   "New facet's characteristic vector as comma-separated integers")
      ->required();
  cmd_blowup->add_option("--out", out_path, "Write the blown-up model file here");

  CLI::App* cmd_crepant = app.add_subcommand(
      "crepant-candidates", "Interior box elements over a face giving crepant blowups");
  add_common(cmd_crepant);
  cmd_crepant->add_option("--face", face_arg, "Face as comma-separated facet names")
      ->required();

  CLI::App* cmd_mckay = app.add_subcommand(
      "mckay", "Verify McKay-type invariant behaviour for one blowup");
  add_common(cmd_mckay);
  cmd_mckay->add_option("--face", face_arg, "Face as comma-separated facet names")
      ->required();
  cmd_mckay
      ->add_option("--lambda0", lambda0_arg,
                   "New facet's characteristic vector as comma-separated integers")
      ->required();

  CLI::App* cmd_resolve = app.add_subcommand(
      "resolve", "Greedy crepant-step resolution to a quasitoric manifold");
  add_common(cmd_resolve);
  cmd_resolve->add_option("--out", out_path, "Write the resolved model file here");

  CLI::App* cmd_product =
      app.add_subcommand("product", "Product of two twisted sectors");
  add_common(cmd_product);
  cmd_product
      ->add_option("--s1", s1_arg,
                   "First sector: '<face>:<lattice point>' or 'untwisted'")
      ->required();
  cmd_product
      ->add_option("--s2", s2_arg,
                   "Second sector: '<face>:<lattice point>' or 'untwisted'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int json_flag = as_json ? 1 : 0;

  if (*cmd_validate) {
    std::string text;
    if (!read_file(model_path, &text)) {
      std::cerr << "error: cannot read model file: " << model_path << "\n";
      return 2;
    }
    StringGuard report;
    const qtorb_status status =
        qtorb_report_validate(text.c_str(), json_flag, &report.text);
    if (status == QTORB_OK || status == QTORB_ERR_VALIDATION) {
      std::cout << report.text;
      return static_cast<int>(status);
    }
    return report_error(status);
  }

  ModelGuard model;
  int exit_code = 0;
  if (!load_model(model_path, &model, &exit_code)) {
    return exit_code;
  }

  StringGuard report;
  if (*cmd_info) {
    return finish(qtorb_report_info(model.model, json_flag, &report.text), report);
  }
  if (*cmd_sectors) {
    return finish(qtorb_report_sectors(model.model, json_flag, &report.text), report);
  }
  if (*cmd_betti) {
    return finish(qtorb_report_betti(model.model, json_flag, &report.text), report);
  }
  if (*cmd_euler) {
    return finish(qtorb_report_euler(model.model, json_flag, &report.text), report);
  }
  if (*cmd_quasi_sl) {
    return finish(qtorb_report_quasi_sl(model.model, json_flag, &report.text), report);
  }
  if (*cmd_blowup) {
    ModelGuard result;
    const qtorb_status status =
        qtorb_report_blowup(model.model, face_arg.c_str(), lambda0_arg.c_str(),
                            json_flag, &report.text, &result.model);
    if (status != QTORB_OK) {
      return report_error(status);
    }
    if (const int rc = write_result_model(result.model, out_path); rc != 0) {
      return rc;
    }
    std::cout << report.text;
    return 0;
  }
  if (*cmd_crepant) {
    return finish(qtorb_report_crepant_candidates(model.model, face_arg.c_str(),
                                                  json_flag, &report.text),
                  report);
  }
  if (*cmd_mckay) {
    return finish(qtorb_report_mckay(model.model, face_arg.c_str(),
                                     lambda0_arg.c_str(), json_flag, &report.text),
                  report);
  }
  if (*cmd_resolve) {
    ModelGuard result;
    const qtorb_status status = qtorb_report_resolve(model.model, json_flag,
                                                     &report.text, &result.model);
    if (status != QTORB_OK) {
      return report_error(status);
    }
    if (const int rc = write_result_model(result.model, out_path); rc != 0) {
      return rc;
    }
    std::cout << report.text;
    return 0;
  }
  if (*cmd_product) {
    return finish(qtorb_report_product(model.model, s1_arg.c_str(), s2_arg.c_str(),
                                       json_flag, &report.text),
                  report);
  }

  std::cerr << "error: no subcommand selected\n";
  return 2;
}
