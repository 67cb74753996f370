#include "qtorb/qtorb.h"

#include "error.hpp"
#include "json_io.hpp"
#include "model.hpp"
#include "report.hpp"

#include <cstring>
#include <new>
#include <string>

struct qtorb_model {
  qtorb::CharacteristicModel value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qtorb_status status_of(const qtorb::Error& e) {
  switch (e.code()) {
    case qtorb::ErrorCode::InvalidModel:
      return QTORB_ERR_VALIDATION;
    case qtorb::ErrorCode::InvalidArgument:
      return QTORB_ERR_USAGE;
    case qtorb::ErrorCode::Internal:
      return QTORB_ERR_INTERNAL;
  }
  return QTORB_ERR_INTERNAL;
}

qtorb_status fail(qtorb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Run `body` (which fills the out-parameters) under the common exception to
// status mapping.
template <typename Body>
qtorb_status guarded(Body&& body) {
  try {
    return body();
  } catch (const qtorb::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QTORB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QTORB_ERR_INTERNAL, std::string("unexpected error: ") + e.what());
  }
}

qtorb_status require(const void* p, const char* what) {
  if (p == nullptr) {
    return fail(QTORB_ERR_USAGE, std::string(what) + " must not be NULL");
  }
  return QTORB_OK;
}

// Shared shape of the model-only report entry points.
template <typename Fn>
qtorb_status model_report(const qtorb_model* model, int as_json, char** out_report,
                          Fn&& fn) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  return guarded([&]() -> qtorb_status {
    *out_report = dup_string(fn(model->value, qtorb::ReportOptions{as_json != 0}));
    return QTORB_OK;
  });
}

} // namespace

extern "C" {

const char* qtorb_last_error(void) { return g_last_error.c_str(); }

void qtorb_string_free(char* s) { delete[] s; }

qtorb_status qtorb_model_parse(const char* json_text, qtorb_model** out_model) {
  if (qtorb_status s = require(json_text, "json_text"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_model, "out_model"); s != QTORB_OK) {
    return s;
  }
  *out_model = nullptr;
  return guarded([&]() -> qtorb_status {
    qtorb::CharacteristicModel m = qtorb::parse_model_or_throw(json_text);
    *out_model = new qtorb_model{std::move(m)};
    return QTORB_OK;
  });
}

void qtorb_model_free(qtorb_model* model) { delete model; }

qtorb_status qtorb_model_write(const qtorb_model* model, char** out_json) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_json, "out_json"); s != QTORB_OK) {
    return s;
  }
  *out_json = nullptr;
  return guarded([&]() -> qtorb_status {
    *out_json = dup_string(qtorb::write_model_file(model->value));
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_validate(const char* json_text, int as_json,
                                   char** out_report) {
  if (qtorb_status s = require(json_text, "json_text"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  return guarded([&]() -> qtorb_status {
    bool valid = false;
    const std::string report =
        qtorb::validate_report_text(json_text, {as_json != 0}, &valid);
    *out_report = dup_string(report);
    if (!valid) {
      g_last_error = "model validation failed";
      return QTORB_ERR_VALIDATION;
    }
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_info(const qtorb_model* model, int as_json, char** out_report) {
  return model_report(model, as_json, out_report,
                      [](const auto& m, const auto& opt) { return qtorb::info_report(m, opt); });
}

qtorb_status qtorb_report_sectors(const qtorb_model* model, int as_json,
                                  char** out_report) {
  return model_report(model, as_json, out_report, [](const auto& m, const auto& opt) {
    return qtorb::sectors_report(m, opt);
  });
}

qtorb_status qtorb_report_betti(const qtorb_model* model, int as_json, char** out_report) {
  return model_report(model, as_json, out_report, [](const auto& m, const auto& opt) {
    return qtorb::betti_report(m, opt);
  });
}

qtorb_status qtorb_report_euler(const qtorb_model* model, int as_json, char** out_report) {
  return model_report(model, as_json, out_report, [](const auto& m, const auto& opt) {
    return qtorb::euler_report(m, opt);
  });
}

qtorb_status qtorb_report_quasi_sl(const qtorb_model* model, int as_json,
                                   char** out_report) {
  return model_report(model, as_json, out_report, [](const auto& m, const auto& opt) {
    return qtorb::quasi_sl_report_text(m, opt);
  });
}

qtorb_status qtorb_report_blowup(const qtorb_model* model, const char* face,
                                 const char* lambda0, int as_json, char** out_report,
                                 qtorb_model** out_model) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(face, "face"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(lambda0, "lambda0"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  if (out_model != nullptr) {
    *out_model = nullptr;
  }
  return guarded([&]() -> qtorb_status {
    qtorb::CharacteristicModel result_model;
    const std::string report = qtorb::blowup_report(
        model->value, face, lambda0, qtorb::ReportOptions{as_json != 0}, &result_model);
    *out_report = dup_string(report);
    if (out_model != nullptr) {
      *out_model = new qtorb_model{std::move(result_model)};
    }
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_crepant_candidates(const qtorb_model* model, const char* face,
                                             int as_json, char** out_report) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(face, "face"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  return guarded([&]() -> qtorb_status {
    *out_report = dup_string(qtorb::crepant_candidates_report(
        model->value, face, qtorb::ReportOptions{as_json != 0}));
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_mckay(const qtorb_model* model, const char* face,
                                const char* lambda0, int as_json, char** out_report) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(face, "face"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(lambda0, "lambda0"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  return guarded([&]() -> qtorb_status {
    *out_report = dup_string(qtorb::mckay_report_text(
        model->value, face, lambda0, qtorb::ReportOptions{as_json != 0}));
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_resolve(const qtorb_model* model, int as_json,
                                  char** out_report, qtorb_model** out_model) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  if (out_model != nullptr) {
    *out_model = nullptr;
  }
  return guarded([&]() -> qtorb_status {
    qtorb::CharacteristicModel final_model;
    const std::string report = qtorb::resolve_report(
        model->value, qtorb::ReportOptions{as_json != 0}, &final_model);
    *out_report = dup_string(report);
    if (out_model != nullptr) {
      *out_model = new qtorb_model{std::move(final_model)};
    }
    return QTORB_OK;
  });
}

qtorb_status qtorb_report_product(const qtorb_model* model, const char* s1,
                                  const char* s2, int as_json, char** out_report) {
  if (qtorb_status s = require(model, "model"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(s1, "s1"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(s2, "s2"); s != QTORB_OK) {
    return s;
  }
  if (qtorb_status s = require(out_report, "out_report"); s != QTORB_OK) {
    return s;
  }
  *out_report = nullptr;
  return guarded([&]() -> qtorb_status {
    *out_report = dup_string(qtorb::product_report(model->value, s1, s2,
                                                   qtorb::ReportOptions{as_json != 0}));
    return QTORB_OK;
  });
}

} // extern "C"
