#include "nabelh1.h"

#include "report.hpp"

#include <cstdlib>
#include <cstring>

using namespace nabelh1;

struct nh1_document {
  Document doc;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_kind;

nh1_status status_for(const Error& e) {
  if (e.kind == "UnknownCommand" || e.kind == "MissingObject" || e.kind == "BadOptions")
    return NH1_ERROR_BAD_ARGUMENT;
  if (dynamic_cast<const ParseError*>(&e)) return NH1_ERROR_PARSE;
  if (dynamic_cast<const ReferenceError*>(&e)) return NH1_ERROR_REFERENCE;
  if (dynamic_cast<const SizeGuardError*>(&e)) return NH1_ERROR_SIZE_GUARD;
  if (dynamic_cast<const ValidationError*>(&e)) return NH1_ERROR_VALIDATION;
  return NH1_ERROR_COMPUTE;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nh1_status bad_argument(const char* msg) {
  g_error = msg;
  g_error_kind = "BadArgument";
  return NH1_ERROR_BAD_ARGUMENT;
}

template <typename Fn>
nh1_status wrap(Fn&& fn) {
  try {
    g_error.clear();
    g_error_kind.clear();
    return fn();
  } catch (const Error& e) {
    g_error = e.what();
    g_error_kind = e.kind;
    return status_for(e);
  } catch (const std::exception& e) {
    g_error = e.what();
    g_error_kind = "Internal";
    return NH1_ERROR_COMPUTE;
  }
}

CommandOptions parse_options(const char* options_json) {
  CommandOptions opts;
  if (options_json == nullptr || *options_json == '\0') return opts;
  nlohmann::json o;
  try {
    o = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("BadOptions", std::string("options: ") + e.what());
  }
  if (!o.is_object()) throw ValidationError("BadOptions", "options must be a JSON object");
  for (const auto& item : o.items()) {
    const std::string& key = item.key();
    const nlohmann::json& v = item.value();
    if (key == "object") {
      if (!v.is_string()) throw ValidationError("BadOptions", "'object' must be a string");
      opts.object = v.get<std::string>();
    } else if (key == "continuous_only") {
      if (!v.is_boolean()) throw ValidationError("BadOptions", "'continuous_only' must be a boolean");
      opts.continuous_only = v.get<bool>();
    } else if (key == "size_cap") {
      if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ValidationError("BadOptions", "'size_cap' must be an integer");
      long long cap = v.get<long long>();
      if (cap <= 0) throw ValidationError("BadOptions", "'size_cap' must be positive");
      opts.size_cap = (std::uint64_t)cap;
    } else if (key == "subgroup") {
      if (!v.is_array()) throw ValidationError("BadOptions", "'subgroup' must be an array");
      ElemSet s;
      for (const auto& x : v) {
        if (!x.is_number_integer())
          throw ValidationError("BadOptions", "'subgroup' must hold integers");
        s.push_back(x.get<int>());
      }
      opts.subgroup = sorted_unique(std::move(s));
    } else {
      throw ValidationError("BadOptions", "unknown option '" + key + "'");
    }
  }
  return opts;
}

}  // namespace

extern "C" {

nh1_status nh1_load_file(const char* path, nh1_document** out_doc) {
  if (path == nullptr || out_doc == nullptr) return bad_argument("null argument");
  *out_doc = nullptr;
  return wrap([&]() -> nh1_status {
    auto* d = new nh1_document{load_document_file(path)};
    *out_doc = d;
    return NH1_OK;
  });
}

nh1_status nh1_load_string(const char* text, nh1_document** out_doc) {
  if (text == nullptr || out_doc == nullptr) return bad_argument("null argument");
  *out_doc = nullptr;
  return wrap([&]() -> nh1_status {
    auto* d = new nh1_document{load_document_string(text)};
    *out_doc = d;
    return NH1_OK;
  });
}

void nh1_document_free(nh1_document* doc) { delete doc; }

nh1_status nh1_run(const nh1_document* doc, const char* command, const char* options_json,
                   char** out_report) {
  if (doc == nullptr || command == nullptr || out_report == nullptr)
    return bad_argument("null argument");
  *out_report = nullptr;
  return wrap([&]() -> nh1_status {
    CommandOptions opts = parse_options(options_json);
    nlohmann::ordered_json rep = run_command(doc->doc, command, opts);
    *out_report = dup_string(rep.dump(1) + "\n");
    if (*out_report == nullptr) {
      g_error = "out of memory";
      g_error_kind = "Internal";
      return NH1_ERROR_COMPUTE;
    }
    bool ok = rep.contains("ok") && rep["ok"].is_boolean() && rep["ok"].get<bool>();
    return ok ? NH1_OK : NH1_CHECKS_FAILED;
  });
}

nh1_status nh1_emit(const nh1_document* doc, char** out_text) {
  if (doc == nullptr || out_text == nullptr) return bad_argument("null argument");
  *out_text = nullptr;
  return wrap([&]() -> nh1_status {
    *out_text = dup_string(emit_document(doc->doc));
    if (*out_text == nullptr) {
      g_error = "out of memory";
      g_error_kind = "Internal";
      return NH1_ERROR_COMPUTE;
    }
    return NH1_OK;
  });
}

void nh1_string_free(char* s) { std::free(s); }

const char* nh1_last_error(void) { return g_error.c_str(); }
const char* nh1_last_error_kind(void) { return g_error_kind.c_str(); }

}  // extern "C"
