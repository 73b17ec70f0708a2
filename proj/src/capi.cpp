#include "heredisg/heredisg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "error.hpp"
#include "query.hpp"
#include "verify.hpp"

struct hsg_quiver {
  hsg::QuiverPtr quiver;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

void clear_error() {
  last_error.clear();
  last_code.clear();
}

int set_error(const char* code, const std::string& message) {
  last_code = code;
  last_error = message;
  return HSG_USAGE;
}

/// Runs body, translating exceptions into HSG_USAGE plus the thread-local error.
template <class Body>
int guarded(Body&& body) {
  clear_error();
  try {
    return body();
  } catch (const hsg::Error& e) {
    return set_error(hsg::error_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error("internal", e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hsg_options options_or_default(const hsg_options* opts) {
  hsg_options o;
  hsg_default_options(&o);
  return opts ? *opts : o;
}

hsg::CheckOptions check_options(const hsg_options& o) {
  hsg::CheckOptions c;
  c.seed = o.seed;
  c.nmax = o.nmax;
  c.bound = o.bound;
  c.timing = o.timing != 0;
  if (o.has_window) c.window = std::make_pair(o.window_lo, o.window_hi);
  return c;
}

}  // namespace

extern "C" {

const char* hsg_version(void) { return "0.1.0"; }

void hsg_default_options(hsg_options* opts) {
  if (!opts) return;
  *opts = hsg_options{hsg::PrimeField::default_characteristic, 0, 3, 64, 0, 0, 0, 0};
}

const char* hsg_last_error(void) { return last_error.c_str(); }
const char* hsg_last_error_code(void) { return last_code.c_str(); }

hsg_quiver* hsg_quiver_load(const char* path) {
  hsg_quiver* out = nullptr;
  guarded([&] {
    if (!path) hsg::fail(hsg::ErrorCode::invalid_argument, "null quiver path");
    out = new hsg_quiver{hsg::Quiver::load(path)};
    return HSG_OK;
  });
  return out;
}

hsg_quiver* hsg_quiver_parse(const char* text) {
  hsg_quiver* out = nullptr;
  guarded([&] {
    if (!text) hsg::fail(hsg::ErrorCode::invalid_argument, "null quiver text");
    out = new hsg_quiver{hsg::Quiver::parse(text)};
    return HSG_OK;
  });
  return out;
}

void hsg_quiver_free(hsg_quiver* q) { delete q; }

int hsg_quiver_vertex_count(const hsg_quiver* q) { return q ? q->quiver->vertex_count() : 0; }

const char* const* hsg_suite_names(void) {
  static const auto names = [] {
    std::vector<const char*> v;
    for (const auto& s : hsg::suite_names()) v.push_back(s.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

int hsg_check(const hsg_quiver* q, const char* suite, const hsg_options* opts, char** report_json) {
  return guarded([&] {
    if (!q || !suite || !report_json) hsg::fail(hsg::ErrorCode::invalid_argument, "hsg_check: null argument");
    const hsg_options o = options_or_default(opts);
    auto reports = hsg::run_suite(suite, q->quiver, hsg::PrimeField(o.characteristic), check_options(o));
    *report_json = copy_string(hsg::reports_to_json(reports));
    for (const auto& r : reports)
      if (!r.ok()) return HSG_FAILED;
    return HSG_OK;
  });
}

int hsg_query(const hsg_quiver* q, const char* kind, const char* from, const char* to, const char* module,
              const hsg_options* opts, char** result_json) {
  return guarded([&] {
    if (!q || !kind || !result_json) hsg::fail(hsg::ErrorCode::invalid_argument, "hsg_query: null argument");
    const hsg_options o = options_or_default(opts);
    hsg::QueryArgs args;
    args.from = from ? from : "";
    args.to = to ? to : "";
    args.module = module ? module : "";
    args.bound = o.bound;
    args.seed = o.seed;
    *result_json = copy_string(hsg::run_query(kind, q->quiver, hsg::PrimeField(o.characteristic), args));
    return HSG_OK;
  });
}

int hsg_hom_ext(const hsg_quiver* q, const char* module_a, const char* module_b, uint32_t characteristic, int64_t* hom,
                int64_t* ext1) {
  return guarded([&] {
    if (!q || !module_a || !module_b) hsg::fail(hsg::ErrorCode::invalid_argument, "hsg_hom_ext: null argument");
    hsg::PrimeField f(characteristic);
    auto a = hsg::parse_module(q->quiver, module_a, f);
    auto b = hsg::parse_module(q->quiver, module_b, f);
    if (hom) *hom = static_cast<int64_t>(hsg::hom_dimension(a, b));
    if (ext1) *ext1 = static_cast<int64_t>(hsg::ext1_dimension(a, b));
    return HSG_OK;
  });
}

int64_t hsg_euler_form(const hsg_quiver* q, const int64_t* a, const int64_t* b) {
  if (!q || !a || !b) return 0;
  const auto n = static_cast<std::size_t>(q->quiver->vertex_count());
  return hsg::euler_form(*q->quiver, std::vector<std::int64_t>(a, a + n), std::vector<std::int64_t>(b, b + n));
}

void hsg_string_free(char* s) { std::free(s); }

}  // extern "C"
