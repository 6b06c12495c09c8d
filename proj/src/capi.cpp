#include "arcspan.h"

#include <cstdlib>
#include <cstring>

#include "parallel.hpp"
#include "serialize.hpp"
#include "version.hpp"

struct arcspan_ctx {
  int n = 0;
  std::string err;
};

namespace {

// ownership crosses the C boundary, so pair malloc with arcspan_free's free
char* dup_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
arcspan_status guarded(arcspan_ctx* ctx, Fn fn) {
  if (!ctx) return ARCSPAN_EUSAGE;
  ctx->err.clear();
  try {
    return fn();
  } catch (const arcspan::usage_error& e) {
    ctx->err = e.what();
    return ARCSPAN_EUSAGE;
  } catch (const std::exception& e) {
    ctx->err = e.what();
    return ARCSPAN_EINTERNAL;
  }
}

arcspan_status deliver(arcspan_ctx* ctx, char** json_out, const std::string& doc,
                       arcspan_status on_success) {
  char* p = dup_out(doc);
  if (!p) {
    ctx->err = "out of memory";
    return ARCSPAN_EINTERNAL;
  }
  *json_out = p;
  return on_success;
}

}  // namespace

extern "C" {

const char* arcspan_version(void) { return arcspan::version_string; }

arcspan_status arcspan_open(int n, arcspan_ctx** out) {
  if (!out) return ARCSPAN_EUSAGE;
  *out = nullptr;
  try {
    arcspan::check_ambient(n);
  } catch (const std::exception&) {
    return ARCSPAN_EUSAGE;
  }
  arcspan_ctx* ctx = new (std::nothrow) arcspan_ctx;
  if (!ctx) return ARCSPAN_EINTERNAL;
  ctx->n = n;
  *out = ctx;
  return ARCSPAN_OK;
}

void arcspan_close(arcspan_ctx* ctx) { delete ctx; }

int arcspan_n(const arcspan_ctx* ctx) { return ctx ? ctx->n : 0; }

arcspan_status arcspan_set_jobs(arcspan_ctx* ctx, int jobs) {
  return guarded(ctx, [&] {
    if (jobs < 0) {
      ctx->err = "jobs must be >= 0";
      return ARCSPAN_EUSAGE;
    }
    arcspan::set_parallelism(jobs);
    return ARCSPAN_OK;
  });
}

const char* arcspan_last_error(const arcspan_ctx* ctx) {
  return ctx ? ctx->err.c_str() : "null context";
}

arcspan_status arcspan_enumerate(arcspan_ctx* ctx, const char* family,
                                 const char* stratum, char** json_out) {
  return guarded(ctx, [&] {
    if (!family || !json_out) {
      ctx->err = "family and json_out are required";
      return ARCSPAN_EUSAGE;
    }
    std::string doc =
        arcspan::enumerate_json(ctx->n, family, stratum ? stratum : "");
    return deliver(ctx, json_out, doc, ARCSPAN_OK);
  });
}

arcspan_status arcspan_matrix(arcspan_ctx* ctx, const char* kind, char** json_out) {
  return guarded(ctx, [&] {
    if (!kind || !json_out) {
      ctx->err = "kind and json_out are required";
      return ARCSPAN_EUSAGE;
    }
    return deliver(ctx, json_out, arcspan::matrix_json(ctx->n, kind), ARCSPAN_OK);
  });
}

arcspan_status arcspan_verify(arcspan_ctx* ctx, const char* suite, char** json_out) {
  return guarded(ctx, [&] {
    if (!suite || !json_out) {
      ctx->err = "suite and json_out are required";
      return ARCSPAN_EUSAGE;
    }
    bool all_pass = false;
    std::string doc = arcspan::verify_json(ctx->n, suite, all_pass);
    if (!all_pass) ctx->err = "verification failure; see the report document";
    return deliver(ctx, json_out, doc, all_pass ? ARCSPAN_OK : ARCSPAN_FAIL);
  });
}

arcspan_status arcspan_conjecture(arcspan_ctx* ctx, char** json_out) {
  return guarded(ctx, [&] {
    if (!json_out) {
      ctx->err = "json_out is required";
      return ARCSPAN_EUSAGE;
    }
    return deliver(ctx, json_out, arcspan::conjecture_json(ctx->n), ARCSPAN_OK);
  });
}

void arcspan_free(char* p) { std::free(p); }

}  // extern "C"
