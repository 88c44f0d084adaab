#include "nib/nib.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "nib/field_file.hpp"
#include "nib/fixture.hpp"

struct nib_field {
  nib::ValidatedField field;
};

struct nib_result {
  std::shared_ptr<const nib_field> field;
  nib::NIBResult result;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& what) {
  last_error = what;
  return code;
}

template <typename F>
int guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const nib::Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NIB_E_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(NIB_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int give(char** out, const std::string& s) {
  if (!out) return fail(NIB_E_NULL_POINTER, "null output pointer");
  *out = dup(s);
  return NIB_OK;
}

int make_field(const nib::AbelianFieldInput& in, nib_field** out) {
  if (!out) return fail(NIB_E_NULL_POINTER, "null output pointer");
  *out = new nib_field{nib::validate_input(in)};
  return NIB_OK;
}

}  // namespace

extern "C" {

void nib_solve_options_init(nib_solve_options* opts) {
  if (!opts) return;
  const nib::SolveConfig d;
  opts->slack = "3/2";
  opts->max_doublings = d.search.max_doublings;
  opts->enum_cap = d.search.node_cap;
  opts->coset_cap = d.coset_cap;
  opts->d_multiplier = "1";
}

const char* nib_last_error(void) { return last_error.c_str(); }

const char* nib_error_name(int code) {
  if (code == NIB_OK) return "ok";
  if (code == NIB_E_NULL_POINTER) return "null pointer";
  return nib::error_code_name(static_cast<nib::ErrorCode>(code));
}

void nib_string_free(char* s) { std::free(s); }

int nib_field_parse(const char* text, nib_field** out) {
  if (!text) return fail(NIB_E_NULL_POINTER, "null text");
  return guarded([&] { return make_field(nib::parse_field_file(text), out); });
}

int nib_field_load(const char* path, nib_field** out) {
  if (!path) return fail(NIB_E_NULL_POINTER, "null path");
  return guarded([&] { return make_field(nib::load_field_file(path), out); });
}

int nib_field_fixture(long conductor, const long* subgroup, size_t count, nib_field** out) {
  if (count && !subgroup) return fail(NIB_E_NULL_POINTER, "null subgroup");
  return guarded([&] {
    std::vector<long> h(subgroup, subgroup + count);
    return make_field(nib::gaussian_period_fixture(conductor, h), out);
  });
}

void nib_field_free(nib_field* f) { delete f; }

int nib_field_format(const nib_field* f, char** text) {
  if (!f) return fail(NIB_E_NULL_POINTER, "null field");
  return guarded([&] { return give(text, nib::format_field_file(f->field.input())); });
}

int nib_field_degree(const nib_field* f, size_t* degree) {
  if (!f || !degree) return fail(NIB_E_NULL_POINTER, "null argument");
  *degree = f->field.degree();
  return NIB_OK;
}

int nib_field_discriminant(const nib_field* f, char** text) {
  if (!f) return fail(NIB_E_NULL_POINTER, "null field");
  return guarded([&] { return give(text, f->field.discriminant().get_str()); });
}

int nib_field_conductor(const nib_field* f, char** text) {
  if (!f) return fail(NIB_E_NULL_POINTER, "null field");
  const auto& c = f->field.input().conductor;
  return guarded([&] { return give(text, c ? c->get_str() : std::string()); });
}

int nib_field_label(const nib_field* f, char** text) {
  if (!f) return fail(NIB_E_NULL_POINTER, "null field");
  return guarded([&] { return give(text, f->field.input().label); });
}

int nib_solve(const nib_field* f, const nib_solve_options* opts, nib_result** out) {
  if (!f || !out) return fail(NIB_E_NULL_POINTER, "null argument");
  return guarded([&] {
    nib::SolveConfig cfg;
    if (opts) {
      if (opts->slack) {
        auto s = nib::parse_rational(opts->slack);
        if (!s || *s <= 0) return fail(NIB_E_INVALID_ARGUMENT, "slack must be a positive rational");
        cfg.search.slack = *s;
      }
      cfg.search.max_doublings = opts->max_doublings;
      cfg.search.node_cap = opts->enum_cap;
      cfg.coset_cap = opts->coset_cap;
      if (opts->d_multiplier) {
        auto m = nib::parse_integer(opts->d_multiplier);
        if (!m || *m <= 0) return fail(NIB_E_INVALID_ARGUMENT, "D multiplier must be a positive integer");
        cfg.d_multiplier = *m;
      }
    }
    auto keep = std::make_shared<const nib_field>(*f);
    auto r = nib::solve(keep->field, cfg);
    *out = new nib_result{std::move(keep), std::move(r)};
    return static_cast<int>(NIB_OK);
  });
}

void nib_result_free(nib_result* r) { delete r; }

int nib_result_status(const nib_result* r, nib_status* status) {
  if (!r || !status) return fail(NIB_E_NULL_POINTER, "null argument");
  switch (r->result.status) {
    case nib::Status::kFound: *status = NIB_FOUND; break;
    case nib::Status::kNonexistent: *status = NIB_NONEXISTENT; break;
    case nib::Status::kInconclusive: *status = NIB_INCONCLUSIVE; break;
  }
  return NIB_OK;
}

int nib_result_theta(const nib_result* r, char** text) {
  if (!r) return fail(NIB_E_NULL_POINTER, "null result");
  if (r->result.status != nib::Status::kFound) return fail(NIB_E_INVALID_ARGUMENT, "no generator in this result");
  return guarded([&] {
    std::string s;
    for (const auto& c : r->result.theta_basis) s += (s.empty() ? "" : " ") + c.get_str();
    return give(text, s);
  });
}

int nib_result_field_discriminant(const nib_result* r, char** text) {
  if (!r) return fail(NIB_E_NULL_POINTER, "null result");
  return guarded([&] { return give(text, r->result.field_discriminant.get_str()); });
}

int nib_result_report(const nib_result* r, int json, char** text) {
  if (!r) return fail(NIB_E_NULL_POINTER, "null result");
  return guarded([&] { return give(text, nib::format_report(r->result, r->field->field, json != 0)); });
}

int nib_verify(const nib_field* f, const char* theta, int* is_nib, int json, char** report) {
  if (!f || !theta || !is_nib) return fail(NIB_E_NULL_POINTER, "null argument");
  return guarded([&] {
    std::string s(theta);
    for (char& ch : s)
      if (ch == ',') ch = ' ';
    nib::RatVector c;
    std::istringstream in(s);
    for (std::string t; in >> t;) {
      auto v = nib::parse_rational(t);
      if (!v) return fail(NIB_E_PARSE, "theta: expected a rational, got '" + t + "'");
      c.push_back(*v);
    }
    if (c.size() != f->field.degree())
      return fail(NIB_E_INVALID_ARGUMENT, "theta needs " + std::to_string(f->field.degree()) + " coordinates");
    const nib::FieldElement x = nib::from_basis_coordinates(c, f->field);
    *is_nib = nib::verify_nib(x, f->field) ? 1 : 0;
    if (report) *report = dup(nib::format_verify_report(x, f->field, json != 0));
    return static_cast<int>(NIB_OK);
  });
}

int nib_hilbert_speiser(const char* conductor, int* squarefree) {
  if (!conductor || !squarefree) return fail(NIB_E_NULL_POINTER, "null argument");
  return guarded([&] {
    auto c = nib::parse_integer(conductor);
    if (!c) return fail(NIB_E_PARSE, "conductor must be an integer");
    *squarefree = nib::hilbert_speiser_check(*c) ? 1 : 0;
    return static_cast<int>(NIB_OK);
  });
}

int nib_bound(const long* factors, size_t count, char** text) {
  if (count && !factors) return fail(NIB_E_NULL_POINTER, "null factors");
  return guarded([&] {
    nib::AbelianGroup g(std::vector<long>(factors, factors + count));
    return give(text, nib::index_bound(g).get_str());
  });
}

}  // extern "C"
