// nibtool: command-line front end over the C interface in nib/nib.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nib/nib.h"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNonexistent = 10;
constexpr int kExitInconclusive = 20;

int report_error(int code) {
  std::cerr << "error (" << nib_error_name(code) << "): " << nib_last_error() << "\n";
  return kExitInputError;
}

std::string take(char* s) {
  std::string out(s ? s : "");
  nib_string_free(s);
  return out;
}

// "a,b,c" or "a b c"; empty string gives an empty list.
bool parse_longs(const std::string& text, std::vector<long>& out) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  for (std::string t; in >> t;) {
    std::size_t used = 0;
    try {
      out.push_back(std::stol(t, &used));
    } catch (const std::exception&) {
      return false;
    }
    if (used != t.size()) return false;
  }
  return true;
}

struct FieldHandle {
  nib_field* f = nullptr;
  ~FieldHandle() { nib_field_free(f); }
};

struct ResultHandle {
  nib_result* r = nullptr;
  ~ResultHandle() { nib_result_free(r); }
};

int cmd_solve(const std::string& path, const std::string& slack, std::size_t coset_cap, std::size_t enum_cap,
              const std::string& d_multiplier, bool json) {
  FieldHandle field;
  if (int rc = nib_field_load(path.c_str(), &field.f)) return report_error(rc);
  nib_solve_options opts;
  nib_solve_options_init(&opts);
  opts.slack = slack.c_str();
  opts.coset_cap = coset_cap;
  opts.enum_cap = enum_cap;
  opts.d_multiplier = d_multiplier.c_str();
  ResultHandle result;
  if (int rc = nib_solve(field.f, &opts, &result.r)) return report_error(rc);
  char* text = nullptr;
  if (int rc = nib_result_report(result.r, json ? 1 : 0, &text)) return report_error(rc);
  std::cout << take(text);
  nib_status status;
  nib_result_status(result.r, &status);
  switch (status) {
    case NIB_FOUND: return kExitFound;
    case NIB_NONEXISTENT: return kExitNonexistent;
    case NIB_INCONCLUSIVE: return kExitInconclusive;
  }
  return kExitInputError;
}

int cmd_fixture(long conductor, const std::string& subgroup, const std::string& out_path) {
  std::vector<long> h;
  if (!parse_longs(subgroup, h)) {
    std::cerr << "error: --subgroup expects a comma-separated list of integers\n";
    return kExitInputError;
  }
  FieldHandle field;
  if (int rc = nib_field_fixture(conductor, h.data(), h.size(), &field.f)) return report_error(rc);
  char* text = nullptr;
  if (int rc = nib_field_format(field.f, &text)) return report_error(rc);
  const std::string body = take(text);
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!(out << body)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInputError;
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& theta, bool json) {
  FieldHandle field;
  if (int rc = nib_field_load(path.c_str(), &field.f)) return report_error(rc);
  int ok = 0;
  char* text = nullptr;
  if (int rc = nib_verify(field.f, theta.c_str(), &ok, json ? 1 : 0, &text)) return report_error(rc);
  std::cout << take(text);
  return ok ? 0 : kExitNonexistent;
}

int cmd_bound(const std::string& factors) {
  std::vector<long> g;
  if (!parse_longs(factors, g)) {
    std::cerr << "error: expected invariant factors such as 2,2\n";
    return kExitInputError;
  }
  char* text = nullptr;
  if (int rc = nib_bound(g.data(), g.size(), &text)) return report_error(rc);
  std::cout << take(text) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal integral bases of abelian number fields"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  nib_solve_options defaults;
  nib_solve_options_init(&defaults);

  std::string path;
  std::string slack = defaults.slack;
  std::size_t coset_cap = defaults.coset_cap;
  std::size_t enum_cap = defaults.enum_cap;
  std::string d_multiplier = "1";
  bool json = false;
  auto* solve = app.add_subcommand("solve", "Decide whether the field has a normal integral basis");
  solve->add_option("file", path, "Field description")->required();
  solve->add_option("--slack", slack, "Norm-search slack factor (rational)")->capture_default_str();
  solve->add_option("--coset-cap", coset_cap, "Maximum number of unit cosets")->capture_default_str();
  solve->add_option("--enum-cap", enum_cap, "Enumeration nodes per ideal")->capture_default_str();
  solve->add_option("--d-multiplier", d_multiplier, "Scale the denominator D by this integer")->capture_default_str();
  solve->add_flag("--json", json, "Emit the report as JSON");

  long conductor = 0;
  std::string subgroup;
  std::string out_path;
  auto* fixture = app.add_subcommand("fixture", "Write a subfield of a cyclotomic field as a field file");
  fixture->add_option("--conductor", conductor, "f")->required();
  fixture->add_option("--subgroup", subgroup, "Generators of H in (Z/f)^*, comma separated");
  fixture->add_option("--out", out_path, "Output file (default: standard output)");

  std::string theta;
  auto* verify = app.add_subcommand("verify", "Check whether theta generates a normal integral basis");
  verify->add_option("file", path, "Field description")->required();
  verify->add_option("--theta", theta, "Coordinates over the integral basis")->required();
  verify->add_flag("--json", json, "Emit the report as JSON");

  std::string factors;
  auto* bound = app.add_subcommand("bound", "Upper bound on the number of unit cosets");
  bound->add_option("factors", factors, "Invariant factors, e.g. 2,2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  if (*solve) return cmd_solve(path, slack, coset_cap, enum_cap, d_multiplier, json);
  if (*fixture) return cmd_fixture(conductor, subgroup, out_path);
  if (*verify) return cmd_verify(path, theta, json);
  return cmd_bound(factors);
}
