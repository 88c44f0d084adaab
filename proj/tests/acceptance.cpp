// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 0
// only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nib/fixture.hpp"
#include "nib/field_file.hpp"
#include "nib/nib.h"
#include "properties.hpp"

using namespace nib;

namespace {

std::string data(const std::string& name) { return std::string(NIB_TEST_DATA) + "/" + name; }

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void require_ok(int rc, const std::string& what) {
  if (rc != NIB_OK) throw Failure{what + ": " + nib_error_name(rc) + ": " + nib_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  nib_string_free(s);
  return out;
}

using FieldPtr = std::unique_ptr<nib_field, decltype(&nib_field_free)>;
using ResultPtr = std::unique_ptr<nib_result, decltype(&nib_result_free)>;

// fixture, written out as a field file and read back, as the command line does.
FieldPtr fixture_field(long f, const std::vector<long>& h) {
  nib_field* raw = nullptr;
  require_ok(nib_field_fixture(f, h.data(), h.size(), &raw), "fixture " + std::to_string(f));
  FieldPtr fixture(raw, nib_field_free);
  char* text = nullptr;
  require_ok(nib_field_format(fixture.get(), &text), "format");
  const std::string body = take(text);
  nib_field* parsed = nullptr;
  require_ok(nib_field_parse(body.c_str(), &parsed), "parse");
  return FieldPtr(parsed, nib_field_free);
}

FieldPtr file_field(const std::string& name) {
  nib_field* raw = nullptr;
  require_ok(nib_field_load(data(name).c_str(), &raw), "load " + name);
  return FieldPtr(raw, nib_field_free);
}

ResultPtr solve_field(const nib_field* f, const char* d_multiplier = "1") {
  nib_solve_options opts;
  nib_solve_options_init(&opts);
  opts.d_multiplier = d_multiplier;
  nib_result* raw = nullptr;
  require_ok(nib_solve(f, &opts, &raw), "solve");
  return ResultPtr(raw, nib_result_free);
}

nib_status status_of(const nib_result* r) {
  nib_status s;
  require_ok(nib_result_status(r, &s), "status");
  return s;
}

bool verifies(const nib_field* f, const std::string& theta) {
  int ok = 0;
  require_ok(nib_verify(f, theta.c_str(), &ok, 0, nullptr), "verify");
  return ok != 0;
}

std::string unit_vector(const nib_field* f) {
  std::size_t n = 0;
  require_ok(nib_field_degree(f, &n), "degree");
  std::string s = "1";
  for (std::size_t i = 1; i < n; ++i) s += " 0";
  return s;
}

// Criteria 1 and 2.
std::string cyclotomic_example(long f, const std::string& discriminant) {
  FieldPtr field = fixture_field(f, {});
  char* text = nullptr;
  require_ok(nib_field_discriminant(field.get(), &text), "discriminant");
  const std::string disc = take(text);
  require(disc == discriminant, "field discriminant " + disc);
  ResultPtr r = solve_field(field.get());
  require(status_of(r.get()) == NIB_FOUND, "status is not FOUND");
  require_ok(nib_result_field_discriminant(r.get(), &text), "result discriminant");
  require(take(text) == discriminant, "result discriminant differs");
  require_ok(nib_result_theta(r.get(), &text), "theta");
  const std::string theta = take(text);
  require(verifies(field.get(), theta), "returned theta fails verification");
  require(verifies(field.get(), unit_vector(field.get())), "zeta_" + std::to_string(f) + " fails verification");
  return "disc " + disc + ", theta = (" + theta + ")";
}

std::string sqrt5_trace() {
  const ValidatedField f = validate_input(load_field_file(data("qsqrt5.field")));
  require(discriminant_of_set(conjugates(f.field().generator(), f), f) == 80, "D != 80");
  const IntMatrix b = compute_bij(f, 80);
  require(b(0, 0) == 40 && b(1, 0) == 40, "first b-column is not (40, 40)");
  require(b(0, 1) == 40 && b(1, 1) == 0, "second b-column is not (40, 0)");
  const NIBResult r = solve(f);
  require(r.status == Status::kFound, "status is not FOUND");
  require(r.d == 80 && r.b == b, "solver used different D or b");
  require(r.ideals.size() == 2, "expected two ideal components");
  for (const auto& j : r.ideals) require(j.basis().rows() == 1 && j.basis()(0, 0) == 40, "J_i != 40Z");
  require(r.t.coeffs() == RatVector{40, 0}, "t != 40e");
  require(verify_nib(r.theta, f), "theta fails verification");

  FieldPtr field = file_field("qsqrt5.field");
  ResultPtr cr = solve_field(field.get());
  require(status_of(cr.get()) == NIB_FOUND, "C interface status is not FOUND");
  char* text = nullptr;
  require_ok(nib_result_theta(cr.get(), &text), "theta");
  const std::string theta = take(text);
  require(verifies(field.get(), theta), "theta fails verification");
  return "D = 80, b = (40,40),(40,0), J = 40Z, t = 40e, theta = (" + theta + ")";
}

std::string negative_cases() {
  std::ostringstream note;
  for (long f : {4, 8, 9}) {
    const auto t0 = std::chrono::steady_clock::now();
    FieldPtr field = fixture_field(f, {});
    ResultPtr r = solve_field(field.get());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int squarefree = 0;
    require_ok(nib_hilbert_speiser(std::to_string(f).c_str(), &squarefree), "hilbert-speiser");
    require(!squarefree, "conductor " + std::to_string(f) + " reported squarefree");
    require(status_of(r.get()) == NIB_NONEXISTENT, "Q(zeta_" + std::to_string(f) + ") is not NONEXISTENT");
    require(s < 10, "Q(zeta_" + std::to_string(f) + ") took " + std::to_string(s) + " s");
    note << (f == 4 ? "" : ", ") << "f=" << f << " in " << std::fixed << std::setprecision(3) << s << " s";
  }
  return note.str();
}

bool orders_supported(const std::vector<long>& group) {
  AbelianGroup g(group);
  for (long q : divisors(g.exponent()))
    if (!is_supported_order(q)) return false;
  return true;
}

std::string sweep() {
  std::size_t found = 0, nonexistent = 0, skipped = 0;
  for (long f = 3; f <= 40; ++f) {
    if (is_squarefree(f)) {
      for (const auto& h : unit_subgroups(f)) {
        const AbelianFieldInput in = gaussian_period_fixture(f, h);
        if (!orders_supported(in.group)) {
          ++skipped;
          continue;
        }
        const ValidatedField field = validate_input(in);
        const NIBResult r = solve(field);
        require(r.status == Status::kFound, in.label + " is " + status_name(r.status));
        require(verify_nib(r.theta, field), in.label + ": theta fails verification");
        ++found;
      }
    } else {
      const AbelianFieldInput in = gaussian_period_fixture(f, {});
      const ValidatedField field = validate_input(in);
      const NIBResult r = solve(field);
      require(r.status == Status::kNonexistent, in.label + " is " + status_name(r.status) + " " + r.cap);
      ++nonexistent;
    }
  }
  return std::to_string(found) + " FOUND, " + std::to_string(nonexistent) + " NONEXISTENT, " + std::to_string(skipped) +
         " with unsupported character orders";
}

std::string bound_check() {
  std::size_t groups = 0;
  for (const auto& factors : nib::testing::all_invariant_factors(12)) {
    auto sys = std::make_shared<const CharacterSystem>(nib::testing::make_group(factors));
    const CosetRepSet s = coset_representatives(sys, 1'000'000);
    require(s.complete, "coset enumeration incomplete");
    const Integer bound = index_bound(sys->group());
    require(Integer(s.units.size()) <= bound, "|S| = " + std::to_string(s.units.size()) + " exceeds " + bound.get_str());
    ++groups;
  }
  for (auto [factors, want] : std::vector<std::pair<std::string, std::string>>{{"2", "4"}, {"3", "9"}, {"2,2", "256"}}) {
    std::vector<long> g;
    std::istringstream in(factors);
    for (std::string t; std::getline(in, t, ',');) g.push_back(std::stol(t));
    char* text = nullptr;
    require_ok(nib_bound(g.data(), g.size(), &text), "bound");
    const std::string got = take(text);
    require(got == want, "bound " + factors + " = " + got);
  }
  return std::to_string(groups) + " groups, bounds 4, 9, 256";
}

std::string property_suites() {
  for (const std::string& failure :
       {nib::testing::check_psi_laws(1000), nib::testing::check_idempotents(8),
        nib::testing::check_character_orthogonality(12)})
    require(failure.empty(), failure);
  std::size_t ideals = 0;
  for (long q : {4, 3, 5}) {
    std::size_t count = 0;
    const std::string failure = nib::testing::check_find_generator_oracle(q, 50, &count);
    require(failure.empty(), failure);
    require(count > 0, "no ideals enumerated for q=" + std::to_string(q));
    ideals += count;
  }
  return "1000 psi samples, " + std::to_string(ideals) + " ideals of norm <= 50";
}

std::string d_independence() {
  std::vector<std::pair<std::string, FieldPtr>> fields;
  fields.emplace_back("qsqrt5", file_field("qsqrt5.field"));
  fields.emplace_back("qi", file_field("qi.field"));
  fields.emplace_back("period-7-h2", fixture_field(7, {2}));
  fields.emplace_back("period-13-h3", fixture_field(13, {3}));
  fields.emplace_back("cyclotomic-15", fixture_field(15, {}));
  for (const auto& [name, field] : fields) {
    ResultPtr once = solve_field(field.get(), "1");
    ResultPtr twice = solve_field(field.get(), "2");
    require(status_of(once.get()) == status_of(twice.get()), name + ": status depends on D");
    if (status_of(once.get()) == NIB_FOUND) {
      for (const nib_result* r : {once.get(), twice.get()}) {
        char* text = nullptr;
        require_ok(nib_result_theta(r, &text), "theta");
        require(verifies(field.get(), take(text)), name + ": theta fails verification");
      }
    }
  }
  return "5 fixtures";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"conductor 21 example", 60, [] { return cyclotomic_example(21, "205924456521"); }},
      {"conductor 15 example", 30, [] { return cyclotomic_example(15, "1265625"); }},
      {"Q(sqrt 5) hand trace", 1, sqrt5_trace},
      {"Q(i), Q(zeta_8), Q(zeta_9) nonexistent", 30, negative_cases},
      {"sweep of conductors 3..40", 600, sweep},
      {"coset index bound", 600, bound_check},
      {"algebra property suites", 600, property_suites},
      {"D-independence", 600, d_independence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    try {
      note = c.run();
    } catch (const Failure& f) {
      ok = false;
      note = f.what;
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && s > c.budget_s) {
      ok = false;
      note += " (over the " + std::to_string(int(c.budget_s)) + " s budget)";
    }
    failed += !ok;
    std::printf("%s criterion %zu: %s [%.2f s] %s\n", ok ? "PASS" : "FAIL", i + 1, c.name, s, note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
