#include "nib/field_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace nib {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, line ? "line " + std::to_string(line) + ": " + what : what);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Integer integer_token(const std::string& t, std::size_t line) {
  auto v = parse_integer(t);
  if (!v) parse_error(line, "expected an integer, got '" + t + "'");
  return *v;
}

Rational rational_token(const std::string& t, std::size_t line) {
  auto v = parse_rational(t);
  if (!v) parse_error(line, "expected a rational p/q, got '" + t + "'");
  return *v;
}

struct Block {
  std::size_t line = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <typename T, typename F>
std::vector<std::string> strings(const std::vector<T>& v, F fmt) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(fmt(x));
  return out;
}

std::string int_str(const Integer& x) { return x.get_str(10); }

}  // namespace

AbelianFieldInput parse_field_file(std::string_view text) {
  AbelianFieldInput in;
  std::map<std::string, std::size_t> seen;
  std::map<std::string, Block> blocks;
  std::string current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (line[0] == ' ' || line[0] == '\t') {
      if (current.empty()) parse_error(line_no, "indented row outside action or integral_basis");
      blocks[current].rows.emplace_back(line_no, toks);
      continue;
    }
    const std::string& key = toks[0];
    if (!seen.emplace(key, line_no).second) parse_error(line_no, "duplicate key '" + key + "'");
    current.clear();
    const std::vector<std::string> rest(toks.begin() + 1, toks.end());
    if (key == "label") {
      if (rest.empty()) parse_error(line_no, "label needs a value");
      in.label = join(rest);
    } else if (key == "conductor") {
      if (rest.size() != 1) parse_error(line_no, "conductor takes one integer");
      in.conductor = integer_token(rest[0], line_no);
      if (*in.conductor <= 0) parse_error(line_no, "conductor must be positive");
    } else if (key == "minpoly") {
      if (rest.size() < 2) parse_error(line_no, "minpoly needs at least two coefficients");
      for (const auto& t : rest) in.minpoly.push_back(integer_token(t, line_no));
    } else if (key == "group") {
      for (const auto& t : rest) {
        Integer d = integer_token(t, line_no);
        if (d < 2 || !d.fits_slong_p()) parse_error(line_no, "invariant factors must be integers >= 2");
        in.group.push_back(d.get_si());
      }
    } else if (key == "action" || key == "integral_basis") {
      if (!rest.empty()) parse_error(line_no, key + " takes its rows on the following indented lines");
      current = key;
      blocks[key].line = line_no;
    } else {
      parse_error(line_no, "unknown key '" + key + "'");
    }
  }
  for (const char* k : {"minpoly", "group", "action", "integral_basis"})
    if (!seen.count(k)) parse_error(0, std::string("missing section '") + k + "'");

  const std::size_t n = in.minpoly.size() - 1;
  auto rows_of = [&](const std::string& key) {
    const Block& b = blocks[key];
    if (b.rows.size() != n) parse_error(b.line, key + " needs " + std::to_string(n) + " rows, found " + std::to_string(b.rows.size()));
    std::vector<RatVector> out;
    for (const auto& [ln, toks] : b.rows) {
      if (toks.size() != n) parse_error(ln, key + " rows need " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
      RatVector v;
      for (const auto& t : toks) v.push_back(rational_token(t, ln));
      out.push_back(std::move(v));
    }
    return out;
  };
  for (auto& v : rows_of("action")) in.action.emplace_back(std::move(v));
  in.integral_basis = RatMatrix(n, n);
  const auto basis = rows_of("integral_basis");
  for (std::size_t j = 0; j < n; ++j) in.integral_basis.set_column(j, basis[j]);
  return in;
}

AbelianFieldInput load_field_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_field_file(s.str());
}

std::string format_field_file(const AbelianFieldInput& in) {
  const std::size_t n = in.minpoly.size() - 1;
  std::ostringstream out;
  if (!in.label.empty()) out << "label " << in.label << "\n";
  if (in.conductor) out << "conductor " << int_str(*in.conductor) << "\n";
  out << "minpoly " << join(strings(in.minpoly, int_str)) << "\n";
  out << "group";
  for (long d : in.group) out << " " << d;
  out << "\naction\n";
  for (const Polynomial& p : in.action) {
    RatVector c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = p.coeff(k);
    out << "  " << join(strings(c, format_rational)) << "\n";
  }
  out << "integral_basis\n";
  for (std::size_t j = 0; j < in.integral_basis.cols(); ++j)
    out << "  " << join(strings(in.integral_basis.column(j), format_rational)) << "\n";
  return out.str();
}

std::string format_report(const NIBResult& r, const ValidatedField& f, bool json) {
  using nlohmann::ordered_json;
  ordered_json j;
  const AbelianFieldInput& in = f.input();
  if (!in.label.empty()) j["label"] = in.label;
  j["status"] = status_name(r.status);
  j["degree"] = f.degree();
  j["group"] = in.group;
  j["field_discriminant"] = int_str(r.field_discriminant);
  j["d"] = int_str(r.d);
  if (r.status == Status::kFound) {
    j["theta_over_integral_basis"] = strings(r.theta_basis, int_str);
    j["theta_minpoly"] = strings(r.theta_minpoly.coeffs(), format_rational);
    j["conjugate_discriminant"] = format_rational(r.conjugate_discriminant);
    j["t_coefficients"] = strings(r.t.coeffs(), format_rational);
    j["coset_unit_index"] = r.coset_index;
    std::vector<std::string> word;
    for (auto [g, e] : r.coset_word) word.push_back(std::to_string(g) + "^" + std::to_string(e));
    j["coset_unit_word"] = word;
  }
  j["cosets_examined"] = r.cosets_examined;
  if (r.status == Status::kNonexistent) j["certificate"] = r.certificate;
  if (r.status == Status::kInconclusive) j["cap"] = r.cap;
  if (in.conductor) {
    j["conductor"] = int_str(*in.conductor);
    j["hilbert_speiser"] = hilbert_speiser_check(*in.conductor);
  }
  ordered_json t;
  for (const auto& s : r.timings) t[s.stage] = s.ms;
  j["timing_ms"] = t;
  if (json) return j.dump(2) + "\n";

  std::ostringstream out;
  for (const auto& [key, v] : j.items()) {
    if (key == "timing_ms") {
      for (const auto& [stage, ms] : v.items()) out << "timing_ms." << stage << ": " << ms.get<double>() << "\n";
      continue;
    }
    out << key << ":";
    if (v.is_array()) {
      for (const auto& x : v) out << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    } else {
      out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << "\n";
  }
  return out.str();
}

std::string format_verify_report(const FieldElement& theta, const ValidatedField& f, bool json) {
  nlohmann::ordered_json j;
  const RatVector c = basis_coordinates(theta, f);
  const bool integral = is_integral(c);
  const Rational disc = discriminant_of_set(conjugates(theta, f), f);
  const bool ok = integral && disc == Rational(f.discriminant());
  j["normal_integral_basis"] = ok;
  j["integral"] = integral;
  j["conjugate_discriminant"] = format_rational(disc);
  j["field_discriminant"] = int_str(f.discriminant());
  if (json) return j.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, v] : j.items()) out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return out.str();
}

}  // namespace nib
