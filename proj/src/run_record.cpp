#include "conevol/run_record.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace conevol::cli {

namespace {

template <typename T>
T parse_number(std::string_view text, const char* field) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("bad value for ") + field + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

Problem require_problem(std::string_view name) {
  if (auto p = parse_problem_name(name)) return *p;
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

Method require_method(std::string_view name) {
  if (auto m = parse_method_name(name)) return *m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

}  // namespace

std::string_view problem_name(Problem p) {
  return p == Problem::cone_cylinder ? "cone_cylinder" : "cone_sphere";
}

std::optional<Problem> parse_problem_name(std::string_view name) {
  if (name == "cone_cylinder") return Problem::cone_cylinder;
  if (name == "cone_sphere") return Problem::cone_sphere;
  return std::nullopt;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string csv_header() {
  return "problem,k,alpha_rad,method,volume,error_estimate,evaluations,seed,n_terms";
}

std::string to_csv_row(const RunRecord& r) {
  std::string out;
  out += problem_name(r.problem);
  out += ',' + format_real(r.k);
  out += ',' + format_real(r.alpha_rad);
  out += ',';
  out += method_name(r.method);
  out += ',' + format_real(r.volume);
  out += ',' + format_real(r.error_estimate);
  out += ',' + std::to_string(r.evaluations);
  out += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
  out += ',' + (r.n_terms ? std::to_string(*r.n_terms) : std::string());
  return out;
}

std::string to_json_line(const RunRecord& r) {
  std::string out = "{\"problem\":\"";
  out += problem_name(r.problem);
  out += "\",\"k\":" + format_real(r.k);
  out += ",\"alpha_rad\":" + format_real(r.alpha_rad);
  out += ",\"method\":\"";
  out += method_name(r.method);
  out += "\",\"volume\":" + format_real(r.volume);
  out += ",\"error_estimate\":" + format_real(r.error_estimate);
  out += ",\"evaluations\":" + std::to_string(r.evaluations);
  out += ",\"seed\":" + (r.seed ? std::to_string(*r.seed) : std::string("null"));
  out += ",\"n_terms\":" + (r.n_terms ? std::to_string(*r.n_terms) : std::string("null"));
  out += '}';
  return out;
}

RunRecord parse_csv_row(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = row.find(',', start);
    fields.push_back(row.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 9) {
    throw std::invalid_argument("expected 9 CSV fields, got " + std::to_string(fields.size()));
  }
  RunRecord r;
  r.problem = require_problem(fields[0]);
  r.k = parse_number<double>(fields[1], "k");
  r.alpha_rad = parse_number<double>(fields[2], "alpha_rad");
  r.method = require_method(fields[3]);
  r.volume = parse_number<double>(fields[4], "volume");
  r.error_estimate = parse_number<double>(fields[5], "error_estimate");
  r.evaluations = parse_number<long>(fields[6], "evaluations");
  if (!fields[7].empty()) r.seed = parse_number<std::uint64_t>(fields[7], "seed");
  if (!fields[8].empty()) r.n_terms = parse_number<int>(fields[8], "n_terms");
  return r;
}

RunRecord parse_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  if (!j.is_object() || j.size() != 9) throw std::invalid_argument("expected a 9-field object");
  try {
    RunRecord r;
    r.problem = require_problem(j.at("problem").get<std::string>());
    r.k = j.at("k").get<double>();
    r.alpha_rad = j.at("alpha_rad").get<double>();
    r.method = require_method(j.at("method").get<std::string>());
    r.volume = j.at("volume").get<double>();
    r.error_estimate = j.at("error_estimate").get<double>();
    r.evaluations = j.at("evaluations").get<long>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("n_terms").is_null()) r.n_terms = j.at("n_terms").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace conevol::cli
