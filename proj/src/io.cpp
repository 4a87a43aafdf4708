#include "unient/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "unient/errors.hpp"

namespace unient {

namespace {

using nlohmann::json;

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("state file lacks \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("state file field \"") + key + "\": " + e.what());
  }
}

}  // namespace

AnyState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file must hold a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchema)
    throw ParseError("unsupported schema " + doc["schema"].dump());

  const auto dims = field<std::vector<std::size_t>>(doc, "dims");
  const auto kind = field<std::string>(doc, "kind");
  const auto re = field<std::vector<double>>(doc, "re");
  const auto im = field<std::vector<double>>(doc, "im");
  if (dims.empty()) throw ParseError("dims must be nonempty");
  for (auto d : dims)
    if (d == 0) throw ParseError("dims must be positive");
  if (re.size() != im.size()) throw ParseError("re and im differ in length");
  const std::size_t d = total_dimension(dims);

  if (kind == "pure") {
    if (re.size() != d) throw ParseError("pure state needs " + std::to_string(d) + " amplitudes");
    Vector v(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i)) = {re[i], im[i]};
    return PureState(std::move(v), dims);
  }
  if (kind == "mixed") {
    if (re.size() != d * d) throw ParseError("mixed state needs " + std::to_string(d * d) + " entries");
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r * d + c], im[r * d + c]};
    return DensityMatrix(std::move(m), dims);
  }
  throw ParseError("kind must be \"pure\" or \"mixed\", got \"" + kind + "\"");
}

AnyState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

json state_to_json(const AnyState& state) {
  json out;
  out["schema"] = kSchema;
  std::vector<double> re, im;
  if (const auto* pure = std::get_if<PureState>(&state)) {
    out["dims"] = pure->dims();
    out["kind"] = "pure";
    for (const auto& a : pure->amplitudes()) {
      re.push_back(a.real());
      im.push_back(a.imag());
    }
  } else {
    const auto& rho = std::get<DensityMatrix>(state);
    out["dims"] = rho.dims();
    out["kind"] = "mixed";
    const Matrix& m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        re.push_back(m(r, c).real());
        im.push_back(m(r, c).imag());
      }
  }
  out["re"] = re;
  out["im"] = im;
  return out;
}

json report_to_json(const SuiteReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) cases.push_back({{"label", c.label}, {"residual", c.residual}, {"passed", c.passed}});
  json out{{"schema", kSchema},
           {"suite", report.suite},
           {"rng", {{"algorithm", kRngAlgorithm}, {"seed", report.rng.seed}, {"stream", report.rng.stream}}},
           {"cases", report.cases.size()},
           {"failures", report.failures()},
           {"passed", report.passed()},
           {"conventions", report.conventions},
           {"notes", report.notes},
           {"results", cases}};
  if (!report.cases.empty()) {
    out["min_residual"] = report.min_residual();
    out["max_residual"] = report.max_residual();
  }
  return out;
}

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace unient
