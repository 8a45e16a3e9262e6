#include "tvs/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tvs/error.hpp"

namespace tvs::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": bad field \"" + key + "\": " + e.what());
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      pos = text.size();
    }
    const auto line = trim(text.substr(start, pos - start));
    if (!line.empty()) {
      out.push_back(line);
    }
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("not a number: \"" + std::string(s) + "\"");
  }
  return value;
}

std::size_t parse_index(std::string_view s) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("not a non-negative integer: \"" + std::string(s) + "\"");
  }
  return value;
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_rows(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) {
    throw InputError(std::string(what) + ": expected a non-empty array of rows");
  }
  const auto cols = rows.front().is_array() ? rows.front().size() : 0;
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) {
      throw InputError(std::string(what) + ": ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_number()) {
        throw InputError(std::string(what) + ": non-numeric entry");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].get<double>();
    }
  }
  return m;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InputError("cannot write " + path.string());
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw InputError("write failed for " + path.string());
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json::array({e.i, e.j, e.w}));
  }
  return json{{"n", g.size()}, {"edges", edges}}.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  const auto j = parse_json(text, "graph");
  const auto n = field<std::size_t>(j, "n", "graph");
  const auto raw = field<json>(j, "edges", "graph");
  if (!raw.is_array()) {
    throw InputError("graph: \"edges\" must be an array");
  }
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned() || !e[2].is_number()) {
      throw InputError("graph: each edge must be [i, j, w] with non-negative integer indices");
    }
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
  }
  return Graph(n, std::move(edges));
}

std::string support_to_json(const SpectralSupport& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs()) {
    pairs.push_back(json::array({p.time, p.graph}));
  }
  return json{{"T", s.times()}, {"N", s.vertices()}, {"pairs", pairs}}.dump() + "\n";
}

SpectralSupport support_from_json(std::string_view text) {
  const auto j = parse_json(text, "support");
  const auto T = field<std::size_t>(j, "T", "support");
  const auto N = field<std::size_t>(j, "N", "support");
  const auto raw = field<json>(j, "pairs", "support");
  if (!raw.is_array()) {
    throw InputError("support: \"pairs\" must be an array");
  }
  std::vector<FrequencyPair> pairs;
  for (const auto& p : raw) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      throw InputError("support: each pair must be [j_t, j_g]");
    }
    pairs.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  return SpectralSupport(T, N, std::move(pairs));
}

std::string plan_to_json(const SamplingPlan& plan, const QualificationReport& report) {
  json samples = json::array();
  for (const auto& p : plan.samples()) {
    samples.push_back(json::array({p.t, p.v}));
  }
  json j = {{"T", plan.times()},
            {"N", plan.vertices()},
            {"samples", samples},
            {"s_t", plan.time_projection()},
            {"s_g", plan.vertex_projection()},
            {"K", report.bandwidth},
            {"K_T", report.time_bandwidth},
            {"K_G", report.graph_bandwidth},
            {"qualified", report.qualified},
            {"critical", report.critical}};
  return j.dump() + "\n";
}

SamplingPlan plan_from_json(std::string_view text) {
  const auto j = parse_json(text, "plan");
  const auto T = field<std::size_t>(j, "T", "plan");
  const auto N = field<std::size_t>(j, "N", "plan");
  const auto raw = field<json>(j, "samples", "plan");
  if (!raw.is_array()) {
    throw InputError("plan: \"samples\" must be an array");
  }
  std::vector<SamplePoint> samples;
  for (const auto& p : raw) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      throw InputError("plan: each sample must be [t, v]");
    }
    samples.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  return SamplingPlan(T, N, std::move(samples));
}

std::string reduced_basis_to_json(const ReducedBasis& basis) {
  return json{{"time", matrix_rows(basis.time())}, {"graph", matrix_rows(basis.graph())}}.dump() +
         "\n";
}

ReducedBasis reduced_basis_from_json(std::string_view text, const SpectralSupport& support) {
  const auto j = parse_json(text, "basis");
  auto time = matrix_from_rows(field<json>(j, "time", "basis"), "basis.time");
  auto graph = matrix_from_rows(field<json>(j, "graph", "basis"), "basis.graph");
  return ReducedBasis(std::move(time), std::move(graph), support);
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) {
    throw InputError("empty matrix file");
  }
  std::vector<std::vector<double>> rows;
  for (const auto line : lines) {
    std::vector<double> row;
    for (const auto cell : split(line, ',')) {
      row.push_back(parse_double(cell));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("ragged CSV: line " + std::to_string(rows.size() + 1) + " has " +
                       std::to_string(row.size()) + " values, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

std::string signal_to_csv(const JointSignal& x) { return matrix_to_csv(x.matrix()); }

JointSignal signal_from_csv(std::string_view text) { return JointSignal(matrix_from_csv(text)); }

std::string samples_to_csv(const SamplingPlan& plan, const Vector& values) {
  if (static_cast<std::size_t>(values.size()) != plan.size()) {
    throw InputError("sample count does not match the plan");
  }
  std::string out = "t,v,value\n";
  Eigen::Index r = 0;
  for (const auto& p : plan.samples()) {
    out += std::to_string(p.t) + ',' + std::to_string(p.v) + ',' + format_double(values(r++)) +
           '\n';
  }
  return out;
}

Vector samples_from_csv(std::string_view text, const SamplingPlan& plan) {
  auto lines = lines_of(text);
  if (!lines.empty() && lines.front().rfind("t,", 0) == 0) {
    lines.erase(lines.begin());
  }
  if (lines.size() != plan.size()) {
    throw InputError("samples file has " + std::to_string(lines.size()) +
                     " rows but the plan has " + std::to_string(plan.size()) + " samples");
  }
  Vector values(static_cast<Eigen::Index>(lines.size()));
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (cells.size() != 3) {
      throw InputError("samples file line " + std::to_string(r + 1) + ": expected t,v,value");
    }
    const SamplePoint p{parse_index(cells[0]), parse_index(cells[1])};
    if (p != plan.samples()[r]) {
      throw InputError("samples file line " + std::to_string(r + 1) +
                       " does not match the plan's sample order");
    }
    values(static_cast<Eigen::Index>(r)) = parse_double(cells[2]);
  }
  return values;
}

std::string schedule_to_csv(const SamplingPlan& plan) {
  std::string out = "vertex,samples,time_slots\n";
  const auto sched = plan.schedule();
  for (std::size_t v = 0; v < sched.size(); ++v) {
    out += std::to_string(v) + ',' + std::to_string(sched[v].size()) + ',' +
           join_indices(sched[v]) + '\n';
  }
  return out;
}

std::string exhaustive_report_to_json(const oracle::ExhaustiveReport& report,
                                      const SpectralSupport& support) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json samples = json::array();
    for (const auto& p : v.samples) {
      samples.push_back(json::array({p.t, p.v}));
    }
    violations.push_back({{"bound", v.bound}, {"samples", samples}});
  }
  json j = {{"K", support.bandwidth()},
            {"K_T", support.time_bandwidth()},
            {"K_G", support.graph_bandwidth()},
            {"joint_rank", report.joint_rank},
            {"min_qualified_size", report.min_qualified_size
                                       ? json(*report.min_qualified_size)
                                       : json(nullptr)},
            {"qualified_at_k", report.qualified_at_k},
            {"critical_at_k", report.critical_at_k},
            {"exists_critical", report.exists_critical},
            {"subsets_checked", report.subsets_checked},
            {"bound_violations", violations}};
  return j.dump(2) + "\n";
}

}  // namespace tvs::io
