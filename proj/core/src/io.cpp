#include "lieball/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lieball/errors.hpp"

namespace lieball::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double parse_double(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError("not a number: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void write_row(std::ostream& out, const RealVec& v, bool& first) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!first) out << ',';
    first = false;
    out << json(v[i]).dump();
  }
}

}  // namespace

json to_json(const RealVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

RealVec real_vec_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of numbers");
  RealVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw FormatError("expected an array of numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

json to_json(const CplxPoint& z) {
  return json{{"re", to_json(RealVec(z.real()))}, {"im", to_json(RealVec(z.imag()))}};
}

CplxPoint cplx_point_from_json(const json& j) {
  const RealVec re = real_vec_from_json(field(j, "re"));
  const RealVec im = real_vec_from_json(field(j, "im"));
  if (re.size() != im.size()) throw FormatError("complex point: re/im length mismatch");
  CplxPoint z(re.size());
  z.real() = re;
  z.imag() = im;
  return z;
}

json to_json(const TangentVector& tv) { return json{{"x", to_json(tv.x)}, {"v", to_json(tv.v)}}; }

TangentVector tangent_vector_from_json(const json& j) {
  TangentVector tv{real_vec_from_json(field(j, "x")), real_vec_from_json(field(j, "v"))};
  if (tv.x.size() != tv.v.size()) throw FormatError("tangent vector: x/v length mismatch");
  return tv;
}

json to_json(const OrientedSphere& s) {
  return json{{"center", to_json(s.center)}, {"radius_vector", to_json(s.radius_vector)}};
}

OrientedSphere sphere_from_json(const json& j) {
  OrientedSphere s{real_vec_from_json(field(j, "center")),
                   real_vec_from_json(field(j, "radius_vector"))};
  if (s.center.size() != s.radius_vector.size())
    throw FormatError("sphere: center/radius_vector length mismatch");
  return s;
}

json to_json(const HyperbolicMotion& g) {
  const int n = g.dim();
  json rho = json::array();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) rho.push_back(g.orthogonal_part()(i, k));
  return json{{"orthogonal_part", rho}, {"a", to_json(g.translation_param())}, {"n", n}};
}

HyperbolicMotion motion_from_json(const json& j) {
  const json& nj = field(j, "n");
  if (!nj.is_number_integer()) throw FormatError("motion: n must be an integer");
  const int n = nj.get<int>();
  if (n < 2) throw FormatError("motion: n must be at least 2");
  const RealVec flat = real_vec_from_json(field(j, "orthogonal_part"));
  const RealVec a = real_vec_from_json(field(j, "a"));
  if (flat.size() != n * n || a.size() != n) throw FormatError("motion: array lengths do not match n");
  RealMat rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) rho(i, k) = flat[i * n + k];
  return HyperbolicMotion(std::move(rho), a);
}

json to_json(const MetricTensor& m) {
  const auto dim = m.matrix.rows();
  json flat = json::array();
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k) flat.push_back(m.matrix(i, k));
  return json{{"x", to_json(m.point.x)}, {"v", to_json(m.point.v)}, {"dim", dim}, {"matrix", flat}};
}

json to_json(const oracles::VerificationReport& r) {
  return json{{"suite", r.suite}, {"n", r.n},           {"trials", r.trials},
              {"seed", r.seed},   {"max_error", r.max_error}, {"pass", r.pass}};
}

oracles::VerificationReport report_from_json(const json& j) {
  oracles::VerificationReport r;
  r.suite = field(j, "suite").get<std::string>();
  r.n = field(j, "n").get<int>();
  r.trials = field(j, "trials").get<int>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.max_error = field(j, "max_error").get<double>();
  r.pass = field(j, "pass").get<bool>();
  return r;
}

void emit_path(const GeodesicPath& path, PathFormat format, std::ostream& out) {
  if (path.samples.empty()) throw FormatError("emit_path: empty path");
  const int n = path.samples.front().point.dim();
  if (format == PathFormat::kJsonLines) {
    for (const auto& s : path.samples) {
      const json line{{"x", to_json(s.point.x)},
                      {"v", to_json(s.point.v)},
                      {"xdot", to_json(RealVec(s.velocity.head(n)))},
                      {"vdot", to_json(RealVec(s.velocity.tail(n)))}};
      out << line.dump() << '\n';
    }
  } else {
    bool first = true;
    for (const char* prefix : {"x", "v", "xdot", "vdot"})
      for (int i = 1; i <= n; ++i) {
        if (!first) out << ',';
        first = false;
        out << prefix << i;
      }
    out << '\n';
    for (const auto& s : path.samples) {
      first = true;
      write_row(out, s.point.x, first);
      write_row(out, s.point.v, first);
      write_row(out, s.velocity, first);
      out << '\n';
    }
  }
  if (!out) throw FormatError("emit_path: write failed");
}

std::vector<GeodesicSample> read_path_json_lines(std::istream& in) {
  std::vector<GeodesicSample> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(e.what());
    }
    const RealVec xdot = real_vec_from_json(field(j, "xdot"));
    const RealVec vdot = real_vec_from_json(field(j, "vdot"));
    RealVec velocity(xdot.size() + vdot.size());
    velocity << xdot, vdot;
    samples.push_back({tangent_vector_from_json(j), std::move(velocity)});
  }
  return samples;
}

RealVec parse_real_list(std::string_view text) {
  const auto parts = split(text, ',');
  RealVec v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_double(parts[i]);
  return v;
}

CplxPoint parse_complex_list(std::string_view text) {
  const auto coords = split(text, ';');
  CplxPoint z(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto pair = split(coords[i], ',');
    if (pair.size() != 2) throw FormatError("complex coordinate must be 're,im': '" + std::string(coords[i]) + "'");
    z[static_cast<Eigen::Index>(i)] = Complex(parse_double(pair[0]), parse_double(pair[1]));
  }
  return z;
}

}  // namespace lieball::io
