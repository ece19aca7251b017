#include "tropreg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tropreg {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool parse_cell(const std::string& cell, double& out) {
  std::string l = lower(cell);
  if (l == "-inf" || l == "-infinity") {
    out = kBot;
    return true;
  }
  if (cell.empty()) return false;
  const char* b = cell.data();
  const char* e = b + cell.size();
  if (*b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e && std::isfinite(out);
}

// a header has no numeric cell; a partly numeric first line is data and fails later
bool header_line(const std::vector<std::string>& cells) {
  double d;
  return std::none_of(cells.begin(), cells.end(), [&](const std::string& c) { return parse_cell(c, d); });
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& text, const char* what) {
  std::vector<std::pair<long, long>> out;
  auto lines = lines_of(text);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    auto cells = split_cells(lines[r]);
    if (r == 0 && header_line(cells)) continue;
    if (cells.size() != 2) throw ParseError(std::string(what) + ": line " + std::to_string(r + 1) + " needs two fields");
    long v[2];
    for (int t = 0; t < 2; ++t) {
      const std::string& c = cells[t];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v[t]);
      if (ec != std::errc() || ptr != c.data() + c.size())
        throw ParseError(std::string(what) + ": bad integer '" + c + "'");
    }
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

Index parse_assignment(const std::string& text, std::size_t count, std::size_t n, const char* what) {
  Index out(count, -1);
  for (auto [key, val] : parse_pairs(text, what)) {
    if (key < 1 || static_cast<std::size_t>(key) > count)
      throw ParseError(std::string(what) + ": index " + std::to_string(key) + " out of range");
    if (val < 1 || static_cast<std::size_t>(val) > n)
      throw ParseError(std::string(what) + ": value " + std::to_string(val) + " out of range");
    if (out[key - 1] != -1) throw ParseError(std::string(what) + ": index " + std::to_string(key) + " repeated");
    out[key - 1] = static_cast<int>(val - 1);
  }
  for (std::size_t k = 0; k < count; ++k)
    if (out[k] == -1) throw ParseError(std::string(what) + ": index " + std::to_string(k + 1) + " missing");
  return out;
}

std::string shortest(double x) {
  if (is_bot(x)) return "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

TropMatrix parse_matrix_text(const std::string& text) {
  auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  std::vector<Vec> rows;
  std::size_t width = 0;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    auto cells = split_cells(lines[r]);
    if (r == 0 && header_line(cells)) {
      width = cells.size();
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width)
      throw ParseError("ragged row " + std::to_string(r + 1) + ": " + std::to_string(cells.size()) + " fields, expected " +
                       std::to_string(width));
    Vec row(width);
    for (std::size_t k = 0; k < width; ++k)
      if (!parse_cell(cells[k], row[k]))
        throw ParseError("row " + std::to_string(r + 1) + ": cannot parse '" + cells[k] + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix file has no data rows");
  return TropMatrix::from_rows(rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

TropMatrix parse_matrix(const std::string& path) { return parse_matrix_text(read_file(path)); }

std::string emit_matrix(const TropMatrix& V, const std::vector<std::string>& header) {
  std::string out;
  if (!header.empty()) {
    for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
    out += '\n';
  }
  for (std::size_t i = 0; i < V.rows(); ++i) {
    for (std::size_t k = 0; k < V.cols(); ++k) out += (k ? "," : "") + shortest(V(i, k));
    out += '\n';
  }
  return out;
}

Index parse_types(const std::string& text, std::size_t p, std::size_t n) {
  return parse_assignment(text, p, n, "types");
}

Index parse_winners(const std::string& text, std::size_t q, std::size_t n) {
  return parse_assignment(text, q, n, "winners");
}

PartitionIJ parse_partition(const std::string& I, const std::string& J, std::size_t n) {
  auto list = [](std::string s) {
    Index out;
    for (char& c : s)
      if (c == ';' || c == ' ') c = ',';
    for (const std::string& c : split_cells(s)) {
      if (c.empty()) continue;
      int v = 0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size()) throw ParseError("bad index '" + c + "' in partition");
      out.push_back(v - 1);
    }
    return out;
  };
  PartitionIJ p{list(I), list(J)};
  try {
    check_partition(p, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return p;
}

json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (x == kInf) return "inf";
  if (x == kBot) return "-inf";
  return x == 0 ? 0.0 : x;
}

json json_vec(const Vec& x) {
  json a = json::array();
  for (double v : x) a.push_back(json_number(v));
  return a;
}

json json_index(const Index& x) {
  json a = json::array();
  for (int v : x) a.push_back(v + 1);
  return a;
}

json certificate_json(const SpectralCertificate& c) {
  json j;
  j["method"] = to_string(c.method);
  j["rho"] = json_number(c.rho);
  if (c.rho_exact) j["rho_rational"] = c.rho_exact->str();
  j["bounds"] = {{"lower", json_number(c.lower)}, {"upper", json_number(c.upper)}};
  j["iterations"] = c.iterations;
  j["converged"] = c.converged;
  j["verification"] = {{"sub_ok", c.sub_ok}, {"super_ok", c.super_ok}, {"residual", json_number(c.residual)},
                       {"tol", json_number(c.tol)}};
  if (!c.eigenvector.empty()) j["eigenvector"] = json_vec(c.eigenvector);
  if (!c.sub.empty()) j["sub_eigenvector"] = json_vec(c.sub);
  if (!c.super.empty()) j["super_eigenvector"] = json_vec(c.super);
  j["part"] = json_index(c.part);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

namespace {

json base_document(const char* command, const SpectralCertificate& c) {
  json j = certificate_json(c);
  j["command"] = command;
  return j;
}

}  // namespace

json inradius_json(const InradiusResult& r) {
  json j = base_document("inradius", r.cert);
  j["radius"] = json_number(r.radius);
  j["value"] = json_number(r.radius);
  j["center"] = r.center ? json_vec(*r.center) : json(nullptr);
  j["dropped_rows"] = json_index(r.dropped_rows);
  j["dropped_cols"] = json_index(r.dropped_cols);
  return j;
}

json regression_json(const RegressionResult& r) {
  json j = base_document("regress", r.cert);
  j["value"] = json_number(r.value);
  j["apex"] = json_vec(r.apex);
  j["apex_verified"] = r.apex_verified;
  j["center"] = r.ball_center.empty() ? json(nullptr) : json_vec(r.ball_center);
  j["radius"] = json_number(r.ball_radius);
  if (r.witnesses) {
    j["witnesses"] = {{"sigma", json_index(r.witnesses->sigma.sigma)}, {"columns", json_index(r.witnesses->columns)}};
    j["simplicial_support"] = json_index(r.simplicial);
  } else {
    j["witnesses"] = nullptr;
  }
  if (!r.class_distances.empty()) j["class_distances"] = json_vec(r.class_distances);
  j["dropped_cols"] = json_index(r.dropped_cols);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json signed_json(const SignedRegressionResult& r) {
  json j = base_document("regress", r.cert);
  j["value"] = json_number(r.value);
  j["apex"] = json_vec(r.apex);
  j["apex_verified"] = r.apex_verified;
  j["partition"] = {{"I", json_index(r.part.I)}, {"J", json_index(r.part.J)}};
  j["center"] = r.interval_center.empty() ? json(nullptr) : json_vec(r.interval_center);
  j["radius"] = json_number(r.interval_radius);
  j["interval_verified"] = r.interval_verified;
  j["witnesses"] = nullptr;
  return j;
}

json dominion_json(const DominionReport& r) {
  json j;
  j["command"] = "dominions";
  j["found"] = r.found;
  j["verdict"] = to_string(r.verdict);
  j["min_dominion"] = json_index(r.S);
  j["max_dominion"] = json_index(r.max_dominion);
  j["column_set"] = json_index(r.K);
  j["ops"] = r.ops;
  j["message"] = r.message;
  return j;
}

json inference_json(const InferenceReport& r) {
  json j = base_document("auction infer", r.cert);
  j["typed"] = r.typed;
  j["value"] = json_number(r.value);
  j["apex"] = json_vec(r.apex);
  j["f_reg"] = json_vec(r.f_reg);
  j["distance_to_equilibrium"] = json_number(r.distance);
  j["e"] = r.e_defined ? json_number(r.e) : json(nullptr);
  if (!r.class_distances.empty()) j["class_distances"] = json_vec(r.class_distances);
  if (r.typed) j["untyped"] = {{"apex", json_vec(r.untyped_apex)}, {"value", json_number(r.untyped_value)}};
  return j;
}

namespace {

struct P2 {
  double x, y;
};

P2 project(const Vec& x) {
  const double s = std::sqrt(3.0) / 2;
  return {-s * (x[0] - x[1]), -(x[0] + x[1]) / 2 + x[2]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string emit_svg(const TropMatrix& V, const Vec& a, double radius, const SvgOptions& opt,
                     std::vector<std::string>* warnings) {
  if (V.rows() != 3 || a.size() != 3) throw DimensionError("SVG output supports n = 3 only");
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(w);
  };
  std::vector<P2> pts;
  std::vector<Vec> finite_pts;
  for (std::size_t k = 0; k < V.cols(); ++k) {
    Vec x = V.column(k);
    if (!all_finite(x)) {
      warn("point " + std::to_string(k + 1) + " has a -inf coordinate and is not drawn");
      continue;
    }
    finite_pts.push_back(x);
    pts.push_back(project(x));
  }
  Index fin = support(a);
  Vec apex_pt(3);
  for (int i = 0; i < 3; ++i) apex_pt[i] = is_bot(a[i]) ? 0.0 : -a[i];
  double L = 1.0 + std::max(0.0, radius);
  for (const Vec& x : finite_pts) L = std::max(L, 1.0 + hilbert_distance(x, apex_pt) + radius);

  std::vector<std::pair<P2, P2>> rays;
  if (fin.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      Vec e = apex_pt;
      e[i] -= L;
      rays.push_back({project(apex_pt), project(e)});
    }
  } else if (fin.size() == 2) {
    int i = 0;
    while (!is_bot(a[i])) ++i;
    warn("apex has a -inf coordinate; the hyperplane is drawn as a line along e_" + std::to_string(i + 1));
    for (double s : {L, -L}) {
      Vec e = apex_pt;
      e[i] += s;
      rays.push_back({project(apex_pt), project(e)});
    }
  } else {
    warn("apex has fewer than two finite coordinates; no hyperplane drawn");
  }

  std::vector<P2> ball;
  Vec center = opt.ball_center.value_or(apex_pt);
  if (radius > 0 && std::isfinite(radius) && all_finite(center)) {
    static const int S[6][3] = {{0, 0, 1}, {0, 1, 1}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}, {1, 0, 1}};
    for (const auto& s : S) {
      Vec v = center;
      for (int i = 0; i < 3; ++i) v[i] += radius * s[i];
      ball.push_back(project(v));
    }
  } else if (radius > 0) {
    warn("ball not drawn: infinite radius or center");
  }

  double xmin = kInf, xmax = kBot, ymin = kInf, ymax = kBot;
  auto grow = [&](P2 q) {
    xmin = std::min(xmin, q.x), xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y), ymax = std::max(ymax, q.y);
  };
  for (P2 q : pts) grow(q);
  for (auto& [u, v] : rays) grow(u), grow(v);
  for (P2 q : ball) grow(q);
  if (fin.size() == 3) grow(project(apex_pt));
  if (!(xmin <= xmax)) xmin = ymin = -1, xmax = ymax = 1;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 24, scale = (std::min(opt.width, opt.height) - 2 * pad) / span;
  auto X = [&](P2 q) { return fmt(pad + (q.x - xmin) * scale); };
  auto Y = [&](P2 q) { return fmt(opt.height - pad - (q.y - ymin) * scale); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.width) << "\" height=\"" << fmt(opt.height)
    << "\" viewBox=\"0 0 " << fmt(opt.width) << ' ' << fmt(opt.height) << "\">\n";
  if (warnings)
    for (const std::string& w : *warnings) o << "<!-- warning: " << w << " -->\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!ball.empty()) {
    o << "<polygon class=\"ball\" fill=\"#cfe0f5\" fill-opacity=\"0.5\" stroke=\"#3a6ea5\" stroke-dasharray=\"4 3\" points=\"";
    for (std::size_t t = 0; t < ball.size(); ++t) o << (t ? " " : "") << X(ball[t]) << ',' << Y(ball[t]);
    o << "\"/>\n";
  }
  for (auto& [u, v] : rays)
    o << "<line class=\"ray\" x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\"" << Y(v)
      << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  for (P2 q : pts) o << "<circle class=\"point\" cx=\"" << X(q) << "\" cy=\"" << Y(q) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
  if (fin.size() == 3) {
    P2 q = project(apex_pt);
    o << "<circle class=\"apex\" cx=\"" << X(q) << "\" cy=\"" << Y(q) << "\" r=\"5\" fill=\"none\" stroke=\"black\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace tropreg
