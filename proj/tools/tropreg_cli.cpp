// tropreg command line: inradius, regress, dominions, project, auction.
//
// Exit codes: 0 success, 2 parse or usage error, 3 degenerate instance,
// 4 solver did not converge (bounds are still reported).

#include <CLI11.hpp>
#include <iostream>

#include "tropreg/io.hpp"

namespace {

using namespace tropreg;
using nlohmann::json;

constexpr int kExitOk = 0, kExitParse = 2, kExitDegenerate = 3, kExitNonConvergence = 4;

struct Common {
  std::string method = "km";
  double eps = 0, gamma = 0.5;
  long max_iter = 0;
  bool json_out = false, allow_degenerate = false;
  std::string svg;

  SolverConfig config() const {
    SolverConfig c;
    c.method = parse_method(method);
    c.gamma = gamma;
    // value iteration is O(1/k), so its defaults are looser than KM's
    c.epsilon = eps > 0 ? eps : (c.method == Method::vi ? 1e-4 : 1e-8);
    c.max_iter = max_iter > 0 ? max_iter : 1000000;
    c.validate();
    return c;
  }
};

void add_solver_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--method", o.method, "km, vi or exact")->check(CLI::IsMember({"km", "vi", "exact"}));
  cmd->add_option("--eps", o.eps, "target residual (km) or bound gap (vi)");
  cmd->add_option("--gamma", o.gamma, "KM damping in (0,1)");
  cmd->add_option("--max-iter", o.max_iter, "iteration cap");
}

void add_output_flags(CLI::App* cmd, Common& o) {
  cmd->add_flag("--json", o.json_out, "print a JSON result document");
  cmd->add_option("--svg", o.svg, "write an SVG drawing (n = 3 only)");
  cmd->add_flag("--allow-degenerate", o.allow_degenerate, "accept identically -inf rows or columns");
}

TropMatrix load(const std::string& path, bool allow_degenerate) {
  TropMatrix V = parse_matrix(path);
  if (!allow_degenerate) V.validate();
  return V;
}

void print_vec(std::ostream& os, const char* key, const Vec& x) { os << key << ": " << format_vec(x) << '\n'; }

void print_index(std::ostream& os, const char* key, const Index& x) {
  os << key << ":";
  for (int i : x) os << ' ' << i + 1;
  os << '\n';
}

void print_cert(std::ostream& os, const SpectralCertificate& c) {
  os << "method: " << to_string(c.method) << '\n' << "rho: " << c.rho;
  if (c.rho_exact) os << " (" << c.rho_exact->str() << ")";
  os << "\nbounds: [" << c.lower << ", " << c.upper << "]\n"
     << "iterations: " << c.iterations << '\n'
     << "converged: " << (c.converged ? "yes" : "no") << '\n'
     << "verification: sub " << (c.sub_ok ? "ok" : "failed") << ", super " << (c.super_ok ? "ok" : "failed")
     << ", residual " << c.residual << '\n';
  if (!c.note.empty()) os << "note: " << c.note << '\n';
}

int status_of(const SpectralCertificate& c, double value) {
  if (!std::isfinite(value)) return kExitDegenerate;
  if (!c.converged) return kExitNonConvergence;
  return kExitOk;
}

void write_svg(const Common& o, const TropMatrix& V, const Vec& a, double radius, const Vec& center) {
  if (o.svg.empty()) return;
  SvgOptions so;
  if (!center.empty()) so.ball_center = center;
  std::vector<std::string> warnings;
  write_file(o.svg, emit_svg(V, a, std::isfinite(radius) ? radius : 0.0, so, &warnings));
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

int run_inradius(const std::string& file, const Common& o) {
  TropMatrix V = load(file, o.allow_degenerate);
  InradiusResult r = inradius(V, o.config());
  if (o.json_out) {
    std::cout << inradius_json(r).dump(2) << '\n';
  } else {
    print_cert(std::cout, r.cert);
    std::cout << "radius: " << r.radius << '\n';
    if (r.center) print_vec(std::cout, "center", *r.center);
  }
  if (!o.svg.empty() && std::isfinite(r.radius)) {
    const Vec& a = r.cert.eigenvector.empty() ? r.cert.sub : r.cert.eigenvector;
    write_svg(o, V, canonicalize(a), r.radius, r.center.value_or(Vec{}));
  }
  return status_of(r.cert, r.radius);
}

int run_regress(const std::string& file, const Common& o, const std::vector<std::string>& signed_part,
                const std::string& types_file) {
  TropMatrix V = load(file, o.allow_degenerate);
  const SolverConfig cfg = o.config();
  if (!signed_part.empty()) {
    if (!types_file.empty()) throw CLI::ValidationError("--signed and --typed are exclusive");
    std::string I, J;
    for (const std::string& s : signed_part) {
      if (s.rfind("I=", 0) == 0) I = s.substr(2);
      else if (s.rfind("J=", 0) == 0) J = s.substr(2);
      else throw ParseError("--signed expects I=... J=...");
    }
    SignedRegressionResult r = regress_signed(V, parse_partition(I, J, V.rows()), cfg);
    if (o.json_out) {
      std::cout << signed_json(r).dump(2) << '\n';
    } else {
      print_cert(std::cout, r.cert);
      std::cout << "value: " << r.value << '\n';
      print_vec(std::cout, "apex", r.apex);
      if (!r.interval_center.empty()) {
        print_vec(std::cout, "interval center", r.interval_center);
        std::cout << "interval verified: " << (r.interval_verified ? "yes" : "no") << '\n';
      }
    }
    return status_of(r.cert, r.value);
  }
  RegressionResult r;
  if (!types_file.empty()) {
    Index types = parse_types(read_file(types_file), V.cols(), V.rows());
    r = regress_typed(V, types, cfg);
  } else {
    r = best_hyperplane(V, cfg);
  }
  if (o.json_out) {
    json j = regression_json(r);
    if (!types_file.empty()) j["typed"] = true;
    std::cout << j.dump(2) << '\n';
  } else {
    print_cert(std::cout, r.cert);
    std::cout << "value: " << r.value << '\n';
    print_vec(std::cout, "apex", r.apex);
    if (r.witnesses) {
      print_index(std::cout, "witnesses", r.witnesses->columns);
      print_index(std::cout, "simplicial support", r.simplicial);
    }
    if (!r.class_distances.empty()) print_vec(std::cout, "class distances", r.class_distances);
    if (!r.note.empty()) std::cout << "note: " << r.note << '\n';
  }
  if (std::isfinite(r.value) && !r.apex.empty()) write_svg(o, V, r.apex, r.value, r.ball_center);
  return status_of(r.cert, r.value);
}

int run_dominions(const std::string& file, bool json_out) {
  TropMatrix V = parse_matrix(file);
  DominionReport r = dominion_report(V);
  if (json_out) {
    std::cout << dominion_json(r).dump(2) << '\n';
  } else {
    std::cout << "verdict: " << to_string(r.verdict) << '\n';
    if (r.found) {
      print_index(std::cout, "min dominion", r.S);
      print_index(std::cout, "max dominion", r.max_dominion);
      print_index(std::cout, "columns", r.K);
    }
    std::cout << r.message << '\n';
  }
  return r.verdict == DominionVerdict::invalid_input ? kExitParse : kExitOk;
}

Vec parse_vector(const std::string& s) {
  TropMatrix m = parse_matrix_text(s);
  if (m.rows() != 1) throw ParseError("expected a comma separated vector");
  return m.row(0);
}

int run_project(const std::string& file, const std::string& apex, const std::string& point,
                const std::vector<std::string>& signed_part, bool json_out) {
  TropMatrix V = parse_matrix(file);
  json doc;
  doc["command"] = "project";
  if (!point.empty()) {
    Vec x = parse_vector(point);
    if (x.size() != V.rows()) throw ParseError("point has the wrong length");
    Vec y = cone_project(V, x);
    doc["projection"] = json_vec(y);
    doc["distance"] = json_number(hilbert_distance(x, y));
    doc["in_column_space"] = in_column_space(V, x);
  } else if (!apex.empty()) {
    Vec a = parse_vector(apex);
    if (a.size() != V.rows()) throw ParseError("apex has the wrong length");
    std::optional<PartitionIJ> part;
    if (!signed_part.empty()) {
      std::string I, J;
      for (const std::string& s : signed_part) (s.rfind("I=", 0) == 0 ? I : J) = s.substr(2);
      part = parse_partition(I, J, V.rows());
    }
    json pts = json::array();
    double worst = 0;
    for (std::size_t k = 0; k < V.cols(); ++k) {
      Vec x = V.column(k);
      json e;
      if (part) {
        SignedProjection sp = signed_project_and_distance(x, a, *part);
        e["projection"] = json_vec(sp.point);
        e["distance"] = json_number(sp.distance);
        worst = std::max(worst, sp.distance);
      } else {
        double d = hyperplane_distance(x, a);
        e["distance"] = json_number(d);
        e["projection"] = std::isfinite(d) ? json_vec(hyperplane_project(x, a)) : json(nullptr);
        worst = std::max(worst, d);
      }
      pts.push_back(e);
    }
    doc["points"] = pts;
    doc["distance"] = json_number(worst);
  } else {
    throw CLI::ValidationError("project needs --apex or --point");
  }
  if (json_out) {
    std::cout << doc.dump(2) << '\n';
  } else if (doc.contains("points")) {
    for (std::size_t k = 0; k < doc["points"].size(); ++k)
      std::cout << "point " << k + 1 << ": distance " << doc["points"][k]["distance"].dump() << '\n';
    std::cout << "max distance: " << doc["distance"].dump() << '\n';
  } else {
    std::cout << "projection: " << doc["projection"].dump() << "\ndistance: " << doc["distance"].dump() << '\n';
  }
  return kExitOk;
}

std::vector<Vec> prices_of(const TropMatrix& P) {
  std::vector<Vec> rows = P.to_rows();
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropreg: best-fit tropical hyperplanes and inner radii"};
  app.require_subcommand(1);
  Common o;
  std::string file, types_file, winners_file, apex, point, out, winners_out, f_text, p_text;
  std::vector<std::string> signed_part;
  std::size_t n_firms = 3, q = 6;
  double delta = 0.05;
  std::uint64_t seed = 42;

  auto* c_in = app.add_subcommand("inradius", "inner radius of the cone spanned by the columns");
  c_in->add_option("matrix", file, "CSV matrix")->required();
  add_solver_flags(c_in, o);
  add_output_flags(c_in, o);

  auto* c_re = app.add_subcommand("regress", "best (signed or typed) tropical hyperplane");
  c_re->add_option("matrix", file, "CSV matrix")->required();
  c_re->add_option("--signed", signed_part, "signed regression, e.g. --signed I=1,2 J=3")->expected(2);
  c_re->add_option("--typed", types_file, "CSV of column_index,type");
  add_solver_flags(c_re, o);
  add_output_flags(c_re, o);

  auto* c_do = app.add_subcommand("dominions", "disjoint dominions of the associated game");
  c_do->add_option("matrix", file, "CSV matrix")->required();
  c_do->add_flag("--json", o.json_out, "print a JSON result document");

  auto* c_pr = app.add_subcommand("project", "project points onto a hyperplane or onto the column space");
  c_pr->add_option("matrix", file, "CSV matrix")->required();
  c_pr->add_option("--apex", apex, "hyperplane parameter a, comma separated");
  c_pr->add_option("--point", point, "point to project onto the column space");
  c_pr->add_option("--signed", signed_part, "signed hyperplane, e.g. --signed I=1 J=2,3")->expected(2);
  c_pr->add_flag("--json", o.json_out, "print a JSON result document");

  auto* c_au = app.add_subcommand("auction", "synthetic tenders and preference inference");
  c_au->require_subcommand(1);
  auto* c_sim = c_au->add_subcommand("simulate", "generate a price table");
  c_sim->add_option("--firms", n_firms, "number of firms");
  c_sim->add_option("--tenders", q, "number of tenders");
  c_sim->add_option("--factors", f_text, "preference factors, comma separated (default 1,0.8,0.6)");
  c_sim->add_option("--reference-prices", p_text, "reference prices, comma separated (default: drawn on [1,100])");
  c_sim->add_option("--delta", delta, "noise amplitude");
  c_sim->add_option("--seed", seed, "random seed");
  c_sim->add_option("--out", out, "write prices CSV here (default stdout)");
  c_sim->add_option("--winners-out", winners_out, "write winners CSV here");
  c_sim->add_flag("--json", o.json_out, "print a JSON document instead of CSV");
  auto* c_inf = c_au->add_subcommand("infer", "infer preference factors from prices");
  c_inf->add_option("prices", file, "CSV price table, firms x tenders")->required();
  c_inf->add_option("--winners", winners_file, "CSV of tender_id,firm_id");
  add_solver_flags(c_inf, o);
  c_inf->add_flag("--json", o.json_out, "print a JSON result document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (c_in->parsed()) return run_inradius(file, o);
    if (c_re->parsed()) return run_regress(file, o, signed_part, types_file);
    if (c_do->parsed()) return run_dominions(file, o.json_out);
    if (c_pr->parsed()) return run_project(file, apex, point, signed_part, o.json_out);
    if (c_sim->parsed()) {
      AuctionParams p;
      p.n = n_firms;
      p.q = q;
      if (!f_text.empty()) p.f = parse_vector(f_text);
      else if (n_firms != 3) throw CLI::ValidationError("--factors is required when --firms != 3");
      if (!p_text.empty()) p.reference_prices = parse_vector(p_text);
      p.delta = delta;
      p.seed = seed;
      AuctionInstance inst = simulate(p);
      TropMatrix P = TropMatrix::from_rows(inst.prices);
      std::string csv = emit_matrix(P);
      std::string wcsv = "tender_id,firm_id\n";
      for (std::size_t j = 0; j < inst.winners->size(); ++j)
        wcsv += std::to_string(j + 1) + "," + std::to_string((*inst.winners)[j] + 1) + "\n";
      if (!out.empty()) write_file(out, csv);
      if (!winners_out.empty()) write_file(winners_out, wcsv);
      if (o.json_out) {
        json j;
        j["command"] = "auction simulate";
        j["prices"] = json::array();
        for (const Vec& row : inst.prices) j["prices"].push_back(json_vec(row));
        j["f"] = json_vec(inst.f);
        j["reference_prices"] = json_vec(inst.reference_prices);
        j["winners"] = json_index(*inst.winners);
        j["delta"] = inst.delta;
        j["seed"] = inst.seed;
        std::cout << j.dump(2) << '\n';
      } else if (out.empty()) {
        std::cout << csv;
      }
      return kExitOk;
    }
    if (c_inf->parsed()) {
      TropMatrix P = parse_matrix(file);
      std::optional<Index> winners;
      if (!winners_file.empty()) winners = parse_winners(read_file(winners_file), P.cols(), P.rows());
      SolverConfig cfg = inference_config();
      if (o.method != "km" || o.eps > 0 || o.max_iter > 0) cfg = o.config();
      cfg.gamma = o.gamma;
      InferenceReport r = infer(prices_of(P), winners, cfg);
      if (o.json_out) {
        std::cout << inference_json(r).dump(2) << '\n';
      } else {
        print_vec(std::cout, "f_reg", r.f_reg);
        std::cout << "value: " << r.value << "\ndistance to equilibrium: " << r.distance << "\ne: ";
        if (r.e_defined) std::cout << r.e << '\n';
        else std::cout << "undefined (all price columns have equal entries)\n";
        std::cout << "iterations: " << r.iterations << '\n';
        if (r.typed) {
          print_vec(std::cout, "untyped apex", r.untyped_apex);
          std::cout << "untyped value: " << r.untyped_value << '\n';
        }
      }
      return r.cert.converged ? kExitOk : kExitNonConvergence;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DegenerateOperator& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    if (o.json_out) std::cout << json{{"error", "degenerate"}, {"message", e.what()}}.dump(2) << '\n';
    return kExitDegenerate;
  } catch (const NonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitParse;
}
