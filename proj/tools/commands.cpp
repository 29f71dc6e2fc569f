#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "monogenica/io.hpp"
#include "monogenica/pde.hpp"

namespace monogenica::cli {

using nlohmann::json;

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.15g, %.15g)", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string label(const Violation& v) {
  auto join = [&](const char* names) {
    std::string out = std::string(names) + "=(";
    for (std::size_t i = 0; i < v.indices.size(); ++i) out += (i ? "," : "") + std::to_string(v.indices[i]);
    return out + ")";
  };
  auto first = [&](const char* name) {
    return v.indices.empty() ? std::string() : std::string(name) + "=" + std::to_string(v.indices[0]);
  };
  switch (v.check) {
    case Check::IndexRange:
    case Check::Symmetry:
    case Check::Triangularity:
      return v.indices.size() == 3 ? join("(r,s,k)") : first("s");
    case Check::Associativity1: return join("(r,s,p)");
    case Check::Associativity2: return join("(u,s,p)");
    case Check::UnitAction: return first("s");
    case Check::TriadDimension: return join("(len a,len b)");
    case Check::TriadRank: return first("rank");
    case Check::Surjectivity: return first("u");
    case Check::FunctionCount: return join("(got,want)");
  }
  return {};
}

MonogenicSpec checked_spec(const Job& job) {
  MonogenicSpec ms = io::monogenic_from_json(job.doc, job.base_dir);
  const ValidationReport report = validate_monogenic(ms);
  if (!report.ok()) throw InvalidSpec("invalid job:\n" + report.to_string());
  return ms;
}

PointR3 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a point is [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

PointR3 job_point(const Job& job, const Options& opts) {
  if (opts.point) return {(*opts.point)[0], (*opts.point)[1], (*opts.point)[2]};
  if (!job.doc.contains("point")) throw ParseError("no evaluation point: give \"point\" in the job or --point");
  return point_from_json(job.doc.at("point"));
}

QuadratureOptions quadrature(const Options& opts) {
  QuadratureOptions q;
  if (opts.nodes) {
    if (*opts.nodes < 8) throw ParseError("--nodes must be at least 8");
    q.nodes = *opts.nodes;
    q.max_nodes = std::max(q.max_nodes, q.nodes);
  }
  return q;
}

Element evaluate(const MonogenicSpec& ms, const PointR3& p, Method method, int order, const QuadratureOptions& quad,
                 QuadratureReport* report) {
  switch (method) {
    case Method::Explicit: return eval_explicit(ms, p, order);
    case Method::Integral:
      return order == 0 ? eval_integral(ms, p, quad, report) : gateaux_derivative(ms, p, order, quad, report);
    case Method::Special: return eval_special(ms, p, order);
  }
  return {};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Explicit: return "explicit";
    case Method::Integral: return "integral";
    case Method::Special: return "special";
  }
  return "?";
}

// Either a fixed value or [lo, hi, count].
std::vector<double> axis_values(const json& grid, const char* name) {
  if (!grid.contains(name)) throw ParseError(std::string("grid is missing axis \"") + name + "\"");
  const json& a = grid.at(name);
  if (a.is_number()) return {a.get<double>()};
  if (!a.is_array() || a.size() != 3) throw ParseError(std::string("grid axis ") + name + " is a number or [lo, hi, count]");
  const double lo = a[0].get<double>(), hi = a[1].get<double>();
  const int count = a[2].get<int>();
  if (!(hi > lo) || count < 2) throw ParseError(std::string("grid axis ") + name + " needs hi > lo and count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[std::size_t(i)] = i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
  return out;
}

void append_number(std::string& s, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v + 0.0);
  s.append(buf, res.ptr);
}

double min_separation(const TriadSpec& triad, const PointR3& p, int m) {
  double best = std::numeric_limits<double>::infinity();
  for (int u = 1; u <= m; ++u) {
    for (int v = u + 1; v <= m; ++v) {
      const double d = std::abs(xi(triad, p, u) - xi(triad, p, v));
      if (d > 0.0) best = std::min(best, d);
    }
  }
  return best;
}

std::vector<PointR3> check_points(const MonogenicSpec& ms, const json& cfg) {
  const json spec = cfg.value("points", json(20));
  std::vector<PointR3> out;
  if (spec.is_array()) {
    for (const json& p : spec) out.push_back(point_from_json(p));
    return out;
  }
  const int count = spec.get<int>();
  std::mt19937_64 rng(cfg.value("seed", 1u));
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int attempt = 0; int(out.size()) < count && attempt < 1000 * count; ++attempt) {
    const PointR3 p{coord(rng), coord(rng), coord(rng)};
    if (min_separation(ms.triad, p, ms.algebra.m()) >= 0.1) out.push_back(p);
  }
  return out;
}

struct Verdicts {
  std::ostream& out;
  bool all_pass = true;

  void line(const std::string& name, bool pass, const std::string& detail) {
    all_pass = all_pass && pass;
    out << (pass ? "PASS " : "FAIL ") << name << " " << detail << "\n";
  }
};

}  // namespace

Job load_job(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) throw IoError("job file not found: " + path.string());
  return {io::read_json_file(path), std::filesystem::absolute(path).parent_path()};
}

int cmd_validate(const Job& job, const Options&, std::ostream& out) {
  const MonogenicSpec ms = io::monogenic_from_json(job.doc, job.base_dir, false);
  const AlgebraSpec& alg = ms.algebra;
  const ValidationReport algebra_report = validate_algebra(alg);
  const ValidationReport report = validate_monogenic(ms);

  bool all_pass = true;
  const Check order[] = {Check::IndexRange,     Check::Symmetry,     Check::Triangularity,
                         Check::Associativity1, Check::Associativity2, Check::UnitAction,
                         Check::TriadDimension, Check::TriadRank,    Check::Surjectivity,
                         Check::FunctionCount};
  for (Check c : order) {
    std::vector<std::string> seen;
    for (const Violation& v : report.violations) {
      if (v.check != c) continue;
      const std::string text = label(v) + ": " + v.detail;
      if (std::find(seen.begin(), seen.end(), text) != seen.end()) continue;
      seen.push_back(text);
      out << "FAIL " << check_name(c) << " " << text << "\n";
    }
    if (seen.empty()) out << "PASS " << check_name(c) << "\n";
    all_pass = all_pass && seen.empty();
  }

  if (!algebra_report.ok()) {
    out << "SKIP lemma-2\nSKIP special-case\n";
    return kCheckFailed;
  }
  // generic distinct T values so that B_{r,p} = 0 is structural, not accidental
  Element t = Element::Zero(alg.n());
  for (int s = alg.m() + 1; s <= alg.n(); ++s) t(s - 1) = Complex(1.0 + 0.37 * s, 0.61 - 0.13 * s * s);
  const auto lemma2 = lemma2_audit(alg, b_coeffs(alg, t));
  for (const auto& v : lemma2) {
    out << "FAIL lemma-2 (r,p)=(" << v.r << "," << v.p << "): B_{r,p} != 0 with u_r != u_p\n";
  }
  if (lemma2.empty()) {
    out << "PASS lemma-2\n";
    out << "PASS special-case: " << special_case_name(classify_special_case(alg)) << "\n";
  } else {
    out << "SKIP special-case\n";
    all_pass = false;
  }
  return all_pass ? kOk : kCheckFailed;
}

int cmd_eval(const Job& job, const Options& opts, std::ostream& out) {
  const MonogenicSpec ms = checked_spec(job);
  const PointR3 p = job_point(job, opts);
  if (opts.order < 0) throw ParseError("--order must be nonnegative");
  const QuadratureOptions quad = quadrature(opts);
  QuadratureReport qreport;
  const Element value = evaluate(ms, p, opts.method, opts.order, quad, &qreport);
  for (Eigen::Index k = 0; k < value.size(); ++k) out << "U" << k + 1 << " = " << complex_text(value(k)) << "\n";

  if (opts.compare) {
    double worst = 0.0;
    for (Method other : {Method::Explicit, Method::Integral, Method::Special}) {
      if (other == opts.method) continue;
      if (other == Method::Special && classify_special_case(ms.algebra) == SpecialCase::General) continue;
      const Element v = evaluate(ms, p, other, opts.order, quad, &qreport);
      const double dev = (v - value).cwiseAbs().maxCoeff();
      worst = std::max(worst, dev);
      out << "deviation " << method_name(other) << " vs " << method_name(opts.method) << ": "
          << fmt("%.3e", dev) << "\n";
    }
    out << "max deviation: " << fmt("%.3e", worst) << "\n";
  }
  for (const auto& w : qreport.warnings) out << "warning: " << w << "\n";
  return kOk;
}

int cmd_grid(const Job& job, const Options& opts, std::ostream& out) {
  const MonogenicSpec ms = checked_spec(job);
  if (!job.doc.contains("grid")) throw ParseError("missing field \"grid\"");
  const json& grid = job.doc.at("grid");
  const auto xs = axis_values(grid, "x"), ys = axis_values(grid, "y"), zs = axis_values(grid, "z");
  const QuadratureOptions quad = quadrature(opts);
  const int n = ms.algebra.n();

  std::string csv = "x,y,z";
  for (int k = 1; k <= n; ++k) csv += ",Re_U" + std::to_string(k) + ",Im_U" + std::to_string(k);
  csv += "\n";
  std::size_t rows = 0;
  for (double x : xs) {
    for (double y : ys) {
      for (double z : zs) {
        const Element v = evaluate(ms, {x, y, z}, opts.method, opts.order, quad, nullptr);
        for (double c : {x, y, z}) {
          append_number(csv, c);
          csv += ",";
        }
        for (int k = 0; k < n; ++k) {
          append_number(csv, v(k).real());
          csv += ",";
          append_number(csv, v(k).imag());
          csv += k + 1 < n ? "," : "\n";
        }
        ++rows;
      }
    }
  }

  std::optional<std::filesystem::path> target;
  if (opts.out) {
    target = *opts.out;
  } else if (job.doc.contains("output")) {
    target = job.base_dir / job.doc.at("output").get<std::string>();
  }
  if (!target) {
    out << csv;
    return kOk;
  }
  std::ofstream file(*target, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + target->string());
  file << csv;
  file.close();
  if (!file) throw IoError("write failed for " + target->string());
  out << "wrote " << rows << " rows to " << target->string() << "\n";
  return kOk;
}

int cmd_check(const Job& job, const Options& opts, std::ostream& out) {
  const MonogenicSpec ms = checked_spec(job);
  const json cfg = job.doc.value("check", json::object());
  const double tol_cr = opts.tol_cr.value_or(cfg.value("tol_cr", 1e-6));
  const double cr_h = cfg.value("cr_h", 1e-5);
  const QuadratureOptions quad = quadrature(opts);
  const std::vector<PointR3> points = check_points(ms, cfg);
  if (points.empty()) throw ParseError("no usable check points");

  Verdicts verdicts{out};
  double cr_worst = 0.0;
  for (const PointR3& p : points) {
    const CrResidual r = cr_residual(ms, p, cr_h);
    cr_worst = std::max(cr_worst, r.max_abs() / r.scale);
  }
  verdicts.line("cr residual", cr_worst <= tol_cr,
                "max=" + fmt("%.3e", cr_worst) + " tol=" + fmt("%.1e", tol_cr) + " over " +
                    std::to_string(points.size()) + " points");

  if (job.doc.contains("pde")) {
    const PdeSpec pde = io::pde_from_json(job.doc.at("pde"));
    const double tol_char = cfg.value("tol_char", 1e-10);
    const double tol_pde = opts.tol_pde.value_or(cfg.value("tol_pde", 1e-4));
    const double tol_identity = cfg.value("tol_identity", 1e-3);
    const FdOptions fd{opts.h.value_or(cfg.value("h", default_fd_step(pde.order))), cfg.value("richardson", false)};

    const double chr = characteristic_residual(ms.algebra, ms.triad, pde).cwiseAbs().maxCoeff();
    verdicts.line("characteristic residual", chr <= tol_char, "max=" + fmt("%.3e", chr) + " tol=" + fmt("%.1e", tol_char));

    const ScanResult scan = p_nonvanishing_scan(pde, cfg.value("scan_box", 10.0), cfg.value("scan_grid", 101));
    out << "INFO P(a,b) scan: " << scan.to_string() << "\n";

    double pde_worst = 0.0, identity_worst = 0.0;
    for (const PointR3& p : points) {
      const FdResult r = pde_residual(ms, pde, p, fd);
      pde_worst = std::max(pde_worst, r.value.cwiseAbs().maxCoeff() / r.scale);
      const FdResult d = operator_identity_check(ms, pde, p, fd, quad);
      identity_worst = std::max(identity_worst, d.value.cwiseAbs().maxCoeff() / d.scale);
    }
    verdicts.line("pde residual", pde_worst <= tol_pde,
                  "max=" + fmt("%.3e", pde_worst) + " tol=" + fmt("%.1e", tol_pde) + " h=" + fmt("%g", fd.h));
    verdicts.line("operator identity", identity_worst <= tol_identity,
                  "max=" + fmt("%.3e", identity_worst) + " tol=" + fmt("%.1e", tol_identity));
  }
  return verdicts.all_pass ? kOk : kCheckFailed;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const OnSpectrum& e) {
    err << "error: " << e.what() << "\n";
    return kSpectrumError;
  } catch (const CoincidentSpectrum& e) {
    err << "error: " << e.what() << "\n";
    return kSpectrumError;
  } catch (const HoloDomainError& e) {
    err << "error: " << e.what() << "\n";
    return kSpectrumError;
  } catch (const SingularElement& e) {
    err << "error: " << e.what() << "\n";
    return kSpectrumError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed job: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace monogenica::cli
