#include "monogenica/io.hpp"

#include <cstdlib>
#include <fstream>

namespace monogenica::io {

namespace {

template <typename T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

Element element_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  Element out(Eigen::Index(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(Eigen::Index(i)) = complex_from_json(j[i]);
  return out;
}

json element_to_json(const Element& e) {
  json out = json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i) out.push_back(complex_to_json(e(i)));
  return out;
}

std::vector<HoloFn> functions_from_json(const json& j, const char* key, int expected) {
  if (!j.contains(key) || j.at(key).empty()) return std::vector<HoloFn>(std::size_t(expected), HoloFn::zero());
  const json& list = j.at(key);
  if (!list.is_array()) throw ParseError(std::string(key) + " must be an array");
  if (int(list.size()) != expected) {
    throw ParseError(std::string(key) + " needs " + std::to_string(expected) + " functions, got " +
                     std::to_string(list.size()));
  }
  std::vector<HoloFn> out;
  for (const json& f : list) out.push_back(holo_from_json(f));
  return out;
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected a complex number as [re, im], got " + j.dump());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

AlgebraSpec algebra_from_json(const json& j) {
  const int n = required<int>(j, "n");
  const int m = required<int>(j, "m");
  std::vector<StructureConstant> upsilon;
  if (j.contains("upsilon")) {
    for (const json& e : j.at("upsilon")) {
      if (!e.is_array() || e.size() != 5) throw ParseError("upsilon entries are [r, s, k, re, im]");
      try {
        upsilon.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                           Complex(e[3].get<double>(), e[4].get<double>())});
      } catch (const json::exception& ex) {
        throw ParseError(std::string("bad upsilon entry: ") + ex.what());
      }
    }
  }
  std::map<int, int> u_map;
  if (j.contains("u_map")) {
    for (const auto& [key, value] : j.at("u_map").items()) {
      try {
        u_map[std::stoi(key)] = value.get<int>();
      } catch (const std::exception& ex) {
        throw ParseError("bad u_map entry \"" + key + "\": " + ex.what());
      }
    }
  }
  try {
    return AlgebraSpec(n, m, upsilon, std::move(u_map));
  } catch (const InvalidSpec& e) {
    throw ParseError(e.what());
  }
}

json algebra_to_json(const AlgebraSpec& alg) {
  json up = json::array();
  for (const auto& c : alg.upsilon_entries()) up.push_back({c.r, c.s, c.k, c.value.real(), c.value.imag()});
  json u_map = json::object();
  for (const auto& [s, u] : alg.u_map()) u_map[std::to_string(s)] = u;
  return {{"n", alg.n()}, {"m", alg.m()}, {"upsilon", up}, {"u_map", u_map}};
}

AlgebraSpec checked_algebra(const json& j) {
  AlgebraSpec alg = algebra_from_json(j);
  const ValidationReport report = validate_algebra(alg);
  if (!report.ok()) throw InvalidSpec("invalid algebra:\n" + report.to_string());
  return alg;
}

AlgebraSpec load_algebra_file(const std::filesystem::path& path) { return checked_algebra(read_json_file(path)); }

TriadSpec triad_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw ParseError("triad needs \"a\" and \"b\"");
  return {element_from_json(j.at("a"), "triad.a"), element_from_json(j.at("b"), "triad.b")};
}

json triad_to_json(const TriadSpec& triad) {
  return {{"a", element_to_json(triad.a)}, {"b", element_to_json(triad.b)}};
}

HoloFn holo_from_json(const json& j) {
  const std::string kind = required<std::string>(j, "kind");
  auto opt_complex = [&](const char* key, Complex fallback) {
    return j.contains(key) ? complex_from_json(j.at(key)) : fallback;
  };
  std::vector<Complex> coeffs;
  if (j.contains("coeffs")) {
    for (const json& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
  }
  HoloFn::Kind variant;
  if (kind == "exp") {
    variant = ExpFn{};
  } else if (kind == "sin") {
    variant = SinFn{};
  } else if (kind == "cos") {
    variant = CosFn{};
  } else if (kind == "poly") {
    variant = Polynomial{coeffs};
  } else if (kind == "series") {
    const double radius = required<double>(j, "radius");
    if (!(radius > 0.0)) throw ParseError("series radius must be positive");
    variant = PowerSeries{opt_complex("center", 0.0), coeffs, radius};
  } else {
    throw ParseError("unknown function kind \"" + kind + "\"");
  }
  return HoloFn(std::move(variant), opt_complex("amplitude", 1.0), opt_complex("scale", 1.0),
                opt_complex("shift", 0.0));
}

json holo_to_json(const HoloFn& f) {
  json out;
  auto coeff_list = [](const std::vector<Complex>& cs) {
    json list = json::array();
    for (Complex c : cs) list.push_back(complex_to_json(c));
    return list;
  };
  if (const auto* p = std::get_if<Polynomial>(&f.kind())) {
    out["kind"] = "poly";
    out["coeffs"] = coeff_list(p->coeffs);
  } else if (std::holds_alternative<ExpFn>(f.kind())) {
    out["kind"] = "exp";
  } else if (std::holds_alternative<SinFn>(f.kind())) {
    out["kind"] = "sin";
  } else if (std::holds_alternative<CosFn>(f.kind())) {
    out["kind"] = "cos";
  } else if (const auto* s = std::get_if<PowerSeries>(&f.kind())) {
    out["kind"] = "series";
    out["coeffs"] = coeff_list(s->coeffs);
    out["center"] = complex_to_json(s->center);
    out["radius"] = s->radius;
  }
  out["amplitude"] = complex_to_json(f.amplitude());
  out["scale"] = complex_to_json(f.scale());
  out["shift"] = complex_to_json(f.shift());
  return out;
}

PdeSpec pde_from_json(const json& j) {
  PdeSpec pde{required<int>(j, "N"), {}};
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("pde needs a \"terms\" array");
  for (const json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 4) throw ParseError("pde terms are [alpha, beta, gamma, C]");
    pde.terms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<double>()});
  }
  try {
    validate_pde(pde);
  } catch (const InvalidSpec& e) {
    throw ParseError(e.what());
  }
  return pde;
}

MonogenicSpec monogenic_from_json(const json& j, const std::filesystem::path& base_dir,
                                  bool validate_algebra_spec) {
  if (!j.is_object() || !j.contains("algebra")) throw ParseError("missing field \"algebra\"");
  const json& alg_json = j.at("algebra");
  const json alg_doc = alg_json.is_string()
                           ? read_json_file(resolve_path(alg_json.get<std::string>(), base_dir))
                           : alg_json;
  AlgebraSpec alg = validate_algebra_spec ? checked_algebra(alg_doc) : algebra_from_json(alg_doc);
  if (!j.contains("triad")) throw ParseError("missing field \"triad\"");
  TriadSpec triad = triad_from_json(j.at("triad"));
  const int n = alg.n(), m = alg.m();
  auto f = functions_from_json(j, "F", m);
  auto g = functions_from_json(j, "G", n - m);
  return {std::move(alg), std::move(triad), std::move(f), std::move(g)};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::filesystem::path resolve_path(const std::string& name, const std::filesystem::path& base_dir) {
  const std::filesystem::path candidate(name);
  if (candidate.is_absolute()) return candidate;
  if (std::filesystem::exists(base_dir / candidate)) return base_dir / candidate;
  if (const char* env = std::getenv("MONOGENICA_FIXTURES")) {
    const std::filesystem::path fixture = std::filesystem::path(env) / candidate;
    if (std::filesystem::exists(fixture)) return fixture;
  }
  return base_dir / candidate;
}

}  // namespace monogenica::io
