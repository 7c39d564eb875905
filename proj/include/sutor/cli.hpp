#pragma once

#include "sutor/abelian.hpp"
#include "sutor/engine.hpp"
#include "sutor/error.hpp"
#include "sutor/families.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/io.hpp"
#include "sutor/polytope.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace sutor::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBlocked = 2,
  kUnsupported = 3,
  kCheckFailed = 4,
};

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Validation: return kBlocked;
    case ErrorCode::UnsupportedTorsion: return kUnsupported;
    default: return kUsage;
  }
}

struct Style {
  bool color = false;
  std::string pass() const { return color ? "\033[32mPASS\033[0m" : "PASS"; }
  std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
  std::string verdict(bool ok) const { return ok ? pass() : fail(); }
};

/// A file is either a sutured presentation or a bare torsion element.
struct LoadedFile {
  std::string origin;
  std::variant<SuturedInput, GroupRingElement> content;
  std::string name;
};

inline LoadedFile load_file(const std::string& path) {
  auto j = io::parse_json(io::read_text(path), path);
  if (j.is_object() && j.contains("terms")) {
    std::string name = j.value("name", "");
    io::Json element = j;
    element.erase("name");
    return {path, io::element_from_json(element), name};
  }
  SuturedInput in = io::input_from_json(j);
  std::string name = in.name;
  return {path, std::move(in), name};
}

/// Display names for the coordinates of H: "t" when H = Z, otherwise the
/// input generator whose image is the coordinate vector, else h1, h2, ...
inline std::vector<std::string> coordinate_names(const AbelianGroup& g, const SuturedInput* input = nullptr,
                                                 const Abelianization* phi = nullptr) {
  if (g.rank == 1 && g.torsion.empty()) return {"t"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.rank; ++i) {
    std::string name = "h" + std::to_string(i + 1);
    if (input && phi)
      for (std::size_t k = 0; k < phi->images.size(); ++k) {
        AbElement unit = zero_element(g);
        unit.free[i] = 1;
        if (phi->images[k] == unit) {
          name = input->alphabet->name(k);
          break;
        }
      }
    names.push_back(name);
  }
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    names.push_back(g.torsion.size() == 1 ? "s" : "s" + std::to_string(i + 1));
  return names;
}

inline std::string format_point(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

inline IntVector parse_covector(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "bad covector '" + text + "'");
    }
  }
  return v;
}

// ---------------------------------------------------------------- compute

struct RunReport {
  std::string name;
  std::string notes;
  std::string group;
  std::string tau_text;
  io::Json tau_json;
  std::vector<Diagnostic> diagnostics;
  bool claimed_irreducible = true;
  std::optional<double> millis;
};

struct ComputeOptions {
  std::string path;
  bool json = false;
  bool timing = false;
};

inline RunReport make_report(const SuturedInput& in, const Validation& v, const TorsionResult& r) {
  RunReport rep;
  rep.name = in.name;
  rep.notes = in.notes;
  rep.group = describe(r.group());
  rep.tau_text = format(r.tau, coordinate_names(r.group(), &in, &r.abelianization));
  rep.tau_json = io::element_to_json(r.tau);
  rep.diagnostics = v.diagnostics;
  rep.claimed_irreducible = in.claimed_irreducible;
  return rep;
}

inline void print_report(const RunReport& rep, bool json, std::ostream& out) {
  if (json) {
    io::Json j;
    j["name"] = rep.name;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["H"] = rep.group;
    j["tau"] = rep.tau_json;
    j["tau_text"] = rep.tau_text;
    io::Json diags = io::Json::array();
    for (const auto& d : rep.diagnostics)
      diags.push_back(io::Json{{"code", diagnostic_name(d.code)}, {"blocking", d.blocking}, {"message", d.message}});
    j["diagnostics"] = diags;
    j["claimed_irreducible"] = rep.claimed_irreducible;
    if (rep.millis) j["time_ms"] = *rep.millis;
    out << j.dump(2) << '\n';
    return;
  }
  if (!rep.name.empty()) out << "name: " << rep.name << '\n';
  if (!rep.notes.empty()) out << "notes: " << rep.notes << '\n';
  for (const auto& d : rep.diagnostics) out << "diagnostic " << diagnostic_name(d.code) << ": " << d.message << '\n';
  out << "H_1(M) = " << rep.group << '\n';
  out << "claimed irreducible: " << (rep.claimed_irreducible ? "yes" : "no") << '\n';
  out << "tau ~ " << rep.tau_text << '\n';
  if (rep.millis) out << "time: " << *rep.millis << " ms\n";
}

inline void print_blocking(const Validation& v, std::ostream& out, std::ostream& err) {
  for (const auto& d : v.diagnostics) out << "diagnostic " << diagnostic_name(d.code) << ": " << d.message << '\n';
  err << "error: input has blocking diagnostics\n";
}

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  LoadedFile file = load_file(opt.path);
  if (auto* tau = std::get_if<GroupRingElement>(&file.content)) {
    RunReport rep;
    rep.name = file.name;
    rep.group = describe(tau->group());
    rep.tau_text = format(normalize(*tau), coordinate_names(tau->group()));
    rep.tau_json = io::element_to_json(normalize(*tau));
    print_report(rep, opt.json, out);
    return kOk;
  }
  const auto& in = std::get<SuturedInput>(file.content);
  Validation v = validate(in);
  if (v.blocking()) {
    print_blocking(v, out, err);
    return kBlocked;
  }
  auto start = std::chrono::steady_clock::now();
  TorsionResult r = torsion(in);
  auto stop = std::chrono::steady_clock::now();
  RunReport rep = make_report(in, v, r);
  if (opt.timing) rep.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  print_report(rep, opt.json, out);
  return kOk;
}

// ---------------------------------------------------------------- polytope

struct PolytopeOptions {
  std::string path;
  std::vector<std::string> alphas;
  std::optional<std::string> svg;
  std::optional<std::string> tsv;
  bool diff = false;
};

/// Dimension of the affine span of a point set.
inline std::size_t affine_dimension(const std::vector<IntVector>& pts) {
  if (pts.size() < 2) return 0;
  const std::size_t d = pts[0].size();
  IntMatrix m(d, pts.size() - 1);
  for (std::size_t j = 1; j < pts.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j - 1) = pts[j][i] - pts[0][i];
  std::size_t rank = 0;
  for (const auto& x : smith_normal_form(m).diagonal())
    if (!x.is_zero()) ++rank;
  return rank;
}

inline std::string shape_name(const std::vector<IntVector>& verts) {
  const std::size_t dim = affine_dimension(verts), k = verts.size();
  if (dim == 0) return "point";
  if (dim == 1) return "segment";
  if (dim == 2) {
    static const char* names[] = {"", "", "", "triangle", "quadrilateral", "pentagon", "hexagon", "heptagon", "octagon"};
    return k < 9 ? names[k] : std::to_string(k) + "-gon";
  }
  return std::to_string(dim) + "-polytope with " + std::to_string(k) + " vertices";
}

inline GroupRingElement load_tau(const LoadedFile& file) {
  if (auto* tau = std::get_if<GroupRingElement>(&file.content)) return normalize(*tau);
  const auto& in = std::get<SuturedInput>(file.content);
  return torsion(in).tau;
}

inline int cmd_polytope(const PolytopeOptions& opt, std::ostream& out, std::ostream& err) {
  LoadedFile file = load_file(opt.path);
  if (auto* in = std::get_if<SuturedInput>(&file.content)) {
    Validation v = validate(*in);
    if (v.blocking()) {
      print_blocking(v, out, err);
      return kBlocked;
    }
  }
  GroupRingElement tau = load_tau(file);
  if (!tau.group().is_torsion_free()) {
    err << "error: H_1(M) = " << describe(tau.group()) << " has torsion; polytope analysis is not supported\n";
    return kUnsupported;
  }
  if (tau.is_zero()) {
    out << "tau = 0: empty support\n";
    return kOk;
  }
  Support s = support(tau);
  auto verts = vertices(s);
  if (!file.name.empty()) out << "name: " << file.name << '\n';
  out << "support (point<TAB>coefficient):\n" << to_tsv(s);
  out << s.size() << " points, " << shape_name(verts)
      << ", centrally symmetric: " << (is_centrally_symmetric(s) ? "yes" : "no") << '\n';
  out << "vertices:";
  for (const auto& v : verts) out << ' ' << format_point(v);
  out << '\n';
  if (s.dim == 2 && verts.size() >= 3) {
    out << "edge lengths:";
    for (const auto& l : edge_lengths_2d(s)) out << ' ' << l;
    out << '\n';
  }
  for (const auto& a : opt.alphas) {
    IntVector alpha = parse_covector(a);
    out << "width" << format_point(alpha) << " = " << width(s, alpha) << '\n';
  }
  if (opt.diff) {
    auto d = difference_polytope(s);
    out << "difference polytope: " << d.size() << " vertices:";
    for (const auto& v : d) out << ' ' << format_point(v);
    out << '\n';
  }
  if (opt.tsv) {
    std::ofstream f(*opt.tsv);
    if (!f) throw Error(ErrorCode::Io, "cannot write '" + *opt.tsv + "'");
    f << to_tsv(s);
  }
  if (opt.svg) {
    std::ofstream f(*opt.svg);
    if (!f) throw Error(ErrorCode::Io, "cannot write '" + *opt.svg + "'");
    f << to_svg(s);
  }
  return kOk;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::string path;
  bool eval = false;
  bool aug = false;
  std::optional<long long> disk;
};

inline std::string format_order(const std::optional<Integer>& ord) { return ord ? ord->str() : "infinite"; }

inline void print_disk_report(const DiskReport& rep, std::ostream& out) {
  out << "disk: " << (rep.obstructed ? "OBSTRUCTED" : "not obstructed") << " (p <= " << rep.cap << ", bound from "
      << rep.binding() << "; p_max = " << rep.user_cap << ", degree cap = " << rep.degree_cap << ")\n";
  for (const auto& c : rep.candidates) {
    out << "  " << c.label << " = " << format(normalize(c.element), {"t"}) << ": ";
    if (c.single)
      out << "matches (t^" << *c.single << " - 1)/(t - 1)";
    else if (c.product)
      out << "matches product p = " << c.product->first << ", " << c.product->second;
    else
      out << "no solid-torus match";
    out << '\n';
  }
}

inline int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err, const Style& style = {}) {
  LoadedFile file = load_file(opt.path);
  bool eval = opt.eval, aug = opt.aug;
  if (!eval && !aug && !opt.disk) eval = aug = true;
  bool ok = true;

  if (auto* tau = std::get_if<GroupRingElement>(&file.content)) {
    if (eval || aug) {
      err << "error: --eval and --aug need a presentation, not a bare torsion element\n";
      return kUsage;
    }
    print_disk_report(disk_obstruction_report(*tau, *opt.disk), out);
    return kOk;
  }

  const auto& in = std::get<SuturedInput>(file.content);
  Validation v = validate(in);
  if (v.blocking()) {
    print_blocking(v, out, err);
    return kBlocked;
  }
  TorsionResult r = torsion(in);
  if (eval) {
    auto c = evaluation_check(v.reduced, r);
    auto names = coordinate_names(c.group);
    out << style.verdict(c.pass) << " eval: G = " << describe(c.group) << ", p_*(tau) = " << format(c.lhs, names)
        << ", I_G = " << format(c.rhs, names) << '\n';
    ok = ok && c.pass;
  }
  if (aug) {
    auto c = augmentation_order_check(v.reduced, r);
    out << style.verdict(c.pass) << " aug: |eps(tau)| = " << c.aug << ", |G| = " << format_order(c.ord) << '\n';
    ok = ok && c.pass;
  }
  if (opt.disk) print_disk_report(disk_obstruction_report(r.tau, *opt.disk), out);
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- gen

inline std::vector<std::string> gen_families() {
  return {"solid-torus", "pretzel-odd", "pretzel-even", "cantwell-conlon", "trefoil", "figure-eight", "wirtinger", "goda"};
}

inline int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::ostream& out, std::ostream& err) {
  auto ints = [&](std::size_t n) {
    if (params.size() != n) throw Error(ErrorCode::BadParameter, family + " takes " + std::to_string(n) + " integer parameter(s)");
    std::vector<Integer> v;
    for (const auto& p : params) {
      if (p.empty() || p.find_first_not_of("-0123456789") != std::string::npos)
        throw Error(ErrorCode::BadParameter, "not an integer: '" + p + "'");
      v.emplace_back(p);
    }
    return v;
  };
  std::optional<SuturedInput> in;
  if (family == "solid-torus") {
    in = families::solid_torus(ints(1)[0]);
  } else if (family == "pretzel-odd") {
    auto v = ints(3);
    in = families::pretzel_odd(v[0], v[1], v[2]);
  } else if (family == "pretzel-even") {
    auto v = ints(3);
    in = families::pretzel_even(v[0], v[1], v[2]);
  } else if (family == "cantwell-conlon") {
    ints(0);
    in = families::cantwell_conlon();
  } else if (family == "trefoil") {
    ints(0);
    in = families::trefoil();
  } else if (family == "figure-eight") {
    ints(0);
    in = families::figure_eight();
  } else if (family == "wirtinger") {
    if (params.size() != 1) throw Error(ErrorCode::BadParameter, "wirtinger takes one pd code, e.g. '[[1,5,2,4],[3,1,4,6],[5,3,6,2]]'");
    in = families::wirtinger_knot(io::pd_from_json(io::parse_json(params[0], "pd code")));
  } else if (family == "goda") {
    ints(0);
    io::Json j = io::Json::object();
    j["name"] = "goda";
    const io::Json element = io::element_to_json(families::goda_tau());
    for (const auto& [k, v] : element.items()) j[k] = v;
    out << j.dump(2) << '\n';
    return kOk;
  } else {
    err << "error: unknown family '" << family << "'; known:";
    for (const auto& f : gen_families()) err << ' ' << f;
    err << '\n';
    return kUsage;
  }
  out << io::input_to_json(*in).dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- batch

struct BatchOptions {
  std::string manifest;
  unsigned parallel = 1;
};

/// Manifest: {"entries": [{"path": "...", "expect": <element>?, "checks":
/// ["eval", "aug"]?, "disk": p_max?}]}, paths relative to the manifest.
inline std::string run_batch_entry(const io::Json& entry, const std::filesystem::path& base, std::size_t index,
                                   bool& failed, const Style& style) {
  std::ostringstream os;
  failed = false;
  std::string label = entry.value("path", std::string("<missing path>"));
  os << '[' << index + 1 << "] " << label << ": ";
  try {
    if (!entry.contains("path")) throw Error(ErrorCode::Syntax, "manifest entry without 'path'");
    LoadedFile file = load_file((base / entry.at("path").get<std::string>()).string());
    std::vector<std::pair<std::string, bool>> results;
    GroupRingElement tau(AbelianGroup{});
    std::string tau_text;
    if (auto* in = std::get_if<SuturedInput>(&file.content)) {
      Validation v = validate(*in);
      if (v.blocking()) throw Error(ErrorCode::Validation, blocking_summary(v));
      TorsionResult r = torsion(*in);
      tau = r.tau;
      tau_text = format(r.tau, coordinate_names(r.group(), in, &r.abelianization));
      std::vector<std::string> checks{"eval", "aug"};
      if (entry.contains("checks")) checks = entry.at("checks").get<std::vector<std::string>>();
      for (const auto& c : checks) {
        if (c == "eval")
          results.emplace_back("eval", evaluation_check(v.reduced, r).pass);
        else if (c == "aug")
          results.emplace_back("aug", augmentation_order_check(v.reduced, r).pass);
        else
          throw Error(ErrorCode::BadParameter, "unknown check '" + c + "'");
      }
    } else {
      tau = normalize(std::get<GroupRingElement>(file.content));
      tau_text = format(tau, coordinate_names(tau.group()));
    }
    if (entry.contains("expect"))
      results.emplace_back("expect", sim_equal(io::element_from_json(entry.at("expect")), tau));
    if (entry.contains("disk")) {
      auto rep = disk_obstruction_report(tau, entry.at("disk").get<long long>());
      bool want = entry.value("obstructed", rep.obstructed);
      results.emplace_back(rep.obstructed ? "disk=OBSTRUCTED" : "disk=unobstructed", want == rep.obstructed);
    }
    bool all = true;
    for (const auto& [n, ok] : results) all = all && ok;
    failed = !all;
    os << style.verdict(all) << "  tau ~ " << tau_text;
    if (!results.empty()) {
      os << "  (";
      for (std::size_t i = 0; i < results.size(); ++i)
        os << (i ? ", " : "") << results[i].first << ' ' << (results[i].second ? "ok" : "failed");
      os << ')';
    }
  } catch (const std::exception& e) {
    failed = true;
    os << style.fail() << "  " << e.what();
  }
  return os.str();
}

/// Runs every manifest entry, possibly on several threads; the report lists
/// entries in manifest order whatever the scheduling.
inline std::string run_batch(const BatchOptions& opt, int& exit_code, const Style& style = {}) {
  auto manifest = io::parse_json(io::read_text(opt.manifest), opt.manifest);
  if (!manifest.contains("entries") || !manifest.at("entries").is_array())
    throw Error(ErrorCode::Syntax, "manifest needs an 'entries' array");
  const auto& entries = manifest.at("entries");
  const std::filesystem::path base = std::filesystem::path(opt.manifest).parent_path();
  std::vector<std::string> lines(entries.size());
  std::vector<char> failures(entries.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      bool failed = false;
      lines[i] = run_batch_entry(entries[i], base, i, failed, style);
      failures[i] = failed;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.parallel, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream os;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    os << lines[i] << '\n';
    failed += failures[i];
  }
  os << entries.size() << " entries, " << failed << " failed\n";
  exit_code = failed ? kCheckFailed : kOk;
  return os.str();
}

inline int cmd_batch(const BatchOptions& opt, std::ostream& out, const Style& style = {}) {
  int code = kOk;
  out << run_batch(opt, code, style);
  return code;
}

}  // namespace sutor::cli
