#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotbeta/rotbeta.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rotbeta;

namespace {

constexpr int kExitUsage = 2;

struct Global {
  std::string out;
  std::uint64_t seed = 1;
  double tol = 0.0;  // 0: command default
  std::string format = "csv";
};

/// Column-oriented result written as CSV or as a JSON array of records.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json a = json::array();
      for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = r[i];
        a.push_back(std::move(o));
      }
      os << a.dump(2) << '\n';
      return;
    }
    io::CsvWriter csv(os, columns);
    for (const auto& r : rows) {
      std::vector<std::string> cells;
      for (const auto& v : r) {
        if (v.is_number_float()) cells.push_back(io::fmt(v.get<double>()));
        else if (v.is_string()) cells.push_back(v.get<std::string>());
        else cells.push_back(v.dump());
      }
      csv.raw(cells);
    }
  }
};

std::vector<std::string> indexed(const std::string& stem, int m) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

void append(std::vector<json>& row, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i));
}

void append(std::vector<json>& row, const IVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(static_cast<long long>(v(i)));
}

/// --out is a file when it carries a .csv/.json extension, otherwise a
/// directory receiving `<name>.<format>`. Without --out the artifact goes to
/// stdout and the summary to stderr.
class Sink {
 public:
  explicit Sink(const Global& g) : g_(g) {}

  void emit(const std::string& name, const Table& t) const {
    if (g_.out.empty()) {
      t.write(std::cout, g_.format);
      return;
    }
    std::ofstream f(path(name, g_.format));
    if (!f) throw invalid_input("cannot write " + path(name, g_.format).string());
    t.write(f, g_.format);
  }

  void emit_text(const std::string& name, const std::string& ext, const std::string& text) const {
    if (g_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path(name, ext));
    if (!f) throw invalid_input("cannot write " + path(name, ext).string());
    f << text;
  }

  std::ostream& summary() const { return g_.out.empty() ? std::cerr : std::cout; }

 private:
  fs::path path(const std::string& name, const std::string& ext) const {
    const fs::path p(g_.out);
    if (p.extension() == ".csv" || p.extension() == ".json") {
      if (p.has_parent_path()) fs::create_directories(p.parent_path());
      if (ext == g_.format) return p;
      fs::path q = p;
      return q.replace_extension(ext);
    }
    fs::create_directories(p);
    return p / (name + "." + ext);
  }

  const Global& g_;
};

RotBetaMap load_map(const std::string& path) { return io::map_from_json(io::read_json_file(path)); }

Vec point_arg(const std::vector<double>& v, const RotBetaMap& map) {
  if (static_cast<int>(v.size()) != map.dim())
    throw invalid_input("--z needs " + std::to_string(map.dim()) + " comma-separated coordinates");
  Vec z(map.dim());
  for (int i = 0; i < map.dim(); ++i) z(i) = v[i];
  return z;
}

double angle_arg(double x, const std::string& unit) {
  return unit == "deg" ? x * std::numbers::pi / 180.0 : x;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

struct MapArgs {
  std::string map;
  std::vector<double> z;
};

void add_map_args(CLI::App* c, MapArgs& a, bool with_point) {
  c->add_option("--map", a.map, "Map specification (JSON)")->required()->check(CLI::ExistingFile);
  if (with_point)
    c->add_option("--z", a.z, "Base point, comma-separated coordinates")->required()->delimiter(',');
}

struct ExpandArgs : MapArgs {
  int n = 10;
};

int run_expand(const Global& g, const ExpandArgs& a, bool orbit_only) {
  const RotBetaMap map = load_map(a.map);
  const Vec z = point_arg(a.z, map);
  const int m = map.dim();
  const Sink sink(g);
  if (orbit_only) {
    Table t;
    t.columns = {"i"};
    for (auto& c : indexed("x", m)) t.columns.push_back(c);
    t.columns.push_back("fragile");
    std::vector<json> first{0};
    append(first, z);
    first.push_back(0);
    t.rows.push_back(first);
    bool fragile = false;
    int i = 1;
    for (const auto& s : map.orbit(z, a.n)) {
      std::vector<json> row{i++};
      append(row, s.image);
      row.push_back(s.boundary_fragile ? 1 : 0);
      fragile = fragile || s.boundary_fragile;
      t.rows.push_back(std::move(row));
    }
    sink.emit("orbit", t);
    sink.summary() << "orbit: " << a.n << " steps, boundary-fragile " << yes_no(fragile) << '\n';
    return 0;
  }
  const DigitExpansion e = expand(map, z, a.n);
  Table t;
  t.columns = {"i"};
  for (auto& c : indexed("d", m)) t.columns.push_back(c);
  for (auto& c : indexed("k", m)) t.columns.push_back(c);
  t.columns.push_back("error");
  t.columns.push_back("bound");
  double worst = 0.0;
  for (int i = 1; i <= a.n; ++i) {
    std::vector<json> row{i};
    append(row, e.digits[i - 1]);
    append(row, e.digit_coords[i - 1]);
    const double err = (z - e.reconstruct(map, i)).norm();
    const double bound = DigitExpansion::error_bound(map, i);
    worst = std::max(worst, err / bound);
    row.push_back(err);
    row.push_back(bound);
    t.rows.push_back(std::move(row));
  }
  sink.emit("expand", t);
  sink.summary() << "expand: " << a.n << " digits, reconstruction error "
                 << io::fmt((z - e.reconstruct(map, a.n)).norm()) << " <= "
                 << io::fmt(DigitExpansion::error_bound(map, a.n)) << ", boundary-fragile "
                 << yes_no(e.boundary_fragile) << '\n';
  if (worst > 1.0) throw Error(ErrorKind::Verification, "reconstruction bound violated");
  return 0;
}

struct PreimageArgs : MapArgs {
  int depth = 3;
  double budget = static_cast<double>(kDefaultNodeBudget);
};

int run_preimages(const Global& g, const PreimageArgs& a) {
  const RotBetaMap map = load_map(a.map);
  const Vec z = point_arg(a.z, map);
  const PreimageTree tree = preimage_tree(map, z, a.depth, static_cast<std::size_t>(a.budget));
  Table t;
  t.columns = {"level"};
  for (auto& c : indexed("x", map.dim())) t.columns.push_back(c);
  std::ostringstream sizes;
  for (std::size_t l = 0; l < tree.levels.size(); ++l) {
    sizes << (l ? "," : "") << tree.levels[l].size();
    for (const auto& p : tree.levels[l]) {
      std::vector<json> row{static_cast<int>(l)};
      append(row, p);
      t.rows.push_back(std::move(row));
    }
  }
  const Sink sink(g);
  sink.emit("preimages", t);
  if (tree.budget_warning) std::cerr << "warning: beta^(m depth) exceeds the node budget\n";
  sink.summary() << "preimages: level sizes " << sizes.str() << '\n';
  return 0;
}

struct HoleArgs : PreimageArgs {
  bool single = false;
  int check_s = -1;
  std::vector<double> eta;
};

int run_holes(const Global& g, const HoleArgs& a) {
  const RotBetaMap map = load_map(a.map);
  const Vec z = point_arg(a.z, map);
  SearchOptions opt;
  opt.tolerance = g.tol;
  const auto reports =
      hole_radii(map, z, a.depth, !a.single, opt, static_cast<std::size_t>(a.budget));
  Table t;
  t.columns = {"level", "preimages", "radius", "errorBound", "ratio"};
  for (auto& c : indexed("center", map.dim())) t.columns.push_back(c);
  for (const auto& r : reports) {
    std::vector<json> row{r.level, r.preimage_count, r.radius, r.error_bound};
    row.push_back(std::isnan(r.ratio) ? json("") : json(r.ratio));
    append(row, r.center);
    t.rows.push_back(std::move(row));
  }
  Evidence s_ev = Evidence::Unchecked, slab_ev = Evidence::Unchecked;
  if (a.check_s >= 0)
    s_ev = check_property_s(map, z, a.check_s, opt).satisfied_at ? Evidence::Holds : Evidence::Fails;
  if (!a.eta.empty()) {
    Vec eta = point_arg(a.eta, map);
    slab_ev = check_theorem2_condition(map, eta) ? Evidence::Holds : Evidence::Fails;
  }
  const Sink sink(g);
  sink.emit("holes", t);
  auto& os = sink.summary();
  os << "holes: r_" << reports.back().level << " = " << io::fmt(reports.back().radius)
     << " (+" << io::fmt(reports.back().error_bound) << "), property (S) " << to_string(s_ev)
     << ", slab " << to_string(slab_ev) << "; verdicts:";
  for (const auto& v : applicable_theorems(map, s_ev, slab_ev)) os << ' ' << v.theorem << '=' << to_string(v.status);
  os << '\n';
  return 0;
}

struct UlamArgs {
  std::string map;
  int n = 64;
  int s = 4;
  double threshold = 0.0;
  int max_iter = 100'000;
  bool dump = false;
};

int run_ulam(const Global& g, const UlamArgs& a) {
  const RotBetaMap map = load_map(a.map);
  const UlamOperator op = build_ulam(map, a.n, a.s);
  StationaryOptions sopt;
  if (g.tol > 0.0) sopt.tolerance = g.tol;
  sopt.max_iterations = a.max_iter;
  sopt.support_threshold = a.threshold;
  const StationaryResult res = stationary(op, sopt);
  const int m = map.dim();
  Table t;
  t.columns = {"cellIndex"};
  for (auto& c : indexed("coord", m)) t.columns.push_back(c);
  t.columns.push_back("densityValue");
  t.columns.push_back("componentLabel");
  double residual = 0.0;
  for (const auto& d : res.densities) residual = std::max(residual, d.residual);
  for (std::size_t i = 0; i < op.cell_count(); ++i) {
    const int label = res.components.labels[i];
    std::vector<json> row{i};
    append(row, Vec(map.domain().point(op.cell_center_coords(i))));
    row.push_back(label > 0 ? res.densities[label - 1].values[i] : 0.0);
    row.push_back(label);
    t.rows.push_back(std::move(row));
  }
  const Sink sink(g);
  sink.emit("density", t);
  if (a.dump) {
    std::ostringstream coo;
    op.write_coo(coo);
    sink.emit_text("operator", "coo", coo.str());
  }
  sink.summary() << "ulam: " << op.cell_count() << " cells, " << res.components.count
                 << " recurrent class(es), lebesgue-equivalent "
                 << yes_no(lebesgue_equivalence_check(res)) << ", residual " << io::fmt(residual)
                 << '\n';
  return 0;
}

struct BoundsArgs {
  int grid = 1000;
  double lo = 0.01;
  double hi = std::numbers::pi - 0.01;
  std::string unit = "rad";
};

int run_bounds(const Global& g, const BoundsArgs& a) {
  const auto table =
      bounds::make_table(bounds::linear_grid(angle_arg(a.lo, a.unit), angle_arg(a.hi, a.unit), a.grid));
  Table t;
  t.columns = {"theta", "B1", "B2", "C", "branchB1", "branchB2"};
  double max_b2 = 0.0;
  for (const auto& r : table.rows) {
    t.rows.push_back({r.theta, r.b1, r.b2, r.c, r.branch_b1, r.branch_b2});
    max_b2 = std::max(max_b2, r.b2);
  }
  const Sink sink(g);
  sink.emit("bounds", t);
  sink.summary() << "bounds: " << table.rows.size() << " angles, B1 <= B2 everywhere, max B2 = "
                 << io::fmt(max_b2) << '\n';
  return 0;
}

struct PlankArgs {
  int k = 2;
  int trials = 10'000;
  int bang = 0;
};

int run_plank(const Global& g, const PlankArgs& a) {
  const double tol = g.tol > 0.0 ? g.tol : 2e-5;
  const auto rep = plank::verify_lemma_cut(a.k, a.trials, g.seed, tol);
  json report = io::to_json(rep);
  int bang_failures = 0;
  if (a.bang > 0) {
    const auto sweep = plank::verify_bang(a.bang, g.seed);
    bang_failures = static_cast<int>(sweep.failures.size());
    json fails = json::array();
    for (const auto& set : sweep.failures) {
      json strips = json::array();
      for (const auto& s : set)
        strips.push_back({{"normal", io::to_json(s.normal)}, {"offset", s.offset}, {"halfWidth", s.half_width}});
      fails.push_back(strips);
    }
    report["bang"] = {{"sets", sweep.sets}, {"witnesses", sweep.witnesses}, {"failures", fails}};
  }
  const Sink sink(g);
  if (g.format == "json") {
    sink.emit_text("plank", "json", report.dump(2) + "\n");
  } else {
    Table t;
    t.columns = {"k", "trials", "bound", "minRadius", "parallelRadius", "violations", "bangSets",
                 "bangFailures"};
    t.rows.push_back({rep.k, rep.trials, rep.bound, rep.min_radius, rep.parallel_radius,
                      rep.violations.size(), a.bang, bang_failures});
    sink.emit("plank", t);
    if (!rep.passed()) std::cerr << report.dump(2) << '\n';
  }
  sink.summary() << "plank: k = " << a.k << ", " << a.trials << " trials, min radius "
                 << io::fmt(rep.min_radius) << " vs 1/(k+1) = " << io::fmt(rep.bound) << ", "
                 << rep.violations.size() << " violation(s)";
  if (a.bang > 0) sink.summary() << ", bang " << (a.bang - bang_failures) << "/" << a.bang;
  sink.summary() << '\n';
  if (!rep.passed() || bang_failures > 0)
    throw Error(ErrorKind::Verification, "plank verification failed");
  return 0;
}

struct CaseArgs {
  double beta = 1.4;
  double theta = 0.0;
  std::string unit = "rad";
  int n = 0;
  int s = 4;
};

json box_json(const cases::Box& b) { return {{"x", {b.x.lo, b.x.hi}}, {"y", {b.y.lo, b.y.hi}}}; }

int run_case_square(const Global& g, const CaseArgs& a) {
  StationaryOptions sopt;
  if (g.tol > 0.0) sopt.tolerance = g.tol;
  const auto rep = cases::square_case_study(a.beta, a.n > 0 ? a.n : 96, a.s, sopt);
  Table t;
  t.columns = {"beta", "largeSide", "smallSide", "invarianceChecked", "invarianceHolds", "N",
               "components", "lebesgueEquivalent", "projectionL1"};
  t.rows.push_back({rep.beta, rep.large_side, rep.small_side, rep.invariance_checked,
                    rep.invariance_checked ? json(rep.invariance_ok()) : json(""), rep.resolution,
                    rep.component_count,
                    rep.lebesgue_equivalent ? json(*rep.lebesgue_equivalent) : json(""),
                    rep.projection_l1});
  const Sink sink(g);
  sink.emit("case-square", t);
  auto& os = sink.summary();
  os << "case-square: beta = " << io::fmt(rep.beta) << ", sides " << io::fmt(rep.large_side) << " / "
     << io::fmt(rep.small_side) << ", invariance "
     << (rep.invariance_checked ? (rep.invariance_ok() ? "holds" : "FAILS") : "not checked")
     << ", " << rep.component_count << " recurrent class(es)";
  if (rep.lebesgue_equivalent) os << ", lebesgue-equivalent " << yes_no(*rep.lebesgue_equivalent);
  os << '\n';
  if (!rep.invariance_ok()) {
    json bad = json::array();
    for (const auto& b : rep.y1_failures) bad.push_back({{"set", "Y1"}, {"box", box_json(b)}});
    for (const auto& b : rep.y2_failures) bad.push_back({{"set", "Y2"}, {"box", box_json(b)}});
    std::cerr << bad.dump(2) << '\n';
    throw Error(ErrorKind::Verification, "invariance check failed");
  }
  return 0;
}

int run_case_scheicher(const Global& g, const CaseArgs& a) {
  StationaryOptions sopt;
  if (g.tol > 0.0) sopt.tolerance = g.tol;
  const double theta = angle_arg(a.theta, a.unit);
  const auto rep = cases::scheicher_case_study(a.beta, theta, a.n > 0 ? a.n : 64, a.s, sopt);
  const bool predicted = rep.prediction == cases::Prediction::UniqueEquivalent;
  Table t;
  t.columns = {"beta", "theta", "C", "prediction", "N", "components", "lebesgueEquivalent", "agrees"};
  t.rows.push_back({rep.beta, rep.theta, rep.c, predicted ? "unique+equivalent" : "none",
                    rep.resolution, rep.component_count, rep.lebesgue_equivalent, rep.agrees()});
  const Sink sink(g);
  sink.emit("case-scheicher", t);
  sink.summary() << "case-scheicher: C(theta) = " << io::fmt(rep.c) << ", prediction "
                 << (predicted ? "unique ACIM equivalent to Lebesgue" : "none") << ", "
                 << rep.component_count << " recurrent class(es), lebesgue-equivalent "
                 << yes_no(rep.lebesgue_equivalent) << ", agrees " << yes_no(rep.agrees()) << '\n';
  if (!rep.agrees()) throw Error(ErrorKind::Verification, "numerical verdict contradicts the prediction");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotational beta transformations: expansions, holes, Ulam densities, bounds and plank checks."};
  app.name("rotbeta");
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  2  usage or configuration error\n"
      "  3  invalid input (map file, point outside the domain, out-of-range value)\n"
      "  4  numerical failure (budget exceeded, no convergence)\n"
      "  5  verification failure (a checked invariant or prediction does not hold)");

  Global g;
  app.add_option("--out", g.out, "Output directory, or a file path ending in .csv/.json");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Override the command's numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Artifact format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  ExpandArgs ex, orb;
  auto* c_expand = app.add_subcommand("expand", "Digit expansion of a point with reconstruction errors");
  add_map_args(c_expand, ex, true);
  c_expand->add_option("--n", ex.n, "Number of digits")->check(CLI::Range(1, 10'000))->capture_default_str();

  auto* c_orbit = app.add_subcommand("orbit", "Forward orbit of a point");
  add_map_args(c_orbit, orb, true);
  c_orbit->add_option("--n", orb.n, "Number of steps")->check(CLI::Range(1, 10'000'000))->capture_default_str();

  PreimageArgs pre;
  auto* c_pre = app.add_subcommand("preimages", "Preimage tree of a point, one row per node");
  add_map_args(c_pre, pre, true);
  c_pre->add_option("--depth", pre.depth, "Tree depth")->check(CLI::Range(1, 64))->capture_default_str();
  c_pre->add_option("--budget", pre.budget, "Node budget")->check(CLI::PositiveNumber)->capture_default_str();

  HoleArgs hol;
  auto* c_holes = app.add_subcommand("holes", "Largest hole radius at every preimage level");
  add_map_args(c_holes, hol, true);
  c_holes->add_option("--depth", hol.depth, "Deepest level")->check(CLI::Range(1, 64))->capture_default_str();
  c_holes->add_option("--budget", hol.budget, "Node budget")->check(CLI::PositiveNumber)->capture_default_str();
  c_holes->add_flag("--single-level", hol.single, "Avoid level n alone instead of levels 1..n");
  c_holes->add_option("--check-s", hol.check_s, "Gather property (S) evidence up to this level")
      ->check(CLI::Range(0, 64));
  c_holes->add_option("--eta", hol.eta, "Lattice vector for the slab condition, comma-separated")
      ->delimiter(',');

  UlamArgs ul;
  auto* c_ulam = app.add_subcommand("ulam", "Ulam operator, recurrent classes and stationary densities");
  c_ulam->add_option("--map", ul.map, "Map specification (JSON)")->required()->check(CLI::ExistingFile);
  c_ulam->add_option("--N", ul.n, "Cells per lattice axis")->check(CLI::Range(2, 4096))->capture_default_str();
  c_ulam->add_option("--s", ul.s, "Samples per axis per cell")->check(CLI::Range(1, 64))->capture_default_str();
  c_ulam->add_option("--threshold", ul.threshold, "Support threshold for the transition digraph")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_ulam->add_option("--max-iter", ul.max_iter, "Power-iteration limit")->check(CLI::PositiveNumber)->capture_default_str();
  c_ulam->add_flag("--dump-operator", ul.dump, "Also write the matrix as row,col,value triplets");

  BoundsArgs bd;
  auto* c_bounds = app.add_subcommand("bounds", "Tabulate B1, B2 and C over an angle grid");
  c_bounds->add_option("--grid", bd.grid, "Number of angles")->check(CLI::Range(2, 10'000'000))->capture_default_str();
  c_bounds->add_option("--lo", bd.lo, "Smallest angle")->capture_default_str();
  c_bounds->add_option("--hi", bd.hi, "Largest angle")->capture_default_str();
  c_bounds->add_option("--unit", bd.unit, "Unit of --lo/--hi (output is radians)")
      ->check(CLI::IsMember({"rad", "deg"}))
      ->capture_default_str();

  PlankArgs pl;
  auto* c_plank = app.add_subcommand("plank", "Random check of the inscribed-ball cut bound on the unit disk");
  c_plank->add_option("--k", pl.k, "Number of lines")->check(CLI::Range(1, 4))->capture_default_str();
  c_plank->add_option("--trials", pl.trials, "Random configurations")->check(CLI::Range(1, 100'000'000))->capture_default_str();
  c_plank->add_option("--bang", pl.bang, "Also test this many random strip sets of total width <= 1.9")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CaseArgs sq;
  auto* c_square = app.add_subcommand("case-square", "Symmetric square map: invariant sets and ergodic classes");
  c_square->add_option("--beta", sq.beta, "Expansion factor")->required();
  c_square->add_option("--N", sq.n, "Cells per axis (default 96)")->check(CLI::Range(2, 4096));
  c_square->add_option("--s", sq.s, "Samples per axis per cell")->check(CLI::Range(1, 64))->capture_default_str();

  CaseArgs sch;
  auto* c_sch = app.add_subcommand("case-scheicher", "Scheicher-Surer map z -> beta e^{i theta} z - d");
  c_sch->add_option("--beta", sch.beta, "Expansion factor")->required();
  c_sch->add_option("--theta", sch.theta, "Rotation angle in (0, pi)")->required();
  c_sch->add_option("--unit", sch.unit, "Unit of --theta")->check(CLI::IsMember({"rad", "deg"}))->capture_default_str();
  c_sch->add_option("--N", sch.n, "Cells per axis (default 64)")->check(CLI::Range(2, 4096));
  c_sch->add_option("--s", sch.s, "Samples per axis per cell")->check(CLI::Range(1, 64))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_expand) return run_expand(g, ex, false);
    if (*c_orbit) return run_expand(g, orb, true);
    if (*c_pre) return run_preimages(g, pre);
    if (*c_holes) return run_holes(g, hol);
    if (*c_ulam) return run_ulam(g, ul);
    if (*c_bounds) return run_bounds(g, bd);
    if (*c_plank) return run_plank(g, pl);
    if (*c_square) return run_case_square(g, sq);
    if (*c_sch) return run_case_scheicher(g, sch);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::InvalidInput);
  }
  return kExitUsage;
}
