// wspd_cli: build and check pair decompositions, analyze maps, and clean up
// curves from the command line. Stats go to stdout as key=value lines.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "wspd/curve.hpp"
#include "wspd/error.hpp"
#include "wspd/euclid_wspd.hpp"
#include "wspd/generators.hpp"
#include "wspd/map_analysis.hpp"
#include "wspd/optimal_wspd.hpp"
#include "wspd/oracles.hpp"
#include "wspd/pair_decomposition.hpp"
#include "wspd/shortcut.hpp"
#include "wspd/svg.hpp"
#include "wspd/udg_wspd.hpp"

namespace {

using namespace wspd;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::vector<std::string> inputs;
  double eps = 0.5;
  double sep = 0.0;  // when set, eps = 1 / sep
  double alpha = 2.0;
  std::uint64_t seed = 1;
  std::size_t n = 100;
  std::string out;
  std::string svg;
  std::string log;
  std::string metric = "euclid";
  std::string kind = "uniform";
  std::string oracle = "grid";
  bool validate = true;
  std::size_t cap = oracle::kDefaultValidationCap;
};

// Tracks the verdict of every enabled check; decides the exit code.
struct Verdict {
  bool failed = false;
  void record(const char* key, std::optional<bool> ok) {
    if (!ok) {
      std::cout << key << "=skipped\n";
      return;
    }
    std::cout << key << '=' << (*ok ? "ok" : "FAIL") << '\n';
    failed = failed || !*ok;
  }
};

double effective_eps(const RunConfig& c) {
  if (c.sep > 0.0) return 1.0 / c.sep;
  return c.eps;
}

void print_wall(Clock::time_point t0) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::cout << "wall_ms=" << ms << '\n';
}

template <class F>
auto with_path(const std::string& path, F&& load) {
  try {
    return load(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

PointSet points_from(const std::string& path) { return with_path(path, [](const std::string& p) { return load_points(p); }); }

std::unique_ptr<FiniteMetric> make_metric(const PointSet& ps, const std::string& kind) {
  if (kind == "euclid") return std::make_unique<EuclideanMetric>(ps);
  if (kind == "graph") {
    return std::make_unique<GraphMetric>(std::make_shared<const UnitDistanceGraph>(ps));
  }
  throw ParameterError("unknown metric '" + kind + "' (expected euclid or graph)");
}

std::optional<bool> validate_pairs(const RunConfig& c, const FiniteMetric& m, const PairDecomposition& w,
                                   double eps) {
  if (!c.validate) return std::nullopt;
  if (m.size() > c.cap) {
    std::cout << "validation_note=n above cap " << c.cap << '\n';
    return std::nullopt;
  }
  const auto rep = oracle::validate_wspd(m, w, eps, c.cap);
  if (!rep.ok()) std::cerr << rep.to_text();
  std::cout << "worst_ratio=" << rep.worst_ratio << '\n';
  return rep.ok();
}

void emit_pairs(const RunConfig& c, const PointSet& ps, const FiniteMetric& m, const PairDecomposition& w) {
  if (!c.out.empty()) save_pairs(c.out, w, m);
  if (!c.svg.empty()) {
    SvgCanvas svg;
    svg.pair_chords(ps, w, "#9aa");
    svg.points(ps, "black");
    svg.save(c.svg);
  }
}

int run_wspd(const std::string& cmd, const RunConfig& c) {
  const double eps = effective_eps(c);
  const PointSet ps = points_from(c.inputs.at(0));
  const auto t0 = Clock::now();
  PairDecomposition w;
  std::unique_ptr<FiniteMetric> m;
  std::cout << "command=" << cmd << "\nn=" << ps.size() << "\neps=" << eps << '\n';
  if (cmd == "wspd-euclid") {
    w = ck_wspd(ps, eps);
    m = std::make_unique<EuclideanMetric>(ps);
  } else if (cmd == "wspd-optimal") {
    m = make_metric(ps, c.metric);
    w = instance_optimal_wspd(*m, eps);
  } else {
    UdgWspdStats st;
    auto g = std::make_shared<const UnitDistanceGraph>(ps);
    auto gm = std::make_unique<GraphMetric>(g);
    w = ps.dim() == 2 ? udg_wspd(ps, eps, &st) : udg_wspd_highdim(ps, eps, &st);
    std::cout << "short_pairs=" << st.short_pairs << "\nshort_discarded=" << st.short_discarded
              << "\nlevel_pairs=" << st.level_pairs << "\nlevels_built=" << st.levels_built
              << "\nlevels_skipped=" << st.levels_skipped << '\n';
    m = std::move(gm);
  }
  std::cout << "pairs=" << w.size() << '\n';
  print_wall(t0);
  emit_pairs(c, ps, *m, w);
  Verdict v;
  v.record("validation", validate_pairs(c, *m, w, eps));
  return v.failed ? 1 : 0;
}

int run_validate(const RunConfig& c) {
  if (c.inputs.size() != 2) throw ParameterError("validate expects PAIRS POINTS");
  const double eps = effective_eps(c);
  const PairDecomposition w = with_path(c.inputs[0], [](const std::string& p) { return load_pairs(p); });
  const PointSet ps = points_from(c.inputs[1]);
  const auto m = make_metric(ps, c.metric);
  const auto rep = oracle::validate_wspd(*m, w, eps, c.cap);
  std::cout << "command=validate\n" << rep.to_key_values();
  std::cerr << rep.to_text();
  return rep.ok() ? 0 : 1;
}

int run_map(const std::string& cmd, const RunConfig& c) {
  if (c.inputs.size() != 2) throw ParameterError(cmd + " expects DOMAIN IMAGE");
  const double eps = effective_eps(c);
  const FiniteMap f(points_from(c.inputs[0]), points_from(c.inputs[1]));
  std::cout << "command=" << cmd << "\nn=" << f.size() << "\neps=" << eps << '\n';
  const auto t0 = Clock::now();
  Verdict v;
  const bool check = c.validate && f.size() <= 4 * c.cap;
  if (cmd == "dilation") {
    const auto est = approx_lipschitz(f, eps);
    print_wall(t0);
    std::cout.precision(17);
    std::cout << "lipschitz_lower=" << est.lower << "\nlipschitz_upper=" << est.upper << "\nwitness=" << est.witness_i
              << ',' << est.witness_j << "\npairs=" << est.pairs_scanned << '\n';
    if (check) {
      const double exact = oracle::exact_dilation(EuclideanMetric(f.domain()), EuclideanMetric(f.image())).value;
      std::cout << "lipschitz_exact=" << exact << '\n';
      v.record("validation", est.lower <= exact && est.lower >= (1 - eps) * exact);
    } else {
      v.record("validation", std::nullopt);
    }
  } else {
    const auto est = approx_distortion(f, eps);
    print_wall(t0);
    std::cout.precision(17);
    if (est.infinite) {
      std::cout << "distortion=inf\ncollision=" << est.collision->first << ',' << est.collision->second << '\n';
      v.record("validation", std::nullopt);
    } else {
      std::cout << "distortion=" << est.value << '\n';
      if (check) {
        const double exact = oracle::exact_distortion(EuclideanMetric(f.domain()), EuclideanMetric(f.image()));
        std::cout << "distortion_exact=" << exact << '\n';
        v.record("validation", est.value >= exact * (1 - 1e-12) && est.value <= (1 + eps) * exact);
      } else {
        v.record("validation", std::nullopt);
      }
    }
  }
  return v.failed ? 1 : 0;
}

void curve_svg(const std::string& path, const PolyCurve& in, const PolyCurve& out) {
  SvgCanvas svg;
  svg.polyline(in.vertices(), "#aaa", 1.0);
  svg.polyline(out.vertices(), "black", 1.5);
  svg.points(out.vertices(), "black", 1.5);
  svg.save(path);
}

int run_distill(const RunConfig& c) {
  const PolyCurve in = with_path(c.inputs.at(0), [](const std::string& p) { return load_curve(p); });
  IntersectionOracleKind kind = IntersectionOracleKind::kGrid;
  if (c.oracle == "naive") {
    kind = IntersectionOracleKind::kNaive;
  } else if (c.oracle != "grid") {
    throw ParameterError("unknown intersection oracle '" + c.oracle + "'");
  }
  const auto t0 = Clock::now();
  const PolyCurve out = distill(in, kind);
  std::cout << "command=distill\nvertices_in=" << in.size() << "\nvertices_out=" << out.size() << '\n';
  print_wall(t0);
  if (!c.out.empty()) save_points(c.out, out.vertices());
  if (!c.svg.empty()) curve_svg(c.svg, in, out);
  Verdict v;
  if (c.validate && out.size() <= 20000) {
    const auto s = oracle::is_simple(out);
    if (s.witness) std::cout << "crossing_edges=" << s.witness->first << ',' << s.witness->second << '\n';
    v.record("validation", s.simple);
  } else {
    v.record("validation", std::nullopt);
  }
  return v.failed ? 1 : 0;
}

int run_shortcut(const RunConfig& c) {
  const PolyCurve in = with_path(c.inputs.at(0), [](const std::string& p) { return load_curve(p); });
  const double eps = effective_eps(c);
  const auto t0 = Clock::now();
  const ShortcutResult res = shortcut_detours(in, c.alpha, eps);
  std::cout << "command=shortcut\nalpha=" << c.alpha << "\neps=" << eps << "\nvertices_in=" << in.size()
            << "\nvertices_out=" << res.curve.size() << "\nshortcuts=" << res.log.size()
            << "\nsweep_shortcuts=" << res.sweep_shortcuts << '\n';
  print_wall(t0);
  if (!c.out.empty()) save_points(c.out, res.curve.vertices());
  if (!c.log.empty()) {
    std::ofstream f(c.log);
    if (!f) throw InputError("cannot write " + c.log);
    f.precision(17);
    for (const auto& r : res.log) f << r.j << ' ' << r.k << ' ' << r.dilation << '\n';
  }
  if (!c.svg.empty()) curve_svg(c.svg, in, res.curve);
  Verdict v;
  if (c.validate && res.curve.size() <= 20000) {
    const double d = oracle::exact_max_detour(res.curve).value;
    std::cout << "max_detour_out=" << d << '\n';
    v.record("validation", d < c.alpha + 1e-9);
  } else {
    v.record("validation", std::nullopt);
  }
  return v.failed ? 1 : 0;
}

int run_gen(const RunConfig& c) {
  PointSet ps;
  if (c.kind == "uniform") {
    ps = gen::uniform_square(c.n, 1.0, c.seed);
  } else if (c.kind == "serpentine") {
    ps = gen::serpentine_chain(c.n, 0.9);
  } else if (c.kind == "clustered") {
    ps = gen::clustered(c.n, 5, 100.0, 1.0, c.seed);
  } else if (c.kind == "udg") {
    ps = gen::connected_udg(c.n, 0.9, c.seed);
  } else if (c.kind == "walk") {
    ps = gen::random_walk_curve(c.n, 0.8, c.seed);
  } else if (c.kind == "polygon") {
    ps = gen::random_polygon_curve(c.n, c.seed);
  } else {
    throw ParameterError("unknown generator '" + c.kind + "'");
  }
  if (c.out.empty()) {
    write_points(std::cout, ps);
  } else {
    save_points(c.out, ps);
    std::cout << "command=gen\nkind=" << c.kind << "\nn=" << ps.size() << "\nseed=" << c.seed << '\n';
  }
  if (!c.svg.empty()) {
    SvgCanvas svg;
    if (c.kind == "walk" || c.kind == "polygon") svg.polyline(ps, "black");
    svg.points(ps, "black");
    svg.save(c.svg);
  }
  return 0;
}

void check_config(const RunConfig& c) {
  const double eps = effective_eps(c);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
  if (!(c.alpha > 1.0)) {
    throw ParameterError("alpha must be > 1, got " + std::to_string(c.alpha));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-separated pair decompositions, map dilation and curve cleanup"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_eps) {
    if (with_eps) {
      sub->add_option("--eps", cfg.eps, "approximation parameter in (0, 1)");
      sub->add_option("--sep", cfg.sep, "separation; overrides --eps with 1/sep");
    }
    sub->add_flag("--validate,!--no-validate", cfg.validate, "run the exact checker (default on)");
    sub->add_option("--cap", cfg.cap, "largest n handed to the quadratic checkers");
  };

  auto* euclid = app.add_subcommand("wspd-euclid", "quadtree WSPD of a Euclidean point set");
  auto* optimal = app.add_subcommand("wspd-optimal", "packing-level WSPD of a finite metric");
  auto* udg = app.add_subcommand("wspd-udg", "WSPD of the unit-distance graph metric");
  for (auto* s : {euclid, optimal, udg}) {
    add_common(s, true);
    s->add_option("points", cfg.inputs, "points file")->required()->expected(1);
    s->add_option("--out", cfg.out, "write pairs here");
    s->add_option("--svg", cfg.svg, "plot points and pair chords");
  }
  optimal->add_option("--metric", cfg.metric, "euclid or graph");

  auto* validate = app.add_subcommand("validate", "check a pair file against its points");
  add_common(validate, true);
  validate->add_option("files", cfg.inputs, "PAIRS POINTS")->required()->expected(2);
  validate->add_option("--metric", cfg.metric, "euclid or graph");

  auto* dilation = app.add_subcommand("dilation", "Lipschitz constant of a point map");
  auto* distortion = app.add_subcommand("distortion", "distortion of a point map");
  for (auto* s : {dilation, distortion}) {
    add_common(s, true);
    s->add_option("files", cfg.inputs, "DOMAIN IMAGE (row i maps to row i)")->required()->expected(2);
  }

  auto* dist = app.add_subcommand("distill", "simple subcurve with the same endpoints");
  add_common(dist, false);
  dist->add_option("curve", cfg.inputs, "curve file")->required()->expected(1);
  dist->add_option("--out", cfg.out, "write the output curve here");
  dist->add_option("--svg", cfg.svg, "overlay input (gray) and output (black)");
  dist->add_option("--oracle", cfg.oracle, "first-intersection oracle: grid or naive");

  auto* sc = app.add_subcommand("shortcut", "remove all alpha-detours");
  add_common(sc, true);
  sc->add_option("curve", cfg.inputs, "curve file")->required()->expected(1);
  sc->add_option("--alpha", cfg.alpha, "detour threshold > 1");
  sc->add_option("--out", cfg.out, "write the output curve here");
  sc->add_option("--log", cfg.log, "write applied shortcuts as 'j k dilation' lines");
  sc->add_option("--svg", cfg.svg, "overlay input (gray) and output (black)");

  auto* g = app.add_subcommand("gen", "random instances");
  g->add_option("--kind", cfg.kind, "uniform, serpentine, clustered, udg, walk or polygon");
  g->add_option("--n", cfg.n, "number of points");
  g->add_option("--seed", cfg.seed, "random seed");
  g->add_option("--out", cfg.out, "write points here instead of stdout");
  g->add_option("--svg", cfg.svg, "plot the instance");

  CLI11_PARSE(app, argc, argv);

  try {
    check_config(cfg);
    std::cout.precision(10);
    if (*euclid) return run_wspd("wspd-euclid", cfg);
    if (*optimal) return run_wspd("wspd-optimal", cfg);
    if (*udg) return run_wspd("wspd-udg", cfg);
    if (*validate) return run_validate(cfg);
    if (*dilation) return run_map("dilation", cfg);
    if (*distortion) return run_map("distortion", cfg);
    if (*dist) return run_distill(cfg);
    if (*sc) return run_shortcut(cfg);
    if (*g) return run_gen(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
