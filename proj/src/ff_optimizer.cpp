#include "entex/ff_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "entex/lp_solver.hpp"
#include "entex/rng.hpp"

namespace entex {

TriangleGrid::TriangleGrid(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("grid resolution must be >= 1");
  f_.assign(N + 1, 0.0);
  F_.assign(static_cast<std::size_t>(N + 1) * (N + 2) / 2, 0.0);
}

std::size_t TriangleGrid::index(int a, int b) const {
  if (!inside(a, b)) throw std::out_of_range("grid point outside the triangle");
  // rows a = 0..N of lengths N+1, N, ..., 1
  const std::size_t before = static_cast<std::size_t>(a) * (N_ + 1) - static_cast<std::size_t>(a) * (a - 1) / 2;
  return before + b;
}

std::vector<std::vector<double>> TriangleGrid::F_rows() const {
  std::vector<std::vector<double>> rows(N_ + 1);
  for (int a = 0; a <= N_; ++a)
    for (int b = 0; a + b <= N_; ++b) rows[a].push_back(F(a, b));
  return rows;
}

TriangleGrid TriangleGrid::from_rows(std::vector<double> f, const std::vector<std::vector<double>>& F) {
  if (f.size() < 2) throw std::invalid_argument("grid needs at least two f values");
  TriangleGrid g(static_cast<int>(f.size()) - 1);
  if (F.size() != f.size()) throw std::invalid_argument("F needs N+1 rows");
  g.f_ = std::move(f);
  for (int a = 0; a <= g.N_; ++a) {
    if (static_cast<int>(F[a].size()) != g.N_ + 1 - a)
      throw std::invalid_argument("F row " + std::to_string(a) + " has the wrong length");
    for (int b = 0; a + b <= g.N_; ++b) g.F(a, b) = F[a][b];
  }
  return g;
}

namespace {

const char* const kFamilies[] = {"f second differences",     "F-f(x) along (1,0)",
                                 "F-f(x) along (0,1)",       "F-f(x) along (1,-1)",
                                 "normalization f(q) <= 1",  "lower bound 0",
                                 "artificial cap"};
enum Family { kFConc, kDir10, kDir01, kDir1m1, kNorm, kLower, kCap, kNumFamilies };

const int kDirs[3][2] = {{1, 0}, {0, 1}, {1, -1}};

/// The LP with F restricted to symmetric grids F(a,b) = F(b,a). Symmetrizing
/// any feasible grid keeps it feasible and keeps the objective, so nothing is
/// lost; the F - f(y) family is then the mirror image of F - f(x).
struct GridLP {
  int d = 3, N = 0, j = 0;
  InequalityLP lp;
  std::vector<int> family;  // per row
  std::vector<int> f_var;   // -1 at fixed points
  std::map<std::pair<int, int>, int> F_var;

  int fv(int a) const { return f_var[a]; }
  int Fv(int a, int b) const {
    auto it = F_var.find({std::min(a, b), std::max(a, b)});
    return it == F_var.end() ? -1 : it->second;
  }
  int row(Family fam, double rhs) {
    family.push_back(fam);
    return lp.add_row(rhs);
  }
  void term(int r, int var, double coef) {
    if (var >= 0 && coef != 0) lp.add(r, var, coef);
  }

  GridLP(int d_, int j_, int N_) : d(d_), N(N_), j(j_) {
    f_var.assign(N + 1, -1);
    int n = 0;
    for (int a = 1; a < N; ++a) f_var[a] = n++;
    for (int a = 0; a <= N; ++a)
      for (int b = a; a + b <= N; ++b) {
        if ((a == 0 && b == 0) || (a == 0 && b == N)) continue;
        F_var[{a, b}] = n++;
      }
    lp.num_vars = n;

    for (int a = 1; a < N; ++a) {
      const int r = row(kFConc, 0);
      term(r, fv(a - 1), 1);
      term(r, fv(a), -2);
      term(r, fv(a + 1), 1);
    }
    for (int k = 0; k < 3; ++k) {
      const int dx = kDirs[k][0], dy = kDirs[k][1];
      for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b) {
          const int pa = a - dx, pb = b - dy, ra = a + dx, rb = b + dy;
          auto in = [&](int x, int y) { return x >= 0 && y >= 0 && x + y <= N; };
          if (!in(pa, pb) || !in(ra, rb)) continue;
          const int r = row(static_cast<Family>(kDir10 + k), 0);
          term(r, Fv(pa, pb), 1);
          term(r, Fv(a, b), -2);
          term(r, Fv(ra, rb), 1);
          term(r, fv(pa), -1);
          term(r, fv(a), 2);
          term(r, fv(ra), -1);
        }
    }
    const int rn = row(kNorm, 1);
    term(rn, fv(j), 1);
    for (int v = 0; v < n; ++v) term(row(kLower, 0), v, -1);
    for (int v = 0; v < n; ++v) term(row(kCap, kGridCap), v, 1);

    lp.c.assign(n, 0.0);
    lp.c[fv(j)] += edge_coefficient(d);
    lp.c[Fv(j, j)] -= 1;
  }

  TriangleGrid grid(const std::vector<double>& x) const {
    TriangleGrid g(N);
    for (int a = 1; a < N; ++a) g.f(a) = x[fv(a)];
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) {
        const int v = Fv(a, b);
        g.F(a, b) = v < 0 ? 0.0 : x[v];
      }
    return g;
  }

  std::vector<double> vars(const TriangleGrid& g) const {
    std::vector<double> x(lp.num_vars);
    for (int a = 1; a < N; ++a) x[fv(a)] = g.f(a);
    for (const auto& [ab, v] : F_var) x[v] = g.F(ab.first, ab.second);
    return x;
  }

  /// Strictly feasible point: f = a(N-a), F = f(a) + f(b) + N(a+b) - a^2 - b^2 - ab,
  /// whose second differences are all -2 or -4, scaled into the box.
  std::vector<double> interior_start() const {
    TriangleGrid g(N);
    double peak = 0;
    for (int a = 0; a <= N; ++a) g.f(a) = static_cast<double>(a) * (N - a);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) {
        g.F(a, b) = g.f(a) + g.f(b) + static_cast<double>(N) * (a + b) - a * a - b * b -
                    static_cast<double>(a) * b;
        peak = std::max(peak, g.F(a, b));
      }
    const double scale = std::min(0.5 / g.f(j), 0.5 * kGridCap / peak);
    auto x = vars(g);
    for (auto& v : x) v *= scale;
    return x;
  }
};

void check_params(int d, int j, int N) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  if (N < 8) throw std::invalid_argument("grid resolution must be >= 8");
  if (j < 1 || 2 * j > N) throw std::invalid_argument("need q = j/N with 1 <= j and 2j <= N");
}

double xlogx(double p) { return p > 0 ? p * std::log(p) : 0.0; }

const char* const kCaveat =
    "directional second differences are necessary but not sufficient for concavity on the "
    "triangle; a positive margin excludes q at grid resolution only";

void add_probe_note(Certificate& c) {
  const auto p = probe_interpolant(c.grid, 2000, 12345);
  c.notes.push_back("interpolant concavity probe: " + std::to_string(p.violations) + " of " +
                    std::to_string(p.samples) + " mixtures violated, worst gap " + format12(p.worst));
}

}  // namespace

Certificate feasibility_margin(int d, int j, int N) {
  check_params(d, j, N);
  GridLP g(d, j, N);
  const auto sol = solve_lp(g.lp, g.interior_start());
  Certificate c;
  c.d = d;
  c.j = j;
  c.mode = "lp";
  c.grid = g.grid(sol.x);
  c.margin = edge_coefficient(d) * c.grid.f(j) - c.grid.F(j, j);
  c.has_duals = true;
  c.duals = sol.y;
  c.iterations = sol.iterations;
  c.dual_summary = dual_report(c);
  for (const auto& fam : c.dual_summary.families)
    if (fam.name == kFamilies[kCap] && fam.sum > 1e-9) c.box_binding = true;
  c.notes.push_back(kCaveat);
  if (c.box_binding)
    c.notes.push_back("the artificial cap " + format12(kGridCap) + " carries a positive multiplier");
  add_probe_note(c);
  return c;
}

Certificate entropy_certificate(int d, int j, int N) {
  check_params(d, j, N);
  Certificate c;
  c.d = d;
  c.j = j;
  c.mode = "entropy";
  c.grid = TriangleGrid(N);
  auto h2 = [&](int a) {
    const double x = static_cast<double>(a) / N;
    return a == 0 || a == N ? 0.0 : -xlogx(x) - xlogx(1 - x);
  };
  const double scale = 1.0 / h2(j);
  for (int a = 0; a <= N; ++a) c.grid.f(a) = scale * h2(a);
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) {
      const double x = static_cast<double>(a) / N, y = static_cast<double>(b) / N;
      const int rest = N - a - b;
      c.grid.F(a, b) = (a == N || b == N || rest == N) ? 0.0
                                                       : -scale * (xlogx(x) + xlogx(y) +
                                                                   xlogx(static_cast<double>(rest) / N));
    }
  c.margin = edge_coefficient(d) * c.grid.f(j) - c.grid.F(j, j);
  c.notes.push_back(kCaveat);
  c.notes.push_back("f is binary entropy and F trinomial entropy, scaled so f(q) = 1");
  add_probe_note(c);
  return c;
}

Certificate trivial_certificate(int d, int j, int N) {
  check_params(d, j, N);
  Certificate c;
  c.d = d;
  c.j = j;
  c.mode = "trivial";
  c.grid = TriangleGrid(N);
  c.has_duals = true;
  c.duals.assign(GridLP(d, j, N).lp.num_rows, 0.0);
  c.dual_summary = dual_report(c);
  c.notes.push_back("f = F = 0; margin 0 excludes nothing");
  return c;
}

VerifyResult verify_certificate(const Certificate& c) {
  VerifyResult r;
  const auto& g = c.grid;
  const int N = g.N();
  auto fail = [&](std::string msg) {
    r.pass = false;
    if (r.failures.size() < 20) r.failures.push_back(std::move(msg));
  };
  if (N < 8 || c.j < 1 || 2 * c.j > N || c.d < 2) {
    fail("parameters out of range");
    return r;
  }
  for (double v : g.f_values())
    if (!std::isfinite(v)) fail("non-finite f value");
  for (double v : g.F_values())
    if (!std::isfinite(v)) fail("non-finite F value");
  if (!r.pass) return r;
  if (g.f(0) != 0 || g.f(N) != 0) fail("f(0) and f(1) must be 0");
  if (g.F(0, 0) != 0 || g.F(N, 0) != 0 || g.F(0, N) != 0) fail("F must vanish at the three corners");

  constexpr double tol = 1e-12;
  r.max_second_difference = -std::numeric_limits<double>::infinity();
  auto note = [&](double v, const std::string& what) {
    r.max_second_difference = std::max(r.max_second_difference, v);
    if (v > tol) fail(what + " has second difference " + format12(v));
  };
  for (int a = 1; a < N; ++a)
    note(g.f(a - 1) - 2 * g.f(a) + g.f(a + 1), "f at " + std::to_string(a));
  for (const auto& dir : kDirs)
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) {
        const int pa = a - dir[0], pb = b - dir[1], ra = a + dir[0], rb = b + dir[1];
        if (!g.inside(pa, pb) || !g.inside(ra, rb)) continue;
        const double dF = g.F(pa, pb) - 2 * g.F(a, b) + g.F(ra, rb);
        const std::string at = " at (" + std::to_string(a) + "," + std::to_string(b) + ") along (" +
                               std::to_string(dir[0]) + "," + std::to_string(dir[1]) + ")";
        note(dF - (g.f(pa) - 2 * g.f(a) + g.f(ra)), "F-f(x)" + at);
        note(dF - (g.f(pb) - 2 * g.f(b) + g.f(rb)), "F-f(y)" + at);
      }
  const double m = edge_coefficient(c.d) * g.f(c.j) - g.F(c.j, c.j);
  r.margin_error = std::abs(m - c.margin);
  if (r.margin_error > 1e-12) fail("stored margin differs from the recomputed " + format12(m));
  return r;
}

DualReport dual_report(const Certificate& c) {
  if (!c.has_duals) throw std::invalid_argument("certificate carries no dual multipliers (mode " + c.mode + ")");
  const GridLP g(c.d, c.j, c.grid.N());
  if (static_cast<int>(c.duals.size()) != g.lp.num_rows)
    throw std::invalid_argument("certificate has " + std::to_string(c.duals.size()) +
                                " multipliers, the LP has " + std::to_string(g.lp.num_rows) + " rows");
  const auto x = g.vars(c.grid);
  std::vector<double> Ax(g.lp.num_rows, 0.0), Aty(g.lp.num_vars, 0.0);
  for (const auto& e : g.lp.entries) {
    Ax[e.row] += e.value * x[e.col];
    Aty[e.col] += e.value * c.duals[e.row];
  }
  DualReport rep;
  for (int f = 0; f < kNumFamilies; ++f) rep.families.push_back({kFamilies[f]});
  for (int r = 0; r < g.lp.num_rows; ++r) {
    auto& fam = rep.families[g.family[r]];
    const double y = c.duals[r];
    ++fam.rows;
    fam.sum += y;
    fam.max = std::max(fam.max, y);
    if (y > 1e-8) ++fam.active;
    fam.max_complementarity = std::max(fam.max_complementarity, std::abs((g.lp.b[r] - Ax[r]) * y));
    rep.dual_objective += g.lp.b[r] * y;
  }
  for (int v = 0; v < g.lp.num_vars; ++v) {
    rep.primal_objective += g.lp.c[v] * x[v];
    rep.dual_residual = std::max(rep.dual_residual, std::abs(Aty[v] - g.lp.c[v]));
  }
  rep.gap = rep.dual_objective - rep.primal_objective;
  return rep;
}

namespace {

double interp_f(const TriangleGrid& g, double X) {
  const int N = g.N();
  const int a = std::min(static_cast<int>(std::floor(X)), N - 1);
  const double u = X - a;
  return g.f(a) * (1 - u) + g.f(a + 1) * u;
}

/// Piecewise-linear interpolant of F - f(x) (which = 0) or F - f(y) (which = 1)
/// at grid coordinates (X, Y), X + Y <= N.
double interp_G(const TriangleGrid& g, double X, double Y, int which) {
  const int N = g.N();
  auto G = [&](int a, int b) { return g.F(a, b) - g.f(which == 0 ? a : b); };
  int a = static_cast<int>(std::floor(X)), b = static_cast<int>(std::floor(Y));
  a = std::clamp(a, 0, N);
  b = std::clamp(b, 0, N - a);
  const double u = X - a, v = Y - b;
  if (a + b == N) return G(a, b);
  if (u + v <= 1) return G(a, b) * (1 - u - v) + G(a + 1, b) * u + G(a, b + 1) * v;
  return G(a + 1, b) * (1 - v) + G(a, b + 1) * (1 - u) + G(a + 1, b + 1) * (u + v - 1);
}

}  // namespace

InterpolantProbe probe_interpolant(const TriangleGrid& g, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const double N = g.N();
  double scale = 1;
  for (double v : g.F_values()) scale = std::max(scale, std::abs(v));
  InterpolantProbe p;
  p.samples = samples;
  auto point = [&] {
    while (true) {
      const double x = rng.uniform() * N, y = rng.uniform() * N;
      if (x + y <= N) return std::pair{x, y};
    }
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const auto [x1, y1] = point();
    const auto [x2, y2] = point();
    const double lam = rng.uniform();
    const double xm = lam * x1 + (1 - lam) * x2, ym = lam * y1 + (1 - lam) * y2;
    double gaps[3] = {
        interp_f(g, xm) - lam * interp_f(g, x1) - (1 - lam) * interp_f(g, x2),
        interp_G(g, xm, ym, 0) - lam * interp_G(g, x1, y1, 0) - (1 - lam) * interp_G(g, x2, y2, 0),
        interp_G(g, xm, ym, 1) - lam * interp_G(g, x1, y1, 1) - (1 - lam) * interp_G(g, x2, y2, 1)};
    bool bad = false;
    for (double gap : gaps) {
      p.worst = std::min(p.worst, gap);
      bad = bad || gap < -1e-9 * scale;
    }
    p.violations += bad;
  }
  return p;
}

BestBound best_bound(int d, int N, double tol, const std::string& mode, int jobs) {
  if (mode != "lp" && mode != "entropy") throw std::invalid_argument("mode must be lp or entropy");
  check_params(d, 1, N);
  auto solve = [&](int j) { return mode == "lp" ? feasibility_margin(d, j, N) : entropy_certificate(d, j, N); };
  BestBound out;
  const int jmax = N / 2;
  if (N <= 64) {
    out.full_scan = true;
    std::vector<Certificate> certs(jmax);
    const int threads = std::clamp(jobs, 1, jmax);
    std::exception_ptr err;
    std::mutex m;
    auto worker = [&](int t) {
      try {
        for (int j = 1 + t; j <= jmax; j += threads) certs[j - 1] = solve(j);
      } catch (...) {
        std::lock_guard lock(m);
        if (!err) err = std::current_exception();
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    for (int j = 1; j <= jmax; ++j) {
      out.margins.push_back(certs[j - 1].margin);
      if (j > 1 && certs[j - 1].margin < certs[j - 2].margin - 1e-9) out.monotone = false;
    }
    if (!out.monotone) out.notes.push_back("margin is not monotone in q on this grid");
    for (int j = 1; j <= jmax; ++j)
      if (certs[j - 1].margin > tol) {
        out.found = true;
        out.q_star = static_cast<double>(j) / N;
        out.certificate = std::move(certs[j - 1]);
        break;
      }
  } else {
    out.notes.push_back("binary search: assumes the margin is nondecreasing in q");
    auto top = solve(jmax);
    if (top.margin > tol) {
      int lo = 0, hi = jmax;  // margin(lo) <= tol (lo = 0 virtual), margin(hi) > tol
      Certificate best = std::move(top);
      while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        auto c = solve(mid);
        if (c.margin > tol) {
          hi = mid;
          best = std::move(c);
        } else {
          lo = mid;
        }
      }
      out.found = true;
      out.q_star = static_cast<double>(hi) / N;
      out.certificate = std::move(best);
    }
  }
  if (!out.found)
    out.notes.push_back("no grid point has margin above tol; the bound is the uninformative 1/2");
  else
    out.notes.push_back("the excluded-density threshold lies in (q_star - 1/N, q_star]");
  return out;
}

Json to_json(const Certificate& c) {
  Json j{{"d", c.d},
         {"N", c.grid.N()},
         {"j", c.j},
         {"q", c.q()},
         {"mode", c.mode},
         {"margin", c.margin},
         {"f", c.grid.f_values()},
         {"F", c.grid.F_rows()},
         {"has_duals", c.has_duals},
         {"iterations", c.iterations},
         {"box_binding", c.box_binding},
         {"notes", c.notes}};
  if (c.has_duals) {
    j["duals"] = c.duals;
    Json fams = Json::array();
    for (const auto& f : c.dual_summary.families)
      fams.push_back({{"name", f.name},
                      {"rows", f.rows},
                      {"sum", f.sum},
                      {"max", f.max},
                      {"active", f.active},
                      {"max_complementarity", f.max_complementarity}});
    j["dual_summary"] = {{"families", fams},
                         {"primal_objective", c.dual_summary.primal_objective},
                         {"dual_objective", c.dual_summary.dual_objective},
                         {"gap", c.dual_summary.gap},
                         {"dual_residual", c.dual_summary.dual_residual}};
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.d = j.at("d").get<int>();
    c.j = j.at("j").get<int>();
    c.mode = j.at("mode").get<std::string>();
    c.margin = j.at("margin").get<double>();
    c.grid = TriangleGrid::from_rows(j.at("f").get<std::vector<double>>(),
                                     j.at("F").get<std::vector<std::vector<double>>>());
    if (j.at("N").get<int>() != c.grid.N()) throw parse_error("certificate: N does not match the grid");
    c.has_duals = j.at("has_duals").get<bool>();
    c.iterations = j.value("iterations", 0);
    c.box_binding = j.value("box_binding", false);
    c.notes = j.value("notes", std::vector<std::string>{});
    if (c.has_duals) {
      c.duals = j.at("duals").get<std::vector<double>>();
      const auto& s = j.at("dual_summary");
      c.dual_summary.primal_objective = s.at("primal_objective").get<double>();
      c.dual_summary.dual_objective = s.at("dual_objective").get<double>();
      c.dual_summary.gap = s.at("gap").get<double>();
      c.dual_summary.dual_residual = s.at("dual_residual").get<double>();
      for (const auto& f : s.at("families"))
        c.dual_summary.families.push_back({f.at("name").get<std::string>(), f.at("rows").get<std::size_t>(),
                                           f.at("sum").get<double>(), f.at("max").get<double>(),
                                           f.at("active").get<std::size_t>(),
                                           f.at("max_complementarity").get<double>()});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("certificate: ") + e.what());
  }
}

}  // namespace entex
