#include "cusp_oracle.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>
#include <string>

namespace foldcob::testing {
namespace {

double height(double a, double b, double y, double z) { return y * y * y - a * y + z * z - b; }

struct Grid {
  int n;
  double lo;
  double step;
  double radius;
};

Grid make_grid(double a, const OracleOptions& opt) {
  const double r = std::sqrt(opt.delta * opt.delta - a * a);
  return {opt.grid, -r, 2.0 * r / opt.grid, r};
}

}  // namespace

FiberComponents fiber_components(double theta, const OracleOptions& opt) {
  const double a = opt.epsilon * std::cos(theta);
  const double b = opt.epsilon * std::sin(theta);
  const Grid g = make_grid(a, opt);
  const int n = g.n;

  std::vector<double> h((n + 1) * (n + 1));
  std::vector<char> inside_pt((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double y = g.lo + i * g.step;
      const double z = g.lo + j * g.step;
      h[i * (n + 1) + j] = height(a, b, y, z);
      inside_pt[i * (n + 1) + j] = y * y + z * z <= g.radius * g.radius;
    }

  std::vector<char> inside(n * n), active(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c[4] = {i * (n + 1) + j, (i + 1) * (n + 1) + j, i * (n + 1) + j + 1, (i + 1) * (n + 1) + j + 1};
      bool in = true;
      int positive = 0;
      for (int k : c) {
        in = in && inside_pt[k];
        positive += h[k] > 0;
      }
      inside[i * n + j] = in;
      active[i * n + j] = in && positive > 0 && positive < 4;
    }

  FiberComponents out;
  out.label.assign(n * n, -1);
  int next = 0;
  for (int start = 0; start < n * n; ++start) {
    if (!active[start] || out.label[start] >= 0) continue;
    bool rim = false;
    std::deque<int> queue{start};
    out.label[start] = next;
    while (!queue.empty()) {
      const int cell = queue.front();
      queue.pop_front();
      const int ci = cell / n, cj = cell % n;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = ci + di, nj = cj + dj;
          if (ni < 0 || nj < 0 || ni >= n || nj >= n || !inside[ni * n + nj]) {
            rim = true;
            continue;
          }
          const int nb = ni * n + nj;
          if (active[nb] && out.label[nb] < 0) {
            out.label[nb] = next;
            queue.push_back(nb);
          }
        }
    }
    out.touches_rim.push_back(rim);
    (rim ? out.arcs : out.circles)++;
    ++next;
  }
  return out;
}

namespace {

struct Transition {
  circle::EventClass cls;
  long components;
};

// Matches components across a narrow bracket and names the event between them.
Transition classify(const FiberComponents& lo, const FiberComponents& hi, int n) {
  const std::size_t nl = lo.touches_rim.size(), nh = hi.touches_rim.size();
  std::vector<std::vector<char>> overlap(nl, std::vector<char>(nh, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = lo.label[i * n + j];
      if (a < 0) continue;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const int ni = i + di, nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= n || nj >= n) continue;
          const int b = hi.label[ni * n + nj];
          if (b >= 0) overlap[a][b] = 1;
        }
    }
  auto degree_lo = [&](std::size_t a) { long d = 0; for (std::size_t b = 0; b < nh; ++b) d += overlap[a][b]; return d; };
  auto degree_hi = [&](std::size_t b) { long d = 0; for (std::size_t a = 0; a < nl; ++a) d += overlap[a][b]; return d; };

  const long before = lo.total(), after = hi.total();
  for (std::size_t a = 0; a < nl; ++a)
    if (degree_lo(a) == 0) return {circle::EventClass::I0, std::max(before, after)};
  for (std::size_t b = 0; b < nh; ++b)
    if (degree_hi(b) == 0) return {circle::EventClass::I0, std::max(before, after)};
  for (std::size_t b = 0; b < nh; ++b)
    if (degree_hi(b) >= 2) {
      bool arc = hi.touches_rim[b];
      for (std::size_t a = 0; a < nl; ++a) arc = arc || (overlap[a][b] && lo.touches_rim[a]);
      return {arc ? circle::EventClass::Ia : circle::EventClass::I1, std::min(before, after)};
    }
  for (std::size_t a = 0; a < nl; ++a)
    if (degree_lo(a) >= 2) {
      bool arc = lo.touches_rim[a];
      for (std::size_t b = 0; b < nh; ++b) arc = arc || (overlap[a][b] && hi.touches_rim[b]);
      return {arc ? circle::EventClass::Ia : circle::EventClass::I1, std::min(before, after)};
    }
  throw std::runtime_error("oracle could not classify a fiber transition");
}

bool same_state(const FiberComponents& x, const FiberComponents& y) {
  return x.circles == y.circles && x.arcs == y.arcs;
}

}  // namespace

circle::CircleFiberDiagram boundary_diagram(const OracleOptions& opt) {
  const double pi = std::numbers::pi;
  const double dir = opt.counterclockwise ? 1.0 : -1.0;
  auto angle = [&](double s) { return -pi + dir * s; };  // s in [0, 2 pi)

  circle::CircleFiberDiagram d;
  d.mode = circle::BoundaryMode::WithBoundary;
  d.arcs.clear();

  FiberComponents first = fiber_components(angle(0.0), opt);
  d.arcs.push_back({first.circles, first.arcs});
  FiberComponents prev = first;
  double prev_s = 0.0;
  const double span = 2.0 * pi;
  for (int k = 1; k <= opt.samples; ++k) {
    const double s = span * k / opt.samples;
    FiberComponents cur = k == opt.samples ? first : fiber_components(angle(s), opt);
    if (!same_state(prev, cur)) {
      double lo = prev_s, hi = s;
      FiberComponents flo = prev, fhi = cur;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        FiberComponents fm = fiber_components(angle(mid), opt);
        if (same_state(fm, flo)) {
          lo = mid;
          flo = std::move(fm);
        } else {
          hi = mid;
          fhi = std::move(fm);
        }
      }
      if (!same_state(fhi, cur))
        throw std::runtime_error("two fiber events inside one sample step; raise the sample count");
      const Transition t = classify(flo, fhi, opt.grid);
      d.events.push_back({t.cls, t.components});
      d.arcs.push_back({cur.circles, cur.arcs});
    }
    prev = std::move(cur);
    prev_s = s;
  }
  if (!d.events.empty()) d.arcs.pop_back();
  return d;
}

circle::CircleFiberDiagram cap_boundary(const circle::CircleFiberDiagram& d) {
  circle::CircleFiberDiagram out;
  out.mode = circle::BoundaryMode::Closed;
  out.arcs.clear();
  for (const auto& a : d.arcs) out.arcs.push_back({a.circles + a.arcs, 0});
  for (const auto& e : d.events)
    out.events.push_back({e.cls == circle::EventClass::Ia ? circle::EventClass::I1 : e.cls, e.components});
  return out;
}

}  // namespace foldcob::testing
