#include "singlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace singlab {

namespace {

GlRule make_gl_rule(int n) {
  GlRule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(kPi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk =
            ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[static_cast<std::size_t>(i)] = -x;  // ascending order
    r.w[static_cast<std::size_t>(i)] = w;
    r.x[static_cast<std::size_t>(n - 1 - i)] = x;
    r.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.x[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

std::map<int, GlRule>& rule_cache() {
  static std::map<int, GlRule> cache;
  return cache;
}
std::mutex rule_mutex;

void emit_piece(double p0, double p1, const GlRule& rule,
                const std::function<void(double, double)>& sink) {
  const double mid = 0.5 * (p0 + p1);
  const double half = 0.5 * (p1 - p0);
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    sink(mid + half * rule.x[i], half * rule.w[i]);
}

void emit_panel(double p0, double p1, double osc_cap, const GlRule& rule,
                const std::function<void(double, double)>& sink) {
  const double len = p1 - p0;
  if (len <= 0.0) return;
  std::size_t pieces = 1;
  if (std::isfinite(osc_cap) && len > osc_cap)
    pieces = static_cast<std::size_t>(std::ceil(len / osc_cap));
  for (std::size_t q = 0; q < pieces; ++q) {
    const double q0 = p0 + len * static_cast<double>(q) / static_cast<double>(pieces);
    const double q1 = p0 + len * static_cast<double>(q + 1) / static_cast<double>(pieces);
    emit_piece(q0, q1, rule, sink);
  }
}

// Covers (origin-side remnant, far] of a half-segment of length L whose
// singular end sits at `origin`, oriented by dir = +1 (origin at left) or
// -1 (origin at right).  Returns the dropped remnant length.
double emit_graded_half(double origin, double L, int dir, const PanelScheme& ps,
                        const GlRule& rule,
                        const std::function<void(double, double)>& sink) {
  double outer = L;  // offset of the panel's far edge from origin
  for (int j = 0; j <= ps.depth; ++j) {
    const double inner = std::ldexp(L, -(j + 1));
    const double p0 = dir > 0 ? origin + inner : origin - outer;
    const double p1 = dir > 0 ? origin + outer : origin - inner;
    emit_panel(p0, p1, ps.osc_cap, rule, sink);
    outer = inner;
  }
  return outer;  // = L * 2^-(depth+1)
}

}  // namespace

const GlRule& gl_rule(int order) {
  if (order < 2 || order > 48)
    throw std::invalid_argument("gl_rule: order must be in [2, 48]");
  std::lock_guard<std::mutex> lock(rule_mutex);
  auto& cache = rule_cache();
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gl_rule(order)).first;
  return it->second;
}

double emit_panels_stream(double a, double b, const PanelScheme& ps,
                          const std::function<void(double, double)>& sink) {
  if (!(b > a)) throw std::invalid_argument("emit_panels: need b > a");
  if (ps.depth < 0 || ps.depth > 60)
    throw std::invalid_argument("emit_panels: depth out of range");
  if (!(ps.osc_cap > 0.0))
    throw std::invalid_argument("emit_panels: osc_cap must be positive");
  const GlRule& rule = gl_rule(ps.gl_order);

  const double L = b - a;
  double dropped = 0.0;
  if (ps.singular_left && ps.singular_right) {
    dropped += emit_graded_half(a, 0.5 * L, +1, ps, rule, sink);
    dropped += emit_graded_half(b, 0.5 * L, -1, ps, rule, sink);
  } else if (ps.singular_left) {
    dropped += emit_graded_half(a, L, +1, ps, rule, sink);
  } else if (ps.singular_right) {
    dropped += emit_graded_half(b, L, -1, ps, rule, sink);
  } else {
    emit_panel(a, b, ps.osc_cap, rule, sink);
  }
  return dropped;
}

void emit_panels(double a, double b, const PanelScheme& ps, QuadNodes& out) {
  out.dropped_len += emit_panels_stream(a, b, ps, [&](double t, double w) {
    out.t.push_back(t);
    out.w.push_back(w);
  });
}

cx integrate(const QuadNodes& q, const std::function<cx(double)>& f) {
  cx s{0.0, 0.0};
  for (std::size_t i = 0; i < q.t.size(); ++i) s += q.w[i] * f(q.t[i]);
  return s;
}

}  // namespace singlab
