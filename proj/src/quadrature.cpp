#include "h0/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace h0 {

  namespace {

    QuadRule make_gauss_legendre(int order)
    {
      QuadRule r;
      r.nodes.resize(order);
      r.weights.resize(order);
      const int m = (order + 1) / 2;
      for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
          double p0 = 1.0, p1 = x;
          for (int k = 2; k <= order; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
          }
          pp = order * (x * p1 - p0) / (x * x - 1.0);
          double dx = p1 / pp;
          x -= dx;
          if (std::abs(dx) < 1e-15)
            break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[order - 1 - i] = x;
        r.weights[order - 1 - i] = w;
      }
      if (order % 2 == 1) {
        r.nodes[order / 2] = 0.0;
      }
      return r;
    }

  }

  const QuadRule& gauss_legendre(int order)
  {
    require(order >= 1, "gauss_legendre: order must be positive");
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
      it = cache.emplace(order, make_gauss_legendre(order)).first;
    return it->second;
  }

  QuadRule gauss_legendre_on(int order, double lo, double hi)
  {
    require(hi > lo, "gauss_legendre_on: empty interval");
    const QuadRule& base = gauss_legendre(order);
    QuadRule r;
    r.nodes.resize(base.size());
    r.weights.resize(base.size());
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < base.size(); ++i) {
      r.nodes[i] = mid + half * base.nodes[i];
      r.weights[i] = half * base.weights[i];
    }
    return r;
  }

  std::vector<double> simpson_weights(int n, double h)
  {
    require(n >= 2, "simpson_weights: need at least two nodes");
    require(h > 0.0, "simpson_weights: spacing must be positive");
    std::vector<double> w(n, 0.0);
    if (n == 2) {
      w[0] = w[1] = 0.5 * h;
      return w;
    }
    int simpson_nodes = n;
    if (n % 2 == 0) {
      // Close an even node count with one cubic panel over the last three
      // intervals, Simpson over the rest.
      simpson_nodes = n - 3;
      const double c = 3.0 * h / 8.0;
      w[n - 4] += c;
      w[n - 3] += 3.0 * c;
      w[n - 2] += 3.0 * c;
      w[n - 1] += c;
    }
    if (simpson_nodes >= 3) {
      w[0] += h / 3.0;
      w[simpson_nodes - 1] += h / 3.0;
      for (int i = 1; i < simpson_nodes - 1; ++i)
        w[i] += (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    } else if (simpson_nodes == 2) {
      w[0] += 0.5 * h;
      w[1] += 0.5 * h;
    }
    return w;
  }

  std::vector<double> graded_panel_edges(double lo, double hi,
                                         const std::vector<double>& edges,
                                         double floor, double ratio,
                                         double base)
  {
    require(hi > lo, "graded_panel_edges: empty interval");
    require(floor > 0.0 && ratio > 1.0 && base > floor,
            "graded_panel_edges: bad refinement parameters");
    std::set<double> pts{lo, hi};
    for (double e : edges) {
      for (double d = base; d > floor; d /= ratio) {
        for (double s : {e - d, e + d}) {
          if (s > lo && s < hi)
            pts.insert(s);
        }
      }
    }
    std::vector<double> sorted(pts.begin(), pts.end());
    std::vector<double> out;
    out.push_back(sorted.front());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const double a = sorted[i], b = sorted[i + 1];
      const int k = std::max(1, (int)std::ceil((b - a) / base));
      for (int j = 1; j <= k; ++j)
        out.push_back(a + (b - a) * j / k);
    }
    out.back() = hi;
    return out;
  }

  QuadRule composite_gl(const std::vector<double>& panel_edges, int order)
  {
    require(panel_edges.size() >= 2, "composite_gl: need at least one panel");
    QuadRule r;
    for (std::size_t i = 0; i + 1 < panel_edges.size(); ++i) {
      QuadRule p = gauss_legendre_on(order, panel_edges[i], panel_edges[i + 1]);
      r.nodes.insert(r.nodes.end(), p.nodes.begin(), p.nodes.end());
      r.weights.insert(r.weights.end(), p.weights.begin(), p.weights.end());
    }
    return r;
  }

}
