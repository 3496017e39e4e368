#include "h0/grids.hpp"

#include <cmath>

namespace h0 {

  Grid1D Grid1D::uniform(double lo, double hi, int n)
  {
    require(n >= 2, "Grid1D: need at least two nodes");
    require(hi > lo, "Grid1D: upper bound must exceed lower bound");
    Grid1D g;
    g.lo = lo;
    g.hi = hi;
    g.n = n;
    g.nodes.resize(n);
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i)
      g.nodes[i] = lo + h * i;
    g.nodes[0] = lo;
    g.nodes[n - 1] = hi;
    return g;
  }

  Grid1D Grid1D::uniform_spaced(double lo, double spacing, int n)
  {
    require(n >= 2, "Grid1D: need at least two nodes");
    require(spacing > 0.0, "Grid1D: spacing must be positive");
    return uniform(lo, lo + spacing * (n - 1), n);
  }

  AngleGrid AngleGrid::gauss(int n_total)
  {
    require(n_total >= 2 && n_total % 2 == 0,
            "AngleGrid: node count must be even and at least 2");
    const int half = n_total / 2;
    AngleGrid g;
    g.mu.reserve(n_total);
    g.w.reserve(n_total);
    for (auto panel : {std::pair<double, double>{-1.0, 0.0},
                       std::pair<double, double>{0.0, 1.0}}) {
      QuadRule r = gauss_legendre_on(half, panel.first, panel.second);
      g.mu.insert(g.mu.end(), r.nodes.begin(), r.nodes.end());
      g.w.insert(g.w.end(), r.weights.begin(), r.weights.end());
    }
    return g;
  }

}
