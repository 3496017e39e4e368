#ifndef h0_quadrature_hpp
#define h0_quadrature_hpp

#include "h0/common.hpp"

namespace h0 {

  struct QuadRule {
    std::vector<double> nodes;    // abscissae, ascending
    std::vector<double> weights;  // positive weights, same length
    std::size_t size() const { return nodes.size(); }
  };

  // Gauss-Legendre rule on [-1,1]. Results are cached per order; the cache
  // is guarded so rules can be requested from worker threads.
  const QuadRule& gauss_legendre(int order);

  // Gauss-Legendre rule mapped affinely onto [lo,hi].
  QuadRule gauss_legendre_on(int order, double lo, double hi);

  // Weights of a composite Newton-Cotes rule on a uniform grid of n nodes
  // with spacing h. Uses Simpson panels, closing an even node count with a
  // single 3/8 panel (or the trapezoid rule when n == 2). Exact for cubics
  // whenever n >= 4.
  std::vector<double> simpson_weights(int n, double h);

  // Panels of a quadrature grid that is geometrically refined toward a set
  // of interior singular or edge points. Returns consecutive panel
  // boundaries lo = b_0 < b_1 < ... < b_m = hi. Around every edge point e
  // inside (lo,hi) the boundaries e - d, e + d are inserted for
  // d = base, base/ratio, ..., down to floor; long panels are then split to
  // length <= base.
  std::vector<double> graded_panel_edges(double lo, double hi,
                                         const std::vector<double>& edges,
                                         double floor = 1e-6,
                                         double ratio = 2.0,
                                         double base = 0.5);

  // Composite Gauss-Legendre rule over the given panel boundaries.
  QuadRule composite_gl(const std::vector<double>& panel_edges, int order);

}

#endif
