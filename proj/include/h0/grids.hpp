#ifndef h0_grids_hpp
#define h0_grids_hpp

#include "h0/common.hpp"
#include "h0/quadrature.hpp"

namespace h0 {

  // Uniform sampling grid on a closed interval. nodes[0] == lo and
  // nodes[n-1] == hi exactly; spacing == (hi-lo)/(n-1).
  struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;
    std::vector<double> nodes;

    static Grid1D uniform(double lo, double hi, int n);

    // Grid anchored at lo with an exact spacing; hi is derived.
    static Grid1D uniform_spaced(double lo, double spacing, int n);

    double spacing() const { return (hi - lo) / (n - 1); }
    double operator[](int i) const { return nodes[(std::size_t)i]; }

    // Composite Newton-Cotes weights matched to this grid.
    std::vector<double> integration_weights() const
    {
      return simpson_weights(n, spacing());
    }
  };

  // Quadrature grid on the velocity interval [-1,1]. Built from two
  // Gauss-Legendre panels, one per half interval, so no node sits at zero
  // and functions with a kink at zero are still integrated at full order.
  struct AngleGrid {
    std::vector<double> mu;  // nodes, strictly increasing, never zero
    std::vector<double> w;   // weights, sum to 2

    static AngleGrid gauss(int n_total = 64);

    int size() const { return (int)mu.size(); }
  };

}

#endif
