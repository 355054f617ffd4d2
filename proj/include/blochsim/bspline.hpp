#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <vector>

namespace blochsim {

// Cubic B-spline basis on a clamped uniform knot vector over [a, b] with
// `segments` polynomial pieces. Basis size is segments + 3.
class CubicBSplineBasis {
 public:
  static constexpr int kDegree = 3;

  CubicBSplineBasis(double a, double b, int segments) : segments_(segments) {
    if (!(b > a)) throw std::invalid_argument("CubicBSplineBasis: need b > a");
    if (segments < 1) {
      throw std::invalid_argument("CubicBSplineBasis: need at least 1 segment");
    }
    knots_.assign(kDegree + 1, a);
    for (int i = 1; i < segments; ++i) {
      knots_.push_back(a + (b - a) * static_cast<double>(i) / segments);
    }
    knots_.insert(knots_.end(), kDegree + 1, b);
  }

  int size() const { return segments_ + kDegree; }
  int segments() const { return segments_; }
  double lower() const { return knots_.front(); }
  double upper() const { return knots_.back(); }
  const std::vector<double>& knots() const { return knots_; }

  // Values of the four basis functions that are nonzero at x; they are
  // functions first..first+3.
  void evaluate(double x, int& first, std::array<double, 4>& values) const {
    const int span = find_span(x);
    first = span - kDegree;
    basis_funs<kDegree>(span, x, values);
  }

  // First derivatives of the same four functions.
  void evaluate_derivative(double x, int& first, std::array<double, 4>& derivs) const {
    const int span = find_span(x);
    first = span - kDegree;
    std::array<double, 3> lower_deg;
    basis_funs<2>(span, x, lower_deg);
    // N'_{j,3} = 3 (N_{j,2}/(t_{j+3}-t_j) - N_{j+1,2}/(t_{j+4}-t_{j+1}))
    for (int r = 0; r < 4; ++r) {
      const int j = first + r;
      const double nl = (r >= 1) ? lower_deg[r - 1] : 0.0;  // N_{j,2}
      const double nr = (r <= 2) ? lower_deg[r] : 0.0;      // N_{j+1,2}
      const double dl = knots_[j + 3] - knots_[j];
      const double dr = knots_[j + 4] - knots_[j + 1];
      double v = 0.0;
      if (dl > 0.0) v += nl / dl;
      if (dr > 0.0) v -= nr / dr;
      derivs[r] = kDegree * v;
    }
  }

 private:
  int find_span(double x) const {
    const double a = lower();
    const double b = upper();
    if (x <= a) return kDegree;
    if (x >= b) return kDegree + segments_ - 1;
    // uniform interior spacing
    const double h = (b - a) / segments_;
    int cell = static_cast<int>((x - a) / h);
    if (cell >= segments_) cell = segments_ - 1;
    // guard against rounding at cell boundaries
    while (cell > 0 && x < knots_[kDegree + cell]) --cell;
    while (cell < segments_ - 1 && x >= knots_[kDegree + cell + 1]) ++cell;
    return kDegree + cell;
  }

  template <int P, std::size_t M>
  void basis_funs(int span, double x, std::array<double, M>& out) const {
    static_assert(M == P + 1);
    std::array<double, P + 1> left{}, right{};
    out[0] = 1.0;
    for (int j = 1; j <= P; ++j) {
      left[j] = x - knots_[span + 1 - j];
      right[j] = knots_[span + j] - x;
      double saved = 0.0;
      for (int r = 0; r < j; ++r) {
        const double temp = out[r] / (right[r + 1] + left[j - r]);
        out[r] = saved + right[r + 1] * temp;
        saved = left[j - r] * temp;
      }
      out[j] = saved;
    }
  }

  int segments_;
  std::vector<double> knots_;
};

// A fitted spline: basis plus coefficient vector.
struct BSplineCurve {
  CubicBSplineBasis basis{0.0, 1.0, 1};
  Eigen::VectorXd coefficients;

  double value(double x) const {
    int first = 0;
    std::array<double, 4> n;
    basis.evaluate(x, first, n);
    double acc = 0.0;
    for (int r = 0; r < 4; ++r) acc += n[r] * coefficients(first + r);
    return acc;
  }

  double derivative(double x) const {
    int first = 0;
    std::array<double, 4> d;
    basis.evaluate_derivative(x, first, d);
    double acc = 0.0;
    for (int r = 0; r < 4; ++r) acc += d[r] * coefficients(first + r);
    return acc;
  }
};

inline Eigen::MatrixXd bspline_design_matrix(const CubicBSplineBasis& basis,
                                             const std::vector<double>& x) {
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(static_cast<int>(x.size()), basis.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < basis.lower() - 1e-12 || x[i] > basis.upper() + 1e-12) {
      throw std::invalid_argument("bspline fit: abscissa outside knot range");
    }
    int first = 0;
    std::array<double, 4> n;
    basis.evaluate(x[i], first, n);
    for (int r = 0; r < 4; ++r) design(static_cast<int>(i), first + r) = n[r];
  }
  return design;
}

// Ordinary least-squares fit of one or more channels sharing abscissae.
// Columns of y are channels; returns one curve per channel.
inline std::vector<BSplineCurve> fit_bspline_channels(const CubicBSplineBasis& basis,
                                                      const std::vector<double>& x,
                                                      const Eigen::MatrixXd& y) {
  if (static_cast<int>(x.size()) != y.rows()) {
    throw std::invalid_argument("bspline fit: x/y size mismatch");
  }
  if (static_cast<int>(x.size()) < basis.size()) {
    throw std::invalid_argument("bspline fit: fewer points than spline degrees of freedom");
  }
  const Eigen::MatrixXd design = bspline_design_matrix(basis, x);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  std::vector<BSplineCurve> curves;
  curves.reserve(y.cols());
  for (int c = 0; c < y.cols(); ++c) {
    curves.push_back(BSplineCurve{basis, qr.solve(y.col(c))});
  }
  return curves;
}

inline BSplineCurve fit_bspline(const CubicBSplineBasis& basis, const std::vector<double>& x,
                                const std::vector<double>& y) {
  Eigen::MatrixXd ym(static_cast<int>(y.size()), 1);
  for (std::size_t i = 0; i < y.size(); ++i) ym(static_cast<int>(i), 0) = y[i];
  return fit_bspline_channels(basis, x, ym).front();
}

}  // namespace blochsim
