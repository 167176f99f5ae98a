#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoscatter::moebius {

using Complex = std::complex<double>;

// Trace is numerically too close to +-2 to separate loxodromic from
// parabolic; the caller decides how to handle the degenerate case.
struct NearlyDegenerate : std::runtime_error {
  double trace_sq_gap;
  explicit NearlyDegenerate(double gap)
      : std::runtime_error("classify: |trace^2 - 4| = " + std::to_string(gap) +
                           " below degeneracy tolerance"),
        trace_sq_gap(gap) {}
};

// Point on the Riemann sphere: finite complex value or the point at infinity.
struct ExtComplex {
  Complex z{};
  bool is_inf = false;

  static ExtComplex infinity() { return {Complex{0.0, 0.0}, true}; }
  static ExtComplex of(Complex v) { return {v, false}; }
};

// Loxodromic complex length: ell = 2 log|lambda|, theta = 2 arg(lambda)
// wrapped to (-pi, pi], for the eigenvalue lambda with |lambda| > 1.
// The projective sign ambiguity shifts 2 arg(lambda) by 2 pi, so the
// wrapped value is well defined.
struct ComplexLength {
  double ell = 0.0;
  double theta = 0.0;
};

// Wraps an angle to (-pi, pi].
double wrap_angle(double theta);

// Projective class of a 2x2 complex matrix with ad - bc = 1 after
// normalization (the +-1 sign ambiguity is retained).
class MoebiusMap {
 public:
  MoebiusMap();  // identity

  // Normalizes arbitrary coefficients; throws std::invalid_argument if the
  // determinant vanishes.
  static MoebiusMap from_coefficients(Complex a, Complex b, Complex c, Complex d);
  static MoebiusMap identity() { return MoebiusMap(); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex det() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }

  MoebiusMap inverse() const;
  // Matrix product: (lhs * rhs) acts as lhs after rhs.
  friend MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs);

  ExtComplex apply(ExtComplex p) const;
  ExtComplex apply(Complex z) const { return apply(ExtComplex::of(z)); }

  // Entrywise distance to +-identity (minimum over the two signs).
  double distance_to_identity() const;
  // Minimum over signs of the entrywise max distance.
  static double projective_distance(const MoebiusMap& lhs, const MoebiusMap& rhs);

 private:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d)
      : a_(a), b_(b), c_(c), d_(d) {}
  Complex a_, b_, c_, d_;
};

// Circle or line on the Riemann sphere. Lines are kept as a separate kind
// (unit normal n and signed offset d: points z with Re(conj(n) z) = d)
// so that circle invariants stay testable.
struct GeneralizedCircle {
  enum class Kind { Circle, Line };

  Kind kind = Kind::Circle;
  Complex center{};     // circle only
  double radius = 0.0;  // circle only, > 0
  Complex normal{};     // line only, |normal| = 1
  double offset = 0.0;  // line only

  static GeneralizedCircle circle(Complex center, double radius);
  static GeneralizedCircle line(Complex normal, double offset);

  bool is_circle() const { return kind == Kind::Circle; }

  // Unsigned distance from a finite point to the curve.
  double distance(Complex z) const;
  // Strict interior: open disk for a circle, Re(conj(n) z) < d for a line.
  // The point at infinity is never interior (for a line it lies on the
  // curve's closure on the sphere).
  bool contains_interior(ExtComplex p) const;
  // Points on the curve, evenly spread (circles) or symmetric around the
  // foot of the normal (lines).
  std::vector<Complex> sample_points(int n) const;
};

// Gap between two circles: positive iff disjoint with disjoint interiors.
double disjointness_margin(const GeneralizedCircle& c1, const GeneralizedCircle& c2);

struct CircleImage {
  GeneralizedCircle image;
  // True iff the interior of the source maps into the interior of the image.
  bool interior_to_interior = true;
};

// Exact image of a generalized circle under a Moebius map, decomposed as
// translate -> invert -> affine. Tracks which side the interior lands on.
CircleImage image_of_circle(const MoebiusMap& m, const GeneralizedCircle& c);

enum class MapKind { Identity, Parabolic, Elliptic, Loxodromic };

struct Classification {
  MapKind kind = MapKind::Identity;
  // Loxodromic data (valid only when kind == Loxodromic):
  ExtComplex fixed_attracting{};
  ExtComplex fixed_repelling{};
  Complex multiplier{};  // lambda^2 with |lambda| > 1; derivative at the
                         // repelling fixed point
  ComplexLength length{};
};

struct ClassifyOptions {
  // Gate on |trace^2 - 4|; below it classify throws NearlyDegenerate.
  // Set to 0 to classify exact parabolics instead.
  double degeneracy_tol = 1e-10;
  double identity_tol = 1e-12;
};

Classification classify(const MoebiusMap& m, const ClassifyOptions& opts = {});

// Convenience: classification must be loxodromic, otherwise NearlyDegenerate.
ComplexLength complex_length(const MoebiusMap& m, const ClassifyOptions& opts = {});

}  // namespace isoscatter::moebius
