#include "isoscatter/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace isoscatter::moebius {

namespace {

constexpr double kPoleTol = 1e-13;

double abs2(Complex z) { return std::norm(z); }

}  // namespace

double wrap_angle(double theta) {
  double w = std::fmod(theta + M_PI, 2.0 * M_PI);
  if (w <= 0.0) w += 2.0 * M_PI;
  return w - M_PI;  // (-pi, pi]
}

MoebiusMap::MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

MoebiusMap MoebiusMap::from_coefficients(Complex a, Complex b, Complex c, Complex d) {
  Complex det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale == 0.0 || std::abs(det) < 1e-14 * scale * scale) {
    throw std::invalid_argument("MoebiusMap: singular coefficient matrix");
  }
  Complex s = std::sqrt(det);
  return MoebiusMap(a / s, b / s, c / s, d / s);
}

MoebiusMap MoebiusMap::inverse() const {
  // det == 1, so the adjugate is the inverse.
  return MoebiusMap(d_, -b_, -c_, a_);
}

MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs) {
  Complex a = lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_;
  Complex b = lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_;
  Complex c = lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_;
  Complex d = lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_;
  // Renormalize to hold ad - bc = 1 against rounding drift.
  Complex s = std::sqrt(a * d - b * c);
  return MoebiusMap(a / s, b / s, c / s, d / s);
}

ExtComplex MoebiusMap::apply(ExtComplex p) const {
  if (p.is_inf) {
    if (std::abs(c_) == 0.0) return ExtComplex::infinity();
    return ExtComplex::of(a_ / c_);
  }
  Complex num = a_ * p.z + b_;
  Complex den = c_ * p.z + d_;
  double scale = std::max(1.0, std::abs(p.z));
  if (std::abs(den) <= kPoleTol * scale * std::max(std::abs(c_), std::abs(d_))) {
    return ExtComplex::infinity();
  }
  return ExtComplex::of(num / den);
}

double MoebiusMap::distance_to_identity() const {
  return projective_distance(*this, MoebiusMap());
}

double MoebiusMap::projective_distance(const MoebiusMap& lhs, const MoebiusMap& rhs) {
  auto gap = [&](double sign) {
    double g = 0.0;
    g = std::max(g, std::abs(lhs.a_ - sign * rhs.a_));
    g = std::max(g, std::abs(lhs.b_ - sign * rhs.b_));
    g = std::max(g, std::abs(lhs.c_ - sign * rhs.c_));
    g = std::max(g, std::abs(lhs.d_ - sign * rhs.d_));
    return g;
  };
  return std::min(gap(1.0), gap(-1.0));
}

GeneralizedCircle GeneralizedCircle::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
  GeneralizedCircle c;
  c.kind = Kind::Circle;
  c.center = center;
  c.radius = radius;
  return c;
}

GeneralizedCircle GeneralizedCircle::line(Complex normal, double offset) {
  double n = std::abs(normal);
  if (n == 0.0) throw std::invalid_argument("line normal must be nonzero");
  GeneralizedCircle c;
  c.kind = Kind::Line;
  c.normal = normal / n;
  c.offset = offset / n;
  return c;
}

double GeneralizedCircle::distance(Complex z) const {
  if (kind == Kind::Circle) return std::abs(std::abs(z - center) - radius);
  return std::abs((std::conj(normal) * z).real() - offset);
}

bool GeneralizedCircle::contains_interior(ExtComplex p) const {
  if (p.is_inf) return false;
  if (kind == Kind::Circle) return std::abs(p.z - center) < radius;
  return (std::conj(normal) * p.z).real() < offset;
}

std::vector<Complex> GeneralizedCircle::sample_points(int n) const {
  std::vector<Complex> pts;
  pts.reserve(n);
  if (kind == Kind::Circle) {
    for (int k = 0; k < n; ++k) {
      double t = 2.0 * M_PI * k / n;
      pts.push_back(center + radius * Complex(std::cos(t), std::sin(t)));
    }
  } else {
    Complex foot = offset * normal;
    Complex dir = Complex(0.0, 1.0) * normal;  // unit tangent
    double span = 1.0 + std::abs(offset);
    for (int k = 0; k < n; ++k) {
      double t = span * (2.0 * k / double(n - 1) - 1.0);
      pts.push_back(foot + t * dir);
    }
  }
  return pts;
}

double disjointness_margin(const GeneralizedCircle& c1, const GeneralizedCircle& c2) {
  if (!c1.is_circle() || !c2.is_circle()) {
    throw std::invalid_argument("disjointness_margin: circles only");
  }
  return std::abs(c1.center - c2.center) - c1.radius - c2.radius;
}

namespace {

// Image of a generalized circle under the affine map z -> alpha z + beta.
GeneralizedCircle affine_image(const GeneralizedCircle& c, Complex alpha, Complex beta) {
  if (c.is_circle()) {
    return GeneralizedCircle::circle(alpha * c.center + beta, std::abs(alpha) * c.radius);
  }
  Complex n = c.normal * alpha / std::abs(alpha);
  double d = std::abs(alpha) * c.offset + (std::conj(n) * beta).real();
  return GeneralizedCircle::line(n, d);
}

// Image under z -> 1/z.
GeneralizedCircle inversion_image(const GeneralizedCircle& c) {
  if (c.is_circle()) {
    double qq = abs2(c.center);
    double disc = qq - c.radius * c.radius;
    double scale = (std::abs(c.center) + c.radius);
    if (std::abs(disc) <= 1e-13 * scale * scale) {
      // Curve passes through the pole: image is the line Re(conj(Q) w) = 1/2.
      double q = std::abs(c.center);
      return GeneralizedCircle::line(c.center / q, 0.5 / q);
    }
    return GeneralizedCircle::circle(std::conj(c.center) / disc, c.radius / std::abs(disc));
  }
  if (std::abs(c.offset) <= 1e-13) {
    return GeneralizedCircle::line(std::conj(c.normal), 0.0);
  }
  return GeneralizedCircle::circle(std::conj(c.normal) / (2.0 * c.offset),
                                   1.0 / (2.0 * std::abs(c.offset)));
}

// A finite point strictly inside c, bounded away from the given pole.
Complex interior_sample(const GeneralizedCircle& c, const Complex* pole) {
  if (c.is_circle()) {
    Complex z = c.center;
    if (pole && std::abs(z - *pole) < 0.25 * c.radius) z = c.center + 0.5 * c.radius;
    return z;
  }
  Complex z = (c.offset - 1.0) * c.normal;
  if (pole && std::abs(z - *pole) < 0.25) z = (c.offset - 2.0) * c.normal;
  return z;
}

}  // namespace

CircleImage image_of_circle(const MoebiusMap& m, const GeneralizedCircle& c) {
  double cmag = std::abs(m.c());
  double scale = std::max({std::abs(m.a()), std::abs(m.b()), std::abs(m.d()), 1.0});
  GeneralizedCircle image = c;
  Complex pole;
  bool affine = cmag <= 1e-14 * scale;
  if (affine) {
    image = affine_image(c, m.a() / m.d(), m.b() / m.d());
  } else {
    // T(z) = a/c + mu / (z - p) with p = -d/c and mu = -1/c^2 (det = 1).
    pole = -m.d() / m.c();
    Complex mu = -1.0 / (m.c() * m.c());
    GeneralizedCircle shifted = affine_image(c, 1.0, -pole);
    GeneralizedCircle inverted = inversion_image(shifted);
    image = affine_image(inverted, mu, m.a() / m.c());
  }
  Complex z0 = interior_sample(c, affine ? nullptr : &pole);
  ExtComplex w0 = m.apply(z0);
  return CircleImage{image, image.contains_interior(w0)};
}

Classification classify(const MoebiusMap& m, const ClassifyOptions& opts) {
  Classification out;
  if (m.distance_to_identity() < opts.identity_tol) {
    out.kind = MapKind::Identity;
    return out;
  }
  Complex t = m.trace();
  Complex disc = t * t - 4.0;
  if (std::abs(disc) < opts.degeneracy_tol) {
    if (opts.degeneracy_tol > 0.0 || std::abs(disc) != 0.0) {
      throw NearlyDegenerate(std::abs(disc));
    }
    out.kind = MapKind::Parabolic;
    return out;
  }
  bool trace_real = std::abs(t.imag()) <= 1e-12 * (1.0 + std::abs(t));
  if (trace_real && t.real() * t.real() < 4.0) {
    out.kind = MapKind::Elliptic;
    return out;
  }
  out.kind = MapKind::Loxodromic;
  Complex s = std::sqrt(disc);
  Complex lam_plus = 0.5 * (t + s);
  Complex lam_minus = 0.5 * (t - s);
  // Eigenvalue product is det = 1; pick |lambda| > 1. Guard against
  // cancellation in the smaller root by recomputing it as 1/lambda.
  Complex lam_big, lam_small;
  if (std::abs(lam_plus) >= std::abs(lam_minus)) {
    lam_big = lam_plus;
    lam_small = 1.0 / lam_plus;
  } else {
    lam_big = lam_minus;
    lam_small = 1.0 / lam_minus;
  }
  out.multiplier = lam_big * lam_big;
  out.length.ell = 2.0 * std::log(std::abs(lam_big));
  out.length.theta = wrap_angle(2.0 * std::arg(lam_big));

  if (std::abs(m.c()) > 1e-14) {
    out.fixed_attracting = ExtComplex::of((lam_big - m.d()) / m.c());
    out.fixed_repelling = ExtComplex::of((lam_small - m.d()) / m.c());
  } else {
    // Fixed points are infinity and b/(d - a).
    ExtComplex finite = ExtComplex::of(m.b() / (m.d() - m.a()));
    if (std::abs(m.a()) > std::abs(m.d())) {
      out.fixed_attracting = ExtComplex::infinity();
      out.fixed_repelling = finite;
    } else {
      out.fixed_attracting = finite;
      out.fixed_repelling = ExtComplex::infinity();
    }
  }
  return out;
}

ComplexLength complex_length(const MoebiusMap& m, const ClassifyOptions& opts) {
  Classification cls = classify(m, opts);
  if (cls.kind != MapKind::Loxodromic) {
    throw NearlyDegenerate(std::abs(m.trace() * m.trace() - 4.0));
  }
  return cls.length;
}

}  // namespace isoscatter::moebius
