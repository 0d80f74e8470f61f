// Small fixed-size complex linear algebra used throughout: 2-vectors and
// 2x2 tensors over std::complex<double>. Value types, no allocation.
#ifndef HSRTM_TENSOR_HPP
#define HSRTM_TENSOR_HPP

#include <cmath>
#include <complex>

namespace hsrtm {

using cd = std::complex<double>;
inline constexpr cd I{0.0, 1.0};

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point operator-(Point a, Point b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point operator*(double s, Point a) { return {s * a.x1, s * a.x2}; }
inline double dot(Point a, Point b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double norm(Point a) { return std::hypot(a.x1, a.x2); }

struct Vec2c {
  cd v1{0.0, 0.0};
  cd v2{0.0, 0.0};
};

inline Vec2c operator+(Vec2c a, Vec2c b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
inline Vec2c operator-(Vec2c a, Vec2c b) { return {a.v1 - b.v1, a.v2 - b.v2}; }
inline Vec2c operator*(cd s, Vec2c a) { return {s * a.v1, s * a.v2}; }
inline Vec2c operator*(double s, Vec2c a) { return {s * a.v1, s * a.v2}; }
inline Vec2c conj(Vec2c a) { return {std::conj(a.v1), std::conj(a.v2)}; }
// Bilinear dot product, no conjugation.
inline cd dot(Vec2c a, Vec2c b) { return a.v1 * b.v1 + a.v2 * b.v2; }
inline double norm(Vec2c a) { return std::sqrt(std::norm(a.v1) + std::norm(a.v2)); }

// 2x2 complex matrix, row-major [11,12;21,22].
struct Tensor2C {
  cd m11{0.0, 0.0}, m12{0.0, 0.0}, m21{0.0, 0.0}, m22{0.0, 0.0};

  static Tensor2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Tensor2C diag(cd a, cd b) { return {a, 0.0, 0.0, b}; }
};

inline Tensor2C operator+(Tensor2C a, Tensor2C b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
inline Tensor2C operator-(Tensor2C a, Tensor2C b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
inline Tensor2C operator-(Tensor2C a) { return {-a.m11, -a.m12, -a.m21, -a.m22}; }
inline Tensor2C operator*(cd s, Tensor2C a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
inline Tensor2C operator*(double s, Tensor2C a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
inline Tensor2C& operator+=(Tensor2C& a, Tensor2C b) { a = a + b; return a; }
inline Tensor2C& operator-=(Tensor2C& a, Tensor2C b) { a = a - b; return a; }

inline Tensor2C matmul(Tensor2C a, Tensor2C b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}
inline Vec2c matvec(Tensor2C a, Vec2c v) {
  return {a.m11 * v.v1 + a.m12 * v.v2, a.m21 * v.v1 + a.m22 * v.v2};
}
inline Tensor2C transpose(Tensor2C a) { return {a.m11, a.m21, a.m12, a.m22}; }
inline Tensor2C conj(Tensor2C a) {
  return {std::conj(a.m11), std::conj(a.m12), std::conj(a.m21), std::conj(a.m22)};
}
inline Tensor2C outer(Vec2c a, Vec2c b) {
  return {a.v1 * b.v1, a.v1 * b.v2, a.v2 * b.v1, a.v2 * b.v2};
}
inline Tensor2C outer(Point a, Point b) {
  return {cd(a.x1 * b.x1), cd(a.x1 * b.x2), cd(a.x2 * b.x1), cd(a.x2 * b.x2)};
}

// Frobenius norm.
inline double norm(Tensor2C a) {
  return std::sqrt(std::norm(a.m11) + std::norm(a.m12) + std::norm(a.m21) +
                   std::norm(a.m22));
}
inline bool isfinite(Tensor2C a) {
  auto ok = [](cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(a.m11) && ok(a.m12) && ok(a.m21) && ok(a.m22);
}

// Conjugation by P = diag(1,-1): flips the sign of the off-diagonal entries.
inline Tensor2C pconj(Tensor2C a) { return {a.m11, -a.m12, -a.m21, a.m22}; }

}  // namespace hsrtm

#endif
