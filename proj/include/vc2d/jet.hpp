#pragma once

#include <array>

namespace vc2d {

// Truncated second-order Taylor data in N variables: value, gradient and the
// upper triangle of the Hessian (mixed partials are stored once). Arithmetic
// propagates first and second derivatives exactly, up to rounding; this is
// the currency every differential operator downstream consumes.
//
// N = 0 degenerates to plain value arithmetic and backs the value-only
// evaluation path.
template <int N>
struct Jet {
  static constexpr int kVars = N;
  static constexpr int kHessian = N * (N + 1) / 2;

  double v = 0.0;
  std::array<double, N> d{};         // first partials
  std::array<double, kHessian> dd{};  // second partials, row-major upper triangle

  // index of entry (i,j), i <= j, in dd
  static constexpr int at(int i, int j) { return i * N - i * (i - 1) / 2 + (j - i); }

  static Jet constant(double c) {
    Jet j;
    j.v = c;
    return j;
  }

  // seed for the i-th independent variable
  static Jet variable(double value, int i) {
    Jet j;
    j.v = value;
    j.d[i] = 1.0;
    return j;
  }

  double dx() const requires(N >= 1) { return d[0]; }
  double dy() const requires(N >= 2) { return d[1]; }
  double dz() const requires(N >= 3) { return d[2]; }
  double dxx() const requires(N >= 1) { return dd[at(0, 0)]; }
  double dxy() const requires(N >= 2) { return dd[at(0, 1)]; }
  double dyy() const requires(N >= 2) { return dd[at(1, 1)]; }
  double dxz() const requires(N >= 3) { return dd[at(0, 2)]; }
  double dyz() const requires(N >= 3) { return dd[at(1, 2)]; }
  double dzz() const requires(N >= 3) { return dd[at(2, 2)]; }
};

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r;
  r.v = -a.v;
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  for (int k = 0; k < Jet<N>::kHessian; ++k) r.dd[k] = -a.dd[k];
  return r;
}

template <int N>
constexpr Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v + b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int k = 0; k < Jet<N>::kHessian; ++k) r.dd[k] = a.dd[k] + b.dd[k];
  return r;
}

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v - b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  for (int k = 0; k < Jet<N>::kHessian; ++k) r.dd[k] = a.dd[k] - b.dd[k];
  return r;
}

// (fg)'' = f''g + f'g' + g'f' + fg'', entrywise second-order product rule
template <int N>
constexpr Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  int k = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j, ++k)
      r.dd[k] = a.dd[k] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.dd[k];
  return r;
}

// compose u(f) from u, u', u'' evaluated at f.v (chain rule to second order)
template <int N>
constexpr Jet<N> chain(const Jet<N>& f, double u, double du, double ddu) {
  Jet<N> r;
  r.v = u;
  for (int i = 0; i < N; ++i) r.d[i] = du * f.d[i];
  int k = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j, ++k) r.dd[k] = ddu * f.d[i] * f.d[j] + du * f.dd[k];
  return r;
}

// 1/f; caller checks f.v != 0
template <int N>
constexpr Jet<N> reciprocal(const Jet<N>& f) {
  const double inv = 1.0 / f.v;
  return chain(f, inv, -inv * inv, 2.0 * inv * inv * inv);
}

template <int N>
constexpr Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  return a * reciprocal(b);
}

template <int N>
constexpr Jet<N> operator*(double s, const Jet<N>& a) {
  Jet<N> r;
  r.v = s * a.v;
  for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
  for (int k = 0; k < Jet<N>::kHessian; ++k) r.dd[k] = s * a.dd[k];
  return r;
}

template <int N>
constexpr Jet<N> operator*(const Jet<N>& a, double s) {
  return s * a;
}

template <int N>
constexpr Jet<N> operator+(const Jet<N>& a, double s) {
  Jet<N> r = a;
  r.v += s;
  return r;
}

template <int N>
constexpr Jet<N> operator+(double s, const Jet<N>& a) {
  return a + s;
}

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a, double s) {
  return a + (-s);
}

template <int N>
constexpr Jet<N> operator-(double s, const Jet<N>& a) {
  return (-a) + s;
}

// f^n for integer n >= 0 by square-and-multiply; exact for any base
template <int N>
constexpr Jet<N> pow_int(Jet<N> base, unsigned long long n) {
  Jet<N> r = Jet<N>::constant(1.0);
  while (n > 0) {
    if (n & 1ull) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace vc2d
