#pragma once

// 4-state dense kernels, generic over the scalar (double, Rational,
// GrossScalar). State order throughout the project is CC, CD, DC, DD.

#include <array>
#include <cstddef>
#include <cstdint>

namespace grossgame {

template <class S>
using Vec4 = std::array<S, 4>;

template <class S>
using Mat4 = std::array<Vec4<S>, 4>;

template <class S>
Mat4<S> identity4() {
  Mat4<S> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = S(i == j ? 1 : 0);
  }
  return m;
}

template <class S>
Mat4<S> mat_mul(const Mat4<S>& a, const Mat4<S>& b) {
  Mat4<S> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      S acc = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < 4; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

template <class S>
Vec4<S> vec_mat(const Vec4<S>& v, const Mat4<S>& a) {
  Vec4<S> out;
  for (std::size_t j = 0; j < 4; ++j) {
    S acc = v[0] * a[0][j];
    for (std::size_t k = 1; k < 4; ++k) acc += v[k] * a[k][j];
    out[j] = acc;
  }
  return out;
}

template <class S>
S dot(const Vec4<S>& u, const Vec4<S>& v) {
  S acc = u[0] * v[0];
  for (std::size_t k = 1; k < 4; ++k) acc += u[k] * v[k];
  return acc;
}

template <class S>
Vec4<S> operator+(const Vec4<S>& a, const Vec4<S>& b) {
  Vec4<S> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = a[k] + b[k];
  return out;
}

template <class S>
Vec4<S> operator-(const Vec4<S>& a, const Vec4<S>& b) {
  Vec4<S> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = a[k] - b[k];
  return out;
}

template <class S>
Vec4<S> scaled(const Vec4<S>& a, const S& factor) {
  Vec4<S> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = a[k] * factor;
  return out;
}

// Square-and-multiply; mat_pow(a, 0) is the identity.
template <class S>
Mat4<S> mat_pow(Mat4<S> a, std::uint64_t k) {
  Mat4<S> result = identity4<S>();
  while (k > 0) {
    if (k & 1u) result = mat_mul(result, a);
    k >>= 1;
    if (k > 0) a = mat_mul(a, a);
  }
  return result;
}

struct StationarityOptions {
  double epsilon = 1e-15;
  std::size_t max_power = 10000;
};

struct Stationarity {
  std::size_t threshold;  // smallest k with max|A^k - A^{k+1}| < epsilon
  Mat4<double> limit;     // A^threshold
};

// Throws NotConverged when no k <= max_power qualifies, which is how
// periodic or reducible chains show up.
Stationarity find_stationarity(const Mat4<double>& a,
                               const StationarityOptions& options = {});

double max_abs_diff(const Mat4<double>& a, const Mat4<double>& b);

}  // namespace grossgame
