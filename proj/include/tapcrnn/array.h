// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef TAPCRNN_ARRAY_H_
#define TAPCRNN_ARRAY_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tapcrnn/common.h"

namespace tapcrnn {

// Dense row-major array of doubles. The numeric substrate for features,
// parameters and autodiff values.
struct Array {
  std::vector<int> shape;
  std::vector<double> data;

  Array() = default;
  explicit Array(std::vector<int> s) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(NumElOf(shape)), 0.0);
  }
  Array(std::vector<int> s, std::vector<double> d)
      : shape(std::move(s)), data(std::move(d)) {
    TC_CHECK(static_cast<int64_t>(data.size()) == NumElOf(shape),
             "array data size " << data.size() << " does not match shape "
                                << ShapeStr());
  }

  static int64_t NumElOf(const std::vector<int> &s) {
    int64_t n = 1;
    for (int d : s) {
      TC_CHECK(d > 0, "array extents must be positive");
      n *= d;
    }
    return n;
  }

  static Array Zeros(std::vector<int> s) { return Array(std::move(s)); }
  static Array Full(std::vector<int> s, double v) {
    Array a(std::move(s));
    for (auto &x : a.data) x = v;
    return a;
  }
  static Array Scalar(double v) { return Array({1}, {v}); }

  int64_t NumEl() const { return static_cast<int64_t>(data.size()); }
  int Rank() const { return static_cast<int>(shape.size()); }
  int Dim(int i) const { return shape[static_cast<size_t>(i)]; }

  double &At(int i) { return data[static_cast<size_t>(i)]; }
  double At(int i) const { return data[static_cast<size_t>(i)]; }
  double &At(int i, int j) {
    return data[static_cast<size_t>(i) * shape[1] + j];
  }
  double At(int i, int j) const {
    return data[static_cast<size_t>(i) * shape[1] + j];
  }
  double &At(int i, int j, int k) {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  double At(int i, int j, int k) const {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }

  bool SameShape(const Array &o) const { return shape == o.shape; }

  bool AllFinite() const {
    for (double v : data) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  std::string ShapeStr() const {
    std::string s = "(";
    for (size_t i = 0; i < shape.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(shape[i]);
    }
    return s + ")";
  }
};

// C(m x n) += op(A) * op(B); row-major, used by matmul forward and adjoints.
void MatMulAcc(const double *a, bool trans_a, const double *b, bool trans_b,
               double *c, int m, int k, int n);

}  // namespace tapcrnn

#endif  // TAPCRNN_ARRAY_H_
