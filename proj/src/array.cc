// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tapcrnn/array.h"

namespace tapcrnn {

// Three layouts cover forward (NN) and the two matmul adjoints (NT, TN).
// Loop orders keep the innermost stride contiguous so the compiler can
// vectorize.
void MatMulAcc(const double *a, bool trans_a, const double *b, bool trans_b,
               double *c, int m, int k, int n) {
  if (!trans_a && !trans_b) {
    // C[i,j] += sum_p A[i,p] * B[p,j]
    for (int i = 0; i < m; ++i) {
      double *ci = c + static_cast<size_t>(i) * n;
      const double *ai = a + static_cast<size_t>(i) * k;
      for (int p = 0; p < k; ++p) {
        const double av = ai[p];
        const double *bp = b + static_cast<size_t>(p) * n;
        for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
      }
    }
  } else if (!trans_a && trans_b) {
    // C[i,j] += sum_p A[i,p] * B[j,p]
    for (int i = 0; i < m; ++i) {
      double *ci = c + static_cast<size_t>(i) * n;
      const double *ai = a + static_cast<size_t>(i) * k;
      for (int j = 0; j < n; ++j) {
        const double *bj = b + static_cast<size_t>(j) * k;
        double acc = 0.0;
        for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
        ci[j] += acc;
      }
    }
  } else if (trans_a && !trans_b) {
    // C[i,j] += sum_p A[p,i] * B[p,j]
    for (int p = 0; p < k; ++p) {
      const double *ap = a + static_cast<size_t>(p) * m;
      const double *bp = b + static_cast<size_t>(p) * n;
      for (int i = 0; i < m; ++i) {
        const double av = ap[i];
        double *ci = c + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
      }
    }
  } else {
    // C[i,j] += sum_p A[p,i] * B[j,p]; not used on any hot path
    for (int i = 0; i < m; ++i) {
      double *ci = c + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) {
        const double *bj = b + static_cast<size_t>(j) * k;
        double acc = 0.0;
        for (int p = 0; p < k; ++p) acc += a[static_cast<size_t>(p) * m + i] * bj[p];
        ci[j] += acc;
      }
    }
  }
}

}  // namespace tapcrnn
