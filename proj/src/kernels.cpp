#include "seagull/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seagull::kernels {

namespace {

thread_local bool t_parallel = true;

// Work thresholds below which the OpenMP fork is not worth it.
constexpr std::size_t kMatmulCutoff = 32 * 1024; // m*k*n
constexpr std::size_t kElemCutoff = 16 * 1024;   // element count

// Shared row bodies. The parallel wrappers only partition the outer loop,
// so each output element goes through exactly this code in both flavours.

inline void mm_row(double* __restrict c, const double* __restrict a,
                   const double* __restrict B, std::size_t k, std::size_t n, bool acc) {
    if (!acc) std::fill(c, c + n, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
        const double av = a[l];
        const double* __restrict brow = B + l * n;
        for (std::size_t j = 0; j < n; ++j) c[j] += av * brow[j];
    }
}

inline void transpose_row(double* __restrict out, const double* __restrict in,
                          std::size_t i, std::size_t rows, std::size_t cols, bool acc) {
    // writes column i of `out` from row i of `in`
    if (acc) {
        for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] += in[i * cols + j];
    } else {
        for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
    }
}

inline void bias_row(double* __restrict y, const double* __restrict x,
                     const double* __restrict b, std::size_t cols) {
    for (std::size_t j = 0; j < cols; ++j) y[j] = x[j] + b[j];
}

// column-block body for colsum: rows ascending per element, matching serial
inline void colsum_block(double* __restrict out, const double* __restrict X,
                         std::size_t rows, std::size_t cols,
                         std::size_t j0, std::size_t j1, bool acc) {
    if (!acc) std::fill(out + j0, out + j1, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const double* __restrict xrow = X + i * cols;
        for (std::size_t j = j0; j < j1; ++j) out[j] += xrow[j];
    }
}

} // namespace

bool parallel_enabled() { return t_parallel; }
void set_parallel(bool on) { t_parallel = on; }

void matmul_serial(double* C, const double* A, const double* B,
                   std::size_t m, std::size_t k, std::size_t n, bool acc) {
    for (std::size_t i = 0; i < m; ++i) mm_row(C + i * n, A + i * k, B, k, n, acc);
}

void matmul(double* C, const double* A, const double* B,
            std::size_t m, std::size_t k, std::size_t n, bool acc) {
#ifdef _OPENMP
    if (t_parallel && m * k * n >= kMatmulCutoff && m > 1) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i)
            mm_row(C + i * n, A + i * k, B, k, n, acc);
        return;
    }
#endif
    matmul_serial(C, A, B, m, k, n, acc);
}

void transpose_serial(double* out, const double* in, std::size_t rows, std::size_t cols,
                      bool acc) {
    for (std::size_t i = 0; i < rows; ++i) transpose_row(out, in, i, rows, cols, acc);
}

void transpose(double* out, const double* in, std::size_t rows, std::size_t cols, bool acc) {
#ifdef _OPENMP
    if (t_parallel && rows * cols >= kElemCutoff && rows > 1) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i)
            transpose_row(out, in, i, rows, cols, acc);
        return;
    }
#endif
    transpose_serial(out, in, rows, cols, acc);
}

void add_bias_serial(double* Y, const double* X, const double* b,
                     std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) bias_row(Y + i * cols, X + i * cols, b, cols);
}

void add_bias(double* Y, const double* X, const double* b,
              std::size_t rows, std::size_t cols) {
#ifdef _OPENMP
    if (t_parallel && rows * cols >= kElemCutoff && rows > 1) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i)
            bias_row(Y + i * cols, X + i * cols, b, cols);
        return;
    }
#endif
    add_bias_serial(Y, X, b, rows, cols);
}

void colsum_serial(double* out, const double* X, std::size_t rows, std::size_t cols,
                   bool acc) {
    colsum_block(out, X, rows, cols, 0, cols, acc);
}

void colsum(double* out, const double* X, std::size_t rows, std::size_t cols, bool acc) {
#ifdef _OPENMP
    if (t_parallel && rows * cols >= kElemCutoff && cols >= 8) {
        const int nthreads = omp_get_max_threads();
        const std::size_t block = (cols + nthreads - 1) / nthreads;
#pragma omp parallel for schedule(static)
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t j0 = std::min(cols, static_cast<std::size_t>(t) * block);
            const std::size_t j1 = std::min(cols, j0 + block);
            if (j0 < j1) colsum_block(out, X, rows, cols, j0, j1, acc);
        }
        return;
    }
#endif
    colsum_serial(out, X, rows, cols, acc);
}

void apply_activation_serial(double* y, const double* x, std::size_t n,
                             const ActivationKind& k) {
    for (std::size_t i = 0; i < n; ++i) y[i] = k.eval(x[i]);
}

void apply_activation(double* y, const double* x, std::size_t n, const ActivationKind& k) {
#ifdef _OPENMP
    if (t_parallel && n >= kElemCutoff) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            y[i] = k.eval(x[i]);
        return;
    }
#endif
    apply_activation_serial(y, x, n, k);
}

void activation_backward_serial(double* dx, const double* x, const double* dy,
                                std::size_t n, const ActivationKind& k) {
    for (std::size_t i = 0; i < n; ++i) dx[i] += dy[i] * k.deriv(x[i]);
}

void activation_backward(double* dx, const double* x, const double* dy, std::size_t n,
                         const ActivationKind& k) {
#ifdef _OPENMP
    if (t_parallel && n >= kElemCutoff) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            dx[i] += dy[i] * k.deriv(x[i]);
        return;
    }
#endif
    activation_backward_serial(dx, x, dy, n, k);
}

double sum_serial(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double mse_serial(const double* pred, const double* target, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = pred[i] - target[i];
        s += d * d;
    }
    return s / static_cast<double>(n);
}

double mae_serial(const double* pred, const double* target, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(pred[i] - target[i]);
    return s / static_cast<double>(n);
}

} // namespace seagull::kernels
