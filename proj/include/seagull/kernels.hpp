#ifndef SEAGULL_KERNELS_HPP
#define SEAGULL_KERNELS_HPP

#include <cstddef>

#include "seagull/activations.hpp"

namespace seagull::kernels {

// Dense kernels in two flavours: the default entry points dispatch to an
// OpenMP-parallel loop above a size cutoff, and `*_serial` is the plain
// reference implementation kept for testing and benchmarking.
//
// The parallel loops partition output rows (or column blocks) so that every
// element is produced by exactly one thread with the same per-element
// accumulation order as the serial code. Results are therefore bitwise
// identical to the serial reference for any thread count. Reductions to a
// single scalar (losses, metrics) are deliberately not parallelized; they
// accumulate left to right.

// Per-thread switch. Training workers in a grid run turn this off so that
// concurrent single-threaded runs do not oversubscribe the machine.
bool parallel_enabled();
void set_parallel(bool on);

// C(m x n) = A(m x k) * B(k x n); accumulates into C when acc is set.
void matmul(double* C, const double* A, const double* B,
            std::size_t m, std::size_t k, std::size_t n, bool acc = false);
void matmul_serial(double* C, const double* A, const double* B,
                   std::size_t m, std::size_t k, std::size_t n, bool acc = false);

// out(cols x rows) = in(rows x cols)^T
void transpose(double* out, const double* in, std::size_t rows, std::size_t cols,
               bool acc = false);
void transpose_serial(double* out, const double* in, std::size_t rows, std::size_t cols,
                      bool acc = false);

// Y(rows x cols) = X + b broadcast over rows
void add_bias(double* Y, const double* X, const double* b,
              std::size_t rows, std::size_t cols);
void add_bias_serial(double* Y, const double* X, const double* b,
                     std::size_t rows, std::size_t cols);

// out(cols) = column sums of X(rows x cols); accumulates when acc is set
void colsum(double* out, const double* X, std::size_t rows, std::size_t cols,
            bool acc = false);
void colsum_serial(double* out, const double* X, std::size_t rows, std::size_t cols,
                   bool acc = false);

// y = f(x) elementwise
void apply_activation(double* y, const double* x, std::size_t n,
                      const ActivationKind& k);
void apply_activation_serial(double* y, const double* x, std::size_t n,
                             const ActivationKind& k);

// dx += dy * f'(x) elementwise
void activation_backward(double* dx, const double* x, const double* dy, std::size_t n,
                         const ActivationKind& k);
void activation_backward_serial(double* dx, const double* x, const double* dy, std::size_t n,
                                const ActivationKind& k);

// sequential left-to-right reductions (never parallel)
double sum_serial(const double* x, std::size_t n);
double mse_serial(const double* pred, const double* target, std::size_t n);
double mae_serial(const double* pred, const double* target, std::size_t n);

} // namespace seagull::kernels

#endif
