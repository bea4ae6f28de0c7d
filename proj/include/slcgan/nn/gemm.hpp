#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace slcgan {

template <typename T>
using MatMap = Eigen::Map<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename T>
using ConstMatMap =
    Eigen::Map<const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

// C(M,N) = A(M,K) * B(K,N), optionally accumulating into C. Single-threaded
// by construction (EIGEN_DONT_PARALLELIZE), so results do not depend on the
// worker count used elsewhere.
template <typename T>
void gemm_nn(const T* a, std::int64_t m, std::int64_t k, const T* b, std::int64_t n, T* c,
             bool accumulate = false) {
    ConstMatMap<T> A(a, m, k), B(b, k, n);
    MatMap<T> C(c, m, n);
    if (accumulate)
        C.noalias() += A * B;
    else
        C.noalias() = A * B;
}

// C(M,N) = A(M,K) * B(N,K)^T
template <typename T>
void gemm_nt(const T* a, std::int64_t m, std::int64_t k, const T* b, std::int64_t n, T* c,
             bool accumulate = false) {
    ConstMatMap<T> A(a, m, k), B(b, n, k);
    MatMap<T> C(c, m, n);
    if (accumulate)
        C.noalias() += A * B.transpose();
    else
        C.noalias() = A * B.transpose();
}

// C(M,N) = A(K,M)^T * B(K,N)
template <typename T>
void gemm_tn(const T* a, std::int64_t k, std::int64_t m, const T* b, std::int64_t n, T* c,
             bool accumulate = false) {
    ConstMatMap<T> A(a, k, m), B(b, k, n);
    MatMap<T> C(c, m, n);
    if (accumulate)
        C.noalias() += A.transpose() * B;
    else
        C.noalias() = A.transpose() * B;
}

}  // namespace slcgan
