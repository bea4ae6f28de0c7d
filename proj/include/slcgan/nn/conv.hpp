#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slcgan/core/parallel.hpp"
#include "slcgan/nn/gemm.hpp"
#include "slcgan/nn/layer.hpp"

namespace slcgan {

// 1-D convolution, Lout = (Lin + 2*pad - kernel) / stride + 1.
// Weight layout (Cout, Cin*K) row-major; compute is im2col + one GEMM over
// the whole batch.
template <typename T>
class Conv1d : public Layer<T> {
public:
    Conv1d(int in_ch, int out_ch, int kernel, int stride, int pad)
        : cin_(in_ch), cout_(out_ch), k_(kernel), stride_(stride), pad_(pad) {
        w_.assign(static_cast<std::size_t>(cout_) * cin_ * k_, T(0));
        b_.assign(static_cast<std::size_t>(cout_), T(0));
        dw_.assign(w_.size(), T(0));
        db_.assign(b_.size(), T(0));
    }

    std::string kind() const override { return "conv1d"; }

    static std::int64_t out_len(std::int64_t lin, int k, int stride, int pad) {
        const std::int64_t l = (lin + 2 * pad - k) / stride + 1;
        if (l <= 0) throw std::invalid_argument("conv1d: non-positive output length");
        return l;
    }

    Tensor<T> forward(const Tensor<T>& x, bool) override {
        if (x.rank() != 3 || x.dim(1) != cin_)
            throw std::invalid_argument("conv1d: expected (N, " + std::to_string(cin_) + ", L)");
        n_ = x.dim(0);
        lin_ = x.dim(2);
        lout_ = out_len(lin_, k_, stride_, pad_);

        const std::int64_t rows = static_cast<std::int64_t>(cin_) * k_;
        cols_.assign(static_cast<std::size_t>(rows * n_ * lout_), T(0));
        im2col(x);

        Tensor<T> y({n_, cout_, lout_});
        std::vector<T> ybuf(static_cast<std::size_t>(cout_ * n_ * lout_));
        gemm_nn(w_.data(), cout_, rows, cols_.data(), n_ * lout_, ybuf.data());
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int co = 0; co < cout_; ++co) {
                const T bias = b_[static_cast<std::size_t>(co)];
                const T* src = ybuf.data() + co * n_ * lout_ + n * lout_;
                T* dst = y.ptr() + (n * cout_ + co) * lout_;
                for (std::int64_t l = 0; l < lout_; ++l) dst[l] = src[l] + bias;
            }
        });
        return y;
    }

    Tensor<T> backward(const Tensor<T>& dy) override {
        const std::int64_t rows = static_cast<std::int64_t>(cin_) * k_;
        std::vector<T> dybuf(static_cast<std::size_t>(cout_ * n_ * lout_));
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int co = 0; co < cout_; ++co) {
                const T* src = dy.ptr() + (n * cout_ + co) * lout_;
                T* dst = dybuf.data() + co * n_ * lout_ + n * lout_;
                for (std::int64_t l = 0; l < lout_; ++l) dst[l] = src[l];
            }
        });

        gemm_nt(dybuf.data(), cout_, n_ * lout_, cols_.data(), rows, dw_.data(), true);
        for (int co = 0; co < cout_; ++co) {
            T acc = 0;
            const T* src = dybuf.data() + co * n_ * lout_;
            for (std::int64_t i = 0; i < n_ * lout_; ++i) acc += src[i];
            db_[static_cast<std::size_t>(co)] += acc;
        }

        std::vector<T> dcols(static_cast<std::size_t>(rows * n_ * lout_));
        gemm_tn(w_.data(), cout_, rows, dybuf.data(), n_ * lout_, dcols.data());

        Tensor<T> dx({n_, cin_, lin_});
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int ci = 0; ci < cin_; ++ci)
                for (int k = 0; k < k_; ++k) {
                    const T* src = dcols.data() + (static_cast<std::int64_t>(ci) * k_ + k) * n_ * lout_ + n * lout_;
                    T* dst = dx.ptr() + (n * cin_ + ci) * lin_;
                    for (std::int64_t l = 0; l < lout_; ++l) {
                        const std::int64_t pos = l * stride_ + k - pad_;
                        if (pos >= 0 && pos < lin_) dst[pos] += src[l];
                    }
                }
        });
        return dx;
    }

    void params(std::vector<ParamBlock<T>>& out) override {
        out.push_back({"conv.w", &w_, &dw_});
        out.push_back({"conv.b", &b_, &db_});
    }

    void init(Rng& rng, InitScheme scheme) override {
        const double std =
            scheme == InitScheme::dcgan ? 0.02 : std::sqrt(2.0 / (static_cast<double>(cin_) * k_));
        for (auto& v : w_) v = static_cast<T>(rng.normal(0.0, std));
        std::fill(b_.begin(), b_.end(), T(0));
    }

    nlohmann::json arch() const override {
        return {{"kind", kind()}, {"in", cin_},     {"out", cout_},
                {"kernel", k_},   {"stride", stride_}, {"pad", pad_}};
    }

    int out_channels() const { return cout_; }

private:
    int cin_, cout_, k_, stride_, pad_;
    std::vector<T> w_, b_, dw_, db_;
    std::vector<T> cols_;
    std::int64_t n_ = 0, lin_ = 0, lout_ = 0;

    void im2col(const Tensor<T>& x) {
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int ci = 0; ci < cin_; ++ci) {
                const T* src = x.ptr() + (n * cin_ + ci) * lin_;
                for (int k = 0; k < k_; ++k) {
                    T* dst = cols_.data() + (static_cast<std::int64_t>(ci) * k_ + k) * n_ * lout_ + n * lout_;
                    for (std::int64_t l = 0; l < lout_; ++l) {
                        const std::int64_t pos = l * stride_ + k - pad_;
                        dst[l] = (pos >= 0 && pos < lin_) ? src[pos] : T(0);
                    }
                }
            }
        });
    }
};

// Transposed 1-D convolution, Lout = (Lin-1)*stride - 2*pad + kernel.
// Weight layout (Cin, Cout*K) row-major.
template <typename T>
class ConvTranspose1d : public Layer<T> {
public:
    ConvTranspose1d(int in_ch, int out_ch, int kernel, int stride, int pad)
        : cin_(in_ch), cout_(out_ch), k_(kernel), stride_(stride), pad_(pad) {
        w_.assign(static_cast<std::size_t>(cin_) * cout_ * k_, T(0));
        b_.assign(static_cast<std::size_t>(cout_), T(0));
        dw_.assign(w_.size(), T(0));
        db_.assign(b_.size(), T(0));
    }

    std::string kind() const override { return "conv_transpose1d"; }

    static std::int64_t out_len(std::int64_t lin, int k, int stride, int pad) {
        const std::int64_t l = (lin - 1) * stride - 2 * pad + k;
        if (l <= 0) throw std::invalid_argument("conv_transpose1d: non-positive output length");
        return l;
    }

    Tensor<T> forward(const Tensor<T>& x, bool) override {
        if (x.rank() != 3 || x.dim(1) != cin_)
            throw std::invalid_argument("conv_transpose1d: expected (N, " + std::to_string(cin_) + ", L)");
        n_ = x.dim(0);
        lin_ = x.dim(2);
        lout_ = out_len(lin_, k_, stride_, pad_);

        xall_.assign(static_cast<std::size_t>(cin_ * n_ * lin_), T(0));
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int ci = 0; ci < cin_; ++ci) {
                const T* src = x.ptr() + (n * cin_ + ci) * lin_;
                T* dst = xall_.data() + static_cast<std::int64_t>(ci) * n_ * lin_ + n * lin_;
                for (std::int64_t l = 0; l < lin_; ++l) dst[l] = src[l];
            }
        });

        const std::int64_t rows = static_cast<std::int64_t>(cout_) * k_;
        std::vector<T> cols(static_cast<std::size_t>(rows * n_ * lin_));
        gemm_tn(w_.data(), cin_, rows, xall_.data(), n_ * lin_, cols.data());

        Tensor<T> y({n_, cout_, lout_});
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int co = 0; co < cout_; ++co) {
                T* dst = y.ptr() + (n * cout_ + co) * lout_;
                for (std::int64_t o = 0; o < lout_; ++o) dst[o] = b_[static_cast<std::size_t>(co)];
                for (int k = 0; k < k_; ++k) {
                    const T* src = cols.data() + (static_cast<std::int64_t>(co) * k_ + k) * n_ * lin_ + n * lin_;
                    for (std::int64_t l = 0; l < lin_; ++l) {
                        const std::int64_t pos = l * stride_ + k - pad_;
                        if (pos >= 0 && pos < lout_) dst[pos] += src[l];
                    }
                }
            }
        });
        return y;
    }

    Tensor<T> backward(const Tensor<T>& dy) override {
        const std::int64_t rows = static_cast<std::int64_t>(cout_) * k_;
        std::vector<T> dcols(static_cast<std::size_t>(rows * n_ * lin_));
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int co = 0; co < cout_; ++co) {
                const T* src = dy.ptr() + (n * cout_ + co) * lout_;
                for (int k = 0; k < k_; ++k) {
                    T* dst = dcols.data() + (static_cast<std::int64_t>(co) * k_ + k) * n_ * lin_ + n * lin_;
                    for (std::int64_t l = 0; l < lin_; ++l) {
                        const std::int64_t pos = l * stride_ + k - pad_;
                        dst[l] = (pos >= 0 && pos < lout_) ? src[pos] : T(0);
                    }
                }
            }
        });

        gemm_nt(xall_.data(), cin_, n_ * lin_, dcols.data(), rows, dw_.data(), true);
        for (int co = 0; co < cout_; ++co) {
            T acc = 0;
            for (std::int64_t n = 0; n < n_; ++n) {
                const T* src = dy.ptr() + (n * cout_ + co) * lout_;
                for (std::int64_t o = 0; o < lout_; ++o) acc += src[o];
            }
            db_[static_cast<std::size_t>(co)] += acc;
        }

        std::vector<T> dxall(static_cast<std::size_t>(cin_ * n_ * lin_));
        gemm_nn(w_.data(), cin_, rows, dcols.data(), n_ * lin_, dxall.data());

        Tensor<T> dx({n_, cin_, lin_});
        parallel_for(0, n_, [&](std::int64_t n) {
            for (int ci = 0; ci < cin_; ++ci) {
                const T* src = dxall.data() + static_cast<std::int64_t>(ci) * n_ * lin_ + n * lin_;
                T* dst = dx.ptr() + (n * cin_ + ci) * lin_;
                for (std::int64_t l = 0; l < lin_; ++l) dst[l] = src[l];
            }
        });
        return dx;
    }

    void params(std::vector<ParamBlock<T>>& out) override {
        out.push_back({"deconv.w", &w_, &dw_});
        out.push_back({"deconv.b", &b_, &db_});
    }

    void init(Rng& rng, InitScheme scheme) override {
        const double std =
            scheme == InitScheme::dcgan ? 0.02 : std::sqrt(2.0 / (static_cast<double>(cin_) * k_));
        for (auto& v : w_) v = static_cast<T>(rng.normal(0.0, std));
        std::fill(b_.begin(), b_.end(), T(0));
    }

    nlohmann::json arch() const override {
        return {{"kind", kind()}, {"in", cin_},        {"out", cout_},
                {"kernel", k_},   {"stride", stride_}, {"pad", pad_}};
    }

private:
    int cin_, cout_, k_, stride_, pad_;
    std::vector<T> w_, b_, dw_, db_;
    std::vector<T> xall_;
    std::int64_t n_ = 0, lin_ = 0, lout_ = 0;
};

}  // namespace slcgan
