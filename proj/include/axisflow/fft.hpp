#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "axisflow/errors.hpp"

namespace axisflow::pde {

/// Discrete Fourier transform of fixed length. Radix-2 Cooley-Tukey when the
/// length is a power of two, plain O(n^2) DFT otherwise (desk-scale grids
/// only ever need the latter for odd test sizes).
class Dft {
public:
    explicit Dft(int n) : n_(n) {
        if (n < 2) throw DomainError("Dft length must be >= 2");
        pow2_ = (n & (n - 1)) == 0;
        if (pow2_) {
            int log2n = 0;
            while ((1 << log2n) < n) ++log2n;
            rev_.resize(n);
            for (int i = 0; i < n; ++i) {
                int x = i, r = 0;
                for (int b = 0; b < log2n; ++b) {
                    r = (r << 1) | (x & 1);
                    x >>= 1;
                }
                rev_[i] = r;
            }
        }
        tw_.resize(n);
        for (int k = 0; k < n; ++k) {
            const double ang = -2.0 * std::numbers::pi * k / n;
            tw_[k] = {std::cos(ang), std::sin(ang)};
        }
    }

    int size() const { return n_; }

    /// X[k] = sum_j x[j] exp(-2 pi i j k / n)
    void forward(const double* x, std::complex<double>* X) const {
        if (pow2_) {
            for (int i = 0; i < n_; ++i) X[rev_[i]] = x[i];
            butterflies(X, false);
        } else {
            for (int k = 0; k < n_; ++k) {
                std::complex<double> acc = 0.0;
                for (int j = 0; j < n_; ++j) {
                    acc += x[j] * tw_[static_cast<int>((static_cast<long long>(j) * k) % n_)];
                }
                X[k] = acc;
            }
        }
    }

    /// x[j] = (1/n) Re sum_k X[k] exp(+2 pi i j k / n)
    void inverse(const std::complex<double>* X, double* x) const {
        std::vector<std::complex<double>> buf(n_);
        if (pow2_) {
            for (int i = 0; i < n_; ++i) buf[rev_[i]] = X[i];
            butterflies(buf.data(), true);
            for (int j = 0; j < n_; ++j) x[j] = buf[j].real() / n_;
        } else {
            for (int j = 0; j < n_; ++j) {
                std::complex<double> acc = 0.0;
                for (int k = 0; k < n_; ++k) {
                    acc += X[k] * std::conj(tw_[static_cast<int>((static_cast<long long>(j) * k) % n_)]);
                }
                x[j] = acc.real() / n_;
            }
        }
    }

private:
    void butterflies(std::complex<double>* a, bool inverse) const {
        for (int len = 2; len <= n_; len <<= 1) {
            const int stride = n_ / len;
            for (int start = 0; start < n_; start += len) {
                for (int k = 0; k < len / 2; ++k) {
                    std::complex<double> w = tw_[static_cast<std::size_t>(k) * stride];
                    if (inverse) w = std::conj(w);
                    const auto u = a[start + k];
                    const auto v = a[start + k + len / 2] * w;
                    a[start + k] = u + v;
                    a[start + k + len / 2] = u - v;
                }
            }
        }
    }

    int n_;
    bool pow2_ = false;
    std::vector<int> rev_;
    std::vector<std::complex<double>> tw_;
};

/// Symbol of the centered second difference on the periodic z grid; using it
/// in mode space makes the FFT solves exactly equivalent to the second-order
/// finite-difference system.
inline double dzz_symbol(int k, int nz, double dz) {
    const double s = std::sin(std::numbers::pi * k / nz);
    return 4.0 * s * s / (dz * dz);
}

}  // namespace axisflow::pde
