#include "wgcalc/haar_mc.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace wgcalc {

namespace {

Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase ambiguity so the distribution is exactly Haar
    for (int c = 0; c < d; ++c) {
        std::complex<double> rd = r(c, c);
        std::complex<double> phase = std::abs(rd) > 0 ? rd / std::abs(rd) : 1.0;
        q.col(c) *= phase;
    }
    return q;
}

}  // namespace

McEstimate haar_mc_oracle(const MonomialSpec& m, long samples, uint64_t seed) {
    m.validate();
    if (samples < 1000) throw std::invalid_argument("haar_mc_oracle: need at least 10^3 samples");
    std::mt19937_64 rng(seed);
    double sum_re = 0, sum_im = 0, sumsq_re = 0, sumsq_im = 0;
    for (long s = 0; s < samples; ++s) {
        Eigen::MatrixXcd u = haar_unitary(m.d, rng);
        std::complex<double> val(1.0, 0.0);
        for (const auto& [j, h] : m.u) val *= u(j - 1, h - 1);
        for (const auto& [i, p] : m.ubar) val *= std::conj(u(i - 1, p - 1));
        sum_re += val.real();
        sum_im += val.imag();
        sumsq_re += val.real() * val.real();
        sumsq_im += val.imag() * val.imag();
    }
    McEstimate est;
    est.samples = samples;
    double n = static_cast<double>(samples);
    est.mean_re = sum_re / n;
    est.mean_im = sum_im / n;
    est.stderr_re = std::sqrt(std::max(0.0, sumsq_re / n - est.mean_re * est.mean_re) / n);
    est.stderr_im = std::sqrt(std::max(0.0, sumsq_im / n - est.mean_im * est.mean_im) / n);
    return est;
}

}  // namespace wgcalc
