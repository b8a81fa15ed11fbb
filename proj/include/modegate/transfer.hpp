#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "modegate/modes.hpp"
#include "modegate/noise.hpp"

namespace modegate {

// Amplitude transmission of a passive linear-optical element on the four-mode
// space. Loss is allowed (singular values below one), gain is not. A matrix
// flagged lossless is unitary to 1e-12.
struct TransferMatrix {
    Mat4 entries = Mat4::Identity();
    bool lossless = true;
};

namespace detail {

inline double largest_singular_value(const Mat4& m)
{
    return Eigen::JacobiSVD<Mat4>(m).singularValues()(0);
}

inline TransferMatrix checked_transfer(Mat4 entries, bool lossless)
{
    if (largest_singular_value(entries) > 1.0 + 1e-9)
        throw std::domain_error("TransferMatrix: gain is forbidden (singular value > 1)");
    if (lossless) {
        const double dev = (entries.adjoint() * entries - Mat4::Identity()).cwiseAbs().maxCoeff();
        if (dev > 1e-12)
            throw std::domain_error("TransferMatrix: lossless flag requires a unitary matrix");
    }
    return TransferMatrix{entries, lossless};
}

}  // namespace detail

// Mode-dependent directional coupler. TE0 stays in its rail while the TE1
// pair sees a symmetric beamsplitter with power cross ratio `cross_ratio`,
// cross amplitude carrying the factor i. An optional residual TE0 coupling is
// exposed the same way and defaults to zero.
inline TransferMatrix tmddc_matrix(double cross_ratio, double te0_cross_ratio = 0.0)
{
    if (!(cross_ratio >= 0.0 && cross_ratio <= 1.0))
        throw std::domain_error("tmddc_matrix: cross_ratio must be in [0,1]");
    if (!(te0_cross_ratio >= 0.0 && te0_cross_ratio <= 1.0))
        throw std::domain_error("tmddc_matrix: te0_cross_ratio must be in [0,1]");

    Mat4 m = Mat4::Zero();
    const auto fill_pair = [&m](int a, int b, double ratio) {
        const double through = std::sqrt(1.0 - ratio);
        const Complex cross(0.0, std::sqrt(ratio));
        m(a, a) = through;
        m(b, b) = through;
        m(a, b) = cross;
        m(b, a) = cross;
    };
    fill_pair(mode_index(Rail::Control, Transverse::TE0), mode_index(Rail::Target, Transverse::TE0),
              te0_cross_ratio);
    fill_pair(mode_index(Rail::Control, Transverse::TE1), mode_index(Rail::Target, Transverse::TE1),
              cross_ratio);
    return detail::checked_transfer(m, true);
}

// Mode-dependent attenuator on one rail: diagonal with amplitudes
// sqrt(te0_power_transmission) and sqrt(te1_power_transmission) on that
// rail's TE0/TE1 entries, identity on the other rail.
inline TransferMatrix mma_matrix(Rail rail, double te0_power_transmission,
                                 double te1_power_transmission)
{
    if (!(te0_power_transmission >= 0.0 && te0_power_transmission <= 1.0) ||
        !(te1_power_transmission >= 0.0 && te1_power_transmission <= 1.0))
        throw std::domain_error("mma_matrix: power transmissions must be in [0,1]");

    Mat4 m = Mat4::Identity();
    m(mode_index(rail, Transverse::TE0), mode_index(rail, Transverse::TE0)) =
        std::sqrt(te0_power_transmission);
    m(mode_index(rail, Transverse::TE1), mode_index(rail, Transverse::TE1)) =
        std::sqrt(te1_power_transmission);
    const bool lossless = te0_power_transmission == 1.0 && te1_power_transmission == 1.0;
    return detail::checked_transfer(m, lossless);
}

// Diagonal per-mode amplitude loss.
inline TransferMatrix loss_matrix(const std::array<double, 4>& per_mode_amplitude)
{
    Mat4 m = Mat4::Zero();
    bool lossless = true;
    for (int i = 0; i < kModeCount; ++i) {
        const double a = per_mode_amplitude[i];
        if (!(a >= 0.0 && a <= 1.0))
            throw std::domain_error("loss_matrix: amplitudes must be in [0,1]");
        m(i, i) = a;
        lossless = lossless && a == 1.0;
    }
    return detail::checked_transfer(m, lossless);
}

// Product of stages in propagation order: the first stage acts first.
inline TransferMatrix compose(const std::vector<TransferMatrix>& stages)
{
    if (stages.empty())
        throw std::domain_error("compose: stage list must be non-empty");
    Mat4 product = Mat4::Identity();
    bool lossless = true;
    for (const TransferMatrix& stage : stages) {
        product = stage.entries * product;
        lossless = lossless && stage.lossless;
    }
    return detail::checked_transfer(product, lossless);
}

// Coupler and attenuator parameters of the gate; the defaults are the
// designed device values.
struct CircuitParams {
    double cross_ratio = 2.0 / 3.0;
    double te0_cross_ratio = 0.0;
    double mma_te0_transmission = 1.0 / 3.0;
};

// The full gate: mode-dependent coupler, one attenuator per rail, then the
// phenomenological per-mode loss of the noise model.
inline TransferMatrix cnot_circuit(const NoiseModel& noise, const CircuitParams& params)
{
    validate(noise);
    return compose({tmddc_matrix(params.cross_ratio, params.te0_cross_ratio),
                    mma_matrix(Rail::Control, params.mma_te0_transmission, 1.0),
                    mma_matrix(Rail::Target, params.mma_te0_transmission, 1.0),
                    loss_matrix(noise.transmissions)});
}

inline TransferMatrix cnot_circuit(const NoiseModel& noise)
{
    return cnot_circuit(noise, CircuitParams{});
}

}  // namespace modegate
