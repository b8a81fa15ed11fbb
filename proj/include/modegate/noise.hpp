#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace modegate {

// Phenomenological imperfection knobs for the simulated device.
//
// indistinguishability is the wavepacket overlap of the two photons at zero
// delay; it weights the two-photon exchange term. transmissions are per-mode
// amplitude transmissions in the fixed mode ordering (a diagonal loss element
// appended after the gate). background is an additive mean count per
// measurement setting. coherence_width is the Gaussian width of the overlap
// as a function of delay; it only matters for HOM delay scans.
//
// The default-constructed model is the ideal device.
struct NoiseModel {
    double indistinguishability = 1.0;
    std::array<double, 4> transmissions{1.0, 1.0, 1.0, 1.0};
    double background = 0.0;
    std::int64_t shots_per_setting = 10000;
    double coherence_width = 1.0;
};

inline void validate(const NoiseModel& noise)
{
    if (!(noise.indistinguishability >= 0.0 && noise.indistinguishability <= 1.0))
        throw std::domain_error("NoiseModel: indistinguishability must be in [0,1]");
    for (double t : noise.transmissions)
        if (!(t >= 0.0 && t <= 1.0))
            throw std::domain_error("NoiseModel: transmissions must be in [0,1]");
    if (!(noise.background >= 0.0))
        throw std::domain_error("NoiseModel: background must be >= 0");
    if (noise.shots_per_setting <= 0)
        throw std::domain_error("NoiseModel: shots_per_setting must be > 0");
    if (!(noise.coherence_width > 0.0))
        throw std::domain_error("NoiseModel: coherence_width must be > 0");
}

}  // namespace modegate
