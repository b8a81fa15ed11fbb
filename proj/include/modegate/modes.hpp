#pragma once

#include <complex>

#include <Eigen/Dense>

namespace modegate {

using Complex = std::complex<double>;
using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;

enum class Rail { Control, Target };
enum class Transverse { TE0, TE1 };

// One of the four physical waveguide modes: a rail (control or target
// multimode waveguide) carrying either the TE0 or the TE1 transverse mode.
struct ModeId {
    Rail rail;
    Transverse transverse;
};

inline constexpr int kModeCount = 4;

// Fixed basis ordering used by every matrix in the library:
// (Control,TE0)=0, (Control,TE1)=1, (Target,TE0)=2, (Target,TE1)=3.
constexpr int mode_index(ModeId m) noexcept
{
    return (m.rail == Rail::Target ? 2 : 0) + (m.transverse == Transverse::TE1 ? 1 : 0);
}

constexpr int mode_index(Rail rail, Transverse transverse) noexcept
{
    return mode_index(ModeId{rail, transverse});
}

constexpr ModeId mode_from_index(int i) noexcept
{
    return ModeId{(i & 2) ? Rail::Target : Rail::Control,
                  (i & 1) ? Transverse::TE1 : Transverse::TE0};
}

inline Vec4 mode_ket(ModeId m)
{
    Vec4 v = Vec4::Zero();
    v(mode_index(m)) = Complex(1.0, 0.0);
    return v;
}

}  // namespace modegate
