#pragma once

#include <array>
#include <complex>
#include <cstdlib>

namespace sdirac {

using Complex = std::complex<double>;

inline constexpr Complex I{0.0, 1.0};

// Half-integers are stored doubled so channel arithmetic stays exact.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_int(int n) { return HalfInt{2 * n}; }

    double value() const { return 0.5 * twice; }
    bool is_integer() const { return twice % 2 == 0; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
};

using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

using Matrix2c = std::array<std::array<Complex, 2>, 2>;
using Matrix4c = std::array<std::array<Complex, 4>, 4>;

} // namespace sdirac
