#pragma once

#include <complex>
#include <vector>

namespace mandelstam {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Side of a cut: Plus means approach from the upper half plane (x + i0).
enum class Side { Plus, Minus };

inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }
inline Side other(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

// Equal-mass kinematics with m = 1: s + t + u = 4.
inline complex third_variable(complex s, complex t) { return 4.0 - s - t; }

} // namespace mandelstam
