#pragma once

#include <array>
#include <complex>

#include "hyperalg/cd_core.hpp"

namespace hyperalg::cd {

using Complex2x2 = std::array<std::array<std::complex<double>, 2>, 2>;

/// q = a + b i + c j + d k  ->  [[a + b i, c + d i], [-c + d i, a - b i]].
template <class T>
Complex2x2 quaternion_to_complex_matrix(const Element<T>& q) {
    if (q.level() != 2) throw Error(Errc::LevelMismatch, "quaternion_to_complex_matrix expects a level-2 element");
    const double a = ScalarTraits<T>::to_double(q[0]), b = ScalarTraits<T>::to_double(q[1]);
    const double c = ScalarTraits<T>::to_double(q[2]), d = ScalarTraits<T>::to_double(q[3]);
    return {{{{{a, b}, {c, d}}}, {{{-c, d}, {a, -b}}}}};
}

inline Complex2x2 matmul(const Complex2x2& x, const Complex2x2& y) {
    Complex2x2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return out;
}

inline Complex2x2 scale(std::complex<double> s, Complex2x2 m) {
    for (auto& row : m)
        for (auto& v : row) v *= s;
    return m;
}

/// sigma_x = -i A(k), sigma_y = -i A(j), sigma_z = -i A(i).
inline std::array<Complex2x2, 3> pauli_matrices() {
    const std::complex<double> mi(0, -1);
    auto A = [](std::size_t idx) { return quaternion_to_complex_matrix(Element<double>::basis(2, idx)); };
    return {scale(mi, A(3)), scale(mi, A(2)), scale(mi, A(1))};
}

}  // namespace hyperalg::cd
