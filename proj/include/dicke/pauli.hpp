// Single-atom and two-atom operators in the (|1>, |0>) column convention:
// sigma_3|1> = +|1>, sigma_3|0> = -|0>, sigma_plus = |1><0|.

#pragma once

#include "dicke/qstate.hpp"

#include <array>

namespace dicke::pauli {

inline Matrix2c identity() { return Matrix2c::Identity(); }

inline Matrix2c sigma(int n) {
  const Complex i{0.0, 1.0};
  Matrix2c s;
  switch (n) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -i, i, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::out_of_range("Pauli index must be 1, 2 or 3");
  }
  return s;
}

inline Matrix2c raising() {
  Matrix2c s = Matrix2c::Zero();
  s(0, 1) = 1.0;
  return s;
}

inline Matrix2c lowering() { return raising().adjoint(); }

inline Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// a . sigma for a real 3-vector.
inline Matrix2c dot(const Eigen::Vector3d& a) {
  return a(0) * sigma(1) + a(1) * sigma(2) + a(2) * sigma(3);
}

/// Lowering operators of atom A (index 0) and atom B (index 1).
inline std::array<Matrix4c, 2> atom_lowering() {
  return {kron(lowering(), identity()), kron(identity(), lowering())};
}

}  // namespace dicke::pauli
