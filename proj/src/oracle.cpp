#include "ghzgames/oracle.hpp"

#include <cmath>

namespace ghzgames::oracle {

StateVector ghz_state() {
  StateVector psi = StateVector::Zero();
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(7) = 1.0 / std::sqrt(2.0);
  return psi;
}

Matrix2 observable_from_direction(const Direction& d) {
  const Complex i{0.0, 1.0};
  Matrix2 sx;
  sx << 0.0, 1.0, 1.0, 0.0;
  Matrix2 sy;
  sy << 0.0, -i, i, 0.0;
  Matrix2 sz;
  sz << 1.0, 0.0, 0.0, -1.0;
  return d.x() * sx + d.y() * sy + d.z() * sz;
}

Matrix2 eigenprojector(const Matrix2& obs, int sign) {
  if (sign != 1 && sign != -1) throw Error("projector sign must be +1 or -1");
  return 0.5 * (Matrix2::Identity() + static_cast<double>(sign) * obs);
}

Matrix8 kron3(const Matrix2& first, const Matrix2& second,
              const Matrix2& third) {
  Matrix8 out;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      out(i, j) = first(i >> 2, j >> 2) * second((i >> 1) & 1, (j >> 1) & 1) *
                  third(i & 1, j & 1);
    }
  }
  return out;
}

Complex expectation(const StateVector& psi, const Matrix8& op) {
  return psi.dot(op * psi);  // dot() conjugates its left argument
}

JointDistribution joint_distribution_oracle(const DirectionProfile& p) {
  const StateVector psi = ghz_state();
  const Matrix2 obs_a = observable_from_direction(p.a);
  const Matrix2 obs_b = observable_from_direction(p.b);
  const Matrix2 obs_c = observable_from_direction(p.c);

  std::array<double, 8> probs{};
  for (const auto& o : all_outcomes()) {
    const Matrix8 joint =
        kron3(eigenprojector(obs_a, o.m()), eigenprojector(obs_b, o.l()),
              eigenprojector(obs_c, o.k()));
    const Complex value = expectation(psi, joint);
    if (std::abs(value.imag()) > kProbabilityTolerance) {
      throw InvalidProbability("expectation value has an imaginary part");
    }
    probs[o.index()] = value.real();
  }
  return JointDistribution(probs);
}

}  // namespace ghzgames::oracle
