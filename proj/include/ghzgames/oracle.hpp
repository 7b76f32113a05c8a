#ifndef GHZGAMES_ORACLE_HPP
#define GHZGAMES_ORACLE_HPP

// Brute-force Hilbert-space evaluation of the GHZ outcome distribution:
// dense 3-qubit state vector, Pauli observables along each direction and
// tensor products of their eigenprojectors. Used as ground truth for the
// closed-form probabilities in ghz.hpp.
//
// Qubit 1 (player A) is the most significant bit of the basis index.

#include <Eigen/Dense>
#include <complex>

#include "ghzgames/core.hpp"

namespace ghzgames::oracle {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using StateVector = Eigen::Matrix<Complex, 8, 1>;

StateVector ghz_state();

// a1 sigma_x + a2 sigma_y + a3 sigma_z.
Matrix2 observable_from_direction(const Direction& d);

// (I + sign * obs) / 2, sign in {+1, -1}.
Matrix2 eigenprojector(const Matrix2& obs, int sign);

Matrix8 kron3(const Matrix2& first, const Matrix2& second,
              const Matrix2& third);

// <psi| P | psi>, returned with its imaginary residue.
Complex expectation(const StateVector& psi, const Matrix8& op);

JointDistribution joint_distribution_oracle(const DirectionProfile& p);

}  // namespace ghzgames::oracle

#endif  // GHZGAMES_ORACLE_HPP
