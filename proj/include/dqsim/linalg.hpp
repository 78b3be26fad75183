#pragma once

#include <complex>

#include <Eigen/Core>

namespace dqsim {

template <class Scalar>
using ComplexT = std::complex<Scalar>;

template <class Scalar>
using VectorXc = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, 1>;

template <class Scalar>
using MatrixXc = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using VectorXr = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complexd = std::complex<double>;

}  // namespace dqsim
