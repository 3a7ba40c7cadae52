#pragma once

#include <Eigen/Dense>

#include "kitaev/fermion_op.hpp"

namespace kitaev {

// H = (i/2) f^T A f + c0 with the Majorana vector blocked as
// f = (gA_1 .. gA_n, gB_1 .. gB_n), where for site k (0-based index k):
//   gA_k = c_k + c^d_k   (blocked position k)
//   gB_k = i (c_k - c^d_k)   (blocked position n + k)
// A is real antisymmetric; c0 carries the normal-ordering constant so
// many-body energies are absolute.
struct MajoranaQuadratic {
    Eigen::MatrixXd A;
    double c0 = 0.0;
};

// Substitutes c^d_k = (gA_k + i gB_k)/2, c_k = (gA_k - i gB_k)/2 into a
// quadratic-plus-constant Hermitian operator. n < 0 infers the site count
// from the operator. Throws NonQuadraticTerm on degree > 2 (or stray linear
// terms) and std::invalid_argument if the result is not a real form.
MajoranaQuadratic majorana_quadratic(const FermionOperator& op, int n = -1);

}  // namespace kitaev
