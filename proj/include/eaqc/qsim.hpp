#pragma once

#include <array>
#include <complex>

// Exact statevector arithmetic for one and two qubits. All operations are
// pure functions on value types; no shared state.

namespace eaqc::qsim {

using cd = std::complex<double>;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kImagResidueTol = 1e-10;

// Coefficients of |0>, |1>.
struct State1Q {
    cd a0;
    cd a1;

    double norm_sq() const { return std::norm(a0) + std::norm(a1); }
};

// Basis order |q_sample q_label> with index = 2*s + l:
// [|00>, |01>, |10>, |11>]. All modules rely on this ordering.
struct State2Q {
    std::array<cd, 4> amps;

    double norm_sq() const;
};

// 2x2 complex matrix, row major.
using Gate1Q = std::array<cd, 4>;

// 4x4 complex matrix, row major.
using Op2Q = std::array<cd, 16>;

// Pauli matrices; sigma3|0> = +|0>, sigma3|1> = -|1>.
Gate1Q sigma1();
Gate1Q sigma2();
Gate1Q sigma3();
Gate1Q hadamard();

bool is_unitary(const Gate1Q& g, double tol = kHermitianTol);
bool is_hermitian(const Op2Q& op, double tol = kHermitianTol);

State1Q apply(const Gate1Q& g, const State1Q& s);

// e^{i sigma3 x} H |0>  =  (e^{ix}/sqrt2, e^{-ix}/sqrt2).
// Throws std::invalid_argument on non-finite input.
State1Q prepare_encoded_state(double x_tilde);

// e^{i sigma3 t3} e^{i sigma2 t2} e^{i sigma3 t1} s, applied right to left.
State1Q su2_rotate(const State1Q& s, double t1, double t2, double t3);

// Probability of the sigma3 = -1 outcome: |a1|^2.
double prob_minus(const State1Q& s);

// <s|op|s> for Hermitian op. Throws std::invalid_argument if op is not
// Hermitian; throws std::runtime_error if the imaginary residue exceeds
// kImagResidueTol. The residue is discarded.
double expectation(const Op2Q& op, const State2Q& s);

// sqrt2 (sigma1 x sigma1 + sigma2 x sigma2). Hermitian, eigenvalues in
// {-2 sqrt2, 0, 2 sqrt2}.
Op2Q bell_operator();

// Kronecker product, first factor on the sample qubit.
Op2Q kron(const Gate1Q& a, const Gate1Q& b);

}  // namespace eaqc::qsim
