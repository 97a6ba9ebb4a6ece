#include "eaqc/qsim.hpp"

#include <cmath>
#include <stdexcept>

namespace eaqc::qsim {

namespace {
const cd I{0.0, 1.0};
const double SQRT1_2 = 1.0 / std::sqrt(2.0);
}  // namespace

double State2Q::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amps) n += std::norm(a);
    return n;
}

Gate1Q sigma1() { return {cd{0}, cd{1}, cd{1}, cd{0}}; }
Gate1Q sigma2() { return {cd{0}, -I, I, cd{0}}; }
Gate1Q sigma3() { return {cd{1}, cd{0}, cd{0}, cd{-1}}; }
Gate1Q hadamard() {
    return {cd{SQRT1_2}, cd{SQRT1_2}, cd{SQRT1_2}, cd{-SQRT1_2}};
}

bool is_unitary(const Gate1Q& g, double tol) {
    // U^dag U == I
    cd m00 = std::conj(g[0]) * g[0] + std::conj(g[2]) * g[2];
    cd m01 = std::conj(g[0]) * g[1] + std::conj(g[2]) * g[3];
    cd m10 = std::conj(g[1]) * g[0] + std::conj(g[3]) * g[2];
    cd m11 = std::conj(g[1]) * g[1] + std::conj(g[3]) * g[3];
    return std::abs(m00 - 1.0) < tol && std::abs(m01) < tol &&
           std::abs(m10) < tol && std::abs(m11 - 1.0) < tol;
}

bool is_hermitian(const Op2Q& op, double tol) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (std::abs(op[4 * r + c] - std::conj(op[4 * c + r])) > tol)
                return false;
    return true;
}

State1Q apply(const Gate1Q& g, const State1Q& s) {
    return {g[0] * s.a0 + g[1] * s.a1, g[2] * s.a0 + g[3] * s.a1};
}

State1Q prepare_encoded_state(double x_tilde) {
    if (!std::isfinite(x_tilde))
        throw std::invalid_argument("prepare_encoded_state: non-finite phase");
    return {std::exp(I * x_tilde) * SQRT1_2, std::exp(-I * x_tilde) * SQRT1_2};
}

namespace {
// e^{i sigma3 a} = diag(e^{ia}, e^{-ia})
State1Q rot_z(const State1Q& s, double a) {
    return {std::exp(I * a) * s.a0, std::exp(-I * a) * s.a1};
}
// e^{i sigma2 a} = [[cos a, sin a], [-sin a, cos a]]
State1Q rot_y(const State1Q& s, double a) {
    double c = std::cos(a), sn = std::sin(a);
    return {c * s.a0 + sn * s.a1, -sn * s.a0 + c * s.a1};
}
}  // namespace

State1Q su2_rotate(const State1Q& s, double t1, double t2, double t3) {
    if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(t3))
        throw std::invalid_argument("su2_rotate: non-finite angle");
    return rot_z(rot_y(rot_z(s, t1), t2), t3);
}

double prob_minus(const State1Q& s) { return std::norm(s.a1); }

double expectation(const Op2Q& op, const State2Q& s) {
    if (!is_hermitian(op))
        throw std::invalid_argument("expectation: operator is not Hermitian");
    cd acc{0.0, 0.0};
    for (int r = 0; r < 4; ++r) {
        cd row{0.0, 0.0};
        for (int c = 0; c < 4; ++c) row += op[4 * r + c] * s.amps[c];
        acc += std::conj(s.amps[r]) * row;
    }
    if (std::abs(acc.imag()) >= kImagResidueTol)
        throw std::runtime_error("expectation: imaginary residue too large");
    return acc.real();
}

Op2Q kron(const Gate1Q& a, const Gate1Q& b) {
    Op2Q out{};
    for (int ar = 0; ar < 2; ++ar)
        for (int ac = 0; ac < 2; ++ac)
            for (int br = 0; br < 2; ++br)
                for (int bc = 0; bc < 2; ++bc)
                    out[4 * (2 * ar + br) + (2 * ac + bc)] =
                        a[2 * ar + ac] * b[2 * br + bc];
    return out;
}

Op2Q bell_operator() {
    const double s2 = std::sqrt(2.0);
    Op2Q xx = kron(sigma1(), sigma1());
    Op2Q yy = kron(sigma2(), sigma2());
    Op2Q b{};
    for (int i = 0; i < 16; ++i) b[i] = s2 * (xx[i] + yy[i]);
    return b;
}

}  // namespace eaqc::qsim
