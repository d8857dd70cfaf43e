#include "fano/line3.hpp"

#include "fano/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fano {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

std::size_t largest_index(const Plucker& p) {
    double best = 0;
    for (const auto& v : p) best = std::max(best, std::abs(v));
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) >= best * (1 - 1e-9)) return i;
    return 0;
}

}  // namespace

Plucker plucker_of(const Mat42c& b) {
    Plucker p;
    for (int k = 0; k < 6; ++k) {
        int i = kPairs[k][0], j = kPairs[k][1];
        p[static_cast<std::size_t>(k)] = b(i, 0) * b(j, 1) - b(j, 0) * b(i, 1);
    }
    return p;
}

Line3 Line3::from_basis(const Mat42c& basis) {
    Plucker p = plucker_of(basis);
    double scale = std::max(basis.col(0).norm(), 1e-300) * std::max(basis.col(1).norm(), 1e-300);
    std::size_t k = largest_index(p);
    if (std::abs(p[k]) <= 1e-12 * scale) throw InputError("line basis has rank < 2");

    Line3 line;
    const int i = kPairs[k][0], j = kPairs[k][1];
    Eigen::Matrix2cd pivot;
    pivot << basis(i, 0), basis(i, 1), basis(j, 0), basis(j, 1);
    line.basis_ = basis * pivot.inverse();
    line.basis_(i, 0) = 1;
    line.basis_(i, 1) = 0;
    line.basis_(j, 0) = 0;
    line.basis_(j, 1) = 1;
    Complex lead = p[k];
    for (auto& v : p) v /= lead;
    p[k] = 1;
    line.plucker_ = p;
    return line;
}

double Line3::plucker_residual() const {
    const auto& p = plucker_;
    return std::abs(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]);
}

bool Line3::is_real(double tol) const {
    return std::all_of(plucker_.begin(), plucker_.end(), [&](Complex v) { return std::abs(v.imag()) <= tol; });
}

Complex plucker_pairing(const Plucker& p, const Plucker& q) {
    return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[5] * q[0] - p[4] * q[1] + p[3] * q[2];
}

double line_distance(const Line3& a, const Line3& b) {
    Complex inner = 0;
    double na = 0, nb = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        inner += std::conj(a.plucker()[i]) * b.plucker()[i];
        na += std::norm(a.plucker()[i]);
        nb += std::norm(b.plucker()[i]);
    }
    double c2 = std::norm(inner) / (na * nb);
    return std::sqrt(std::max(0.0, 1 - c2));
}

bool plucker_less(const Line3& a, const Line3& b) {
    // Coarse rounding keeps the order stable under last-digit noise.
    auto key = [](Complex v) { return std::pair{std::round(v.real() * 1e9), std::round(v.imag() * 1e9)}; };
    for (std::size_t i = 0; i < 6; ++i) {
        auto ka = key(a.plucker()[i]), kb = key(b.plucker()[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

}  // namespace fano
