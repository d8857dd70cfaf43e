#include "fano/exact/monomial.hpp"

namespace fano {

std::string to_string(MonomialOrder order) {
    switch (order) {
        case MonomialOrder::DegRevLex: return "degrevlex";
        case MonomialOrder::DegLex: return "deglex";
        case MonomialOrder::Lex: return "lex";
    }
    return "?";
}

Monomial::Monomial(std::initializer_list<int> exps) : n_(check_nvars(static_cast<int>(exps.size()))) {
    int i = 0;
    for (int e : exps) set(i++, e);
}

Monomial Monomial::variable(int nvars, int index, int power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(int i, int e) {
    if (i < 0 || i >= n_) throw std::out_of_range("monomial: variable index out of range");
    if (e < 0 || e > 0xFFFF) throw std::overflow_error("monomial: exponent out of range");
    deg_ = deg_ - exp_[static_cast<std::size_t>(i)] + static_cast<std::uint32_t>(e);
    exp_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
}

void Monomial::recompute_degree() {
    deg_ = 0;
    for (int i = 0; i < n_; ++i) deg_ += exp_[static_cast<std::size_t>(i)];
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < n_; ++i)
        if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (int i = 0; i < n_; ++i)
        if (exp_[static_cast<std::size_t>(i)] != 0 && other.exp_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

int Monomial::pure_power_variable() const {
    int found = -1;
    for (int i = 0; i < n_; ++i) {
        if (exp_[static_cast<std::size_t>(i)] == 0) continue;
        if (found >= 0) return -1;
        found = i;
    }
    return found;
}

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < n_; ++i)
        if (exp_[static_cast<std::size_t>(i)] != 0) s |= 1u << i;
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) {
        auto k = static_cast<std::size_t>(i);
        unsigned e = unsigned(exp_[k]) + other.exp_[k];
        if (e > 0xFFFF) throw std::overflow_error("monomial: exponent overflow");
        r.exp_[k] = static_cast<Exponent>(e);
    }
    r.deg_ = deg_ + other.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) {
        auto k = static_cast<std::size_t>(i);
        r.exp_[k] = static_cast<Exponent>(exp_[k] - divisor.exp_[k]);
    }
    r.deg_ = deg_ - divisor.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (other.exp_[k] > r.exp_[k]) r.exp_[k] = other.exp_[k];
    }
    r.recompute_degree();
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 1000003u ^ exp_[static_cast<std::size_t>(i)];
    return h;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    const int n = a.nvars();
    switch (order) {
        case MonomialOrder::DegRevLex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            for (int i = n - 1; i >= 0; --i)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        case MonomialOrder::DegLex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            [[fallthrough]];
        case MonomialOrder::Lex:
            for (int i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
    }
    return 0;
}

}  // namespace fano
