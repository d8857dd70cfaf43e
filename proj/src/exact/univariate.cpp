#include "fano/exact/univariate.hpp"

#include <stdexcept>

namespace fano {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p, int var) {
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        if (t.mono.degree() != t.mono[var]) throw std::invalid_argument("polynomial is not univariate in the requested variable");
        auto e = static_cast<std::size_t>(t.mono[var]);
        if (c.size() <= e) c.resize(e + 1);
        c[e] += t.coeff;
    }
    return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multi(int nvars, int var) const {
    std::vector<Term> terms;
    for (int i = 0; i <= degree(); ++i)
        if (sgn(c_[static_cast<std::size_t>(i)]) != 0) terms.push_back({Monomial::variable(nvars, var, i), c_[static_cast<std::size_t>(i)]});
    return MultiPoly::from_terms(nvars, std::move(terms));
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational lc = leading();
    for (auto& c : r.c_) c /= lc;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& q) const {
    std::vector<Rational> r(std::max(c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& q) const {
    std::vector<Rational> r(std::max(c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& q) const {
    if (is_zero() || q.is_zero()) return {};
    std::vector<Rational> r(c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += c_[i] * q.c_[j];
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& q) const {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Rational> rem = c_;
    const int dq = q.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(std::max(0, degree() - dq + 1)));
    for (int k = degree(); k >= dq; --k) {
        Rational f = rem[static_cast<std::size_t>(k)] / q.leading();
        if (sgn(f) == 0) continue;
        quo[static_cast<std::size_t>(k - dq)] = f;
        for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(k - dq + i)] -= f * q.c_[static_cast<std::size_t>(i)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UniPoly::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

bool UniPoly::is_squarefree() const {
    if (is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
    return gcd(*this, derivative()).degree() == 0;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) return *this;
    UniPoly g = gcd(*this, derivative());
    return divmod(g).first.monic();
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace fano
