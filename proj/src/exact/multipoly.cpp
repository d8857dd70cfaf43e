#include "fano/exact/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fano {

namespace {

constexpr MonomialOrder kStorageOrder = MonomialOrder::DegRevLex;

bool greater(const Monomial& a, const Monomial& b) { return compare(a, b, kStorageOrder) > 0; }

// Merges two sorted term lists as a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && greater(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || greater(b[j].mono, a[i].mono)) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("polynomial ring must have 0.." + std::to_string(kMaxVars) + " variables");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    p.terms_.push_back({Monomial::variable(nvars, index), 1});
    return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
    MultiPoly p(m.nvars());
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars) throw std::invalid_argument("polynomial: term from a different ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return greater(a.mono, b.mono); });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return kZeroDegree;
    return terms_.front().mono.degree();  // storage order is degree-compatible
}

int MultiPoly::degree_in(int var) const {
    if (terms_.empty()) return kZeroDegree;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == degree(); });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return greater(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

const Term& MultiPoly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    if (order == kStorageOrder) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (compare(t.mono, best->mono, order) > 0) best = &t;
    return *best;
}

void MultiPoly::check_ring(const MultiPoly& q) const {
    if (nvars_ != q.nvars_) throw std::invalid_argument("polynomial ring mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    check_ring(q);
    terms_ = merge(terms_, q.terms_, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    check_ring(q);
    terms_ = merge(terms_, q.terms_, -1);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.check_ring(q);
    std::vector<Term> prod;
    prod.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return MultiPoly::from_terms(p.nvars_, std::move(prod));
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, t.coeff * e});
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: need one image per variable");
    const int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw std::invalid_argument("substitute: images live in different rings");
    // Cache powers of each image; degrees here stay small.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        int maxe = std::max(0, degree_in(static_cast<int>(i)));
        powers[i].push_back(constant(target, 1));
        for (int e = 1; e <= maxe; ++e) powers[i].push_back(powers[i].back() * images[i]);
    }
    MultiPoly result(target);
    for (const auto& t : terms_) {
        MultiPoly term = constant(target, t.coeff);
        for (int i = 0; i < nvars_; ++i)
            if (t.mono[i] > 0) term = term * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.mono[i])];
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::monic(MonomialOrder order) const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_term(order).coeff;
    return *this * inv;
}

MultiPoly MultiPoly::primitive(MonomialOrder order) const {
    if (is_zero()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(leading_term(order).coeff) < 0) scale = -scale;
    return *this * scale;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: wrong number of coordinates");
    std::complex<double> sum = 0;
    for (const auto& t : terms_) {
        std::complex<double> v = t.coeff.get_d();
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.mono[i]; ++e) v *= point[static_cast<std::size_t>(i)];
        sum += v;
    }
    return sum;
}

double MultiPoly::max_abs_coeff() const {
    double m = 0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff.get_d()));
    return m;
}

int VarNames::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

std::string to_string(const Monomial& m, const VarNames& names) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names.names[static_cast<std::size_t>(i)] : "v" + std::to_string(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& p, const VarNames& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        const bool neg = sgn(t.coeff) < 0;
        Rational mag = abs(t.coeff);
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + '*';
            out += to_string(t.mono, names);
        }
    }
    return out;
}

}  // namespace fano
