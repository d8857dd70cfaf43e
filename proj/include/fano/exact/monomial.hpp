#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace fano {

inline constexpr int kMaxVars = 8;

enum class MonomialOrder { DegRevLex, DegLex, Lex };

std::string to_string(MonomialOrder order);

/// Exponent vector with one slot per ring variable. Rings hold at most kMaxVars variables.
class Monomial {
  public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(int nvars) : n_(check_nvars(nvars)) {}
    Monomial(std::initializer_list<int> exps);

    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const { return n_; }
    int degree() const { return static_cast<int>(deg_); }
    int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
    void set(int i, int e);

    bool is_one() const { return deg_ == 0; }
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    /// Index of the variable if this is a pure power x_i^k with k > 0, else -1.
    int pure_power_variable() const;
    /// Bit signature: bit i set iff exponent i > 0. Used as a cheap divisibility prefilter.
    std::uint32_t support() const;

    Monomial operator*(const Monomial& other) const;
    /// Requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.exp_ == b.exp_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::size_t hash() const;

  private:
    static std::uint8_t check_nvars(int nvars) {
        if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("monomial: ring has too many variables");
        return static_cast<std::uint8_t>(nvars);
    }
    void recompute_degree();

    std::array<Exponent, kMaxVars> exp_{};
    std::uint8_t n_ = 0;
    std::uint32_t deg_ = 0;
};

/// Three-way comparison in the given order: >0 if a is larger.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Strict-weak "greater" functor, so that sorted containers list leading terms first.
struct MonomialGreater {
    MonomialOrder order = MonomialOrder::DegRevLex;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace fano
