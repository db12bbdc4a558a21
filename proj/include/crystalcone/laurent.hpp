#pragma once

#include "crystalcone/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cc {

using Exp = std::vector<int>;

// Sparse Laurent polynomial over Q in a fixed number of variables.
// Terms are kept in lexicographic exponent order; zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Q& c);
    static LaurentPoly var(int nvars, int i);
    static LaurentPoly monomial(int nvars, const Exp& e, const Q& c = 1);

    int nvars() const { return nvars_; }
    const std::map<Exp, Q>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool is_one() const;
    bool all_coefficients_positive() const;
    // leading term in lex order
    const std::pair<const Exp, Q>& lead() const;
    const Exp& monomial_exponent() const;  // requires is_monomial()
    const Q& monomial_coefficient() const;

    void add_term(const Exp& e, const Q& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Q& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Q& s) { return a *= s; }
    friend LaurentPoly operator*(const Q& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Negative powers only for monomials.
    LaurentPoly pow(int k) const;
    LaurentPoly monomial_inverse() const;

    // Exact division; nullopt when d does not divide *this in the Laurent ring.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    // Replace variable i by images[i]; negative exponents need monomial images.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;
    // Monomial change of variables: x_i -> prod_j y_j^{m[i][j]}.
    LaurentPoly monomial_substitute(const std::vector<Exp>& rows, int new_nvars) const;
    // Extend/permute arity: variable i goes to slot map[i] of a new_nvars-ary ring.
    LaurentPoly embed(const std::vector<int>& map, int new_nvars) const;

    LaurentPoly derivative(int i) const;
    int min_exponent(int i) const;
    int max_exponent(int i) const;

    Q evaluate(const QVec& x) const;
    double evaluate(const std::vector<double>& x) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& x) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Exp, Q> terms_;
};

// Pair (num, den) with eager normalization when den is a monomial or divides num.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(LaurentPoly num);
    RatFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    const LaurentPoly& laurent() const;  // throws unless is_laurent()

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool equals(const RatFunc& o) const;  // cross-multiplied

    template <class T>
    T evaluate(const std::vector<T>& x) const {
        return num_.evaluate(x) / den_.evaluate(x);
    }

private:
    void normalize();
    LaurentPoly num_, den_;
};

RatFunc substitute(const LaurentPoly& p, const std::vector<RatFunc>& images);

}  // namespace cc
