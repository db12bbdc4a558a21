#include "crystalcone/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cc {

namespace {

template <class T>
T ipow(T base, int k) {
    T r(1);
    bool neg = k < 0;
    unsigned e = neg ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return neg ? T(1) / r : r;
}

Exp add_exp(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp sub_exp(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Q& c) {
    LaurentPoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::var(int nvars, int i) {
    Exp e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, e);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exp& e, const Q& c) {
    if (static_cast<int>(e.size()) != nvars) fail(ErrorKind::Internal, "exponent arity mismatch");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

bool LaurentPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

bool LaurentPoly::all_coefficients_positive() const {
    for (const auto& [e, c] : terms_)
        if (sgn(c) <= 0) return false;
    return true;
}

const std::pair<const Exp, Q>& LaurentPoly::lead() const {
    if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero polynomial");
    return *terms_.rbegin();
}

const Exp& LaurentPoly::monomial_exponent() const {
    if (!is_monomial()) fail(ErrorKind::ChartUnsupported, "expected a Laurent monomial, got " + to_string());
    return terms_.begin()->first;
}

const Q& LaurentPoly::monomial_coefficient() const {
    if (!is_monomial()) fail(ErrorKind::ChartUnsupported, "expected a Laurent monomial, got " + to_string());
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exp& e, const Q& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::Internal, "arity mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::Internal, "arity mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Q& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::Internal, "arity mismatch in *");
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    const Exp& e = monomial_exponent();
    Exp ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return monomial(nvars_, ne, Q(1) / monomial_coefficient());
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) return monomial_inverse().pow(-k);
    LaurentPoly r = constant(nvars_, 1), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::Internal, "division by zero polynomial");
    if (is_zero()) return LaurentPoly(nvars_);
    if (d.is_monomial()) return *this * d.monomial_inverse();
    // A quotient's exponents are confined to the box [min P - min D, max P - max D]
    // coordinate-wise; leaving it proves non-divisibility and bounds the loop.
    Exp lo(nvars_), hi(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        lo[i] = min_exponent(i) - d.min_exponent(i);
        hi[i] = max_exponent(i) - d.max_exponent(i);
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& [dlead_e, dlead_c] = d.lead();
    LaurentPoly rem = *this, quo(nvars_);
    while (!rem.is_zero()) {
        const auto& [le, lc] = rem.lead();
        Exp qe = sub_exp(le, dlead_e);
        for (int i = 0; i < nvars_; ++i)
            if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
        Q qc = lc / dlead_c;
        LaurentPoly t = monomial(nvars_, qe, qc);
        quo += t;
        rem -= t * d;
    }
    return quo;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) fail(ErrorKind::Internal, "substitution arity mismatch");
    int nn = images.empty() ? 0 : images[0].nvars();
    LaurentPoly r(nn);
    // cache powers per variable
    std::vector<std::map<int, LaurentPoly>> cache(nvars_);
    auto power = [&](int i, int k) -> const LaurentPoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        return cache[i].emplace(k, images[i].pow(k)).first->second;
    };
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = constant(nn, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

LaurentPoly LaurentPoly::monomial_substitute(const std::vector<Exp>& rows, int new_nvars) const {
    LaurentPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exp ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0)
                for (int j = 0; j < new_nvars; ++j) ne[j] += e[i] * rows[i][j];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::embed(const std::vector<int>& map, int new_nvars) const {
    LaurentPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exp ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) ne[map[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(int i) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * e[i]);
    }
    return r;
}

int LaurentPoly::min_exponent(int i) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] < m) m = e[i];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exponent(int i) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] > m) m = e[i];
        first = false;
    }
    return m;
}

Q LaurentPoly::evaluate(const QVec& x) const {
    Q s = 0;
    for (const auto& [e, c] : terms_) {
        Q t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= ipow<Q>(x[i], e[i]);
        s += t;
    }
    return s;
}

double LaurentPoly::evaluate(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= ipow<double>(x[i], e[i]);
        s += t;
    }
    return s;
}

std::complex<double> LaurentPoly::evaluate(const std::vector<std::complex<double>>& x) const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.get_d();
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) t *= ipow<std::complex<double>>(x[i], e[i]);
        s += t;
    }
    return s;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = true;
        for (int x : e)
            if (x) unit = false;
        Q a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        bool wrote = false;
        if (a != 1 || unit) {
            os << a.get_str();
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (wrote) os << '*';
            os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (e[i] != 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::NotDecomposable, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_one()) return;
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.nvars(), 1);
        return;
    }
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(num_.nvars(), 1);
        return;
    }
    // Make the denominator's lead coefficient 1 for a stable representation.
    Q lc = den_.lead().second;
    if (lc != 1) {
        Q inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

const LaurentPoly& RatFunc::laurent() const {
    if (!is_laurent())
        fail(ErrorKind::NotDecomposable, "expected a Laurent polynomial, denominator " + den_.to_string());
    return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorKind::NotDecomposable, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool RatFunc::equals(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFunc substitute(const LaurentPoly& p, const std::vector<RatFunc>& images) {
    int nn = images.empty() ? 0 : images[0].nvars();
    // Common denominator approach: each variable's image is n_i/d_i.
    // Collect terms over prod d_i^{max positive power} * n_i^{max negative power}.
    int nv = p.nvars();
    std::vector<int> maxpos(nv, 0), maxneg(nv, 0);
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < nv; ++i) {
            maxpos[i] = std::max(maxpos[i], e[i]);
            maxneg[i] = std::max(maxneg[i], -e[i]);
        }
    LaurentPoly num(nn);
    LaurentPoly den = LaurentPoly::constant(nn, 1);
    for (int i = 0; i < nv; ++i) {
        if (maxpos[i]) den = den * images[i].den().pow(maxpos[i]);
        if (maxneg[i]) den = den * images[i].num().pow(maxneg[i]);
    }
    std::vector<std::map<int, LaurentPoly>> cache_n(nv), cache_d(nv);
    auto pw = [](std::map<int, LaurentPoly>& cache, const LaurentPoly& base, int k) -> const LaurentPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        return cache.emplace(k, base.pow(k)).first->second;
    };
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly t = LaurentPoly::constant(nn, c);
        for (int i = 0; i < nv; ++i) {
            // n^{e} d^{-e} times d^{maxpos} n^{maxneg} = n^{e+maxneg} d^{maxpos-e}
            int pn = e[i] + maxneg[i], pd = maxpos[i] - e[i];
            if (pn) t = t * pw(cache_n[i], images[i].num(), pn);
            if (pd) t = t * pw(cache_d[i], images[i].den(), pd);
        }
        num += t;
    }
    return RatFunc(num, den);
}

}  // namespace cc
