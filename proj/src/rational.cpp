#include "crystalcone/rational.hpp"

#include <sstream>

namespace cc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::NotDecomposable: return "NotDecomposable";
        case ErrorKind::PositivityViolation: return "PositivityViolation";
        case ErrorKind::NotMutable: return "NotMutable";
        case ErrorKind::ChartUnsupported: return "ChartUnsupported";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::NotDominant: return "NotDominant";
        case ErrorKind::ScaleError: return "ScaleError";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Q qfrac(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

Q parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: exact conversion, never through double
        std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !intpart.empty() && intpart[0] == '-';
        if (neg || (!intpart.empty() && intpart[0] == '+')) intpart = intpart.substr(1);
        if (intpart.empty()) intpart = "0";
        for (char c : intpart + frac)
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + s);
        Z den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Z num(intpart + frac, 10);
        Q q(num, den);
        q.canonicalize();
        return neg ? Q(-q) : q;
    }
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

Z floor_q(const Q& q) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& q) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const Z& z) {
    if (!z.fits_slong_p()) fail(ErrorKind::Internal, "integer overflow: " + z.get_str());
    return z.get_si();
}

double to_double(const Q& q) { return q.get_d(); }

QVec to_qvec(const IVec& v) {
    QVec out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

Z gcd_vec(const std::vector<Z>& v) {
    Z g = 0;
    for (const auto& x : v) {
        Z ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

Z lcm_denominators(const QVec& v) {
    Z l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace cc
