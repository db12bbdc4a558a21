#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cc {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using IVec = std::vector<int>;

enum class ErrorKind {
    UnsupportedType,
    BadIndex,
    NotReduced,
    NotDecomposable,
    PositivityViolation,
    NotMutable,
    ChartUnsupported,
    Unbounded,
    NotDominant,
    ScaleError,
    Inconclusive,
    Internal,
};

const char* error_kind_name(ErrorKind k);

// Every domain failure in the library goes through this type; the CLI maps
// it to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline Q qint(long v) { return Q(v); }
Q qfrac(long num, long den);
Q parse_rational(const std::string& s);  // "3", "-2/5", "0.75"

std::string to_string(const Q& q);
std::string to_string(const QVec& v);
std::string to_string(const IVec& v);

bool is_integer(const Q& q);
Z floor_q(const Q& q);
Z ceil_q(const Q& q);
long to_long(const Z& z);
double to_double(const Q& q);

QVec to_qvec(const IVec& v);
Z gcd_vec(const std::vector<Z>& v);
Z lcm_denominators(const QVec& v);

}  // namespace cc
