#pragma once

#include "crystalcone/rational.hpp"

#include <optional>
#include <vector>

namespace cc {

// Dense row-major matrix over Q; dimensions here never exceed a few dozen.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Q> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static QMat identity(int n);
    static QMat from_ints(const std::vector<std::vector<long>>& m);
    static QMat diag(const QVec& d);

    Q& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Q& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    QVec row(int i) const;
    QVec col(int j) const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat operator*(const QMat& x, const QMat& y);
QMat operator+(const QMat& x, const QMat& y);
QMat operator-(const QMat& x, const QMat& y);
QMat operator*(const Q& s, const QMat& x);
QVec operator*(const QMat& x, const QVec& v);
QMat transpose(const QMat& x);
QMat commutator(const QMat& x, const QMat& y);

Q det(QMat m);
int rank(QMat m);
std::optional<QMat> inverse(const QMat& m);
QMat inverse_or_throw(const QMat& m, const char* what);
// Some solution of m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);
// Basis of {x : m x = 0}.
std::vector<QVec> kernel(const QMat& m);

bool is_integral(const QMat& m);
bool is_zero(const QMat& m);
// Nonzero invariant factors of an integral matrix.
std::vector<Z> smith_invariants(const QMat& m);

Q dot(const QVec& x, const QVec& y);
QVec add(const QVec& x, const QVec& y);
QVec sub(const QVec& x, const QVec& y);
QVec scale(const Q& s, const QVec& x);

std::string to_string(const QMat& m);

}  // namespace cc
