#pragma once
// Finite-dimensional commutative associative algebras over C with a split
// basis: idempotents I_1..I_m followed by nilpotents I_{m+1}..I_n.
//
// Basis indices in the public API are 1-based; coefficient vectors are
// plain 0-based arrays of length n.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace monogen {

using cplx = std::complex<double>;

// Absolute tolerance for "is this coefficient zero" decisions.
inline constexpr double kZeroTol = 1e-12;

// Coefficient vector over the basis {I_r}.
struct AlgebraElement {
    std::vector<cplx> coeffs;

    AlgebraElement() = default;
    explicit AlgebraElement(int n) : coeffs(static_cast<std::size_t>(n)) {}
    explicit AlgebraElement(std::vector<cplx> c) : coeffs(std::move(c)) {}

    int dim() const { return static_cast<int>(coeffs.size()); }
    // 1-based coefficient access.
    cplx coeff(int r) const { return coeffs.at(static_cast<std::size_t>(r - 1)); }
    cplx& coeff(int r) { return coeffs.at(static_cast<std::size_t>(r - 1)); }
};

double inf_norm(const AlgebraElement& a);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(cplx lambda, const AlgebraElement& a);

// Structure constants of the nilpotent part, keyed (r, s, p) with r <= s:
// the value is the coefficient of I_p in the product I_r * I_s.
// A well-formed entry has m+1 <= r <= s < p <= n.
using UpsilonMap = std::map<std::tuple<int, int, int>, cplx>;

struct Violation {
    enum class Kind {
        UpsilonIndexRange,   // entry indices outside m+1 <= r <= s < p <= n
        UMapRange,           // u_s outside 1..m
        AssocA1,             // (I_r I_s) I_p != I_r (I_s I_p), nilpotent triple
        AssocA2,             // (I_u I_s) I_p != I_u (I_s I_p), u idempotent
        Prop2NonzeroUpsilon, // all u_s distinct but a nilpotent product is nonzero
    };
    Kind kind;
    int i = 0, j = 0, k = 0; // offending indices, 1-based
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> structural; // malformed spec data
    std::vector<Violation> violations; // mathematical failures
    bool semi_simple = false;
    bool prop1_case = false; // all u_s equal (nontrivial only when n > m)
    bool prop2_case = false; // all u_s pairwise distinct

    bool valid() const { return structural.empty() && violations.empty(); }
};

class Algebra {
public:
    // u_map holds u_s for s = m+1..n in order. Upsilon keys are canonicalized
    // to r <= s; entries given both ways must agree or the constructor throws.
    Algebra(int m, int n, UpsilonMap upsilon, std::vector<int> u_map);

    int m() const { return m_; }
    int n() const { return n_; }
    bool semi_simple() const { return m_ == n_; }

    // Idempotent index attached to nilpotent s: I_{u_s} I_s = I_s.
    int u_of(int s) const;

    // Coefficient of I_p in I_r * I_s for nilpotent r, s (either order).
    cplx upsilon(int r, int s, int p) const;
    const UpsilonMap& upsilon_entries() const { return upsilon_; }

    AlgebraElement zero() const { return AlgebraElement(n_); }
    AlgebraElement unit() const;
    AlgebraElement basis(int r) const;

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;

    // The multiplicative functional reading the I_u coefficient.
    cplx f(int u, const AlgebraElement& a) const;

    // Zeroes the idempotent coefficients, keeping the radical part.
    AlgebraElement radical_project(const AlgebraElement& a) const;

    // True iff every f_u(b) is nonzero within tol.
    bool is_invertible(const AlgebraElement& b, double tol = kZeroTol) const;

private:
    friend ValidationReport validate_algebra(const Algebra&, double);

    struct TableEntry {
        int r, s, p; // r <= s < p, all in range
        cplx c;
    };

    void require_dim(const AlgebraElement& a) const;

    int m_ = 0;
    int n_ = 0;
    UpsilonMap upsilon_;          // all stored entries, canonical keys
    std::vector<int> u_map_;      // u_of(s) raw values, s = m+1..n
    std::vector<TableEntry> table_;   // in-range entries only, used by mul
    std::vector<bool> u_in_range_;    // per nilpotent s
};

// Brute-force check of both associativity conditions plus the structural
// index ranges; tol bounds the norm of the difference of triple products.
ValidationReport validate_algebra(const Algebra& alg, double tol = kZeroTol);

} // namespace monogen
