#include "monogen/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monogen {

double inf_norm(const AlgebraElement& a) {
    double nrm = 0.0;
    for (const cplx& c : a.coeffs) nrm = std::max(nrm, std::abs(c));
    return nrm;
}

static void require_same_dim(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("element dimension mismatch: " +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_dim(a, b);
    AlgebraElement out(a.dim());
    for (int i = 0; i < a.dim(); ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_dim(a, b);
    AlgebraElement out(a.dim());
    for (int i = 0; i < a.dim(); ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return out;
}

AlgebraElement scale(cplx lambda, const AlgebraElement& a) {
    AlgebraElement out(a.dim());
    for (int i = 0; i < a.dim(); ++i) out.coeffs[i] = lambda * a.coeffs[i];
    return out;
}

Algebra::Algebra(int m, int n, UpsilonMap upsilon, std::vector<int> u_map)
    : m_(m), n_(n), u_map_(std::move(u_map)) {
    if (m < 1 || n < m)
        throw std::invalid_argument("algebra dimensions require 1 <= m <= n");
    if (static_cast<int>(u_map_.size()) != n - m)
        throw std::invalid_argument("u_map must have one entry per nilpotent index");

    // Canonicalize keys to r <= s; a pair given in both orders must agree.
    for (const auto& [key, c] : upsilon) {
        auto [r, s, p] = key;
        auto canon = std::make_tuple(std::min(r, s), std::max(r, s), p);
        auto it = upsilon_.find(canon);
        if (it != upsilon_.end() && it->second != c)
            throw std::invalid_argument("conflicting symmetric upsilon entries at (" +
                                        std::to_string(r) + "," + std::to_string(s) + "," +
                                        std::to_string(p) + ")");
        upsilon_[canon] = c;
    }

    // Entries with out-of-range indices are kept for validation reporting but
    // excluded from arithmetic.
    for (const auto& [key, c] : upsilon_) {
        auto [r, s, p] = key;
        if (r >= m_ + 1 && s <= n_ && p > s && p <= n_)
            table_.push_back({r, s, p, c});
    }
    u_in_range_.resize(static_cast<std::size_t>(n_ - m_));
    for (int s = m_ + 1; s <= n_; ++s) {
        int u = u_map_[static_cast<std::size_t>(s - m_ - 1)];
        u_in_range_[static_cast<std::size_t>(s - m_ - 1)] = (u >= 1 && u <= m_);
    }
}

int Algebra::u_of(int s) const {
    if (s <= m_ || s > n_)
        throw std::invalid_argument("u_of expects a nilpotent index");
    return u_map_[static_cast<std::size_t>(s - m_ - 1)];
}

cplx Algebra::upsilon(int r, int s, int p) const {
    auto it = upsilon_.find(std::make_tuple(std::min(r, s), std::max(r, s), p));
    return it == upsilon_.end() ? cplx{} : it->second;
}

AlgebraElement Algebra::unit() const {
    AlgebraElement one(n_);
    for (int u = 1; u <= m_; ++u) one.coeff(u) = 1.0;
    return one;
}

AlgebraElement Algebra::basis(int r) const {
    if (r < 1 || r > n_) throw std::invalid_argument("basis index out of range");
    AlgebraElement e(n_);
    e.coeff(r) = 1.0;
    return e;
}

void Algebra::require_dim(const AlgebraElement& a) const {
    if (a.dim() != n_)
        throw std::invalid_argument("element dimension " + std::to_string(a.dim()) +
                                    " does not match algebra dimension " + std::to_string(n_));
}

AlgebraElement Algebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    require_dim(a);
    require_dim(b);
    AlgebraElement out(n_);
    for (int u = 1; u <= m_; ++u)
        out.coeff(u) = a.coeff(u) * b.coeff(u);
    for (int s = m_ + 1; s <= n_; ++s) {
        if (!u_in_range_[static_cast<std::size_t>(s - m_ - 1)]) continue;
        int u = u_map_[static_cast<std::size_t>(s - m_ - 1)];
        out.coeff(s) = a.coeff(u) * b.coeff(s) + a.coeff(s) * b.coeff(u);
    }
    for (const TableEntry& e : table_) {
        cplx cross = (e.r == e.s)
                         ? a.coeff(e.r) * b.coeff(e.r)
                         : a.coeff(e.r) * b.coeff(e.s) + a.coeff(e.s) * b.coeff(e.r);
        out.coeff(e.p) += e.c * cross;
    }
    return out;
}

cplx Algebra::f(int u, const AlgebraElement& a) const {
    require_dim(a);
    if (u < 1 || u > m_) throw std::invalid_argument("functional index outside 1..m");
    return a.coeff(u);
}

AlgebraElement Algebra::radical_project(const AlgebraElement& a) const {
    require_dim(a);
    AlgebraElement out = a;
    for (int u = 1; u <= m_; ++u) out.coeff(u) = 0.0;
    return out;
}

bool Algebra::is_invertible(const AlgebraElement& b, double tol) const {
    require_dim(b);
    for (int u = 1; u <= m_; ++u)
        if (std::abs(b.coeff(u)) <= tol) return false;
    return true;
}

static std::string triple_str(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

ValidationReport validate_algebra(const Algebra& alg, double tol) {
    ValidationReport rep;
    const int m = alg.m(), n = alg.n();
    rep.semi_simple = (m == n);

    for (const auto& [key, c] : alg.upsilon_entries()) {
        auto [r, s, p] = key;
        if (!(r >= m + 1 && s <= n && p > s && p <= n)) {
            rep.structural.push_back({Violation::Kind::UpsilonIndexRange, r, s, p,
                                      "upsilon entry " + triple_str(r, s, p) +
                                          " outside m+1 <= r <= s < p <= n"});
        }
    }
    for (int s = m + 1; s <= n; ++s) {
        int u = alg.u_of(s);
        if (u < 1 || u > m) {
            rep.structural.push_back({Violation::Kind::UMapRange, s, u, 0,
                                      "u_" + std::to_string(s) + " = " + std::to_string(u) +
                                          " outside 1..m"});
        }
    }

    if (n > m) {
        bool all_equal = true, all_distinct = true;
        for (int s = m + 1; s <= n; ++s) {
            for (int p = s + 1; p <= n; ++p) {
                if (alg.u_of(s) == alg.u_of(p)) all_distinct = false;
                else all_equal = false;
            }
        }
        rep.prop1_case = all_equal;
        rep.prop2_case = all_distinct;
    }

    if (!rep.structural.empty()) return rep;

    // (A1): nilpotent triples.
    for (int r = m + 1; r <= n; ++r)
        for (int s = m + 1; s <= n; ++s)
            for (int p = m + 1; p <= n; ++p) {
                AlgebraElement lhs = alg.mul(alg.mul(alg.basis(r), alg.basis(s)), alg.basis(p));
                AlgebraElement rhs = alg.mul(alg.basis(r), alg.mul(alg.basis(s), alg.basis(p)));
                if (inf_norm(sub(lhs, rhs)) > tol) {
                    rep.violations.push_back({Violation::Kind::AssocA1, r, s, p,
                                              "(I_r I_s) I_p != I_r (I_s I_p) at " +
                                                  triple_str(r, s, p)});
                }
            }

    // (A2): idempotent against nilpotent pairs.
    for (int u = 1; u <= m; ++u)
        for (int s = m + 1; s <= n; ++s)
            for (int p = m + 1; p <= n; ++p) {
                AlgebraElement lhs = alg.mul(alg.mul(alg.basis(u), alg.basis(s)), alg.basis(p));
                AlgebraElement rhs = alg.mul(alg.basis(u), alg.mul(alg.basis(s), alg.basis(p)));
                if (inf_norm(sub(lhs, rhs)) > tol) {
                    rep.violations.push_back({Violation::Kind::AssocA2, u, s, p,
                                              "(I_u I_s) I_p != I_u (I_s I_p) at " +
                                                  triple_str(u, s, p)});
                }
            }

    // With pairwise distinct u_s every nilpotent product must vanish.
    if (rep.prop2_case) {
        for (const auto& [key, c] : alg.upsilon_entries()) {
            auto [r, s, p] = key;
            if (std::abs(c) > tol) {
                rep.violations.push_back({Violation::Kind::Prop2NonzeroUpsilon, r, s, p,
                                          "distinct u_s force a trivial nilpotent product, yet "
                                          "upsilon" + triple_str(r, s, p) + " is nonzero"});
            }
        }
    }

    return rep;
}

} // namespace monogen
