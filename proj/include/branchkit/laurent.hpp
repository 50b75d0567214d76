#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/groups.hpp"
#include "branchkit/rational.hpp"

namespace branchkit {

// Sparse exact Laurent polynomial in nvars torus coordinates.
// Invariant: no zero coefficients stored. std::map keeps exponents in lex
// order, so rbegin() is the lex-leading term; all algorithms below rely on it.
struct LaurentChar {
    int nvars = 0;
    std::map<Weight, Int> terms;

    LaurentChar() = default;
    explicit LaurentChar(int nv) : nvars(nv) {}

    bool zero() const { return terms.empty(); }

    void add_term(const Weight& expo, const Int& coeff) {
        if (coeff == 0) return;
        if (static_cast<int>(expo.size()) != nvars) throw DomainError("term arity mismatch");
        auto it = terms.find(expo);
        if (it == terms.end()) {
            terms.emplace(expo, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    Int coeff(const Weight& expo) const {
        auto it = terms.find(expo);
        return it == terms.end() ? Int(0) : it->second;
    }

    // Value at the identity torus element: the dimension for genuine characters.
    Int eval_ones() const {
        Int s = 0;
        for (const auto& [e, c] : terms) s += c;
        return s;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, degree(e));
        return d;
    }

    bool operator==(const LaurentChar&) const = default;
};

inline LaurentChar monomial(int nvars, const Weight& expo, const Int& coeff = 1) {
    LaurentChar p(nvars);
    p.add_term(expo, coeff);
    return p;
}

inline LaurentChar one(int nvars) { return monomial(nvars, Weight(nvars, 0)); }

inline LaurentChar operator+(const LaurentChar& a, const LaurentChar& b) {
    if (a.nvars != b.nvars) throw DomainError("variable-count mismatch in +");
    LaurentChar r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline LaurentChar operator-(const LaurentChar& a, const LaurentChar& b) {
    if (a.nvars != b.nvars) throw DomainError("variable-count mismatch in -");
    LaurentChar r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
}

inline LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    if (a.nvars != b.nvars) throw DomainError("variable-count mismatch in *");
    LaurentChar r(a.nvars);
    Weight e(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

inline LaurentChar operator*(const Int& c, const LaurentChar& a) {
    LaurentChar r(a.nvars);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms.emplace(e, c * k);
    return r;
}

// Complete homogeneous symmetric polynomial h_d of the given eigenvalue
// monomials (each an exponent vector in nvars coordinates). h_0 = 1 and
// h_d = 0 for d < 0. This is the character of Sym^d of the representation
// whose torus eigenvalues are listed.
inline LaurentChar complete_homogeneous(int nvars, const std::vector<Weight>& eigenvalues,
                                        int d) {
    if (d < 0) return LaurentChar(nvars);
    std::vector<LaurentChar> by_deg(d + 1, LaurentChar(nvars));
    by_deg[0] = one(nvars);
    for (const auto& ev : eigenvalues) {
        if (static_cast<int>(ev.size()) != nvars) throw DomainError("eigenvalue arity mismatch");
        // multiply by 1/(1 - x^ev) truncated at degree d
        for (int k = 1; k <= d; ++k) {
            LaurentChar shifted(nvars);
            Weight e(nvars);
            for (const auto& [ex, c] : by_deg[k - 1].terms) {
                for (int i = 0; i < nvars; ++i) e[i] = ex[i] + ev[i];
                shifted.add_term(e, c);
            }
            by_deg[k] = by_deg[k] + shifted;
        }
    }
    return by_deg[d];
}

// Product on disjoint variable blocks: exponents concatenate.
inline LaurentChar tensor(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r(a.nvars + b.nvars);
    Weight e(r.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::copy(ea.begin(), ea.end(), e.begin());
            std::copy(eb.begin(), eb.end(), e.begin() + a.nvars);
            r.add_term(e, ca * cb);
        }
    return r;
}

// Push every exponent vector through the columns of an integer matrix
// (rows = source coordinates, cols = target coordinates); colliding images sum.
inline LaurentChar push_exponents(const LaurentChar& p,
                                  const std::vector<std::vector<int>>& matrix,
                                  int target_vars) {
    if (static_cast<int>(matrix.size()) != p.nvars)
        throw DomainError("exponent map: row count != variable count");
    LaurentChar r(target_vars);
    Weight img(target_vars);
    for (const auto& [e, c] : p.terms) {
        std::fill(img.begin(), img.end(), 0);
        for (int i = 0; i < p.nvars; ++i) {
            if (e[i] == 0) continue;
            const auto& row = matrix[i];
            for (int j = 0; j < target_vars; ++j) img[j] += e[i] * row[j];
        }
        r.add_term(img, c);
    }
    return r;
}

// True if p is invariant under the Weyl group of each factor acting on its
// coordinate slice.
inline bool weyl_symmetric(const LaurentChar& p, const GroupLabel& g) {
    if (p.nvars != rank(g)) throw DomainError("weyl_symmetric: rank mismatch");
    int off = 0;
    for (const auto& f : g.factors) {
        const int r = rank(f);
        for (const auto& w : weyl_group(GroupLabel{f.family, f.n})) {
            for (const auto& [e, c] : p.terms) {
                Weight slice(e.begin() + off, e.begin() + off + r);
                Weight moved = w.apply(slice);
                Weight full = e;
                std::copy(moved.begin(), moved.end(), full.begin() + off);
                if (p.coeff(full) != c) return false;
            }
        }
        off += r;
    }
    return true;
}

inline std::string to_string(const LaurentChar& p) {
    if (p.zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*x^(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        s += ")";
    }
    return s;
}

}  // namespace branchkit
