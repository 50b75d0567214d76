#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchkit/config.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/groups.hpp"
#include "branchkit/laurent.hpp"

namespace branchkit {

// ---------------------------------------------------------------------------
// Torus embeddings
//
// matrix has one row per ambient torus coordinate and one column per subgroup
// coordinate: ambient coordinate i restricts to the subgroup monomial with
// exponent row i. Characters restrict by pushing exponent vectors through the
// transpose (see restrict_char).

struct TorusEmbedding {
    std::string name;
    GroupLabel ambient;
    GroupLabel sub;
    std::vector<std::vector<int>> matrix;  // (ambient rank) x (sub rank)

    void validate() const {
        if (static_cast<int>(matrix.size()) != rank(ambient))
            throw DomainError("embedding '" + name + "': row count != ambient rank");
        for (const auto& row : matrix)
            if (static_cast<int>(row.size()) != rank(sub))
                throw DomainError("embedding '" + name + "': column count != subgroup rank");
    }
};

namespace emb {

// U(p) x U(q) inside U(p+q), block diagonal.
inline TorusEmbedding u_block(int p, int q) {
    TorusEmbedding e{"U(p)xU(q) in U(p+q)", U(p + q), product({U(p), U(q)}), {}};
    const int n = p + q;
    e.matrix.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) e.matrix[i][i] = 1;
    return e;
}

// Sp(m) inside U(2m); ambient eigenvalues (z_1, z_1^-1, ..., z_m, z_m^-1).
inline TorusEmbedding sp_in_u(int m) {
    TorusEmbedding e{"Sp(m) in U(2m)", U(2 * m), Sp(m), {}};
    e.matrix.assign(2 * m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        e.matrix[2 * i][i] = 1;
        e.matrix[2 * i + 1][i] = -1;
    }
    return e;
}

// SO(n) inside U(n); ambient eigenvalues (x_1, x_1^-1, ..., x_r, x_r^-1[, 1]).
inline TorusEmbedding so_in_u(int n) {
    TorusEmbedding e{"SO(n) in U(n)", U(n), SO(n), {}};
    const int r = n / 2;
    e.matrix.assign(n, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        e.matrix[2 * i][i] = 1;
        e.matrix[2 * i + 1][i] = -1;
    }
    return e;
}

// U(n) inside SO(2n); the complex structure pairs the 2n real coordinates.
inline TorusEmbedding u_in_so(int n) {
    TorusEmbedding e{"U(n) in SO(2n)", SO(2 * n), U(n), {}};
    e.matrix.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) e.matrix[i][i] = 1;
    return e;
}

// SO(2) x SO(n-2) inside SO(n); shared torus, coordinate split (1 | rest).
inline TorusEmbedding so2_block(int n) {
    if (n < 4) throw DomainError("SO(2)xSO(n-2) in SO(n) needs n >= 4");
    TorusEmbedding e{"SO(2)xSO(n-2) in SO(n)", SO(n), product({SO(2), SO(n - 2)}), {}};
    const int r = n / 2;
    e.matrix.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) e.matrix[i][i] = 1;
    return e;
}

// Sp(1) x Sp(m-1) inside Sp(m); shared torus.
inline TorusEmbedding sp1_block(int m) {
    if (m < 2) throw DomainError("Sp(1)xSp(m-1) in Sp(m) needs m >= 2");
    TorusEmbedding e{"Sp(1)xSp(m-1) in Sp(m)", Sp(m), product({Sp(1), Sp(m - 1)}), {}};
    e.matrix.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) e.matrix[i][i] = 1;
    return e;
}

// U(1) inside SU(2) as the diagonal torus.
inline TorusEmbedding u1_in_su2() {
    return TorusEmbedding{"U(1) in SU(2)", SU2(), U(1), {{1}}};
}

// Arbitrary embedding from explicit data (used for compact inducing pictures).
inline TorusEmbedding custom(std::string name, GroupLabel ambient, GroupLabel sub,
                             std::vector<std::vector<int>> matrix) {
    TorusEmbedding e{std::move(name), std::move(ambient), std::move(sub), std::move(matrix)};
    e.validate();
    return e;
}

}  // namespace emb

// ---------------------------------------------------------------------------
// Weyl character formula: alternating numerator over denominator alternant,
// by exact multivariate division (remainder must vanish).

namespace detail {

inline LaurentChar alternant(const GroupLabel& factor, const Weight& shifted,
                             const Config& cfg) {
    LaurentChar p(static_cast<int>(shifted.size()));
    for (const auto& w : weyl_group(factor, cfg)) p.add_term(w.apply(shifted), Int(w.det));
    return p;
}

// Quotient of exactly divisible Laurent polynomials, lex leading-term division.
inline LaurentChar divide_exact(const LaurentChar& num, const LaurentChar& den) {
    if (den.zero()) throw DomainError("division by zero polynomial");
    LaurentChar q(num.nvars);
    LaurentChar rem = num;
    const auto& [dexp, dcoef] = *den.terms.rbegin();
    long steps = 0;
    Weight qe(num.nvars);
    while (!rem.zero()) {
        if (++steps > 10'000'000)
            throw ResourceLimitError("polynomial division exceeded step limit");
        const auto& [rexp, rcoef] = *rem.terms.rbegin();
        if (rcoef % dcoef != 0)
            throw DomainError("non-exact polynomial division (leading coefficient)");
        Int c = rcoef / dcoef;
        for (int i = 0; i < num.nvars; ++i) qe[i] = rexp[i] - dexp[i];
        q.add_term(qe, c);
        // rem -= c * x^qe * den
        Weight t(num.nvars);
        for (const auto& [e, k] : den.terms) {
            for (int i = 0; i < num.nvars; ++i) t[i] = qe[i] + e[i];
            rem.add_term(t, -c * k);
        }
    }
    return q;
}

inline LaurentChar irreducible_character_factor(const GroupFactor& f, const Weight& hw,
                                                const Config& cfg) {
    const GroupLabel g{f.family, f.n};
    const int r = rank(f);

    if (f.family == Family::OrthogonalO) {
        // O(n) modeled on SO(n): spherical-type labels restrict irreducibly for
        // n >= 3; for even n with nonzero last entry the O-object is the sum of
        // the two flip-related SO-characters; O(2) degenerates to the pair.
        GroupFactor so{Family::SpecialOrthogonalSO, f.n};
        if (f.n % 2 == 1) return irreducible_character_factor(so, hw, cfg);
        if (hw[r - 1] == 0) return irreducible_character_factor(so, hw, cfg);
        Weight flipped = hw;
        flipped[r - 1] = -flipped[r - 1];
        return irreducible_character_factor(so, hw, cfg) +
               irreducible_character_factor(so, flipped, cfg);
    }

    const bool doubled = (f.family == Family::SpecialOrthogonalSO && f.n % 2 == 1);
    Weight rho(r), shifted(r);
    switch (f.family) {
        case Family::UnitaryU:
            for (int i = 0; i < r; ++i) rho[i] = r - 1 - i;
            break;
        case Family::CompactSymplecticSp:
            for (int i = 0; i < r; ++i) rho[i] = r - i;
            break;
        case Family::SU2:
            rho[0] = 1;
            break;
        case Family::SpecialOrthogonalSO:
            if (doubled)
                for (int i = 0; i < r; ++i) rho[i] = 2 * (r - i) - 1;
            else
                for (int i = 0; i < r; ++i) rho[i] = r - 1 - i;
            break;
        default:
            throw DomainError("irreducible_character: unsupported family");
    }
    for (int i = 0; i < r; ++i) shifted[i] = (doubled ? 2 * hw[i] : hw[i]) + rho[i];

    LaurentChar num = alternant(g, shifted, cfg);
    LaurentChar den = alternant(g, rho, cfg);
    LaurentChar q = divide_exact(num, den);

    if (doubled) {
        LaurentChar h(r);
        Weight e(r);
        for (const auto& [ex, c] : q.terms) {
            for (int i = 0; i < r; ++i) {
                if (ex[i] % 2 != 0)
                    throw DomainError("odd exponent after B-type division");
                e[i] = ex[i] / 2;
            }
            h.add_term(e, c);
        }
        q = std::move(h);
    }
    return q;
}

}  // namespace detail

// Exact character of the irreducible representation with the given dominant
// highest weight; evaluating at the identity gives weyl_dim.
inline LaurentChar irreducible_character(const GroupLabel& g, const Weight& hw,
                                         const Config& cfg = default_config()) {
    if (!is_dominant(g, hw)) throw DomainError("irreducible_character: weight not dominant");
    if (degree(hw) > cfg.degree_budget) {
        std::string ws;
        for (std::size_t i = 0; i < hw.size(); ++i) ws += (i ? "," : "") + std::to_string(hw[i]);
        throw ResourceLimitError("degree budget " + std::to_string(cfg.degree_budget) +
                                 " exceeded by weight (" + ws + ")");
    }
    LaurentChar out;
    bool first = true;
    int off = 0;
    for (const auto& f : g.factors) {
        const int r = rank(f);
        Weight part(hw.begin() + off, hw.begin() + off + r);
        LaurentChar ch = detail::irreducible_character_factor(f, part, cfg);
        out = first ? std::move(ch) : tensor(out, ch);
        first = false;
        off += r;
    }
    return out;
}

// Restriction along a torus embedding: exponents are pushed through the
// transpose of the embedding matrix; colliding exponents sum.
inline LaurentChar restrict_char(const LaurentChar& ch, const TorusEmbedding& e) {
    e.validate();
    if (ch.nvars != rank(e.ambient))
        throw DomainError("restrict: character variable count != ambient rank of '" + e.name + "'");
    return push_exponents(ch, e.matrix, rank(e.sub));
}

// ---------------------------------------------------------------------------
// Decomposition into irreducibles: greedy highest-weight extraction.

struct IrrepDecomposition {
    GroupLabel group;
    std::map<Weight, Int> entries;  // dominant weight -> multiplicity >= 1

    Int multiplicity(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? Int(0) : it->second;
    }

    Int dimension() const {
        Int d = 0;
        for (const auto& [w, m] : entries) d += m * weyl_dim(group, w);
        return d;
    }

    bool operator==(const IrrepDecomposition&) const = default;
};

// Repeatedly extract the lex-maximal exponent (dominant for any genuine
// character) with its coefficient as multiplicity and subtract the matching
// irreducible character. Terminates with zero remainder; the result does not
// depend on term storage order. A negative or non-dominant leading term
// signals that the input was not a character.
inline IrrepDecomposition decompose(const LaurentChar& ch, const GroupLabel& g,
                                    const Config& cfg = default_config()) {
    if (ch.nvars != rank(g)) throw DomainError("decompose: rank mismatch");
    IrrepDecomposition out{g, {}};
    const Int total = ch.eval_ones();
    LaurentChar rem = ch;
    std::map<Weight, LaurentChar> cache;
    while (!rem.zero()) {
        const auto& [e, c] = *rem.terms.rbegin();
        if (!is_dominant(g, e))
            throw NotACharacterError("leading exponent not dominant: " +
                                     to_string(monomial(rem.nvars, e, c)));
        if (c < 0)
            throw NotACharacterError("negative coefficient on dominant leading term " +
                                     to_string(monomial(rem.nvars, e, c)));
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, irreducible_character(g, e, cfg)).first;
        Weight key = e;
        Int mult = c;
        rem = rem - mult * it->second;
        out.entries[key] += mult;
    }
    if (out.dimension() != total)
        throw NotACharacterError("decompose postcondition failed: dimension mismatch");
    return out;
}

// Multiplicity of tau in the restriction of the ambient irreducible sigma,
// which by Frobenius reciprocity is the multiplicity of sigma in the
// representation induced from tau.
inline Int frobenius_multiplicity(const GroupLabel& ambient, const Weight& sigma,
                                  const GroupLabel& sub, const TorusEmbedding& e,
                                  const Weight& tau, const Config& cfg = default_config()) {
    if (!is_dominant(ambient, sigma)) throw DomainError("frobenius: sigma not dominant");
    if (!is_dominant(sub, tau)) throw DomainError("frobenius: tau not dominant");
    LaurentChar ch = restrict_char(irreducible_character(ambient, sigma, cfg), e);
    return decompose(ch, sub, cfg).multiplicity(tau);
}

}  // namespace branchkit
