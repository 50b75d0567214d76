#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "branchkit/config.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/rational.hpp"

namespace branchkit {

// Integer weight / torus exponent vector, length = Lie rank.
using Weight = std::vector<int>;

inline int degree(const Weight& w) {
    int d = 0;
    for (int x : w) d += std::abs(x);
    return d;
}

enum class Family : std::uint8_t {
    UnitaryU,             // U(n), rank n
    SpecialOrthogonalSO,  // SO(n), rank floor(n/2)
    OrthogonalO,          // O(n), modeled on SO(n) data plus a parity fold
    CompactSymplecticSp,  // Sp(m), rank m
    SU2,                  // SU(2), rank 1
};

struct GroupFactor {
    Family family;
    int n;  // the n of U(n)/SO(n)/O(n), the m of Sp(m); ignored for SU2

    bool operator==(const GroupFactor&) const = default;
};

// A compact group label: a single classical factor or a flat ordered product.
struct GroupLabel {
    std::vector<GroupFactor> factors;

    GroupLabel() = default;
    GroupLabel(Family f, int n) : factors{{f, n}} {}

    bool single() const { return factors.size() == 1; }
    bool operator==(const GroupLabel&) const = default;
};

inline GroupLabel U(int n) { return GroupLabel(Family::UnitaryU, n); }
inline GroupLabel SO(int n) { return GroupLabel(Family::SpecialOrthogonalSO, n); }
inline GroupLabel O(int n) { return GroupLabel(Family::OrthogonalO, n); }
inline GroupLabel Sp(int m) { return GroupLabel(Family::CompactSymplecticSp, m); }
inline GroupLabel SU2() { return GroupLabel(Family::SU2, 1); }

// Ordered product; flat and without degenerate factors by construction.
inline GroupLabel product(const std::vector<GroupLabel>& parts) {
    GroupLabel g;
    for (const auto& p : parts)
        g.factors.insert(g.factors.end(), p.factors.begin(), p.factors.end());
    if (g.factors.empty()) throw DomainError("empty product group label");
    return g;
}

inline void validate(const GroupFactor& f) {
    switch (f.family) {
        case Family::UnitaryU:
            if (f.n < 1) throw DomainError("U(n) requires n >= 1");
            break;
        case Family::SpecialOrthogonalSO:
        case Family::OrthogonalO:
            if (f.n < 2) throw DomainError("SO(n)/O(n) requires n >= 2");
            break;
        case Family::CompactSymplecticSp:
            if (f.n < 1) throw DomainError("Sp(m) requires m >= 1");
            break;
        case Family::SU2:
            break;
    }
}

inline int rank(const GroupFactor& f) {
    switch (f.family) {
        case Family::UnitaryU: return f.n;
        case Family::SpecialOrthogonalSO:
        case Family::OrthogonalO: return f.n / 2;
        case Family::CompactSymplecticSp: return f.n;
        case Family::SU2: return 1;
    }
    return 0;
}

inline int rank(const GroupLabel& g) {
    int r = 0;
    for (const auto& f : g.factors) r += rank(f);
    return r;
}

inline std::string to_string(const GroupFactor& f) {
    switch (f.family) {
        case Family::UnitaryU: return "U(" + std::to_string(f.n) + ")";
        case Family::SpecialOrthogonalSO: return "SO(" + std::to_string(f.n) + ")";
        case Family::OrthogonalO: return "O(" + std::to_string(f.n) + ")";
        case Family::CompactSymplecticSp: return "Sp(" + std::to_string(f.n) + ")";
        case Family::SU2: return "SU(2)";
    }
    return "?";
}

inline std::string to_string(const GroupLabel& g) {
    std::string s;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += "x";
        s += to_string(g.factors[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Dominance

inline bool is_dominant(const GroupFactor& f, const Weight& w) {
    validate(f);
    const int r = rank(f);
    if (static_cast<int>(w.size()) != r) throw DomainError("weight rank mismatch for " + to_string(f));
    switch (f.family) {
        case Family::UnitaryU:
            for (int i = 0; i + 1 < r; ++i)
                if (w[i] < w[i + 1]) return false;
            return true;
        case Family::CompactSymplecticSp:
            for (int i = 0; i + 1 < r; ++i)
                if (w[i] < w[i + 1]) return false;
            return r == 0 || w[r - 1] >= 0;
        case Family::SpecialOrthogonalSO:
            if (f.n % 2 == 1) {
                for (int i = 0; i + 1 < r; ++i)
                    if (w[i] < w[i + 1]) return false;
                return r == 0 || w[r - 1] >= 0;
            }
            // SO(2r): weakly decreasing, last entry may be negative.
            for (int i = 0; i + 1 < r; ++i)
                if (w[i] < w[i + 1]) return false;
            return r <= 1 || w[r - 2] >= std::abs(w[r - 1]);
        case Family::OrthogonalO:
            // O(n) labels are flip-folded: treat as SO with last entry >= 0
            // (for O(2), rank 1, any j >= 0; j and -j name the same object).
            for (int i = 0; i + 1 < r; ++i)
                if (w[i] < w[i + 1]) return false;
            return r == 0 || w[r - 1] >= 0;
        case Family::SU2:
            return w[0] >= 0;
    }
    return false;
}

inline bool is_dominant(const GroupLabel& g, const Weight& w) {
    if (static_cast<int>(w.size()) != rank(g)) return false;
    int off = 0;
    for (const auto& f : g.factors) {
        const int r = rank(f);
        Weight part(w.begin() + off, w.begin() + off + r);
        if (!is_dominant(f, part)) return false;
        off += r;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Weyl group as signed permutations

struct WeylElement {
    std::vector<int> perm;          // output i takes source coordinate perm[i]
    std::vector<std::int8_t> sign;  // sign applied to source coordinate
    int det = 1;

    Weight apply(const Weight& v) const {
        Weight out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = sign[perm[i]] * v[perm[i]];
        return out;
    }
};

inline int permutation_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// All Weyl group elements of a single classical factor.
//   U(n): S_n.  Sp(m), SO(2r+1), O(n): all signed permutations.
//   SO(2r): signed permutations with an even number of sign changes.
inline std::vector<WeylElement> weyl_group(const GroupLabel& g,
                                           const Config& cfg = default_config()) {
    if (!g.single()) throw DomainError("weyl_group expects a single classical factor");
    const GroupFactor f = g.factors[0];
    validate(f);
    const int r = rank(f);
    if (r > cfg.rank_cap)
        throw ResourceLimitError("rank " + std::to_string(r) + " above cap " +
                                 std::to_string(cfg.rank_cap));

    bool signs_allowed = false, even_signs_only = false;
    switch (f.family) {
        case Family::UnitaryU: break;
        case Family::CompactSymplecticSp: signs_allowed = true; break;
        case Family::OrthogonalO: signs_allowed = true; break;
        case Family::SpecialOrthogonalSO:
            signs_allowed = true;
            even_signs_only = (f.n % 2 == 0);
            break;
        case Family::SU2: signs_allowed = true; break;
    }

    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<WeylElement> out;
    do {
        const int psign = permutation_sign(idx);
        const int npatterns = signs_allowed ? (1 << r) : 1;
        for (int mask = 0; mask < npatterns; ++mask) {
            if (even_signs_only && (__builtin_popcount(mask) % 2 != 0)) continue;
            WeylElement w;
            w.perm = idx;
            w.sign.assign(r, 1);
            int sprod = 1;
            for (int i = 0; i < r; ++i)
                if (mask & (1 << i)) {
                    w.sign[i] = -1;
                    sprod = -sprod;
                }
            w.det = psign * sprod;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Weyl dimension formula, evaluated exactly in integers.

namespace detail {

// Type A factor (also the U(n) lattice): prod_{i<j} (l_i - l_j) with l = w + delta.
inline Int dim_type_a(const Weight& w) {
    const int n = static_cast<int>(w.size());
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= Int(w[i] - w[j] + j - i);
            den *= Int(j - i);
        }
    Int q = num / den;
    if (q * den != num) throw DomainError("weyl_dim: non-exact division (type A)");
    return q;
}

inline Int dim_bcd(const std::vector<Int>& l, const std::vector<Int>& l0, bool with_short_or_long) {
    Int num = 1, den = 1;
    const int r = static_cast<int>(l.size());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= l0[i] * l0[i] - l0[j] * l0[j];
        }
    if (with_short_or_long)
        for (int i = 0; i < r; ++i) {
            num *= l[i];
            den *= l0[i];
        }
    Int q = num / den;
    if (q * den != num) throw DomainError("weyl_dim: non-exact division (type B/C/D)");
    return q;
}

}  // namespace detail

inline Int weyl_dim(const GroupFactor& f, const Weight& w) {
    if (!is_dominant(f, w)) throw DomainError("weyl_dim: weight not dominant for " + to_string(f));
    const int r = rank(f);
    switch (f.family) {
        case Family::UnitaryU:
            return detail::dim_type_a(w);
        case Family::SU2:
            return Int(w[0] + 1);
        case Family::CompactSymplecticSp: {
            std::vector<Int> l(r), l0(r);
            for (int i = 0; i < r; ++i) {
                l[i] = Int(w[i] + r - i);
                l0[i] = Int(r - i);
            }
            return detail::dim_bcd(l, l0, /*with_short_or_long=*/true);
        }
        case Family::SpecialOrthogonalSO:
        case Family::OrthogonalO: {
            Int d;
            if (f.n % 2 == 1) {
                // B_r with half-integral rho; work with doubled entries.
                std::vector<Int> l(r), l0(r);
                for (int i = 0; i < r; ++i) {
                    l[i] = Int(2 * w[i] + 2 * (r - i) - 1);
                    l0[i] = Int(2 * (r - i) - 1);
                }
                d = detail::dim_bcd(l, l0, true);
            } else {
                std::vector<Int> l(r), l0(r);
                for (int i = 0; i < r; ++i) {
                    l[i] = Int(w[i] + r - 1 - i);
                    l0[i] = Int(r - 1 - i);
                }
                // D_r: l0 has a harmless 0 in the last slot; pair products only.
                d = detail::dim_bcd(l, l0, false);
            }
            if (f.family == Family::OrthogonalO && f.n % 2 == 0 && w[r - 1] != 0) d *= 2;
            return d;
        }
    }
    throw DomainError("weyl_dim: unknown family");
}

inline Int weyl_dim(const GroupLabel& g, const Weight& w) {
    if (static_cast<int>(w.size()) != rank(g)) throw DomainError("weyl_dim: weight rank mismatch");
    Int d = 1;
    int off = 0;
    for (const auto& f : g.factors) {
        const int r = rank(f);
        Weight part(w.begin() + off, w.begin() + off + r);
        d *= weyl_dim(f, part);
        off += r;
    }
    return d;
}

// Dual representation for U(n): negated and reversed highest weight.
inline Weight dual_weight_u(const Weight& w) {
    Weight d(w.rbegin(), w.rend());
    for (int& x : d) x = -x;
    return d;
}

}  // namespace branchkit
