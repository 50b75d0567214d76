#pragma once

#include <string>
#include <vector>

#include "branchkit/characters.hpp"
#include "branchkit/groups.hpp"
#include "branchkit/laurent.hpp"

namespace branchkit {

inline Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

// ---------------------------------------------------------------------------
// The named families of irreducibles: H^j(R^N), H^{a,b}(C^n), H^{a,b}(H^m), V_j.

struct HarmonicLabel {
    enum class Kind { Real, Complex, Quaternionic, SU2Rep } kind;
    int dim_param = 0;  // N for Real, n for Complex, m for Quaternionic
    int a = 0;          // j for Real/SU2Rep, alpha otherwise
    int b = 0;          // beta (Complex/Quaternionic)

    static HarmonicLabel Real(int N, int j) { return {Kind::Real, N, j, 0}; }
    static HarmonicLabel Complex(int n, int alpha, int beta) {
        return {Kind::Complex, n, alpha, beta};
    }
    static HarmonicLabel Quaternionic(int m, int alpha, int beta) {
        return {Kind::Quaternionic, m, alpha, beta};
    }
    static HarmonicLabel SU2Rep(int j) { return {Kind::SU2Rep, 0, j, 0}; }

    bool operator==(const HarmonicLabel&) const = default;
};

inline std::string to_string(const HarmonicLabel& h) {
    switch (h.kind) {
        case HarmonicLabel::Kind::Real:
            return "H^" + std::to_string(h.a) + "(R^" + std::to_string(h.dim_param) + ")";
        case HarmonicLabel::Kind::Complex:
            return "H^{" + std::to_string(h.a) + "," + std::to_string(h.b) + "}(C^" +
                   std::to_string(h.dim_param) + ")";
        case HarmonicLabel::Kind::Quaternionic:
            return "H^{" + std::to_string(h.a) + "," + std::to_string(h.b) + "}(Hq^" +
                   std::to_string(h.dim_param) + ")";
        case HarmonicLabel::Kind::SU2Rep:
            return "V_" + std::to_string(h.a);
    }
    return "?";
}

// Complex(1,a,b) with a,b > 0 is a valid label for the zero space.
inline bool is_zero_space(const HarmonicLabel& h) {
    return h.kind == HarmonicLabel::Kind::Complex && h.dim_param == 1 && h.a > 0 && h.b > 0;
}

inline void validate(const HarmonicLabel& h) {
    switch (h.kind) {
        case HarmonicLabel::Kind::Real:
            if (h.dim_param < 2 || h.a < 0) throw DomainError("Real harmonic needs N>=2, j>=0");
            return;
        case HarmonicLabel::Kind::Complex:
            if (h.dim_param < 1 || h.a < 0 || h.b < 0)
                throw DomainError("Complex harmonic needs n>=1, alpha,beta>=0");
            return;
        case HarmonicLabel::Kind::Quaternionic:
            if (h.dim_param < 1 || h.b < 0 || h.a < h.b)
                throw DomainError("Quaternionic harmonic needs m>=1, alpha>=beta>=0");
            if (h.b > 0 && h.dim_param < 2)
                throw DomainError("Quaternionic harmonic with beta>0 needs m>=2");
            return;
        case HarmonicLabel::Kind::SU2Rep:
            if (h.a < 0) throw DomainError("SU2 rep needs j>=0");
            return;
    }
}

struct HarmonicWeight {
    GroupLabel group;
    Weight weight;
};

// The highest-weight data of each family. Real harmonics carry the O(N)
// label (the determinant-parity fold of SO(N)); for N=2 this is the pair
// {j,-j} as a single object.
inline HarmonicWeight harmonic_weight(const HarmonicLabel& h) {
    validate(h);
    if (is_zero_space(h)) throw DomainError("zero space " + to_string(h) + " has no weight");
    switch (h.kind) {
        case HarmonicLabel::Kind::Real: {
            Weight w(rank(GroupFactor{Family::OrthogonalO, h.dim_param}), 0);
            if (!w.empty()) w[0] = h.a;
            return {O(h.dim_param), w};
        }
        case HarmonicLabel::Kind::Complex: {
            Weight w(h.dim_param, 0);
            w[0] += h.a;
            w[h.dim_param - 1] -= h.b;
            return {U(h.dim_param), w};
        }
        case HarmonicLabel::Kind::Quaternionic: {
            Weight w(h.dim_param, 0);
            w[0] = h.a;
            if (h.dim_param > 1) w[1] = h.b;
            return {Sp(h.dim_param), w};
        }
        case HarmonicLabel::Kind::SU2Rep:
            return {SU2(), {h.a}};
    }
    throw DomainError("unreachable");
}

inline Int harmonic_dim(const HarmonicLabel& h) {
    if (is_zero_space(h)) return 0;
    auto hw = harmonic_weight(h);
    return weyl_dim(hw.group, hw.weight);
}

// Closed form dim H^j(R^N) = C(N+j-1,j) - C(N+j-3,j-2), used as a cross-check.
inline Int real_harmonic_dim_closed_form(int N, int j) {
    return binomial(N + j - 1, j) - binomial(N + j - 3, j - 2);
}

// ---------------------------------------------------------------------------
// Characters of harmonic spaces on a chosen torus, built degree-locally from
// complete homogeneous symmetric polynomials of the module's eigenvalues.

// Torus eigenvalues of the complexified standard module: C^n for U(n),
// C^n for SO(n)/O(n) (pairs x_i^{+-1} and a 1 for odd n), C^{2m} for Sp(m),
// C^2 for SU(2).
inline std::vector<Weight> standard_eigenvalues(const GroupLabel& g) {
    if (!g.single()) throw DomainError("standard_eigenvalues expects a single factor");
    const GroupFactor f = g.factors[0];
    const int r = rank(f);
    std::vector<Weight> ev;
    auto unit = [&](int i, int s) {
        Weight w(r, 0);
        w[i] = s;
        return w;
    };
    switch (f.family) {
        case Family::UnitaryU:
            for (int i = 0; i < r; ++i) ev.push_back(unit(i, 1));
            return ev;
        case Family::CompactSymplecticSp:
        case Family::SU2:
            for (int i = 0; i < r; ++i) {
                ev.push_back(unit(i, 1));
                ev.push_back(unit(i, -1));
            }
            return ev;
        case Family::SpecialOrthogonalSO:
        case Family::OrthogonalO:
            for (int i = 0; i < r; ++i) {
                ev.push_back(unit(i, 1));
                ev.push_back(unit(i, -1));
            }
            if (f.n % 2 == 1) ev.push_back(Weight(r, 0));
            return ev;
    }
    throw DomainError("unreachable");
}

// Character of H^j(R^N) evaluated on any torus whose complexified action on
// R^N has the given eigenvalue list: h_j - h_{j-2}.
inline LaurentChar real_harmonic_char(int nvars, const std::vector<Weight>& eigenvalues,
                                      int j) {
    return complete_homogeneous(nvars, eigenvalues, j) -
           complete_homogeneous(nvars, eigenvalues, j - 2);
}

// Character of H^{a,b}(C^n) on a torus acting on the z-module with the given
// eigenvalues (the zbar-module gets the inverses):
// h_a(E) h_b(E^-1) - h_{a-1}(E) h_{b-1}(E^-1).
inline LaurentChar complex_harmonic_char(int nvars, const std::vector<Weight>& z_eigenvalues,
                                         int a, int b) {
    std::vector<Weight> inv = z_eigenvalues;
    for (auto& w : inv)
        for (int& x : w) x = -x;
    auto part = [&](int s, int t) -> LaurentChar {
        if (s < 0 || t < 0) return LaurentChar(nvars);
        return complete_homogeneous(nvars, z_eigenvalues, s) *
               complete_homogeneous(nvars, inv, t);
    };
    return part(a, b) - part(a - 1, b - 1);
}

// ---------------------------------------------------------------------------
// The two sphere decompositions of the compact picture.

// L^2(S^{N-1}) = sum of H^j(R^N), j <= dmax, each once (O(N)-labels).
inline IrrepDecomposition l2_sphere(int N, int dmax) {
    if (N < 2 || dmax < 0) throw DomainError("l2_sphere needs N>=2, dmax>=0");
    IrrepDecomposition d{O(N), {}};
    for (int j = 0; j <= dmax; ++j) {
        auto hw = harmonic_weight(HarmonicLabel::Real(N, j));
        d.entries[hw.weight] = 1;
    }
    return d;
}

// L^2(K/M, L_k) for K = U(n): all H^{a,b}(C^n) with a-b = -k, a+b <= dmax.
inline IrrepDecomposition l2_line_bundle_sphere(int n, int k, int dmax) {
    if (n < 2) throw DomainError("l2_line_bundle_sphere needs n>=2");
    IrrepDecomposition d{U(n), {}};
    for (int b = std::max(0, k); ; ++b) {
        const int a = b - k;
        if (a + b > dmax) break;
        auto hw = harmonic_weight(HarmonicLabel::Complex(n, a, b));
        d.entries[hw.weight] = 1;
    }
    return d;
}

}  // namespace branchkit
