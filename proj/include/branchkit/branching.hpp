#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "branchkit/characters.hpp"
#include "branchkit/harmonics.hpp"
#include "branchkit/spectrum.hpp"

namespace branchkit {

// ---------------------------------------------------------------------------
// Requests

enum class Subgroup { K, H1, H2, H3, H4, H5, H6 };

inline std::string to_string(Subgroup s) {
    switch (s) {
        case Subgroup::K: return "K";
        case Subgroup::H1: return "H1";
        case Subgroup::H2: return "H2";
        case Subgroup::H3: return "H3";
        case Subgroup::H4: return "H4";
        case Subgroup::H5: return "H5";
        case Subgroup::H6: return "H6";
    }
    return "?";
}

struct BranchRequest {
    int n = 2;             // ambient GL(n,C)
    Subgroup subgroup = Subgroup::K;
    int k = 0;             // line bundle winding
    Rat lambda = Rat(0);   // imaginary part of the inducing parameter, a label
    int p = 0, q = 0, m = 0;
};

// ---------------------------------------------------------------------------
// Helpers

// All dominant weights of total degree <= dmax.
inline std::vector<Weight> dominant_weights(const GroupLabel& g, int dmax) {
    std::vector<Weight> out;
    if (dmax < 0) return out;

    // per-factor lists by exact degree
    std::vector<std::vector<std::vector<Weight>>> per_factor;  // factor -> degree -> weights
    for (const auto& f : g.factors) {
        const int r = rank(f);
        std::vector<std::vector<Weight>> by_deg(dmax + 1);
        std::vector<int> cur(r, 0);
        // enumerate all integer vectors with |entries| summing <= dmax, keep dominant
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == r) {
                Weight w(cur);
                if (is_dominant(f, w)) by_deg[used].push_back(w);
                return;
            }
            for (int v = -(dmax - used); v <= dmax - used; ++v) {
                cur[pos] = v;
                rec(pos + 1, used + std::abs(v));
            }
            cur[pos] = 0;
        };
        rec(0, 0);
        per_factor.push_back(std::move(by_deg));
    }

    // combine factors with total degree <= dmax
    std::function<void(std::size_t, int, Weight&)> combine = [&](std::size_t fi, int used,
                                                                 Weight& acc) {
        if (fi == per_factor.size()) {
            out.push_back(acc);
            return;
        }
        for (int d = 0; d + used <= dmax; ++d)
            for (const auto& w : per_factor[fi][d]) {
                const std::size_t sz = acc.size();
                acc.insert(acc.end(), w.begin(), w.end());
                combine(fi + 1, used + d, acc);
                acc.resize(sz);
            }
    };
    Weight acc;
    combine(0, 0, acc);
    return out;
}

// Fold an SO(2r)-weight onto its O(2r)-label (last coordinate's sign is a
// determinant twist, invisible at the O-level).
inline Weight o_fold(const GroupFactor& f, Weight w) {
    if ((f.family == Family::SpecialOrthogonalSO || f.family == Family::OrthogonalO) &&
        f.n % 2 == 0 && !w.empty() && w.back() < 0)
        w.back() = -w.back();
    return w;
}

// ---------------------------------------------------------------------------
// Spectrum constructors, one per branching law.

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

inline std::string istr(int v) { return std::to_string(v); }

}  // namespace detail

// Restriction to the maximal compact subgroup K = U(n): one countable
// discrete family H^{a,b}(C^n), a-b = -k, indexed by its degree a+b.
inline Spectrum branch_to_K(const BranchRequest& req) {
    detail::require(req.n >= 2, "branch_to_K: n >= 2 required");
    Spectrum s;
    s.provenance = "branch(K,n=" + detail::istr(req.n) + ",k=" + detail::istr(req.k) + ")";
    SpectrumComponent c;
    c.group = "U(" + detail::istr(req.n) + ")";
    c.series.name = "harmonics";
    c.series.set("n", detail::istr(req.n));
    c.series.set("k", detail::istr(req.k));
    c.params = ParamSet::arithmetic(rat(std::abs(req.k)), rat(2));  // degree a+b
    c.multiplicity = 1;
    c.measure = SpectrumComponent::Measure::Counting;
    s.components.push_back(std::move(c));
    return merge(s);
}

// Restriction to GL(p,C) x GL(q,C): for each k' a direct integral over the
// line of principal series tensor products. Components are materialized for
// |k'| <= kp_window.
inline Spectrum branch_to_h1(const BranchRequest& req, int p, int q, int kp_window = 6) {
    detail::require(p >= 1 && q >= 1 && p + q == req.n, "branch_to_h1: need p+q=n, p,q>=1");
    Spectrum s;
    s.provenance = "branch(H1,p=" + detail::istr(p) + ",q=" + detail::istr(q) +
                   ",k=" + detail::istr(req.k) + ",lambda=" + to_string(req.lambda) + ")";
    for (int kp = -kp_window; kp <= kp_window; ++kp) {
        SpectrumComponent c;
        c.group = "GL(" + detail::istr(p) + ",C)xGL(" + detail::istr(q) + ",C)";
        c.series.name = "ps_tensor";
        c.series.set("p", detail::istr(p));
        c.series.set("q", detail::istr(q));
        c.series.set("kp", detail::istr(kp));
        c.series.set("kq", detail::istr(req.k - kp));
        c.series.set("lambda", to_string(req.lambda));
        c.params = ParamSet::interval(std::nullopt, std::nullopt);  // lambda' runs over R
        c.multiplicity = 1;
        c.measure = SpectrumComponent::Measure::Lebesgue;
        s.components.push_back(std::move(c));
    }
    return merge(s);
}

// Restriction to U(p,q): discrete subquotient families over A_+ and A_- plus
// a multiplicity-two direct integral of the degenerate principal series.
inline Spectrum branch_to_h2(const BranchRequest& req, int p, int q) {
    detail::require(p >= 1 && q >= 1 && p + q == req.n, "branch_to_h2: need p+q=n, p,q>=1");
    const int k = req.k;
    Spectrum s;
    s.provenance = "branch(H2,p=" + detail::istr(p) + ",q=" + detail::istr(q) +
                   ",k=" + detail::istr(k) + ",lambda=" + to_string(req.lambda) + ")";
    const std::string grp = "U(" + detail::istr(p) + "," + detail::istr(q) + ")";

    for (int side = 0; side < 2; ++side) {
        const char sign = side == 0 ? '+' : '-';
        const int P = side == 0 ? p : q;  // the case analysis runs on (P,Q)
        const int Q = side == 0 ? q : p;
        ParamSet A = side == 0 ? a_plus_set(p, q, k) : a_minus_set(p, q, k);
        if (A.is_empty()) continue;

        auto base_component = [&](const char* kind, ParamSet params) {
            SpectrumComponent c;
            c.group = grp;
            c.series.name = kind;
            c.series.set("p", detail::istr(p));
            c.series.set("q", detail::istr(q));
            c.series.set("k", detail::istr(k));
            c.series.set("sign", std::string(1, sign));
            c.params = std::move(params);
            c.multiplicity = 1;
            c.measure = SpectrumComponent::Measure::Counting;
            return c;
        };

        if (P > 1 && Q > 1) {
            s.components.push_back(base_component("subquotient", A));
        } else if (P > 1 && Q == 1) {
            // Complementary series for |t| < P - |k|; big subquotients beyond.
            const Rat threshold = rat(-(P - std::abs(k)));
            std::vector<Rat> compl_list;
            Rat t = A.kind == ParamSet::Kind::Progression ? A.base : Rat(0);
            if (A.kind == ParamSet::Kind::Progression) {
                while (threshold < t) {
                    compl_list.push_back(t);
                    t += A.step;
                }
                if (!compl_list.empty())
                    s.components.push_back(
                        base_component("complementary", ParamSet::finite(compl_list)));
                s.components.push_back(base_component("big", ParamSet::arithmetic(t, A.step)));
            } else {
                throw DomainError("unexpected finite A-set for P>1");
            }
        } else {
            // P == 1: the small subquotients (holomorphic/antiholomorphic type).
            s.components.push_back(base_component("small", A));
        }
    }

    SpectrumComponent cont;
    cont.group = grp;
    cont.series.name = "principal";
    cont.series.set("p", detail::istr(p));
    cont.series.set("q", detail::istr(q));
    cont.series.set("k", detail::istr(k));
    cont.params = ParamSet::imaginary_half_line();
    cont.multiplicity = 2;
    cont.measure = SpectrumComponent::Measure::Lebesgue;
    s.components.push_back(std::move(cont));
    return merge(s);
}

// Restriction to Sp(m,C): irreducible away from (0,0); two components there.
inline Spectrum branch_to_h3(const BranchRequest& req, int m) {
    detail::require(req.n == 2 * m && m >= 1, "branch_to_h3: need n=2m");
    Spectrum s;
    s.provenance = "branch(H3,m=" + detail::istr(m) + ",k=" + detail::istr(req.k) +
                   ",lambda=" + to_string(req.lambda) + ")";
    const std::string grp = "Sp(" + detail::istr(m) + ",C)";
    if (req.lambda != Rat(0) || req.k != 0) {
        SpectrumComponent c;
        c.group = grp;
        c.series.name = "ps";
        c.series.set("m", detail::istr(m));
        c.series.set("k", detail::istr(req.k));
        c.series.set("lambda", to_string(req.lambda));
        c.params = ParamSet::finite({req.lambda});
        c.multiplicity = 1;
        c.measure = SpectrumComponent::Measure::Counting;
        s.components.push_back(std::move(c));
    } else {
        for (const char* sign : {"+", "-"}) {
            SpectrumComponent c;
            c.group = grp;
            c.series.name = "ps_split";
            c.series.set("m", detail::istr(m));
            c.series.set("sign", sign);
            c.params = ParamSet::finite({Rat(0)});
            c.multiplicity = 1;
            c.measure = SpectrumComponent::Measure::Counting;
            s.components.push_back(std::move(c));
        }
    }
    return merge(s);
}

// Restriction to GL(m,H): discrete sum over j >= |k|, j = k mod 2.
inline Spectrum branch_to_h4(const BranchRequest& req, int m) {
    detail::require(req.n == 2 * m && m >= 1, "branch_to_h4: need n=2m");
    Spectrum s;
    s.provenance = "branch(H4,m=" + detail::istr(m) + ",k=" + detail::istr(req.k) +
                   ",lambda=" + to_string(req.lambda) + ")";
    SpectrumComponent c;
    c.group = "GL(" + detail::istr(m) + ",H)";
    c.series.name = "ind_sp1";
    c.series.set("m", detail::istr(m));
    c.series.set("k", detail::istr(req.k));
    c.series.set("lambda", to_string(req.lambda));
    c.params = ParamSet::arithmetic(rat(std::abs(req.k)), rat(2));  // j
    c.multiplicity = 1;
    c.measure = SpectrumComponent::Measure::Counting;
    s.components.push_back(std::move(c));
    return merge(s);
}

// Restriction to O(n,C): for each j = k mod 2 a direct integral; no discrete
// spectrum. Components materialized for j <= j_window.
inline Spectrum branch_to_h5(const BranchRequest& req, int j_window = 8) {
    detail::require(req.n >= 3, "branch_to_h5: n >= 3 required (O(2,C) is degenerate)");
    Spectrum s;
    s.provenance = "branch(H5,n=" + detail::istr(req.n) + ",k=" + detail::istr(req.k) +
                   ",lambda=" + to_string(req.lambda) + ")";
    for (int j = std::abs(req.k) % 2; j <= j_window; j += 2) {
        SpectrumComponent c;
        c.group = "O(" + detail::istr(req.n) + ",C)";
        c.series.name = "ind_o2";
        c.series.set("n", detail::istr(req.n));
        c.series.set("j", detail::istr(j));
        c.series.set("lambda", to_string(req.lambda));
        c.params = ParamSet::imaginary_half_line();
        c.multiplicity = 1;
        c.measure = SpectrumComponent::Measure::Lebesgue;
        s.components.push_back(std::move(c));
    }
    return merge(s);
}

// Restriction to GL(n,R), n >= 3: discrete part indexed by
// { t > 0 : t in |k|-1-2N }, plus a multiplicity-two direct integral.
inline Spectrum branch_to_h6(const BranchRequest& req) {
    if (req.n == 2)
        throw DomainError("branch_to_h6: n=2 is handled by H2 with p=q=1 (GL(2,R) ~ U(1,1))");
    detail::require(req.n >= 3, "branch_to_h6: n >= 3 required");
    const int eps = ((req.k % 2) + 2) % 2;
    Spectrum s;
    s.provenance = "branch(H6,n=" + detail::istr(req.n) + ",k=" + detail::istr(req.k) +
                   ",lambda=" + to_string(req.lambda) + ")";
    const std::string grp = "GL(" + detail::istr(req.n) + ",R)";

    ParamSet ds = gl2r_discrete_params(req.k);
    if (!ds.is_empty()) {
        SpectrumComponent c;
        c.group = grp;
        c.series.name = "ind_p1_ds";
        c.series.set("n", detail::istr(req.n));
        c.series.set("parity", detail::istr(eps));
        c.series.set("lambda", to_string(req.lambda));
        c.params = std::move(ds);
        c.multiplicity = 1;
        c.measure = SpectrumComponent::Measure::Counting;
        s.components.push_back(std::move(c));
    }

    SpectrumComponent cont;
    cont.group = grp;
    cont.series.name = "ind_p2";
    cont.series.set("n", detail::istr(req.n));
    cont.series.set("parity", detail::istr(eps));
    cont.series.set("lambda", to_string(req.lambda));
    cont.series.set("irreducible_off", "0;+-i*lambda");
    cont.params = ParamSet::imaginary_half_line();
    cont.multiplicity = 2;
    cont.measure = SpectrumComponent::Measure::Lebesgue;
    s.components.push_back(std::move(cont));
    return merge(s);
}

inline Spectrum branch(const BranchRequest& req) {
    switch (req.subgroup) {
        case Subgroup::K: return branch_to_K(req);
        case Subgroup::H1: return branch_to_h1(req, req.p, req.q);
        case Subgroup::H2: return branch_to_h2(req, req.p, req.q);
        case Subgroup::H3: return branch_to_h3(req, req.m);
        case Subgroup::H4: return branch_to_h4(req, req.m);
        case Subgroup::H5: return branch_to_h5(req);
        case Subgroup::H6: return branch_to_h6(req);
    }
    throw DomainError("unknown subgroup");
}

// ---------------------------------------------------------------------------
// K-type supports
//
// For each component the set (with multiplicities where the decomposition is
// discrete) of maximal-compact types of total harmonic degree <= dmax.
// Induced components use Frobenius reciprocity over the compact picture of
// the inducing parabolic; subquotients use their explicit type displays.

struct KTypes {
    GroupLabel group;            // maximal compact the weights refer to
    std::map<Weight, Int> mult;  // weight -> multiplicity >= 1

    bool contains(const Weight& w) const { return mult.count(w) > 0; }
    std::set<Weight> support() const {
        std::set<Weight> s;
        for (const auto& [w, m] : mult) s.insert(w);
        return s;
    }
};

namespace detail {

inline int arg_int(const SeriesTag& t, const std::string& key) {
    auto v = t.get(key);
    if (!v) throw DomainError("series tag " + t.str() + " missing arg " + key);
    return std::stoi(*v);
}

// U(p)xU(q)-weight of H^{a1,a2}(C^p) (x) H^{b1,b2}(C^q).
inline Weight upq_type(int p, int q, int a1, int a2, int b1, int b2) {
    Weight w(p + q, 0);
    w[0] += a1;
    w[p - 1] -= a2;
    w[p] += b1;
    w[p + q - 1] -= b2;
    return w;
}

// K-types of the big constituents of the U(p,q) degenerate series at
// parameter t: over j,l >= 0 with sign*(j-l+p-q) > |t| and
// 2(alpha+beta) = j+l-k, the types H^{alpha,j-alpha}(C^p) (x) H^{beta,l-beta}(C^q).
inline void upq_subquotient_types(int p, int q, int k, int sign, const Rat& t, int dmax,
                                  std::map<Weight, Int>& out) {
    const Rat abs_t = t < Rat(0) ? -t : t;
    for (int j = 0; j <= dmax; ++j)
        for (int l = 0; j + l <= dmax; ++l) {
            const Rat gap = rat(sign * (j - l + p - q));
            if (!(abs_t < gap)) continue;
            if ((j + l - k) % 2 != 0 || j + l - k < 0) continue;
            const int s = (j + l - k) / 2;
            for (int alpha = 0; alpha <= j; ++alpha) {
                const int beta = s - alpha;
                if (beta < 0 || beta > l) continue;
                if (p == 1 && alpha != 0 && j - alpha != 0) continue;
                if (q == 1 && beta != 0 && l - beta != 0) continue;
                out[upq_type(p, q, alpha, j - alpha, beta, l - beta)] += 1;
            }
        }
}

// K-types of the small subquotient of the U(P,1) series at parameter t,
// reflected into U(p)xU(q) coordinates when the rank-one factor comes first.
// The plus side arises via the U(1,q) <-> U(q,1) identification, so there the
// display's rank-one factor is the first block of U(p)xU(q).
inline void upq_small_types(int p, int q, int k, bool swapped, const Rat& t, int dmax,
                            std::map<Weight, Int>& out) {
    const int P = swapped ? q : p;
    if ((swapped ? p : q) != 1) throw DomainError("small subquotient needs a rank-one factor");
    // constraint: a1+a2+b <= t-P (k>0)  /  a1+a2-b <= t-P (k<0), a1-a2+b = -k
    for (int a1 = 0; a1 <= dmax; ++a1)
        for (int a2 = 0; a1 + a2 <= dmax; ++a2) {
            const int b = -k - a1 + a2;
            if (a1 + a2 + std::abs(b) > dmax) continue;
            if (P == 1 && a1 != 0 && a2 != 0) continue;
            const Rat lhs = rat(k > 0 ? a1 + a2 + b : a1 + a2 - b);
            if (!(lhs <= t - rat(P))) continue;
            Weight w;
            if (!swapped)
                w = upq_type(p, 1, a1, a2, b > 0 ? b : 0, b < 0 ? -b : 0);
            else
                w = upq_type(1, q, b > 0 ? b : 0, b < 0 ? -b : 0, a1, a2);
            out[w] += 1;
        }
}

// Multiplicity of the U(1)-character mu^{-k} (x) trivial in the restriction
// of the U(p)xU(q)-type sigma to U(1) x U(p-1) x U(q-1), where the circle
// sits in the first coordinate of the p-block and the last of the q-block.
inline Int upq_principal_mult(int p, int q, int k, const Weight& sigma,
                              const Config& cfg) {
    std::vector<GroupLabel> parts{U(1)};
    if (p > 1) parts.push_back(U(p - 1));
    if (q > 1) parts.push_back(U(q - 1));
    GroupLabel sub = product(parts);
    const int sr = rank(sub);
    std::vector<std::vector<int>> mat(p + q, std::vector<int>(sr, 0));
    mat[0][0] = 1;
    mat[p + q - 1][0] = 1;
    int col = 1;
    for (int i = 1; i < p; ++i) mat[i][col++] = 1;
    for (int i = p; i < p + q - 1; ++i) mat[i][col++] = 1;
    auto e = emb::custom("M-compact in U(p)xU(q)", product({U(p), U(q)}), sub, mat);
    Weight tau(sr, 0);
    tau[0] = -k;
    LaurentChar ch = restrict_char(irreducible_character(product({U(p), U(q)}), sigma, cfg), e);
    return decompose(ch, sub, cfg).multiplicity(tau);
}

// Multiplicity of mu^{-k} (x) trivial in the restriction of the Sp(m)-type
// sigma to U(1) x Sp(m-1) (the compact Levi of the Heisenberg parabolic).
inline Int spm_levi_mult(int m, int k, const Weight& sigma, const Config& cfg) {
    GroupLabel sub = m > 1 ? product({U(1), Sp(m - 1)}) : U(1);
    const int sr = rank(sub);
    std::vector<std::vector<int>> mat(m, std::vector<int>(sr, 0));
    for (int i = 0; i < m; ++i) mat[i][i] = 1;
    auto e = emb::custom("U(1)xSp(m-1) in Sp(m)", Sp(m), sub, mat);
    Weight tau(sr, 0);
    tau[0] = -k;
    LaurentChar ch = restrict_char(irreducible_character(Sp(m), sigma, cfg), e);
    return decompose(ch, sub, cfg).multiplicity(tau);
}

// Multiplicity of V_j (x) trivial in the restriction of the Sp(m)-type sigma
// to Sp(1) x Sp(m-1).
inline Int sp1_levi_mult(int m, int j, const Weight& sigma, const Config& cfg) {
    if (m == 1) return sigma[0] == j ? 1 : 0;
    Weight tau(m, 0);
    tau[0] = j;
    return frobenius_multiplicity(Sp(m), sigma, product({Sp(1), Sp(m - 1)}), emb::sp1_block(m),
                                  tau, cfg);
}

// Does the SO(n)-type sigma contain the SO(2)-pair {j,-j} (x) trivial under
// SO(2) x SO(n-2)? (O-model of the O(2) x O(n-2,C) compact picture.)
inline bool so_contains_o2_type(int n, int j, const Weight& sigma, const Config& cfg) {
    const int r = n / 2;
    IrrepDecomposition d;
    if (n == 3) {
        auto e = emb::custom("SO(2) in SO(3)", SO(3), SO(2), {{1}});
        d = decompose(restrict_char(irreducible_character(SO(3), sigma, cfg), e), SO(2), cfg);
        return d.multiplicity({j}) > 0 || d.multiplicity({-j}) > 0;
    }
    auto e = emb::so2_block(n);
    GroupLabel sub = product({SO(2), SO(n - 2)});
    d = decompose(restrict_char(irreducible_character(SO(n), sigma, cfg), e), sub, cfg);
    Weight tau(r, 0);
    tau[0] = j;
    if (d.multiplicity(tau) > 0) return true;
    tau[0] = -j;
    return d.multiplicity(tau) > 0;
}

// Does the SO(n)-type sigma restrict to SO(n-2) with a trivial constituent?
inline bool so_contains_spherical(int n, const Weight& sigma, const Config& cfg) {
    const int r = n / 2;
    const int sr = (n - 2) / 2;
    if (sr == 0) return true;  // SO(1) fixed vectors always exist at SO-level
    std::vector<std::vector<int>> mat(r, std::vector<int>(sr, 0));
    for (int i = 0; i < sr; ++i) mat[i + 1][i] = 1;
    auto e = emb::custom("SO(n-2) in SO(n)", SO(n), SO(n - 2), mat);
    auto d = decompose(restrict_char(irreducible_character(SO(n), sigma, cfg), e), SO(n - 2), cfg);
    return d.multiplicity(Weight(sr, 0)) > 0;
}

}  // namespace detail

// K-type support of a component at a pinned parameter value t (ignored by
// components whose compact picture does not depend on it).
inline KTypes ktype_support_at(const SpectrumComponent& c, const Rat& t, int dmax,
                               const Config& cfg = default_config()) {
    const auto& tag = c.series;
    using detail::arg_int;

    if (tag.name == "harmonics") {
        const int n = arg_int(tag, "n"), k = arg_int(tag, "k");
        KTypes out{U(n), {}};
        for (const auto& [w, m] : l2_line_bundle_sphere(n, k, dmax).entries) out.mult[w] = m;
        return out;
    }

    if (tag.name == "subquotient" || tag.name == "big") {
        const int p = arg_int(tag, "p"), q = arg_int(tag, "q"), k = arg_int(tag, "k");
        const int sign = tag.get("sign") == "+" ? 1 : -1;
        KTypes out{product({U(p), U(q)}), {}};
        detail::upq_subquotient_types(p, q, k, sign, t, dmax, out.mult);
        return out;
    }

    if (tag.name == "small") {
        const int p = arg_int(tag, "p"), q = arg_int(tag, "q"), k = arg_int(tag, "k");
        KTypes out{product({U(p), U(q)}), {}};
        detail::upq_small_types(p, q, k, /*swapped=*/tag.get("sign") == "+", t, dmax, out.mult);
        return out;
    }

    if (tag.name == "principal" || tag.name == "complementary") {
        const int p = arg_int(tag, "p"), q = arg_int(tag, "q"), k = arg_int(tag, "k");
        KTypes out{product({U(p), U(q)}), {}};
        for (const auto& sigma : dominant_weights(out.group, dmax)) {
            Int m = detail::upq_principal_mult(p, q, k, sigma, cfg);
            if (m > 0) out.mult[sigma] = m;
        }
        return out;
    }

    if (tag.name == "ps") {
        const int m = arg_int(tag, "m"), k = arg_int(tag, "k");
        KTypes out{Sp(m), {}};
        for (const auto& sigma : dominant_weights(Sp(m), dmax)) {
            Int mu = detail::spm_levi_mult(m, k, sigma, cfg);
            if (mu > 0) out.mult[sigma] = mu;
        }
        return out;
    }

    if (tag.name == "ps_split") {
        const int m = arg_int(tag, "m");
        const bool plus = tag.get("sign") == "+";
        KTypes out{Sp(m), {}};
        for (int a = 0; a <= dmax; ++a)
            for (int b = 0; a + b <= dmax; ++b) {
                if (b > a) continue;
                if (m == 1 && b != 0) continue;
                const int d = a - b;
                if (d % 2 != 0) continue;
                if (plus != (d % 4 == 0)) continue;
                Weight w(m, 0);
                w[0] = a;
                if (m > 1) w[1] = b;
                out.mult[w] += 1;
            }
        return out;
    }

    if (tag.name == "ind_sp1") {
        const int m = arg_int(tag, "m");
        const int j = static_cast<int>(t.numerator());  // pinned j
        KTypes out{Sp(m), {}};
        for (const auto& sigma : dominant_weights(Sp(m), dmax)) {
            Int mu = detail::sp1_levi_mult(m, j, sigma, cfg);
            if (mu > 0) out.mult[sigma] = mu;
        }
        return out;
    }

    if (tag.name == "ind_o2") {
        const int n = arg_int(tag, "n"), j = arg_int(tag, "j");
        KTypes out{O(n), {}};
        for (const auto& sigma : dominant_weights(SO(n), dmax)) {
            if (!sigma.empty() && sigma.back() < 0) continue;  // enumerate O-folded labels
            if (detail::so_contains_o2_type(n, j, sigma, cfg)) out.mult[sigma] = 1;
        }
        return out;
    }

    if (tag.name == "ind_p1_ds") {
        const int n = arg_int(tag, "n"), eps = arg_int(tag, "parity");
        KTypes out{O(n), {}};
        for (const auto& sigma : dominant_weights(SO(n), dmax)) {
            if (!sigma.empty() && sigma.back() < 0) continue;
            for (int j = eps; j <= dmax; j += 2) {
                if (!(t < rat(j))) continue;  // O(2)-types H^j, j > t
                if (detail::so_contains_o2_type(n, j, sigma, cfg)) {
                    out.mult[sigma] = 1;
                    break;
                }
            }
        }
        return out;
    }

    if (tag.name == "ind_p2") {
        const int n = arg_int(tag, "n");
        KTypes out{O(n), {}};
        for (const auto& sigma : dominant_weights(SO(n), dmax)) {
            if (!sigma.empty() && sigma.back() < 0) continue;
            if (detail::so_contains_spherical(n, sigma, cfg)) out.mult[sigma] = 1;
        }
        return out;
    }

    if (tag.name == "ps_tensor") {
        const int p = arg_int(tag, "p"), q = arg_int(tag, "q");
        const int kp = arg_int(tag, "kp"), kq = arg_int(tag, "kq");
        KTypes out{product({U(p), U(q)}), {}};
        for (int a1 = 0; a1 <= dmax; ++a1)
            for (int a2 = 0; a1 + a2 <= dmax; ++a2) {
                if (a1 - a2 != -kp) continue;
                if (p == 1 && a1 != 0 && a2 != 0) continue;
                for (int b1 = 0; a1 + a2 + b1 <= dmax; ++b1) {
                    const int b2 = b1 + kq;
                    if (b2 < 0 || a1 + a2 + b1 + b2 > dmax) continue;
                    if (q == 1 && b1 != 0 && b2 != 0) continue;
                    out.mult[detail::upq_type(p, q, a1, a2, b1, b2)] += 1;
                }
            }
        return out;
    }

    throw NoKTypeOracleError("no K-type oracle for component series '" + tag.name + "'");
}

// K-type support of a whole component: the sum over its (bounded-relevant)
// parameter values. For continuous components the support is t-independent.
inline KTypes ktype_support(const SpectrumComponent& c, int dmax,
                            const Config& cfg = default_config()) {
    const std::string& nm = c.series.name;
    const bool t_dependent =
        (nm == "subquotient" || nm == "big" || nm == "small" || nm == "ind_sp1" ||
         nm == "ind_p1_ds");
    if (!t_dependent || !c.params.discrete()) return ktype_support_at(c, Rat(0), dmax, cfg);

    // Beyond these parameter magnitudes the truncated support is empty.
    Rat bound = rat(dmax);
    if (nm == "subquotient" || nm == "big") {
        const int p = detail::arg_int(c.series, "p"), q = detail::arg_int(c.series, "q");
        bound = rat(dmax + std::abs(p - q) + 1);
    }

    KTypes out;
    bool first = true;
    std::vector<Rat> pts;
    if (c.params.kind == ParamSet::Kind::Finite) {
        pts = c.params.values;
    } else if (c.params.kind == ParamSet::Kind::Progression) {
        Rat t = c.params.base;
        while ((t < Rat(0) ? -t : t) <= bound) {
            pts.push_back(t);
            t += c.params.step;
        }
    }
    for (const Rat& t : pts) {
        KTypes kt = ktype_support_at(c, t, dmax, cfg);
        if (first) {
            out = std::move(kt);
            first = false;
        } else {
            for (const auto& [w, m] : kt.mult) out.mult[w] += m;
        }
    }
    if (first) out = ktype_support_at(c, Rat(0), -1, cfg);  // empty support, right group
    return out;
}

}  // namespace branchkit
