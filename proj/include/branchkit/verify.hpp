#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "branchkit/branching.hpp"
#include "branchkit/characters.hpp"
#include "branchkit/harmonics.hpp"
#include "branchkit/spectrum.hpp"

namespace branchkit {

// ---------------------------------------------------------------------------
// Reports

struct Report {
    enum class Status { Pass, Fail, Skipped };

    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::Pass;
    std::vector<std::pair<std::string, std::string>> witness;  // on fail
    std::string reason;                                        // on skip
    long long millis = 0;

    bool passed() const { return status == Status::Pass; }
};

inline std::string to_string(Report::Status s) {
    switch (s) {
        case Report::Status::Pass: return "pass";
        case Report::Status::Fail: return "fail";
        case Report::Status::Skipped: return "skipped";
    }
    return "?";
}

namespace detail {

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

struct ReportBuilder {
    Report r;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit ReportBuilder(std::string claim) { r.claim = std::move(claim); }

    void param(const std::string& k, const std::string& v) { r.params.emplace_back(k, v); }
    void param(const std::string& k, int v) { param(k, std::to_string(v)); }

    void fail(const Weight& w, const Int& expected, const Int& actual) {
        if (r.status == Report::Status::Fail) return;  // keep the first witness
        r.status = Report::Status::Fail;
        r.witness.emplace_back("weight", weight_str(w));
        r.witness.emplace_back("expected", expected.str());
        r.witness.emplace_back("actual", actual.str());
    }

    void fail_note(const std::string& key, const std::string& note) {
        if (r.status == Report::Status::Fail) return;
        r.status = Report::Status::Fail;
        r.witness.emplace_back(key, note);
    }

    void skip(const std::string& reason) {
        if (r.status == Report::Status::Fail) return;
        r.status = Report::Status::Skipped;
        r.reason = reason;
    }

    Report done() {
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        return r;
    }
};

// Compare a computed decomposition with an expected multiset.
inline void compare_mults(ReportBuilder& rb, const std::map<Weight, Int>& actual,
                          const std::map<Weight, Int>& expected) {
    for (const auto& [w, m] : expected) {
        auto it = actual.find(w);
        const Int got = it == actual.end() ? Int(0) : it->second;
        if (got != m) {
            rb.fail(w, m, got);
            return;
        }
    }
    for (const auto& [w, m] : actual)
        if (!expected.count(w)) {
            rb.fail(w, 0, m);
            return;
        }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual verifiers. Each one is a pure function of its parameters and
// checks a finitely-verifiable claim by an independent brute-force route.

// Character pipeline for the compact branching law: each H^j(R^{2n}) splits
// over U(n) into the bidegree pieces, and the alpha-beta=-k slice matches
// the line-bundle decomposition.
inline Report verify_thm_k(int n, int k, int dmax, const Config& cfg = default_config()) {
    detail::ReportBuilder rb("thmK(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                             ",dmax=" + std::to_string(dmax) + ")");
    rb.param("n", n);
    rb.param("k", k);
    rb.param("dmax", dmax);
    try {
        std::map<Weight, Int> slice;  // types with a-b = -k, degree <= dmax
        const auto so_eigs = standard_eigenvalues(SO(2 * n));
        for (int j = 0; j <= dmax; ++j) {
            auto ambient = real_harmonic_char(n, so_eigs, j);
            auto res = restrict_char(ambient, emb::u_in_so(n));
            if (res.eval_ones() != real_harmonic_dim_closed_form(2 * n, j)) {
                rb.fail_note("dimension", "H^" + std::to_string(j) + " restriction changed size");
                return rb.done();
            }
            auto d = decompose(res, U(n), cfg);
            std::map<Weight, Int> expected;
            for (int a = 0; a <= j; ++a)
                expected[harmonic_weight(HarmonicLabel::Complex(n, a, j - a)).weight] = 1;
            detail::compare_mults(rb, d.entries, expected);
            if (!rb.r.witness.empty()) return rb.done();
            for (const auto& [w, m] : d.entries) {
                int a = w[0], b = -w[n - 1];
                if (a - b == -k) slice[w] += m;
            }
        }
        std::map<Weight, Int> expected_slice;
        for (const auto& [w, m] : l2_line_bundle_sphere(n, k, dmax).entries)
            expected_slice[w] = m;
        detail::compare_mults(rb, slice, expected_slice);
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// H^j(R^{4m}) restricted to Sp(m): each H^{a,b}(H^m) with a+b=j occurs with
// multiplicity a-b+1 (for m=1 only b=0 labels exist and the multiplicity is j+1).
inline Report verify_sp_multiplicity(int m, int jmax, const Config& cfg = default_config()) {
    detail::ReportBuilder rb("spmult(m=" + std::to_string(m) + ",jmax=" + std::to_string(jmax) +
                             ")");
    rb.param("m", m);
    rb.param("jmax", jmax);
    try {
        const auto so_eigs = standard_eigenvalues(SO(4 * m));
        std::vector<std::vector<int>> mat(2 * m, std::vector<int>(m, 0));
        for (int i = 0; i < 2 * m; ++i) mat[i][i / 2] = (i % 2 == 0) ? 1 : -1;
        auto sp_in_so = emb::custom("Sp(m) in SO(4m)", SO(4 * m), Sp(m), mat);
        for (int j = 0; j <= jmax; ++j) {
            auto ambient = real_harmonic_char(2 * m, so_eigs, j);
            auto d = decompose(restrict_char(ambient, sp_in_so), Sp(m), cfg);
            std::map<Weight, Int> expected;
            for (int b = 0; 2 * b <= j; ++b) {
                const int a = j - b;
                if (m == 1 && b > 0) continue;
                Weight w(m, 0);
                w[0] = a;
                if (m > 1) w[1] = b;
                expected[w] = m == 1 ? Int(j + 1) : Int(a - b + 1);
            }
            detail::compare_mults(rb, d.entries, expected);
            if (rb.r.status == Report::Status::Fail) return rb.done();
            // dimension identity as an extra exact cross-check
            Int sum = 0;
            for (const auto& [w, mult] : expected) sum += mult * weyl_dim(Sp(m), w);
            if (sum != real_harmonic_dim_closed_form(4 * m, j)) {
                rb.fail_note("dimension", "multiplicity formula dimension mismatch at j=" +
                                              std::to_string(j));
                return rb.done();
            }
        }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// The split of pi_{0,0} restricted to Sp(m): summing the Sp(m)-decompositions
// of H^{g,g}(C^{2m}) over g, every stabilized type of degree <= dmax occurs
// once and lands in the 4Z or 2+4Z family according to its a-b. Types whose
// contributions have not provably stabilized are counted as skipped.
inline Report verify_h3_split(int m, int dmax, int window = 3,
                              const Config& cfg = default_config()) {
    detail::ReportBuilder rb("h3split(m=" + std::to_string(m) + ",dmax=" + std::to_string(dmax) +
                             ")");
    rb.param("m", m);
    rb.param("dmax", dmax);
    try {
        const int A = (dmax + 2 * window) / 2 + 1;  // 2(A+1) > dmax + 2*window
        const auto sp_eigs = standard_eigenvalues(Sp(m));
        std::map<Weight, Int> total;
        std::map<Weight, int> last_contribution;  // type -> largest g contributing
        for (int g = 0; g <= A; ++g) {
            auto ch = complex_harmonic_char(m, sp_eigs, g, g);
            auto d = decompose(ch, Sp(m), cfg);
            for (const auto& [w, mult] : d.entries) {
                total[w] += mult;
                last_contribution[w] = g;
            }
        }

        int skipped = 0, checked = 0;
        auto consider = [&](const Weight& w, const Int& got) {
            if (degree(w) > dmax) return;
            ++checked;
            if (last_contribution.count(w) && last_contribution[w] > A - window) {
                ++skipped;  // not certified stable
                return;
            }
            // expected: multiplicity one exactly for two-row types with even a-b
            bool two_row = true;
            for (std::size_t i = 2; i < w.size(); ++i)
                if (w[i] != 0) two_row = false;
            const int a = w.empty() ? 0 : w[0];
            const int b = w.size() > 1 ? w[1] : 0;
            const Int expected = (two_row && (a - b) % 2 == 0) ? 1 : 0;
            if (got != expected) rb.fail(w, expected, got);
        };
        for (const auto& [w, mult] : total) consider(w, mult);
        for (const auto& w : dominant_weights(Sp(m), dmax))
            if (!total.count(w)) consider(w, 0);

        rb.param("skipped_types", std::to_string(skipped) + "/" + std::to_string(checked));
        if (rb.r.status == Report::Status::Pass && skipped == checked && checked > 0)
            rb.skip("no type certified stable within budget");
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// L^2(Sp(1)/U(1), L_k): V_j occurs exactly for j >= |k| with j = k mod 2.
inline Report verify_sp1_bundle(int k, int jmax, const Config& cfg = default_config()) {
    detail::ReportBuilder rb("sp1(k=" + std::to_string(k) + ",jmax=" + std::to_string(jmax) +
                             ")");
    rb.param("k", k);
    rb.param("jmax", jmax);
    try {
        auto e = emb::custom("U(1) in Sp(1)", Sp(1), U(1), {{1}});
        for (int j = 0; j <= jmax; ++j) {
            Int got = frobenius_multiplicity(Sp(1), {j}, U(1), e, {-k}, cfg);
            Int expected = (j >= std::abs(k) && (j - k) % 2 == 0) ? 1 : 0;
            if (got != expected) {
                rb.fail({j}, expected, got);
                return rb.done();
            }
        }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// The two circle quotients: L^2(X_1) sums the even H^j(R^2), L^2(X_2) all of
// them, with dim H^0 = 1 and dim H^j = 2. Brute force via explicit character
// sums over the finite stabilizers, independent of the character engine.
inline Report verify_o2_spaces(int jmax) {
    detail::ReportBuilder rb("o2(jmax=" + std::to_string(jmax) + ")");
    rb.param("jmax", jmax);
    // O(2)-irreps: trivial (j=0), det, and the two-dimensional H^j (j>=1).
    // Group elements are rotations r(theta) and reflections. The stabilizers:
    //   X_1: {1, r(pi), s, r(pi)s},  X_2: {1, s}.
    // Character values: H^j: tr r(theta) = 2cos(j theta), tr(reflection) = 0.
    // All the traces needed here are integers: theta in {0, pi}.
    auto mult_in = [&](int j, bool with_rpi) -> int {
        // average of characters over the stabilizer
        int sum;
        if (j == 0)
            sum = with_rpi ? 4 : 2;  // trivial rep: all values 1
        else {
            const int tr_id = 2;
            const int tr_rpi = (j % 2 == 0) ? 2 : -2;
            sum = with_rpi ? tr_id + tr_rpi : tr_id;  // reflections contribute 0
        }
        const int order = with_rpi ? 4 : 2;
        if (sum % order != 0) return -1;  // non-integral multiplicity: impossible
        return sum / order;
    };
    for (int j = 0; j <= jmax; ++j) {
        const int m1 = mult_in(j, true), m2 = mult_in(j, false);
        const int want1 = (j % 2 == 0) ? 1 : 0, want2 = 1;
        if (m1 != want1) {
            rb.fail({j}, Int(want1), Int(m1));
            return rb.done();
        }
        if (m2 != want2) {
            rb.fail({j}, Int(want2), Int(m2));
            return rb.done();
        }
        const Int dim = harmonic_dim(HarmonicLabel::Real(2, j));
        const Int want_dim = j == 0 ? 1 : 2;
        if (dim != want_dim) {
            rb.fail({j}, want_dim, dim);
            return rb.done();
        }
    }
    // the determinant character appears in neither space
    // (its stabilizer averages vanish: reflections act by -1)
    return rb.done();
}

// Grid test of the parameter-set arithmetic against direct enumeration.
inline Report verify_param_sets(int p, int q, int k) {
    detail::ReportBuilder rb("paramsets(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                             ",k=" + std::to_string(k) + ")");
    rb.param("p", p);
    rb.param("q", q);
    rb.param("k", k);
    try {
        const int n = p + q;
        auto oracle_member = [&](int pp, int qq, long t) {
            if (t >= 0) return false;
            if (((t - (k + n + 1)) % 2 + 2) % 2 != 0) return false;
            if (pp > 1) return true;
            return -(std::abs(k) - qq) < t;  // open interval for pp = 1
        };
        auto a = a_plus_set(p, q, k);
        auto b = a_minus_set(p, q, k);
        for (long t = 0; t >= -30; --t) {
            const bool in_a = !a.is_empty() && a.contains(rat(t));
            if (in_a != oracle_member(p, q, t)) {
                rb.fail({static_cast<int>(t)}, Int(oracle_member(p, q, t)), Int(in_a));
                return rb.done();
            }
            const bool in_b = !b.is_empty() && b.contains(rat(t));
            if (in_b != oracle_member(q, p, t)) {
                rb.fail({static_cast<int>(t)}, Int(oracle_member(q, p, t)), Int(in_b));
                return rb.done();
            }
        }
        // the stated emptiness rule
        if (p == 1 && std::abs(k) <= q && !a.is_empty()) {
            rb.fail_note("emptiness", "A_+^k(1,q) should be empty for |k| <= q");
            return rb.done();
        }
        // discrete half-plane parameters against direct enumeration
        auto g = gl2r_discrete_params(k);
        for (long t = -2; t <= 20; ++t) {
            const bool expect = t > 0 && (std::abs(k) - 1 - t) % 2 == 0 && t <= std::abs(k) - 1;
            const bool got = !g.is_empty() && g.contains(rat(t));
            if (expect != got) {
                rb.fail({static_cast<int>(t)}, Int(expect), Int(got));
                return rb.done();
            }
        }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// ---------------------------------------------------------------------------
// Support-consistency checks between the left-hand side (the compact branching
// law pushed through the relevant embedding) and the K-type supports of the
// right-hand side components.

namespace detail {

// LHS over U(p)xU(q): union (with multiplicities) of the decompositions of
// H^{a,b}(C^{p+q}) with a-b=-k, a+b <= cap.
inline std::map<Weight, Int> lhs_upq(int p, int q, int k, int cap, const Config& cfg) {
    const int n = p + q;
    std::map<Weight, Int> out;
    const GroupLabel sub = product({U(p), U(q)});
    for (int b = std::max(0, k); b - k + b <= cap; ++b) {
        const int a = b - k;
        auto ch = irreducible_character(U(n), harmonic_weight(HarmonicLabel::Complex(n, a, b)).weight, cfg);
        auto d = decompose(restrict_char(ch, emb::u_block(p, q)), sub, cfg);
        for (const auto& [w, m] : d.entries) out[w] += m;
    }
    return out;
}

// LHS over Sp(m): same with the symplectic embedding.
inline std::map<Weight, Int> lhs_spm(int m, int k, int cap, const Config& cfg) {
    std::map<Weight, Int> out;
    for (int b = std::max(0, k); b - k + b <= cap; ++b) {
        const int a = b - k;
        auto ch = irreducible_character(U(2 * m),
                                        harmonic_weight(HarmonicLabel::Complex(2 * m, a, b)).weight, cfg);
        auto d = decompose(restrict_char(ch, emb::sp_in_u(m)), Sp(m), cfg);
        for (const auto& [w, m2] : d.entries) out[w] += m2;
    }
    return out;
}

// LHS over SO(n), O-folded labels.
inline std::map<Weight, Int> lhs_son(int n, int k, int cap, const Config& cfg) {
    std::map<Weight, Int> out;
    const GroupFactor so{Family::SpecialOrthogonalSO, n};
    for (int b = std::max(0, k); b - k + b <= cap; ++b) {
        const int a = b - k;
        auto ch = irreducible_character(U(n), harmonic_weight(HarmonicLabel::Complex(n, a, b)).weight, cfg);
        auto d = decompose(restrict_char(ch, emb::so_in_u(n)), SO(n), cfg);
        for (const auto& [w, m] : d.entries) out[o_fold(so, w)] += m;
    }
    return out;
}

}  // namespace detail

// Set-level support consistency for H1: both directions at degree <= dmax.
inline Report verify_support_h1(int p, int q, int k, int dmax,
                                const Config& cfg = default_config()) {
    detail::ReportBuilder rb("support-h1(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                             ",k=" + std::to_string(k) + ",dmax=" + std::to_string(dmax) + ")");
    rb.param("p", p);
    rb.param("q", q);
    rb.param("k", k);
    rb.param("dmax", dmax);
    try {
        auto lhs = detail::lhs_upq(p, q, k, dmax, cfg);
        BranchRequest r;
        r.n = p + q;
        r.subgroup = Subgroup::H1;
        r.k = k;
        auto spec = branch_to_h1(r, p, q, dmax + std::abs(k) + 1);
        std::set<Weight> rhs;
        for (const auto& c : spec.components)
            for (const auto& [w, m] : ktype_support(c, dmax, cfg).mult) rhs.insert(w);
        for (const auto& [w, m] : lhs)
            if (degree(w) <= dmax && !rhs.count(w)) {
                rb.fail(w, 1, 0);
                return rb.done();
            }
        for (const auto& w : rhs)
            if (!lhs.count(w)) {
                rb.fail(w, 0, 1);
                return rb.done();
            }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// Multiplicity-exact support equality for H4 (the decomposition is discrete).
inline Report verify_support_h4(int m, int k, int dmax, const Config& cfg = default_config()) {
    detail::ReportBuilder rb("support-h4(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                             ",dmax=" + std::to_string(dmax) + ")");
    rb.param("m", m);
    rb.param("k", k);
    rb.param("dmax", dmax);
    try {
        auto lhs = detail::lhs_spm(m, k, dmax, cfg);
        BranchRequest r;
        r.n = 2 * m;
        r.subgroup = Subgroup::H4;
        r.k = k;
        auto spec = branch_to_h4(r, m);
        auto rhs = ktype_support(spec.components[0], dmax, cfg);
        std::map<Weight, Int> lhs_cut;
        for (const auto& [w, mm] : lhs)
            if (degree(w) <= dmax) lhs_cut[w] = mm;
        detail::compare_mults(rb, rhs.mult, lhs_cut);
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// Set-level support consistency for H5 on the O-model of SO(n)-data. The
// reverse direction searches the left side with a degree margin, since a
// right-side type of degree d may first occur in a harmonic of degree d+2.
inline Report verify_support_h5(int n, int k, int dmax, const Config& cfg = default_config()) {
    detail::ReportBuilder rb("support-h5(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                             ",dmax=" + std::to_string(dmax) + ")");
    rb.param("n", n);
    rb.param("k", k);
    rb.param("dmax", dmax);
    try {
        auto lhs = detail::lhs_son(n, k, dmax, cfg);
        auto lhs_ext = detail::lhs_son(n, k, dmax + 4, cfg);
        BranchRequest r;
        r.n = n;
        r.subgroup = Subgroup::H5;
        r.k = k;
        auto spec = branch_to_h5(r, dmax);
        std::set<Weight> rhs;
        for (const auto& c : spec.components)
            for (const auto& [w, m] : ktype_support(c, dmax, cfg).mult) rhs.insert(w);
        for (const auto& [w, m] : lhs)
            if (degree(w) <= dmax && !rhs.count(w)) {
                rb.fail(w, 1, 0);
                return rb.done();
            }
        for (const auto& w : rhs)
            if (!lhs_ext.count(w)) {
                rb.fail(w, 0, 1);
                return rb.done();
            }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// H2 discrete families: the displayed K-type sets are contained in the
// compact branching law and the two signs are disjoint at every parameter.
inline Report verify_support_h2(int p, int q, int k, int dmax,
                                const Config& cfg = default_config()) {
    detail::ReportBuilder rb("support-h2(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                             ",k=" + std::to_string(k) + ",dmax=" + std::to_string(dmax) + ")");
    rb.param("p", p);
    rb.param("q", q);
    rb.param("k", k);
    rb.param("dmax", dmax);
    try {
        auto lhs = detail::lhs_upq(p, q, k, dmax, cfg);
        BranchRequest r;
        r.n = p + q;
        r.subgroup = Subgroup::H2;
        r.k = k;
        auto spec = branch_to_h2(r, p, q);
        // collect the discrete components per sign
        bool regime_flagged = false;
        for (const auto& c : spec.components) {
            if (c.series.name != "subquotient" && c.series.name != "big" &&
                c.series.name != "small" && c.series.name != "complementary")
                continue;
            for (const Rat& t : c.params.enumerate(static_cast<std::size_t>(dmax + 2))) {
                if (c.series.name == "big") {
                    // below -p-|k| the display is no longer pinned down by a
                    // minimal K-type; flag the regime instead of guessing
                    const int P = c.series.get("sign") == "+" ? p : q;
                    if (!(rat(-(P + std::abs(k))) < t)) regime_flagged = true;
                }
                auto kt = ktype_support_at(c, t, dmax, cfg);
                for (const auto& [w, m] : kt.mult)
                    if (!lhs.count(w)) {
                        rb.fail(w, 1, 0);
                        return rb.done();
                    }
            }
        }
        if (regime_flagged)
            rb.param("regime_note", "big subquotient parameters beyond t=-p-|k| included");
        // sign disjointness at shared parameters (only defined for matching kinds)
        const SpectrumComponent *plus = nullptr, *minus = nullptr;
        for (const auto& c : spec.components) {
            if (c.series.name != "subquotient") continue;
            if (c.series.get("sign") == "+") plus = &c;
            if (c.series.get("sign") == "-") minus = &c;
        }
        if (plus && minus) {
            for (const Rat& t : plus->params.enumerate(static_cast<std::size_t>(dmax + 2))) {
                if (!minus->params.contains(t)) continue;
                auto sp = ktype_support_at(*plus, t, dmax, cfg);
                auto sm = ktype_support_at(*minus, t, dmax, cfg);
                for (const auto& [w, m] : sp.mult)
                    if (sm.mult.count(w)) {
                        rb.fail_note("disjointness", "type " + detail::weight_str(w) +
                                                         " in both signs at t=" + to_string(t));
                        return rb.done();
                    }
            }
        }
    } catch (const std::exception& e) {
        rb.fail_note("exception", e.what());
    }
    return rb.done();
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
    int n_lo = 2, n_hi = 4;
    int k_lo = -3, k_hi = 3;
    int m_lo = 1, m_hi = 3;
    int max_degree = 6;
    int jobs = 1;
};

inline std::vector<std::function<Report()>> suite_cells(const std::string& suite,
                                                        const SuiteOptions& o) {
    std::vector<std::function<Report()>> cells;
    auto add = [&](std::function<Report()> f) { cells.push_back(std::move(f)); };

    if (suite == "thmK" || suite == "all")
        for (int n = o.n_lo; n <= o.n_hi; ++n)
            for (int k = o.k_lo; k <= o.k_hi; ++k)
                add([=] { return verify_thm_k(n, k, o.max_degree); });

    if (suite == "spmult" || suite == "all")
        for (int m = std::max(1, o.m_lo); m <= std::min(3, o.m_hi); ++m)
            add([=] { return verify_sp_multiplicity(m, o.max_degree); });

    if (suite == "h3split" || suite == "all") {
        const int m = suite == "all" ? 2 : std::max(2, o.m_lo);
        add([=] { return verify_h3_split(m, o.max_degree); });
    }

    if (suite == "sp1" || suite == "all")
        for (int k = -6; k <= 6; ++k)
            add([=] { return verify_sp1_bundle(k, 12); });

    if (suite == "o2" || suite == "all")
        add([=] { return verify_o2_spaces(12); });

    if (suite == "paramsets" || suite == "all")
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for (int k = -8; k <= 8; ++k)
                    add([=] { return verify_param_sets(p, q, k); });

    if (suite == "support" || suite == "all") {
        const int d = std::min(o.max_degree, 4);
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; p + q <= 4 && q <= 3; ++q)
                for (int k = -2; k <= 2; ++k)
                    add([=] { return verify_support_h1(p, q, k, d); });
        for (int m = 1; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k)
                add([=] { return verify_support_h4(m, k, d); });
        for (int n = 3; n <= 4; ++n)
            for (int k = -2; k <= 2; ++k)
                add([=] { return verify_support_h5(n, k, d); });
        for (int k = -2; k <= 2; ++k)
            add([=] { return verify_support_h2(2, 2, k, d); });
    }

    if (suite == "all") {
        // Declared not finitely checkable; recorded as skipped annotations.
        const char* annotations[][2] = {
            {"annotation(plancherel-completeness)",
             "completeness of the continuous spectra is classical Plancherel theory"},
            {"annotation(mackey-unitarity)",
             "unitary equivalence of the open-orbit restriction is analytic input"},
            {"annotation(irreducibility-generic)",
             "irreducibility statements (e.g. generic t) have no finite oracle"},
            {"annotation(gk-minimality)",
             "Gelfand-Kirillov minimality is an asymptotic invariant"},
        };
        for (const auto& a : annotations) {
            std::string claim = a[0], reason = a[1];
            add([claim, reason] {
                detail::ReportBuilder rb(claim);
                rb.skip(reason);
                return rb.done();
            });
        }
    }

    if (cells.empty()) throw DomainError("unknown suite: " + suite);
    return cells;
}

// Run cells (in parallel when jobs > 1) and return reports sorted by claim id;
// the outcome is independent of the job count.
inline std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& o) {
    auto cells = suite_cells(suite, o);
    std::vector<Report> reports(cells.size());
    const int jobs = std::max(1, o.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) reports[i] = cells[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    reports[i] = cells[i]();
                }
            });
        for (auto& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.claim < b.claim; });
    return reports;
}

}  // namespace branchkit
