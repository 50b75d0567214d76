// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] must be the path to the branchkit CLI (used by the determinism
// criterion, which byte-compares two full JSON verification runs).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "branchkit/json_io.hpp"
#include "branchkit/verify.hpp"

using namespace branchkit;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string name;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void expect_report(const Report& r) {
        if (r.status == Report::Status::Fail && ok) {
            ok = false;
            detail = r.claim;
            for (const auto& [k, v] : r.witness) detail += " " + k + "=" + v;
        }
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("[%d] %-58s %s (%lld ms)%s%s\n", id, name.c_str(), ok ? "PASS" : "FAIL",
                    static_cast<long long>(ms), detail.empty() ? "" : "  ", detail.c_str());
        if (!ok) ++failures;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    {
        Criterion c(1, "compact branching law, n=2..4, k=-3..3, degree<=6, <60s");
        for (int n = 2; n <= 4; ++n)
            for (int k = -3; k <= 3; ++k) c.expect_report(verify_thm_k(n, k, 6));
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - c.t0)
                      .count();
        c.expect(ms < 60'000, "runtime above 60 s");
        c.finish();
    }

    {
        Criterion c(2, "harmonic bidegree split with dimension identity, n<=4, j<=6");
        for (int n = 2; n <= 4 && c.ok; ++n) {
            const auto eigs = standard_eigenvalues(SO(2 * n));
            for (int j = 0; j <= 6 && c.ok; ++j) {
                auto res = restrict_char(real_harmonic_char(n, eigs, j), emb::u_in_so(n));
                auto d = decompose(res, U(n));
                Int dim_sum = 0;
                for (int a = 0; a <= j; ++a) {
                    auto hw = harmonic_weight(HarmonicLabel::Complex(n, a, j - a));
                    c.expect(d.multiplicity(hw.weight) == 1,
                             "missing bidegree piece at n=" + std::to_string(n) +
                                 " j=" + std::to_string(j));
                    dim_sum += weyl_dim(U(n), hw.weight);
                }
                c.expect(d.entries.size() == static_cast<std::size_t>(j + 1),
                         "extra constituents at j=" + std::to_string(j));
                c.expect(dim_sum == real_harmonic_dim_closed_form(2 * n, j),
                         "dimension identity failed at j=" + std::to_string(j));
            }
        }
        c.finish();
    }

    {
        Criterion c(3, "quaternionic multiplicity a-b+1, m<=3, j<=6");
        for (int m = 1; m <= 3; ++m) c.expect_report(verify_sp_multiplicity(m, 6));
        c.expect(Int(3) * weyl_dim(Sp(2), {2, 0}) + weyl_dim(Sp(2), {1, 1}) == 35,
                 "spot value m=2, j=2 is not 35");
        c.finish();
    }

    {
        Criterion c(4, "symplectic split 4Z vs 2+4Z, m=2, degree<=6");
        auto r = verify_h3_split(2, 6);
        c.expect_report(r);
        c.expect(r.status != Report::Status::Skipped, "stabilization not reached");
        std::string skipped = "?";
        for (const auto& [k, v] : r.params)
            if (k == "skipped_types") skipped = v;
        c.detail = (c.ok ? "skipped " + skipped : c.detail);
        c.finish();
    }

    {
        Criterion c(5, "Sp(1)/U(1) line bundles, |k|<=6, j<=12");
        for (int k = -6; k <= 6; ++k) c.expect_report(verify_sp1_bundle(k, 12));
        c.finish();
    }

    {
        Criterion c(6, "circle double cosets X1, X2 with dims, j<=12");
        c.expect_report(verify_o2_spaces(12));
        c.finish();
    }

    {
        Criterion c(7, "parameter sets vs direct enumeration, p,q<=4, |k|<=8");
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for (int k = -8; k <= 8; ++k) c.expect_report(verify_param_sets(p, q, k));
        c.finish();
    }

    {
        Criterion c(8, "support consistency H1/H4/H5 + H2 discrete sets, degree<=4");
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; p + q <= 4 && q <= 3; ++q)
                for (int k = -2; k <= 2; ++k) c.expect_report(verify_support_h1(p, q, k, 4));
        for (int m = 1; m <= 2; ++m)
            for (int k = -2; k <= 2; ++k) c.expect_report(verify_support_h4(m, k, 4));
        for (int n = 3; n <= 4; ++n)
            for (int k = -2; k <= 2; ++k) c.expect_report(verify_support_h5(n, k, 4));
        for (int k = -2; k <= 2; ++k) c.expect_report(verify_support_h2(2, 2, k, 4));
        c.finish();
    }

    {
        Criterion c(9, "deterministic JSON reports, jobs=1 vs jobs=8");
        if (cli.empty()) {
            c.expect(false, "no CLI path given (argv[1])");
        } else {
            auto dir = fs::temp_directory_path();
            auto f1 = dir / ("branchkit_accept_j1_" + std::to_string(::getpid()) + ".json");
            auto f8 = dir / ("branchkit_accept_j8_" + std::to_string(::getpid()) + ".json");
            std::string cmd1 =
                cli + " verify --suite all --jobs 1 --emit json > " + f1.string();
            std::string cmd8 =
                cli + " verify --suite all --jobs 8 --emit json > " + f8.string();
            c.expect(std::system(cmd1.c_str()) == 0, "jobs=1 run failed");
            c.expect(std::system(cmd8.c_str()) == 0, "jobs=8 run failed");
            if (c.ok) {
                auto a = slurp(f1), b = slurp(f8);
                c.expect(!a.empty() && a == b, "JSON outputs differ between job counts");
            }
            std::error_code ec;
            fs::remove(f1, ec);
            fs::remove(f8, ec);
        }
        c.finish();
    }

    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
