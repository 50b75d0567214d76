// branchkit: exact branching laws for the degenerate unitary principal series
// of GL(n,C), with a brute-force verification harness.
//
//   branchkit branch --n 4 --subgroup H2 --p 2 --q 2 --k 0 --emit json
//   branchkit verify --suite all --jobs 8 --emit json
//   branchkit dim --harmonic R:8:2
//
// Exit codes: 0 success, 1 verification failure, 2 usage/constraint error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "branchkit/branching.hpp"
#include "branchkit/json_io.hpp"
#include "branchkit/verify.hpp"

using namespace branchkit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (...) {
        throw UsageError("malformed range '" + s + "' (expected a or a..b)");
    }
}

Subgroup parse_subgroup(const std::string& s) {
    if (s == "K") return Subgroup::K;
    if (s == "H1") return Subgroup::H1;
    if (s == "H2") return Subgroup::H2;
    if (s == "H3") return Subgroup::H3;
    if (s == "H4") return Subgroup::H4;
    if (s == "H5") return Subgroup::H5;
    if (s == "H6") return Subgroup::H6;
    throw UsageError("unknown subgroup '" + s + "' (one of K,H1,H2,H3,H4,H5,H6)");
}

std::string measure_str(SpectrumComponent::Measure m) {
    return m == SpectrumComponent::Measure::Counting ? "counting" : "lebesgue";
}

void print_spectrum_text(const Spectrum& s, int truncate) {
    std::cout << "spectrum " << s.provenance << "\n";
    int idx = 0;
    for (const auto& c : s.components) {
        std::cout << "  [" << ++idx << "] " << c.group << "  " << c.series.str() << "  params "
                  << to_string(c.params) << "  mult " << c.multiplicity << "  "
                  << measure_str(c.measure) << "\n";
        if (truncate >= 0 && c.params.discrete() && !c.params.is_empty()) {
            std::string line;
            for (const auto& v : c.params.enumerate(64)) {
                Rat a = v < Rat(0) ? -v : v;
                if (rat(truncate) < a) break;
                line += (line.empty() ? "" : ", ") + to_string(v);
            }
            std::cout << "      listed: {" << line << "}\n";
        }
    }
}

int cmd_branch(int n, const std::string& sub, int k, const std::string& lambda, int p, int q,
               int m, int truncate, const std::string& emit) {
    BranchRequest r;
    r.n = n;
    r.subgroup = parse_subgroup(sub);
    r.k = k;
    r.lambda = parse_rational(lambda);

    Spectrum s;
    switch (r.subgroup) {
        case Subgroup::K:
            s = branch_to_K(r);
            break;
        case Subgroup::H1:
        case Subgroup::H2:
            if (p <= 0 || q <= 0)
                throw UsageError(sub + " requires --p and --q with p+q = n, p,q >= 1");
            r.p = p;
            r.q = q;
            s = r.subgroup == Subgroup::H1 ? branch_to_h1(r, p, q) : branch_to_h2(r, p, q);
            break;
        case Subgroup::H3:
        case Subgroup::H4: {
            int mm = m;
            if (mm <= 0) {
                if (n % 2 != 0)
                    throw DomainError(sub + " requires even n = 2m; got n = " +
                                      std::to_string(n));
                mm = n / 2;
            }
            r.m = mm;
            s = r.subgroup == Subgroup::H3 ? branch_to_h3(r, mm) : branch_to_h4(r, mm);
            break;
        }
        case Subgroup::H5:
            s = branch_to_h5(r);
            break;
        case Subgroup::H6:
            s = branch_to_h6(r);
            break;
    }

    if (emit == "json")
        std::cout << to_json(s).dump() << "\n";
    else
        print_spectrum_text(s, truncate);
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& n_range,
               const std::string& k_range, const std::string& m_range, int max_degree, int jobs,
               const std::string& emit) {
    SuiteOptions o;
    std::tie(o.n_lo, o.n_hi) = parse_range(n_range);
    std::tie(o.k_lo, o.k_hi) = parse_range(k_range);
    std::tie(o.m_lo, o.m_hi) = parse_range(m_range);
    o.max_degree = max_degree;
    o.jobs = jobs;
    if (o.max_degree < 0 || o.jobs < 1) throw UsageError("bad --max-degree/--jobs");

    auto reports = run_suite(suite, o);
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        if (r.status == Report::Status::Pass) ++pass;
        if (r.status == Report::Status::Fail) ++fail;
        if (r.status == Report::Status::Skipped) ++skip;
    }

    if (emit == "json") {
        std::cout << to_json(reports, /*deterministic=*/true).dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "[" << to_string(r.status) << "] " << r.claim << " (" << r.millis
                      << " ms)";
            if (!r.witness.empty()) {
                std::cout << "  witness:";
                for (const auto& [kk, vv] : r.witness) std::cout << " " << kk << "=" << vv;
            }
            if (!r.reason.empty()) std::cout << "  reason: " << r.reason;
            std::cout << "\n";
        }
        std::cout << "summary: " << pass << " pass, " << fail << " fail, " << skip
                  << " skipped\n";
    }
    return fail > 0 ? 1 : 0;
}

int cmd_dim(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() == 2 && parts[0] == "SU2") {
            std::cout << harmonic_dim(HarmonicLabel::SU2Rep(std::stoi(parts[1]))) << "\n";
            return 0;
        }
        if (parts.size() == 3 && parts[0] == "R") {
            std::cout << harmonic_dim(
                             HarmonicLabel::Real(std::stoi(parts[1]), std::stoi(parts[2])))
                      << "\n";
            return 0;
        }
        if (parts.size() == 4 && (parts[0] == "C" || parts[0] == "H")) {
            int a = std::stoi(parts[1]), b = std::stoi(parts[2]), c = std::stoi(parts[3]);
            auto label = parts[0] == "C" ? HarmonicLabel::Complex(a, b, c)
                                         : HarmonicLabel::Quaternionic(a, b, c);
            std::cout << harmonic_dim(label) << "\n";
            return 0;
        }
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        // fall through to the usage error below
    }
    throw UsageError("malformed --harmonic '" + spec +
                     "' (expected R:N:j, C:n:a:b, H:m:a:b, or SU2:j)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branchkit: exact branching spectra and verification"};
    app.require_subcommand(1);

    // branch
    auto* branch_cmd = app.add_subcommand("branch", "print the branching spectrum");
    int n = 2, k = 0, p = 0, q = 0, m = 0, truncate = -1;
    std::string sub, lambda = "0", emit = "text";
    branch_cmd->add_option("--n", n, "ambient GL(n,C)")->required();
    branch_cmd->add_option("--subgroup", sub, "K,H1,H2,H3,H4,H5,H6")->required();
    branch_cmd->add_option("--k", k, "line bundle winding");
    branch_cmd->add_option("--lambda", lambda, "rational a/b, the unitary parameter label");
    branch_cmd->add_option("--p", p, "first block size (H1,H2)");
    branch_cmd->add_option("--q", q, "second block size (H1,H2)");
    branch_cmd->add_option("--m", m, "half rank (H3,H4)");
    branch_cmd->add_option("--truncate", truncate, "list discrete families up to this index");
    branch_cmd->add_option("--emit", emit, "text|json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite, n_range = "2..4", k_range = "-3..3", m_range = "1..3",
                       vemit = "text";
    int max_degree = 6, jobs = 1;
    verify_cmd->add_option("--suite", suite, "thmK|spmult|h3split|sp1|o2|support|paramsets|all")
        ->required();
    verify_cmd->add_option("--n", n_range, "n grid, a or a..b");
    verify_cmd->add_option("--k", k_range, "k grid, a or a..b");
    verify_cmd->add_option("--m", m_range, "m grid, a or a..b");
    verify_cmd->add_option("--max-degree", max_degree, "harmonic degree cap");
    verify_cmd->add_option("--jobs", jobs, "parallel grid cells");
    verify_cmd->add_option("--emit", vemit, "text|json");

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "dimension of a harmonic space");
    std::string harmonic;
    dim_cmd->add_option("--harmonic", harmonic, "R:N:j | C:n:a:b | H:m:a:b | SU2:j")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*branch_cmd) {
            if (emit != "text" && emit != "json") throw UsageError("--emit must be text|json");
            return cmd_branch(n, sub, k, lambda, p, q, m, truncate, emit);
        }
        if (*verify_cmd) {
            if (vemit != "text" && vemit != "json") throw UsageError("--emit must be text|json");
            return cmd_verify(suite, n_range, k_range, m_range, max_degree, jobs, vemit);
        }
        if (*dim_cmd) return cmd_dim(harmonic);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
