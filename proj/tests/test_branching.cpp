#include <catch2/catch_amalgamated.hpp>

#include "branchkit/branching.hpp"

using namespace branchkit;

namespace {
BranchRequest req(int n, Subgroup s, int k, Rat lambda = Rat(0)) {
    BranchRequest r;
    r.n = n;
    r.subgroup = s;
    r.k = k;
    r.lambda = lambda;
    return r;
}

const SpectrumComponent* find_series(const Spectrum& s, const std::string& name,
                                     const std::string& sign = "") {
    for (const auto& c : s.components)
        if (c.series.name == name && (sign.empty() || c.series.get("sign") == sign)) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("branch to K", "[branching]") {
    auto s = branch_to_K(req(2, Subgroup::K, 0));
    REQUIRE(s.components.size() == 1);
    const auto& c = s.components[0];
    CHECK(c.group == "U(2)");
    CHECK(c.params == ParamSet::arithmetic(rat(0), rat(2)));

    auto kt = ktype_support(c, 2);
    REQUIRE(kt.mult.size() == 2);
    CHECK(kt.mult.at({0, 0}) == 1);
    CHECK(kt.mult.at({1, -1}) == 1);
    CHECK(weyl_dim(kt.group, {0, 0}) == 1);
    CHECK(weyl_dim(kt.group, {1, -1}) == 3);

    // k = -2 over U(3): types H^{b+2,b}, lowest degree 2
    auto s2 = branch_to_K(req(3, Subgroup::K, -2));
    CHECK(s2.components[0].params == ParamSet::arithmetic(rat(2), rat(2)));
    auto kt2 = ktype_support(s2.components[0], 4);
    CHECK(kt2.mult.size() == 2);  // (2,0,0) and (3,0,-1)
    CHECK(kt2.mult.count({2, 0, 0}) == 1);
    CHECK(kt2.mult.count({3, 0, -1}) == 1);
}

TEST_CASE("branch to H1", "[branching]") {
    auto r = req(2, Subgroup::H1, 0);
    auto s = branch_to_h1(r, 1, 1, 2);
    CHECK(s.components.size() == 5);  // k' in [-2..2]
    for (const auto& c : s.components) {
        CHECK(c.group == "GL(1,C)xGL(1,C)");
        CHECK(c.measure == SpectrumComponent::Measure::Lebesgue);
        CHECK(c.params.kind == ParamSet::Kind::Interval);
        const int kp = std::stoi(*c.series.get("kp"));
        const int kq = std::stoi(*c.series.get("kq"));
        CHECK(kp + kq == r.k);
    }

    // index bookkeeping: k' = 1 pairs with k - k' = 2 for k = 3
    auto s3 = branch_to_h1(req(4, Subgroup::H1, 3), 2, 2, 3);
    bool found = false;
    for (const auto& c : s3.components)
        if (c.series.get("kp") == "1") {
            CHECK(c.series.get("kq") == "2");
            found = true;
        }
    CHECK(found);

    CHECK_THROWS_AS(branch_to_h1(req(3, Subgroup::H1, 0), 2, 2), DomainError);
}

TEST_CASE("branch to H2, p=q=2", "[branching]") {
    auto s = branch_to_h2(req(4, Subgroup::H2, 0), 2, 2);
    REQUIRE(s.components.size() == 3);
    auto* plus = find_series(s, "subquotient", "+");
    auto* minus = find_series(s, "subquotient", "-");
    auto* cont = find_series(s, "principal");
    REQUIRE(plus);
    REQUIRE(minus);
    REQUIRE(cont);
    CHECK(plus->params == a_plus_set(2, 2, 0));
    CHECK(minus->params == a_plus_set(2, 2, 0));
    CHECK(cont->multiplicity == 2);
    CHECK(cont->params == ParamSet::imaginary_half_line());
}

TEST_CASE("branch to H2, q=1 case analysis", "[branching]") {
    // (3,1), k=0: no minus side, complementary at t=-1, big from t=-3 down.
    auto s = branch_to_h2(req(4, Subgroup::H2, 0), 3, 1);
    CHECK(find_series(s, "small") == nullptr);
    auto* compl_ = find_series(s, "complementary", "+");
    auto* big = find_series(s, "big", "+");
    REQUIRE(compl_);
    REQUIRE(big);
    CHECK(compl_->params == ParamSet::finite({rat(-1)}));
    CHECK(big->params == ParamSet::arithmetic(rat(-3), rat(-2)));

    // (3,1), k=6: small subquotients on the minus side (|k| > p and parity fits)
    auto s6 = branch_to_h2(req(4, Subgroup::H2, 6), 3, 1);
    auto* small = find_series(s6, "small", "-");
    REQUIRE(small);
    CHECK(small->params == ParamSet::finite({rat(-1)}));
    // all of the plus side is big: complementary range is empty for |k| >= p
    CHECK(find_series(s6, "complementary") == nullptr);
    REQUIRE(find_series(s6, "big", "+"));
}

TEST_CASE("branch to H3", "[branching]") {
    CHECK(branch_to_h3(req(4, Subgroup::H3, 0, rat(1)), 2).components.size() == 1);
    CHECK(branch_to_h3(req(4, Subgroup::H3, 0, rat(0)), 2).components.size() == 2);
    CHECK(branch_to_h3(req(4, Subgroup::H3, 3, rat(0)), 2).components.size() == 1);
    CHECK_THROWS_AS(branch_to_h3(req(3, Subgroup::H3, 0), 1), DomainError);
}

TEST_CASE("branch to H4", "[branching]") {
    auto s = branch_to_h4(req(2, Subgroup::H4, 1), 1);
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].group == "GL(1,H)");
    CHECK(s.components[0].params.enumerate(3) == std::vector<Rat>{rat(1), rat(3), rat(5)});

    auto s2 = branch_to_h4(req(4, Subgroup::H4, -2), 2);
    CHECK(s2.components[0].params.enumerate(3) == std::vector<Rat>{rat(2), rat(4), rat(6)});

    auto s0 = branch_to_h4(req(4, Subgroup::H4, 0), 2);
    CHECK(s0.components[0].params.enumerate(3) == std::vector<Rat>{rat(0), rat(2), rat(4)});
}

TEST_CASE("branch to H5", "[branching]") {
    auto s = branch_to_h5(req(3, Subgroup::H5, 0), 6);
    REQUIRE(s.components.size() == 4);  // j = 0,2,4,6
    for (const auto& c : s.components) {
        CHECK(c.measure == SpectrumComponent::Measure::Lebesgue);
        CHECK(std::stoi(*c.series.get("j")) % 2 == 0);
    }
    auto s1 = branch_to_h5(req(3, Subgroup::H5, 1), 6);
    for (const auto& c : s1.components) CHECK(std::stoi(*c.series.get("j")) % 2 == 1);

    CHECK_THROWS_AS(branch_to_h5(req(2, Subgroup::H5, 0)), DomainError);
}

TEST_CASE("branch to H6", "[branching]") {
    auto s = branch_to_h6(req(3, Subgroup::H6, 4));
    auto* ds = find_series(s, "ind_p1_ds");
    auto* cont = find_series(s, "ind_p2");
    REQUIRE(ds);
    REQUIRE(cont);
    CHECK(ds->params == ParamSet::finite({rat(1), rat(3)}));
    CHECK(cont->multiplicity == 2);

    CHECK(find_series(branch_to_h6(req(3, Subgroup::H6, 0)), "ind_p1_ds") == nullptr);
    CHECK(find_series(branch_to_h6(req(3, Subgroup::H6, 1)), "ind_p1_ds") == nullptr);

    CHECK_THROWS_WITH(branch_to_h6(req(2, Subgroup::H6, 0)),
                      Catch::Matchers::ContainsSubstring("p=q=1"));
}

TEST_CASE("U(2,2) subquotient K-types", "[branching][ktypes]") {
    auto s = branch_to_h2(req(4, Subgroup::H2, 0), 2, 2);
    auto* plus = find_series(s, "subquotient", "+");
    REQUIRE(plus);
    auto kt = ktype_support_at(*plus, rat(-1), 2);
    CHECK(kt.mult.count({1, -1, 0, 0}) == 1);  // H^{1,1}(C^2) (x) H^{0,0}(C^2)
    // central character: sum of entries = -k = 0
    for (const auto& [w, m] : kt.mult) {
        int sum = 0;
        for (int x : w) sum += x;
        CHECK(sum == 0);
    }

    // disjointness of the two sides at fixed t
    auto* minus = find_series(s, "subquotient", "-");
    auto ktm = ktype_support_at(*minus, rat(-1), 4);
    auto ktp = ktype_support_at(*plus, rat(-1), 4);
    for (const auto& [w, m] : ktm.mult) CHECK(ktp.mult.count(w) == 0);
    CHECK_FALSE(ktm.mult.empty());
    CHECK_FALSE(ktp.mult.empty());
}

TEST_CASE("Sp(m,C) split K-types", "[branching][ktypes]") {
    auto s = branch_to_h3(req(4, Subgroup::H3, 0, rat(0)), 2);
    auto* plus = find_series(s, "ps_split", "+");
    auto* minus = find_series(s, "ps_split", "-");
    REQUIRE(plus);
    REQUIRE(minus);

    auto ktm = ktype_support(*minus, 2);
    REQUIRE(ktm.mult.size() == 1);
    CHECK(ktm.mult.count({2, 0}) == 1);

    auto ktp = ktype_support(*plus, 2);
    CHECK(ktp.mult.count({0, 0}) == 1);
    CHECK(ktp.mult.count({1, 1}) == 1);
    CHECK(ktp.mult.count({2, 2}) == 0);  // degree 4 > 2

    // disjoint, and their union is all alpha >= beta with alpha-beta even
    auto ktp4 = ktype_support(*plus, 4);
    auto ktm4 = ktype_support(*minus, 4);
    for (const auto& [w, m] : ktm4.mult) CHECK(ktp4.mult.count(w) == 0);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            if (b > a || (a - b) % 2 != 0) continue;
            Weight w{a, b};
            CHECK(ktp4.mult.count(w) + ktm4.mult.count(w) == 1);
        }
}

TEST_CASE("GL(m,H) component K-types", "[branching][ktypes]") {
    // m = 1: the component at j is exactly V_j.
    auto s = branch_to_h4(req(2, Subgroup::H4, 1), 1);
    auto kt = ktype_support_at(s.components[0], rat(3), 5);
    REQUIRE(kt.mult.size() == 1);
    CHECK(kt.mult.at({3}) == 1);

    // m = 2, j = 0: types with a Sp(1)xSp(1)-invariant vector
    auto s2 = branch_to_h4(req(4, Subgroup::H4, 0), 2);
    auto kt2 = ktype_support_at(s2.components[0], rat(0), 2);
    CHECK(kt2.mult.count({0, 0}) == 1);
    CHECK(kt2.mult.count({1, 1}) == 1);
    CHECK(kt2.mult.count({2, 0}) == 0);

    // whole component sums over j of the right parity: for k = 0 the odd type
    // (1,0) never appears, for k = 1 it comes from j = 1
    auto full = ktype_support(s2.components[0], 2);
    CHECK(full.mult.count({1, 0}) == 0);
    auto s2k1 = branch_to_h4(req(4, Subgroup::H4, 1), 2);
    auto fullk1 = ktype_support(s2k1.components[0], 2);
    CHECK(fullk1.mult.count({1, 0}) == 1);
    CHECK(fullk1.mult.count({0, 0}) == 0);
}

TEST_CASE("O(n,C) component K-types", "[branching][ktypes]") {
    auto s = branch_to_h5(req(3, Subgroup::H5, 0), 4);
    // pi_{t,0}: SO(3)-types (s) with weight 0: all s
    auto* j0 = find_series(s, "ind_o2");
    REQUIRE(j0);
    auto kt = ktype_support(*j0, 3);
    CHECK(kt.mult.count({0}) == 1);
    CHECK(kt.mult.count({1}) == 1);
    CHECK(kt.mult.count({3}) == 1);
    // pi_{t,2}: needs weight 2: s >= 2
    for (const auto& c : s.components)
        if (c.series.get("j") == "2") {
            auto kt2 = ktype_support(c, 3);
            CHECK(kt2.mult.count({0}) == 0);
            CHECK(kt2.mult.count({1}) == 0);
            CHECK(kt2.mult.count({2}) == 1);
            CHECK(kt2.mult.count({3}) == 1);
        }
}

TEST_CASE("GL(n,R) component K-types", "[branching][ktypes]") {
    auto s = branch_to_h6(req(3, Subgroup::H6, 4));
    auto* ds = find_series(s, "ind_p1_ds");
    REQUIRE(ds);
    // at t = 3: O(2)-types H^j, j > 3, j even: SO(3)-types (s), s >= 4
    auto kt = ktype_support_at(*ds, rat(3), 5);
    CHECK(kt.mult.count({3}) == 0);
    CHECK(kt.mult.count({4}) == 1);
    CHECK(kt.mult.count({5}) == 1);

    auto* cont = find_series(s, "ind_p2");
    REQUIRE(cont);
    // SO(1)-spherical at the SO-level: every type
    auto ktc = ktype_support(*cont, 2);
    CHECK(ktc.mult.count({0}) == 1);
    CHECK(ktc.mult.count({1}) == 1);
    CHECK(ktc.mult.count({2}) == 1);
}

TEST_CASE("no K-type oracle is an explicit error", "[branching][ktypes]") {
    SpectrumComponent c;
    c.group = "X";
    c.series.name = "mystery";
    c.params = ParamSet::finite({rat(0)});
    CHECK_THROWS_AS(ktype_support(c, 2), NoKTypeOracleError);
}

TEST_CASE("branch dispatcher and validation", "[branching]") {
    BranchRequest r;
    r.n = 4;
    r.subgroup = Subgroup::H2;
    r.p = 2;
    r.q = 2;
    r.k = 0;
    CHECK(branch(r).components.size() == 3);
    r.subgroup = Subgroup::H3;
    r.m = 2;
    CHECK(branch(r).components.size() == 2);
    r.m = 1;
    CHECK_THROWS_AS(branch(r), DomainError);
}
