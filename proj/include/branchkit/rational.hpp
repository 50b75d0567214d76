#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

#include "branchkit/errors.hpp"

namespace branchkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

// Canonical form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rat& q) {
    std::string s = q.numerator().str();
    if (q.denominator() != 1) s += "/" + q.denominator().str();
    return s;
}

// Accepts "a", "a/b", optionally signed. Exact; no floating point.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw DomainError("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s), Int(1));
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        Int n(num), d(den);
        if (d == 0) bad();
        // boost::rational<cpp_int> rejects negative denominators at construction
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rat(n, d);
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        bad();
    }
    return Rat();  // unreachable
}

// Parity as elements of Z/2; only meaningful for integers.
inline int parity(const Rat& q) {
    if (!is_integer(q)) throw DomainError("parity of non-integer rational");
    return static_cast<int>(q.numerator() % 2 != 0);
}

}  // namespace branchkit
