#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/rational.hpp"

namespace branchkit {

// ---------------------------------------------------------------------------
// Exact parameter sets: the index sets of discrete families and the domains
// of direct integrals. All parameters are exact rationals (for points on the
// unitary axis the stored value is the imaginary part).

struct ParamSet {
    enum class Kind { Empty, Finite, Progression, ImaginaryHalfLine, Interval };

    Kind kind = Kind::Empty;
    std::vector<Rat> values;  // Finite: sorted, duplicate-free
    Rat base, step;           // Progression: { base + k*step : k in N }, unbounded
    std::optional<Rat> lo, hi;  // Interval: open interval, nullopt = +-infinity

    static ParamSet empty() { return ParamSet{}; }

    static ParamSet finite(std::vector<Rat> vals) {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.empty()) return empty();
        ParamSet p;
        p.kind = Kind::Finite;
        p.values = std::move(vals);
        return p;
    }

    // Arithmetic progression { first + k*step : k >= 0 }, infinite.
    static ParamSet arithmetic(const Rat& first, const Rat& step_) {
        if (step_ == Rat(0)) throw DomainError("progression step must be nonzero");
        ParamSet p;
        p.kind = Kind::Progression;
        p.base = first;
        p.step = step_;
        return p;
    }

    // Progression restricted to an open interval (lo, hi); endpoints may be
    // absent (unbounded). Normalizes: empty intersection -> Empty, finitely
    // many members -> Finite, otherwise an unbounded progression starting at
    // the first member inside the interval.
    static ParamSet progression(const Rat& base_, const Rat& step_,
                                const std::optional<Rat>& lo_,
                                const std::optional<Rat>& hi_) {
        if (step_ == Rat(0)) throw DomainError("progression step must be nonzero");
        auto inside = [&](const Rat& t) {
            if (lo_ && !(*lo_ < t)) return false;
            if (hi_ && !(t < *hi_)) return false;
            return true;
        };
        // Walk toward the interval if needed, then collect.
        Rat t = base_;
        const bool increasing = step_ > Rat(0);
        // If the interval is bounded in the step direction the set is finite.
        const bool bounded_ahead = increasing ? hi_.has_value() : lo_.has_value();
        // Advance until inside (or provably past).
        long guard = 0;
        while (!inside(t)) {
            if (increasing && hi_ && !(t < *hi_)) return empty();
            if (!increasing && lo_ && !(*lo_ < t)) return empty();
            t += step_;
            if (++guard > 1'000'000) throw ResourceLimitError("progression normalization runaway");
        }
        if (!bounded_ahead) return arithmetic(t, step_);
        std::vector<Rat> vals;
        while (inside(t)) {
            vals.push_back(t);
            t += step_;
            if (++guard > 1'000'000) throw ResourceLimitError("progression normalization runaway");
        }
        return finite(std::move(vals));
    }

    static ParamSet imaginary_half_line() {
        ParamSet p;
        p.kind = Kind::ImaginaryHalfLine;
        return p;
    }

    // Open continuous interval (lo, hi); used for whole-line integrals.
    static ParamSet interval(const std::optional<Rat>& lo_, const std::optional<Rat>& hi_) {
        ParamSet p;
        p.kind = Kind::Interval;
        p.lo = lo_;
        p.hi = hi_;
        return p;
    }

    bool is_empty() const { return kind == Kind::Empty; }
    bool discrete() const {
        return kind == Kind::Empty || kind == Kind::Finite || kind == Kind::Progression;
    }
    bool continuous() const {
        return kind == Kind::ImaginaryHalfLine || kind == Kind::Interval;
    }

    // Membership for discrete sets.
    bool contains(const Rat& t) const {
        switch (kind) {
            case Kind::Empty: return false;
            case Kind::Finite: return std::binary_search(values.begin(), values.end(), t);
            case Kind::Progression: {
                Rat d = (t - base) / step;
                return is_integer(d) && d.numerator() >= 0;
            }
            default: throw DomainError("contains: not a discrete parameter set");
        }
    }

    // First members of a discrete set (all of them for finite sets).
    std::vector<Rat> enumerate(std::size_t max_count) const {
        switch (kind) {
            case Kind::Empty: return {};
            case Kind::Finite: {
                auto v = values;
                if (v.size() > max_count) v.resize(max_count);
                return v;
            }
            case Kind::Progression: {
                std::vector<Rat> v;
                Rat t = base;
                for (std::size_t i = 0; i < max_count; ++i, t += step) v.push_back(t);
                return v;
            }
            default: throw DomainError("enumerate: not a discrete parameter set");
        }
    }

    bool operator==(const ParamSet&) const = default;
};

inline std::string to_string(const ParamSet& p) {
    switch (p.kind) {
        case ParamSet::Kind::Empty: return "{}";
        case ParamSet::Kind::Finite: {
            std::string s = "{";
            for (std::size_t i = 0; i < p.values.size(); ++i)
                s += (i ? "," : "") + to_string(p.values[i]);
            return s + "}";
        }
        case ParamSet::Kind::Progression:
            return "{" + to_string(p.base) + " + k*" + to_string(p.step) + " : k>=0}";
        case ParamSet::Kind::ImaginaryHalfLine: return "i*R_+";
        case ParamSet::Kind::Interval: {
            auto end = [](const std::optional<Rat>& e, const char* inf) {
                return e ? to_string(*e) : std::string(inf);
            };
            return "(" + end(p.lo, "-inf") + "," + end(p.hi, "inf") + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// The parameter sets of the discrete series in the decompositions.

// A_+^k(p,q): (k+n+1+2Z) cap (-inf,0) for p>1, and cap (-(|k|-q),0) for p=1,
// with the convention that (x,0) is empty for x >= 0.
inline ParamSet a_plus_set(int p, int q, int k) {
    if (p < 1 || q < 1) throw DomainError("a_plus_set requires p,q >= 1");
    const int n = p + q;
    const int par = (((k + n + 1) % 2) + 2) % 2;  // class mod 2
    const Rat first = rat(par == 0 ? -2 : -1);
    if (p > 1) return ParamSet::arithmetic(first, rat(-2));
    return ParamSet::progression(first, rat(-2), rat(-(std::abs(k) - q)), rat(0));
}

inline ParamSet a_minus_set(int p, int q, int k) { return a_plus_set(q, p, k); }

// Discrete parameters of the line-bundle decomposition over the upper half
// plane: { t > 0 : t in |k| - 1 - 2N }.
inline ParamSet gl2r_discrete_params(int k) {
    std::vector<Rat> vals;
    for (int t = std::abs(k) - 1; t > 0; t -= 2) vals.push_back(rat(t));
    return ParamSet::finite(std::move(vals));
}

// ---------------------------------------------------------------------------
// Spectra: symbolic right-hand sides of the branching laws.

// Structured series label, serialized as name(key=value,...). Values are
// canonical strings (integers, rationals, signs) and must not contain
// commas or parentheses.
struct SeriesTag {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args;

    void set(const std::string& key, const std::string& value) { args.emplace_back(key, value); }

    std::optional<std::string> get(const std::string& key) const {
        for (const auto& [k, v] : args)
            if (k == key) return v;
        return std::nullopt;
    }

    std::string str() const {
        std::string s = name;
        if (!args.empty()) {
            s += "(";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) s += ",";
                s += args[i].first + "=" + args[i].second;
            }
            s += ")";
        }
        return s;
    }

    static SeriesTag parse(const std::string& s) {
        SeriesTag t;
        auto open = s.find('(');
        if (open == std::string::npos) {
            t.name = s;
            return t;
        }
        if (s.back() != ')') throw DomainError("malformed series tag: " + s);
        t.name = s.substr(0, open);
        std::string body = s.substr(open + 1, s.size() - open - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("malformed series arg: " + item);
            t.args.emplace_back(item.substr(0, eq), item.substr(eq + 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return t;
    }

    bool operator==(const SeriesTag&) const = default;
};

struct SpectrumComponent {
    enum class Measure { Counting, Lebesgue };

    std::string group;  // real-group label, e.g. "U(2,2)", "GL(2,H)", "GL(3,R)"
    SeriesTag series;
    ParamSet params;
    int multiplicity = 1;
    Measure measure = Measure::Counting;

    void validate() const {
        if (multiplicity < 1) throw DomainError("component multiplicity must be >= 1");
        const bool leb = (measure == Measure::Lebesgue);
        if (leb != params.continuous())
            throw DomainError("measure/params mismatch on component " + series.str());
    }

    bool operator==(const SpectrumComponent&) const = default;
};

struct Spectrum {
    std::string provenance;
    std::vector<SpectrumComponent> components;

    bool operator==(const Spectrum&) const = default;
};

// Canonical sort key for deterministic component ordering.
inline std::string sort_key(const SpectrumComponent& c) {
    return c.group + "|" + c.series.str() + "|" + to_string(c.params);
}

// Merge duplicate (group, series, params) components, summing multiplicities;
// output deterministically ordered. Idempotent.
inline Spectrum merge(const Spectrum& s) {
    std::map<std::string, SpectrumComponent> acc;
    for (const auto& c : s.components) {
        c.validate();
        auto key = sort_key(c);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, c);
        else
            it->second.multiplicity += c.multiplicity;
    }
    Spectrum out;
    out.provenance = s.provenance;
    for (auto& [k, c] : acc) out.components.push_back(std::move(c));
    return out;
}

}  // namespace branchkit
