#pragma once

#include <cstdlib>
#include <string>

namespace branchkit {

// Global resource caps. The degree budget bounds the total exponent degree
// (sum of |entries| of the highest weight) accepted by the character engine;
// the rank cap bounds Weyl group enumeration.
struct Config {
    int degree_budget = 24;
    int rank_cap = 8;
};

// Default configuration; BRANCHKIT_DEGREE_CAP overrides the degree budget.
inline const Config& default_config() {
    static const Config cfg = [] {
        Config c;
        if (const char* env = std::getenv("BRANCHKIT_DEGREE_CAP")) {
            try {
                int v = std::stoi(env);
                if (v > 0) c.degree_budget = v;
            } catch (...) {
                // ignore malformed override, keep default
            }
        }
        return c;
    }();
    return cfg;
}

}  // namespace branchkit
