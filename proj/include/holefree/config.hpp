#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace holefree {

/// Vertex limit for a brute-force oracle: HOLEFREE_ORACLE_LIMIT when set to a
/// positive integer, `fallback` otherwise.
inline int oracle_limit(int fallback) {
    if (const char* env = std::getenv("HOLEFREE_ORACLE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 62) return static_cast<int>(v);
    }
    return fallback;
}

inline constexpr int kSeparatorOracleLimit = 14;
inline constexpr int kPmcOracleLimit = 14;
inline constexpr int kMwisOracleLimit = 20;

enum class Strategy { Bt, Subexp1, Subexp2, Brute, Auto };

struct SolverConfig {
    Strategy strategy = Strategy::Auto;
    /// Caps on separator and PMC counts for the pipeline; 0 = unlimited.
    std::size_t cap_separators = 0;
    std::size_t cap_pmcs = 0;
    /// Below this many vertices the prism-branching solver calls brute force.
    int subexp1_floor = 25;
    /// Largest bag the tree-decomposition dynamic program accepts.
    int max_bag_size = 25;
    int brute_limit = oracle_limit(kMwisOracleLimit);
};

}  // namespace holefree
