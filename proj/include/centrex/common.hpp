#ifndef CENTREX_COMMON_HPP_
#define CENTREX_COMMON_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace centrex {

using NodeId = std::uint32_t;
using Distance = std::uint32_t;

// Sentinel for "no path". A dedicated maximal value, never derived from n,
// so hop sums can saturate instead of overflowing.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Hop addition with an absorbing sentinel: any operand at kUnreachable keeps
// the result there. Finite distances are bounded by n, so the sum never wraps.
inline constexpr Distance hop_add(Distance a, Distance b) {
    return (a == kUnreachable || b == kUnreachable) ? kUnreachable : a + b;
}

inline constexpr Distance hop_add(Distance a, Distance b, Distance c) {
    return hop_add(hop_add(a, b), c);
}

struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Input or file-format problem: CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance violates its invariants: CLI exit code 2. Carries every violation
// found, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string> &issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string> &issues) {
        std::string out;
        for (const auto &issue : issues) {
            if (!out.empty())
                out += "; ";
            out += issue;
        }
        return out.empty() ? std::string("validation failed") : out;
    }

    std::vector<std::string> issues_;
};

// A size guard refused to run (combinatorial blowup, sampling stall):
// CLI exit code 3.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace centrex

#endif // CENTREX_COMMON_HPP_
