#ifndef SUPERTREES_HARNESS_HPP
#define SUPERTREES_HARNESS_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "supertrees/report.hpp"
#include "supertrees/spectral.hpp"

namespace supertrees {

// Range text: "a..b" or a single endpoint; endpoints are integers or
// d-relative expressions ("d", "d+2", "d-1") resolved against a diameter
// in scope.  A grid is a comma-separated list of name=range dimensions,
// e.g. "k=3,d=3..5,m=d+1..d+3,instances=200".
// Pass no_diameter_context when no diameter is in scope; d-relative
// endpoints then raise BadParams.
inline constexpr int no_diameter_context = std::numeric_limits<int>::min();

std::vector<int> resolve_range(const std::string& text, int d_context);

struct Grid {
    std::string raw;
    std::map<std::string, std::string> dims;

    static Grid parse(const std::string& text);

    bool has(const std::string& name) const { return dims.count(name) != 0; }

    // Values of a dimension, falling back to `fallback` when absent.
    std::vector<int> values(const std::string& name, const std::string& fallback,
                            int d_context) const;

    // Single-valued dimension (e.g. instances=200).
    int scalar(const std::string& name, int fallback) const;
};

// Claim ids accepted by verify(), in presentation order.
const std::vector<std::string>& known_claims();

// Runs the numeric check for one claim over a parameter grid.  Randomized
// claims draw instances deterministically from `seed`.
Report verify(const std::string& claim_id, const Grid& grid,
              const SolverOptions& opts = {}, std::uint64_t seed = 1);

// Ranks every diameter-d class in the grid and reports whether the
// second-largest spectral radius is attained by the predicted family.
Report conjecture_scan(const std::string& d_range, const std::string& m_range,
                       const std::string& k_range, const SolverOptions& opts = {});

} // namespace supertrees

#endif // SUPERTREES_HARNESS_HPP
