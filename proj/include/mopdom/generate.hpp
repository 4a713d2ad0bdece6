#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mopdom/mop.hpp"

namespace mopdom {

/// Code canonical under rotation and reflection of the boundary labeling.
struct CanonicalCode {
    std::vector<uint16_t> code;

    auto operator<=>(const CanonicalCode&) const = default;
    std::string str() const;
};

/// Streams all Catalan(n-2) triangulations of the n-gon in a fixed
/// deterministic order.  3 <= n <= 16.
void enumerate_triangulations(int n, const std::function<void(const Mop&)>& emit);

/// Convenience wrapper materializing the stream.
std::vector<Mop> all_triangulations(int n);

CanonicalCode canonical_form(const Mop& m);

/// Uniform random triangulation via exact Catalan-weighted apex choice.
Mop random_mop(int n, uint64_t seed);

/// Named families: "fan" (all diagonals at vertex 0) and "serpentine"
/// (zig-zag strip; path dual, max degree 4).
Mop family(const std::string& name, int n);

}  // namespace mopdom
