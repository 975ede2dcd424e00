#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "orelab/element_set.hpp"

namespace orelab {

/// Order bounds. These are configuration; kMaxOrder is the only hard limit.
struct Bounds
{
    /// Largest ring for which full profiles are computed.
    std::size_t profile = 256;
    /// Largest ring for which exhaustive subset enumeration runs.
    std::size_t oracle = 12;
    /// Largest ring for which isomorphism search runs.
    std::size_t iso = 64;
    /// Largest ring for which ideal-family sweeps (subfamilies of all ideals) run.
    std::size_t family = 8;

    /// Defaults overridden by ORELAB_PROFILE_BOUND, ORELAB_ORACLE_BOUND, ORELAB_ISO_BOUND.
    static Bounds from_environment()
    {
        Bounds b;
        auto read = [](const char* name, std::size_t& slot) {
            if (const char* v = std::getenv(name)) {
                try {
                    slot = static_cast<std::size_t>(std::stoul(v));
                } catch (...) {
                }
            }
        };
        read("ORELAB_PROFILE_BOUND", b.profile);
        read("ORELAB_ORACLE_BOUND", b.oracle);
        read("ORELAB_ISO_BOUND", b.iso);
        if (b.profile > kMaxOrder)
            b.profile = kMaxOrder;
        return b;
    }
};

} // namespace orelab
