#pragma once

#include <random>
#include <string>
#include <vector>

#include "orelab/orelab.hpp"

#include "oracle.hpp"

namespace support {

inline const std::vector<std::string>& corpus()
{
    static const std::vector<std::string> c{
        "Z/2",         "Z/3",         "Z/4",         "Z/6",           "Z/8",
        "Z/12",        "F4",          "quot(poly(F2,3),{4})",         "prod(F2,F2)",
        "prod(F2,F3)", "prod(F2,F4)", "prod(F2,Z/6)", "prod(F2,tri(2,F2))", "tri(2,F2)",
        "opp(tri(2,F2))", "mat(2,F2)"};
    return c;
}

/// Random constructor expressions of order at most 16.
inline std::string random_expression(std::mt19937& rng)
{
    static const std::vector<std::string> atoms{"Z/2", "Z/3", "Z/4", "Z/5", "Z/9", "Z/10", "Z/16",
                                                "F2",  "F3",  "F4",  "F5",  "F7",  "F8",   "F9"};
    static const std::vector<std::string> shaped{
        "poly(F2,2)", "poly(F2,3)", "poly(F3,2)", "poly(Z/4,2)", "tri(2,F2)", "opp(tri(2,F2))", "mat(2,F2)",
        "quot(poly(F2,4),{8})", "quot(Z/12,{4})", "quot(tri(2,F2),{2})", "poly(F4,2)"};
    std::uniform_int_distribution<int> kind(0, 3);
    auto pick = [&](const std::vector<std::string>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    switch (kind(rng)) {
        case 0:
            return pick(atoms);
        case 1:
            return pick(shaped);
        case 2: {
            static const std::vector<std::string> small{"F2", "F3", "Z/2", "Z/3", "Z/4", "F4", "poly(F2,2)"};
            return "prod(" + pick(small) + "," + pick(small) + ")";
        }
        default:
            return "opp(" + pick(shaped) + ")";
    }
}

inline orelab::ElementSet from_mask(oracle::Mask m, std::size_t n)
{
    orelab::ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i)
        if (oracle::has(m, i))
            s.insert(i);
    return s;
}

inline std::vector<oracle::Mask> masks(const std::vector<orelab::ElementSet>& v)
{
    std::vector<oracle::Mask> out;
    for (const auto& s : v)
        out.push_back(oracle::to_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<oracle::Mask> masks(const std::vector<orelab::DenominatorSetRecord>& v)
{
    std::vector<oracle::Mask> out;
    for (const auto& s : v)
        out.push_back(oracle::to_mask(s.set));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace support
