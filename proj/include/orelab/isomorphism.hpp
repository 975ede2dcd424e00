#pragma once

/**
 * @file isomorphism.hpp
 * @brief Backtracking ring-isomorphism search.
 *
 * A ring isomorphism is in particular an additive isomorphism, so it is fixed
 * by the images of an additive generating set. We pick generators greedily,
 * try images with matching element invariants, and extend along the additive
 * Cayley graph, rejecting on the first inconsistency.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/ideals.hpp"
#include "orelab/ring.hpp"

namespace orelab {

struct IsoResult
{
    std::optional<RingMap> map;
    /// Name of a distinguishing invariant when the search was cut short by one.
    std::string mismatch;

    explicit operator bool() const { return map.has_value(); }
};

class IsoBoundExceeded : public OrderBoundExceeded
{
    public:
        using OrderBoundExceeded::OrderBoundExceeded;
};

namespace detail {

/// Per-element invariants preserved by every ring isomorphism.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>>
element_signatures(const FiniteRing& R)
{
    auto ec = classify_elements(R);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>> sig(R.order());
    for (std::size_t i = 0; i < R.order(); ++i) {
        auto a = Elem(i);
        sig[i] = {R.additive_order(a), left_kernel(R, a).count(), right_kernel(R, a).count(),
                  ec.units.contains(a), ec.idempotents.contains(a), ec.center.contains(a)};
    }
    return sig;
}

inline std::vector<std::size_t> additive_shape(const FiniteRing& R)
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < R.order(); ++i)
        v.push_back(R.additive_order(Elem(i)));
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace detail

inline IsoResult ring_isomorphic(const RingPtr& A, const RingPtr& B, const Bounds& bounds = {})
{
    if (std::min(A->order(), B->order()) > bounds.iso)
        throw IsoBoundExceeded("ring_isomorphic", std::min(A->order(), B->order()), bounds.iso);
    if (A->order() != B->order())
        return {std::nullopt, "order"};
    if (detail::additive_shape(*A) != detail::additive_shape(*B))
        return {std::nullopt, "additive group"};
    auto ea = classify_elements(*A), eb = classify_elements(*B);
    if (ea.units.count() != eb.units.count())
        return {std::nullopt, "unit count"};
    if (ea.idempotents.count() != eb.idempotents.count())
        return {std::nullopt, "idempotent count"};
    if (A->characteristic() != B->characteristic())
        return {std::nullopt, "characteristic"};

    const std::size_t n = A->order();
    auto sa = detail::element_signatures(*A), sb = detail::element_signatures(*B);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return {std::nullopt, "element invariants"};
    }

    // Greedy additive generators of A, the identity first.
    std::vector<Elem> gens;
    ElementSet span = additive_span(*A, ElementSet(n, {A->one()}));
    gens.push_back(A->one());
    for (std::size_t x = 0; x < n; ++x)
        if (!span.contains(x)) {
            gens.push_back(Elem(x));
            span = extend_subgroup(*A, span, ElementSet(n, {Elem(x)}));
        }

    std::vector<Elem> image(n, Elem(n));
    std::vector<Elem> chosen(gens.size());

    // Rebuild the partial map from scratch for the first `k` generators.
    auto extend = [&](std::size_t k) -> bool {
        std::fill(image.begin(), image.end(), Elem(n));
        std::vector<Elem> used_by(n, Elem(n));
        image[A->zero()] = B->zero();
        used_by[B->zero()] = A->zero();
        std::vector<Elem> queue{A->zero()};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Elem x = queue[qi];
            for (std::size_t g = 0; g < k; ++g) {
                Elem y = A->add(x, gens[g]);
                Elem fy = B->add(image[x], chosen[g]);
                if (image[y] == n) {
                    if (used_by[fy] != n || sa[y] != sb[fy])
                        return false;
                    image[y] = fy;
                    used_by[fy] = y;
                    queue.push_back(y);
                } else if (image[y] != fy) {
                    return false;
                }
            }
        }
        // Multiplicativity on the part defined so far.
        for (auto x : queue)
            for (auto y : queue) {
                Elem xy = A->mul(x, y);
                if (image[xy] != n && image[xy] != B->mul(image[x], image[y]))
                    return false;
            }
        return true;
    };

    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == gens.size())
            return extend(k);
        for (std::size_t c = 0; c < n; ++c) {
            if (sa[gens[k]] != sb[c])
                continue;
            if (k == 0 && Elem(c) != B->one())
                continue;
            chosen[k] = Elem(c);
            if (extend(k + 1) && self(self, k + 1))
                return true;
        }
        return false;
    };

    if (!search(search, 0))
        return {std::nullopt, "no isomorphism (exhaustive search)"};
    RingMap m{A, B, image};
    ensure(m.is_isomorphism(), "isomorphism search returned a non-isomorphism");
    return {m, ""};
}

} // namespace orelab
