#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings given by operation tables, ring maps, and element-level
 *        structure (units, regular elements, idempotents, kernels).
 *
 * A FiniteRing is immutable once FiniteRing::make has validated every ring
 * axiom exhaustively. Rings are shared through RingPtr; everything else in the
 * library is a pure function of the tables.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orelab/element_set.hpp"
#include "orelab/errors.hpp"

namespace orelab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing
{
    public:
        /**
         * Validate and wrap the tables. `factors` is non-empty only for rings
         * built as a direct product; the element index of a product is then the
         * mixed-radix number whose most significant digit is the first factor.
         *
         * Throws AxiomViolation naming the first failing element triple.
         */
        static RingPtr make(std::string name, std::string provenance, std::size_t order,
                            std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                            std::vector<RingPtr> factors = {})
        {
            auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
            r->n_ = order;
            r->add_ = std::move(add);
            r->mul_ = std::move(mul);
            r->zero_ = zero;
            r->one_ = one;
            r->name_ = std::move(name);
            r->provenance_ = std::move(provenance);
            r->factors_ = std::move(factors);
            r->validate();
            return r;
        }

        std::size_t order() const { return n_; }
        Elem zero() const { return zero_; }
        Elem one() const { return one_; }
        const std::string& name() const { return name_; }
        const std::string& provenance() const { return provenance_; }

        Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
        Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
        Elem neg(Elem a) const { return neg_[a]; }
        Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

        std::span<const Elem> add_table() const { return add_; }
        std::span<const Elem> mul_table() const { return mul_; }

        ElementSet all() const { return ElementSet::full(n_); }
        ElementSet none() const { return ElementSet(n_); }
        ElementSet zero_set() const { return ElementSet(n_, {zero_}); }

        /// Factor rings when built by prod(...), empty otherwise.
        const std::vector<RingPtr>& factors() const { return factors_; }
        bool is_product() const { return !factors_.empty(); }

        /// Component of a product element in factor i.
        Elem component(Elem e, std::size_t i) const
        {
            std::size_t stride = 1;
            for (std::size_t j = factors_.size(); j-- > i + 1;)
                stride *= factors_[j]->order();
            return static_cast<Elem>((e / stride) % factors_[i]->order());
        }

        Elem compose(std::span<const Elem> comps) const
        {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                idx = idx * factors_[i]->order() + comps[i];
            return static_cast<Elem>(idx);
        }

        /// Smallest k > 0 with k·a = 0.
        std::size_t additive_order(Elem a) const
        {
            std::size_t k = 1;
            for (Elem x = a; x != zero_; x = add(x, a))
                ++k;
            return k;
        }

        std::size_t characteristic() const { return additive_order(one_); }

        bool tables_equal(const FiniteRing& o) const
        {
            return n_ == o.n_ && zero_ == o.zero_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_;
        }

        /// FNV-1a over order, zero, one and both tables.
        std::uint64_t content_hash() const
        {
            std::uint64_t h = 0xcbf29ce484222325ull;
            auto feed = [&](std::uint64_t v) {
                for (int b = 0; b < 2; ++b) {
                    h ^= (v >> (8 * b)) & 0xff;
                    h *= 0x100000001b3ull;
                }
            };
            feed(n_);
            feed(zero_);
            feed(one_);
            for (auto e : add_)
                feed(e);
            for (auto e : mul_)
                feed(e);
            return h;
        }

    private:
        FiniteRing() = default;

        [[noreturn]] void violation(const std::string& axiom, std::initializer_list<std::size_t> triple) const
        {
            std::ostringstream os;
            os << "ring '" << name_ << "': " << axiom << " fails at (";
            bool first = true;
            for (auto t : triple) {
                os << (first ? "" : ",") << t;
                first = false;
            }
            os << ")";
            throw AxiomViolation(os.str());
        }

        void validate()
        {
            const std::size_t n = n_;
            if (n < 2)
                throw AxiomViolation("ring '" + name_ + "': order must be at least 2 (zero != one)");
            if (n > kMaxOrder)
                throw AxiomViolation("ring '" + name_ + "': order exceeds " + std::to_string(kMaxOrder));
            if (add_.size() != n * n || mul_.size() != n * n)
                throw AxiomViolation("ring '" + name_ + "': tables are not " + std::to_string(n) + "x" +
                                     std::to_string(n));
            for (std::size_t i = 0; i < n * n; ++i)
                if (add_[i] >= n || mul_[i] >= n)
                    violation("table totality", {i / n, i % n});
            if (zero_ >= n || one_ >= n)
                throw AxiomViolation("ring '" + name_ + "': zero/one out of range");
            if (zero_ == one_)
                violation("zero != one", {zero_});

            for (std::size_t a = 0; a < n; ++a) {
                if (add(zero_, static_cast<Elem>(a)) != a)
                    violation("additive identity", {zero_, a});
                for (std::size_t b = 0; b < n; ++b)
                    if (add(Elem(a), Elem(b)) != add(Elem(b), Elem(a)))
                        violation("additive commutativity", {a, b});
            }
            neg_.assign(n, 0);
            for (std::size_t a = 0; a < n; ++a) {
                bool found = false;
                for (std::size_t b = 0; b < n && !found; ++b)
                    if (add(Elem(a), Elem(b)) == zero_) {
                        neg_[a] = Elem(b);
                        found = true;
                    }
                if (!found)
                    violation("additive inverse", {a});
            }
            for (std::size_t a = 0; a < n; ++a) {
                if (mul(one_, Elem(a)) != a || mul(Elem(a), one_) != a)
                    violation("multiplicative identity", {one_, a});
                for (std::size_t b = 0; b < n; ++b) {
                    auto ab = add(Elem(a), Elem(b));
                    auto m_ab = mul(Elem(a), Elem(b));
                    for (std::size_t c = 0; c < n; ++c) {
                        if (add(ab, Elem(c)) != add(Elem(a), add(Elem(b), Elem(c))))
                            violation("additive associativity", {a, b, c});
                        if (mul(m_ab, Elem(c)) != mul(Elem(a), mul(Elem(b), Elem(c))))
                            violation("multiplicative associativity", {a, b, c});
                        if (mul(Elem(a), add(Elem(b), Elem(c))) != add(m_ab, mul(Elem(a), Elem(c))))
                            violation("left distributivity", {a, b, c});
                        if (mul(ab, Elem(c)) != add(mul(Elem(a), Elem(c)), mul(Elem(b), Elem(c))))
                            violation("right distributivity", {a, b, c});
                    }
                }
            }
        }

        std::size_t n_ = 0;
        std::vector<Elem> add_;
        std::vector<Elem> mul_;
        std::vector<Elem> neg_;
        Elem zero_ = 0;
        Elem one_ = 1;
        std::string name_;
        std::string provenance_;
        std::vector<RingPtr> factors_;
};

/// Element-index map between two rings.
struct RingMap
{
    RingPtr source;
    RingPtr target;
    std::vector<Elem> image;

    Elem operator()(Elem e) const { return image[e]; }

    static RingMap identity(const RingPtr& r)
    {
        RingMap m{r, r, std::vector<Elem>(r->order())};
        for (std::size_t i = 0; i < r->order(); ++i)
            m.image[i] = Elem(i);
        return m;
    }

    /// First failing pair, or nullopt when the map preserves 0, 1, + and ·.
    std::optional<std::pair<Elem, Elem>> homomorphism_failure() const
    {
        const auto& s = *source;
        const auto& t = *target;
        if (image.size() != s.order())
            return std::pair<Elem, Elem>{0, 0};
        if (image[s.zero()] != t.zero() || image[s.one()] != t.one())
            return std::pair<Elem, Elem>{s.zero(), s.one()};
        for (std::size_t a = 0; a < s.order(); ++a)
            for (std::size_t b = 0; b < s.order(); ++b) {
                if (image[s.add(Elem(a), Elem(b))] != t.add(image[a], image[b]) ||
                    image[s.mul(Elem(a), Elem(b))] != t.mul(image[a], image[b]))
                    return std::pair<Elem, Elem>{Elem(a), Elem(b)};
            }
        return std::nullopt;
    }

    bool is_homomorphism() const { return !homomorphism_failure(); }

    bool is_bijective() const
    {
        if (source->order() != target->order())
            return false;
        ElementSet seen(target->order());
        for (auto e : image)
            seen.insert(e);
        return seen.count() == target->order();
    }

    bool is_isomorphism() const { return is_bijective() && is_homomorphism(); }

    ElementSet kernel() const
    {
        ElementSet k(source->order());
        for (std::size_t i = 0; i < image.size(); ++i)
            if (image[i] == target->zero())
                k.insert(i);
        return k;
    }

    ElementSet image_of(const ElementSet& in_source) const
    {
        ElementSet out(target->order());
        in_source.for_each([&](Elem e) { out.insert(image[e]); });
        return out;
    }

    ElementSet preimage(const ElementSet& in_target) const
    {
        ElementSet out(source->order());
        for (std::size_t i = 0; i < image.size(); ++i)
            if (in_target.contains(image[i]))
                out.insert(i);
        return out;
    }

    /// g ∘ f for f = *this.
    RingMap then(const RingMap& g) const
    {
        RingMap m{source, g.target, std::vector<Elem>(image.size())};
        for (std::size_t i = 0; i < image.size(); ++i)
            m.image[i] = g.image[image[i]];
        return m;
    }
};

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// ker(s·) = {r : s·r = 0}.
inline ElementSet left_kernel(const FiniteRing& R, Elem s)
{
    ElementSet k(R.order());
    for (std::size_t r = 0; r < R.order(); ++r)
        if (R.mul(s, Elem(r)) == R.zero())
            k.insert(r);
    return k;
}

/// ker(·s) = {r : r·s = 0}.
inline ElementSet right_kernel(const FiniteRing& R, Elem s)
{
    ElementSet k(R.order());
    for (std::size_t r = 0; r < R.order(); ++r)
        if (R.mul(Elem(r), s) == R.zero())
            k.insert(r);
    return k;
}

enum class Side { left, right };

/// Additively closed and closed under multiplication by R on the given side(s).
inline bool is_additive_subgroup(const FiniteRing& R, const ElementSet& X)
{
    if (!X.contains(R.zero()))
        return false;
    bool ok = true;
    X.for_each([&](Elem a) {
        if (!ok)
            return;
        if (!X.contains(R.neg(a)))
            ok = false;
        X.for_each([&](Elem b) {
            if (ok && !X.contains(R.add(a, b)))
                ok = false;
        });
    });
    return ok;
}

inline bool is_left_ideal(const FiniteRing& R, const ElementSet& X)
{
    if (!is_additive_subgroup(R, X))
        return false;
    bool ok = true;
    X.for_each([&](Elem a) {
        for (std::size_t r = 0; r < R.order() && ok; ++r)
            ok = X.contains(R.mul(Elem(r), a));
    });
    return ok;
}

inline bool is_right_ideal(const FiniteRing& R, const ElementSet& X)
{
    if (!is_additive_subgroup(R, X))
        return false;
    bool ok = true;
    X.for_each([&](Elem a) {
        for (std::size_t r = 0; r < R.order() && ok; ++r)
            ok = X.contains(R.mul(a, Elem(r)));
    });
    return ok;
}

inline bool is_two_sided_ideal(const FiniteRing& R, const ElementSet& X)
{
    return is_left_ideal(R, X) && is_right_ideal(R, X);
}

/**
 * left:  lann(X) = {r : rX = 0}, a left ideal.
 * right: rann(X) = {r : Xr = 0}, a right ideal.
 */
inline ElementSet annihilator(const FiniteRing& R, const ElementSet& X, Side side)
{
    ElementSet out = R.all();
    X.for_each([&](Elem x) { out &= side == Side::left ? right_kernel(R, x) : left_kernel(R, x); });
    ensure(side == Side::left ? is_left_ideal(R, out) : is_right_ideal(R, out),
           "annihilator is not a one-sided ideal");
    return out;
}

/// Two-sided inverse of a, if a is a unit.
inline std::optional<Elem> inverse(const FiniteRing& R, Elem a)
{
    for (std::size_t b = 0; b < R.order(); ++b)
        if (R.mul(a, Elem(b)) == R.one() && R.mul(Elem(b), a) == R.one())
            return Elem(b);
    return std::nullopt;
}

struct ElementClassification
{
    ElementSet units;
    ElementSet regular;
    /// R \ C_R. Contains 0; the nonzero part is empty exactly for domains.
    ElementSet zero_divisors;
    ElementSet nilpotents;
    ElementSet idempotents;
    ElementSet central_idempotents;
    ElementSet center;
    /// Finite rings always invert their regular elements.
    bool regular_equals_units = false;
};

inline ElementClassification classify_elements(const FiniteRing& R)
{
    const std::size_t n = R.order();
    ElementClassification c{R.none(), R.none(), R.none(), R.none(), R.none(), R.none(), R.none(), false};
    for (std::size_t i = 0; i < n; ++i) {
        auto a = Elem(i);
        if (inverse(R, a))
            c.units.insert(a);
        if (left_kernel(R, a).count() == 1 && right_kernel(R, a).count() == 1)
            c.regular.insert(a);
        if (R.mul(a, a) == a)
            c.idempotents.insert(a);
        bool central = true;
        for (std::size_t j = 0; j < n && central; ++j)
            central = R.mul(a, Elem(j)) == R.mul(Elem(j), a);
        if (central)
            c.center.insert(a);
        Elem p = a;
        for (std::size_t k = 0; k <= n && p != R.zero(); ++k)
            p = R.mul(p, a);
        if (p == R.zero())
            c.nilpotents.insert(a);
    }
    c.central_idempotents = c.idempotents & c.center;
    c.zero_divisors = c.regular.complement();
    ensure(c.units.is_subset_of(c.regular), "a unit is not regular");
    c.regular_equals_units = c.units == c.regular;
    ensure(c.regular_equals_units, "finite ring with a regular non-unit");
    return c;
}

} // namespace orelab
