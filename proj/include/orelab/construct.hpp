#pragma once

/**
 * @file construct.hpp
 * @brief Ring constructors and the constructor-expression language.
 *
 *   Z/n            integers mod n                 index = residue
 *   Fq             q ∈ {2,3,4,5,7,8,9}            index = Σ a_i p^i over the fixed modulus
 *   mat(k,X)       k×k matrices over X            entries row-major, first entry most significant
 *   tri(k,X)       upper-triangular k×k over X    entries (i ≤ j) row-major, first most significant
 *   poly(X,k)      X[x]/(x^k)                      index = Σ c_i |X|^i
 *   prod(X,Y,...)  direct product                  first factor most significant
 *   quot(X,{g..})  X modulo the ideal generated by element indices g..
 *   opp(X)         opposite ring                  same elements, a∘b = b·a
 *
 * Identical expressions produce identical tables.
 */

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/ideals.hpp"
#include "orelab/ring.hpp"

namespace orelab {

namespace detail {

template <typename AddFn, typename MulFn>
RingPtr tabulate(std::string name, std::string provenance, std::size_t n, AddFn add, MulFn mul, Elem zero,
                 Elem one, std::vector<RingPtr> factors = {})
{
    std::vector<Elem> at(n * n), mt(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            at[a * n + b] = static_cast<Elem>(add(a, b));
            mt[a * n + b] = static_cast<Elem>(mul(a, b));
        }
    return FiniteRing::make(std::move(name), std::move(provenance), n, std::move(at), std::move(mt), zero, one,
                            std::move(factors));
}

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound, const std::string& what)
{
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > bound)
            throw OrderBoundExceeded(what, v, bound);
    }
    return v;
}

/// Mixed-radix digits of idx in base b, most significant first.
inline std::vector<Elem> digits_msf(std::size_t idx, std::size_t b, std::size_t len)
{
    std::vector<Elem> d(len);
    for (std::size_t i = len; i-- > 0;) {
        d[i] = static_cast<Elem>(idx % b);
        idx /= b;
    }
    return d;
}

inline std::size_t undigits_msf(const std::vector<Elem>& d, std::size_t b)
{
    std::size_t idx = 0;
    for (auto x : d)
        idx = idx * b + x;
    return idx;
}

} // namespace detail

inline RingPtr make_zn(std::size_t n, const Bounds& bounds = {})
{
    if (n > bounds.profile)
        throw OrderBoundExceeded("Z/" + std::to_string(n), n, bounds.profile);
    auto name = "Z/" + std::to_string(n);
    return detail::tabulate(
        name, name, n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
        [n](std::size_t a, std::size_t b) { return (a * b) % n; }, 0, 1);
}

/**
 * Finite field of order q ∈ {2,3,4,5,7,8,9}. Prime-power fields use the fixed
 * moduli x²+x+1 (F4), x³+x+1 (F8) and x²+1 (F9).
 */
inline RingPtr make_field(std::size_t q)
{
    std::size_t p = 0, deg = 0;
    std::vector<std::size_t> modulus; // monic, low degree first, without the leading 1
    switch (q) {
        case 2: case 3: case 5: case 7: p = q; deg = 1; break;
        case 4: p = 2; deg = 2; modulus = {1, 1}; break;
        case 8: p = 2; deg = 3; modulus = {1, 1, 0}; break;
        case 9: p = 3; deg = 2; modulus = {1, 0}; break;
        default: throw ParseError("unsupported field order F" + std::to_string(q), 0);
    }
    auto name = "F" + std::to_string(q);
    if (deg == 1)
        return detail::tabulate(
            name, name, q, [p](std::size_t a, std::size_t b) { return (a + b) % p; },
            [p](std::size_t a, std::size_t b) { return (a * b) % p; }, 0, 1);
    auto coeffs = [p, deg](std::size_t idx) {
        std::vector<std::size_t> c(deg);
        for (std::size_t i = 0; i < deg; ++i, idx /= p)
            c[i] = idx % p;
        return c;
    };
    auto index = [p](const std::vector<std::size_t>& c) {
        std::size_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            idx = idx * p + c[i];
        return idx;
    };
    auto add = [&](std::size_t a, std::size_t b) {
        auto ca = coeffs(a), cb = coeffs(b);
        for (std::size_t i = 0; i < deg; ++i)
            ca[i] = (ca[i] + cb[i]) % p;
        return index(ca);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
        auto ca = coeffs(a), cb = coeffs(b);
        std::vector<std::size_t> prod(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = 0; j < deg; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        // x^deg = −modulus
        for (std::size_t k = prod.size(); k-- > deg;) {
            auto top = prod[k];
            prod[k] = 0;
            for (std::size_t i = 0; i < deg; ++i)
                prod[k - deg + i] = (prod[k - deg + i] + (p - modulus[i]) * top) % p;
        }
        prod.resize(deg);
        return index(prod);
    };
    return detail::tabulate(name, name, q, add, mul, 0, 1);
}

/// Direct product; element index is mixed radix with the first factor most significant.
inline RingPtr make_product(std::vector<RingPtr> factors, const Bounds& bounds = {})
{
    if (factors.empty())
        throw ParseError("prod() needs at least one factor", 0);
    std::size_t n = 1;
    std::string prov = "prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        n *= factors[i]->order();
        if (n > bounds.profile)
            throw OrderBoundExceeded("prod", n, bounds.profile);
        prov += (i ? "," : "") + factors[i]->provenance();
    }
    prov += ")";
    std::vector<std::size_t> radix;
    for (auto& f : factors)
        radix.push_back(f->order());
    auto split = [&](std::size_t idx) {
        std::vector<Elem> c(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            c[i] = static_cast<Elem>(idx % radix[i]);
            idx /= radix[i];
        }
        return c;
    };
    auto join = [&](const std::vector<Elem>& c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            idx = idx * radix[i] + c[i];
        return idx;
    };
    auto op = [&](bool is_add) {
        return [&, is_add](std::size_t a, std::size_t b) {
            auto ca = split(a), cb = split(b);
            for (std::size_t i = 0; i < ca.size(); ++i)
                ca[i] = is_add ? factors[i]->add(ca[i], cb[i]) : factors[i]->mul(ca[i], cb[i]);
            return join(ca);
        };
    };
    std::vector<Elem> z, o;
    for (auto& f : factors) {
        z.push_back(f->zero());
        o.push_back(f->one());
    }
    return detail::tabulate(prov, prov, n, op(true), op(false), Elem(join(z)), Elem(join(o)), factors);
}

inline RingPtr make_opposite(const RingPtr& R)
{
    std::vector<RingPtr> factors;
    for (auto& f : R->factors())
        factors.push_back(make_opposite(f));
    auto prov = "opp(" + R->provenance() + ")";
    return detail::tabulate(
        prov, prov, R->order(), [&](std::size_t a, std::size_t b) { return R->add(Elem(a), Elem(b)); },
        [&](std::size_t a, std::size_t b) { return R->mul(Elem(b), Elem(a)); }, R->zero(), R->one(),
        std::move(factors));
}

inline RingPtr make_matrix(std::size_t k, const RingPtr& X, const Bounds& bounds = {})
{
    if (k == 0)
        throw ParseError("mat: size must be positive", 0);
    const std::size_t q = X->order();
    const std::size_t n = detail::checked_power(q, k * k, bounds.profile, "mat");
    auto prov = "mat(" + std::to_string(k) + "," + X->provenance() + ")";
    auto add = [&](std::size_t a, std::size_t b) {
        auto A = detail::digits_msf(a, q, k * k), B = detail::digits_msf(b, q, k * k);
        for (std::size_t i = 0; i < A.size(); ++i)
            A[i] = X->add(A[i], B[i]);
        return detail::undigits_msf(A, q);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
        auto A = detail::digits_msf(a, q, k * k), B = detail::digits_msf(b, q, k * k);
        std::vector<Elem> C(k * k, X->zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l)
                    C[i * k + j] = X->add(C[i * k + j], X->mul(A[i * k + l], B[l * k + j]));
        return detail::undigits_msf(C, q);
    };
    std::vector<Elem> zero(k * k, X->zero()), one(k * k, X->zero());
    for (std::size_t i = 0; i < k; ++i)
        one[i * k + i] = X->one();
    return detail::tabulate(prov, prov, n, add, mul, Elem(detail::undigits_msf(zero, q)),
                            Elem(detail::undigits_msf(one, q)));
}

inline RingPtr make_triangular(std::size_t k, const RingPtr& X, const Bounds& bounds = {})
{
    if (k == 0)
        throw ParseError("tri: size must be positive", 0);
    const std::size_t q = X->order();
    const std::size_t slots = k * (k + 1) / 2;
    const std::size_t n = detail::checked_power(q, slots, bounds.profile, "tri");
    auto prov = "tri(" + std::to_string(k) + "," + X->provenance() + ")";
    // slot of (i, j), i ≤ j, in row-major order
    std::vector<std::size_t> slot(k * k, 0);
    for (std::size_t i = 0, s = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            slot[i * k + j] = s++;
    auto add = [&](std::size_t a, std::size_t b) {
        auto A = detail::digits_msf(a, q, slots), B = detail::digits_msf(b, q, slots);
        for (std::size_t i = 0; i < slots; ++i)
            A[i] = X->add(A[i], B[i]);
        return detail::undigits_msf(A, q);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
        auto A = detail::digits_msf(a, q, slots), B = detail::digits_msf(b, q, slots);
        std::vector<Elem> C(slots, X->zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j)
                for (std::size_t l = i; l <= j; ++l)
                    C[slot[i * k + j]] =
                        X->add(C[slot[i * k + j]], X->mul(A[slot[i * k + l]], B[slot[l * k + j]]));
        return detail::undigits_msf(C, q);
    };
    std::vector<Elem> zero(slots, X->zero()), one(slots, X->zero());
    for (std::size_t i = 0; i < k; ++i)
        one[slot[i * k + i]] = X->one();
    return detail::tabulate(prov, prov, n, add, mul, Elem(detail::undigits_msf(zero, q)),
                            Elem(detail::undigits_msf(one, q)));
}

/// X[x]/(x^k) with x central; index = Σ c_i |X|^i.
inline RingPtr make_truncated_poly(const RingPtr& X, std::size_t k, const Bounds& bounds = {})
{
    if (k == 0)
        throw ParseError("poly: degree bound must be positive", 0);
    const std::size_t q = X->order();
    const std::size_t n = detail::checked_power(q, k, bounds.profile, "poly");
    auto prov = "poly(" + X->provenance() + "," + std::to_string(k) + ")";
    auto coeffs = [&](std::size_t idx) {
        std::vector<Elem> c(k);
        for (std::size_t i = 0; i < k; ++i, idx /= q)
            c[i] = Elem(idx % q);
        return c;
    };
    auto index = [&](const std::vector<Elem>& c) {
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;)
            idx = idx * q + c[i];
        return idx;
    };
    auto add = [&](std::size_t a, std::size_t b) {
        auto A = coeffs(a), B = coeffs(b);
        for (std::size_t i = 0; i < k; ++i)
            A[i] = X->add(A[i], B[i]);
        return index(A);
    };
    auto mul = [&](std::size_t a, std::size_t b) {
        auto A = coeffs(a), B = coeffs(b);
        std::vector<Elem> C(k, X->zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; i + j < k; ++j)
                C[i + j] = X->add(C[i + j], X->mul(A[i], B[j]));
        return index(C);
    };
    std::vector<Elem> zero(k, X->zero()), one(k, X->zero());
    one[0] = X->one();
    return detail::tabulate(prov, prov, n, add, mul, Elem(index(zero)), Elem(index(one)));
}

/// R/I together with the projection π. Cosets are indexed by their minimal element.
struct Quotient
{
    RingPtr ring;
    RingMap projection;
};

inline std::string format_set(const ElementSet& s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Elem e) {
        out += (first ? "" : ",") + std::to_string(e);
        first = false;
    });
    return out + "}";
}

inline Quotient quotient_ring(const RingPtr& R, const ElementSet& ideal)
{
    ensure(is_two_sided_ideal(*R, ideal), "quotient by a non-ideal");
    if (ideal == R->all())
        throw AxiomViolation("quotient by the whole ring has no identity distinct from zero");
    const std::size_t n = R->order();
    std::vector<Elem> coset(n, Elem(n));
    std::size_t m = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset[x] != n)
            continue;
        ideal.for_each([&](Elem i) { coset[R->add(Elem(x), i)] = Elem(m); });
        ++m;
    }
    std::vector<Elem> rep(m);
    for (std::size_t x = n; x-- > 0;)
        rep[coset[x]] = Elem(x);
    auto prov = "quot(" + R->provenance() + "," + format_set(ideal) + ")";
    auto Q = detail::tabulate(
        prov, prov, m, [&](std::size_t a, std::size_t b) { return coset[R->add(rep[a], rep[b])]; },
        [&](std::size_t a, std::size_t b) { return coset[R->mul(rep[a], rep[b])]; }, coset[R->zero()],
        coset[R->one()]);
    return Quotient{Q, RingMap{R, Q, coset}};
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace detail {

class ExprParser
{
    public:
        ExprParser(std::string_view text, const Bounds& bounds) : s_(text), bounds_(bounds) {}

        RingPtr parse()
        {
            auto r = expr();
            skip();
            if (pos_ != s_.size())
                fail("trailing input");
            return r;
        }

    private:
        [[noreturn]] void fail(const std::string& msg) const
        {
            throw ParseError(msg + " in '" + std::string(s_) + "'", pos_);
        }

        void skip()
        {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
        }

        bool accept(char c)
        {
            skip();
            if (pos_ < s_.size() && s_[pos_] == c) {
                ++pos_;
                return true;
            }
            return false;
        }

        void expect(char c)
        {
            if (!accept(c))
                fail(std::string("expected '") + c + "'");
        }

        std::size_t number()
        {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected a number");
            if (pos_ - start > 6)
                fail("number too large");
            return std::stoul(std::string(s_.substr(start, pos_ - start)));
        }

        std::string ident()
        {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return std::string(s_.substr(start, pos_ - start));
        }

        RingPtr expr()
        {
            auto id = ident();
            if (id == "Z") {
                expect('/');
                auto n = number();
                if (n < 2)
                    fail("Z/n needs n >= 2");
                return make_zn(n, bounds_);
            }
            if (id == "F") {
                auto q = number();
                if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
                    fail("unsupported field order");
                return make_field(q);
            }
            if (id == "mat" || id == "tri") {
                expect('(');
                auto k = number();
                expect(',');
                auto X = expr();
                expect(')');
                return id == "mat" ? make_matrix(k, X, bounds_) : make_triangular(k, X, bounds_);
            }
            if (id == "poly") {
                expect('(');
                auto X = expr();
                expect(',');
                auto k = number();
                expect(')');
                return make_truncated_poly(X, k, bounds_);
            }
            if (id == "prod") {
                expect('(');
                std::vector<RingPtr> fs{expr()};
                while (accept(','))
                    fs.push_back(expr());
                expect(')');
                return make_product(std::move(fs), bounds_);
            }
            if (id == "opp") {
                expect('(');
                auto X = expr();
                expect(')');
                return make_opposite(X);
            }
            if (id == "quot") {
                expect('(');
                auto X = expr();
                ElementSet gens(X->order());
                auto element = [&] {
                    auto e = number();
                    if (e >= X->order())
                        fail("generator index out of range");
                    gens.insert(e);
                };
                if (accept(',')) {
                    if (accept('{')) {
                        if (!accept('}')) {
                            element();
                            while (accept(','))
                                element();
                            expect('}');
                        }
                    } else {
                        element();
                        while (accept(','))
                            element();
                    }
                }
                expect(')');
                auto I = ideal_closure(*X, gens).members;
                auto Q = quotient_ring(X, I).ring;
                // Rename to the expression rather than the closed ideal.
                return FiniteRing::make(
                    "quot(" + X->provenance() + "," + format_set(gens) + ")",
                    "quot(" + X->provenance() + "," + format_set(gens) + ")", Q->order(),
                    std::vector<Elem>(Q->add_table().begin(), Q->add_table().end()),
                    std::vector<Elem>(Q->mul_table().begin(), Q->mul_table().end()), Q->zero(), Q->one());
            }
            fail(id.empty() ? "expected a ring expression" : "unknown constructor '" + id + "'");
        }

        std::string_view s_;
        const Bounds& bounds_;
        std::size_t pos_ = 0;
};

} // namespace detail

/// Build a validated ring from a constructor expression.
inline RingPtr build_ring(std::string_view expression, const Bounds& bounds = {})
{
    return detail::ExprParser(expression, bounds).parse();
}

} // namespace orelab
