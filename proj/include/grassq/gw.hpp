// Expressing Schubert classes as polynomials in the special classes via the
// quantum Pieri recursion, general (quantum) products, and Gromov-Witten
// invariants.
//
// Iterating the Pieri rule on the parts of lambda gives
//   sigma^lambda = sigma_lambda + corrections indexed by (mu, d) with
//   mu strictly dominating lambda at d = 0, or |mu| < |lambda| at d > 0,
// so subtracting recursively expressed corrections is well founded. The
// Engine memoizes these expressions and the special-class products; caches
// are confined to one Engine instance, which is meant to be used from a
// single thread (everything else in the library is pure).

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grassq/core.hpp"
#include "grassq/pieri.hpp"
#include "grassq/quantum.hpp"
#include "grassq/ring.hpp"

namespace grassq {

using Monomial = std::vector<SpecialClass>;  // kept sorted: larger p first, primed last

Monomial canonical_monomial(Monomial m);

struct PolyKey {
    Monomial mono;
    QExponent q;
    bool operator==(const PolyKey&) const = default;
    bool operator<(const PolyKey& o) const {
        if (!(q == o.q)) return q < o.q;
        return mono < o.mono;
    }
};

class SpecialPolynomial {
public:
    SpecialPolynomial() = default;
    static SpecialPolynomial one(int nqvars) {
        SpecialPolynomial p;
        p.add_term({}, QExponent::zero(nqvars), BigInt(1));
        return p;
    }

    void add_term(Monomial mono, const QExponent& q, const BigInt& c) {
        if (c.is_zero()) return;
        PolyKey key{canonical_monomial(std::move(mono)), q};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SpecialPolynomial& operator+=(const SpecialPolynomial& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.mono, key.q, c);
        return *this;
    }
    SpecialPolynomial& scale_by(const BigInt& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [key, v] : terms_) v *= c;
        return *this;
    }
    SpecialPolynomial operator*(const SpecialPolynomial& o) const {
        SpecialPolynomial out;
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                Monomial mono = ka.mono;
                mono.insert(mono.end(), kb.mono.begin(), kb.mono.end());
                out.add_term(std::move(mono), ka.q + kb.q, ca * cb);
            }
        }
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<PolyKey, BigInt>& terms() const { return terms_; }
    bool operator==(const SpecialPolynomial&) const = default;

private:
    std::map<PolyKey, BigInt> terms_;
};

std::string to_string(const SpecialPolynomial& p);

enum class ProductMode { Classical, Quantum };

class Engine {
public:
    explicit Engine(const GrassmannianSpec& spec, bool use_index_oracle = false);

    const GrassmannianSpec& spec() const { return spec_; }

    // sigma_s * sigma_lambda, cached per (s, lambda, mode).
    const RingElement& special_product(const SpecialClass& s, const SchubertLabel& lambda,
                                       ProductMode mode);

    RingElement apply_special(const SpecialClass& s, const RingElement& x, ProductMode mode);
    RingElement apply_monomial(const Monomial& mono, const RingElement& x, ProductMode mode);
    RingElement evaluate_monomial(const Monomial& mono, ProductMode mode);
    RingElement evaluate_polynomial(const SpecialPolynomial& poly, ProductMode mode);
    RingElement apply_polynomial(const SpecialPolynomial& poly, const RingElement& x,
                                 ProductMode mode);

    // The product of the label's parts as special classes; for type-2 labels
    // every factor tau_k is replaced by tau'_k.
    Monomial monomial_of(const SchubertLabel& label) const;

    // F with evaluate_polynomial(F, mode) == sigma_lambda exactly; memoized.
    const SpecialPolynomial& express_in_specials(const SchubertLabel& lambda,
                                                 ProductMode mode = ProductMode::Quantum);

    RingElement product(const SchubertLabel& a, const SchubertLabel& b, ProductMode mode);
    RingElement quantum_product(const SchubertLabel& a, const SchubertLabel& b) {
        return product(a, b, ProductMode::Quantum);
    }
    RingElement classical_product(const SchubertLabel& a, const SchubertLabel& b) {
        return product(a, b, ProductMode::Classical);
    }

    // Throws unless |lambda|+|mu|+|nu| = dim + sum d_i deg(q_i).
    BigInt gromov_witten(const SchubertLabel& lambda, const SchubertLabel& mu,
                         const SchubertLabel& nu, const QExponent& d);

    // (q^1 coefficient from the quantum machinery, classical number on the
    // related Grassmannian): C compares against half the triple intersection
    // on IG(m+1,2n+2); B and D against the first-column-deleted classes on
    // OG(m+1,2n+1) resp. OG(m+1,2n+2) with the special class degree lowered.
    std::pair<BigInt, BigInt> degree_one_crosscheck(const SchubertLabel& lambda,
                                                    const SchubertLabel& mu,
                                                    const SpecialClass& s);

    // Exposed for tests: the triangular-solve path used when the recursion's
    // leading-term check fails.
    SpecialPolynomial express_by_linear_solve(const SchubertLabel& lambda, ProductMode mode);
    bool fallback_used() const { return fallback_used_; }

private:
    const SpecialPolynomial& express_impl(const SchubertLabel& lambda, ProductMode mode);

    GrassmannianSpec spec_;
    bool use_index_oracle_;
    bool fallback_used_ = false;
    std::map<std::tuple<int, bool, int, SchubertLabel>, RingElement> pieri_cache_;
    std::map<SchubertLabel, SpecialPolynomial> express_classical_, express_quantum_;
};

}  // namespace grassq
