// Elements of H*(X) and QH*(X): finitely supported integer combinations of
// Schubert classes times monomials in the deformation parameters.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassq/bigint.hpp"
#include "grassq/core.hpp"

namespace grassq {

struct QExponent {
    std::vector<int> e;  // length = number of q variables of the spec

    static QExponent zero(int nvars) { return QExponent{std::vector<int>(static_cast<std::size_t>(nvars), 0)}; }
    int total() const {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }
    int degree(const GrassmannianSpec& spec) const {
        int s = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += e[i] * spec.q_degrees[i];
        return s;
    }
    QExponent operator+(const QExponent& o) const {
        if (e.size() != o.e.size()) throw std::invalid_argument("QExponent: arity mismatch");
        QExponent r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool is_zero() const {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const QExponent&) const = default;
    bool operator<(const QExponent& o) const {
        if (total() != o.total()) return total() < o.total();
        return e < o.e;
    }
};

struct TermKey {
    SchubertLabel label;
    QExponent q;
    bool operator==(const TermKey&) const = default;
    // Classical terms first, then by q monomial, then the fixed basis order.
    bool operator<(const TermKey& o) const {
        if (!(q == o.q)) return q < o.q;
        return label < o.label;
    }
};

class RingElement {
public:
    RingElement() = default;
    explicit RingElement(int nqvars) : nqvars_(nqvars) {}

    static RingElement unit(const GrassmannianSpec& spec) {
        RingElement r(spec.num_q_vars());
        r.add_term(SchubertLabel{}, QExponent::zero(spec.num_q_vars()), BigInt(1));
        return r;
    }

    int num_q_vars() const { return nqvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(const SchubertLabel& label, const QExponent& q, const BigInt& c) {
        if (c.is_zero()) return;
        check_arity(q);
        auto it = terms_.find(TermKey{label, q});
        if (it == terms_.end()) {
            terms_.emplace(TermKey{label, q}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.label, key.q, c);
        return *this;
    }

    RingElement& scale_by(const BigInt& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, v] : terms_) v *= c;
        return *this;
    }

    // Multiply every term by q^shift.
    RingElement& shift_q(const QExponent& shift) {
        if (shift.is_zero()) return *this;
        std::map<TermKey, BigInt> out;
        for (const auto& [key, c] : terms_) out.emplace(TermKey{key.label, key.q + shift}, c);
        terms_ = std::move(out);
        return *this;
    }

    BigInt extract_coefficient(const SchubertLabel& label, const QExponent& q) const {
        auto it = terms_.find(TermKey{label, q});
        return it == terms_.end() ? BigInt() : it->second;
    }

    // Drop every term with a nonzero q exponent.
    RingElement classical_part() const {
        RingElement r(nqvars_);
        for (const auto& [key, c] : terms_) {
            if (key.q.is_zero()) r.terms_.emplace(key, c);
        }
        return r;
    }

    const std::map<TermKey, BigInt>& terms() const { return terms_; }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
    void check_arity(const QExponent& q) {
        if (nqvars_ < 0) {
            nqvars_ = static_cast<int>(q.e.size());
        } else if (static_cast<int>(q.e.size()) != nqvars_) {
            throw std::invalid_argument("RingElement: q-exponent arity mismatch");
        }
    }

    int nqvars_ = -1;  // fixed by the first term
    std::map<TermKey, BigInt> terms_;
};

inline RingElement add(RingElement a, const RingElement& b) { return a += b; }
inline RingElement scale(RingElement a, const BigInt& c) { return a.scale_by(c); }

std::string to_string(const RingElement& x);

}  // namespace grassq
