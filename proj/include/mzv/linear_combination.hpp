#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "mzv/rational.hpp"

namespace mzv {

// Finite formal Q-linear combination over an ordered basis type. The term map
// is kept canonical: no zero coefficients are ever stored, so operator== is
// equality of canonical forms and map order is the canonical print order.
template <typename B>
class LinearCombination {
public:
    using TermMap = std::map<B, Rational>;

    LinearCombination() = default;

    static LinearCombination basis(B b) {
        LinearCombination v;
        v.terms_.emplace(std::move(b), 1);
        return v;
    }

    static LinearCombination term(B b, Rational c) {
        LinearCombination v;
        v.add_term(std::move(b), std::move(c));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(B b, Rational c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(b), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    LinearCombination& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= k;
        return *this;
    }

    LinearCombination& operator/=(const Rational& k) {
        if (k == 0) throw std::invalid_argument("division of a linear combination by zero");
        for (auto& [b, c] : terms_) c /= k;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
        a += b;
        return a;
    }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
        a -= b;
        return a;
    }
    friend LinearCombination operator-(LinearCombination a) {
        for (auto& [b, c] : a.terms_) c = -c;
        return a;
    }
    friend LinearCombination operator*(const Rational& k, LinearCombination v) {
        v *= k;
        return v;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    TermMap terms_;
};

// Linear extension of a basis map b -> LinearCombination<C>.
template <typename B, typename F>
auto lift_linear(const LinearCombination<B>& v, F&& f) {
    using Image = decltype(f(std::declval<const B&>()));
    Image out;
    for (const auto& [b, c] : v.terms()) {
        for (const auto& [b2, c2] : f(b).terms()) out.add_term(b2, c * c2);
    }
    return out;
}

template <typename B>
LinearCombination<std::pair<B, B>> tensor(const LinearCombination<B>& u, const LinearCombination<B>& v) {
    LinearCombination<std::pair<B, B>> out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) out.add_term({a, b}, ca * cb);
    return out;
}

}  // namespace mzv
