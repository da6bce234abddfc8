#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperell/rational.hpp"
#include "hyperell/symbol.hpp"

namespace hyperell {

/// Power product of symbols; exponents are positive and stored sorted by symbol.
class Monomial {
public:
    using Factor = std::pair<Symbol, int>;

    Monomial() = default;
    explicit Monomial(Symbol s, int e = 1) {
        if (e > 0) factors_.emplace_back(s, e);
    }
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        std::vector<Factor> merged;
        for (auto& f : factors_) {
            if (!merged.empty() && merged.back().first == f.first) merged.back().second += f.second;
            else merged.push_back(f);
        }
        std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
        factors_ = std::move(merged);
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int weight() const {
        int w = 0;
        for (const auto& [s, e] : factors_) w += e * s.weight();
        return w;
    }

    int exponent(const Symbol& s) const {
        for (const auto& [t, e] : factors_)
            if (t == s) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto& f = out.factors_;
        f.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first) f.push_back(*i++);
            else if (j->first < i->first) f.push_back(*j++);
            else {
                f.emplace_back(i->first, i->second + j->second);
                ++i, ++j;
            }
        }
        f.insert(f.end(), i, a.factors_.end());
        f.insert(f.end(), j, b.factors_.end());
        return out;
    }

    /// Drops the factor for s; returns its former exponent.
    std::pair<Monomial, int> without(const Symbol& s) const {
        Monomial out;
        int e = 0;
        for (const auto& f : factors_) {
            if (f.first == s) e = f.second;
            else out.factors_.push_back(f);
        }
        return {out, e};
    }

    /// Componentwise minimum of exponents.
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first) ++i;
            else if (j->first < i->first) ++j;
            else {
                out.factors_.emplace_back(i->first, std::min(i->second, j->second));
                ++i, ++j;
            }
        }
        return out;
    }

    /// Exact quotient; divisor must divide this monomial.
    Monomial divided_by(const Monomial& d) const {
        Monomial out;
        for (const auto& [s, e] : factors_) {
            int r = e - d.exponent(s);
            if (r < 0) throw error("Monomial: divisor does not divide");
            if (r > 0) out.factors_.emplace_back(s, r);
        }
        return out;
    }

    std::string str() const {
        std::string out;
        for (const auto& [s, e] : factors_) {
            if (!out.empty()) out += '*';
            out += s.name();
            if (e > 1) out += '^' + std::to_string(e);
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded-lex: higher weight first, ties broken lexicographically over
    /// the fixed symbol order (a larger exponent on an earlier symbol wins).
    friend std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
            if (i->first != j->first)
                return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
            if (i->second != j->second) return i->second <=> j->second;
        }
        if (i != a.factors_.end()) return std::strong_ordering::greater;
        if (j != b.factors_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    std::vector<Factor> factors_;
};

/// Leading terms first.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex(a, b) > 0; }
};

/// Result of a homogeneity query.
struct Grading {
    enum class State { Zero, Homogeneous, Mixed } state = State::Zero;
    int weight = 0;

    bool is_zero() const { return state == State::Zero; }
    bool is_mixed() const { return state == State::Mixed; }
    /// Zero is compatible with every weight.
    bool compatible_with(int w) const {
        return state == State::Zero || (state == State::Homogeneous && weight == w);
    }
    friend bool operator==(const Grading&, const Grading&) = default;
};

/// Sparse multivariate polynomial over Q in graded symbols. Canonical: no
/// zero coefficients stored, terms iterated in graded-lex order.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, TermOrder>;

    Poly() = default;
    Poly(const Rational& c) {  // NOLINT: constants promote implicitly
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT
    Poly(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }  // NOLINT
    Poly(const Monomial& m, const Rational& c) {
        if (!c.is_zero()) terms_.emplace(m, c);
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& k) {
        if (k.is_zero()) terms_.clear();
        else for (auto& [m, c] : terms_) c *= k;
        return *this;
    }
    Poly operator-() const {
        Poly out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
    friend Poly operator*(const Rational& k, Poly a) { return a *= k; }
    friend Poly operator*(Poly a, long k) { return a *= Rational(k); }
    friend Poly operator*(long k, Poly a) { return a *= Rational(k); }
    friend Poly operator*(Poly a, int k) { return a *= Rational(k); }
    friend Poly operator*(int k, Poly a) { return a *= Rational(k); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        if (e < 0) throw error("Poly::pow: negative exponent");
        Poly result(1), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    Grading grading() const {
        if (terms_.empty()) return {};
        int w = terms_.begin()->first.weight();
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return {Grading::State::Mixed, 0};
        return {Grading::State::Homogeneous, w};
    }

    std::set<Symbol> symbols() const {
        std::set<Symbol> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m.factors()) out.insert(s);
        return out;
    }

    bool contains(const Symbol& s) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(s)) return true;
        return false;
    }

    int degree_in(const Symbol& s) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
        return d;
    }

    /// True if only generator symbols (b1/b2/b3) occur.
    bool is_pure_generator() const {
        for (const auto& [m, c] : terms_)
            for (const auto& [s, e] : m.factors())
                if (!s.is_generator()) return false;
        return true;
    }

    /// Replaces every mapped symbol by its image; unmapped symbols pass through.
    Poly substitute(const std::unordered_map<Symbol, Poly>& env) const {
        if (env.empty()) return *this;
        std::map<std::pair<Symbol, int>, Poly> powers;
        auto power_of = [&](const Symbol& s, int e) -> const Poly& {
            auto key = std::make_pair(s, e);
            if (auto it = powers.find(key); it != powers.end()) return it->second;
            return powers.emplace(key, env.at(s).pow(e)).first->second;
        };
        Poly out;
        for (const auto& [m, c] : terms_) {
            std::vector<Monomial::Factor> kept;
            std::vector<const Poly*> images;
            for (const auto& [s, e] : m.factors()) {
                if (env.count(s)) images.push_back(&power_of(s, e));
                else kept.emplace_back(s, e);
            }
            Poly term(Monomial(std::move(kept)), c);
            for (const Poly* p : images) term = term * *p;
            out += term;
        }
        return out;
    }

    Poly derivative(const Symbol& s) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.without(s);
            if (e == 0) continue;
            out.add_term(rest * Monomial(s, e - 1), c * Rational(e));
        }
        return out;
    }

    /// Evaluates with values supplied per symbol; T needs a constructor from
    /// double or Rational via `convert`.
    template <class T, class Lookup, class Convert>
    T evaluate(Lookup&& value_of, Convert&& convert) const {
        T acc = convert(Rational(0));
        for (const auto& [m, c] : terms_) {
            T term = convert(c);
            for (const auto& [s, e] : m.factors()) {
                T v = value_of(s);
                for (int k = 0; k < e; ++k) term = term * v;
            }
            acc = acc + term;
        }
        return acc;
    }

    Rational evaluate(const std::function<Rational(const Symbol&)>& value_of) const {
        return evaluate<Rational>(value_of, [](const Rational& r) { return r; });
    }

    /// Canonical text: terms in graded-lex order, "c*mono" with unit
    /// coefficients elided, e.g. "3*b1_1*b1_3 - 1/2*b3_3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) out += c.sign() < 0 ? "-" : "";
            else out += c.sign() < 0 ? " - " : " + ";
            first = false;
            if (m.is_one()) out += mag.str();
            else if (mag.is_one()) out += m.str();
            else out += mag.str() + "*" + m.str();
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    Terms terms_;
};

inline Grading homogeneous_weight(const Poly& p) { return p.grading(); }

} // namespace hyperell
