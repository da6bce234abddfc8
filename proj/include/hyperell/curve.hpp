#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/matrix.hpp"
#include "hyperell/poly.hpp"
#include "hyperell/relations.hpp"

namespace hyperell {

/// Rational curve parameters (lambda_4, lambda_6, ..., lambda_{4g+2}).
struct LambdaVector {
    int genus = 1;
    std::map<int, Rational> values;

    static LambdaVector zero(int g) {
        LambdaVector lv{g, {}};
        for (int s : GenusContext(g).lambda_indices()) lv.values[s] = Rational(0);
        return lv;
    }

    /// Values listed in index order lambda_4, lambda_6, ...
    static LambdaVector from_list(int g, const std::vector<Rational>& list) {
        const auto idx = GenusContext(g).lambda_indices();
        if (list.size() != idx.size())
            throw error("lambda vector for genus " + std::to_string(g) + " needs " + std::to_string(idx.size()) +
                        " values, got " + std::to_string(list.size()));
        LambdaVector lv{g, {}};
        for (std::size_t n = 0; n < idx.size(); ++n) lv.values[idx[n]] = list[n];
        return lv;
    }

    /// Comma-separated rationals, e.g. "-3,2" or "1/2,0,0,5".
    static LambdaVector parse(int g, std::string_view text) {
        std::vector<Rational> list;
        std::stringstream ss{std::string(text)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw error("empty entry in lambda list");
            list.push_back(Rational::parse(item.substr(b, e - b + 1)));
        }
        return from_list(g, list);
    }
};

namespace detail {
inline int curve_exponent(int g, int s) { return 2 * g + 1 - s / 2; }
} // namespace detail

/// Ascending coefficients of x^{2g+1} + lambda_4 x^{2g-1} + ... + lambda_{4g+2}.
inline std::vector<Rational> curve_poly(const LambdaVector& lv) {
    const int g = lv.genus;
    std::vector<Rational> c(static_cast<std::size_t>(2 * g + 2));
    c.back() = Rational(1);
    for (int s : GenusContext(g).lambda_indices()) c[static_cast<std::size_t>(detail::curve_exponent(g, s))] = lv.values.at(s);
    return c;
}

/// Same polynomial with lambda_s kept as symbols.
inline std::vector<Poly> curve_poly_symbolic(const GenusContext& ctx) {
    const int g = ctx.genus();
    std::vector<Poly> c(static_cast<std::size_t>(2 * g + 2));
    c.back() = Poly(1);
    for (int s : ctx.lambda_indices()) c[static_cast<std::size_t>(detail::curve_exponent(g, s))] = Symbol::lam(s);
    return c;
}

template <class T>
std::vector<T> formal_derivative(const std::vector<T>& f) {
    std::vector<T> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
    return d;
}

namespace detail {
inline int discriminant_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 ? -1 : 1; }
} // namespace detail

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for the monic curve polynomial of degree n = 2g+1.
inline Rational discriminant(const LambdaVector& lv) {
    const auto f = curve_poly(lv);
    const auto df = formal_derivative(f);
    return Rational(detail::discriminant_sign(f.size() - 1)) * sylvester_resultant(f, df);
}

/// The discriminant as a polynomial in the lambda symbols.
inline Poly discriminant_symbolic(const GenusContext& ctx) {
    const auto f = curve_poly_symbolic(ctx);
    const auto df = formal_derivative(f);
    return Rational(detail::discriminant_sign(f.size() - 1)) *
           sylvester_resultant_ring<Poly>(std::span<const Poly>(f), std::span<const Poly>(df));
}

inline bool in_sigma(const LambdaVector& lv) { return discriminant(lv).is_zero(); }

} // namespace hyperell
