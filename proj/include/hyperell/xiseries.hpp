#pragma once

#include <cstddef>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/poly.hpp"

namespace hyperell {

/// Laurent series in xi with polynomial coefficients, carrying powers
/// -1 .. 2g. Products drop everything above xi^{2g}.
class XiSeries {
public:
    static constexpr int min_power = -1;

    explicit XiSeries(int genus) : genus_(genus), coeffs_(static_cast<std::size_t>(2 * genus + 2)) {
        if (genus < 1) throw error("XiSeries: genus must be >= 1");
    }

    int genus() const { return genus_; }
    int max_power() const { return 2 * genus_; }

    const Poly& operator[](int power) const { return coeffs_.at(slot(power)); }
    Poly& operator[](int power) { return coeffs_.at(slot(power)); }

    /// Sets a coefficient; powers above 2g are silently truncated.
    XiSeries& set(int power, Poly c) {
        if (power > max_power()) return *this;
        coeffs_.at(slot(power)) = std::move(c);
        return *this;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    XiSeries& operator+=(const XiSeries& o) {
        check_genus(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    XiSeries& operator-=(const XiSeries& o) {
        check_genus(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    XiSeries& operator*=(const Rational& k) {
        for (auto& c : coeffs_) c *= k;
        return *this;
    }
    friend XiSeries operator+(XiSeries a, const XiSeries& b) { return a += b; }
    friend XiSeries operator-(XiSeries a, const XiSeries& b) { return a -= b; }
    friend XiSeries operator*(const Rational& k, XiSeries a) { return a *= k; }
    XiSeries operator-() const {
        XiSeries out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    /// Throws offset_underflow if a xi^{-2} term would be produced.
    friend XiSeries operator*(const XiSeries& a, const XiSeries& b) {
        a.check_genus(b);
        XiSeries out(a.genus_);
        for (int p = min_power; p <= a.max_power(); ++p) {
            const Poly& ap = a[p];
            if (ap.is_zero()) continue;
            for (int q = min_power; q <= a.max_power(); ++q) {
                const Poly& bq = b[q];
                if (bq.is_zero()) continue;
                int r = p + q;
                if (r < min_power) throw offset_underflow("XiSeries: product needs xi^-2");
                if (r > a.max_power()) continue;
                out[r] += ap * bq;
            }
        }
        return out;
    }

    friend bool operator==(const XiSeries&, const XiSeries&) = default;

private:
    std::size_t slot(int power) const {
        if (power < min_power || power > max_power()) throw error("XiSeries: power out of range");
        return static_cast<std::size_t>(power - min_power);
    }
    void check_genus(const XiSeries& o) const {
        if (o.genus_ != genus_) throw error("XiSeries: genus mismatch");
    }

    int genus_;
    std::vector<Poly> coeffs_;
};

} // namespace hyperell
