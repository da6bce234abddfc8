#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "hyperell/errors.hpp"

namespace hyperell {

/// Graded coordinate symbols. B1/B2/B3 with odd index k are the generators
/// p_{1,k}, p_{1,1,k}, p_{1,1,1,k}; W(k,l) stands for p_{k,l} with 3 <= k <= l;
/// LAM(s) is the curve parameter lambda_s.
enum class Kind : std::uint8_t { B1 = 0, B2 = 1, B3 = 2, W = 3, LAM = 4 };

struct Symbol {
    Kind kind = Kind::B1;
    int i = 1;
    int j = 0;

    static Symbol b1(int k) { return generator(Kind::B1, k); }
    static Symbol b2(int k) { return generator(Kind::B2, k); }
    static Symbol b3(int k) { return generator(Kind::B3, k); }
    static Symbol generator(Kind kind, int k) {
        if (k < 1 || k % 2 == 0) throw index_out_of_range("generator index must be odd and positive");
        return {kind, k, 0};
    }
    static Symbol w(int k, int l) {
        if (k > l) std::swap(k, l);
        if (k < 3 || k % 2 == 0 || l % 2 == 0)
            throw index_out_of_range("w index pair must be odd with both indices >= 3");
        return {Kind::W, k, l};
    }
    static Symbol lam(int s) {
        if (s < 4 || s % 2 != 0) throw index_out_of_range("lambda index must be even and >= 4");
        return {Kind::LAM, s, 0};
    }

    bool is_generator() const { return kind == Kind::B1 || kind == Kind::B2 || kind == Kind::B3; }

    int weight() const {
        switch (kind) {
        case Kind::B1: return 1 + i;
        case Kind::B2: return 2 + i;
        case Kind::B3: return 3 + i;
        case Kind::W: return i + j;
        case Kind::LAM: return i;
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
        case Kind::B1: return "b1_" + std::to_string(i);
        case Kind::B2: return "b2_" + std::to_string(i);
        case Kind::B3: return "b3_" + std::to_string(i);
        case Kind::W: return "w_" + std::to_string(i) + "_" + std::to_string(j);
        case Kind::LAM: return "la" + std::to_string(i);
        }
        return {};
    }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
    friend bool operator==(const Symbol&, const Symbol&) = default;
};

} // namespace hyperell

template <>
struct std::hash<hyperell::Symbol> {
    std::size_t operator()(const hyperell::Symbol& s) const noexcept {
        return (static_cast<std::size_t>(s.kind) << 40) ^ (static_cast<std::size_t>(s.i) << 20) ^
               static_cast<std::size_t>(s.j);
    }
};
