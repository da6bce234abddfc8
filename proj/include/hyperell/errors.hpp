#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperell {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactmath
struct empty_polynomial : error { using error::error; };

// polyring
struct offset_underflow : error { using error::error; };

// relations
struct index_out_of_range : error { using error::error; };

// rewriter
struct internal_inconsistency : error { using error::error; };
struct unresolved_symbol : error { using error::error; };
struct unsupported_symbol : error { using error::error; };
struct division_by_zero_poly : error { using error::error; };

// numerics
struct degenerate_lattice : error { using error::error; };
struct near_pole : error { using error::error; };
struct insufficient_samples : error { using error::error; };

// exprlang
struct syntax_error : error {
    syntax_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct index_error : error {
    index_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

} // namespace hyperell
