#pragma once

#include <stdexcept>
#include <string>

namespace sftkit {

// Malformed input: bad file, unknown generator letter, value outside the
// alphabet, mismatched groups. Maps to CLI exit 65.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (window size, enumeration count,
// constructed alphabet, lifted pattern set, DP state table). Maps to CLI
// exit 69.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caps for the search and construction procedures. All semi-decision
// procedures take explicit budgets on top of these; the caps only bound
// memory and the size of intermediate objects.
struct Limits {
    std::size_t max_window_cells = 10000;    // cells in a ball or box window
    std::size_t max_enumerated = 5000000;    // admissible patterns materialized
    std::size_t max_alphabet = 65536;        // constructed alphabet size
    std::size_t max_lifted = 1000000;        // lifted forbidden patterns
    std::size_t max_table_rows = 1000000;    // local-function table rows
    std::size_t max_dp_states = 4000000;     // frontier states in exact counting
};

}  // namespace sftkit
