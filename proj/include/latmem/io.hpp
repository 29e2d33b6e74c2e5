#pragma once

#include <string>

#include "latmem/cvp.hpp"
#include "latmem/oracle.hpp"

namespace latmem {

// Parsed instance file. "kind" selects which optional parts must be present.
struct Instance {
    enum class Kind { Cvp, Lmp, Svp };
    Kind kind;
    RatMatrix lattice;  // columns are basis vectors
    IntVector target;   // cvp
    std::optional<NormSpec> norm;
    std::optional<ConvexBody> body;  // lmp
};

// Throws ContractError on schema violations; diagnostics carry field names.
Instance parse_instance(const std::string& json_text);

struct RunOptions {
    bool no_replacement = false;
    bool force_oracle = false;
    std::size_t max_dimension = 8;
    long rounding_bits = 0;
};

// Executes the instance; returns the JSON result document as text.
std::string run_instance(const Instance& inst, const RunOptions& opts);

// Runs both the main algorithm and the oracle; true iff they agree.
bool check_instance(const Instance& inst, const RunOptions& opts, std::string* report);

}  // namespace latmem
