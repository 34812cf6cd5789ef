#ifndef MZP_ERRORS_HPP
#define MZP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzp {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact division found a nonzero remainder
struct non_zero_remainder : error {
    non_zero_remainder() : error("exact division left a nonzero remainder") {}
};

// Newton inversion produced a non-integer coefficient (inconsistent input)
struct non_integral_coefficient : error {
    non_integral_coefficient() : error("power sums do not come from an integer polynomial") {}
};

struct non_integral_result : error {
    explicit non_integral_result(const std::string& what) : error(what) {}
};

struct ctx_mismatch : error {
    ctx_mismatch() : error("residues belong to different quotient contexts") {}
};

struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

struct precondition_violated : error {
    std::string hypothesis;
    explicit precondition_violated(const std::string& h)
        : error("precondition violated: " + h), hypothesis(h) {}
};

struct not_prime : error {
    explicit not_prime(const std::string& what) : error(what) {}
};

struct hypothesis_violated : error {
    std::string which;
    explicit hypothesis_violated(const std::string& h)
        : error("hypothesis violated: " + h), which(h) {}
};

// a coefficient valuation fell below the guaranteed floor; this cannot
// happen for genuine multiplier polynomials, so treat it as an alarm
struct bound_violated : error {
    explicit bound_violated(const std::string& what) : error(what) {}
};

// comparison of valuations that the available precision cannot decide
struct ambiguous_valuation : error {
    ambiguous_valuation() : error("valuation comparison is not decided at this precision") {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace mzp

#endif
