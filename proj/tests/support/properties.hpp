#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each suite draws `cases` inputs from a fixed seed.

#include "sbalg/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sbalg::testing {

struct PropertyResult {
    std::string name;
    std::string field;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;  // inconclusive verdicts, not compared
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    std::string summary() const;
};

// Over the field K (ModP uses whatever modulus is in scope).
template <Field K>
PropertyResult cover_minimality(std::size_t cases, std::uint64_t seed);
template <Field K>
PropertyResult syzygy_exactness(std::size_t cases, std::uint64_t seed);
template <Field K>
PropertyResult pd_additivity(std::size_t cases, std::uint64_t seed);
template <Field K>
PropertyResult linear_algebra_laws(std::size_t cases, std::uint64_t seed);
template <Field K>
PropertyResult round_trip(std::size_t cases, std::uint64_t seed);

// Same integer input over Q and F_p: equal pd verdicts and syzygy dims.
PropertyResult field_independence(std::size_t cases, std::uint64_t seed, std::uint32_t prime = 101);

// Every suite above, over Q and F_prime.
std::vector<PropertyResult> run_all_properties(std::size_t cases, std::uint64_t seed, std::uint32_t prime = 101);

}  // namespace sbalg::testing
