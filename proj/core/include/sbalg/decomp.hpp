#pragma once

#include "sbalg/homology.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbalg {

class CertificateFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertices of a quiver whose underlying graph is a path, listed from one end
// to the other (starting at `first` when given). Throws PresentationError
// for any other shape.
std::vector<std::string> path_order(const Presentation& p, const std::string& first = {});

struct IntervalSummand {
    std::size_t lo = 0;  // positions in the path order, inclusive
    std::size_t hi = 0;
    std::size_t multiplicity = 0;
    std::vector<std::string> vertices;
    friend bool operator==(const IntervalSummand&, const IntervalSummand&) = default;
};

template <Field K>
struct IntervalDecomposition {
    std::vector<std::string> order;
    std::vector<IntervalSummand> summands;                    // sorted by (lo, hi)
    std::vector<std::pair<std::size_t, std::size_t>> pieces;  // (lo, hi) of each interval copy
    // Per vertex (presentation index): new basis as columns, and the piece
    // owning each column.
    std::vector<Matrix<K>> basis;
    std::vector<std::vector<std::size_t>> owner;
    ModuleMap<K> certificate;  // transformed module -> input, given by `basis`
};

// Interval decomposition of a representation of a type-A quiver by a sweep
// along the path that keeps a partial basis adapted to every arrow seen so far.
template <Field K>
IntervalDecomposition<K> interval_decompose(const RepPtr<K>& v, const std::string& first = {});

// Re-checks the basis change: invertible, and every arrow becomes a 0/1
// matrix linking each interval copy to itself.
template <Field K>
bool verify_interval_decomposition(const IntervalDecomposition<K>& d, const Representation<K>& v);

// ---------------------------------------------------------------------------
// Level-2 machinery: the projective P(c2), the path subquiver U, the set of
// ten string modules through c2.

// The ten walks through c2, first those reaching b1, each row from the
// longest walk to the shortest.
std::vector<StringWord> xset_words();
template <Field K>
std::vector<RepPtr<K>> xset(int r);
// Index in xset_words() of the interval [lo, hi] of subquiver_u() order, or -1.
int xset_index(std::size_t lo, std::size_t hi);

template <Field K>
struct StripResult {
    std::size_t a = 0;
    RepPtr<K> pc2_power;      // P(c2)^a
    RepPtr<K> complement;
    ModuleMap<K> section;     // P(c2)^a -> M
    ModuleMap<K> retraction;  // M -> P(c2)^a, retraction o section = id
    ModuleMap<K> inclusion;   // complement -> M
    ModuleMap<K> certificate; // P(c2)^a (+) complement -> M, verified isomorphism
};

// Splits off P(c2)^a where a is the rank of v -> (alpha^3 v, beta^2 v) on M_c2.
template <Field K>
StripResult<K> strip_pc2(const RepPtr<K>& m);

template <Field K>
struct Lemma2Split {
    RepPtr<K> input;
    std::array<std::size_t, 10> x_multiplicity{};
    RepPtr<K> X;
    std::size_t a = 0;
    RepPtr<K> Mprime;
    RepPtr<K> assembled;       // X (+) P(c2)^a (+) M'
    ModuleMap<K> certificate;  // assembled -> input, verified isomorphism
    std::string checksum;

    std::string to_json() const;
};

// M = X (+) P(c2)^a (+) M' with X a sum of the ten string modules and M'
// vanishing at c2. Throws CertificateFailure when a check does not hold.
template <Field K>
Lemma2Split<K> lemma2_split(const RepPtr<K>& m);

// Stable digest of the matrices of a module map.
template <Field K>
std::string map_checksum(const ModuleMap<K>& f);

#define SBALG_DECOMP_EXTERN(K)                                                                          \
    extern template IntervalDecomposition<K> interval_decompose(const RepPtr<K>&, const std::string&); \
    extern template bool verify_interval_decomposition(const IntervalDecomposition<K>&,                 \
                                                       const Representation<K>&);                       \
    extern template std::vector<RepPtr<K>> xset<K>(int);                                                \
    extern template StripResult<K> strip_pc2(const RepPtr<K>&);                                         \
    extern template struct Lemma2Split<K>;                                                              \
    extern template Lemma2Split<K> lemma2_split(const RepPtr<K>&);                                      \
    extern template std::string map_checksum(const ModuleMap<K>&);

SBALG_DECOMP_EXTERN(Rational)
SBALG_DECOMP_EXTERN(ModP)
#undef SBALG_DECOMP_EXTERN

}  // namespace sbalg
