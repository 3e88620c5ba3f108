#pragma once

#include "sbalg/representation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbalg {

template <Field K>
struct SubModule {
    RepPtr<K> module;
    ModuleMap<K> inclusion;
};

template <Field K>
struct QuotientModule {
    RepPtr<K> module;
    ModuleMap<K> projection;
};

// The submodule spanned by the columns of basis[v] at each vertex; throws
// ModuleError when the spaces are not closed under the arrows.
template <Field K>
SubModule<K> submodule_from_basis(const RepPtr<K>& m, std::vector<Matrix<K>> basis);

// rad M: at each vertex, the span of the images of the arrows ending there.
template <Field K>
SubModule<K> radical(const RepPtr<K>& m);
template <Field K>
std::vector<std::size_t> top_dims(const Representation<K>& m);
// Dimension vectors of rad^k M / rad^(k+1) M for k = 0, 1, ... until zero.
template <Field K>
std::vector<std::vector<std::size_t>> loewy_layers(const RepPtr<K>& m);

template <Field K>
SubModule<K> kernel_of(const ModuleMap<K>& f);
template <Field K>
QuotientModule<K> cokernel_of(const ModuleMap<K>& f);

template <Field K>
struct CoverData {
    RepPtr<K> module;
    RepPtr<K> cover;
    std::vector<std::size_t> generators;  // vertex of each projective summand, in order
    ModuleMap<K> cover_map;
    RepPtr<K> syzygy;
    ModuleMap<K> inclusion;  // syzygy -> cover
};

template <Field K>
CoverData<K> projective_cover(const RepPtr<K>& m);
template <Field K>
RepPtr<K> syzygy(const RepPtr<K>& m);

template <Field K>
struct HomBasis {
    RepPtr<K> source;
    RepPtr<K> target;
    std::vector<ModuleMap<K>> basis;
    std::size_t dim() const { return basis.size(); }
};

template <Field K>
HomBasis<K> hom_basis(const RepPtr<K>& m, const RepPtr<K>& n);
template <Field K>
std::size_t hom_dim(const Representation<K>& m, const Representation<K>& n);

template <Field K>
struct IsoResult {
    enum class Outcome {
        Found,
        DimsDiffer,   // sound negative
        NoMaps,       // Hom(M,N) or Hom(N,M) is zero: sound negative
        NotFound,     // no isomorphism found after the trials; not a proof
    };
    Outcome outcome = Outcome::NotFound;
    std::optional<ModuleMap<K>> iso;
    std::size_t trials_used = 0;

    bool found() const { return outcome == Outcome::Found; }
    bool sound_negative() const { return outcome == Outcome::DimsDiffer || outcome == Outcome::NoMaps; }
    std::string describe() const;
};

// Default number of random trials: 20 over the rationals, 40 over prime fields.
template <Field K>
std::size_t default_iso_trials();

// Positive answers carry a verified isomorphism M -> N.
template <Field K>
IsoResult<K> certified_iso(const RepPtr<K>& m, const RepPtr<K>& n, std::size_t trials = 0,
                           std::uint64_t seed = 0);

// Maps s: S -> M and p: M -> S with p s = id_S.
template <Field K>
struct SplitPair {
    ModuleMap<K> section;
    ModuleMap<K> retraction;
};

// Exact test via the composition pairing Hom(S,M) x Hom(M,S) -> k.
template <Field K>
std::optional<SplitPair<K>> is_direct_summand_simple(const RepPtr<K>& m, std::string_view vertex);

// Verifies both maps intertwine and p s = id.
template <Field K>
bool verify_split_pair(const SplitPair<K>& sp);

template <Field K>
struct PdReport {
    enum class Verdict { Finite, Infinite, Inconclusive, MinusInfinity };
    Verdict verdict = Verdict::Inconclusive;
    int value = 0;                  // the n of Finite(n)
    std::size_t cycle_from = 0;     // Infinite: Omega^from isomorphic to Omega^to
    std::size_t cycle_to = 0;
    std::size_t cutoff = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::size_t>> chain;  // dims of Omega^0 M, Omega^1 M, ...
    std::vector<RepPtr<K>> syzygies;
    std::optional<ModuleMap<K>> certificate;      // Omega^from -> Omega^to

    bool finite() const { return verdict == Verdict::Finite; }
    bool infinite() const { return verdict == Verdict::Infinite; }
    std::string verdict_string() const;
    // One JSON object: verdict, value, cycle, cutoff, seed, chain, field.
    std::string to_json() const;
};

// Iterates syzygies up to `cutoff` times. Finite(n) when Omega^(n+1) = 0;
// Infinite when some Omega^j is certified isomorphic to an earlier Omega^i.
template <Field K>
PdReport<K> projdim(const RepPtr<K>& m, std::size_t cutoff = 32, std::size_t trials = 0, std::uint64_t seed = 0);

// Combines verdicts as for a direct sum: Infinite dominates, otherwise the
// larger finite value; MinusInfinity is neutral.
struct PdValue {
    enum class Kind { MinusInfinity, Finite, Infinite, Inconclusive };
    Kind kind = Kind::MinusInfinity;
    int value = 0;
    friend bool operator==(const PdValue&, const PdValue&) = default;
};
template <Field K>
PdValue pd_value(const PdReport<K>& r);
PdValue pd_max(PdValue a, PdValue b);

#define SBALG_HOM_EXTERN(K)                                                                            \
    extern template SubModule<K> submodule_from_basis(const RepPtr<K>&, std::vector<Matrix<K>>);       \
    extern template SubModule<K> radical(const RepPtr<K>&);                                            \
    extern template std::vector<std::size_t> top_dims(const Representation<K>&);                       \
    extern template std::vector<std::vector<std::size_t>> loewy_layers(const RepPtr<K>&);              \
    extern template SubModule<K> kernel_of(const ModuleMap<K>&);                                       \
    extern template QuotientModule<K> cokernel_of(const ModuleMap<K>&);                                \
    extern template CoverData<K> projective_cover(const RepPtr<K>&);                                   \
    extern template RepPtr<K> syzygy(const RepPtr<K>&);                                                \
    extern template HomBasis<K> hom_basis(const RepPtr<K>&, const RepPtr<K>&);                         \
    extern template std::size_t hom_dim(const Representation<K>&, const Representation<K>&);          \
    extern template struct IsoResult<K>;                                                               \
    extern template std::size_t default_iso_trials<K>();                                               \
    extern template IsoResult<K> certified_iso(const RepPtr<K>&, const RepPtr<K>&, std::size_t,        \
                                               std::uint64_t);                                         \
    extern template std::optional<SplitPair<K>> is_direct_summand_simple(const RepPtr<K>&,             \
                                                                         std::string_view);            \
    extern template bool verify_split_pair(const SplitPair<K>&);                                       \
    extern template struct PdReport<K>;                                                                \
    extern template PdReport<K> projdim(const RepPtr<K>&, std::size_t, std::size_t, std::uint64_t);    \
    extern template PdValue pd_value(const PdReport<K>&);

SBALG_HOM_EXTERN(Rational)
SBALG_HOM_EXTERN(ModP)
#undef SBALG_HOM_EXTERN

}  // namespace sbalg
