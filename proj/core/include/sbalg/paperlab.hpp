#pragma once

#include "sbalg/decomp.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sbalg {

// Walks and builders for the modules Z_m, Z_m[t], U_mt and the maps
// phi_mt : Z_m[t] -> Z_m[t+1], all over lambda_algebra(r, m).

// The string part of Z_m[t] (for m = 0 there is none and the word is empty).
StringWord z_walk(int m, int t = 1);

template <Field K>
RepPtr<K> build_Z(int r, int m);
template <Field K>
RepPtr<K> build_Zt(int r, int m, int t);
template <Field K>
ModuleMap<K> build_phi(int r, int m, int t);
// The expected kernel of phi_mt; zero for m >= 3.
template <Field K>
RepPtr<K> build_U(int r, int m, int t);

// Radical layers of the indecomposable projectives of lambda_algebra(r, 5),
// transcribed from their pictures.
struct ProjectiveShape {
    std::string vertex;
    std::vector<std::vector<std::string>> layers;
};
std::vector<ProjectiveShape> appendix_shapes(int r);

struct FamilyConfig {
    int r = 1;
    int m_max = 3;
    int t_max = 3;
    FieldSpec field;
    std::uint64_t seed = 0;
    std::size_t cutoff = 0;  // 0: r + m + 4 for family modules
    std::size_t samples = 100;
    std::size_t max_dim = 40;
    std::size_t trials = 0;  // 0: default_iso_trials

    // Throws std::invalid_argument.
    void validate() const;
    std::size_t cutoff_for(int m) const { return cutoff ? cutoff : static_cast<std::size_t>(r + m + 4); }
};

enum class ClaimStatus { Pass, Fail, Inconclusive };
std::string_view status_name(ClaimStatus s);

struct Evidence {
    std::string check;
    ClaimStatus status = ClaimStatus::Pass;
    std::string detail;
};

struct ClaimReport {
    std::string claim;
    std::string field;
    ClaimStatus status = ClaimStatus::Pass;
    std::vector<Evidence> evidence;

    void add(std::string check, ClaimStatus s, std::string detail = {});
    void add(std::string check, bool ok, std::string detail = {});
    std::string digest() const;
    std::string to_text(bool verbose = false) const;
    // One line of JSON.
    std::string to_json(const FamilyConfig& cfg) const;
};

const std::vector<std::string>& claim_ids();

// Runs one claim; mathematical failures are reported, never thrown. Throws
// std::invalid_argument for an unknown id or an invalid config.
ClaimReport verify(std::string_view claim, const FamilyConfig& cfg);

// Random module of total dimension <= max_dim over the algebra. Odd seeds mix
// ten-member strings, P(c2) and random parts behind a random basis change
// (only when the algebra has the vertex c2); even seeds use random_module.
template <Field K>
RepPtr<K> lemma2_sample(const AlgebraPtr& alg, std::uint64_t seed, std::size_t max_dim);

// Random invertible matrix (product of unit triangular factors).
template <Field K>
Matrix<K> random_invertible(std::size_t n, std::mt19937_64& rng);

// The same module written in a random basis.
template <Field K>
RepPtr<K> scramble(const RepPtr<K>& m, std::uint64_t seed);

#define SBALG_LAB_EXTERN(K)                                                                  \
    extern template RepPtr<K> build_Z<K>(int, int);                                          \
    extern template RepPtr<K> build_Zt<K>(int, int, int);                                    \
    extern template ModuleMap<K> build_phi<K>(int, int, int);                                \
    extern template RepPtr<K> build_U<K>(int, int, int);                                     \
    extern template RepPtr<K> lemma2_sample<K>(const AlgebraPtr&, std::uint64_t, std::size_t); \
    extern template Matrix<K> random_invertible<K>(std::size_t, std::mt19937_64&);           \
    extern template RepPtr<K> scramble(const RepPtr<K>&, std::uint64_t);

SBALG_LAB_EXTERN(Rational)
SBALG_LAB_EXTERN(ModP)
#undef SBALG_LAB_EXTERN

}  // namespace sbalg
