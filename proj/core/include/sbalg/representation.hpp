#pragma once

#include "sbalg/matrix.hpp"
#include "sbalg/presentation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbalg {

class ModuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidString : public ModuleError {
public:
    using ModuleError::ModuleError;
};

// Finite-dimensional module over an algebra: a vector space per vertex and a
// matrix per arrow (rows = dim target, cols = dim source). The constructor
// rejects shape mismatches and violated relations.
template <Field K>
class Representation {
public:
    Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix<K>> arrow_mats);
    static Representation zero(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const Presentation& presentation() const { return alg_->presentation(); }

    std::size_t dim(std::size_t v) const { return dims_[v]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }
    bool is_zero() const { return total_ == 0; }

    const Matrix<K>& arrow(std::size_t a) const { return mats_[a]; }
    const std::vector<Matrix<K>>& arrow_mats() const { return mats_; }

    // Action of a path given in application order, as a dim(target) x dim(source) matrix.
    Matrix<K> path_matrix(std::span<const std::size_t> path) const;

    friend bool operator==(const Representation& a, const Representation& b)
    {
        return (a.alg_ == b.alg_ || a.presentation() == b.presentation()) && a.dims_ == b.dims_ &&
               a.mats_ == b.mats_;
    }

private:
    AlgebraPtr alg_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<K>> mats_;
    std::size_t total_ = 0;
};

template <Field K>
using RepPtr = std::shared_ptr<const Representation<K>>;

template <Field K>
RepPtr<K> make_rep(Representation<K> m)
{
    return std::make_shared<const Representation<K>>(std::move(m));
}

// Per-vertex matrices f_v : source_v -> target_v.
template <Field K>
struct ModuleMap {
    RepPtr<K> source;
    RepPtr<K> target;
    std::vector<Matrix<K>> mats;
};

struct MorphismCheck {
    bool ok = true;
    std::optional<std::string> violated_arrow;
    explicit operator bool() const { return ok; }
};

// Intertwining at every arrow; throws ModuleError on shape mismatch.
template <Field K>
MorphismCheck check_morphism(const ModuleMap<K>& f);

template <Field K>
ModuleMap<K> identity_map(const RepPtr<K>& m);
template <Field K>
ModuleMap<K> zero_map(const RepPtr<K>& source, const RepPtr<K>& target);
// g after f.
template <Field K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f);
// Invertible at every vertex and intertwining.
template <Field K>
bool is_isomorphism(const ModuleMap<K>& f);
template <Field K>
std::optional<ModuleMap<K>> inverse_map(const ModuleMap<K>& f);
template <Field K>
ModuleMap<K> linear_combination(const std::vector<ModuleMap<K>>& maps, const std::vector<K>& coeffs,
                                 const RepPtr<K>& source, const RepPtr<K>& target);

struct StringLetter {
    std::string arrow;
    bool inverse = false;
    friend bool operator==(const StringLetter&, const StringLetter&) = default;
};

// Walk in the quiver: direct letters follow an arrow, inverse letters walk
// against it.
struct StringWord {
    std::string base;
    std::vector<StringLetter> letters;

    StringWord& direct(std::string a)
    {
        letters.push_back({std::move(a), false});
        return *this;
    }
    StringWord& inverse(std::string a)
    {
        letters.push_back({std::move(a), true});
        return *this;
    }
    std::size_t length() const { return letters.size(); }
    friend bool operator==(const StringWord&, const StringWord&) = default;
};

// Vertex sequence visited by the walk; throws InvalidString on a broken walk.
std::vector<std::string> walk_vertices(const Presentation& p, const StringWord& w);
// Basis vector k of the string module sits at walk_vertices(w)[k]; within a
// vertex, vectors are ordered by walk position.
template <Field K>
RepPtr<K> string_module(const AlgebraPtr& alg, const StringWord& w);

template <Field K>
RepPtr<K> projective(const AlgebraPtr& alg, std::size_t x);
template <Field K>
RepPtr<K> projective(const AlgebraPtr& alg, std::string_view x);
template <Field K>
RepPtr<K> simple(const AlgebraPtr& alg, std::string_view x);

// The map P(x) -> M sending the identity class to the vector m in M_x.
template <Field K>
ModuleMap<K> map_from_projective(const RepPtr<K>& px, std::size_t x, const RepPtr<K>& target,
                                 const Matrix<K>& m);

template <Field K>
struct DirectSum {
    RepPtr<K> sum;
    std::vector<ModuleMap<K>> injections;
    std::vector<ModuleMap<K>> projections;
};

template <Field K>
DirectSum<K> direct_sum(const AlgebraPtr& alg, const std::vector<RepPtr<K>>& parts);
template <Field K>
RepPtr<K> direct_sum_module(const AlgebraPtr& alg, const std::vector<RepPtr<K>>& parts);
template <Field K>
RepPtr<K> power(const RepPtr<K>& m, std::size_t n);

// Extends by zero to a larger algebra whose quiver contains the small one.
template <Field K>
RepPtr<K> inflate(const RepPtr<K>& m, const AlgebraPtr& big);
// Forgets the vertices outside a subalgebra (full subquiver); the module
// must vanish there unless `allow_truncation` is set.
template <Field K>
RepPtr<K> restrict_to(const RepPtr<K>& m, const AlgebraPtr& small, bool allow_truncation = false);

template <Field K>
bool supported_on(const Representation<K>& m, const std::vector<std::string>& vertices);

// Re-expresses m in a new basis: b[v] holds the new basis vectors of M_v as columns.
template <Field K>
ModuleMap<K> change_basis(const RepPtr<K>& m, const std::vector<Matrix<K>>& b);

// Cokernel of a random map between random sums of projectives, so always a
// module; total dimension at most `budget`. Deterministic per seed.
template <Field K>
RepPtr<K> random_module(const AlgebraPtr& alg, std::uint64_t seed, std::size_t budget);

// Graphviz rendering of the coefficient quiver: one node per basis vector,
// solid edges for alpha arrows, dashed for beta arrows.
template <Field K>
std::string to_dot(const Representation<K>& m, const std::string& title = "M");

std::string dims_to_string(const Presentation& p, const std::vector<std::size_t>& dims);

#define SBALG_REP_EXTERN(K)                                                                           \
    extern template class Representation<K>;                                                          \
    extern template MorphismCheck check_morphism(const ModuleMap<K>&);                                \
    extern template ModuleMap<K> identity_map(const RepPtr<K>&);                                      \
    extern template ModuleMap<K> zero_map(const RepPtr<K>&, const RepPtr<K>&);                        \
    extern template ModuleMap<K> compose(const ModuleMap<K>&, const ModuleMap<K>&);                   \
    extern template bool is_isomorphism(const ModuleMap<K>&);                                         \
    extern template std::optional<ModuleMap<K>> inverse_map(const ModuleMap<K>&);                     \
    extern template ModuleMap<K> linear_combination(const std::vector<ModuleMap<K>>&,                 \
                                                    const std::vector<K>&, const RepPtr<K>&,          \
                                                    const RepPtr<K>&);                                \
    extern template RepPtr<K> string_module(const AlgebraPtr&, const StringWord&);                    \
    extern template RepPtr<K> projective(const AlgebraPtr&, std::size_t);                             \
    extern template RepPtr<K> projective(const AlgebraPtr&, std::string_view);                        \
    extern template RepPtr<K> simple(const AlgebraPtr&, std::string_view);                            \
    extern template ModuleMap<K> map_from_projective(const RepPtr<K>&, std::size_t, const RepPtr<K>&, \
                                                     const Matrix<K>&);                               \
    extern template DirectSum<K> direct_sum(const AlgebraPtr&, const std::vector<RepPtr<K>>&);        \
    extern template RepPtr<K> direct_sum_module(const AlgebraPtr&, const std::vector<RepPtr<K>>&);    \
    extern template RepPtr<K> power(const RepPtr<K>&, std::size_t);                                   \
    extern template RepPtr<K> inflate(const RepPtr<K>&, const AlgebraPtr&);                           \
    extern template RepPtr<K> restrict_to(const RepPtr<K>&, const AlgebraPtr&, bool);                 \
    extern template bool supported_on(const Representation<K>&, const std::vector<std::string>&);     \
    extern template ModuleMap<K> change_basis(const RepPtr<K>&, const std::vector<Matrix<K>>&);       \
    extern template RepPtr<K> random_module(const AlgebraPtr&, std::uint64_t, std::size_t);           \
    extern template std::string to_dot(const Representation<K>&, const std::string&);

SBALG_REP_EXTERN(Rational)
SBALG_REP_EXTERN(ModP)
#undef SBALG_REP_EXTERN

}  // namespace sbalg
