#pragma once

// Independent reference computations used to cross-check the library.

#include "sbalg/decomp.hpp"

#include <map>
#include <random>
#include <utility>

namespace sbalg::testing {

// Multiplicity of every interval [i, j] (positions along `order`) in a
// representation of a path quiver, by Moebius inversion of the rank of
// lim -> colim over each sub-path. No basis changes involved.
template <Field K>
std::map<std::pair<std::size_t, std::size_t>, std::size_t> interval_multiplicities_by_ranks(
    const Representation<K>& v, const std::vector<std::string>& order);

// Multiplicity of a brick B (End B = k) as a direct summand of M: the rank
// of the pairing Hom(B, M) x Hom(M, B) -> End B = k.
template <Field K>
std::size_t brick_multiplicity(const RepPtr<K>& brick, const RepPtr<K>& m, std::size_t top_vertex);

// Random string word from a random start vertex, built letter by letter and
// kept only while string_module accepts it.
StringWord random_string_word(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_letters);

// A random module over a random small family algebra: either random_module
// or a sum of random strings in a scrambled basis.
template <Field K>
RepPtr<K> random_family_module(std::mt19937_64& rng, std::size_t budget);
template <Field K>
RepPtr<K> random_module_over(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t budget);

// Sum of 1..3 random strings, with a random basis change made of integer
// entries, so the same rng state gives the same module over every field.
template <Field K>
RepPtr<K> random_string_sum(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t budget);

AlgebraPtr random_family_algebra(std::mt19937_64& rng);

}  // namespace sbalg::testing
