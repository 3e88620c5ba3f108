#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sbalg {

using Rational = mpq_class;

// Residue class modulo a prime p < 2^31. The modulus is a per-thread setting
// so that matrices of residues stay as compact as matrices of plain integers;
// use ModulusScope to fix it for the duration of a computation.
class ModP {
public:
    ModP() = default;
    explicit ModP(std::int64_t v);

    static std::uint32_t modulus() { return modulus_; }
    static void set_modulus(std::uint32_t p);

    std::uint32_t value() const { return v_; }

    ModP& operator+=(ModP o);
    ModP& operator-=(ModP o);
    ModP& operator*=(ModP o);
    ModP& operator/=(ModP o);
    ModP operator-() const;
    ModP inverse() const;

    friend ModP operator+(ModP a, ModP b) { return a += b; }
    friend ModP operator-(ModP a, ModP b) { return a -= b; }
    friend ModP operator*(ModP a, ModP b) { return a *= b; }
    friend ModP operator/(ModP a, ModP b) { return a /= b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

private:
    std::uint32_t v_ = 0;
    static thread_local std::uint32_t modulus_;
};

class ModulusScope {
public:
    explicit ModulusScope(std::uint32_t p) : saved_(ModP::modulus()) { ModP::set_modulus(p); }
    ~ModulusScope() { ModP::set_modulus(saved_); }
    ModulusScope(const ModulusScope&) = delete;
    ModulusScope& operator=(const ModulusScope&) = delete;

private:
    std::uint32_t saved_;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    // Bit size of numerator and denominator; elimination prefers cheap pivots.
    static std::size_t pivot_cost(const Rational& x);
    static std::string to_string(const Rational& x) { return x.get_str(); }
    static Rational parse(std::string_view text);
    static Rational random(std::mt19937_64& rng);
    static std::string name() { return "q"; }
};

template <>
struct FieldTraits<ModP> {
    static ModP from_int(std::int64_t v) { return ModP(v); }
    static bool is_zero(const ModP& x) { return x.value() == 0; }
    static std::size_t pivot_cost(const ModP&) { return 0; }
    static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
    static ModP parse(std::string_view text);
    static ModP random(std::mt19937_64& rng);
    static std::string name() { return "fp:" + std::to_string(ModP::modulus()); }
};

template <class K>
concept Field = std::regular<K> && requires(const K& a, const K& b, std::string_view s,
                                            std::mt19937_64& rng) {
    { K(a + b) } -> std::same_as<K>;
    { K(a - b) } -> std::same_as<K>;
    { K(a * b) } -> std::same_as<K>;
    { K(a / b) } -> std::same_as<K>;
    { FieldTraits<K>::from_int(1) } -> std::same_as<K>;
    { FieldTraits<K>::is_zero(a) } -> std::same_as<bool>;
    { FieldTraits<K>::pivot_cost(a) } -> std::convertible_to<std::size_t>;
    { FieldTraits<K>::to_string(a) } -> std::same_as<std::string>;
    { FieldTraits<K>::parse(s) } -> std::same_as<K>;
    { FieldTraits<K>::random(rng) } -> std::same_as<K>;
};

template <Field K>
bool is_zero(const K& x)
{
    return FieldTraits<K>::is_zero(x);
}

template <Field K>
K from_int(std::int64_t v)
{
    return FieldTraits<K>::from_int(v);
}

template <Field K>
std::string to_string(const K& x)
{
    return FieldTraits<K>::to_string(x);
}

// Runtime choice of coefficient field: "q" or "fp:<p>".
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint32_t prime = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(std::uint32_t p);
    static FieldSpec parse(std::string_view text);
    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Runs fn.template operator()<K>() with K the field named by spec, with the
// modulus installed for prime fields.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::Prime) {
        ModulusScope scope(spec.prime);
        return fn.template operator()<ModP>();
    }
    return fn.template operator()<Rational>();
}

}  // namespace sbalg
