#include "sbalg/field.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

namespace sbalg {

thread_local std::uint32_t ModP::modulus_ = 101;

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

ModP::ModP(std::int64_t v)
{
    const auto p = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % p;
    if (r < 0)
        r += p;
    v_ = static_cast<std::uint32_t>(r);
}

void ModP::set_modulus(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(p));
    modulus_ = p;
}

ModP& ModP::operator+=(ModP o)
{
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    if (s >= modulus_)
        s -= modulus_;
    v_ = static_cast<std::uint32_t>(s);
    return *this;
}

ModP& ModP::operator-=(ModP o)
{
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + modulus_ - o.v_);
    return *this;
}

ModP& ModP::operator*=(ModP o)
{
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % modulus_);
    return *this;
}

ModP& ModP::operator/=(ModP o)
{
    return *this *= o.inverse();
}

ModP ModP::operator-() const
{
    ModP r;
    r.v_ = v_ == 0 ? 0 : modulus_ - v_;
    return r;
}

ModP ModP::inverse() const
{
    if (v_ == 0)
        throw std::domain_error("division by zero in prime field");
    std::int64_t a = v_, b = modulus_, x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return ModP(x0);
}

std::size_t FieldTraits<Rational>::pivot_cost(const Rational& x)
{
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

Rational FieldTraits<Rational>::parse(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

Rational FieldTraits<Rational>::random(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(-50, 50);
    return Rational(dist(rng));
}

ModP FieldTraits<ModP>::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto p = ModP::modulus();
    auto integer = [&](std::string_view s) {
        mpz_class z;
        if (s.empty() || z.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        return z;
    };
    const ModP num(static_cast<std::int64_t>(reduce(integer(text.substr(0, slash)), p)));
    if (slash == std::string_view::npos)
        return num;
    const ModP den(static_cast<std::int64_t>(reduce(integer(text.substr(slash + 1)), p)));
    if (den.value() == 0)
        throw std::invalid_argument("denominator divisible by p: '" + std::string(text) + "'");
    return num / den;
}

ModP FieldTraits<ModP>::random(std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, ModP::modulus() - 1);
    return ModP(static_cast<std::int64_t>(dist(rng)));
}

FieldSpec FieldSpec::prime_field(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("fp:<p> requires a prime below 2^31, got " + std::to_string(p));
    FieldSpec f;
    f.kind = Kind::Prime;
    f.prime = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q")
        return rationals();
    if (text.starts_with("fp:")) {
        const auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || p >= (1ull << 31))
            throw std::invalid_argument("bad prime in field spec '" + std::string(text) + "'");
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::name() const
{
    return kind == Kind::Rational ? "q" : "fp:" + std::to_string(prime);
}

}  // namespace sbalg
