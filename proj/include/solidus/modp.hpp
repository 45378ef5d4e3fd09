#pragma once

#include "solidus/exactmath.hpp"

#include <cstdint>
#include <vector>

namespace solidus::modp {

// Prime field F_p with p = 1 mod 24, together with the image of the primitive 24th root of unity.
class Field {
public:
    explicit Field(std::uint64_t p);
    static const Field& large();  // 2013265921
    static const Field& small();  // 1009

    std::uint64_t p() const { return p_; }
    std::uint64_t zeta24() const { return z24_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    // throws math_error if the denominator vanishes mod p or the conductor does not divide 24
    std::uint64_t reduce(const mpq_class& q) const;
    std::uint64_t reduce(const CycNum& c) const;

private:
    std::uint64_t p_;
    std::uint64_t z24_;
};

using Poly = std::vector<std::uint64_t>;  // low degree first

void trim(Poly& a);
int degree(const Poly& a);
Poly poly_gcd(const Field& F, Poly a, Poly b);
std::uint64_t poly_eval(const Field& F, const Poly& a, std::uint64_t x);
Poly interpolate(const Field& F, const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys);

// A Form with coefficients reduced mod p.
struct ModForm {
    int nvars = 4;
    int degree = 0;
    std::vector<std::pair<Mono, std::uint64_t>> terms;
};

ModForm reduce_form(const Field& F, const Form& f);
std::uint64_t eval(const Field& F, const ModForm& f, const std::vector<std::uint64_t>& x);
// univariate polynomial f(a + t*b) of degree <= deg f
Poly restrict_line(const Field& F, const ModForm& f, const std::vector<std::uint64_t>& a,
                   const std::vector<std::uint64_t>& b);

// Points of V(gens) over F, found by random affine lines; empty result if the budget is exhausted.
std::vector<std::vector<std::uint64_t>> sample_zeros(const Field& F, const std::vector<ModForm>& gens,
                                                     int count, Rng& rng, int budget = 200000);

std::vector<std::uint64_t> normalize(const Field& F, std::vector<std::uint64_t> x);

}  // namespace solidus::modp
