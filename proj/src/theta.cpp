#include "splitloci/theta.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitloci {
namespace {

mpz_class factorial(Int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// (k, total_degree, n) when t has the extreme-summand shape
// (-n) ++ balanced(k-1, total+n) with -n strictly minimal.
std::optional<std::pair<Int, Int>> extreme_shape(const SplittingType& t) {
    if (t.rank() < 2) return std::nullopt;
    const Int n = -t.min_part();
    std::vector<Int> rest(t.parts().begin() + 1, t.parts().end());
    Int rest_degree = 0;
    for (Int v : rest) rest_degree = checked_add(rest_degree, v);
    const SplittingType bal = balanced(t.rank() - 1, rest_degree);
    if (!(bal.parts() == rest)) return std::nullopt;
    if (-n >= bal.min_part()) return std::nullopt;  // strictness
    return std::make_pair(t.degree(), n);
}

}  // namespace

const mpq_class& ThetaPoly::coeff(Int i) const {
    if (i < 0 || i > trunc()) throw std::out_of_range("coefficient index out of range");
    return coeffs[static_cast<std::size_t>(i)];
}

ThetaPoly exp_series(int sign, Int trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (trunc < 0) throw std::invalid_argument("truncation must be non-negative");
    ThetaPoly p;
    p.coeffs.reserve(static_cast<std::size_t>(trunc) + 1);
    for (Int i = 0; i <= trunc; ++i) {
        mpq_class c{1};
        c /= factorial(i);
        if (sign == -1 && (i % 2)) c = -c;
        p.coeffs.push_back(c);
    }
    return p;
}

ThetaPoly mul(const ThetaPoly& a, const ThetaPoly& b) {
    const Int t = std::min(a.trunc(), b.trunc());
    ThetaPoly out;
    out.coeffs.assign(static_cast<std::size_t>(t) + 1, mpq_class{0});
    for (Int i = 0; i <= t; ++i)
        for (Int j = 0; i + j <= t; ++j)
            out.coeffs[static_cast<std::size_t>(i + j)] +=
                a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
    return out;
}

ThetaPoly div(const ThetaPoly& a, const ThetaPoly& b) {
    if (b.coeffs.empty() || b.coeffs[0] == 0) throw std::invalid_argument("non-unit divisor");
    const Int t = std::min(a.trunc(), b.trunc());
    ThetaPoly q;
    q.coeffs.assign(static_cast<std::size_t>(t) + 1, mpq_class{0});
    for (Int i = 0; i <= t; ++i) {
        mpq_class acc = a.coeffs[static_cast<std::size_t>(i)];
        for (Int j = 0; j < i; ++j)
            acc -= q.coeffs[static_cast<std::size_t>(j)] *
                   b.coeffs[static_cast<std::size_t>(i - j)];
        q.coeffs[static_cast<std::size_t>(i)] = acc / b.coeffs[0];
    }
    return q;
}

ClassResult extreme_summand_class(Int k, Int total_degree, Int n, Int g) {
    if (k < 2) throw std::invalid_argument("not an extreme-summand type");
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    std::vector<Int> parts{-n};
    const SplittingType rest = balanced(k - 1, checked_add(total_degree, n));
    if (-n >= rest.min_part()) throw std::invalid_argument("not an extreme-summand type");
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    const SplittingType t{std::move(parts)};
    const Int u = expected_codim(t);
    // Coefficient of theta^u in (e^theta)^2 / e^theta, computed honestly
    // through the truncated-series engine. Truncation only needs to reach u;
    // the coefficient itself carries no g dependence.
    const Int trunc = std::max(g, u);
    const ThetaPoly e = exp_series(+1, trunc);
    const ThetaPoly quotient = div(mul(e, e), e);
    ClassResult res{quotient.coeff(u), u, std::nullopt};
    if (u == g) res.points = point_count(res.a, u, g);
    return res;
}

ClassResult dual_class(const SplittingType& e, Int g) {
    const SplittingType dual = serre_dual(e);
    const SplittingType* pick = nullptr;
    if (extreme_shape(dual)) pick = &dual;
    else if (extreme_shape(e)) pick = &e;
    if (!pick) throw std::invalid_argument("coefficient not computable by this module");
    return extreme_summand_class(pick->rank(), pick->degree(), -pick->min_part(), g);
}

mpz_class point_count(const mpq_class& a, Int u, Int g) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    if (u != g) throw std::invalid_argument("not zero-dimensional");
    mpq_class total = a * factorial(g);
    total.canonicalize();
    if (total.get_den() != 1 || total.get_num() < 0)
        throw std::invalid_argument("inconsistent class");
    return total.get_num();
}

bool kkl_check(Int g) {
    const mpq_class a1 = extreme_summand_class(3, -3, 3, g).a;
    const mpq_class a2 = dual_class(make_type({-2, -2, 1}), g).a;
    return a1 + a2 == mpq_class{1, 12};
}

}  // namespace splitloci
