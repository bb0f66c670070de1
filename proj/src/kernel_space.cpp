#include "multmap/kernel_space.hpp"

#include "multmap/jacobian.hpp"
#include "multmap/roots.hpp"

namespace multmap {

RankRelation rank_relation(const Poly<GaussianRational>& f, const Options& options) {
    detail::require_kernel_input(f);
    if (*gcd_monic(f, derivative(f)).degree() != 0)
        throw DomainError("rank_relation: input has multiple roots; the multiplier map "
                          "is undefined there");

    RankRelation rr;
    rr.n = *f.degree();
    rr.exact_w_dim = w_space(f).w_dim;

    const Poly<ComplexFloat> shadow = to_complex_poly(f);
    const RootSet rs = find_roots(shadow, options);
    rr.numeric_rank = jac_coeff(shadow, rs, options.rank_tol).numerical_rank;
    rr.contract_holds = rr.numeric_rank == rr.n - 1 - rr.exact_w_dim && rr.exact_w_dim == 0;
    return rr;
}

} // namespace multmap
