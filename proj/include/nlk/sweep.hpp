#ifndef NLK_SWEEP_HPP
#define NLK_SWEEP_HPP

// Basis-tuple sweeps behind the axiom checkers. Each sweep has a plain
// serial reference that goes through the dense bracket()/Form API, and an
// OpenMP kernel on sparse table lookups partitioned by outer tuple. Both
// produce identical witness lists in identical (lexicographic) order.

#include "nlk/algebra.hpp"
#include "nlk/linalg.hpp"

namespace nlk::kernels {

ViolationReport fundamental_identity_reference(const Algebra& a);
ViolationReport fundamental_identity_parallel(const Algebra& a, int workers);

/// Residual B([T,e_p],e_q) + B([T,e_q],e_p) for sorted (n-1)-tuples T, p <= q.
ViolationReport invariance_reference(const Algebra& a, const Mat& gram);
ViolationReport invariance_parallel(const Algebra& a, const Mat& gram, int workers);

/// Worker count from NLK_WORKERS; 1 when unset. Throws ParseError when the
/// variable is set but is not an integer >= 1.
int workers_from_env();

}  // namespace nlk::kernels

#endif  // NLK_SWEEP_HPP
