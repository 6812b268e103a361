#pragma once

#include "wk/rational.hpp"

namespace wk {

Integer factorial(int n);
Integer binomial(int n, int k);

/// Bernoulli number b_k from the recurrence sum_{i=0}^{n} C(n+1, i) b_i = 0,
/// b_0 = 1 (so b_1 = -1/2, b_2 = 1/6, b_4 = -1/30). Memoized, thread-safe.
Rational bernoulli(int k);

/// |b_{2g}| (g-1)! / (2^g (2g)!), the value of kappa_{g-2} lambda_{g-1} lambda_g.
/// Throws std::domain_error for g < 2.
Rational lemma2_target(int g);

/// g! / (2^{g-1} (2g)!). Throws std::domain_error for g < 2.
Rational eq3_target(int g);

/// |b_{2g}| / (2g): the factor turning eq3_target into lemma2_target.
Rational lemma2_bridge_factor(int g);

}  // namespace wk
