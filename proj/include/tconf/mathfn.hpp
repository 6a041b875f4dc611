#ifndef TCONF_MATHFN_HPP
#define TCONF_MATHFN_HPP

namespace tconf {

// Standard normal c.d.f. via erfc; absolute error well below 1.5e-7.
double normal_cdf(double x);

// Regularized incomplete beta I_x(a,b), continued fraction with modified
// Lentz iteration and the symmetry reduction I_x(a,b) = 1 - I_{1-x}(b,a).
// Relative error target 1e-10.
double reg_inc_beta(double a, double b, double x);

// p-quantile of Beta(a,b), bisection on reg_inc_beta to 1e-12.
double beta_quantile(double a, double b, double p);

}  // namespace tconf

#endif
