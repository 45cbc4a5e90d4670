#pragma once

namespace wres {

// Hurwitz zeta sum_{m>=0} (m+a)^{-s} by Euler-Maclaurin with 8 Bernoulli
// correction terms; s != 1, a > 0.
double hurwitz_zeta(double s, double a);

// Res_{s=(n-k)/2} zeta(Delta_{S^n}, s) in closed form via the Hurwitz
// expansion lambda_l^{-s} = sum_j binom(s+j-1,j) c^{2j} mu^{-2s-2j} with
// mu = l + (n-1)/2, c = (n-1)/2: each Hurwitz factor contributes its pole at
// argument 1 with residue 1 and chain-rule factor 1/2. Supported: n in {2,4},
// k in {0,2}; zero modes excluded.
double sphere_zeta_residue(int n, int k, int j_max = 8);

// zeta(Delta_{S^n}, s) away from poles, for diagnostics (same expansion,
// summed with hurwitz_zeta until terms fall below 1e-15).
double sphere_zeta_value(int n, double s);

}  // namespace wres
