#pragma once

#include "blockmean/cis.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean::closed_form {

Integer binomial(long n, long k);

// N = C(n+1,2), W = C(n+2,3), M = (n+2)/3.
CisReport path_stats(int n);
// N = 2^n - 1, W = n 2^(n-1), M = n 2^(n-1) / (2^n - 1).
CisReport complete_stats(int n);
// At the s-th vertex of P_n (1-based): N = s(n-s+1), W = s(n-s+1)(n+1)/2.
CisReport path_local_stats(int n, int s);

// Coefficient i of Phi_{P_n} is n-i+1; of Phi_{K_n} is C(n,i).
IntPolynomial path_poly(int n);
IntPolynomial complete_poly(int n);

// Broom F_{s,n-s} (clique K_s joined to a leaf of P_{n-s}), v a clique vertex:
//   Phi_{F,v}   = x (1+x)^(s-1) sum_{i=0}^{n-s} x^i
//   Phi_{F-v}   = (1+x)^(s-1) sum_{i=0}^{n-s} x^i + Phi_{P_{n-s-1}} - 1
IntPolynomial broom_local_poly(int s, int n);
IntPolynomial broom_minus_clique_vertex_poly(int s, int n);
inline IntPolynomial broom_poly(int s, int n) { return broom_local_poly(s, n) + broom_minus_clique_vertex_poly(s, n); }

}  // namespace blockmean::closed_form
