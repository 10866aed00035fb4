#include "blockmean/closed_forms.hpp"

#include <string>

#include "blockmean/errors.hpp"

namespace blockmean::closed_form {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("closed form: " + what);
}

CisReport make(const Integer& n, const Integer& w) {
  Rational m(w, n);
  m.canonicalize();
  return {n, w, m};
}

IntPolynomial one_plus_x_power(int e) {
  std::vector<Integer> c(e + 1);
  for (int i = 0; i <= e; ++i) c[i] = binomial(e, i);
  return IntPolynomial(std::move(c));
}

IntPolynomial geometric(int top) {
  return IntPolynomial(std::vector<Integer>(top + 1, Integer(1)));
}

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

CisReport path_stats(int n) {
  require(n >= 1, "path order must be at least 1");
  return make(binomial(n + 1, 2), binomial(n + 2, 3));
}

CisReport complete_stats(int n) {
  require(n >= 1, "clique order must be at least 1");
  Integer pow2 = Integer(1) << n;
  return make(pow2 - 1, Integer(n) * (pow2 / 2));
}

CisReport path_local_stats(int n, int s) {
  require(n >= 1 && s >= 1 && s <= n, "path_local needs 1 <= s <= n");
  Integer count = Integer(s) * (n - s + 1);
  Integer twice_w = count * (n + 1);
  // Even: s + (n-s+1) = n+1, so when n+1 is odd one of s, n-s+1 is even.
  return make(count, twice_w / 2);
}

IntPolynomial path_poly(int n) {
  require(n >= 0, "path order must be nonnegative");
  std::vector<Integer> c(n + 1);
  for (int i = 1; i <= n; ++i) c[i] = n - i + 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial complete_poly(int n) {
  require(n >= 1, "clique order must be at least 1");
  return one_plus_x_power(n) - IntPolynomial::one();
}

IntPolynomial broom_local_poly(int s, int n) {
  require(s >= 1 && s <= n - 1, "broom needs 1 <= s <= n-1");
  return (one_plus_x_power(s - 1) * geometric(n - s)).shifted(1);
}

IntPolynomial broom_minus_clique_vertex_poly(int s, int n) {
  require(s >= 1 && s <= n - 1, "broom needs 1 <= s <= n-1");
  return one_plus_x_power(s - 1) * geometric(n - s) + path_poly(n - s - 1) - IntPolynomial::one();
}

}  // namespace blockmean::closed_form
