#include "chevalley/scalars.hpp"

namespace chevalley {
namespace {

void add_prime_factors(Integer n, PrimeSupport& out) {
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) break;
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      out.insert(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) n /= p;
    }
  }
  if (n > 1) out.insert(n);
}

}  // namespace

PrimeSupport nu(const Rational& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "nu(0) is undefined");
  PrimeSupport support;
  add_prime_factors(x.numerator(), support);
  add_prime_factors(x.denominator(), support);
  return support;
}

bool nu_pairwise_disjoint(const std::vector<Rational>& xs) {
  std::vector<PrimeSupport> supports;
  supports.reserve(xs.size());
  for (const auto& x : xs) supports.push_back(nu(x));
  PrimeSupport seen;
  for (const auto& support : supports) {
    for (const auto& p : support) {
      if (!seen.insert(p).second) return false;
    }
  }
  return true;
}

}  // namespace chevalley
