#include "ballot/arith.hpp"

namespace ballot {

BigInt factorial(int n) {
  if (n < 0) return 0;
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt double_factorial(int n) {
  if (n < -1) return 0;
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational ratio(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ballot
