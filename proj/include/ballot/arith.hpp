#pragma once

#include <string>

#include <gmpxx.h>

namespace ballot {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n! for n >= 0; 0 for negative n.
BigInt factorial(int n);

/// Binomial coefficient with the usual zero convention outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// n!! = n (n-2) (n-4) ..., with (-1)!! = 0!! = 1.
BigInt double_factorial(int n);

/// num / den reduced to lowest terms.
BigRational ratio(const BigInt& num, const BigInt& den);

/// Exact decimal rendering, "num" for integers and "num/den" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

}  // namespace ballot
