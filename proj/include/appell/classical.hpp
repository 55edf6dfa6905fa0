#pragma once

#include <cstddef>
#include <vector>

#include "appell/polynomial.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Signed Stirling numbers of the first kind s(n,k), 0 <= k <= n <= max_n,
/// built from s(n+1,k) = s(n,k-1) - n s(n,k).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size() - 1; }
  /// Throws DomainError unless 0 <= k <= n <= max_n.
  const Integer& at(long n, long k) const;
  const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// s(n, k); DomainError unless 0 <= k <= n.
Integer stirling_first(long n, long k);

/// B_n = B_n(0), with B_1 = -1/2. Memoized.
Rational bernoulli_number(std::size_t n);

/// E_k(0), the value of the k-th Euler polynomial at zero. Memoized.
Rational euler_at_zero(std::size_t k);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Polynomial bernoulli_polynomial(std::size_t n);

/// E_n(x) = sum_k C(n,k) E_k(0) x^{n-k}.
Polynomial euler_polynomial(std::size_t n);

}  // namespace appell
