#include "appell/classical.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "appell/errors.hpp"
#include "appell/oracle.hpp"

namespace appell {

namespace {

// Append-only memo of exponential coefficients of a generating function.
// Extension recomputes the whole table at a larger order and swaps it in
// under the writer lock; readers only ever see complete tables.
class ExponentialTable {
 public:
  explicit ExponentialTable(std::function<TruncatedSeries(std::size_t)> make)
      : make_(std::move(make)) {}

  Rational at(std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (k < values_.size()) return values_[k];
    }
    std::unique_lock lock(mutex_);
    if (k >= values_.size()) {
      const std::size_t order = std::max<std::size_t>({k, 2 * values_.size(), 32});
      values_ = make_(order).exponential_coefficients();
    }
    return values_[k];
  }

 private:
  std::function<TruncatedSeries(std::size_t)> make_;
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

ExponentialTable& bernoulli_table() {
  static ExponentialTable table([](std::size_t n) { return bernoulli_f_series(1, false, n); });
  return table;
}

ExponentialTable& euler_table() {
  static ExponentialTable table([](std::size_t n) { return euler_f_series(1, false, n); });
  return table;
}

Polynomial binomial_transform(std::size_t n, const std::function<Rational(std::size_t)>& value) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    c[n - k] = Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * value(k);
  return Polynomial(std::move(c));
}

}  // namespace

StirlingTable::StirlingTable(std::size_t max_n) : rows_(max_n + 1) {
  rows_[0] = {1};
  for (std::size_t n = 0; n < max_n; ++n) {
    const auto& prev = rows_[n];
    std::vector<Integer> next(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Integer v = 0;
      if (k >= 1) v += prev[k - 1];
      if (k <= n) v -= static_cast<unsigned long>(n) * prev[k];
      next[k] = v;
    }
    rows_[n + 1] = std::move(next);
  }
}

const Integer& StirlingTable::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) > max_n())
    throw DomainError("stirling index out of range: s(" + std::to_string(n) + "," +
                      std::to_string(k) + ")");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling_first(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("stirling index out of range: s(" + std::to_string(n) + "," +
                      std::to_string(k) + ")");
  return StirlingTable(static_cast<std::size_t>(n)).at(n, k);
}

Rational bernoulli_number(std::size_t n) { return bernoulli_table().at(n); }

Rational euler_at_zero(std::size_t k) { return euler_table().at(k); }

Polynomial bernoulli_polynomial(std::size_t n) {
  return binomial_transform(n, [](std::size_t k) { return bernoulli_number(k); });
}

Polynomial euler_polynomial(std::size_t n) {
  return binomial_transform(n, [](std::size_t k) { return euler_at_zero(k); });
}

}  // namespace appell
