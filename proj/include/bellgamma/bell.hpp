// Complete exponential Bell polynomials Y_n(x_1, ..., x_n), evaluated over any
// commutative ring that provides +, * and scaling by an Integer.
#pragma once

#include "bellgamma/numerics.hpp"

#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

namespace bellgamma {

template <class T>
concept BellRing = std::copyable<T> && requires(const T& x, const T& y, const Integer& c) {
  { x + y } -> std::convertible_to<T>;
  { x * y } -> std::convertible_to<T>;
  { x * c } -> std::convertible_to<T>;
};

/// Y_0..Y_n for the arguments xs = (x_1..x_n), by the ascending recurrence
///   Y_{j+1} = sum_{k=0}^{j} binom(j,k) x_{k+1} Y_{j-k},  Y_0 = one.
template <BellRing T>
std::vector<T> bell_table(std::span<const T> xs, const T& one) {
  std::vector<T> ys;
  ys.reserve(xs.size() + 1);
  ys.push_back(one);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    T next = one * Integer(0);
    for (std::size_t k = 0; k <= j; ++k) next = next + (xs[k] * ys[j - k]) * binom(j, k);
    ys.push_back(std::move(next));
  }
  return ys;
}

/// Y_n(x_1..x_n) with n = xs.size().
template <BellRing T>
T bell_eval(std::span<const T> xs, const T& one) {
  return bell_table(xs, one).back();
}

/// n! / prod_j (j!^{k_j} k_j!) for a partition of n given by multiplicities
/// k = (k_1..k_n). Throws std::invalid_argument if sum j k_j != n and
/// std::domain_error if the quotient is not an integer.
Integer partition_multinomial(std::span<const unsigned> k, unsigned n);

inline constexpr unsigned kMaxPartitionBellIndex = 20;

/// Y_n as the sum over partitions of n. Independent of the recurrence; slow.
template <BellRing T>
T bell_eval_partitions(std::span<const T> xs, const T& one) {
  const unsigned n = static_cast<unsigned>(xs.size());
  if (n > kMaxPartitionBellIndex) throw std::length_error("bell_eval_partitions: n > 20");
  T total = one * Integer(0);
  if (n == 0) return one;

  // powers[j][e] = x_{j+1}^e
  std::vector<std::vector<T>> powers(n);
  for (unsigned j = 0; j < n; ++j) {
    powers[j].push_back(one);
    for (unsigned e = 1; (j + 1) * e <= n; ++e) powers[j].push_back(powers[j].back() * xs[j]);
  }

  std::vector<unsigned> mult(n, 0);
  // Enumerate multiplicity vectors with sum (j+1) k_j = n, largest part first.
  auto recurse = [&](auto&& self, unsigned part, unsigned remaining) -> void {
    if (remaining == 0) {
      T term = one * partition_multinomial(mult, n);
      for (unsigned j = 0; j < n; ++j)
        if (mult[j] > 0) term = term * powers[j][mult[j]];
      total = total + term;
      return;
    }
    if (part == 0) return;
    for (unsigned c = remaining / part;; --c) {
      mult[part - 1] = c;
      self(self, part - 1, remaining - c * part);
      if (c == 0) break;
    }
    mult[part - 1] = 0;
  };
  recurse(recurse, n, n);
  return total;
}

}  // namespace bellgamma
