#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/ring_traits.hpp"

namespace congrlab {

// Exponents (a_1, ..., a_r); a_1 attaches to the smallest summation index.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  int weight() const {
    int w = 0;
    for (int a : parts_) w += a;
    return w;
  }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  friend bool operator==(const Composition&, const Composition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  void validate() const {
    for (int a : parts_)
      if (a < 1) throw Error(ErrorKind::InvalidArgument, "composition parts must be positive");
  }

  std::vector<int> parts_;
};

// {a}^r
inline Composition repeated(int a, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative repetition count");
  return Composition(std::vector<int>(static_cast<std::size_t>(r), a));
}

namespace detail {

// Prefix values of the nested sum over the given reciprocals: entry m is the
// sum over i_1 < ... < i_r < m of prod recips[i_j]^{a_j}.
template <class T>
std::vector<T> nested_prefix(const std::vector<T>& recips, const Composition& c, const T& like) {
  const std::size_t r = c.depth();
  std::vector<T> out;
  out.reserve(recips.size() + 1);
  std::vector<T> acc(r + 1, zero_like(like));
  acc[0] = one_like(like);
  out.push_back(acc[r]);
  int max_part = 0;
  for (int a : c.parts()) max_part = std::max(max_part, a);
  std::vector<T> pw;
  for (const T& x : recips) {
    pw.assign(1, x);
    for (int e = 2; e <= max_part; ++e) pw.push_back(pw.back() * x);
    for (std::size_t j = r; j >= 1; --j) acc[j] += acc[j - 1] * pw[c[j - 1] - 1];
    out.push_back(acc[r]);
  }
  return out;
}

template <class T>
std::vector<T> reciprocal_range(std::uint64_t n, bool odd, const T& like) {
  std::vector<std::int64_t> dens;
  dens.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) dens.push_back(odd ? static_cast<std::int64_t>(2 * k + 1) : static_cast<std::int64_t>(k + 1));
  return RingTraits<T>::reciprocals(dens, like);
}

}  // namespace detail

// H_m(c) for 0 <= m <= n.
template <class T>
std::vector<T> mhs_prefix(std::uint64_t n, const Composition& c, const T& like) {
  return detail::nested_prefix(detail::reciprocal_range(n, false, like), c, like);
}

// Hbar_m(c) for 0 <= m <= n.
template <class T>
std::vector<T> odd_mhs_prefix(std::uint64_t n, const Composition& c, const T& like) {
  return detail::nested_prefix(detail::reciprocal_range(n, true, like), c, like);
}

template <class T>
T mhs(std::uint64_t n, const Composition& c, const T& like) {
  return mhs_prefix(n, c, like).back();
}
inline Residue mhs(std::uint64_t n, const Composition& c, const PrimePower& ring) {
  return mhs(n, c, residue(0, ring));
}

template <class T>
T odd_mhs(std::uint64_t n, const Composition& c, const T& like) {
  return odd_mhs_prefix(n, c, like).back();
}
inline Residue odd_mhs(std::uint64_t n, const Composition& c, const PrimePower& ring) {
  return odd_mhs(n, c, residue(0, ring));
}

// Sum over 0 <= k < n of (-1)^k/(2k+1)^d (odd) or over 1 <= k <= n of (-1)^k/k^d.
template <class T>
T alternating_half_sum(std::uint64_t n, int d, bool odd_denominators, const T& like) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "exponent d must be positive");
  auto recips = detail::reciprocal_range(n, odd_denominators, like);
  T sum = zero_like(like);
  for (std::uint64_t i = 0; i < n; ++i) {
    T term = power(recips[i], static_cast<std::uint64_t>(d));
    std::uint64_t k = odd_denominators ? i : i + 1;
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}
inline Residue alternating_half_sum(std::uint64_t n, int d, bool odd_denominators, const PrimePower& ring) {
  return alternating_half_sum(n, d, odd_denominators, residue(0, ring));
}

}  // namespace congrlab
