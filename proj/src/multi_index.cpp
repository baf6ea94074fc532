#include "quadharm/multi_index.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace quadharm {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  if (j >= n) throw std::out_of_range("MultiIndex::unit: axis out of range");
  MultiIndex a(n);
  a.e_[j] = 1;
  return a;
}

std::uint64_t MultiIndex::order() const {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

std::string MultiIndex::factorial_string() const {
  mpz_class f = 1;
  for (auto v : e_) {
    mpz_class t;
    mpz_fac_ui(t.get_mpz_t(), v);
    f *= t;
  }
  return f.get_str();
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw std::invalid_argument("MultiIndex: length mismatch");
  MultiIndex r(*this);
  for (std::size_t j = 0; j < size(); ++j) r.e_[j] += o.e_[j];
  return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
  if (o.size() != size()) throw std::invalid_argument("MultiIndex: length mismatch");
  MultiIndex r(*this);
  for (std::size_t j = 0; j < size(); ++j) {
    if (r.e_[j] < o.e_[j]) return std::nullopt;
    r.e_[j] -= o.e_[j];
  }
  return r;
}

MultiIndex MultiIndex::parity() const {
  MultiIndex r(*this);
  for (auto& v : r.e_) v &= 1u;
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < e_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(e_[j]);
  }
  return s + ")";
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const auto oa = a.order();
  const auto ob = b.order();
  if (oa != ob) return oa > ob;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

namespace {

void enumerate(std::size_t pos, std::uint32_t remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
  const std::size_t n = cur.size();
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t v = remaining + 1; v-- > 0;) {
    cur[pos] = v;
    enumerate(pos + 1, remaining - v, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_order(std::size_t n, std::uint32_t m) {
  if (n == 0) throw std::invalid_argument("multi_indices_of_order: n must be >= 1");
  std::vector<MultiIndex> out;
  out.reserve(count_of_order(n, m));
  MultiIndex cur(n);
  enumerate(0, m, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::uint32_t m) {
  std::vector<MultiIndex> out;
  for (std::uint32_t k = m + 1; k-- > 0;) {
    auto level = multi_indices_of_order(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t count_of_order(std::size_t n, std::uint32_t m) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), m + n - 1, m);
  return c.get_ui();
}

}  // namespace quadharm
