#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qlocal {

// Bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool is_zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Index of the lowest set bit, or -1 if zero.
  long lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<long>(64 * i + std::countr_zero(w_[i]));
    return -1;
  }

  // Parity of the AND of two equal-length vectors.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Row-reduced basis of a GF(2) subspace, one row per pivot column.
// Pivot selection is lowest-index-first, so the basis (and everything
// derived from it) is reproducible across runs.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduce v against the basis; the returned remainder has no pivot in
  // common with any stored row.
  BitVec reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
  }

  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

  // Insert v if independent of the current rows. Returns true if the rank
  // grew.
  bool insert(const BitVec& v) {
    BitVec r = reduce(v);
    long p = r.lowest_set();
    if (p < 0) return false;
    // Keep rows ordered by pivot.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < static_cast<std::size_t>(p))
      ++pos;
    rows_.insert(rows_.begin() + pos, r);
    pivots_.insert(pivots_.begin() + pos, static_cast<std::size_t>(p));
    return true;
  }

  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t width_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank_gf2(const std::vector<BitVec>& rows, std::size_t width) {
  EchelonBasis b(width);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

// Basis of {v : rows[i] . v = 0 for all i}. Free variables are taken in
// increasing column order.
std::vector<BitVec> nullspace_gf2(const std::vector<BitVec>& rows,
                                  std::size_t width);

}  // namespace qlocal
