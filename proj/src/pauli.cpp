#include "qlocal/pauli.hpp"

#include <algorithm>

namespace qlocal {

PauliOperator PauliOperator::from_string(const std::string& s) {
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
  std::size_t n = s.size() - start;
  if (n == 0) throw ContractError("empty Pauli string");
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (s[start + i]) {
      case 'I':
        break;
      case 'X':
        p.x_bits.set(i, true);
        break;
      case 'Y':
        p.x_bits.set(i, true);
        p.z_bits.set(i, true);
        break;
      case 'Z':
        p.z_bits.set(i, true);
        break;
      default:
        throw ContractError(std::string("invalid Pauli letter '") +
                            s[start + i] + "' at position " +
                            std::to_string(start + i));
    }
  }
  return p;
}

std::string PauliOperator::to_string() const {
  std::string s(n, 'I');
  for (std::size_t i = 0; i < n; ++i) {
    bool x = x_bits.get(i), z = z_bits.get(i);
    if (x && z)
      s[i] = 'Y';
    else if (x)
      s[i] = 'X';
    else if (z)
      s[i] = 'Z';
  }
  return s;
}

std::size_t PauliOperator::weight() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (x_bits.get(i) || z_bits.get(i)) ++c;
  return c;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if (x_bits.get(i) || z_bits.get(i)) s.push_back(i);
  return s;
}

PauliOperator PauliOperator::times(const PauliOperator& o) const {
  if (n != o.n) throw ContractError("Pauli length mismatch in product");
  PauliOperator r = *this;
  r.x_bits ^= o.x_bits;
  r.z_bits ^= o.z_bits;
  return r;
}

bool symplectic_commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n)
    throw ContractError("symplectic_commutes: operator lengths differ (" +
                        std::to_string(p.n) + " vs " + std::to_string(q.n) +
                        ")");
  bool a = BitVec::and_parity(p.x_bits, q.z_bits);
  bool b = BitVec::and_parity(p.z_bits, q.x_bits);
  return a == b;
}

BitVec to_symplectic(const PauliOperator& p) {
  BitVec v(2 * p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (p.x_bits.get(i)) v.set(i, true);
    if (p.z_bits.get(i)) v.set(p.n + i, true);
  }
  return v;
}

PauliOperator from_symplectic(const BitVec& v, std::size_t n) {
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) p.x_bits.set(i, true);
    if (v.get(n + i)) p.z_bits.set(i, true);
  }
  return p;
}

QubitSet QubitSet::of(std::vector<std::size_t> indices, std::size_t n) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= n)
    throw ContractError("qubit index " + std::to_string(indices.back()) +
                        " out of range [0, " + std::to_string(n) + ")");
  QubitSet s;
  s.members = std::move(indices);
  return s;
}

bool QubitSet::contains(std::size_t q) const {
  return std::binary_search(members.begin(), members.end(), q);
}

bool QubitSet::is_subset_of(const QubitSet& other) const {
  return std::includes(other.members.begin(), other.members.end(),
                       members.begin(), members.end());
}

bool QubitSet::disjoint_from(const QubitSet& other) const {
  std::size_t i = 0, j = 0;
  while (i < members.size() && j < other.members.size()) {
    if (members[i] == other.members[j]) return false;
    if (members[i] < other.members[j])
      ++i;
    else
      ++j;
  }
  return true;
}

QubitSet QubitSet::union_of(const QubitSet& a, const QubitSet& b) {
  QubitSet r;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                 b.members.end(), std::back_inserter(r.members));
  return r;
}

}  // namespace qlocal
