#include "sdepthkit/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "sdepthkit/error.hpp"

namespace sdepthkit {

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<VarSet> faces)
    : vertices_(vertices) {
  for (auto f : faces) {
    if (!f.is_subset_of(VarSet::all(vertices))) throw InvalidArgument("face uses an unknown vertex");
  }
  std::sort(faces.begin(), faces.end(), [](VarSet a, VarSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto f : faces) {
    bool covered = std::any_of(facets_.begin(), facets_.end(), [&](VarSet big) { return f.is_subset_of(big); });
    if (!covered) facets_.push_back(f);
  }
}

bool SimplicialComplex::contains(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.is_subset_of(f); });
}

std::vector<VarSet> SimplicialComplex::faces() const {
  std::set<std::uint64_t> seen;
  for (auto facet : facets_) {
    const std::uint64_t bits = facet.bits();
    // every submask of the facet, including the empty face
    for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<VarSet> out;
  out.reserve(seen.size());
  for (auto bits : seen) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](VarSet a, VarSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

bool is_prime(Characteristic p) {
  if (p < 2) return false;
  for (Characteristic d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_field(Characteristic characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InvalidArgument("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  }
}

std::size_t rank_over_rationals(const std::vector<std::vector<std::int64_t>>& input) {
  const std::size_t rows = input.size();
  if (rows == 0) return 0;
  const std::size_t cols = input.front().size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(input[i][j]);
  }
  // Bareiss: every division below is exact.
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class value = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& input, std::uint64_t p) {
  const std::size_t rows = input.size();
  if (rows == 0) return 0;
  const std::size_t cols = input.front().size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<std::uint64_t>(((input[i][j] % sp) + sp) % sp);
  }
  auto power = [p](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
      if (exp & 1U) result = static_cast<std::uint64_t>((unsigned __int128)result * base % p);
      base = static_cast<std::uint64_t>((unsigned __int128)base * base % p);
      exp >>= 1U;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inverse = power(m[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t factor = static_cast<std::uint64_t>((unsigned __int128)m[i][c] * inverse % p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = static_cast<std::uint64_t>((unsigned __int128)factor * m[rank][j] % p);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<std::int64_t>> matrix, Characteristic characteristic) {
  require_field(characteristic);
  for (const auto& row : matrix) {
    if (row.size() != matrix.front().size()) throw InvalidArgument("ragged matrix");
  }
  return characteristic == 0 ? rank_over_rationals(matrix) : rank_mod_p(matrix, characteristic);
}

namespace {

// rank of the boundary map from faces of size s to faces of size s-1
std::size_t boundary_rank(const std::vector<VarSet>& source, const std::vector<VarSet>& target,
                          Characteristic characteristic) {
  if (source.empty() || target.empty()) return 0;
  std::map<std::uint64_t, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i].bits()] = i;
  std::vector<std::vector<std::int64_t>> matrix(target.size(), std::vector<std::int64_t>(source.size(), 0));
  for (std::size_t c = 0; c < source.size(); ++c) {
    std::int64_t sign = 1;
    for (auto v : source[c].indices()) {
      VarSet face = source[c];
      face.erase(v);
      matrix[row_of.at(face.bits())][c] = sign;
      sign = -sign;
    }
  }
  return exact_rank(std::move(matrix), characteristic);
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Characteristic characteristic) {
  require_field(characteristic);
  if (complex.is_void()) return {};
  // by_size[s] holds the faces of dimension s-1
  std::vector<std::vector<VarSet>> by_size(complex.vertices() + 2);
  for (auto f : complex.faces()) by_size[f.size()].push_back(f);

  std::vector<std::size_t> rank(by_size.size() + 1, 0);  // rank[s]: boundary out of size s
  for (std::size_t s = 1; s < by_size.size(); ++s) rank[s] = boundary_rank(by_size[s], by_size[s - 1], characteristic);

  std::vector<std::size_t> out(by_size.size(), 0);
  for (std::size_t s = 0; s < by_size.size(); ++s) out[s] = by_size[s].size() - rank[s] - rank[s + 1];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Betti numbers

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a) {
  const std::size_t n = ideal.num_vars();
  if (a.size() != n) throw InvalidArgument("multidegree does not belong to the ring");
  if (!ideal.contains(a)) return SimplicialComplex::void_complex(n);
  const std::uint64_t support = a.support().bits();
  std::vector<VarSet> faces;
  for (std::uint64_t sub = support;; sub = (sub - 1) & support) {
    std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
    for (auto j : VarSet(sub).indices()) --e[j];
    if (ideal.contains(Monomial(std::move(e)))) faces.emplace_back(sub);
    if (sub == 0) break;
  }
  return SimplicialComplex(n, std::move(faces));
}

std::uint64_t BettiTable::at(std::size_t i, const Monomial& a) const {
  auto it = entries.find({i, a});
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(std::size_t i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries) {
    if (key.first == i) sum += value;
  }
  return sum;
}

std::size_t BettiTable::max_index() const {
  std::size_t best = 0;
  for (const auto& [key, value] : entries) best = std::max(best, key.first);
  return best;
}

namespace {

std::set<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Monomial> lattice;
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial> fresh{g};
    for (const auto& l : lattice) fresh.push_back(l.lcm(g));
    lattice.insert(fresh.begin(), fresh.end());
  }
  return lattice;
}

}  // namespace

BettiTable betti(const MonomialIdeal& ideal, Characteristic characteristic) {
  require_field(characteristic);
  BettiTable table;
  table.characteristic = characteristic;
  for (const auto& a : lcm_lattice(ideal)) {
    const auto ranks = reduced_homology_ranks(upper_koszul(ideal, a), characteristic);
    // ranks[i] = dim H̃_{i-1}(K^a) = β_{i,a}(I)
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] != 0) table.entries[{i, a}] = ranks[i];
    }
  }
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, Characteristic characteristic) {
  require_field(characteristic);
  const auto& gens = ideal.generators();
  if (gens.size() > 20) throw ResourceError("the Taylor oracle accepts at most 20 generators");
  const std::size_t k = gens.size();

  BettiTable table;
  table.characteristic = characteristic;
  if (k == 0) return table;

  std::vector<Monomial> lcm_of(std::size_t{1} << k);
  std::map<Monomial, std::vector<std::uint32_t>> strata;
  lcm_of[0] = Monomial(ideal.num_vars());
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    lcm_of[mask] = lcm_of[mask & (mask - 1)].lcm(gens[low]);
    strata[lcm_of[mask]].push_back(mask);
  }

  for (const auto& [a, masks] : strata) {
    // chains[s]: subsets of size s with lcm a (homological degree s-1)
    std::vector<std::vector<std::uint32_t>> chains(k + 2);
    for (auto mask : masks) chains[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    std::vector<std::size_t> rank(k + 3, 0);  // rank[s]: differential out of size s
    for (std::size_t s = 2; s <= k; ++s) {
      const auto& source = chains[s];
      const auto& target = chains[s - 1];
      if (source.empty() || target.empty()) continue;
      std::map<std::uint32_t, std::size_t> row_of;
      for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i]] = i;
      std::vector<std::vector<std::int64_t>> matrix(target.size(), std::vector<std::int64_t>(source.size(), 0));
      for (std::size_t c = 0; c < source.size(); ++c) {
        std::int64_t sign = 1;
        for (std::uint32_t rest = source[c]; rest != 0; rest &= rest - 1) {
          const std::uint32_t face = source[c] & ~(rest & (~rest + 1));
          // faces of smaller lcm vanish after tensoring with K
          if (auto it = row_of.find(face); it != row_of.end()) matrix[it->second][c] = sign;
          sign = -sign;
        }
      }
      rank[s] = exact_rank(std::move(matrix), characteristic);
    }
    for (std::size_t s = 1; s <= k; ++s) {
      const std::size_t value = chains[s].size() - rank[s] - rank[s + 1];
      if (value != 0) table.entries[{s - 1, a}] = value;
    }
  }
  return table;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw HypothesisError("depth is computed here only for non-zero ideals");
  if (ideal.is_unit()) throw HypothesisError("depth is computed here only for proper ideals");
}

}  // namespace

std::size_t proj_dim_quotient(const MonomialIdeal& ideal, Characteristic characteristic) {
  require_proper_nonzero(ideal);
  return betti(ideal, characteristic).max_index() + 1;
}

std::size_t depth_quotient(const MonomialIdeal& ideal, Characteristic characteristic) {
  return ideal.num_vars() - proj_dim_quotient(ideal, characteristic);
}

std::size_t depth_ideal(const MonomialIdeal& ideal, Characteristic characteristic) {
  return depth_quotient(ideal, characteristic) + 1;
}

}  // namespace sdepthkit
