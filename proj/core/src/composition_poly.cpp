#include <compbal/composition_poly.hpp>

namespace compbal {

BigInt CompositionPoly::total() const {
  BigInt sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

void CompositionPoly::normalize() {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(BigInt(0));
}

ResidueDistribution make_residue_distribution(std::int64_t q, std::vector<BigInt> counts) {
  ResidueDistribution dist;
  dist.q = q;
  dist.counts = std::move(counts);
  dist.total = 0;
  for (const auto& c : dist.counts) dist.total += c;
  if (dist.total > 0) {
    dist.probs.reserve(dist.counts.size());
    for (const auto& c : dist.counts) dist.probs.emplace_back(BigRat(c) / BigRat(dist.total));
  }
  return dist;
}

}  // namespace compbal
