#include "corners/chain_complex.hpp"

#include <sstream>

#include "corners/error.hpp"
#include "corners/smith.hpp"

namespace corners {

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << 'Z';
    if (rank > 1) out << '^' << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " (+) ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

HomologyGroup group_at(const GradedGroups& groups, int degree) {
  auto it = groups.find(degree);
  return it == groups.end() ? HomologyGroup{} : it->second;
}

ChainComplex::ChainComplex(int lowest_degree, std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials)
    : lowest_(lowest_degree), ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (differentials_.size() != expected) {
    throw Error(ErrorCode::NotAChainComplex, "expected " + std::to_string(expected) + " differentials, got " +
                                                 std::to_string(differentials_.size()));
  }
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const auto& d = differentials_[i];
    if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1]) {
      throw Error(ErrorCode::NotAChainComplex,
                  "differential out of degree " + std::to_string(lowest_ + static_cast<int>(i) + 1) + " has shape " +
                      std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
  }
  for (std::size_t i = 1; i < differentials_.size(); ++i) {
    if (!(differentials_[i - 1] * differentials_[i]).is_zero()) {
      throw Error(ErrorCode::NotAChainComplex,
                  "boundary of boundary is nonzero in degree " + std::to_string(lowest_ + static_cast<int>(i) + 1));
    }
  }
}

std::size_t ChainComplex::rank(int degree) const {
  if (degree < lowest_ || degree > highest_degree()) return 0;
  return ranks_[static_cast<std::size_t>(degree - lowest_)];
}

IntegerMatrix ChainComplex::differential(int degree) const {
  if (degree <= lowest_ || degree > highest_degree()) return IntegerMatrix(rank(degree - 1), rank(degree));
  return differentials_[static_cast<std::size_t>(degree - lowest_ - 1)];
}

namespace {

std::vector<BigInt> nontrivial(const std::vector<BigInt>& factors) {
  std::vector<BigInt> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

}  // namespace

GradedGroups homology(const ChainComplex& complex) {
  GradedGroups out;
  const int lo = complex.lowest_degree(), hi = complex.highest_degree();
  // snf[k - lo] is the decomposition of ∂_k; ∂_lo and ∂_{hi+1} are zero.
  std::vector<SmithDecomposition> snf;
  for (int k = lo; k <= hi + 1; ++k) snf.push_back(smith_normal_form(complex.differential(k)));
  for (int k = lo; k <= hi; ++k) {
    const auto& out_of = snf[static_cast<std::size_t>(k - lo)];
    const auto& into = snf[static_cast<std::size_t>(k - lo + 1)];
    HomologyGroup g;
    g.rank = complex.rank(k) - out_of.rank() - into.rank();
    g.torsion = nontrivial(into.diagonal);
    out[k] = std::move(g);
  }
  return out;
}

GradedGroups cohomology(const ChainComplex& complex) {
  GradedGroups out;
  const int lo = complex.lowest_degree(), hi = complex.highest_degree();
  // cosnf[k - lo] decomposes δ^{k-1} = ∂_k^T : C^{k-1} → C^k.
  std::vector<SmithDecomposition> cosnf;
  for (int k = lo; k <= hi + 1; ++k) cosnf.push_back(smith_normal_form(complex.differential(k).transpose()));
  for (int k = lo; k <= hi; ++k) {
    const auto& into = cosnf[static_cast<std::size_t>(k - lo)];        // δ^{k-1}
    const auto& out_of = cosnf[static_cast<std::size_t>(k - lo + 1)];  // δ^k
    HomologyGroup g;
    g.rank = complex.rank(k) - out_of.rank() - into.rank();
    g.torsion = nontrivial(into.diagonal);
    out[k] = std::move(g);
  }
  return out;
}

std::string format_groups(const GradedGroups& groups, const std::string& label) {
  std::ostringstream out;
  for (const auto& [k, g] : groups) out << label << k << " = " << g.to_string() << '\n';
  return out.str();
}

}  // namespace corners
