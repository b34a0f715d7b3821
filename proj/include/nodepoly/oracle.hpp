#pragma once

// Plane-curve counts from the Caporaso-Harris recursion.
//
// Conventions: N(d, delta, alpha, beta) counts reduced plane curves of degree d
// with delta nodes, not containing a fixed line L, meeting L in alpha_k fixed
// general points of L with contact order k and in beta_k further unassigned
// points with contact order k (sum of k (alpha_k + beta_k) = d), through
// d(d+3)/2 - delta - sum (k-1) beta_k - sum k alpha_k general points of the plane.
// The Severi degree is N(d, delta, 0, d e_1). Vectors are indexed from k = 1
// (entry 0 is contact order 1).

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "nodepoly/rational.hpp"

namespace nodepoly {

class CHOracle {
 public:
  using Tangency = std::vector<int>;

  Integer relative(int degree, int delta, const Tangency& alpha, const Tangency& beta);

  /// Number of delta-nodal degree-m plane curves, reducible ones included,
  /// through m(m+3)/2 - delta general points.
  Integer severi_degree(int m, int delta);

  /// Irreducible curves only: the Severi degree minus every assembly of two or
  /// more irreducible components. Zero when delta > C(m-1, 2).
  Integer irreducible(int m, int delta);

  /// Reassembles all reduced delta-nodal curves from irreducible components
  /// meeting transversally, the points distributed among the components.
  /// Throws std::invalid_argument unless m >= 1 and 0 <= delta <= 3.
  Integer total_nodal_count(int m, int delta);

  /// Memo table as text; load ignores a missing file.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Integer assemble(int m, int delta, bool reducible_only);

  std::map<std::string, Integer> memo_;
  std::map<std::pair<int, int>, Integer> irreducible_;
};

/// Conveniences on a process-wide oracle.
CHOracle& default_oracle();
Integer ch_irreducible(int m, int delta);
Integer total_nodal_count(int m, int delta);

}  // namespace nodepoly
