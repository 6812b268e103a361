#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wk/rational.hpp"

namespace wk {

/// Column index -> nonzero entry.
using SparseVector = std::map<std::size_t, Rational>;

/// Row-echelon basis of a subspace of Q^n, grown one vector at a time.
/// Each stored row has its pivot as its smallest column, normalized to 1.
class EchelonBasis {
public:
    /// Remainder of `v` modulo the span; empty iff `v` lies in the span.
    SparseVector reduce(SparseVector v) const;

    /// Adds `v`; returns false if it was already in the span.
    bool insert(SparseVector v);

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

    const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

private:
    std::map<std::size_t, SparseVector> rows_;
};

struct LinearSolution {
    enum class Status { unique, inconsistent, underdetermined };
    Status status = Status::inconsistent;
    std::vector<Rational> values;  // filled only when status == unique
};

/// Solves the (possibly overdetermined) exact system rows * x = rhs.
LinearSolution solve_exact(const std::vector<SparseVector>& rows, const std::vector<Rational>& rhs,
                           std::size_t unknowns);

}  // namespace wk
