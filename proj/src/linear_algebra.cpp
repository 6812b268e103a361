#include "wk/linear_algebra.hpp"

#include <stdexcept>

namespace wk {

namespace {

// v -= factor * row, dropping cancelled entries.
void axpy(SparseVector& v, const Rational& factor, const SparseVector& row)
{
    for (const auto& [col, x] : row) {
        auto [it, inserted] = v.try_emplace(col, -(factor * x));
        if (!inserted) {
            it->second -= factor * x;
            if (it->second.is_zero())
                v.erase(it);
        }
    }
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const
{
    for (const auto& [pivot, row] : rows_) {
        if (v.empty())
            break;
        auto it = v.find(pivot);
        if (it == v.end())
            continue;
        Rational factor = it->second;
        axpy(v, factor, row);
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    auto pivot = v.begin()->first;
    Rational lead = v.begin()->second;
    for (auto& [col, x] : v)
        x /= lead;
    rows_.emplace(pivot, std::move(v));
    return true;
}

LinearSolution solve_exact(const std::vector<SparseVector>& rows, const std::vector<Rational>& rhs,
                           std::size_t unknowns)
{
    if (rows.size() != rhs.size())
        throw std::invalid_argument("solve_exact: row/rhs count mismatch");

    EchelonBasis basis;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVector augmented = rows[r];
        if (!augmented.empty() && augmented.rbegin()->first >= unknowns)
            throw std::invalid_argument("solve_exact: column index out of range");
        if (!rhs[r].is_zero())
            augmented.emplace(unknowns, rhs[r]);
        basis.insert(std::move(augmented));
    }

    LinearSolution result;
    if (basis.rows().count(unknowns) != 0) {
        result.status = LinearSolution::Status::inconsistent;
        return result;
    }
    if (basis.rank() < unknowns) {
        result.status = LinearSolution::Status::underdetermined;
        return result;
    }

    result.status = LinearSolution::Status::unique;
    result.values.assign(unknowns, Rational(0));
    for (auto it = basis.rows().rbegin(); it != basis.rows().rend(); ++it) {
        const auto& [pivot, row] = *it;
        Rational value(0);
        for (const auto& [col, x] : row) {
            if (col == unknowns)
                value += x;
            else if (col != pivot)
                value -= x * result.values[col];
        }
        result.values[pivot] = value;
    }
    return result;
}

}  // namespace wk
