/**
 * Basic cycles for a class x supported on a multicurve, and the cell
 * polytope they span.
 *
 * A basic cycle is a positive cycle representing x whose support is
 * linearly independent in homology. The cell is the convex hull of the
 * basic cycles inside the affine space of representatives of x; its
 * dimension is |M| - D. When some nonnegative combination of curves is
 * null-homologous the positive representatives of x are unbounded and
 * strictly contain the cell.
 */

#ifndef CYCLECX_CELLPOLY_HPP
#define CYCLECX_CELLPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "exactlinalg.hpp"
#include "multicurve.hpp"

namespace cyclecx {

class InfeasibleClass : public std::runtime_error
{
    public:
        explicit InfeasibleClass(const std::string& what) : std::runtime_error(what) {}
};

class NotAdmissible : public std::runtime_error
{
    public:
        explicit NotAdmissible(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A cycle sum k_i c_i over a fixed list of curves.
 */
struct Cycle
{
    std::vector<std::string> curves;
    RationalVector coefficients;

    static Cycle fromIntegers(std::vector<std::string> curves, const IntVector& k)
    {
        return {std::move(curves), RationalVector(k.begin(), k.end())};
    }

    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            if (coefficients[i] != 0)
                s.push_back(i);
        return s;
    }

    std::vector<std::string> supportIds() const
    {
        std::vector<std::string> s;
        for (auto i : support())
            s.push_back(curves[i]);
        return s;
    }

    bool integral() const
    {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
    }

    bool nonnegative() const
    {
        return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q >= 0; });
    }

    Rational coefficient(const std::string& id) const
    {
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (curves[i] == id)
                return coefficients[i];
        throw InvalidReference("unknown curve \"" + id + "\"");
    }

    /** Linear-combination label such as "3a+3b+2c+2d"; "0" for the empty cycle. */
    std::string label() const
    {
        std::string out;
        for (std::size_t i = 0; i < coefficients.size(); ++i)
        {
            const Rational& k = coefficients[i];
            if (k == 0)
                continue;
            if (k < 0)
                out += "-";
            else if (!out.empty())
                out += "+";
            const Rational a = abs(k);
            const bool needsStar = boost::multiprecision::denominator(a) != 1 ||
                                   (!curves[i].empty() && curves[i][0] >= '0' && curves[i][0] <= '9');
            if (a != 1)
                out += a.str() + (needsStar ? "*" : "");
            out += curves[i];
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.coefficients == b.coefficients && a.curves == b.curves; }
};

namespace detail {

/** Columns `cols` of m as a rational matrix. */
inline RationalMatrix selectColumns(const RationalMatrix& m, const std::vector<std::size_t>& cols)
{
    RationalMatrix out(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = m(i, cols[j]);
    return out;
}

/** Row basis (from the echelon form) of the relation span W. */
inline RationalMatrix relationSpanBasis(const IntMatrix& relations)
{
    RowEchelon e = rowEchelon(toRational(relations));
    RationalMatrix basis(e.pivots.size(), relations.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < relations.cols(); ++j)
            basis(i, j) = e.reduced(i, j);
    return basis;
}

inline std::vector<std::size_t> bitsOf(std::uint64_t mask, std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i))
            out.push_back(i);
    return out;
}

inline bool lexGreater(const RationalVector& a, const RationalVector& b)
{
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}   // namespace detail

/**
 * All basic cycles for x = [reference], sorted lexicographically by
 * coefficient vector (largest first). An empty result means x has no
 * positive representative on this multicurve.
 */
inline std::vector<Cycle> enumerateBasicCycles(const RelationPresentation& p)
{
    p.check();
    const std::size_t n = p.curves.size();
    if (n >= 63)
        throw InvalidMulticurve("too many curves for subset enumeration");
    const HomologyQuotient q(p.relations);
    const RationalMatrix phi = toRational(q.classMap());
    const RationalVector target = q.classOf(std::span<const Integer>(p.reference));
    if (isZeroVector(target))
        throw InvalidReference("reference cycle represents the trivial class");
    const std::size_t d = q.spanDimension();

    std::vector<Cycle> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
    {
        const auto subset = detail::bitsOf(mask, n);
        if (subset.size() > d)
            continue;
        RationalMatrix aug(phi.rows(), subset.size() + 1);
        for (std::size_t i = 0; i < phi.rows(); ++i)
        {
            for (std::size_t j = 0; j < subset.size(); ++j)
                aug(i, j) = phi(i, subset[j]);
            aug(i, subset.size()) = target[i];
        }
        const RowEchelon e = rowEchelon(std::move(aug));
        // Independent columns and a consistent system: pivots are exactly 0..|S|-1
        if (e.pivots.size() != subset.size())
            continue;
        bool independent = true;
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (e.pivots[j] != j)
                independent = false;
        if (!independent)
            continue;
        RationalVector k(n, Rational(0));
        bool positive = true;
        for (std::size_t j = 0; j < subset.size(); ++j)
        {
            k[subset[j]] = e.reduced(j, subset.size());
            if (k[subset[j]] <= 0)
                positive = false;
        }
        if (positive)
            found.push_back({p.curves, std::move(k)});
    }
    std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) { return detail::lexGreater(a.coefficients, b.coefficients); });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

/**
 * True iff every curve appears in the support of some basic cycle for x.
 * Throws InfeasibleClass when x has no positive representative at all.
 */
inline bool isAdmissible(const RelationPresentation& p)
{
    const auto vertices = enumerateBasicCycles(p);
    if (vertices.empty())
        throw InfeasibleClass("no positive cycle represents x on this multicurve");
    std::vector<bool> used(p.curves.size(), false);
    for (const auto& v : vertices)
        for (auto i : v.support())
            used[i] = true;
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

/**
 * True iff some nonzero nonnegative vector lies in the relation span, i.e.
 * the region of positive representatives of x is unbounded. Checked on the
 * elementary (minimal-support) vectors of the span.
 */
inline bool hasNonnegativeRelation(const IntMatrix& relations)
{
    const RationalMatrix basis = detail::relationSpanBasis(relations);
    const std::size_t r = basis.rows();
    const std::size_t n = basis.cols();
    if (r == 0)
        return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    {
        const auto zeros = detail::bitsOf(mask, n);
        if (zeros.size() != r - 1)
            continue;
        // w = lambda^T basis with w_zeros = 0, i.e. lambda in ker(basis[:, zeros]^T)
        const auto lambdas = kernelBasis(detail::selectColumns(basis, zeros).transpose());
        if (lambdas.size() != 1)
            continue;
        RationalVector w(n, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w[j] += lambdas[0][i] * basis(i, j);
        const bool nonneg = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x >= 0; });
        const bool nonpos = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x <= 0; });
        if ((nonneg || nonpos) && !isZeroVector(w))
            return true;
    }
    return false;
}

/**
 * Affine dimension of a finite point set.
 */
inline std::size_t affineDimension(const std::vector<RationalVector>& points)
{
    if (points.size() <= 1)
        return 0;
    RationalMatrix diffs(points.size() - 1, points.front().size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.front().size(); ++j)
            diffs(i - 1, j) = points[i][j] - points[0][j];
    return rationalRank(diffs);
}

struct CellPolytope
{
    RelationPresentation ambient;
    std::size_t dimension = 0;
    std::vector<Cycle> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool bounded = true;    // the cell contains every positive representative of x
};

/**
 * Dimension of the smallest face of the cell on which the curves in
 * `zeros` all have coefficient zero.
 */
inline std::size_t faceDimension(const RationalMatrix& spanBasis, const std::vector<std::size_t>& zeros)
{
    if (zeros.empty())
        return spanBasis.rows();
    return spanBasis.rows() - rationalRank(detail::selectColumns(spanBasis, zeros));
}

namespace detail {

/**
 * Edges of a bounded region of positive representatives: two vertices span
 * an edge when the face cut out by the coordinates vanishing at both is
 * one-dimensional.
 */
inline std::vector<std::pair<std::size_t, std::size_t>> faceEdges(const IntMatrix& relations, const std::vector<Cycle>& vertices)
{
    const RationalMatrix spanBasis = relationSpanBasis(relations);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
        {
            std::vector<std::size_t> zeros;
            for (std::size_t c = 0; c < relations.cols(); ++c)
                if (vertices[i].coefficients[c] == 0 && vertices[j].coefficients[c] == 0)
                    zeros.push_back(c);
            if (faceDimension(spanBasis, zeros) == 1)
                edges.emplace_back(i, j);
        }
    return edges;
}

/**
 * Edges of the convex hull of a finite point set, from its facets: two
 * vertices span an edge when the facets through both cut out a line.
 * Points are first written in coordinates on their affine hull.
 */
inline std::vector<std::pair<std::size_t, std::size_t>> hullEdges(const std::vector<RationalVector>& points)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (points.size() < 2)
        return edges;
    const std::size_t n = points.front().size();
    RationalMatrix diffs(points.size(), n);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            diffs(i, j) = points[i][j] - points[0][j];
    const RowEchelon e = rowEchelon(diffs);
    const std::size_t dim = e.pivots.size();
    if (dim == 1)
    {
        // A segment: the two extreme points along the line
        std::size_t lo = 0, hi = 0;
        const std::size_t c = e.pivots[0];
        for (std::size_t i = 1; i < points.size(); ++i)
        {
            if (points[i][c] < points[lo][c])
                lo = i;
            if (points[i][c] > points[hi][c])
                hi = i;
        }
        edges.emplace_back(std::min(lo, hi), std::max(lo, hi));
        return edges;
    }
    // Coordinates on the hull: entries at the pivot columns of the echelon basis
    std::vector<RationalVector> y;
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        RationalVector v;
        for (auto c : e.pivots)
            v.push_back(diffs(i, c));
        y.push_back(std::move(v));
    }

    // Facet normals: hyperplanes through dim affinely independent points with all points on one side
    std::vector<std::vector<bool>> incidence;
    std::vector<RationalVector> normals;
    std::set<std::pair<RationalVector, Rational>> seen;
    std::vector<std::size_t> chosen;
    auto visit = [&](auto&& self, std::size_t next) -> void {
        if (chosen.size() == dim)
        {
            RationalMatrix m(dim - 1, dim);
            for (std::size_t r = 1; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    m(r - 1, c) = y[chosen[r]][c] - y[chosen[0]][c];
            const auto kernel = kernelBasis(m);
            if (kernel.size() != 1)
                return;
            RationalVector a = kernel.front();
            auto dot = [&](const RationalVector& v) {
                Rational s = 0;
                for (std::size_t c = 0; c < dim; ++c)
                    s += a[c] * v[c];
                return s;
            };
            Rational b = dot(y[chosen[0]]);
            bool below = false, above = false;
            for (const auto& v : y)
            {
                const Rational s = dot(v);
                below = below || s < b;
                above = above || s > b;
            }
            if (below && above)
                return;
            if (below)
            {
                for (auto& x : a)
                    x = -x;
                b = -b;
            }
            if (!seen.insert({a, b}).second)
                return;
            std::vector<bool> on(points.size());
            for (std::size_t i = 0; i < points.size(); ++i)
                on[i] = dot(y[i]) == b;
            normals.push_back(a);
            incidence.push_back(std::move(on));
            return;
        }
        for (std::size_t i = next; i < points.size(); ++i)
        {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    visit(visit, 0);

    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
        {
            std::vector<RationalVector> common;
            for (std::size_t f = 0; f < normals.size(); ++f)
                if (incidence[f][i] && incidence[f][j])
                    common.push_back(normals[f]);
            if (!common.empty() && rationalRank(RationalMatrix::fromRows(common, dim)) == dim - 1)
                edges.emplace_back(i, j);
        }
    return edges;
}

}   // namespace detail

/**
 * The cell polytope of an admissible multicurve: its basic cycles as
 * vertices and its geometric edges.
 */
inline CellPolytope cellPolytope(const RelationPresentation& p)
{
    if (!isAdmissible(p))
        throw NotAdmissible("some curve appears in no basic cycle for x");

    CellPolytope cell;
    cell.ambient = p;
    cell.vertices = enumerateBasicCycles(p);
    cell.bounded = !hasNonnegativeRelation(p.relations);
    const HomologyQuotient q(p.relations);
    cell.dimension = q.curveCount() - q.spanDimension();

    std::vector<RationalVector> points;
    for (const auto& v : cell.vertices)
        points.push_back(v.coefficients);
    if (affineDimension(points) != cell.dimension)
        throw std::logic_error("vertex hull dimension disagrees with |M| - D");

    cell.edges = cell.bounded ? detail::faceEdges(p.relations, cell.vertices) : detail::hullEdges(points);
    return cell;
}

/**
 * Project each vertex onto its coefficients on the given curves.
 */
inline std::vector<RationalVector> vertexCoordinates(const CellPolytope& cell, const std::vector<std::string>& coordinates)
{
    std::vector<std::size_t> idx;
    for (const auto& id : coordinates)
        idx.push_back(cell.ambient.curveIndex(id));
    std::vector<RationalVector> out;
    for (const auto& v : cell.vertices)
    {
        RationalVector row;
        for (auto i : idx)
            row.push_back(v.coefficients[i]);
        out.push_back(std::move(row));
    }
    return out;
}

}   // namespace cyclecx

#endif
