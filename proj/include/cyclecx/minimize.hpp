/**
 * Minimizing cycles for positive curve lengths: the minimizing face of a
 * cell, its value and the minimizing multicurve.
 */

#ifndef CYCLECX_MINIMIZE_HPP
#define CYCLECX_MINIMIZE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "cellpoly.hpp"
#include "exactlinalg.hpp"
#include "multicurve.hpp"

namespace cyclecx {

class InvalidLengths : public std::invalid_argument
{
    public:
        explicit InvalidLengths(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Strictly positive rational length for every curve.
 */
class LengthAssignment
{
    private:
        std::map<std::string, Rational> lengths_;

        static std::map<std::string, Rational> zip(const std::vector<std::string>& curves, const RationalVector& values)
        {
            if (curves.size() != values.size())
                throw InvalidLengths("length vector has wrong size");
            std::map<std::string, Rational> m;
            for (std::size_t i = 0; i < curves.size(); ++i)
                m[curves[i]] = values[i];
            return m;
        }

    public:
        LengthAssignment() = default;

        explicit LengthAssignment(std::map<std::string, Rational> lengths) : lengths_(std::move(lengths))
        {
            for (const auto& [id, l] : lengths_)
                if (l <= 0)
                    throw InvalidLengths("length of \"" + id + "\" is not positive");
        }

        LengthAssignment(const std::vector<std::string>& curves, const RationalVector& values)
            : LengthAssignment(zip(curves, values)) {}

        const Rational& at(const std::string& id) const
        {
            auto it = lengths_.find(id);
            if (it == lengths_.end())
                throw InvalidLengths("no length for curve \"" + id + "\"");
            return it->second;
        }

        /** Lengths ordered like `curves`; every curve must be covered. */
        RationalVector over(const std::vector<std::string>& curves) const
        {
            RationalVector v;
            v.reserve(curves.size());
            for (const auto& id : curves)
                v.push_back(at(id));
            return v;
        }

        const std::map<std::string, Rational>& values() const { return lengths_; }
};

/** Sum of |k_i| times the length of c_i. */
inline Rational cycleLength(const Cycle& c, const LengthAssignment& lengths)
{
    Rational total = 0;
    for (std::size_t i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i] != 0)
            total += abs(c.coefficients[i]) * lengths.at(c.curves[i]);
    return total;
}

/**
 * The face of the cell on which length is minimal.
 */
struct MinimizingFace
{
    std::vector<std::size_t> vertexIndices;     // into the cell's vertex list
    std::vector<Cycle> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // indices into `vertices`
    std::size_t dimension = 0;
    Rational value;
    std::vector<std::string> multicurve;        // union of the vertex supports
};

inline MinimizingFace minimalFace(const CellPolytope& cell, const LengthAssignment& lengths)
{
    if (cell.vertices.empty())
        throw InfeasibleClass("cell has no vertices");
    std::vector<Rational> values;
    for (const auto& v : cell.vertices)
        values.push_back(cycleLength(v, lengths));
    const Rational best = *std::min_element(values.begin(), values.end());

    MinimizingFace face;
    face.value = best;
    std::vector<std::size_t> position(cell.vertices.size(), cell.vertices.size());
    for (std::size_t i = 0; i < cell.vertices.size(); ++i)
        if (values[i] == best)
        {
            position[i] = face.vertices.size();
            face.vertexIndices.push_back(i);
            face.vertices.push_back(cell.vertices[i]);
        }
    for (const auto& [a, b] : cell.edges)
        if (position[a] < cell.vertices.size() && position[b] < cell.vertices.size())
            face.edges.emplace_back(position[a], position[b]);

    std::vector<RationalVector> points;
    std::vector<bool> used(cell.ambient.curves.size(), false);
    for (const auto& v : face.vertices)
    {
        points.push_back(v.coefficients);
        for (auto i : v.support())
            used[i] = true;
    }
    face.dimension = affineDimension(points);
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i])
            face.multicurve.push_back(cell.ambient.curves[i]);
    return face;
}

inline MinimizingFace minimalFace(const RelationPresentation& p, const LengthAssignment& lengths)
{
    return minimalFace(cellPolytope(p), lengths);
}

/**
 * Both sides of the balance criterion: every subsurface relation pairs to
 * zero with the lengths, and every positive cycle for x has the same length.
 * The latter holds iff all vertices have one length and the positive cycles
 * are bounded; along an unbounded direction length strictly grows.
 */
struct BalanceReport
{
    bool relationsBalanced = false;
    bool verticesEqual = false;
    bool bounded = true;

    bool positiveCyclesEqual() const { return verticesEqual && bounded; }
};

inline BalanceReport lengthBalance(const CellPolytope& cell, const LengthAssignment& lengths)
{
    const auto& rel = cell.ambient.relations;
    const RationalVector l = lengths.over(cell.ambient.curves);
    BalanceReport r;
    r.relationsBalanced = true;
    for (std::size_t i = 0; i < rel.rows(); ++i)
    {
        Rational s = 0;
        for (std::size_t j = 0; j < rel.cols(); ++j)
            s += Rational(rel(i, j)) * l[j];
        if (s != 0)
            r.relationsBalanced = false;
    }
    r.bounded = cell.bounded;
    r.verticesEqual = true;
    const Rational first = cycleLength(cell.vertices.front(), lengths);
    for (const auto& v : cell.vertices)
        if (cycleLength(v, lengths) != first)
            r.verticesEqual = false;
    return r;
}

/**
 * True iff all positive cycles for x on the multicurve have the same
 * length. Throws std::logic_error if the two criteria ever disagree.
 */
inline bool isLengthBalanced(const RelationPresentation& p, const LengthAssignment& lengths)
{
    const BalanceReport r = lengthBalance(cellPolytope(p), lengths);
    if (r.relationsBalanced != r.positiveCyclesEqual())
        throw std::logic_error("relation balance and equal length of positive cycles disagree");
    return r.relationsBalanced;
}

}   // namespace cyclecx

#endif
