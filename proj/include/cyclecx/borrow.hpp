/**
 * Borrowing: rebalancing a positive cycle along a homology relation.
 *
 * A relation sum r_i [c_i] = 0 is split by sign. Curves with r_i > 0 gain
 * delta * r_i, curves with r_i < 0 lose delta * |r_i|. With
 * L1 = sum_{r_i > 0} r_i l(c_i) and L2 = sum_{r_i < 0} |r_i| l(c_i), the
 * length changes by exactly -delta * (L2 - L1).
 */

#ifndef CYCLECX_BORROW_HPP
#define CYCLECX_BORROW_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "cellpoly.hpp"
#include "exactlinalg.hpp"
#include "minimize.hpp"
#include "multicurve.hpp"

namespace cyclecx {

class InvalidBorrow : public std::invalid_argument
{
    public:
        explicit InvalidBorrow(const std::string& what) : std::invalid_argument(what) {}
};

struct BorrowingMove
{
    IntVector relation;
    Rational delta;
};

/**
 * Largest admissible delta: min over decreasing curves of k_i / |r_i|.
 * Empty when no coefficient decreases.
 */
inline std::optional<Rational> maxDelta(const Cycle& c, std::span<const Integer> relation)
{
    std::optional<Rational> best;
    for (std::size_t i = 0; i < relation.size(); ++i)
        if (relation[i] < 0)
        {
            const Rational bound = c.coefficients[i] / Rational(-relation[i]);
            if (!best || bound < *best)
                best = bound;
        }
    return best;
}

namespace detail {

inline void checkMove(const RelationPresentation& p, const Cycle& c, const BorrowingMove& move)
{
    if (c.coefficients.size() != p.curves.size() || move.relation.size() != p.curves.size())
        throw InvalidBorrow("cycle or relation has the wrong number of curves");
    if (!c.nonnegative())
        throw InvalidBorrow("cycle has a negative coefficient");
    if (move.delta < 0)
        throw InvalidBorrow("delta is negative");
    if (!inRowSpan(p.relations, std::span<const Integer>(move.relation)))
        throw InvalidBorrow("vector is not a relation among the curve classes");
    const auto limit = maxDelta(c, move.relation);
    if (limit && move.delta > *limit)
        throw InvalidBorrow("delta " + move.delta.str() + " exceeds min k_i/v_i = " + limit->str());
}

}   // namespace detail

/**
 * c + delta * r. The result represents the same class as c.
 */
inline Cycle applyBorrow(const RelationPresentation& p, const Cycle& c, const BorrowingMove& move)
{
    detail::checkMove(p, c, move);
    Cycle out = c;
    for (std::size_t i = 0; i < out.coefficients.size(); ++i)
        out.coefficients[i] += move.delta * Rational(move.relation[i]);
    return out;
}

enum class LengthChange
{
    equalLength,
    strictlyShorter,
    strictlyLonger
};

inline std::string toString(LengthChange c)
{
    switch (c)
    {
        case LengthChange::equalLength: return "equal-length";
        case LengthChange::strictlyShorter: return "strictly-shorter";
        case LengthChange::strictlyLonger: return "strictly-longer";
    }
    return "unknown";
}

struct LengthEffect
{
    Rational increasingSide;    // L1
    Rational decreasingSide;    // L2
    Rational before;
    Rational after;
    LengthChange change = LengthChange::equalLength;
};

inline LengthEffect lengthEffect(const RelationPresentation& p, const Cycle& c, const BorrowingMove& move,
                                 const LengthAssignment& lengths)
{
    const Cycle moved = applyBorrow(p, c, move);
    LengthEffect e;
    for (std::size_t i = 0; i < move.relation.size(); ++i)
    {
        const Rational l = lengths.at(p.curves[i]);
        if (move.relation[i] > 0)
            e.increasingSide += Rational(move.relation[i]) * l;
        else if (move.relation[i] < 0)
            e.decreasingSide += Rational(-move.relation[i]) * l;
    }
    e.before = cycleLength(c, lengths);
    e.after = cycleLength(moved, lengths);
    e.change = e.after == e.before ? LengthChange::equalLength
             : e.after < e.before ? LengthChange::strictlyShorter
                                   : LengthChange::strictlyLonger;
    return e;
}

struct Reduction
{
    Cycle cycle;
    std::vector<BorrowingMove> moves;
};

/**
 * Borrow repeatedly until the support is linearly independent, never
 * increasing length. Each move zeroes at least one coefficient, so at most
 * |M| moves are made.
 *
 * With L1 != L2 the move goes in the length-decreasing direction. On a tie
 * the direction with the smaller maximal delta wins; if that also ties, the
 * direction that zeroes the lexicographically smallest curve id.
 */
inline Reduction reduceToBasicTraced(const RelationPresentation& p, const Cycle& start, const LengthAssignment& lengths)
{
    p.check();
    if (start.coefficients.size() != p.curves.size())
        throw InvalidBorrow("cycle has the wrong number of curves");
    if (!start.nonnegative())
        throw InfeasibleClass("cycle has a negative coefficient");
    if (start.support().empty())
        throw InfeasibleClass("empty cycle");

    const HomologyQuotient q(p.relations);
    const IntMatrix& phi = q.classMap();
    const RationalVector l = lengths.over(p.curves);
    Reduction result{start, {}};

    while (true)
    {
        const auto support = result.cycle.support();
        IntMatrix restricted(phi.rows(), support.size());
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < support.size(); ++j)
                restricted(i, j) = phi(i, support[j]);
        const auto kernel = kernelBasis(restricted);
        if (kernel.empty())
            return result;

        IntVector r(p.curves.size(), Integer(0));
        for (std::size_t j = 0; j < support.size(); ++j)
            r[support[j]] = boost::multiprecision::numerator(kernel.front()[j]);
        Rational pairing = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            pairing += Rational(r[i]) * l[i];

        IntVector neg = r;
        for (auto& v : neg)
            v = -v;
        IntVector direction;
        if (pairing < 0)
            direction = r;
        else if (pairing > 0)
            direction = neg;
        else
        {
            const auto up = maxDelta(result.cycle, r);
            const auto down = maxDelta(result.cycle, neg);
            auto zeroed = [&](const IntVector& d, const Rational& delta) {
                std::string smallest;
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (d[i] < 0 && result.cycle.coefficients[i] == delta * Rational(-d[i]))
                        if (smallest.empty() || p.curves[i] < smallest)
                            smallest = p.curves[i];
                return smallest;
            };
            if (!up)
                direction = neg;
            else if (!down)
                direction = r;
            else if (*up != *down)
                direction = *up < *down ? r : neg;
            else
                direction = zeroed(r, *up) < zeroed(neg, *down) ? r : neg;
        }

        const auto delta = maxDelta(result.cycle, direction);
        if (!delta)
            throw std::logic_error("length-decreasing borrow without a decreasing side");
        BorrowingMove move{direction, *delta};
        result.cycle = applyBorrow(p, result.cycle, move);
        result.moves.push_back(std::move(move));
    }
}

inline Cycle reduceToBasic(const RelationPresentation& p, const Cycle& start, const LengthAssignment& lengths)
{
    return reduceToBasicTraced(p, start, lengths).cycle;
}

}   // namespace cyclecx

#endif
