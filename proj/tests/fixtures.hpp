/**
 * Multicurves and presentations shared by the test suites.
 */
#ifndef CYCLECX_TEST_FIXTURES_HPP
#define CYCLECX_TEST_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>
#include "cyclecx/exactlinalg.hpp"
#include "cyclecx/multicurve.hpp"

namespace fixtures {

using namespace cyclecx;

/** Genus 2, two pairs of pants glued along a, b, c; [a] = [b] + [c]. */
inline MulticurveType edgeCell()
{
    return {2, {{"v1", 0}, {"v2", 0}}, {{"a", "v2", "v1"}, {"b", "v1", "v2"}, {"c", "v1", "v2"}}};
}

/** Same as edgeCell with b reversed, so b never appears positively. */
inline MulticurveType edgeCellReversedB()
{
    return {2, {{"v1", 0}, {"v2", 0}}, {{"a", "v2", "v1"}, {"b", "v2", "v1"}, {"c", "v1", "v2"}}};
}

/** Genus 3 bounding pair: two genus-1 components cobounded by a and b. */
inline MulticurveType boundingPairS3()
{
    return {3, {{"v1", 1}, {"v2", 1}}, {{"a", "v1", "v2"}, {"b", "v2", "v1"}}};
}

/** A would-be bounding pair in genus 2: one side is an annulus. */
inline MulticurveType boundingPairS2()
{
    return {2, {{"v1", 1}, {"v2", 0}}, {{"a", "v1", "v2"}, {"b", "v2", "v1"}}};
}

/** Genus 4, three homologous curves cutting off three genus-1 pieces in a ring. */
inline MulticurveType threeHomologous()
{
    return {4, {{"v1", 1}, {"v2", 1}, {"v3", 1}}, {{"a", "v1", "v2"}, {"b", "v2", "v3"}, {"c", "v3", "v1"}}};
}

/** A single nonseparating curve in genus 2. */
inline MulticurveType singleLoop()
{
    return {2, {{"v", 1}}, {{"a", "v", "v"}}};
}

/**
 * Genus 6: a1, a2, a3 mutually homologous, b1 b2 and c1 c2 nested bounding
 * pairs, d a lone nonseparating curve.
 */
inline MulticurveType boundingPairsS6()
{
    return {6,
            {{"u1", 0}, {"u2", 0}, {"u3", 1}, {"w1", 0}, {"w2", 1}},
            {{"a1", "u1", "u2"},
             {"a2", "u2", "u3"},
             {"a3", "u3", "u1"},
             {"b1", "u1", "w1"},
             {"b2", "w1", "u1"},
             {"c1", "w1", "w2"},
             {"c2", "w2", "w1"},
             {"d", "u2", "u2"}}};
}

/**
 * Genus 3, five curves and three genus-0 components: [c5] = [c1]+[c2]+[c3],
 * [c4] = [c1]+[c2]. With x = [c5] the cell is a 2-simplex.
 */
inline MulticurveType borrowingDimensionS3()
{
    return {3,
            {{"A", 0}, {"B", 0}, {"C", 0}},
            {{"c1", "A", "B"}, {"c2", "A", "B"}, {"c3", "A", "C"}, {"c4", "B", "C"}, {"c5", "C", "A"}}};
}

/** Relations [a]+[b]+[c]=[e], [a]+[b]+[d]=[f]; x = d+2e+f. */
inline RelationPresentation pentagon()
{
    return {{"a", "b", "c", "d", "e", "f"},
            IntMatrix{{1, 1, 1, 0, -1, 0}, {1, 1, 0, 1, 0, -1}},
            IntVector{0, 0, 0, 1, 2, 1}};
}

/** Relations [c] = [a]+[b], [f] = [d]+[e]; x = [c]+[f]. */
inline RelationPresentation square()
{
    return {{"a", "b", "c", "d", "e", "f"},
            IntMatrix{{1, 1, -1, 0, 0, 0}, {0, 0, 0, 1, 1, -1}},
            IntVector{0, 0, 1, 0, 0, 1}};
}

template <typename T>
std::set<std::vector<T>> asSet(const std::vector<std::vector<T>>& rows)
{
    return {rows.begin(), rows.end()};
}

inline std::vector<Rational> q(std::initializer_list<long> xs)
{
    std::vector<Rational> v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

/** Random positive rational with numerator and denominator in [1, bound]. */
inline Rational randomPositive(std::mt19937_64& rng, int bound = 12)
{
    std::uniform_int_distribution<int> d(1, bound);
    return Rational(Integer(d(rng)), Integer(d(rng)));
}

}   // namespace fixtures

#endif
