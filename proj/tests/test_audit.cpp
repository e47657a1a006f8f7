/**
 * Tests for type enumeration, dimension ledgers and the inequality audit.
 */
#include <numeric>
#include <gtest/gtest.h>
#include "cyclecx/audit.hpp"
#include "fixtures.hpp"

using namespace cyclecx;

namespace {

/**
 * Brute-force oracle: all graphs with N labeled vertices given as sorted
 * edge lists over (i, j) pairs, genus vectors of every shape, deduplicated
 * by trying all N! relabelings. Directed graphs also try global reversal.
 */
struct BruteCounts
{
    std::size_t unoriented = 0;
    std::size_t oriented = 0;
};

using Edge = std::pair<int, int>;

bool brutelyValid(int g, const std::vector<int>& genus, const std::vector<Edge>& edges)
{
    const std::size_t n = genus.size();
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges)
    {
        ++deg[a];
        ++deg[b];
    }
    long euler = 0;
    for (std::size_t v = 0; v < n; ++v)
    {
        if (2 - 2 * genus[v] - deg[v] >= 0)
            return false;
        euler += 2 - 2 * genus[v] - deg[v];
    }
    if (euler != 2 - 2 * g)
        return false;
    MulticurveType m;
    m.surfaceGenus = g;
    for (std::size_t v = 0; v < n; ++v)
        m.components.push_back({"v" + std::to_string(v), genus[v]});
    for (std::size_t e = 0; e < edges.size(); ++e)
        m.curves.push_back({"e" + std::to_string(e), "v" + std::to_string(edges[e].first), "v" + std::to_string(edges[e].second)});
    return validate(m).ok();
}

std::pair<std::vector<int>, std::vector<Edge>> relabel(const std::vector<int>& genus, const std::vector<Edge>& edges,
                                                       const std::vector<int>& perm, bool directed, bool reversed)
{
    std::vector<int> g(genus.size());
    for (std::size_t v = 0; v < genus.size(); ++v)
        g[perm[v]] = genus[v];
    std::vector<Edge> e;
    for (auto [a, b] : edges)
    {
        int x = perm[a], y = perm[b];
        if (reversed)
            std::swap(x, y);
        if (!directed && x > y)
            std::swap(x, y);
        e.emplace_back(x, y);
    }
    std::sort(e.begin(), e.end());
    return {g, e};
}

BruteCounts bruteForce(int g, std::size_t maxCurves)
{
    BruteCounts counts;
    for (int n = 1; n <= 2 * g - 2; ++n)
    {
        std::vector<Edge> undirectedPairs, directedPairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
            {
                directedPairs.emplace_back(i, j);
                if (i <= j)
                    undirectedPairs.emplace_back(i, j);
            }
        std::vector<std::vector<int>> genusVectors;
        std::vector<int> gv(n, 0);
        auto genusRec = [&](auto&& self, int v) -> void {
            if (v == n)
            {
                genusVectors.push_back(gv);
                return;
            }
            for (int x = 0; x <= g; ++x)
            {
                gv[v] = x;
                self(self, v + 1);
            }
        };
        genusRec(genusRec, 0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        for (bool directed : {false, true})
        {
            const auto& pairs = directed ? directedPairs : undirectedPairs;
            std::set<std::pair<std::vector<int>, std::vector<Edge>>> seen;
            std::vector<Edge> chosen;
            // Multisets of pairs, nondecreasing index
            auto rec = [&](auto&& self, std::size_t from) -> void {
                if (!chosen.empty())
                    for (const auto& genus : genusVectors)
                        if (brutelyValid(g, genus, chosen))
                        {
                            std::pair<std::vector<int>, std::vector<Edge>> best;
                            bool first = true;
                            for (const auto& p : perms)
                                for (bool reversed : {false, true})
                                {
                                    if (reversed && !directed)
                                        continue;
                                    auto key = relabel(genus, chosen, p, directed, reversed);
                                    if (first || key < best)
                                        best = key;
                                    first = false;
                                }
                            seen.insert(best);
                        }
                if (chosen.size() == maxCurves)
                    return;
                for (std::size_t k = from; k < pairs.size(); ++k)
                {
                    chosen.push_back(pairs[k]);
                    self(self, k);
                    chosen.pop_back();
                }
            };
            rec(rec, 0);
            (directed ? counts.oriented : counts.unoriented) += seen.size();
        }
    }
    return counts;
}

}   // namespace

TEST(Ledger, EdgeCell)
{
    const auto l = ledger(fixtures::edgeCell());
    EXPECT_EQ(l.torelliBound, 0);
    EXPECT_EQ(l.cellDimension, 1u);
    EXPECT_EQ(l.torelliBudget(), 1);
    EXPECT_EQ(l.torelliDimension(), 1);
    EXPECT_EQ(l.johnsonBound, 0);
    EXPECT_EQ(l.johnsonBudget(), 1);
    EXPECT_TRUE(l.johnsonBudgetOk());
    EXPECT_EQ(l.torelliComponentBound, l.torelliBound);
    EXPECT_EQ(l.johnsonComponentBound, l.johnsonBound);
}

TEST(Ledger, BoundingPairInGenusThree)
{
    const auto l = ledger(fixtures::boundingPairS3());
    EXPECT_EQ(l.torelliBound, 3);
    EXPECT_EQ(l.cellDimension, 1u);
    EXPECT_EQ(l.torelliBudget(), 4);
    EXPECT_EQ(l.torelliDimension(), 4);
    EXPECT_EQ(l.boundingPairs + 2, 3u);
    EXPECT_EQ(l.span + l.positiveGenus, 3u);
    EXPECT_TRUE(l.bpdpEquality());
}

TEST(Ledger, NestedBoundingPairs)
{
    const auto l = ledger(fixtures::boundingPairsS6());
    EXPECT_EQ(l.boundingPairs, 4u);
    EXPECT_EQ(l.span, 4u);
    EXPECT_EQ(l.positiveGenus, 2u);
    EXPECT_TRUE(l.bpdpEquality());
    EXPECT_EQ(l.torelliBudget(), l.torelliDimension());
    EXPECT_EQ(l.johnsonBudget(), l.johnsonDimension());
}

TEST(Ledger, RejectsInvalidTypes)
{
    EXPECT_THROW(ledger(fixtures::boundingPairS2()), InvalidMulticurve);
}

TEST(Enumerate, GenusTwoSingleCurve)
{
    const auto types = enumerateGraphs(2, 1);
    ASSERT_EQ(types.size(), 1u);
    ASSERT_EQ(types[0].components.size(), 1u);
    EXPECT_EQ(types[0].components[0].genus, 1);
    ASSERT_EQ(types[0].curves.size(), 1u);
    EXPECT_EQ(types[0].curves[0].tail, types[0].curves[0].head);
}

TEST(Enumerate, GenusTwoPantsDecompositions)
{
    std::size_t pants = 0;
    for (const auto& m : enumerateGraphs(2, 3))
    {
        const auto deg = m.degrees();
        bool allPants = m.curves.size() == 3;
        for (std::size_t v = 0; v < m.components.size(); ++v)
            allPants = allPants && 2 - 2 * m.components[v].genus - deg[v] == -1;
        if (allPants)
        {
            ++pants;
            EXPECT_EQ(stats(m).cellDimension, 1u);
        }
    }
    EXPECT_GT(pants, 0u);
}

TEST(Enumerate, NoBoundingPairsInGenusTwo)
{
    for (const auto& m : enumerateTypes(2, 3))
        EXPECT_EQ(stats(m).boundingPairs, 0u) << typeKey(m);
}

TEST(Enumerate, CountsMatchBruteForce)
{
    for (auto [g, maxCurves] : {std::pair{2, std::size_t(3)}, std::pair{3, std::size_t(4)}, std::pair{3, std::size_t(6)}})
    {
        const auto oracle = bruteForce(g, maxCurves);
        EXPECT_EQ(enumerateGraphs(g, maxCurves).size(), oracle.unoriented) << "g=" << g << " max=" << maxCurves;
        EXPECT_EQ(enumerateTypes(g, maxCurves).size(), oracle.oriented) << "g=" << g << " max=" << maxCurves;
    }
}

TEST(Enumerate, NoDuplicatesAndDeterministic)
{
    const auto a = enumerateGraphs(3, 6);
    const auto b = enumerateGraphs(3, 6);
    EXPECT_EQ(a, b);
    std::set<std::string> keys;
    for (const auto& m : a)
    {
        EXPECT_TRUE(validate(m).ok()) << typeKey(m);
        EXPECT_TRUE(keys.insert(canonicalKey(m)).second) << typeKey(m);
    }
}

TEST(Enumerate, CanonicalKeyIgnoresLabels)
{
    auto m = fixtures::boundingPairsS6();
    const auto key = canonicalKey(m);
    std::reverse(m.components.begin(), m.components.end());
    std::reverse(m.curves.begin(), m.curves.end());
    std::swap(m.curves[0].tail, m.curves[0].head);
    EXPECT_EQ(canonicalKey(m), key);
}

TEST(Enumerate, OrientationDoesNotChangeStatistics)
{
    for (const auto& m : enumerateGraphs(3, 6))
    {
        const auto base = stats(m);
        for (const auto& o : orientationClasses(m))
        {
            const auto s = stats(o);
            EXPECT_EQ(s.span, base.span);
            EXPECT_EQ(s.boundingPairs, base.boundingPairs);
            EXPECT_EQ(s.positiveGenus, base.positiveGenus);
            EXPECT_EQ(canonicalKey(o), canonicalKey(m));
        }
    }
}

TEST(Enumerate, RejectsBadArguments)
{
    EXPECT_THROW(enumerateGraphs(1, 1), std::invalid_argument);
    EXPECT_THROW(enumerateGraphs(2, 4), std::invalid_argument);
}

TEST(Audit, GenusTwoAndThreeHaveNoViolations)
{
    for (auto [g, maxCurves] : {std::pair{2, std::size_t(3)}, std::pair{3, std::size_t(6)}})
    {
        const auto r = verifyInequalities(g, maxCurves);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.excluded, 0u);
        EXPECT_EQ(r.ledgers.size(), enumerateGraphs(g, maxCurves).size());
        std::size_t equality = 0;
        for (const auto& l : r.ledgers)
        {
            EXPECT_TRUE(l.bpdpOk());
            EXPECT_TRUE(l.torelliBudgetOk());
            EXPECT_EQ(l.johnsonBudget(), 2 * g - 3);
            EXPECT_EQ(l.components - 1, l.curves - l.span);
            EXPECT_EQ(static_cast<long>(l.span), g - l.genusSum);
            EXPECT_EQ(l.degreeSum, 2 * static_cast<long>(l.curves));
            equality += l.bpdpEquality();
        }
        EXPECT_EQ(equality, r.equalityCases);
    }
}

TEST(Audit, CorruptTypeIsFlaggedAndExcluded)
{
    // Two genus-1 components joined by a single separating curve
    const MulticurveType bridge{2, {{"v1", 1}, {"v2", 1}}, {{"s", "v1", "v2"}}};
    const auto r = auditTypes({fixtures::edgeCell(), bridge});
    EXPECT_EQ(r.typesChecked, 2u);
    EXPECT_EQ(r.excluded, 1u);
    EXPECT_EQ(r.ledgers.size(), 1u);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].check, "nonseparating");

    const auto annulus = auditTypes({fixtures::boundingPairS2()});
    ASSERT_EQ(annulus.violations.size(), 1u);
    EXPECT_EQ(annulus.violations[0].check, "valid");
}

TEST(ComplexDimension, TwoGMinusThree)
{
    EXPECT_EQ(complexDimension(2), 1u);
    EXPECT_EQ(complexDimension(3), 3u);
    EXPECT_EQ(complexDimension(4), 5u);
}

TEST(ComplexDimension, UpperBoundOnAllTypes)
{
    for (int g : {2, 3})
    {
        std::size_t best = 0;
        for (const auto& m : enumerateTypes(g, static_cast<std::size_t>(3 * g - 3)))
            if (admissibleForSum(m))
                best = std::max(best, stats(m).cellDimension);
        EXPECT_EQ(best, static_cast<std::size_t>(2 * g - 3));
    }
}

TEST(AuditCsv, HeaderAndRows)
{
    EXPECT_EQ(auditCsvHeader(), "g,|M|,D,N,P,Z,C,BP,B,torelli_bound,johnson_bound,bpdp_ok,torelli_budget_ok,johnson_budget_ok");
    EXPECT_EQ(auditCsvRow(ledger(fixtures::edgeCell())), "2,3,2,2,0,2,3,0,1,0,0,true,true,true");
    EXPECT_EQ(auditCsvRow(ledger(fixtures::boundingPairS3())), "3,2,1,2,2,0,1,1,1,3,2,true,true,true");
    const auto a = auditCsv(verifyInequalities(3, 6));
    EXPECT_EQ(a, auditCsv(verifyInequalities(3, 6)));
    EXPECT_EQ(static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n')), enumerateGraphs(3, 6).size() + 1);
}

TEST(Sweep, UnboundedAdmissibleTypesExist)
{
    // A genus-1 component whose two boundary curves both point outward gives
    // [e] + [f] = 0, so positive representatives are unbounded, yet every
    // curve still lies in a basic cycle.
    const auto s = admissibleTypes(3, 6);
    EXPECT_GT(s.unbounded, 0u);
    EXPECT_EQ(s.types.size() + s.notAdmissible, s.orientations);
    for (const auto& p : s.presentations)
    {
        const auto cell = cellPolytope(p);
        EXPECT_EQ(cell.bounded, !hasNonnegativeRelation(p.relations));
    }
}
