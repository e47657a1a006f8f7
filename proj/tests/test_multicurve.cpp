/**
 * Tests for multicurve types: validation, subsurface relations, statistics.
 */
#include <gtest/gtest.h>
#include "cyclecx/multicurve.hpp"
#include "fixtures.hpp"

using namespace cyclecx;

TEST(Validate, ExampleTypesPass)
{
    EXPECT_TRUE(validate(fixtures::edgeCell()).ok());
    EXPECT_TRUE(validate(fixtures::boundingPairS3()).ok());
    EXPECT_TRUE(validate(fixtures::threeHomologous()).ok());
    EXPECT_TRUE(validate(fixtures::boundingPairsS6()).ok());
    EXPECT_TRUE(validate(fixtures::borrowingDimensionS3()).ok());
    EXPECT_TRUE(validate(fixtures::singleLoop()).ok());
}

TEST(Validate, AnnulusComponentFails)
{
    const auto report = validate(fixtures::boundingPairS2());
    EXPECT_FALSE(report.ok());
    ASSERT_NE(report.find("component_euler"), nullptr);
    EXPECT_FALSE(report.find("component_euler")->passed);
    EXPECT_TRUE(report.find("total_euler")->passed);
}

TEST(Validate, EulerTotalMismatch)
{
    auto m = fixtures::edgeCell();
    m.surfaceGenus = 3;
    const auto report = validate(m);
    EXPECT_FALSE(report.find("total_euler")->passed);
    EXPECT_NE(report.summary().find("2-2g"), std::string::npos);
}

TEST(Validate, BridgeIsSeparating)
{
    // Two genus-1 components joined by one curve: a separating curve in genus 2.
    MulticurveType m{2, {{"v1", 1}, {"v2", 1}}, {{"s", "v1", "v2"}}};
    const auto strict = validate(m);
    EXPECT_FALSE(strict.find("nonseparating")->passed);
    EXPECT_TRUE(validate(m, CurveMode::allowSeparating).ok());
    EXPECT_THROW(relationMatrix(m), InvalidMulticurve);
    // A bridge is null-homologous
    const HomologyQuotient hq(relationMatrix(m, CurveMode::allowSeparating));
    EXPECT_TRUE(isZeroVector(hq.classOfCurve(0)));
}

TEST(Validate, UnknownComponentAndDisconnected)
{
    MulticurveType bad{2, {{"v1", 0}}, {{"a", "v1", "nowhere"}}};
    EXPECT_FALSE(validate(bad).find("ids")->passed);
    MulticurveType split{3, {{"v1", 1}, {"v2", 1}}, {{"a", "v1", "v1"}, {"b", "v2", "v2"}}};
    EXPECT_FALSE(validate(split).find("connected")->passed);
}

TEST(RelationMatrix, Examples)
{
    EXPECT_EQ(relationMatrix(fixtures::edgeCell()), (IntMatrix{{1, -1, -1}, {-1, 1, 1}}));
    EXPECT_EQ(relationMatrix(fixtures::boundingPairS3()), (IntMatrix{{-1, 1}, {1, -1}}));
    EXPECT_EQ(relationMatrix(fixtures::singleLoop()), (IntMatrix{{0}}));
}

TEST(RelationMatrix, RowsSumToZero)
{
    for (const auto& m : {fixtures::edgeCell(), fixtures::boundingPairsS6(), fixtures::borrowingDimensionS3()})
    {
        const auto r = relationMatrix(m);
        for (std::size_t j = 0; j < r.cols(); ++j)
        {
            Integer s = 0;
            for (std::size_t i = 0; i < r.rows(); ++i)
                s += r(i, j);
            EXPECT_EQ(s, 0);
        }
    }
}

TEST(Stats, EdgeCell)
{
    const auto s = stats(fixtures::edgeCell());
    EXPECT_EQ(s.curves, 3u);
    EXPECT_EQ(s.span, 2u);
    EXPECT_EQ(s.components, 2u);
    EXPECT_EQ(s.positiveGenus, 0u);
    EXPECT_EQ(s.genusZero, 2u);
    EXPECT_EQ(s.classes, 3u);
    EXPECT_EQ(s.boundingPairs, 0u);
    EXPECT_EQ(s.cellDimension, 1u);
}

TEST(Stats, PentagonPresentation)
{
    const auto s = stats(fixtures::pentagon());
    EXPECT_EQ(s.curves, 6u);
    EXPECT_EQ(s.span, 4u);
    EXPECT_EQ(s.classes, 6u);
    EXPECT_EQ(s.boundingPairs, 0u);
    EXPECT_EQ(s.cellDimension, 2u);
    EXPECT_FALSE(s.components.has_value());
    EXPECT_FALSE(s.positiveGenus.has_value());
}

TEST(Stats, NestedBoundingPairsInGenusSix)
{
    const auto s = stats(fixtures::boundingPairsS6());
    EXPECT_EQ(s.boundingPairs, 4u);
    EXPECT_EQ(s.span, 4u);
    EXPECT_EQ(s.positiveGenus, 2u);
    EXPECT_EQ(s.classes, 4u);
    EXPECT_EQ(*s.components - 1, s.cellDimension);
}

TEST(Stats, BoundingPairAndHomologousRing)
{
    const auto bp = stats(fixtures::boundingPairS3());
    EXPECT_EQ(bp.boundingPairs, 1u);
    EXPECT_EQ(bp.span, 1u);
    EXPECT_EQ(bp.positiveGenus, 2u);
    const auto ring = stats(fixtures::threeHomologous());
    EXPECT_EQ(ring.classes, 1u);
    EXPECT_EQ(ring.boundingPairs, 2u);
    EXPECT_EQ(ring.cellDimension, 2u);
}

TEST(Stats, OrientationDoesNotChangeStatistics)
{
    auto m = fixtures::boundingPairsS6();
    const auto before = stats(m);
    std::swap(m.curves[1].tail, m.curves[1].head);
    std::swap(m.curves[5].tail, m.curves[5].head);
    const auto after = stats(m);
    EXPECT_EQ(before.span, after.span);
    EXPECT_EQ(before.boundingPairs, after.boundingPairs);
    EXPECT_EQ(before.positiveGenus, after.positiveGenus);
}

TEST(HomologyQuotient, HomologousClassesPartition)
{
    const HomologyQuotient hq(relationMatrix(fixtures::boundingPairsS6()));
    const auto classes = hq.homologyClasses();
    // a1 a2 a3 | b1 b2 | c1 c2 | d
    ASSERT_EQ(classes.size(), 4u);
    EXPECT_EQ(classes[0], (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(classes[1], (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(classes[2], (std::vector<std::size_t>{5, 6}));
    EXPECT_EQ(classes[3], (std::vector<std::size_t>{7}));
    // Symmetric and transitive on every triple
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
        {
            EXPECT_EQ(hq.homologousUpToSign(i, j), hq.homologousUpToSign(j, i));
            for (std::size_t k = 0; k < 8; ++k)
                if (hq.homologousUpToSign(i, j) && hq.homologousUpToSign(j, k))
                {
                    EXPECT_TRUE(hq.homologousUpToSign(i, k));
                }
        }
}

TEST(Presentation, ReferenceChecks)
{
    // Signed references are allowed: a - b represents [c]
    EXPECT_NO_THROW(presentation(fixtures::edgeCell(), IntVector{1, -1, 0}));
    EXPECT_THROW(presentation(fixtures::edgeCell(), IntVector{1, 0}), InvalidReference);
    EXPECT_THROW(presentation(fixtures::edgeCell(), std::map<std::string, Integer>{{"z", 1}}), InvalidMulticurve);
    const auto p = presentation(fixtures::edgeCell(), std::map<std::string, Integer>{{"a", 1}});
    EXPECT_EQ(p.reference, (IntVector{1, 0, 0}));
}
