/**
 * Genus 2: the symplectic lattice H_1(S_2; Z), splittings compatible with
 * x = [a], and the quotient trees of isotropic planes through x.
 *
 * Coordinates are taken in the symplectic basis ([a], [a'], [b], [b']) with
 * J(a, a') = J(b, b') = 1 and all other basis pairings zero.
 */

#ifndef CYCLECX_GENUS2_HPP
#define CYCLECX_GENUS2_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>
#include "exactlinalg.hpp"

namespace cyclecx {

using SymplecticVector = std::array<Integer, 4>;
using PlaneVector = std::array<Integer, 2>;

/** The algebraic intersection pairing J. */
inline Integer pairing(const SymplecticVector& u, const SymplecticVector& v)
{
    return u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2];
}

inline SymplecticVector basisVector(std::size_t i)
{
    SymplecticVector v{0, 0, 0, 0};
    v.at(i) = 1;
    return v;
}

inline std::string toString(const SymplecticVector& v)
{
    return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str() + ")";
}

inline std::string toString(const PlaneVector& v)
{
    return "(" + v[0].str() + "," + v[1].str() + ")";
}

inline Integer det2(const PlaneVector& u, const PlaneVector& v)
{
    return u[0] * v[1] - u[1] * v[0];
}

/**
 * Two J-orthogonal rank-2 sublattices, each given by a basis. `index`
 * labels the coset ([a'] + k[b]) + <[a]> the splitting comes from.
 */
struct Splitting
{
    Integer index;
    std::array<SymplecticVector, 2> first;      // contains x = [a]
    std::array<SymplecticVector, 2> second;
};

struct SplittingCheck
{
    bool orthogonal = false;
    bool firstUnimodular = false;
    bool secondUnimodular = false;
    bool directSum = false;     // V1 + V2 is the whole lattice
    bool containsX = false;

    bool ok() const { return orthogonal && firstUnimodular && secondUnimodular && directSum && containsX; }
};

inline SplittingCheck checkSplitting(const Splitting& s)
{
    SplittingCheck c;
    c.orthogonal = true;
    for (const auto& u : s.first)
        for (const auto& v : s.second)
            c.orthogonal = c.orthogonal && pairing(u, v) == 0;
    c.firstUnimodular = abs(pairing(s.first[0], s.first[1])) == 1;
    c.secondUnimodular = abs(pairing(s.second[0], s.second[1])) == 1;
    IntMatrix m(4, 4);
    const std::array<const SymplecticVector*, 4> cols{&s.first[0], &s.first[1], &s.second[0], &s.second[1]};
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i)
            m(i, j) = (*cols[j])[i];
    c.directSum = abs(determinant(m)) == 1;
    const IntVector x{1, 0, 0, 0};
    c.containsX = latticeMember(x, {IntVector(s.first[0].begin(), s.first[0].end()), IntVector(s.first[1].begin(), s.first[1].end())});
    return c;
}

/**
 * V1 = <[a], [a'] + k[b]>, V2 = <[b], [b'] + k[a]>. Throws std::logic_error
 * if any splitting invariant fails.
 */
inline Splitting splittingFromIndex(const Integer& k)
{
    Splitting s;
    s.index = k;
    s.first = {basisVector(0), SymplecticVector{0, 1, k, 0}};
    s.second = {basisVector(2), SymplecticVector{k, 0, 0, 1}};
    if (!checkSplitting(s).ok())
        throw std::logic_error("splitting invariants fail for index " + k.str());
    return s;
}

/**
 * Determinant of the coset representatives [a'] + k[b] and [a'] + k'[b] in
 * the <[a'], [b]> plane; two splittings are adjacent iff it is +-1.
 */
inline Integer adjacencyCertificate(const Integer& k, const Integer& kk)
{
    return det2({1, k}, {1, kk});
}

inline bool adjacentSplittings(const Integer& k, const Integer& kk)
{
    return abs(adjacencyCertificate(k, kk)) == 1;
}

struct SplittingLine
{
    struct Edge
    {
        Integer from;
        Integer to;
        Integer certificate;
    };

    std::vector<Integer> indices;
    std::vector<Edge> edges;
};

/**
 * Splittings with index in [-K, K] and the adjacency between them.
 */
inline SplittingLine splittingLine(const Integer& bound)
{
    if (bound < 0)
        throw std::invalid_argument("index bound must be nonnegative");
    SplittingLine line;
    for (Integer k = -bound; k <= bound; ++k)
        line.indices.push_back(k);
    for (std::size_t i = 0; i < line.indices.size(); ++i)
        for (std::size_t j = i + 1; j < line.indices.size(); ++j)
            if (adjacentSplittings(line.indices[i], line.indices[j]))
                line.edges.push_back({line.indices[i], line.indices[j], adjacencyCertificate(line.indices[i], line.indices[j])});
    return line;
}

/**
 * A vertex of a plane quotient tree: the distinguished vertex, or an
 * unordered basis {A, B} of the plane with positive weights p, q and
 * pA + qB = x. Entries are ordered so that A < B lexicographically.
 */
struct QuotientTreeNode
{
    enum class Kind
    {
        distinguished,
        pair
    };

    Kind kind = Kind::distinguished;
    PlaneVector first{0, 0};
    PlaneVector second{0, 0};
    Integer firstWeight = 0;
    Integer secondWeight = 0;

    Integer weight() const { return kind == Kind::distinguished ? Integer(1) : firstWeight + secondWeight; }

    static QuotientTreeNode pair(PlaneVector a, Integer p, PlaneVector b, Integer q)
    {
        if (b < a)
        {
            std::swap(a, b);
            std::swap(p, q);
        }
        return {Kind::pair, a, b, p, q};
    }

    auto key() const { return std::tie(kind, first, second, firstWeight, secondWeight); }
    friend bool operator==(const QuotientTreeNode& l, const QuotientTreeNode& r) { return l.key() == r.key(); }
    friend bool operator<(const QuotientTreeNode& l, const QuotientTreeNode& r)
    {
        const Integer lw = l.weight(), rw = r.weight();
        if (lw != rw)
            return lw < rw;
        return l.key() < r.key();
    }
};

/**
 * Tree of one isotropic plane, truncated by weight and coordinate bounds.
 * Node 0 is the distinguished vertex; the rest are sorted by weight, then
 * coordinates. Edges join each pair node to its parent.
 */
struct PlaneTree
{
    PlaneVector x;
    Integer weightBound;
    Integer coordBound;
    std::vector<QuotientTreeNode> nodes;
    std::vector<std::size_t> parent;    // parent[0] == 0
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t rootDegree() const
    {
        return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.first == 0; }));
    }
};

namespace detail {

/** Unimodular T with T x = (1, 0). */
inline std::array<PlaneVector, 2> adaptedBasis(const PlaneVector& x)
{
    // Extended Euclid for u x0 + v x1 = 1
    Integer r0 = x[0], r1 = x[1], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0)
    {
        const Integer q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, Integer(r0 - q * r1));
        std::tie(s0, s1) = std::make_tuple(s1, Integer(s0 - q * s1));
        std::tie(t0, t1) = std::make_tuple(t1, Integer(t0 - q * t1));
    }
    if (r0 < 0)
    {
        s0 = -s0;
        t0 = -t0;
    }
    return {PlaneVector{s0, t0}, PlaneVector{-x[1], x[0]}};
}

inline PlaneVector applyBasis(const std::array<PlaneVector, 2>& t, const PlaneVector& v)
{
    return {t[0][0] * v[0] + t[0][1] * v[1], t[1][0] * v[0] + t[1][1] * v[1]};
}

/** Inverse of a determinant-1 matrix applied to v. */
inline PlaneVector applyInverse(const std::array<PlaneVector, 2>& t, const PlaneVector& v)
{
    return {t[1][1] * v[0] - t[0][1] * v[1], -t[1][0] * v[0] + t[0][0] * v[1]};
}

inline bool withinBound(const std::array<PlaneVector, 2>& t, const PlaneVector& v, const Integer& bound)
{
    const PlaneVector w = applyBasis(t, v);
    return abs(w[0]) <= bound && abs(w[1]) <= bound;
}

}   // namespace detail

/**
 * The plane tree for a primitive x, with every pair node of weight at most
 * W whose classes have coordinates at most C in absolute value. For x other
 * than (1, 0), coordinates are measured in a basis in which x = (1, 0).
 * Descent to the parent never increases those coordinates, so the tree is
 * closed under taking parents.
 */
inline PlaneTree planeQuotientTree(const PlaneVector& x, const Integer& weightBound, const Integer& coordBound)
{
    if (gcd(x[0], x[1]) != 1)
        throw std::invalid_argument("x = " + toString(x) + " is not primitive");
    if (weightBound < 1 || coordBound < 1)
        throw std::invalid_argument("weight and coordinate bounds must be at least 1");
    const auto t = detail::adaptedBasis(x);
    auto fits = [&](const PlaneVector& v) { return detail::withinBound(t, v, coordBound); };

    std::vector<QuotientTreeNode> found{QuotientTreeNode{}};
    std::vector<std::size_t> parentOf{0};
    std::deque<std::size_t> queue;
    if (weightBound >= 2)
        // Weight 2: A + B = x with det(A, B) = det(A, x) = +-1, so A = (a, 1) in adapted coordinates
        for (Integer a = 1 - coordBound; a <= coordBound; ++a)
        {
            const PlaneVector first = detail::applyInverse(t, {a, 1});
            const PlaneVector second = {x[0] - first[0], x[1] - first[1]};
            if (!fits(first) || !fits(second))
                continue;
            found.push_back(QuotientTreeNode::pair(first, 1, second, 1));
            parentOf.push_back(0);
            queue.push_back(found.size() - 1);
        }
    while (!queue.empty())
    {
        const std::size_t at = queue.front();
        queue.pop_front();
        const QuotientTreeNode node = found[at];
        if (node.weight() + 1 > weightBound)
            continue;
        // Children {P, Q - P} with weights (u + v, v) and {Q, P - Q} with weights (u + v, u)
        const auto& p = node.first;
        const auto& q = node.second;
        const Integer w = node.weight();
        const std::array<std::pair<PlaneVector, PlaneVector>, 2> bases{
            std::pair{p, PlaneVector{q[0] - p[0], q[1] - p[1]}}, std::pair{q, PlaneVector{p[0] - q[0], p[1] - q[1]}}};
        const std::array<Integer, 2> keptWeight{node.secondWeight, node.firstWeight};
        for (std::size_t c = 0; c < 2; ++c)
        {
            const auto& [kept, diff] = bases[c];
            if (w + keptWeight[c] > weightBound || !fits(diff))
                continue;
            found.push_back(QuotientTreeNode::pair(kept, w, diff, keptWeight[c]));
            parentOf.push_back(at);
            queue.push_back(found.size() - 1);
        }
    }

    // Sort pair nodes canonically and renumber
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](std::size_t i, std::size_t j) { return found[i] < found[j]; });
    std::vector<std::size_t> position(found.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;

    PlaneTree tree{x, weightBound, coordBound, {}, {}, {}};
    for (auto i : order)
    {
        tree.nodes.push_back(found[i]);
        tree.parent.push_back(position[parentOf[i]]);
    }
    for (std::size_t i = 1; i < tree.nodes.size(); ++i)
        tree.edges.emplace_back(tree.parent[i], i);
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

/**
 * Parent of a pair node by the descent rule, or the distinguished vertex for
 * weight 2. Computed from the node alone.
 */
inline QuotientTreeNode descend(const QuotientTreeNode& node)
{
    if (node.kind == QuotientTreeNode::Kind::distinguished)
        throw std::invalid_argument("the distinguished vertex has no parent");
    const auto& a = node.first;
    const auto& b = node.second;
    const Integer& p = node.firstWeight;
    const Integer& q = node.secondWeight;
    if (p == 1 && q == 1)
        return QuotientTreeNode{};
    const PlaneVector sum{a[0] + b[0], a[1] + b[1]};
    if (p > q)
        return QuotientTreeNode::pair(a, p - q, sum, q);
    return QuotientTreeNode::pair(b, q - p, sum, p);
}

inline bool isIsotropic(const SymplecticVector& u, const SymplecticVector& v)
{
    return pairing(u, v) == 0;
}

/**
 * Isotropic planes <[a], v> with v = s[b] + t[b'] primitive, glued along
 * their distinguished vertices. Within each plane, coordinates are taken in
 * the basis ([a], v), where x = (1, 0).
 */
struct FullQuotient
{
    Integer planeBound;
    Integer weightBound;
    Integer coordBound;
    std::vector<SymplecticVector> planes;   // the second generator v of each plane
    std::vector<PlaneTree> trees;

    std::size_t vertexCount() const
    {
        std::size_t n = 1;
        for (const auto& t : trees)
            n += t.nodes.size() - 1;
        return n;
    }

    std::size_t edgeCount() const
    {
        std::size_t n = 0;
        for (const auto& t : trees)
            n += t.edges.size();
        return n;
    }

    /** A plane vector (s, t) of plane i as a lattice vector s[a] + t v. */
    SymplecticVector lift(std::size_t plane, const PlaneVector& c) const
    {
        const auto& v = planes.at(plane);
        return {c[0] + c[1] * v[0], c[1] * v[1], c[1] * v[2], c[1] * v[3]};
    }
};

inline FullQuotient assembleFullQuotient(const Integer& planeBound, const Integer& weightBound, const Integer& coordBound)
{
    if (planeBound < 1)
        throw std::invalid_argument("plane bound must be at least 1");
    FullQuotient q{planeBound, weightBound, coordBound, {}, {}};
    const SymplecticVector x = basisVector(0);
    for (Integer s = 0; s <= planeBound; ++s)
        for (Integer t = -planeBound; t <= planeBound; ++t)
        {
            if (gcd(s, t) != 1 || (s == 0 && t < 0))
                continue;
            const SymplecticVector v{0, 0, s, t};
            if (!isIsotropic(x, v))
                throw std::logic_error("plane through " + toString(v) + " is not isotropic");
            q.planes.push_back(v);
        }
    const PlaneTree tree = planeQuotientTree({1, 0}, weightBound, coordBound);
    q.trees.assign(q.planes.size(), tree);
    return q;
}

namespace detail {

inline std::string nodeLabel(const QuotientTreeNode& n)
{
    if (n.kind == QuotientTreeNode::Kind::distinguished)
        return "x";
    return n.weight().str() + "\\n" + n.firstWeight.str() + toString(n.first) + " + " + n.secondWeight.str() +
           toString(n.second);
}

/** Classes up to sign, normalized so the first nonzero coordinate is positive. */
inline PlaneVector unsign(PlaneVector v)
{
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0))
        return {-v[0], -v[1]};
    return v;
}

inline void fareyOverlay(std::string& out, const std::vector<PlaneVector>& classes, const std::string& prefix)
{
    std::vector<PlaneVector> unique;
    for (const auto& c : classes)
        unique.push_back(unsign(c));
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (std::size_t i = 0; i < unique.size(); ++i)
        out += "  " + prefix + "c" + std::to_string(i) + " [label=\"" + toString(unique[i]) +
               "\", shape=plaintext, fontcolor=gray];\n";
    for (std::size_t i = 0; i < unique.size(); ++i)
        for (std::size_t j = i + 1; j < unique.size(); ++j)
            if (abs(det2(unique[i], unique[j])) == 1)
                out += "  " + prefix + "c" + std::to_string(i) + " -- " + prefix + "c" + std::to_string(j) +
                       " [style=dotted, color=gray];\n";
}

inline std::vector<PlaneVector> treeClasses(const PlaneTree& t)
{
    std::vector<PlaneVector> out;
    for (const auto& n : t.nodes)
        if (n.kind == QuotientTreeNode::Kind::pair)
        {
            out.push_back(n.first);
            out.push_back(n.second);
        }
    return out;
}

}   // namespace detail

/**
 * DOT rendering of a plane tree. With `farey`, the Farey edges among the
 * classes that occur in pair nodes are drawn lightly alongside.
 */
inline std::string toDot(const PlaneTree& t, bool farey = false)
{
    std::string out = "graph quotient {\n";
    out += "  label=\"x=" + toString(t.x) + " W=" + t.weightBound.str() + " C=" + t.coordBound.str() + "\";\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + detail::nodeLabel(t.nodes[i]) + "\"];\n";
    for (const auto& [a, b] : t.edges)
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
    if (farey)
        detail::fareyOverlay(out, detail::treeClasses(t), "");
    out += "}\n";
    return out;
}

inline std::string toDot(const FullQuotient& q, bool farey = false)
{
    std::string out = "graph quotient {\n";
    out += "  label=\"planes=" + q.planeBound.str() + " W=" + q.weightBound.str() + " C=" + q.coordBound.str() + "\";\n";
    out += "  x [label=\"x\"];\n";
    for (std::size_t p = 0; p < q.planes.size(); ++p)
    {
        const std::string prefix = "p" + std::to_string(p) + "_";
        out += "  subgraph cluster_" + std::to_string(p) + " {\n";
        out += "    label=\"<" + toString(basisVector(0)) + "," + toString(q.planes[p]) + ">\";\n";
        const auto& t = q.trees[p];
        for (std::size_t i = 1; i < t.nodes.size(); ++i)
            out += "    " + prefix + "n" + std::to_string(i) + " [label=\"" + detail::nodeLabel(t.nodes[i]) + "\"];\n";
        out += "  }\n";
        for (const auto& [a, b] : t.edges)
            out += "  " + (a == 0 ? std::string("x") : prefix + "n" + std::to_string(a)) + " -- " + prefix + "n" +
                   std::to_string(b) + ";\n";
        if (farey)
            detail::fareyOverlay(out, detail::treeClasses(t), prefix);
    }
    out += "}\n";
    return out;
}

inline std::string toDot(const SplittingLine& line)
{
    std::string out = "graph splittings {\n";
    for (const auto& k : line.indices)
        out += "  \"" + k.str() + "\";\n";
    for (const auto& e : line.edges)
        out += "  \"" + e.from.str() + "\" -- \"" + e.to.str() + "\" [label=\"det=" + e.certificate.str() + "\"];\n";
    out += "}\n";
    return out;
}

}   // namespace cyclecx

#endif
