/**
 * Exact integer and rational linear algebra: ranks, null spaces, Smith
 * normal forms and integer lattice membership.
 *
 * Everything here works over arbitrary-precision integers and canonical
 * rationals; nothing ever touches floating point.
 */

#ifndef CYCLECX_EXACTLINALG_HPP
#define CYCLECX_EXACTLINALG_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <boost/multiprecision/gmp.hpp>

namespace cyclecx {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/**
 * Thrown when matrix shapes do not match an operation.
 */
class DimensionMismatch : public std::invalid_argument
{
    public:
        explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Dense row-major matrix with value semantics.
 */
template <typename T>
class Matrix
{
    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<T> data_;

    public:
        Matrix() = default;

        Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

        Matrix(std::initializer_list<std::initializer_list<T>> rows)
        {
            rows_ = rows.size();
            cols_ = rows_ == 0 ? 0 : rows.begin()->size();
            data_.reserve(rows_ * cols_);
            for (const auto& row : rows)
            {
                if (row.size() != cols_)
                    throw DimensionMismatch("ragged matrix literal");
                data_.insert(data_.end(), row.begin(), row.end());
            }
        }

        static Matrix fromRows(const std::vector<std::vector<T>>& rows, std::size_t cols)
        {
            Matrix m(rows.size(), cols);
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                if (rows[i].size() != cols)
                    throw DimensionMismatch("row " + std::to_string(i) + " has wrong length");
                std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
            }
            return m;
        }

        static Matrix identity(std::size_t n)
        {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = 1;
            return m;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

        std::vector<T> rowVector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

        std::vector<T> colVector(std::size_t j) const
        {
            std::vector<T> v(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                v[i] = (*this)(i, j);
            return v;
        }

        Matrix transpose() const
        {
            Matrix t(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    t(j, i) = (*this)(i, j);
            return t;
        }

        void swapRows(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
        }

        void swapCols(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
        }

        /** row[target] += factor * row[source] */
        void addRowMultiple(std::size_t target, std::size_t source, const T& factor)
        {
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(target, j) += factor * (*this)(source, j);
        }

        /** col[target] += factor * col[source] */
        void addColMultiple(std::size_t target, std::size_t source, const T& factor)
        {
            for (std::size_t i = 0; i < rows_; ++i)
                (*this)(i, target) += factor * (*this)(i, source);
        }

        bool isZero() const
        {
            return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
        }

        friend bool operator==(const Matrix& a, const Matrix& b)
        {
            return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
        }

        friend Matrix operator*(const Matrix& a, const Matrix& b)
        {
            if (a.cols_ != b.rows_)
                throw DimensionMismatch("matrix product shape mismatch");
            Matrix c(a.rows_, b.cols_);
            for (std::size_t i = 0; i < a.rows_; ++i)
                for (std::size_t k = 0; k < a.cols_; ++k)
                {
                    if (a(i, k) == 0)
                        continue;
                    for (std::size_t j = 0; j < b.cols_; ++j)
                        c(i, j) += a(i, k) * b(k, j);
                }
            return c;
        }

        std::string toString() const
        {
            std::ostringstream os;
            os << "[";
            for (std::size_t i = 0; i < rows_; ++i)
            {
                os << (i ? ", [" : "[");
                for (std::size_t j = 0; j < cols_; ++j)
                    os << (j ? ", " : "") << (*this)(i, j);
                os << "]";
            }
            os << "]";
            return os.str();
        }
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix toRational(const IntMatrix& m)
{
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

inline RationalVector toRational(std::span<const Integer> v)
{
    return RationalVector(v.begin(), v.end());
}

/**
 * Matrix-vector product over any exact scalar type.
 */
template <typename T, typename U>
RationalVector apply(const Matrix<T>& m, std::span<const U> v)
{
    if (m.cols() != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    RationalVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j] != 0)
                out[i] += Rational(m(i, j)) * Rational(v[j]);
    return out;
}

inline bool isZeroVector(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/**
 * Reduced row echelon form together with the pivot columns.
 */
struct RowEchelon
{
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

inline RowEchelon rowEchelon(RationalMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c)
    {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swapRows(p, r);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
        {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = -m(i, c);
            m.addRowMultiple(i, r, f);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rationalRank(const Matrix<T>& m)
{
    if constexpr (std::is_same_v<T, Rational>)
        return rowEchelon(m).pivots.size();
    else
        return rowEchelon(toRational(m)).pivots.size();
}

/**
 * Basis of the rational null space {v : m v = 0}, one vector per free
 * column, each scaled to a primitive integer vector with a positive
 * leading entry.
 */
template <typename T>
std::vector<RationalVector> kernelBasis(const Matrix<T>& m)
{
    RowEchelon e;
    if constexpr (std::is_same_v<T, Rational>)
        e = rowEchelon(m);
    else
        e = rowEchelon(toRational(m));
    const std::size_t n = m.cols();
    std::vector<bool> isPivot(n, false);
    for (auto p : e.pivots)
        isPivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < n; ++free)
    {
        if (isPivot[free])
            continue;
        RationalVector v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);

        // Clear denominators, then divide out the content
        Integer l = 1;
        for (const auto& x : v)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        Integer g = 0;
        for (auto& x : v)
        {
            x *= l;
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
        }
        for (auto& x : v)
            x /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * Some solution of m y = b, or nothing when the system is inconsistent.
 * Free variables are set to zero.
 */
template <typename T>
std::optional<RationalVector> solve(const Matrix<T>& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = Rational(m(i, j));
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = rowEchelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    RationalVector y(m.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        y[e.pivots[r]] = e.reduced(r, m.cols());
    return y;
}

/**
 * True if v lies in the rational span of the rows of m.
 */
template <typename T, typename U>
bool inRowSpan(const Matrix<T>& m, std::span<const U> v)
{
    if (v.size() != m.cols())
        throw DimensionMismatch("vector length does not match column count");
    if (std::all_of(v.begin(), v.end(), [](const U& x) { return x == 0; }))
        return true;
    RationalMatrix ext(m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            ext(i, j) = Rational(m(i, j));
    for (std::size_t j = 0; j < m.cols(); ++j)
        ext(m.rows(), j) = Rational(v[j]);
    return rationalRank(ext) == rationalRank(m);
}

/**
 * Determinant of a square integer matrix by fraction-free (Bareiss)
 * elimination.
 */
inline Integer determinant(IntMatrix m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swapRows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/**
 * Smith normal form `left * m * right = diagonal`, with `left` and `right`
 * unimodular. `factors` lists the min(rows, cols) diagonal entries: the
 * nonzero ones come first, are positive, and each divides the next.
 */
struct SmithForm
{
    IntMatrix left;
    IntMatrix diagonal;
    IntMatrix right;
    IntVector factors;

    std::size_t rank() const
    {
        return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const Integer& d) { return d != 0; }));
    }
};

inline SmithForm smithNormalForm(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t)
    {
        while (true)
        {
            // Move the smallest nonzero entry of the trailing block to (t, t)
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
                        best = {i, j};
            if (!best)
                break;
            d.swapRows(t, best->first);
            left.swapRows(t, best->first);
            d.swapCols(t, best->second);
            right.swapCols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (d(i, t) == 0)
                    continue;
                const Integer q = d(i, t) / d(t, t);
                d.addRowMultiple(i, t, -q);
                left.addRowMultiple(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (d(t, j) == 0)
                    continue;
                const Integer q = d(t, j) / d(t, t);
                d.addColMultiple(j, t, -q);
                right.addColMultiple(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold any offending row into row t and retry
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < rows && !offending; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0)
                    {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            d.addRowMultiple(t, *offending, Integer(1));
            left.addRowMultiple(t, *offending, Integer(1));
        }
        if (d(t, t) < 0)
        {
            for (std::size_t j = 0; j < cols; ++j)
                d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < rows; ++j)
                left(t, j) = -left(t, j);
        }
    }

    IntVector factors(steps);
    for (std::size_t t = 0; t < steps; ++t)
        factors[t] = d(t, t);
    return {std::move(left), std::move(d), std::move(right), std::move(factors)};
}

/**
 * True iff v is an integer combination of the generators.
 */
inline bool latticeMember(std::span<const Integer> v, const std::vector<IntVector>& generators)
{
    const std::size_t n = v.size();
    if (generators.empty())
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    IntMatrix g(n, generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k)
    {
        if (generators[k].size() != n)
            throw DimensionMismatch("generator " + std::to_string(k) + " has wrong length");
        for (std::size_t i = 0; i < n; ++i)
            g(i, k) = generators[k][i];
    }
    // g y = v  <=>  D (right^-1 y) = left v
    SmithForm snf = smithNormalForm(g);
    IntVector z(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            z[i] += snf.left(i, j) * v[j];
    for (std::size_t i = 0; i < n; ++i)
    {
        const Integer d = i < snf.factors.size() ? snf.factors[i] : Integer(0);
        if (d == 0 ? z[i] != 0 : z[i] % d != 0)
            return false;
    }
    return true;
}

/**
 * Rows of m as integer vectors; convenient as lattice generators.
 */
inline std::vector<IntVector> rowsOf(const IntMatrix& m)
{
    std::vector<IntVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.rowVector(i));
    return rows;
}

inline std::string formatRational(const Rational& q)
{
    return q.str();
}

/**
 * Parse "p/q", "p" or "-p/q" into a canonical rational.
 */
inline Rational parseRational(const std::string& text)
{
    auto valid = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid(num) || !valid(den))
        throw std::invalid_argument("not a rational: \"" + text + "\"");
    const Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: \"" + text + "\"");
    return Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
}

}   // namespace cyclecx

#endif
