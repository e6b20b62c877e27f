#include "pathhom/linalg.hpp"

#include "pathhom/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace pathhom {

using detail::abs_value;
using detail::Checked64;
using detail::floor_div;
using detail::is_zero;
using detail::Overflow;

namespace {

std::atomic<std::uint64_t> g_hnf_checked{0};
std::atomic<std::uint64_t> g_snf_checked{0};
std::atomic<std::uint64_t> g_saturation_checked{0};
std::atomic<std::uint64_t> g_failures{0};

template <class T>
BasicMatrix<T> convert(const Matrix& m) {
    BasicMatrix<T> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = detail::convert_to<T>(m(r, c));
    return out;
}

template <class T>
Matrix widen(const BasicMatrix<T>& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = detail::to_integer(m(r, c));
    return out;
}

template <class T>
BasicMatrix<T> multiply(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    BasicMatrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
        }
    return out;
}

// Runs fn<Checked64>() and falls back to fn<Integer>() on overflow.
template <class Fn>
auto run_exact(Fn&& fn) {
    try {
        return fn.template operator()<Checked64>();
    } catch (const Overflow&) {
        return fn.template operator()<Integer>();
    }
}

void record_failure(const char* what) {
    ++g_failures;
    throw Error(ErrorCode::InternalConsistency, std::string("normal form certificate failed: ") + what);
}

// ---------------------------------------------------------------- Hermite

template <class T>
struct HermiteWork {
    BasicMatrix<T> h;
    BasicMatrix<T> u;
    std::vector<std::size_t> pivots;
};

template <class T>
void column_axpy(BasicMatrix<T>& m, std::size_t dst, std::size_t src, const T& q) {
    // col_dst -= q * col_src
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!is_zero(m(r, src))) m(r, dst) -= q * m(r, src);
}

template <class T>
void negate_column(BasicMatrix<T>& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

template <class T>
HermiteWork<T> hermite_impl(BasicMatrix<T> h) {
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();
    auto u = BasicMatrix<T>::identity(cols);
    std::vector<std::size_t> pivots;
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows && k < cols; ++i) {
        // Euclid across row i: repeatedly move the smallest entry to column k
        // and reduce the others by it.
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = k; j < cols; ++j) {
                if (is_zero(h(i, j))) continue;
                if (best == cols || abs_value(h(i, j)) < abs_value(h(i, best))) best = j;
            }
            if (best == cols) break;
            h.swap_cols(k, best);
            u.swap_cols(k, best);
            bool reduced = true;
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (is_zero(h(i, j))) continue;
                T q = floor_div(h(i, j), h(i, k));
                column_axpy(h, j, k, q);
                column_axpy(u, j, k, q);
                if (!is_zero(h(i, j))) reduced = false;
            }
            if (reduced) break;
        }
        if (is_zero(h(i, k))) continue;
        if (h(i, k) < T(0)) {
            negate_column(h, k);
            negate_column(u, k);
        }
        for (std::size_t l = 0; l < k; ++l) {
            T q = floor_div(h(i, l), h(i, k));
            if (is_zero(q)) continue;
            column_axpy(h, l, k, q);
            column_axpy(u, l, k, q);
        }
        pivots.push_back(i);
        ++k;
    }
    return {std::move(h), std::move(u), std::move(pivots)};
}

template <class T>
bool check_hermite(const Matrix& m, const HermiteWork<T>& w) {
    return multiply(convert<T>(m), w.u) == w.h;
}

// ---------------------------------------------------------------- Smith

template <class T>
struct SmithWork {
    BasicMatrix<T> s;
    BasicMatrix<T> left;
    BasicMatrix<T> right;
    std::size_t rank = 0;
};

template <class T>
void row_axpy(BasicMatrix<T>& m, std::size_t dst, std::size_t src, const T& q) {
    // row_dst -= q * row_src
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_zero(m(src, c))) m(dst, c) -= q * m(src, c);
}

template <class T>
SmithWork<T> smith_impl(BasicMatrix<T> s) {
    const std::size_t rows = s.rows();
    const std::size_t cols = s.cols();
    auto left = BasicMatrix<T>::identity(rows);
    auto right = BasicMatrix<T>::identity(cols);
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (is_zero(s(i, j))) continue;
                if (pi == rows || abs_value(s(i, j)) < abs_value(s(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        s.swap_rows(t, pi);
        left.swap_rows(t, pi);
        s.swap_cols(t, pj);
        right.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (is_zero(s(i, t))) continue;
                T q = floor_div(s(i, t), s(t, t));
                row_axpy(s, i, t, q);
                row_axpy(left, i, t, q);
                if (!is_zero(s(i, t))) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (is_zero(s(t, j))) continue;
                T q = floor_div(s(t, j), s(t, t));
                column_axpy(s, j, t, q);
                column_axpy(right, j, t, q);
                if (!is_zero(s(t, j))) dirty = true;
            }
            if (dirty) {
                // A remainder smaller than the pivot survived; make it the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (!is_zero(s(i, t)) && abs_value(s(i, t)) < abs_value(s(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!is_zero(s(t, j)) && abs_value(s(t, j)) < abs_value(s(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                s.swap_rows(t, bi);
                left.swap_rows(t, bi);
                s.swap_cols(t, bj);
                right.swap_cols(t, bj);
                continue;
            }
            // Row and column t are clear; enforce divisibility on the rest.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!is_zero(s(i, j) % s(t, t))) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_axpy(s, t, bad, T(-1));
            row_axpy(left, t, bad, T(-1));
        }
        if (s(t, t) < T(0)) {
            for (std::size_t c = 0; c < cols; ++c) s(t, c) = -s(t, c);
            for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
        }
    }
    return {std::move(s), std::move(left), std::move(right), t};
}

template <class T>
bool check_smith(const Matrix& m, const SmithWork<T>& w) {
    return multiply(multiply(w.left, convert<T>(m)), w.right) == w.s;
}

// ---------------------------------------------------------------- Bareiss

using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

struct Echelon {
    Matrix rows;                     // fraction-free echelon form
    std::vector<std::size_t> pivot_cols;
};

Echelon bareiss(Matrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            if (p == rows || abs_value(a(i, c)) < abs_value(a(p, c))) p = i;
        }
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer aic = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a(r, c) * a(i, j) - aic * a(r, j);
                a(i, j) = v / prev;  // exact by Sylvester's identity
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        pivot_cols.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivot_cols)};
}

std::vector<Integer> primitive(std::vector<Rational> v) {
    Integer den = 1;
    for (const auto& x : v) {
        const Integer d = boost::multiprecision::denominator(x);
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

// ---------------------------------------------------------------- mod p

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce(const Integer& x, u64 p) {
    Integer r = x % p;
    if (r < 0) r += p;
    return static_cast<u64>(r);
}

// Reduced row echelon form over F_p; returns pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::vector<u64>>& a, std::size_t cols, u64 p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const u64 inv = powmod(a[r][c], p - 2, p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const u64 f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<u64>> to_mod_rows(const Matrix& m, u64 p) {
    std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = reduce(m(i, j), p);
    return a;
}

}  // namespace

// ---------------------------------------------------------------- public

Matrix operator*(const Matrix& a, const Matrix& b) {
    return run_exact([&]<class T>() { return widen(multiply(convert<T>(a), convert<T>(b))); });
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

Matrix column_block(const Matrix& m, std::size_t first, std::size_t count) {
    Matrix out(m.rows(), count);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, first + c);
    return out;
}

Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
    }
    return out;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    }
    os << ']';
    return os.str();
}

Matrix HermiteDecomposition::kernel_columns() const {
    return column_block(transform, rank(), transform.cols() - rank());
}

HermiteDecomposition hnf(const Matrix& m) {
    return run_exact([&]<class T>() {
        auto w = hermite_impl(convert<T>(m));
        ++g_hnf_checked;
        if (!check_hermite(m, w)) record_failure("H != M U");
        return HermiteDecomposition{widen(w.h), widen(w.u), std::move(w.pivots)};
    });
}

Matrix integer_kernel(const Matrix& m) {
    if (m.cols() == 0) return Matrix(0, 0);
    const auto first = hnf(m);
    const Matrix raw = first.kernel_columns();
    if (raw.cols() == 0) return Matrix(m.cols(), 0);
    // Re-reduce so the basis is the canonical Hermite basis of the lattice.
    auto canon = hnf(raw);
    if (canon.rank() != raw.cols()) throw Error(ErrorCode::InternalConsistency, "kernel columns are dependent");
    auto basis = column_block(canon.hermite, 0, canon.rank());
    ++g_saturation_checked;
    bool unit_pivots = true;
    for (std::size_t j = 0; j < canon.rank(); ++j) unit_pivots = unit_pivots && basis(canon.pivot_rows[j], j) == 1;
    if (!unit_pivots && !is_saturated(basis)) record_failure("kernel lattice is not saturated");
    return basis;
}

bool is_saturated(const Matrix& basis) {
    const auto s = snf(basis);
    if (s.rank() != basis.cols()) return false;
    for (const auto& f : s.invariant_factors)
        if (f != 1) return false;
    return true;
}

SmithDecomposition snf(const Matrix& m) {
    return run_exact([&]<class T>() {
        auto w = smith_impl(convert<T>(m));
        ++g_snf_checked;
        if (!check_smith(m, w)) record_failure("U M V != S");
        SmithDecomposition out{widen(w.left), widen(w.right), widen(w.s), {}};
        for (std::size_t i = 0; i < w.rank; ++i) out.invariant_factors.push_back(detail::to_integer(w.s(i, i)));
        for (std::size_t i = 1; i < out.invariant_factors.size(); ++i)
            if (!(out.invariant_factors[i] % out.invariant_factors[i - 1]).is_zero())
                record_failure("divisibility chain");
        return out;
    });
}

std::optional<std::vector<Integer>> integer_solve(const Matrix& b, std::span<const Integer> y) {
    if (y.size() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const auto dec = hnf(b);
    std::vector<Integer> residual(y.begin(), y.end());
    std::vector<Integer> z(b.cols(), Integer(0));
    for (std::size_t j = 0; j < dec.rank(); ++j) {
        const std::size_t pr = dec.pivot_rows[j];
        // rows between pivots must already be cleared
        const Integer& piv = dec.hermite(pr, j);
        if (!(residual[pr] % piv).is_zero()) return std::nullopt;
        z[j] = residual[pr] / piv;
        if (z[j].is_zero()) continue;
        for (std::size_t r = pr; r < b.rows(); ++r) residual[r] -= z[j] * dec.hermite(r, j);
    }
    for (const auto& v : residual)
        if (!v.is_zero()) return std::nullopt;
    std::vector<Integer> x(b.cols(), Integer(0));
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = 0; j < dec.rank(); ++j)
            if (!z[j].is_zero()) x[i] += dec.transform(i, j) * z[j];
    return x;
}

std::size_t rational_rank(const Matrix& m) { return bareiss(m).pivot_cols.size(); }

Matrix rational_kernel(const Matrix& m) {
    const auto ech = bareiss(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        // back substitution through the echelon rows
        for (std::size_t k = ech.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = ech.pivot_cols[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!ech.rows(k, j).is_zero()) acc += Rational(ech.rows(k, j)) * x[j];
            x[pc] = -acc / Rational(ech.rows(k, pc));
        }
        basis.push_back(primitive(std::move(x)));
    }
    Matrix out(cols, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i) out(i, j) = basis[j][i];
    return out;
}

std::size_t modular_rank(const Matrix& m, std::uint64_t p) {
    auto a = to_mod_rows(m, p);
    return rref_mod(a, m.cols(), p).size();
}

Matrix modular_kernel(const Matrix& m, std::uint64_t p) {
    auto a = to_mod_rows(m, p);
    const std::size_t cols = m.cols();
    const auto pivots = rref_mod(a, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(cols, cols - pivots.size());
    std::size_t j = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        out(f, j) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) out(pivots[k], j) = (p - a[k][f]) % p;
        ++j;
    }
    return out;
}

std::size_t field_rank(const Matrix& m, const Ring& ring) {
    switch (ring.kind) {
        case Ring::Kind::Rationals: return rational_rank(m);
        case Ring::Kind::PrimeField: return modular_rank(m, ring.prime);
        case Ring::Kind::Integers: break;
    }
    throw Error(ErrorCode::InvalidTheory, "field_rank needs a field");
}

Matrix field_kernel(const Matrix& m, const Ring& ring) {
    switch (ring.kind) {
        case Ring::Kind::Rationals: return rational_kernel(m);
        case Ring::Kind::PrimeField: return modular_kernel(m, ring.prime);
        case Ring::Kind::Integers: break;
    }
    throw Error(ErrorCode::InvalidTheory, "field_kernel needs a field");
}

// ---------------------------------------------------------------- echelon lattice

EchelonLattice::EchelonLattice(std::size_t ambient_dim, std::vector<SparseVector> columns)
    : ambient_dim_(ambient_dim), columns_(std::move(columns)) {
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].empty()) throw Error(ErrorCode::InternalConsistency, "zero column in echelon lattice");
        if (j > 0 && pivot_row(j) <= pivot_row(j - 1))
            throw Error(ErrorCode::InternalConsistency, "echelon lattice pivots not increasing");
    }
}

std::optional<std::vector<Integer>> EchelonLattice::solve(const SparseVector& y) const {
    std::vector<Integer> residual(ambient_dim_, Integer(0));
    for (const auto& [i, v] : y) {
        if (i >= ambient_dim_) return std::nullopt;
        residual[i] += v;
    }
    std::vector<Integer> x(columns_.size(), Integer(0));
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        const auto& col = columns_[j];
        const auto& [pr, piv] = col.front();
        if (residual[pr].is_zero()) continue;
        if (!(residual[pr] % piv).is_zero()) return std::nullopt;
        x[j] = residual[pr] / piv;
        for (const auto& [i, v] : col) residual[i] -= x[j] * v;
    }
    for (const auto& v : residual)
        if (!v.is_zero()) return std::nullopt;
    return x;
}

Matrix EchelonLattice::to_matrix() const {
    Matrix out(ambient_dim_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, v] : columns_[j]) out(i, j) = v;
    return out;
}

std::vector<SparseVector> sparse_columns(const Matrix& m) {
    std::vector<SparseVector> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out[j].emplace_back(i, m(i, j));
    return out;
}

CertificateStats certificate_stats() {
    return {g_hnf_checked.load(), g_snf_checked.load(), g_saturation_checked.load(), g_failures.load()};
}

void reset_certificate_stats() {
    g_hnf_checked = 0;
    g_snf_checked = 0;
    g_saturation_checked = 0;
    g_failures = 0;
}

}  // namespace pathhom
