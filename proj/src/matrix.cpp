#include "digitop/matrix.hpp"

#include <stdexcept>
#include <string>

#include "digitop/errors.hpp"

namespace digitop {

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p())
        throw OverflowError("exact integer does not fit a 64-bit value");
    return static_cast<std::int64_t>(v.get_si());
}

std::size_t IntegerMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::invalid_argument("matrix index out of range");
    return std::size_t(i) * cols_ + j;
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + other.data_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
    return *this + (-other);
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = -data_[i];
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const BigInt& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

void IntegerMatrix::swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j)
        at(i, j) = -at(i, j);
}

void IntegerMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i)
        at(i, j) = -at(i, j);
}

void IntegerMatrix::add_row_multiple(int i, int s, const BigInt& c) {
    for (int j = 0; j < cols_; ++j)
        at(i, j) += c * at(s, j);
}

void IntegerMatrix::add_col_multiple(int j, int s, const BigInt& c) {
    for (int i = 0; i < rows_; ++i)
        at(i, j) += c * at(i, s);
}

IntegerMatrix IntegerMatrix::select_cols(const std::vector<int>& idx) const {
    IntegerMatrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < rows_; ++i)
            out.at(i, j) = at(i, idx[j]);
    return out;
}

IntegerMatrix IntegerMatrix::select_rows(const std::vector<int>& idx) const {
    IntegerMatrix out(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(idx[i], j);
    return out;
}

std::vector<BigInt> SmithResult::diagonal() const {
    std::vector<BigInt> d;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D.at(i, i));
    return d;
}

namespace {

// Row/column operations applied to D, mirrored into U/Uinv and V/Vinv so
// that U*M*V = D, U*Uinv = I, V*Vinv = I stay invariant throughout.
struct SnfWork {
    IntegerMatrix D, U, Uinv, V, Vinv;

    void row_add(int i, int s, const BigInt& c) {
        D.add_row_multiple(i, s, c);
        U.add_row_multiple(i, s, c);
        Uinv.add_col_multiple(s, i, -c); // right-multiply by the inverse op
    }
    void col_add(int j, int s, const BigInt& c) {
        D.add_col_multiple(j, s, c);
        V.add_col_multiple(j, s, c);
        Vinv.add_row_multiple(s, j, -c); // left-multiply by the inverse op
    }
    void row_swap(int a, int b) {
        if (a == b)
            return;
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        Uinv.swap_cols(a, b);
    }
    void col_swap(int a, int b) {
        if (a == b)
            return;
        D.swap_cols(a, b);
        V.swap_cols(a, b);
        Vinv.swap_rows(a, b);
    }
    void row_negate(int i) {
        D.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
};

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& M) {
    int m = M.rows(), n = M.cols();
    SnfWork w{M, IntegerMatrix::identity(m), IntegerMatrix::identity(m),
              IntegerMatrix::identity(n), IntegerMatrix::identity(n)};

    int limit = std::min(m, n);
    int s = 0;
    for (; s < limit; ++s) {
        // pivot: nonzero entry of least absolute value in the trailing block
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j) {
                BigInt v = abs(w.D.at(i, j));
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break; // trailing block is zero

        w.row_swap(s, pi);
        w.col_swap(s, pj);

        for (;;) {
            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                BigInt q = w.D.at(i, s) / w.D.at(s, s);
                if (q != 0)
                    w.row_add(i, s, -q);
                if (w.D.at(i, s) != 0)
                    clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                BigInt q = w.D.at(s, j) / w.D.at(s, s);
                if (q != 0)
                    w.col_add(j, s, -q);
                if (w.D.at(s, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survives; promote it
                int ri = s, rj = s;
                BigInt rbest = abs(w.D.at(s, s));
                for (int i = s + 1; i < m; ++i)
                    if (w.D.at(i, s) != 0 && abs(w.D.at(i, s)) < rbest) {
                        rbest = abs(w.D.at(i, s));
                        ri = i;
                        rj = s;
                    }
                for (int j = s + 1; j < n; ++j)
                    if (w.D.at(s, j) != 0 && abs(w.D.at(s, j)) < rbest) {
                        rbest = abs(w.D.at(s, j));
                        ri = s;
                        rj = j;
                    }
                w.row_swap(s, ri);
                w.col_swap(s, rj);
                continue;
            }
            // pivot must divide the whole trailing block, so that the
            // diagonal comes out as a divisibility chain and later
            // quotients (hence the transforms) stay small
            int bi = -1;
            for (int i = s + 1; i < m && bi < 0; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (w.D.at(i, j) % w.D.at(s, s) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0)
                break;
            w.row_add(s, bi, 1); // fold the offending row in and re-reduce
        }

        if (w.D.at(s, s) < 0)
            w.row_negate(s);
    }

    SmithResult out{std::move(w.U), std::move(w.Uinv), std::move(w.D), std::move(w.V),
                    std::move(w.Vinv), s};
    return out;
}

std::optional<IntegerMatrix> solve_integer(const IntegerMatrix& A, const IntegerMatrix& b) {
    if (b.cols() != 1 || b.rows() != A.rows())
        throw std::invalid_argument("solve_integer expects a conforming column vector");
    SmithResult s = smith_normal_form(A);
    IntegerMatrix c = s.U * b;
    IntegerMatrix y(A.cols(), 1);
    for (int i = 0; i < A.rows(); ++i) {
        BigInt d = (i < std::min(A.rows(), A.cols())) ? s.D.at(i, i) : BigInt(0);
        if (d == 0) {
            if (c.at(i, 0) != 0)
                return std::nullopt;
        } else {
            if (c.at(i, 0) % d != 0)
                return std::nullopt;
            if (i < A.cols())
                y.at(i, 0) = c.at(i, 0) / d;
        }
    }
    return s.V * y;
}

} // namespace digitop
