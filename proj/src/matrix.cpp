#include "symring/matrix.hpp"

namespace symring {

bool ExactMatrix::is_zero() const {
    for (const Rat& x : data)
        if (x != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) throw domain_error("matrix dimension mismatch in mul");
    ExactMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Rat& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw domain_error("matrix dimension mismatch in add");
    ExactMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
    return c;
}

Rat trace(const ExactMatrix& a) {
    if (a.rows != a.cols) throw domain_error("trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

int rank(const ExactMatrix& a) {
    // Clear denominators row by row, then Bareiss.
    int m = a.rows, n = a.cols;
    std::vector<std::vector<Int>> w(m, std::vector<Int>(n));
    for (int i = 0; i < m; ++i) {
        Int lcm = 1;
        for (int j = 0; j < n; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(a.at(i, j)));
        for (int j = 0; j < n; ++j) {
            const Rat& x = a.at(i, j);
            w[i][j] = numerator(x) * (lcm / denominator(x));
        }
    }
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[piv], w[r]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j)
                w[i][j] = (w[r][col] * w[i][j] - w[i][col] * w[r][j]) / prev;
            w[i][col] = 0;
        }
        prev = w[r][col];
        ++r;
    }
    return r;
}

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(ExactMatrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols && r < a.rows; ++col) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat inv = Rat(1) / a.at(r, col);
        for (int j = 0; j < a.cols; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

ExactMatrix nullspace(const ExactMatrix& a) {
    ExactMatrix w = a;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(a.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    int nullity = a.cols - static_cast<int>(pivots.size());
    ExactMatrix basis(a.cols, nullity);
    int k = 0;
    for (int free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], k) = -w.at(static_cast<int>(r), free);
        ++k;
    }
    return basis;
}

ExactMatrix left_nullspace(const ExactMatrix& a) {
    ExactMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    ExactMatrix ns = nullspace(t);  // cols(t) x nullity = rows(a) x nullity
    ExactMatrix out(ns.cols, a.rows);
    for (int i = 0; i < ns.rows; ++i)
        for (int j = 0; j < ns.cols; ++j) out.at(j, i) = ns.at(i, j);
    return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (a.rows != a.cols) throw domain_error("inverse of non-square matrix");
    int n = a.rows;
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
        throw domain_error("matrix is singular");
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace symring
