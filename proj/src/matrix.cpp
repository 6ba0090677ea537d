#include "dodgson/matrix.hpp"

#include <algorithm>
#include <string>

namespace dodgson {

namespace {

void check_removals(const std::vector<int>& idx, int limit, const char* what) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || idx[i] > limit)
            throw Error(std::string(what) + " index out of range: " + std::to_string(idx[i]));
        if (i > 0 && idx[i] == idx[i - 1])
            throw Error(std::string("duplicate ") + what + " index: " + std::to_string(idx[i]));
    }
}

}  // namespace

MinorSpec::MinorSpec(std::vector<int> removed_rows, std::vector<int> removed_cols)
    : rows_(std::move(removed_rows)), cols_(std::move(removed_cols)) {
    std::sort(rows_.begin(), rows_.end());
    std::sort(cols_.begin(), cols_.end());
    for (size_t i = 1; i < rows_.size(); ++i)
        if (rows_[i] == rows_[i - 1]) throw Error("duplicate row index: " + std::to_string(rows_[i]));
    for (size_t i = 1; i < cols_.size(); ++i)
        if (cols_[i] == cols_[i - 1]) throw Error("duplicate column index: " + std::to_string(cols_[i]));
}

Matrix::Matrix(RingDomain domain, int rows, int cols)
    : domain_(std::move(domain)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(domain_));
}

Matrix Matrix::identity(const RingDomain& d, int n) {
    Matrix m(d, n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Scalar::one(d));
    return m;
}

Matrix Matrix::from_ints(const RingDomain& d,
                         std::initializer_list<std::initializer_list<long>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(d, nr, nc);
    int i = 1;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc) throw Error("ragged row in matrix literal");
        int j = 1;
        for (long v : row) m.set(i, j++, Scalar::from_long(v, d));
        ++i;
    }
    return m;
}

int Matrix::n() const {
    if (!square()) throw Error("matrix is not square: " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return rows_;
}

const Scalar& Matrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw Error("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
    return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

void Matrix::set(int i, int j, Scalar v) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw Error("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
    if (v.domain() != domain_)
        throw DomainMismatch("entry from " + v.domain().name() + " in a " + domain_.name() + " matrix");
    entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)] = std::move(v);
}

bool Matrix::operator==(const Matrix& o) const {
    if (domain_ != o.domain_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

std::uint64_t Matrix::digest() const {
    auto mix = [](std::uint64_t h, const std::string& s) {
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        h ^= 0x3b;
        h *= 0x100000001b3ULL;
        return h;
    };
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = mix(h, domain_.name());
    h = mix(h, std::to_string(rows_));
    h = mix(h, std::to_string(cols_));
    for (const Scalar& e : entries_) h = mix(h, e.str());
    return h;
}

Matrix minor(const Matrix& A, const MinorSpec& spec) {
    check_removals(spec.removed_rows(), A.rows(), "row");
    check_removals(spec.removed_cols(), A.cols(), "column");
    std::vector<int> keep_r, keep_c;
    for (int i = 1; i <= A.rows(); ++i)
        if (!std::binary_search(spec.removed_rows().begin(), spec.removed_rows().end(), i))
            keep_r.push_back(i);
    for (int j = 1; j <= A.cols(); ++j)
        if (!std::binary_search(spec.removed_cols().begin(), spec.removed_cols().end(), j))
            keep_c.push_back(j);
    Matrix out(A.domain(), static_cast<int>(keep_r.size()), static_cast<int>(keep_c.size()));
    for (size_t i = 0; i < keep_r.size(); ++i)
        for (size_t j = 0; j < keep_c.size(); ++j)
            out.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, A.at(keep_r[i], keep_c[j]));
    return out;
}

Matrix minor(const Matrix& A, std::vector<int> removed_rows, std::vector<int> removed_cols) {
    return minor(A, MinorSpec(std::move(removed_rows), std::move(removed_cols)));
}

Matrix interior(const Matrix& A) {
    if (A.rows() < 3 || A.cols() < 3) throw Error("interior needs at least a 3x3 matrix");
    return minor(A, {1, A.rows()}, {1, A.cols()});
}

Matrix swap_rows(const Matrix& A, int r1, int r2) {
    Matrix out = A;
    if (r1 == r2) return out;
    for (int j = 1; j <= A.cols(); ++j) {
        out.set(r1, j, A.at(r2, j));
        out.set(r2, j, A.at(r1, j));
    }
    return out;
}

Matrix scale_row(const Matrix& A, int r, const Scalar& c) {
    Matrix out = A;
    for (int j = 1; j <= A.cols(); ++j) out.set(r, j, c * A.at(r, j));
    return out;
}

namespace {

// Expansion along the topmost active row; `cols` holds the active 1-based
// column indices.
Scalar laplace(const Matrix& A, int row, std::vector<int>& cols) {
    const RingDomain& d = A.domain();
    if (cols.empty()) return Scalar::one(d);
    if (cols.size() == 1) return A.at(row, cols[0]);
    Scalar acc = Scalar::zero(d);
    for (size_t idx = 0; idx < cols.size(); ++idx) {
        const Scalar& entry = A.at(row, cols[idx]);
        if (entry.is_zero()) continue;
        int col = cols[idx];
        cols.erase(cols.begin() + idx);
        Scalar term = entry * laplace(A, row + 1, cols);
        cols.insert(cols.begin() + idx, col);
        acc = (idx % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Scalar det_field_gauss(const Matrix& A) {
    int n = A.n();
    const RingDomain& d = A.domain();
    std::vector<Scalar> w;
    w.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) w.push_back(A.at(i, j));
    auto e = [&](int i, int j) -> Scalar& { return w[static_cast<size_t>(i) * n + j]; };

    bool negate = false;
    Scalar det = Scalar::one(d);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!e(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Scalar::zero(d);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(e(pivot, j), e(k, j));
            negate = !negate;
        }
        det = det * e(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (e(i, k).is_zero()) continue;
            Scalar f = div_exact(e(i, k), e(k, k));
            for (int j = k; j < n; ++j) e(i, j) = e(i, j) - f * e(k, j);
        }
    }
    return negate ? -det : det;
}

}  // namespace

Scalar det_cofactor(const Matrix& A, int max_n) {
    int n = A.n();
    if (n > max_n)
        throw Error("cofactor expansion refused for n=" + std::to_string(n) +
                    " (bound " + std::to_string(max_n) + ")");
    std::vector<int> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cols[j] = j + 1;
    return laplace(A, 1, cols);
}

Scalar det_bareiss(const Matrix& A) {
    int n = A.n();
    const RingDomain& d = A.domain();
    if (n == 0) return Scalar::one(d);
    if (d.kind() == DomainKind::prime_field) return det_field_gauss(A);

    std::vector<Scalar> w;
    w.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) w.push_back(A.at(i, j));
    auto e = [&](int i, int j) -> Scalar& { return w[static_cast<size_t>(i) * n + j]; };

    bool negate = false;
    Scalar prev = Scalar::one(d);
    for (int k = 0; k < n - 1; ++k) {
        if (e(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!e(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Scalar::zero(d);
            for (int j = k; j < n; ++j) std::swap(e(pivot, j), e(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                e(i, j) = div_exact(e(k, k) * e(i, j) - e(i, k) * e(k, j), prev);
            e(i, k) = Scalar::zero(d);
        }
        prev = e(k, k);
    }
    Scalar det = e(n - 1, n - 1);
    return negate ? -det : det;
}

Matrix build_A_k(const Matrix& A, int k) {
    int n = A.n();
    if (n < 4) throw Error("A(k) needs n >= 4, got n=" + std::to_string(n));
    if (k < 0 || k > n - 1) throw Error("A(k) index out of range: k=" + std::to_string(k));
    std::vector<int> kept_rows;
    for (int i = 1; i <= n - 3; ++i) kept_rows.push_back(i);
    kept_rows.push_back(n);
    Matrix out(A.domain(), n - 2, n - 2);
    for (int i = 0; i < n - 2; ++i) {
        for (int j = 1; j <= n - 3; ++j) out.set(i + 1, j, A.at(kept_rows[i], j));
        out.set(i + 1, n - 2, A.at(kept_rows[i], n - k));
    }
    return out;
}

Matrix build_B_l(const Matrix& A, int l) {
    int n = A.n();
    if (n < 2) throw Error("B(l) needs n >= 2, got n=" + std::to_string(n));
    if (l < 0 || l > n - 1) throw Error("B(l) index out of range: l=" + std::to_string(l));
    Matrix out = A;
    for (int j = 1; j <= n; ++j) out.set(n, j, A.at(n - l, j));
    return out;
}

}  // namespace dodgson
