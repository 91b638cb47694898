#include "twoblock/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoblock {

std::string rational_to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int rref(Matrix& m) {
    if (m.empty()) return 0;
    const int ncols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rational lead = m[rank][col];
        for (auto& x : m[rank]) x /= lead;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

Matrix kernel(const Matrix& a, int n) {
    Matrix m = a;
    rref(m);
    std::vector<int> pivot_col(m.size());
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < m.size(); ++r) {
        int c = 0;
        while (c < n && m[r][c] == 0) ++c;
        pivot_col[r] = c;
        if (c < n) is_pivot[c] = true;
    }
    Matrix basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < m.size(); ++r)
            if (pivot_col[r] < n) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    Matrix out(rows, Vec(cols, Rational(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Vec mat_apply(const Matrix& a, const Vec& v) {
    Vec out(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

Matrix mat_identity(int n) {
    Matrix m(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_pow(const Matrix& a, int e) {
    Matrix out = mat_identity(static_cast<int>(a.size()));
    for (int i = 0; i < e; ++i) out = mat_mul(out, a);
    return out;
}

Subspace::Subspace(int ambient, Matrix gens) : n(ambient), basis(std::move(gens)) {
    for (const auto& row : basis)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("subspace: generator size mismatch");
    rref(basis);
}

bool Subspace::contains(const Vec& v) const {
    Vec w = v;
    for (const auto& row : basis) {
        int p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p < n && w[p] != 0) {
            const Rational f = w[p];
            for (int c = 0; c < n; ++c) w[c] -= f * row[c];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis.begin(), other.basis.end(),
                       [&](const Vec& v) { return contains(v); });
}

Subspace span(int n, const Matrix& gens) { return Subspace(n, gens); }

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw std::invalid_argument("subspace sum: ambient mismatch");
    Matrix gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return Subspace(a.n, std::move(gens));
}

Subspace add_vector(const Subspace& a, const Vec& v) {
    Matrix gens = a.basis;
    gens.push_back(v);
    return Subspace(a.n, std::move(gens));
}

Subspace preimage(const Matrix& a, const Subspace& s) {
    const int n = s.n;
    // v lies in the preimage iff reducing a*v against the rref basis of s
    // leaves zero in every non-pivot coordinate; each such coordinate gives
    // one linear functional on v.
    std::vector<int> pivot_of_row(s.basis.size());
    std::vector<int> row_of_col(n, -1);
    for (size_t r = 0; r < s.basis.size(); ++r) {
        int c = 0;
        while (c < n && s.basis[r][c] == 0) ++c;
        pivot_of_row[r] = c;
        row_of_col[c] = static_cast<int>(r);
    }
    Matrix conditions;
    for (int c = 0; c < n; ++c) {
        if (row_of_col[c] >= 0) continue;
        Vec functional(n, Rational(0));
        functional[c] = 1;
        for (size_t r = 0; r < s.basis.size(); ++r) functional[pivot_of_row[r]] = -s.basis[r][c];
        // row = functional . a
        Vec row(n, Rational(0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (functional[i] != 0 && a[i][j] != 0) row[j] += functional[i] * a[i][j];
        conditions.push_back(std::move(row));
    }
    Subspace out(n);
    out.basis = kernel(conditions, n);
    return out;
}

}  // namespace twoblock
