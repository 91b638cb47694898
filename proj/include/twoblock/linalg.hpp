#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twoblock {

// Exact rational arithmetic over long long, always kept normalised
// (gcd 1, positive denominator).  The entries we meet stay tiny, so no
// wide-integer guard is needed.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // implicit on purpose: 0 and 1 literals
    Rational(long long n, long long d) : num_(n), den_(d) { normalise(); }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalise();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalise();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        num_ *= o.den_;
        den_ *= o.num_;
        normalise();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    void normalise() {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};
using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row major

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// In-place reduced row echelon form; returns the rank.  Zero rows are
// removed, so afterwards m.size() == rank and rows are ordered by pivot.
int rref(Matrix& m);

// Right null space of a (rows x n) matrix, as canonical RREF basis rows.
Matrix kernel(const Matrix& a, int n);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_apply(const Matrix& a, const Vec& v);
Matrix mat_pow(const Matrix& a, int e);
Matrix mat_identity(int n);

// A linear subspace of Q^n held in canonical reduced row echelon form,
// so equality of subspaces is equality of representations.
struct Subspace {
    int n = 0;
    Matrix basis;  // rref rows, size == dim

    Subspace() = default;
    explicit Subspace(int ambient) : n(ambient) {}
    Subspace(int ambient, Matrix gens);

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return n == o.n && basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

Subspace span(int n, const Matrix& gens);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace add_vector(const Subspace& a, const Vec& v);

// {v : a v in s} for a square matrix a.
Subspace preimage(const Matrix& a, const Subspace& s);

}  // namespace twoblock
