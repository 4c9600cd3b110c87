#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torusfp/group_algebra.hpp"

namespace torusfp {

/// Column vector in Z^2.
struct Vec2 {
    Int x;
    Int y;

    Vec2() : x(0), y(0) {}
    Vec2(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Int& c) const { return {x * c, y * c}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// 2x2 integer matrix, row-major [[a,b],[c,d]].
struct IntMatrix2 {
    Int a, b, c, d;

    IntMatrix2() : a(0), b(0), c(0), d(0) {}
    IntMatrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMatrix2 operator-(const IntMatrix2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    /// Inverse of a unimodular matrix (|det| = 1).
    IntMatrix2 unimodular_inverse() const;
};

/// A sublattice of Z^2 given by an independent basis. Rank-1 lattices carry a
/// canonical generator: primitive (content 1) and lexicographically positive.
/// Rank-2 lattices are stored with a column-Hermite basis.
struct Lattice {
    int rank = 0;
    std::array<Vec2, 2> basis{};

    static Lattice zero() { return {}; }
    static Lattice full() { return {2, {Vec2{1, 0}, Vec2{0, 1}}}; }

    bool contains(const Vec2& v) const;
};

/// M = U * S * V with U, V unimodular and S = diag(d1, d2), d1 | d2, both >= 0.
struct SmithDecomposition {
    IntMatrix2 U, S, V;
};

/// Computed by elementary row/column operations with explicit unimodular
/// bookkeeping; the transformation matrices feed the Diophantine witnesses.
SmithDecomposition smith_normal_form(const IntMatrix2& M);

struct AffineSolution {
    Vec2 particular;  // canonical: reduced modulo the kernel lattice
    Lattice kernel;   // all homogeneous solutions
};

/// Solves M z = w over Z. The full solution set is particular + kernel;
/// an unsolvable system is a normal outcome, not an error.
std::optional<AffineSolution> solve_affine(const IntMatrix2& M, const Vec2& w);

/// Kernel of M as a sublattice of Z^2, with canonical generators.
Lattice kernel_lattice(const IntMatrix2& M);

/// Column Hermite form of the image lattice of M: echelon generators
/// (a, c) with a > 0 and/or (0, d) with d > 0, off-pivot entry reduced
/// (0 <= c < d when both present). Used for canonical coset representatives.
struct ImageForm {
    std::optional<Vec2> col1;  // pivot in row 1: (a, c), a > 0
    std::optional<Int> d;      // pivot in row 2: (0, d), d > 0
};

ImageForm image_hermite_form(const IntMatrix2& M);

/// Canonical representative of v modulo the image lattice of M: the unique
/// point of v + M Z^2 inside the half-open fundamental region of the Hermite
/// form. Two vectors reduce equally iff they are congruent mod im(M).
Vec2 reduce_mod_image(const ImageForm& H, const Vec2& v);
Vec2 reduce_mod_image(const IntMatrix2& M, const Vec2& v);

struct Cokernel {
    bool finite = false;
    std::vector<Vec2> reps;              // |det M| canonical reps when finite
    std::array<Int, 2> invariant_factors{0, 0};  // SNF diagonal, always set
};

/// Coset representatives of Z^2 / M Z^2: exactly |det M| of them when
/// det M != 0, otherwise the "infinite" descriptor with invariant factors.
Cokernel cokernel_reps(const IntMatrix2& M);

Int gcd_int(Int a, Int b);
/// g = gcd(a,b) together with x, y satisfying a x + b y = g, g >= 0.
struct ExtendedGcd {
    Int g, x, y;
};
ExtendedGcd extended_gcd(const Int& a, const Int& b);

}  // namespace torusfp
