#include "torusfp/integer_lattice.hpp"

#include <stdexcept>

namespace torusfp {

namespace {

// Floor division (cpp_int's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool lex_positive(const Vec2& v) { return v.x > 0 || (v.x == 0 && v.y > 0); }

Vec2 canonical_generator(Vec2 v) {
    Int g = gcd_int(v.x, v.y);
    if (g > 1) {
        v.x /= g;
        v.y /= g;
    }
    if (!lex_positive(v)) v = -v;
    return v;
}

}  // namespace

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

ExtendedGcd extended_gcd(const Int& a, const Int& b) {
    // Invariant: r0 = x0 a + y0 b, r1 = x1 a + y1 b.
    Int r0 = a, r1 = b;
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = std::move(r1); r1 = std::move(r2);
        x0 = std::move(x1); x1 = std::move(x2);
        y0 = std::move(y1); y1 = std::move(y2);
    }
    if (r0 < 0) {
        r0 = -r0; x0 = -x0; y0 = -y0;
    }
    return {r0, x0, y0};
}

IntMatrix2 IntMatrix2::unimodular_inverse() const {
    Int dt = det();
    if (dt != 1 && dt != -1) throw std::invalid_argument("matrix is not unimodular");
    // adj / det, and det is its own inverse here
    return {d * dt, -b * dt, -c * dt, a * dt};
}

bool Lattice::contains(const Vec2& v) const {
    switch (rank) {
        case 0:
            return v.is_zero();
        case 1: {
            const Vec2& g = basis[0];
            if (g.x != 0) {
                if (v.x % g.x != 0) return false;
                Int t = v.x / g.x;
                return v.y == t * g.y;
            }
            if (v.x != 0) return false;
            return g.y != 0 && v.y % g.y == 0;
        }
        default: {
            Int dt = basis[0].x * basis[1].y - basis[0].y * basis[1].x;
            Int t1 = v.x * basis[1].y - v.y * basis[1].x;
            Int t2 = basis[0].x * v.y - basis[0].y * v.x;
            return t1 % dt == 0 && t2 % dt == 0;
        }
    }
}

namespace {

// Elementary row/column operations on S with unimodular bookkeeping keeping
// the invariant M = U * S * V at every step.
struct SnfState {
    IntMatrix2 U, S, V;

    Int& at(int i, int j) {
        if (i == 0) return j == 0 ? S.a : S.b;
        return j == 0 ? S.c : S.d;
    }

    // row_i(S) += k * row_j(S); compensate in U.
    void row_add(int i, int j, const Int& k) {
        if (i == 0) { S.a += k * S.c; S.b += k * S.d; }
        else        { S.c += k * S.a; S.d += k * S.b; }
        // U <- U * E^{-1}: col_j(U) -= k * col_i(U)
        if (j == 0) {
            if (i == 1) { U.a -= k * U.b; U.c -= k * U.d; }
        } else {
            if (i == 0) { U.b -= k * U.a; U.d -= k * U.c; }
        }
    }

    // col_j(S) += k * col_i(S); compensate in V.
    void col_add(int j, int i, const Int& k) {
        if (j == 0) { S.a += k * S.b; S.c += k * S.d; }
        else        { S.b += k * S.a; S.d += k * S.c; }
        // V <- E^{-1} * V: row_i(V) -= k * row_j(V)
        if (i == 0) {
            if (j == 1) { V.a -= k * V.c; V.b -= k * V.d; }
        } else {
            if (j == 0) { V.c -= k * V.a; V.d -= k * V.b; }
        }
    }

    void row_swap() {
        std::swap(S.a, S.c); std::swap(S.b, S.d);
        std::swap(U.a, U.b); std::swap(U.c, U.d);  // swap columns of U
    }
    void col_swap() {
        std::swap(S.a, S.b); std::swap(S.c, S.d);
        std::swap(V.a, V.c); std::swap(V.b, V.d);  // swap rows of V
    }
    void row_negate(int i) {
        if (i == 0) { S.a = -S.a; S.b = -S.b; U.a = -U.a; U.c = -U.c; }
        else        { S.c = -S.c; S.d = -S.d; U.b = -U.b; U.d = -U.d; }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix2& M) {
    SnfState st{IntMatrix2::identity(), M, IntMatrix2::identity()};
    IntMatrix2& S = st.S;

    for (;;) {
        if (S.a == 0 && S.b == 0 && S.c == 0 && S.d == 0) break;

        // Bring a nonzero entry to the pivot.
        if (S.a == 0) {
            if (S.c != 0) st.row_swap();
            else if (S.b != 0) st.col_swap();
            else { st.row_swap(); st.col_swap(); }
        }

        // Euclidean clearing of the off-diagonal entries.
        while (S.c != 0 || S.b != 0) {
            while (S.c != 0) {
                Int q = S.c / S.a;
                st.row_add(1, 0, -q);
                if (S.c != 0) st.row_swap();
            }
            while (S.b != 0) {
                Int q = S.b / S.a;
                st.col_add(1, 0, -q);
                if (S.b != 0) st.col_swap();  // may disturb (1,0); outer loop retries
            }
        }

        // Divisibility d1 | d2: fold d2 into the first column and re-reduce;
        // the corner then becomes gcd(d1, d2), which always divides det/gcd.
        if (S.d != 0 && S.d % S.a != 0) {
            st.col_add(0, 1, 1);
            continue;
        }
        break;
    }

    if (S.a < 0) st.row_negate(0);
    if (S.d < 0) st.row_negate(1);
    return {st.U, st.S, st.V};
}

Lattice kernel_lattice(const IntMatrix2& M) {
    SmithDecomposition snf = smith_normal_form(M);
    IntMatrix2 Vinv = snf.V.unimodular_inverse();
    Lattice ker;
    // M z = 0  <=>  S (V z) = 0; free coordinates are the zero diagonal slots.
    if (snf.S.a == 0) {
        ker.basis[ker.rank++] = Vec2{Vinv.a, Vinv.c};
    }
    if (snf.S.d == 0) {
        ker.basis[ker.rank++] = Vec2{Vinv.b, Vinv.d};
    }
    if (ker.rank == 1) ker.basis[0] = canonical_generator(ker.basis[0]);
    if (ker.rank == 2) ker = Lattice::full();
    return ker;
}

ImageForm image_hermite_form(const IntMatrix2& M) {
    ImageForm H;
    Vec2 c1{M.a, M.c}, c2{M.b, M.d};
    if (c1.x == 0 && c2.x == 0) {
        Int g = gcd_int(c1.y, c2.y);
        if (g != 0) H.d = g;
        return H;
    }
    ExtendedGcd e = extended_gcd(c1.x, c2.x);
    Vec2 pivot{e.g, e.x * c1.y + e.y * c2.y};
    Int second = (c1.x * c2.y - c2.x * c1.y) / e.g;  // row-2 entry of the cleared column
    if (second != 0) {
        Int d = second < 0 ? -second : second;
        H.d = d;
        pivot.y -= floor_div(pivot.y, d) * d;  // 0 <= off-pivot < d
    }
    H.col1 = pivot;
    return H;
}

Vec2 reduce_mod_image(const ImageForm& H, const Vec2& v) {
    Vec2 r = v;
    if (H.col1) {
        Int q = floor_div(r.x, H.col1->x);
        r.x -= q * H.col1->x;
        r.y -= q * H.col1->y;
    }
    if (H.d) r.y -= floor_div(r.y, *H.d) * *H.d;
    return r;
}

Vec2 reduce_mod_image(const IntMatrix2& M, const Vec2& v) {
    return reduce_mod_image(image_hermite_form(M), v);
}

std::optional<AffineSolution> solve_affine(const IntMatrix2& M, const Vec2& w) {
    SmithDecomposition snf = smith_normal_form(M);
    Vec2 c = snf.U.unimodular_inverse().apply(w);
    Vec2 y;
    if (snf.S.a != 0) {
        if (c.x % snf.S.a != 0) return std::nullopt;
        y.x = c.x / snf.S.a;
    } else if (c.x != 0) {
        return std::nullopt;
    }
    if (snf.S.d != 0) {
        if (c.y % snf.S.d != 0) return std::nullopt;
        y.y = c.y / snf.S.d;
    } else if (c.y != 0) {
        return std::nullopt;
    }
    Vec2 z = snf.V.unimodular_inverse().apply(y);
    Lattice ker = kernel_lattice(M);

    // Canonicalize the particular solution modulo the kernel lattice.
    if (ker.rank > 0) {
        IntMatrix2 K{ker.basis[0].x, ker.basis[1].x, ker.basis[0].y, ker.basis[1].y};
        z = reduce_mod_image(K, z);
    }
    return AffineSolution{z, ker};
}

Cokernel cokernel_reps(const IntMatrix2& M) {
    Cokernel co;
    SmithDecomposition snf = smith_normal_form(M);
    co.invariant_factors = {snf.S.a, snf.S.d};
    Int dt = M.det();
    if (dt == 0) {
        co.finite = false;
        return co;
    }
    co.finite = true;
    ImageForm H = image_hermite_form(M);
    // Fundamental region [0, a) x [0, d); a*d = |det|.
    Int a = H.col1->x;
    Int d = H.d ? *H.d : Int(1);
    for (Int i = 0; i < a; ++i)
        for (Int j = 0; j < d; ++j) co.reps.push_back(Vec2{i, j});
    return co;
}

}  // namespace torusfp
