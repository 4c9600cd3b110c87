#include "torusfp/certificate_search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace torusfp {

namespace {

using std::int32_t;
using std::int64_t;

// Exponents inside a search stay far below this at desk scale; anything
// larger is refused loudly instead of risking silent wraparound.
constexpr int64_t kScaleLimit = int64_t(1) << 40;
constexpr std::size_t kCandidateCap = 4u << 20;
constexpr std::size_t kRowCap = 1u << 20;

int64_t narrow(const Int& v) {
    if (v > kScaleLimit || v < -kScaleLimit)
        throw SearchCapacityExceeded("certificate search: exponent out of supported range");
    return static_cast<int64_t>(v);
}

int64_t floor_div64(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Pair64 {
    int64_t m = 0, n = 0;
    Pair64 operator+(const Pair64& o) const { return {m + o.m, n + o.n}; }
    Pair64 operator-(const Pair64& o) const { return {m - o.m, n - o.n}; }
    bool operator<(const Pair64& o) const { return m != o.m ? m < o.m : n < o.n; }
    bool operator==(const Pair64& o) const { return m == o.m && n == o.n; }
};

struct Phi64 {
    int64_t b1, b2, b3, b4;
    Pair64 apply(const Pair64& p) const { return {p.m * b1 + p.n * b3, p.m * b2 + p.n * b4}; }
};

Phi64 narrow_phi(const Endomorphism& phi) {
    return {narrow(phi.b1), narrow(phi.b2), narrow(phi.b3), narrow(phi.b4)};
}

// int64 port of the Hermite reduction used by class_id.
struct Hermite64 {
    bool has_col = false;
    int64_t a = 0, s = 0;
    bool has_d = false;
    int64_t d = 0;

    Pair64 reduce(Pair64 p) const {
        if (has_col) {
            int64_t q = floor_div64(p.m, a);
            p.m -= q * a;
            p.n -= q * s;
        }
        if (has_d) p.n -= floor_div64(p.n, d) * d;
        return p;
    }
};

Hermite64 narrow_hermite(const ImageForm& H) {
    Hermite64 h;
    if (H.col1) {
        h.has_col = true;
        h.a = narrow(H.col1->x);
        h.s = narrow(H.col1->y);
    }
    if (H.d) {
        h.has_d = true;
        h.d = narrow(*H.d);
    }
    return h;
}

struct Key1 {
    Pair64 a, b;
    bool operator<(const Key1& o) const {
        if (!(a == o.a)) return a < o.a;
        return b < o.b;
    }
    bool operator==(const Key1& o) const { return a == o.a && b == o.b; }
};

struct Cand {
    Pair64 a, b, t;
};

std::array<int64_t, 6> cand_tuple(const Cand& c) {
    return {c.a.m, c.a.n, c.b.m, c.b.n, c.t.m, c.t.n};
}

int64_t cand_maxnorm(const Cand& c) {
    int64_t m = 0;
    for (int64_t v : cand_tuple(c)) m = std::max(m, std::abs(v));
    return m;
}

bool cand_less(const Cand& x, const Cand& y) {
    int64_t nx = cand_maxnorm(x), ny = cand_maxnorm(y);
    if (nx != ny) return nx < ny;
    return cand_tuple(x) < cand_tuple(y);
}

// The three 1-tensors of d2(a (x) b (x) t), before combining equal keys.
std::array<std::pair<Key1, int>, 3> image_terms(const Phi64& phi, const Cand& c) {
    return {{{Key1{c.b, c.t + phi.apply(c.a)}, 1},
             {Key1{c.a + c.b, c.t}, -1},
             {Key1{c.a, c.b + c.t}, 1}}};
}

// ---------------------------------------------------------------------------
// Exact sparse echelon elimination, generic in the coefficient type. The
// int64 instantiation checks every operation for overflow and punts to the
// arbitrary-precision instantiation when the values outgrow it.

struct Int64Overflow {};

struct Ops64 {
    using Coeff = int64_t;
    static Coeff from_int(const Int& v) {
        if (v > kScaleLimit || v < -kScaleLimit) throw Int64Overflow{};
        return static_cast<Coeff>(v);
    }
    static Int to_int(const Coeff& v) { return Int(v); }
    static Coeff add_mul(const Coeff& a, const Coeff& b, const Coeff& c) {
        Coeff bc, r;
        if (__builtin_mul_overflow(b, c, &bc) || __builtin_add_overflow(a, bc, &r))
            throw Int64Overflow{};
        return r;
    }
    static Coeff mul(const Coeff& a, const Coeff& b) {
        Coeff r;
        if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
        return r;
    }
};

struct OpsBig {
    using Coeff = Int;
    static Coeff from_int(const Int& v) { return v; }
    static Int to_int(const Coeff& v) { return v; }
    static Coeff add_mul(const Coeff& a, const Coeff& b, const Coeff& c) { return a + b * c; }
    static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
};

template <class C>
struct Xgcd {
    C g, x, y;
};

template <class Ops, class C = typename Ops::Coeff>
Xgcd<C> xgcd(C a, C b) {
    C r0 = a, r1 = b;
    C x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (r1 != 0) {
        C q = r0 / r1;
        C r2 = Ops::add_mul(r0, -q, r1);
        C x2 = Ops::add_mul(x0, -q, x1);
        C y2 = Ops::add_mul(y0, -q, y1);
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) {
        r0 = -r0; x0 = -x0; y0 = -y0;
    }
    return {r0, x0, y0};
}

template <class Ops>
class Echelon {
public:
    using C = typename Ops::Coeff;
    using Vec = std::vector<std::pair<int32_t, C>>;

    Echelon(std::size_t rows, bool track) : pivot_(rows, -1), track_(track) {}

    // r = alpha * u + beta * v (merge of sorted sparse vectors).
    static void axpy(const C& alpha, const Vec& u, const C& beta, const Vec& v, Vec& r) {
        r.clear();
        r.reserve(u.size() + v.size());
        auto iu = u.begin();
        auto iv = v.begin();
        while (iu != u.end() || iv != v.end()) {
            if (iv == v.end() || (iu != u.end() && iu->first < iv->first)) {
                C c = Ops::mul(alpha, iu->second);
                if (c != 0) r.emplace_back(iu->first, c);
                ++iu;
            } else if (iu == u.end() || iv->first < iu->first) {
                C c = Ops::mul(beta, iv->second);
                if (c != 0) r.emplace_back(iv->first, c);
                ++iv;
            } else {
                C c = Ops::add_mul(Ops::mul(alpha, iu->second), beta, iv->second);
                if (c != 0) r.emplace_back(iu->first, c);
                ++iu;
                ++iv;
            }
        }
    }

    void insert(Vec w, int32_t col) {
        Vec combo;
        if (track_) combo.emplace_back(col, C(1));
        Vec scratch;
        while (!w.empty()) {
            int32_t r = w.front().first;
            int32_t bi = pivot_[static_cast<std::size_t>(r)];
            if (bi < 0) {
                if (w.front().second < 0) {
                    for (auto& [i, c] : w) c = -c;
                    for (auto& [i, c] : combo) c = -c;
                }
                pivot_[static_cast<std::size_t>(r)] = static_cast<int32_t>(entries_.size());
                entries_.push_back({std::move(w), std::move(combo)});
                return;
            }
            Entry& e = entries_[static_cast<std::size_t>(bi)];
            C p = e.vec.front().second;
            C a = w.front().second;
            if (a % p == 0) {
                C q = a / p;
                axpy(C(1), w, -q, e.vec, scratch);
                w.swap(scratch);
                if (track_) {
                    axpy(C(1), combo, -q, e.combo, scratch);
                    combo.swap(scratch);
                }
            } else {
                Xgcd<C> eg = xgcd<Ops>(p, a);
                Vec nv, nw;
                axpy(eg.x, e.vec, eg.y, w, nv);
                axpy(p / eg.g, w, -(a / eg.g), e.vec, nw);
                if (track_) {
                    Vec nc, nwc;
                    axpy(eg.x, e.combo, eg.y, combo, nc);
                    axpy(p / eg.g, combo, -(a / eg.g), e.combo, nwc);
                    e.combo = std::move(nc);
                    combo = std::move(nwc);
                }
                e.vec = std::move(nv);
                w = std::move(nw);
            }
        }
    }

    // Membership by successive exact division at the pivots; fills the column
    // combination of the representation when tracking is on.
    bool reduce(Vec x, Vec* combo_out) const {
        Vec combo, scratch;
        while (!x.empty()) {
            int32_t r = x.front().first;
            int32_t bi = pivot_[static_cast<std::size_t>(r)];
            if (bi < 0) return false;
            const Entry& e = entries_[static_cast<std::size_t>(bi)];
            const C& p = e.vec.front().second;
            const C& a = x.front().second;
            if (a % p != 0) return false;
            C q = a / p;
            if (track_ && combo_out) {
                axpy(C(1), combo, q, e.combo, scratch);
                combo.swap(scratch);
            }
            axpy(C(1), x, -q, e.vec, scratch);
            x.swap(scratch);
        }
        if (combo_out) *combo_out = std::move(combo);
        return true;
    }

private:
    struct Entry {
        Vec vec;
        Vec combo;
    };
    std::vector<int32_t> pivot_;
    std::vector<Entry> entries_;
    bool track_;
};

std::vector<Pair64> window_pairs(const SearchWindow& w, const std::vector<Key1>& support) {
    std::vector<Pair64> pairs;
    long b = w.bound;
    if (w.absolute) {
        pairs.reserve(static_cast<std::size_t>((2 * b + 1) * (2 * b + 1)));
        for (int64_t m = -b; m <= b; ++m)
            for (int64_t n = -b; n <= b; ++n) pairs.push_back({m, n});
    } else {
        for (const Key1& k : support) {
            for (const Pair64& p : {k.a, k.b}) {
                for (int64_t dm = -b; dm <= b; ++dm)
                    for (int64_t dn = -b; dn <= b; ++dn)
                        pairs.push_back({p.m + dm, p.n + dn});
            }
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    return pairs;
}

std::vector<Cand> class_candidates(const Hermite64& H, const std::vector<Pair64>& pairs,
                                   const Pair64& cls_rep) {
    std::map<Pair64, std::vector<Pair64>> by_class;
    for (const Pair64& p : pairs) by_class[H.reduce(p)].push_back(p);

    std::vector<Cand> cands;
    for (const Pair64& a : pairs) {
        for (const Pair64& b : pairs) {
            auto it = by_class.find(H.reduce(cls_rep - a - b));
            if (it == by_class.end()) continue;
            if (cands.size() + it->second.size() > kCandidateCap)
                throw SearchCapacityExceeded("certificate search: candidate set too large");
            for (const Pair64& t : it->second) cands.push_back({a, b, t});
        }
    }
    std::sort(cands.begin(), cands.end(), cand_less);
    return cands;
}

std::vector<Key1> collect_rows(const Phi64& phi, const std::vector<Cand>& cands,
                               const std::vector<Key1>& extra) {
    std::vector<Key1> rows;
    rows.reserve(cands.size() * 3 + extra.size());
    for (const Cand& c : cands)
        for (const auto& [k, s] : image_terms(phi, c)) rows.push_back(k);
    rows.insert(rows.end(), extra.begin(), extra.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (rows.size() > kRowCap)
        throw SearchCapacityExceeded("certificate search: row space too large");
    return rows;
}

int32_t row_index(const std::vector<Key1>& rows, const Key1& k) {
    auto it = std::lower_bound(rows.begin(), rows.end(), k);
    if (it == rows.end() || !(*it == k)) return -1;
    return static_cast<int32_t>(it - rows.begin());
}

// The left-factor abelianization kills every d2 image; when it is nonzero on
// the target, verifying that it annihilates each enumerated column yields an
// explicit dual witness that the window system is unsolvable.
bool farkas_refutes(const Phi64& phi, const std::vector<Cand>& cands,
                    const std::vector<std::pair<Key1, Int>>& target) {
    Int tx = 0, ty = 0;
    for (const auto& [k, c] : target) {
        tx += c * k.a.m;
        ty += c * k.a.n;
    }
    if (tx == 0 && ty == 0) return false;
    for (const Cand& c : cands) {
        int64_t sx = 0, sy = 0;
        for (const auto& [k, s] : image_terms(phi, c)) {
            sx += s * k.a.m;
            sy += s * k.a.n;
        }
        if (sx != 0 || sy != 0) return false;  // not a witness after all
    }
    return true;
}

template <class Ops>
typename Echelon<Ops>::Vec to_sparse(const Phi64& phi, const std::vector<Key1>& rows,
                                     const Cand& c) {
    std::array<std::pair<int32_t, int>, 3> ix;
    auto terms = image_terms(phi, c);
    for (std::size_t i = 0; i < 3; ++i)
        ix[i] = {row_index(rows, terms[i].first), terms[i].second};
    std::sort(ix.begin(), ix.end());
    typename Echelon<Ops>::Vec v;
    for (const auto& [r, s] : ix) {
        if (!v.empty() && v.back().first == r)
            v.back().second += s;
        else
            v.emplace_back(r, typename Ops::Coeff(s));
    }
    typename Echelon<Ops>::Vec out;
    for (auto& [r, cval] : v)
        if (cval != 0) out.emplace_back(r, cval);
    return out;
}

GroupElement widen(const Pair64& p) { return GroupElement{Int(p.m), Int(p.n)}; }

// Solve d2(y) = target over candidates of one class. Columns are inserted in
// canonical order with periodic membership probes, so a solution that uses
// only low-norm candidates is found without processing the tail.
template <class Ops>
std::optional<TensorChain2> eliminate(const Phi64& phi, const std::vector<Cand>& cands,
                                      const std::vector<Key1>& rows,
                                      const std::vector<std::pair<Key1, Int>>& target,
                                      bool provenance) {
    Echelon<Ops> ech(rows.size(), provenance);

    typename Echelon<Ops>::Vec x;
    x.reserve(target.size());
    for (const auto& [k, c] : target) x.emplace_back(row_index(rows, k), Ops::from_int(c));
    std::sort(x.begin(), x.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    constexpr std::size_t kProbeStride = 1024;
    auto probe = [&]() -> std::optional<TensorChain2> {
        typename Echelon<Ops>::Vec combo;
        if (!ech.reduce(x, provenance ? &combo : nullptr)) return std::nullopt;
        TensorChain2 y;
        for (const auto& [j, q] : combo) {
            const Cand& c = cands[static_cast<std::size_t>(j)];
            y.add_term(widen(c.a), widen(c.b), widen(c.t), Ops::to_int(q));
        }
        return y;
    };

    for (std::size_t j = 0; j < cands.size(); ++j) {
        ech.insert(to_sparse<Ops>(phi, rows, cands[j]), static_cast<int32_t>(j));
        if ((j + 1) % kProbeStride == 0)
            if (auto y = probe()) return y;
    }
    return probe();
}

// One class component: candidates restricted to the class, exact solve.
std::optional<TensorChain2> solve_class(const Phi64& phi, const Hermite64& H,
                                        const Pair64& cls_rep,
                                        const std::vector<std::pair<Key1, Int>>& target,
                                        const std::vector<Pair64>& pairs, bool provenance) {
    std::vector<Cand> cands = class_candidates(H, pairs, cls_rep);
    if (farkas_refutes(phi, cands, target)) return std::nullopt;

    std::vector<Key1> extra;
    extra.reserve(target.size());
    for (const auto& [k, c] : target) extra.push_back(k);
    std::vector<Key1> rows = collect_rows(phi, cands, extra);

    try {
        return eliminate<Ops64>(phi, cands, rows, target, provenance);
    } catch (const Int64Overflow&) {
        return eliminate<OpsBig>(phi, cands, rows, target, provenance);
    }
}

struct ClassSplit {
    std::vector<Key1> support;
    std::map<Pair64, std::vector<std::pair<Key1, Int>>> by_class;
};

ClassSplit split_by_class(const Hermite64& H, const TensorChain1& x) {
    ClassSplit s;
    for (const auto& [k, c] : x.terms()) {
        Key1 k64{{narrow(k.first.m), narrow(k.first.n)},
                 {narrow(k.second.m), narrow(k.second.n)}};
        s.support.push_back(k64);
        s.by_class[H.reduce(k64.a + k64.b)].emplace_back(k64, c);
    }
    return s;
}

}  // namespace

std::optional<TensorChain2> search_certificate(const Endomorphism& phi, const TensorChain1& x,
                                               const SearchWindow& window) {
    if (x.is_zero()) return TensorChain2{};

    Phi64 p64 = narrow_phi(phi);
    Hermite64 H = narrow_hermite(image_hermite_form(phi_shifted(phi)));
    ClassSplit split = split_by_class(H, x);
    std::vector<Pair64> pairs = window_pairs(window, split.support);

    TensorChain2 y;
    for (const auto& [cls, target] : split.by_class) {
        auto part = solve_class(p64, H, cls, target, pairs, /*provenance=*/true);
        if (!part) return std::nullopt;
        y += *part;
    }
    if (d2(phi, y) != x)
        throw std::logic_error("certificate search produced a non-verifying solution");
    return y;
}

struct CertificateLattice::Impl {
    Phi64 p64;
    Hermite64 H;
    Pair64 cls_rep;
    std::vector<Cand> cands;
    std::vector<Key1> rows;
    bool rows_built = false;
    std::unique_ptr<Echelon<Ops64>> fast;
    std::unique_ptr<Echelon<OpsBig>> big;

    void ensure_rows() {
        if (rows_built) return;
        rows = collect_rows(p64, cands, {});
        rows_built = true;
    }

    // May throw Int64Overflow; the caller then falls back to ensure_big().
    void ensure_fast() {
        if (fast) return;
        auto e = std::make_unique<Echelon<Ops64>>(rows.size(), false);
        for (std::size_t j = 0; j < cands.size(); ++j)
            e->insert(to_sparse<Ops64>(p64, rows, cands[j]), static_cast<int32_t>(j));
        fast = std::move(e);
    }

    void ensure_big() {
        if (big) return;
        auto e = std::make_unique<Echelon<OpsBig>>(rows.size(), false);
        for (std::size_t j = 0; j < cands.size(); ++j)
            e->insert(to_sparse<OpsBig>(p64, rows, cands[j]), static_cast<int32_t>(j));
        big = std::move(e);
    }
};

CertificateLattice::CertificateLattice(const Endomorphism& phi, long absolute_bound,
                                       const ClassId& cls)
    : impl_(std::make_unique<Impl>()) {
    impl_->p64 = narrow_phi(phi);
    impl_->H = narrow_hermite(image_hermite_form(phi_shifted(phi)));
    impl_->cls_rep = impl_->H.reduce(Pair64{narrow(cls.rep.m), narrow(cls.rep.n)});
    std::vector<Pair64> pairs = window_pairs(SearchWindow{true, absolute_bound}, {});
    impl_->cands = class_candidates(impl_->H, pairs, impl_->cls_rep);
}

CertificateLattice::~CertificateLattice() = default;
CertificateLattice::CertificateLattice(CertificateLattice&&) noexcept = default;
CertificateLattice& CertificateLattice::operator=(CertificateLattice&&) noexcept = default;

bool CertificateLattice::contains(const TensorChain1& x) const {
    if (x.is_zero()) return true;

    std::vector<std::pair<Key1, Int>> target;
    for (const auto& [k, c] : x.terms()) {
        Key1 k64{{narrow(k.first.m), narrow(k.first.n)},
                 {narrow(k.second.m), narrow(k.second.n)}};
        if (!(impl_->H.reduce(k64.a + k64.b) == impl_->cls_rep))
            throw std::invalid_argument("chain is outside this lattice's class");
        target.emplace_back(k64, c);
    }
    if (farkas_refutes(impl_->p64, impl_->cands, target)) return false;

    impl_->ensure_rows();
    std::vector<std::pair<int32_t, Int>> tv;
    for (const auto& [k, c] : target) {
        int32_t r = row_index(impl_->rows, k);
        if (r < 0) return false;  // row unreachable by any in-window boundary
        tv.emplace_back(r, c);
    }
    std::sort(tv.begin(), tv.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    if (!impl_->big) {
        try {
            impl_->ensure_fast();
            Echelon<Ops64>::Vec v;
            v.reserve(tv.size());
            for (const auto& [r, c] : tv) v.emplace_back(r, Ops64::from_int(c));
            return impl_->fast->reduce(std::move(v), nullptr);
        } catch (const Int64Overflow&) {
            // fall through to the arbitrary-precision engine
        }
    }
    impl_->ensure_big();
    Echelon<OpsBig>::Vec v;
    v.reserve(tv.size());
    for (const auto& [r, c] : tv) v.emplace_back(r, c);
    return impl_->big->reduce(std::move(v), nullptr);
}

}  // namespace torusfp
