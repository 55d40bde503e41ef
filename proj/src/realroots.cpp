#include "speyer/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace speyer {

namespace {

int eval_sign(const UniPoly& p, const Rational& at) { return sign(eval(p, at)); }

int variations(const std::vector<int>& signs) {
    int last = 0, var = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

SturmChain sturm_chain(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    SturmChain ch;
    ch.polys.push_back(primitive_part(f));
    if (f.degree() >= 1) {
        ch.polys.push_back(primitive_part(derivative(f)));
        for (;;) {
            const UniPoly& a = ch.polys[ch.polys.size() - 2];
            const UniPoly& b = ch.polys.back();
            UniPoly r = divmod(a, b).second;
            if (r.is_zero()) break;
            ch.polys.push_back(primitive_part(-r));
        }
    }
    return ch;
}

int sign_variations(const SturmChain& chain, const Rational& at) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const UniPoly& p : chain.polys) signs.push_back(eval_sign(p, at));
    return variations(signs);
}

int sign_variations_neg_inf(const SturmChain& chain) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const UniPoly& p : chain.polys)
        signs.push_back(p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading()));
    return variations(signs);
}

int sign_variations_pos_inf(const SturmChain& chain) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const UniPoly& p : chain.polys) signs.push_back(sign(p.leading()));
    return variations(signs);
}

namespace {

// Halve an isolating interval against its squarefree defining polynomial;
// a midpoint hit is promoted to an exact root.
void bisect_step(RootInterval& ri, const UniPoly& q) {
    const Rational m = (ri.lo + ri.hi) / 2;
    const int sm = sign(eval(q, m));
    if (sm == 0) {
        ri.exact = m;
        ri.lo = ri.hi = m;
        return;
    }
    (sm == sign(eval(q, ri.lo)) ? ri.lo : ri.hi) = m;
}

}  // namespace

Rational cauchy_bound(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("Cauchy bound of the zero polynomial");
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i))));
    return Rational(1) + m / abs(f.leading());
}

long count_real_roots(const UniPoly& f, const std::optional<Rational>& lo,
                      const std::optional<Rational>& hi) {
    if (f.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (lo && hi && !(*lo < *hi)) throw std::domain_error("count_real_roots: require lo < hi");
    if (f.degree() == 0) return 0;
    const SturmChain ch = sturm_chain(squarefree_part(f));
    const int va = lo ? sign_variations(ch, *lo) : sign_variations_neg_inf(ch);
    const int vb = hi ? sign_variations(ch, *hi) : sign_variations_pos_inf(ch);
    return va - vb;
}

bool is_real_rooted(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("real-rootedness of the zero polynomial");
    if (f.degree() == 0) return true;
    const UniPoly q = squarefree_part(f);
    return count_real_roots(q) == q.degree();
}

Rational simplest_in(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_in: require a < b");
    if (sign(a) < 0 && sign(b) > 0) return Rational(0);
    if (sign(b) <= 0) return -simplest_in(-b, -a);
    // 0 <= a < b
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    const Rational z(fl);
    if (a == z) {
        if (a + 1 < b) return a + 1;
        // (a, b) inside (z, z+1]: x = z + 1/y with y in (1/(b-z), inf)
        const Rational c = 1 / (b - z);
        BigInt fc;
        mpz_fdiv_q(fc.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        return z + 1 / Rational(fc + 1);
    }
    const Rational n = z + 1;
    if (n < b) return n;
    return z + 1 / simplest_in(1 / (b - z), 1 / (a - z));
}

RootIsolation isolate_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    RootIsolation iso;
    if (f.degree() == 0) return iso;
    const UniPoly q = squarefree_part(f);
    const SturmChain ch = sturm_chain(q);
    const Rational bound = cauchy_bound(q);

    struct Seg {
        Rational a, b;
        int va, vb;
    };
    std::vector<Seg> work;
    const int vA = sign_variations(ch, -bound), vB = sign_variations(ch, bound);
    if (vA > vB) work.push_back({-bound, bound, vA, vB});

    std::vector<RootInterval> found;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.va - s.vb == 1) {
            const Rational probe = simplest_in(s.a, s.b);
            if (eval_sign(q, probe) == 0) {
                found.push_back({probe, probe, probe});
            } else {
                RootInterval ri{s.a, s.b, std::nullopt};
                bisect_step(ri, q);  // one tightening halving
                found.push_back(std::move(ri));
            }
            continue;
        }
        const Rational m = (s.a + s.b) / 2;
        if (eval_sign(q, m) == 0) {
            found.push_back({m, m, m});
            // gap around the pinned root so both halves keep non-root endpoints
            Rational d = (s.b - s.a) / 4;
            while (eval_sign(q, m - d) == 0 || eval_sign(q, m + d) == 0 ||
                   sign_variations(ch, m - d) - sign_variations(ch, m + d) != 1)
                d /= 2;
            const int vl = sign_variations(ch, m - d);
            const int vr = sign_variations(ch, m + d);
            if (s.va > vl) work.push_back({s.a, m - d, s.va, vl});
            if (vr > s.vb) work.push_back({m + d, s.b, vr, s.vb});
        } else {
            const int vm = sign_variations(ch, m);
            if (s.va > vm) work.push_back({s.a, m, s.va, vm});
            if (vm > s.vb) work.push_back({m, s.b, vm, s.vb});
        }
    }

    std::sort(found.begin(), found.end(), [](const RootInterval& a, const RootInterval& b) {
        const Rational& ka = a.exact ? *a.exact : a.lo;
        const Rational& kb = b.exact ? *b.exact : b.lo;
        if (ka != kb) return ka < kb;
        return a.exact.has_value() && !b.exact.has_value();
    });
    iso.intervals = std::move(found);
    return iso;
}

RootIsolation refine(const RootIsolation& iso, const UniPoly& f, const Rational& width) {
    if (sign(width) <= 0) throw std::domain_error("refine: width must be positive");
    const UniPoly q = squarefree_part(f);
    RootIsolation out = iso;
    for (RootInterval& ri : out.intervals) {
        if (ri.exact) continue;
        const int slo = eval_sign(q, ri.lo);
        if (slo == 0 || slo == eval_sign(q, ri.hi))
            throw std::invalid_argument("refine: isolation does not belong to this polynomial");
        while (ri.hi - ri.lo > width) {
            const Rational probe = simplest_in(ri.lo, ri.hi);
            if (eval_sign(q, probe) == 0) {
                ri.exact = probe;
                ri.lo = ri.hi = probe;
                break;
            }
            const Rational m = (ri.lo + ri.hi) / 2;
            const int sm = eval_sign(q, m);
            if (sm == 0) {
                ri.exact = m;
                ri.lo = ri.hi = m;
                break;
            }
            (sm == slo ? ri.lo : ri.hi) = m;
        }
    }
    return out;
}

std::vector<std::pair<RootInterval, int>> roots_with_multiplicity(const UniPoly& f) {
    const RootIsolation iso = isolate_roots(f);
    std::vector<std::pair<RootInterval, int>> out;
    out.reserve(iso.intervals.size());
    const UniPoly df = derivative(f);
    for (const RootInterval& ri : iso.intervals) {
        int mult = 0;
        if (ri.exact) {
            const UniPoly lin(std::vector<Rational>{-*ri.exact, Rational(1)});
            UniPoly g = f;
            while (!g.is_zero() && eval_sign(g, *ri.exact) == 0) {
                g = exact_div(g, lin);
                ++mult;
            }
        } else {
            mult = 1;
            UniPoly g = gcd(f, df);
            while (g.degree() >= 1 && count_real_roots(g, ri.lo, ri.hi) >= 1) {
                ++mult;
                g = gcd(g, derivative(g));
            }
        }
        out.emplace_back(ri, mult);
    }
    return out;
}

namespace {

struct RootCompareCtx {
    const UniPoly& qf;
    const UniPoly& qg;
    UniPoly common;  // gcd(qf, qg); constant when no root is shared
    std::optional<SturmChain> common_chain;

    long common_count(const Rational& lo, const Rational& hi) {
        if (!common_chain) common_chain = sturm_chain(common);
        return sign_variations(*common_chain, lo) - sign_variations(*common_chain, hi);
    }
};

// -1, 0, +1 ordering of an exact value against the single root inside ri.
int cmp_exact_vs_root(const Rational& r, const RootInterval& ri, const UniPoly& q) {
    if (ri.exact) return r < *ri.exact ? -1 : (r == *ri.exact ? 0 : 1);
    if (r <= ri.lo) return -1;
    if (r >= ri.hi) return 1;
    const int sr = sign(eval(q, r));
    if (sr == 0) return 0;
    // same sign as the lo endpoint means the root still lies to the right
    return sr == sign(eval(q, ri.lo)) ? -1 : 1;
}

// Ordering of the root inside `a` (of ctx.qf) against the root inside `b`
// (of ctx.qg). Equality is certified through the shared gcd; distinct roots
// separate after finitely many bisections.
int cmp_roots(RootInterval& a, RootInterval& b, RootCompareCtx& ctx) {
    bool equality_checked = false;
    for (;;) {
        if (a.exact) return cmp_exact_vs_root(*a.exact, b, ctx.qg);
        if (b.exact) return -cmp_exact_vs_root(*b.exact, a, ctx.qf);
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        if (!equality_checked) {
            equality_checked = true;
            if (ctx.common.degree() >= 1) {
                const Rational ilo = std::max(a.lo, b.lo);
                const Rational ihi = std::min(a.hi, b.hi);
                if (ctx.common_count(ilo, ihi) >= 1) return 0;
            }
        }
        bisect_step(a, ctx.qf);
        bisect_step(b, ctx.qg);
    }
}

}  // namespace

bool interlaces(const UniPoly& g, const UniPoly& f, bool strict) {
    // conventions: the zero polynomial interlaces and is interlaced by
    // everything, constants interlace anything of degree <= 1
    if (f.is_zero() || g.is_zero()) return true;
    if (!is_real_rooted(f) || !is_real_rooted(g))
        throw std::domain_error("interlaces: inputs must be real-rooted");
    const int gap = f.degree() - g.degree();
    if (gap != 0 && gap != 1)
        throw std::domain_error("interlaces: require deg f - deg g in {0, 1}");
    if (f.degree() == 0) return true;

    const auto uroots = roots_with_multiplicity(f);
    const auto vroots = roots_with_multiplicity(g);

    // mutable interval copies shared by every occurrence of a root
    std::vector<RootInterval> uiv, viv;
    for (const auto& [ri, m] : uroots) uiv.push_back(ri);
    for (const auto& [ri, m] : vroots) viv.push_back(ri);

    // descending index lists with multiplicities expanded
    std::vector<size_t> U, V;
    for (size_t i = uroots.size(); i-- > 0;)
        for (int k = 0; k < uroots[i].second; ++k) U.push_back(i);
    for (size_t i = vroots.size(); i-- > 0;)
        for (int k = 0; k < vroots[i].second; ++k) V.push_back(i);

    const UniPoly qf = squarefree_part(f);
    const UniPoly qg = squarefree_part(g);
    RootCompareCtx ctx{qf, qg, gcd(qf, qg), std::nullopt};

    // pattern u_1 >= v_1 >= u_2 >= ... ; with a degree gap the list ends at
    // the final u, otherwise at the final v
    const size_t m = U.size();
    auto cmpUV = [&](size_t i, size_t j) { return cmp_roots(uiv[U[i]], viv[V[j]], ctx); };
    for (size_t i = 0; i < m; ++i) {
        if (i < V.size()) {
            const int c = cmpUV(i, i);  // u_{i+1} vs v_{i+1}
            if (c < 0 || (strict && c == 0)) return false;
        }
        if (i + 1 < m && i < V.size()) {
            const int c = cmpUV(i + 1, i);  // v_{i+1} vs u_{i+2}
            if (c > 0 || (strict && c == 0)) return false;
        }
    }
    return true;
}

bool nonneg_on_reals(const UniPoly& p) {
    if (p.is_zero()) return true;
    if (sign(p.leading()) < 0) return false;
    if (p.degree() % 2 != 0) return false;
    const UniPoly odd = squarefree_odd_part(p);
    if (odd.degree() == 0) return true;
    return count_real_roots(odd) == 0;
}

}  // namespace speyer
