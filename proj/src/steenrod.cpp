#include "ea/steenrod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ea::st {

namespace op = ea::op;
namespace coa = ea::coa;
namespace simp = ea::simp;
namespace gf2 = ea::gf2;

int SqMonomial::degree() const {
    return std::accumulate(indices.begin(), indices.end(), 0);
}

bool admissible(const SqMonomial& m) {
    for (size_t j = 0; j + 1 < m.indices.size(); ++j)
        if (m.indices[j] < 2 * m.indices[j + 1]) return false;
    return true;
}

bool unstable_ok(const SqMonomial& m, int gen_degree) {
    int deg = gen_degree;
    for (auto it = m.indices.rbegin(); it != m.indices.rend(); ++it) {
        if (*it > deg) return false;
        deg += *it;
    }
    return true;
}

bool binomial_odd(long long a, long long b) {
    if (b < 0 || b > a) return false;
    return (b & (a - b)) == 0;
}

void BigSteenrodElement::toggle(const SqMonomial& m) {
    if (!terms.erase(m)) terms.insert(m);
}

namespace {

long long floordiv2(long long i) { return i >= 0 ? i / 2 : -((-i + 1) / 2); }

void adem_into(const SqMonomial& m, BigSteenrodElement& out,
               std::map<SqMonomial, BigSteenrodElement>& memo, int depth = 0) {
    if (depth > 10000)
        throw std::runtime_error("adem rewriting recursion limit exceeded");
    size_t p = 0;
    while (p + 1 < m.indices.size() &&
           m.indices[p] >= 2 * m.indices[p + 1])
        ++p;
    if (p + 1 >= m.indices.size()) {
        out.toggle(m);
        return;
    }
    auto it = memo.find(m);
    if (it != memo.end()) {
        for (const SqMonomial& t : it->second.terms) out.toggle(t);
        return;
    }
    long long i = m.indices[p], j = m.indices[p + 1];
    BigSteenrodElement local;
    for (long long k = i - j + 1; k <= floordiv2(i); ++k) {
        if (!binomial_odd(j - k - 1, i - 2 * k)) continue;
        SqMonomial next = m;
        next.indices[p] = (int)(i + j - k);
        next.indices[p + 1] = (int)k;
        adem_into(next, local, memo, depth + 1);
    }
    memo[m] = local;
    for (const SqMonomial& t : local.terms) out.toggle(t);
}

} // namespace

BigSteenrodElement adem_normalize(const SqMonomial& m) {
    BigSteenrodElement out;
    std::map<SqMonomial, BigSteenrodElement> memo;
    adem_into(m, out, memo);
    return out;
}

BigSteenrodElement adem_normalize(const BigSteenrodElement& e) {
    BigSteenrodElement out;
    std::map<SqMonomial, BigSteenrodElement> memo;
    for (const SqMonomial& m : e.terms) adem_into(m, out, memo);
    return out;
}

BigSteenrodElement project_to_classical(const BigSteenrodElement& e) {
    BigSteenrodElement out;
    for (const SqMonomial& m : adem_normalize(e).terms) {
        if (std::any_of(m.indices.begin(), m.indices.end(),
                        [](int i) { return i < 0; }))
            continue;
        SqMonomial cut;
        for (int i : m.indices)
            if (i != 0) cut.indices.push_back(i);
        out.toggle(cut);
    }
    return out;
}

std::string to_text(const SqMonomial& m) {
    if (m.indices.empty()) return "1";
    std::string s;
    for (int i : m.indices) {
        if (!s.empty()) s += ' ';
        s += "Sq" + std::to_string(i);
    }
    return s;
}

std::string to_text(const BigSteenrodElement& e) {
    if (e.zero()) return "0";
    std::string s;
    for (const SqMonomial& m : e.terms) {
        if (!s.empty()) s += " + ";
        s += to_text(m);
    }
    return s;
}

SqMonomial monomial_from_text(const std::string& text) {
    SqMonomial m;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.rfind("Sq", 0) != 0)
            throw std::invalid_argument("expected Sq<index>, got " + tok);
        m.indices.push_back(std::stoi(tok.substr(2)));
    }
    return m;
}

Cohomology::Cohomology(const simp::SimplicialSet& x)
    : x_(&x),
      pieces_(simp::cohomology(x, 0, x.top_dim)),
      solvers_(x.top_dim + 1) {}

int Cohomology::dim(int d) const {
    return d >= 0 && d <= top() ? pieces_[d].dim : 0;
}

CohClass Cohomology::zero_class(int d) const {
    return {d, gf2::BitVec(dim(d))};
}

CohClass Cohomology::basis_class(int d, int k) const {
    CohClass c = zero_class(d);
    c.coeffs.set(k);
    return c;
}

coa::Coch Cohomology::representative(const CohClass& c) const {
    if (c.degree < 0 || c.degree > top() || c.coeffs.size() != dim(c.degree))
        throw std::invalid_argument("class outside the carrier range");
    gf2::BitVec u(x_->count(c.degree));
    for (int k = 0; k < dim(c.degree); ++k)
        if (c.coeffs.get(k)) u ^= pieces_[c.degree].representatives[k];
    coa::Coch out;
    for (int s = 0; s < u.size(); ++s)
        if (u.get(s)) out.insert({c.degree, s});
    return out;
}

CohClass Cohomology::reduce(int degree, const coa::Coch& u) const {
    gf2::BitVec target(degree >= 0 && degree <= top() ? x_->count(degree) : 0);
    for (const auto& [d, id] : u) {
        if (d != degree) continue;
        if (degree < 0 || degree > top())
            throw std::invalid_argument("cochain outside the carrier range");
        target.flip(id);
    }
    if (degree < 0 || degree > top()) return {degree, gf2::BitVec(0)};
    if (!solvers_[degree]) {
        int below = degree > 0 ? x_->count(degree - 1) : 0;
        gf2::Matrix a(x_->count(degree), dim(degree) + below);
        for (int k = 0; k < dim(degree); ++k)
            for (int s = 0; s < x_->count(degree); ++s)
                if (pieces_[degree].representatives[k].get(s)) a.set(s, k);
        if (degree > 0) {
            gf2::Matrix cb = simp::coboundary_matrix(*x_, degree - 1);
            for (int j = 0; j < below; ++j)
                for (int s = 0; s < x_->count(degree); ++s)
                    if (cb.at(s, j)) a.set(s, dim(degree) + j);
        }
        solvers_[degree].emplace(a);
    }
    std::optional<gf2::BitVec> sol = solvers_[degree]->solve(target);
    if (!sol) throw std::invalid_argument("not a cocycle");
    CohClass c = zero_class(degree);
    for (int k = 0; k < dim(degree); ++k) c.coeffs.set(k, sol->get(k));
    return c;
}

CohClass coh_add(CohClass a, const CohClass& b) {
    if (a.degree != b.degree)
        throw std::invalid_argument("degree mismatch in class sum");
    a.coeffs ^= b.coeffs;
    return a;
}

CohClass cup(const Cohomology& h, const CohClass& a, const CohClass& b) {
    coa::Coch v = coa::cochain_operation(
        h.space(), op::theta(0), {h.representative(a), h.representative(b)});
    return h.reduce(a.degree + b.degree, v);
}

CohClass sq_on_cohomology(const Cohomology& h, int i, const CohClass& c) {
    int n = c.degree;
    if (i > n) return h.zero_class(n + i);
    coa::Coch u = h.representative(c);
    coa::Coch v = coa::cochain_operation(h.space(), op::theta(n - i), {u, u});
    return h.reduce(n + i, v);
}

CohClass sq_monomial_on_cohomology(const Cohomology& h, const SqMonomial& m,
                                   const CohClass& c) {
    CohClass acc = c;
    for (auto it = m.indices.rbegin(); it != m.indices.rend(); ++it)
        acc = sq_on_cohomology(h, *it, acc);
    return acc;
}

void UnstableElement::toggle(const UnstableTerm& t) {
    if (!terms.erase(t)) terms.insert(t);
}

int term_degree(const UnstableModule& m, const UnstableTerm& t) {
    return m.gen_degrees[t.gen] + t.op.degree();
}

UnstableModule be_module(int n, bool classical) {
    UnstableModule m;
    m.classical = classical;
    m.gen_degrees = {n};
    m.gen_names = {"e" + std::to_string(n)};
    return m;
}

UnstableElement normalize(const UnstableModule& m, const UnstableElement& e) {
    UnstableElement out;
    for (const UnstableTerm& t : e.terms) {
        // in unstable A-modules negative degrees vanish: x = Sq^0 x = 0
        if (m.classical && m.gen_degrees[t.gen] < 0) continue;
        BigSteenrodElement b = adem_normalize(t.op);
        if (m.classical) b = project_to_classical(b);
        for (const SqMonomial& mono : b.terms)
            if (unstable_ok(mono, m.gen_degrees[t.gen]))
                out.toggle({mono, t.gen});
    }
    return out;
}

std::string to_text(const UnstableModule& m, const UnstableElement& e) {
    if (e.zero()) return "0";
    std::string s;
    for (const UnstableTerm& t : e.terms) {
        if (!s.empty()) s += " + ";
        if (!t.op.indices.empty()) s += to_text(t.op) + " ";
        s += m.gen_names[t.gen];
    }
    return s;
}

namespace {

// Least degree from which total degrees >= lo stay reachable within rem
// further applications (each application at most doubles a positive degree
// and cannot increase a nonpositive one).
int reachable_floor(int lo, int rem) {
    if (lo <= 0) return lo;
    int f = lo;
    for (int s = 0; s < rem && f > 1; ++s) f = (f + 1) / 2;
    return f;
}

void enumerate_monomials(const UnstableModule& m, int gen, int lo, int hi,
                         int length_cap, std::vector<int>& stack,
                         int deg, std::vector<UnstableTerm>& out) {
    if (deg >= lo && deg <= hi) {
        SqMonomial mono;
        mono.indices.assign(stack.rbegin(), stack.rend());
        out.push_back({mono, gen});
    }
    if ((int)stack.size() == length_cap) return;
    int rem = length_cap - (int)stack.size() - 1;
    int lo_i = reachable_floor(lo, rem) - deg;
    if (!stack.empty()) lo_i = std::max(lo_i, 2 * stack.back());
    if (m.classical) lo_i = std::max(lo_i, 1);
    for (int i = lo_i; i <= deg; ++i) {
        stack.push_back(i);
        enumerate_monomials(m, gen, lo, hi, length_cap, stack, deg + i, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<UnstableTerm> unstable_basis(const UnstableModule& m, int lo,
                                         int hi, int length_cap) {
    if (length_cap < 0) {
        if (!m.classical)
            throw std::invalid_argument(
                "B-side windows are infinite-dimensional without a "
                "monomial-length cap");
        length_cap = 0;
        for (int d : m.gen_degrees) length_cap = std::max(length_cap, hi - d);
    }
    std::vector<UnstableTerm> out;
    for (size_t g = 0; g < m.gen_degrees.size(); ++g) {
        if (m.classical && m.gen_degrees[g] < 0) continue;
        std::vector<int> stack;
        enumerate_monomials(m, (int)g, lo, hi, length_cap, stack,
                            m.gen_degrees[g], out);
    }
    std::sort(out.begin(), out.end(),
              [&](const UnstableTerm& a, const UnstableTerm& b) {
                  int da = term_degree(m, a), db = term_degree(m, b);
                  return da != db ? da < db : a < b;
              });
    return out;
}

std::vector<int> u_poincare_series(const UnstableModule& m, int cap) {
    if (!m.classical)
        throw std::invalid_argument(
            "free unstable algebra series are A-side only");
    for (int d : m.gen_degrees)
        if (d <= 0)
            throw std::invalid_argument(
                "free unstable algebra series require generators of positive "
                "degree");
    std::vector<int> poly_degrees;
    for (const UnstableTerm& t : unstable_basis(m, 0, cap, -1)) {
        // polynomial generators: excess strictly below the generator degree
        // (excess-equal elements are Frobenius squares)
        int excess = t.op.indices.empty()
                         ? 0
                         : 2 * t.op.indices.front() - t.op.degree();
        if (excess < m.gen_degrees[t.gen])
            poly_degrees.push_back(term_degree(m, t));
    }
    std::vector<int> dims(cap + 1, 0);
    dims[0] = 1;
    for (int g : poly_degrees)
        for (int d = g; d <= cap; ++d) dims[d] += dims[d - g];
    return dims;
}

gf2::BitVec HomologySteenrodAction::act(int l, int m,
                                        const gf2::BitVec& c) const {
    if (l == 0) return c;
    int target = m - l >= 0 && m - l < (int)dims.size() ? dims[m - l] : 0;
    auto it = sq.find({l, m});
    if (it == sq.end()) return gf2::BitVec(target);
    return it->second.mul(c);
}

HomologySteenrodAction homology_action(const Cohomology& h, int max_degree) {
    HomologySteenrodAction a;
    for (int m = 0; m <= max_degree; ++m) a.dims.push_back(h.dim(m));
    for (int m = 1; m <= max_degree; ++m)
        for (int l = 1; l <= m; ++l) {
            if (h.dim(m) == 0 || h.dim(m - l) == 0) continue;
            // columns of the cohomological Sq^l: H^{m-l} -> H^m
            gf2::Matrix s(h.dim(m), h.dim(m - l));
            for (int k = 0; k < h.dim(m - l); ++k) {
                CohClass img = sq_on_cohomology(h, l, h.basis_class(m - l, k));
                for (int r = 0; r < h.dim(m); ++r)
                    if (img.coeffs.get(r)) s.set(r, k);
            }
            a.sq[{l, m}] = s.transpose();
        }
    return a;
}

int ModuleContext::gen_index(int hdeg, int idx) const {
    for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g] == std::pair<int, int>{hdeg, idx}) return (int)g;
    throw std::invalid_argument("no such generator");
}

ModuleContext module_context(const Cohomology& h, int n) {
    ModuleContext ctx;
    ctx.n = n;
    ctx.action = homology_action(h, h.top());
    for (int m = 0; m <= h.top(); ++m)
        for (int k = 0; k < h.dim(m); ++k) {
            ctx.gens.push_back({m, k});
            std::string name = "e" + std::to_string(n) + "*c" + std::to_string(m);
            if (h.dim(m) > 1) name += "_" + std::to_string(k);
            ctx.big.gen_degrees.push_back(n - m);
            ctx.big.gen_names.push_back(name);
        }
    ctx.quotient = ctx.big;
    ctx.quotient.classical = true;
    return ctx;
}

namespace {

// terms b Sq^{-l}(e^n (x) c.Sq^l) for l in [l_min, deg c]
UnstableElement g_tail(const ModuleContext& ctx, const UnstableTerm& t,
                       int l_min) {
    UnstableElement out;
    auto [hdeg, idx] = ctx.gens[t.gen];
    for (int l = l_min; l <= hdeg; ++l) {
        gf2::BitVec c(ctx.action.dims[hdeg]);
        c.set(idx);
        gf2::BitVec moved = ctx.action.act(l, hdeg, c);
        for (int k = 0; k < moved.size(); ++k) {
            if (!moved.get(k)) continue;
            UnstableTerm nt{t.op, ctx.gen_index(hdeg - l, k)};
            nt.op.indices.push_back(-l);
            out.toggle(nt);
        }
    }
    return normalize(ctx.big, out);
}

// the restricted-module splitting r_0 of right multiplication by (1+Sq^0)
BigSteenrodElement r0_monomial(const SqMonomial& b, int gen_degree) {
    bool series = (!b.indices.empty() && b.indices.back() < 0) || gen_degree < 0;
    if (series) {
        // (1 + S)^{-1} = sum S^p with S = append-Sq^0-then-normalize,
        // locally nilpotent here
        BigSteenrodElement acc, cur;
        cur.toggle(b);
        for (int p = 0; !cur.zero(); ++p) {
            if (p > 64)
                throw std::runtime_error("r0 series did not terminate");
            for (const SqMonomial& m : cur.terms) acc.toggle(m);
            BigSteenrodElement next;
            for (const SqMonomial& m : cur.terms) {
                SqMonomial app = m;
                app.indices.push_back(0);
                for (const SqMonomial& t : adem_normalize(app).terms)
                    if (unstable_ok(t, gen_degree)) next.toggle(t);
            }
            cur = next;
        }
        return acc;
    }
    if (b.indices.empty() || b.indices.back() > 0) return {};
    // trailing Sq^0 chain: sum of the strips
    BigSteenrodElement acc;
    SqMonomial cur = b;
    while (!cur.indices.empty() && cur.indices.back() == 0) {
        cur.indices.pop_back();
        acc.toggle(cur);
    }
    return acc;
}

UnstableElement r0_apply(const ModuleContext& ctx, const UnstableElement& z) {
    UnstableElement out;
    for (const UnstableTerm& t : z.terms)
        for (const SqMonomial& m :
             r0_monomial(t.op, ctx.big.gen_degrees[t.gen]).terms)
            out.toggle({m, t.gen});
    return out;
}

} // namespace

UnstableElement g_apply(const ModuleContext& ctx, const UnstableElement& z) {
    UnstableElement out = normalize(ctx.big, z);
    for (const UnstableTerm& t : z.terms)
        for (const UnstableTerm& u : g_tail(ctx, t, 0).terms) out.toggle(u);
    return out;
}

UnstableElement retraction_apply(const ModuleContext& ctx,
                                 const UnstableElement& z) {
    if (z.zero()) return z;
    UnstableElement r0z = r0_apply(ctx, normalize(ctx.big, z));
    UnstableElement gp;  // g'(r0z), strictly lower homological degree
    for (const UnstableTerm& t : r0z.terms)
        for (const UnstableTerm& u : g_tail(ctx, t, 1).terms) gp.toggle(u);
    UnstableElement out = retraction_apply(ctx, gp);
    for (const UnstableTerm& t : r0z.terms) out.toggle(t);
    return out;
}

UnstableElement cokernel_project(const ModuleContext& ctx,
                                 const UnstableElement& z) {
    return normalize(ctx.quotient, z);
}

std::vector<int> mapping_space_series(const simp::SimplicialSet& x, int n,
                                      int cap) {
    Cohomology h(x);
    ModuleContext ctx = module_context(h, n);
    for (int d : ctx.quotient.gen_degrees)
        if (d <= 0)
            throw std::invalid_argument(
                "mapping space series need dim x < n: a generator e^n (x) c "
                "has nonpositive degree");
    return u_poincare_series(ctx.quotient, cap);
}

} // namespace ea::st
