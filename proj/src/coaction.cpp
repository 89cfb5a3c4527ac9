#include "ea/coaction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <limits>

namespace ea::coa {

namespace op = ea::op;
namespace simp = ea::simp;

void TensorElement::toggle(const TensorTerm& t) {
    auto it = terms.find(t);
    if (it == terms.end()) terms.insert(t);
    else terms.erase(it);
}

namespace {

CBasis basis_of(const simp::SimplexRef& r) { return CBasis{r.base_dim, r.base_id}; }

// Enumerate strictly increasing cut tuples 0 <= a_0 < ... < a_i <= n.
void for_each_cut(int i, int n, std::vector<int>& cuts,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if ((int)cuts.size() == i + 1) {
        fn(cuts);
        return;
    }
    int lo = cuts.empty() ? 0 : cuts.back() + 1;
    int hi = n - (i - (int)cuts.size());
    for (int a = lo; a <= hi; ++a) {
        cuts.push_back(a);
        for_each_cut(i, n, cuts, fn);
        cuts.pop_back();
    }
}

} // namespace

TensorElement cup_i_coproduct(const simp::SimplicialSet& x, int i, int dim, int id) {
    TensorElement out;
    out.arity = 2;
    if (i < 0 || i > dim) return out;
    simp::SimplexRef s = simp::nondeg_ref(dim, id);
    std::vector<int> cuts;
    for_each_cut(i, dim, cuts, [&](const std::vector<int>& a) {
        std::set<int> left, right;
        int prev = 0;
        for (int j = 0; j <= i + 1; ++j) {
            int end = j <= i ? a[j] : dim;
            auto& side = j % 2 == 0 ? left : right;
            for (int v = prev; v <= end; ++v) side.insert(v);
            prev = end;
        }
        simp::SimplexRef f = simp::vertex_face(x, s, {left.begin(), left.end()});
        simp::SimplexRef g = simp::vertex_face(x, s, {right.begin(), right.end()});
        if (f.nondeg() && g.nondeg())
            out.toggle(TensorTerm{{basis_of(f), basis_of(g)}});
    });
    return out;
}

TensorElement aw_coproduct(const simp::SimplicialSet& x, int dim, int id) {
    return cup_i_coproduct(x, 0, dim, id);
}

TensorElement tensor_boundary(const simp::SimplicialSet& x, const TensorElement& e) {
    TensorElement out;
    out.arity = e.arity;
    for (const TensorTerm& t : e.terms) {
        for (size_t j = 0; j < t.factors.size(); ++j) {
            const CBasis& c = t.factors[j];
            for (int i = 0; i <= c.degree; ++i) {
                if (c.degree == 0) break;
                simp::SimplexRef f =
                    simp::face_of(x, simp::nondeg_ref(c.degree, c.id), i);
                if (!f.nondeg()) continue;
                TensorTerm t2 = t;
                t2.factors[j] = basis_of(f);
                out.toggle(t2);
            }
        }
    }
    return out;
}

TensorElement map_tensor(const simp::SimplicialMap& f, const TensorElement& e) {
    TensorElement out;
    out.arity = e.arity;
    for (const TensorTerm& t : e.terms) {
        TensorTerm t2;
        bool ok = true;
        for (const CBasis& c : t.factors) {
            simp::SimplexRef r = f.apply(simp::nondeg_ref(c.degree, c.id));
            if (!r.nondeg()) { ok = false; break; }
            t2.factors.push_back(basis_of(r));
        }
        if (ok) out.toggle(t2);
    }
    return out;
}

namespace {

simp::SimplicialMap projection(const simp::Product& pr, const simp::SimplicialSet& f,
                               bool first) {
    simp::SimplicialMap m;
    m.from = &pr.space;
    m.to = &f;
    for (int d = 0; d <= pr.space.top_dim; ++d)
        for (int id = 0; id < pr.space.count(d); ++id)
            m.image[{d, id}] = first ? pr.cells[d][id].x : pr.cells[d][id].y;
    return m;
}

} // namespace

simp::SimplicialMap proj1(const simp::Product& pr, const simp::SimplicialSet& x,
                          const simp::SimplicialSet&) {
    return projection(pr, x, true);
}

simp::SimplicialMap proj2(const simp::Product& pr, const simp::SimplicialSet&,
                          const simp::SimplicialSet& y) {
    return projection(pr, y, false);
}

std::optional<CBasis> CoalgebraHandle::find(const std::string& n) const {
    for (const CBasis& c : basis())
        if (name(c) == n) return c;
    return std::nullopt;
}

TensorElement co_operation(const CoalgebraHandle& k, const op::OperadElement& rho,
                           const CBasis& c) {
    if (rho.r > k.capability()) throw CapabilityError(rho.r);
    TensorElement out;
    out.arity = rho.r;
    for (const op::PermTuple& t : rho.terms)
        for (const TensorTerm& w : k.co_operate(t, c).terms) out.toggle(w);
    return out;
}

SimplicialHandle::SimplicialHandle(const simp::SimplicialSet& x, bool reduced,
                                   int basepoint_id)
    : x_(&x), reduced_(reduced), basepoint_(basepoint_id) {}

std::vector<CBasis> SimplicialHandle::basis() const {
    std::vector<CBasis> out;
    for (int d = 0; d <= x_->top_dim; ++d)
        for (int id = 0; id < x_->count(d); ++id) {
            CBasis c{d, id};
            if (reduced_ && is_basepoint(c)) continue;
            out.push_back(c);
        }
    return out;
}

std::string SimplicialHandle::name(const CBasis& c) const {
    return x_->names[c.degree][c.id];
}

std::set<CBasis> SimplicialHandle::boundary(const CBasis& c) const {
    std::set<CBasis> out;
    for (int i = 0; i <= c.degree; ++i) {
        if (c.degree == 0) break;
        simp::SimplexRef f = simp::face_of(*x_, simp::nondeg_ref(c.degree, c.id), i);
        if (!f.nondeg()) continue;
        CBasis b = basis_of(f);
        if (reduced_ && is_basepoint(b)) continue;
        auto it = out.find(b);
        if (it == out.end()) out.insert(b);
        else out.erase(it);
    }
    return out;
}

TensorElement SimplicialHandle::co_operate(const op::PermTuple& t, const CBasis& c) const {
    int r = t.r;
    if (r > capability()) throw CapabilityError(r);
    TensorElement out;
    out.arity = r;
    if (r == 0) {
        // augmentation; does not descend to the reduced quotient
        if (!reduced_ && c.degree == 0) out.toggle(TensorTerm{});
        return out;
    }
    if (r == 1) {
        out.toggle(TensorTerm{{c}});
        return out;
    }
    int d = t.degree();
    bool twist = t.word[0][0] != 0;  // leading tau: twist after theta_d*
    for (const TensorTerm& w : cup_i_coproduct(*x_, d, c.degree, c.id).terms) {
        TensorTerm w2 = twist ? TensorTerm{{w.factors[1], w.factors[0]}} : w;
        if (reduced_ && (is_basepoint(w2.factors[0]) || is_basepoint(w2.factors[1])))
            continue;
        out.toggle(w2);
    }
    return out;
}

int CircleHandle::capability() const { return std::numeric_limits<int>::max(); }

TensorElement CircleHandle::co_operate(const op::PermTuple& t, const CBasis& c) const {
    TensorElement out;
    out.arity = t.r;
    if (t.r >= 1 && t.degree() == t.r - 1 && op::epsilon(t))
        out.toggle(TensorTerm{std::vector<CBasis>(t.r, c)});
    return out;
}

Coch coch_add(Coch a, const Coch& b) {
    for (const auto& p : b) {
        auto it = a.find(p);
        if (it == a.end()) a.insert(p);
        else a.erase(it);
    }
    return a;
}

Coch coch_coboundary(const simp::SimplicialSet& x, const Coch& u) {
    Coch out;
    for (const auto& [d, id] : u) {
        for (int sid = 0; sid < x.count(d + 1); ++sid) {
            int hits = 0;
            simp::SimplexRef s = simp::nondeg_ref(d + 1, sid);
            for (int i = 0; i <= d + 1; ++i)
                if (simp::face_of(x, s, i) == simp::nondeg_ref(d, id)) ++hits;
            if (hits % 2) out = coch_add(std::move(out), {{d + 1, sid}});
        }
    }
    return out;
}

Coch unit_cochain(const simp::SimplicialSet& x) {
    Coch out;
    for (int id = 0; id < x.count(0); ++id) out.insert({0, id});
    return out;
}

Coch cochain_operation(const simp::SimplicialSet& x, const op::OperadElement& rho,
                       const std::vector<Coch>& args) {
    Coch out;
    for (const op::PermTuple& t : rho.terms) {
        if (t.r == 0) {
            out = coch_add(std::move(out), unit_cochain(x));
            continue;
        }
        if (t.r == 1) {
            out = coch_add(std::move(out), args[0]);
            continue;
        }
        if (t.r > 2) throw CapabilityError(t.r);
        int d = t.degree();
        bool twist = t.word[0][0] != 0;
        for (int n = 0; n <= x.top_dim; ++n) {
            for (int id = 0; id < x.count(n); ++id) {
                int parity = 0;
                for (const TensorTerm& w : cup_i_coproduct(x, d, n, id).terms) {
                    const CBasis& f = w.factors[twist ? 1 : 0];
                    const CBasis& g = w.factors[twist ? 0 : 1];
                    if (args[0].count({f.degree, f.id}) &&
                        args[1].count({g.degree, g.id}))
                        ++parity;
                }
                if (parity % 2) out = coch_add(std::move(out), {{n, id}});
            }
        }
    }
    return out;
}

Tens2 tens2_add(Tens2 a, const Tens2& b) {
    for (const auto& p : b) {
        auto it = a.find(p);
        if (it == a.end()) a.insert(p);
        else a.erase(it);
    }
    return a;
}

Tens2 tens2_coboundary(const simp::SimplicialSet& x, const simp::SimplicialSet& y,
                       const Tens2& u) {
    Tens2 out;
    for (const auto& [a, b] : u) {
        for (const auto& da : coch_coboundary(x, {a}))
            out = tens2_add(std::move(out), {{da, b}});
        for (const auto& db : coch_coboundary(y, {b}))
            out = tens2_add(std::move(out), {{a, db}});
    }
    return out;
}

Tens2 tensor_algebra_operation(const simp::SimplicialSet& x,
                               const simp::SimplicialSet& y,
                               const op::OperadElement& rho,
                               const std::vector<Tens2>& args) {
    Tens2 out;
    int r = rho.r;
    // expand multilinearly over the terms of each argument
    std::vector<Tens2::const_iterator> pick(r);
    for (const op::PermTuple& t : rho.terms) {
        auto expand = [&](auto&& self, int slot) -> void {
            if (slot == r) {
                std::vector<Coch> as(r), bs(r);
                for (int j = 0; j < r; ++j) {
                    as[j] = {pick[j]->first};
                    bs[j] = {pick[j]->second};
                }
                for (const auto& [t1, t2] : op::diagonal(op::make_element(r, {t}))) {
                    Coch a2 = cochain_operation(x, op::make_element(r, {t1}), as);
                    Coch b2 = cochain_operation(y, op::make_element(r, {t2}), bs);
                    for (const auto& a : a2)
                        for (const auto& b : b2)
                            out = tens2_add(std::move(out), {{a, b}});
                }
                return;
            }
            for (auto it = args[slot].begin(); it != args[slot].end(); ++it) {
                pick[slot] = it;
                self(self, slot + 1);
            }
        };
        expand(expand, 0);
    }
    return out;
}

std::set<int> shuffle_image(const simp::Product& pr, const CBasis& a, const CBasis& b) {
    int p = a.degree, q = b.degree, n = p + q;
    std::set<int> out;
    // choose the q positions where the second factor moves
    std::vector<int> sel;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)sel.size() == q) {
            simp::ProductCell cell;
            cell.x.base_dim = p;
            cell.x.base_id = a.id;
            cell.x.degeneracies = {sel.rbegin(), sel.rend()};
            cell.y.base_dim = q;
            cell.y.base_id = b.id;
            for (int i = n - 1; i >= 0; --i)
                if (!std::binary_search(sel.begin(), sel.end(), i))
                    cell.y.degeneracies.push_back(i);
            out.insert(pr.cell_id(n, cell));
            return;
        }
        for (int i = from; i <= n - (q - (int)sel.size()); ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Tens2 shuffle_map(const simp::Product& pr, const simp::SimplicialSet& x,
                  const simp::SimplicialSet& y, const Coch& u) {
    Tens2 out;
    for (int p = 0; p <= x.top_dim; ++p)
        for (int ida = 0; ida < x.count(p); ++ida)
            for (int q = 0; q <= y.top_dim; ++q)
                for (int idb = 0; idb < y.count(q); ++idb) {
                    if (p + q > pr.space.top_dim) continue;
                    int parity = 0;
                    for (int cid : shuffle_image(pr, CBasis{p, ida}, CBasis{q, idb}))
                        if (u.count({p + q, cid})) ++parity;
                    if (parity % 2)
                        out = tens2_add(std::move(out), {{{p, ida}, {q, idb}}});
                }
    return out;
}

Tens2 aw_product(const simp::Product& pr, const simp::SimplicialSet& x,
                 const simp::SimplicialSet& y, int dim, int id) {
    Tens2 out;
    const simp::ProductCell& cell = pr.cells[dim][id];
    for (int k = 0; k <= dim; ++k) {
        std::vector<int> front(k + 1), back(dim - k + 1);
        std::iota(front.begin(), front.end(), 0);
        std::iota(back.begin(), back.end(), k);
        simp::SimplexRef f = simp::vertex_face(x, cell.x, front);
        simp::SimplexRef g = simp::vertex_face(y, cell.y, back);
        if (f.nondeg() && g.nondeg())
            out = tens2_add(std::move(out),
                            {{{f.base_dim, f.base_id}, {g.base_dim, g.base_id}}});
    }
    return out;
}

std::optional<ShuffleWitness> shuffle_witness(const simp::Product& pr,
                                              const simp::SimplicialSet& x,
                                              const simp::SimplicialSet& y,
                                              int max_i, int max_deg) {
    // precompute shuffle images of all homogeneous cochains up to max_deg
    std::vector<std::vector<Coch>> coch_by_deg(max_deg + 1);
    std::vector<std::vector<Tens2>> shuf_by_deg(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d) {
        int n = pr.space.count(d);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Coch u;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1) u.insert({d, j});
            coch_by_deg[d].push_back(u);
            shuf_by_deg[d].push_back(shuffle_map(pr, x, y, u));
        }
    }
    for (int i = 0; i <= max_i; ++i) {
        op::OperadElement th = op::theta(i);
        for (int du = 0; du <= max_deg; ++du)
            for (int dv = 0; dv <= max_deg; ++dv)
                for (size_t iu = 0; iu < coch_by_deg[du].size(); ++iu)
                    for (size_t iv = 0; iv < coch_by_deg[dv].size(); ++iv) {
                        const Coch& u = coch_by_deg[du][iu];
                        const Coch& v = coch_by_deg[dv][iv];
                        Tens2 lhs = shuffle_map(
                            pr, x, y, cochain_operation(pr.space, th, {u, v}));
                        Tens2 rhs = tensor_algebra_operation(
                            x, y, th, {shuf_by_deg[du][iu], shuf_by_deg[dv][iv]});
                        if (lhs != rhs)
                            return ShuffleWitness{i, u, v, lhs, rhs};
                    }
    }
    return std::nullopt;
}

HomElement<Coch> hom_algebra_operation(const CoalgebraHandle& k,
                                       const simp::SimplicialSet& target,
                                       const op::OperadElement& rho,
                                       const std::vector<HomElement<Coch>>& us) {
    return hom_algebra_operation<Coch>(
        k, rho, us,
        [&](const op::OperadElement& r, const std::vector<Coch>& args) {
            return cochain_operation(target, r, args);
        },
        [](Coch& acc, Coch e) { acc = coch_add(std::move(acc), e); });
}

HomElement<Coch> hom_differential(const CoalgebraHandle& k,
                                  const simp::SimplicialSet& target,
                                  const HomElement<Coch>& u) {
    HomElement<Coch> out;
    for (const CBasis& c : k.basis()) {
        Coch acc;
        auto it = u.find(c);
        if (it != u.end()) acc = coch_coboundary(target, it->second);
        for (const CBasis& b : k.boundary(c)) {
            auto jt = u.find(b);
            if (jt != u.end()) acc = coch_add(std::move(acc), jt->second);
        }
        if (!acc.empty()) out[c] = acc;
    }
    return out;
}

} // namespace ea::coa
