#include "ea/division.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ea::dv {

namespace op = ea::op;
namespace fa = ea::fa;
namespace coa = ea::coa;
namespace simp = ea::simp;

GenMorphism identity_morphism(const fa::AlmostFreeAlgebra& f) {
    GenMorphism m;
    m.from = &f;
    m.to = &f;
    for (size_t i = 0; i < f.generators.size(); ++i)
        m.image[(int)i] = fa::generator_element((int)i);
    return m;
}

fa::FreeElement morphism_apply(const GenMorphism& m, const fa::FreeElement& e) {
    fa::FreeElement out;
    for (const fa::FreeTerm& t : e.terms) {
        std::vector<fa::FreeElement> args;
        for (int a : t.args) args.push_back(m.image.at(a));
        for (const fa::FreeTerm& u :
             fa::evaluate(op::make_element(t.tuple.r, {t.tuple}), args).terms)
            out.toggle(u);
    }
    return out;
}

GenMorphism compose_morphisms(const GenMorphism& g, const GenMorphism& f) {
    GenMorphism m;
    m.from = f.from;
    m.to = g.to;
    for (const auto& [i, e] : f.image) m.image[i] = morphism_apply(g, e);
    return m;
}

int Division::index(int base, const coa::CBasis& c) const {
    for (size_t i = 0; i < source.size(); ++i)
        if (source[i].first == base && source[i].second == c) return (int)i;
    throw std::invalid_argument("no such divided generator");
}

namespace {

// transport one term rho(v_1,...,v_r) through -(/)K at the chain c:
// sum over Delta(rho) of rho_(2)(v_j (x) c_(j)) with rho_(1)* applied to c
fa::FreeElement transport_term(const fa::FreeTerm& t, const coa::CBasis& c,
                               const coa::CoalgebraHandle& k, const Division& d) {
    fa::FreeElement out;
    if (t.tuple.r > k.capability()) throw coa::CapabilityError(t.tuple.r);
    for (const auto& [t1, t2] :
         op::diagonal(op::make_element(t.tuple.r, {t.tuple}))) {
        for (const coa::TensorTerm& w : k.co_operate(t1, c).terms) {
            std::vector<int> args(t.tuple.r);
            for (int j = 0; j < t.tuple.r; ++j)
                args[j] = d.index(t.args[j], w.factors[j]);
            if (auto cn = fa::canonicalize(t2, args)) out.toggle(*cn);
        }
    }
    return out;
}

fa::FreeElement transport_element(const fa::FreeElement& e, const coa::CBasis& c,
                                  const coa::CoalgebraHandle& k, const Division& d) {
    fa::FreeElement out;
    for (const fa::FreeTerm& t : e.terms)
        for (const fa::FreeTerm& u : transport_term(t, c, k, d).terms) out.toggle(u);
    return out;
}

} // namespace

Division divide_almost_free(const fa::AlmostFreeAlgebra& f,
                            const coa::CoalgebraHandle& k) {
    Division d;
    d.algebra.suspended = f.suspended;
    std::vector<coa::CBasis> kb = k.basis();
    for (size_t i = 0; i < f.generators.size(); ++i)
        for (const coa::CBasis& c : kb) {
            d.source.push_back({(int)i, c});
            d.algebra.generators.push_back(
                {f.generators[i].name + "*" + k.name(c),
                 f.generators[i].degree - c.degree,
                 {}});
        }
    // internal differential: dv (x) c + v (x) dc
    for (size_t u = 0; u < d.source.size(); ++u) {
        auto [i, c] = d.source[u];
        for (int j : f.generators[i].internal_diff)
            d.algebra.generators[u].internal_diff.insert(d.index(j, c));
        for (const coa::CBasis& b : k.boundary(c)) {
            int v = d.index(i, b);
            auto& diff = d.algebra.generators[u].internal_diff;
            if (diff.count(v)) diff.erase(v);
            else diff.insert(v);
        }
    }
    for (const auto& [i, e] : f.h)
        for (size_t u = 0; u < d.source.size(); ++u) {
            if (d.source[u].first != i) continue;
            fa::FreeElement h = transport_element(e, d.source[u].second, k, d);
            if (!h.zero()) d.algebra.h[(int)u] = h;
        }
    return d;
}

GenMorphism divide_morphism(const GenMorphism& m, const coa::CoalgebraHandle& k,
                            const Division& dfrom, const Division& dto) {
    GenMorphism out;
    out.from = &dfrom.algebra;
    out.to = &dto.algebra;
    for (size_t u = 0; u < dfrom.source.size(); ++u) {
        auto [i, c] = dfrom.source[u];
        out.image[(int)u] = transport_element(m.image.at(i), c, k, dto);
    }
    return out;
}

fa::AlmostFreeAlgebra loop_model(const fa::AlmostFreeAlgebra& f) {
    for (const fa::Generator& g : f.generators)
        if (g.degree <= 0)
            throw std::invalid_argument(
                "loop model requires a reduced presentation with generators of "
                "positive degree");
    fa::AlmostFreeAlgebra out = f;
    out.suspended = true;
    out.h.clear();
    for (const auto& [i, e] : f.h) {
        fa::FreeElement he;
        for (const fa::FreeTerm& t : e.terms)
            for (const op::PermTuple& u :
                 op::cap_epsilon(op::make_element(t.tuple.r, {t.tuple})).terms)
                if (auto c = fa::canonicalize(u, t.args)) he.toggle(*c);
        if (!he.zero()) out.h[i] = he;
    }
    return out;
}

fa::FreeElement suspension_algebra_operation(const op::OperadElement& rho,
                                             const std::vector<fa::FreeElement>& args) {
    op::OperadElement cap = op::cap_epsilon(rho);
    op::OperadElement plain = op::make_element(cap.r, {});
    for (const op::PermTuple& t : cap.terms) plain.toggle(t);
    return fa::evaluate(plain, args);
}

AdjunctionReport adjunction_check(const fa::AlmostFreeAlgebra& f,
                                  const coa::CoalgebraHandle& k,
                                  const simp::SimplicialSet& b, int samples,
                                  unsigned seed) {
    AdjunctionReport rep;
    rep.samples = samples;
    Division d = divide_almost_free(f, k);
    std::vector<coa::CBasis> kb = k.basis();

    std::vector<std::pair<int, int>> bbasis;
    for (int n = 0; n <= b.top_dim; ++n)
        for (int id = 0; id < b.count(n); ++id) bbasis.push_back({n, id});
    std::mt19937 rng(seed);

    auto phi_eval = [&](const std::map<int, coa::Coch>& phi,
                        const fa::FreeElement& e) {
        coa::Coch acc;
        for (const fa::FreeTerm& t : e.terms) {
            std::vector<coa::Coch> args;
            for (int a : t.args) {
                auto it = phi.find(a);
                args.push_back(it == phi.end() ? coa::Coch{} : it->second);
            }
            acc = coa::coch_add(
                std::move(acc),
                coa::cochain_operation(
                    b, op::make_element(t.tuple.r, {t.tuple}), args));
        }
        return acc;
    };
    auto hom_eval = [&](const std::map<int, coa::HomElement<coa::Coch>>& psi,
                        const fa::FreeElement& e) {
        coa::HomElement<coa::Coch> acc;
        for (const fa::FreeTerm& t : e.terms) {
            std::vector<coa::HomElement<coa::Coch>> args;
            for (int a : t.args) {
                auto it = psi.find(a);
                args.push_back(it == psi.end() ? coa::HomElement<coa::Coch>{}
                                               : it->second);
            }
            for (const auto& [c, val] : coa::hom_algebra_operation(
                     k, b, op::make_element(t.tuple.r, {t.tuple}), args)) {
                coa::Coch merged = coa::coch_add(
                    acc.count(c) ? acc.at(c) : coa::Coch{}, val);
                if (merged.empty()) acc.erase(c);
                else acc[c] = merged;
            }
        }
        return acc;
    };

    for (int s = 0; s < samples; ++s) {
        // random generator-level map F(/)K -> N*(B)
        std::map<int, coa::Coch> phi;
        for (size_t u = 0; u < d.source.size(); ++u) {
            coa::Coch val;
            for (const auto& p : bbasis)
                if (rng() % 2) val.insert(p);
            if (!val.empty()) phi[(int)u] = val;
        }

        // transpose to F -> Hom(K, N*(B)) and back
        std::map<int, coa::HomElement<coa::Coch>> psi;
        for (size_t i = 0; i < f.generators.size(); ++i)
            for (const coa::CBasis& c : kb) {
                auto it = phi.find(d.index((int)i, c));
                if (it != phi.end()) psi[(int)i][c] = it->second;
            }
        std::map<int, coa::Coch> back;
        for (const auto& [i, u] : psi)
            for (const auto& [c, val] : u)
                if (!val.empty()) back[d.index(i, c)] = val;
        if (back != phi) rep.round_trip_ok = false;

        // residuals of the morphism condition on both sides must correspond
        for (size_t i = 0; i < f.generators.size(); ++i) {
            fa::FreeElement gen = fa::generator_element((int)i);
            coa::HomElement<coa::Coch> res_hom =
                coa::hom_differential(k, b, psi.count((int)i)
                                                ? psi.at((int)i)
                                                : coa::HomElement<coa::Coch>{});
            for (const auto& [c, val] :
                 hom_eval(psi, fa::full_differential(f, gen))) {
                coa::Coch merged = coa::coch_add(
                    res_hom.count(c) ? res_hom.at(c) : coa::Coch{}, val);
                if (merged.empty()) res_hom.erase(c);
                else res_hom[c] = merged;
            }
            for (const coa::CBasis& c : kb) {
                int u = d.index((int)i, c);
                coa::Coch res_div = coa::coch_coboundary(
                    b, phi.count(u) ? phi.at(u) : coa::Coch{});
                res_div = coa::coch_add(
                    std::move(res_div),
                    phi_eval(phi, fa::full_differential(
                                      d.algebra, fa::generator_element(u))));
                coa::Coch hom_side =
                    res_hom.count(c) ? res_hom.at(c) : coa::Coch{};
                if (res_div != hom_side) rep.differential_ok = false;
            }
        }
    }
    return rep;
}

} // namespace ea::dv
