#include "ea/free_algebra.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ea::fa {

namespace op = ea::op;

void FreeElement::toggle(const FreeTerm& t) {
    auto it = terms.find(t);
    if (it == terms.end()) terms.insert(t);
    else terms.erase(it);
}

int AlmostFreeAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return (int)i;
    throw std::invalid_argument("unknown generator: " + name);
}

std::optional<FreeTerm> canonicalize(const op::PermTuple& t,
                                     const std::vector<int>& args) {
    if ((int)args.size() != t.r)
        throw std::invalid_argument("argument count does not match arity");
    if (!t.nondegenerate()) return std::nullopt;
    op::Perm w0inv = op::perm_inverse(t.word[0]);
    FreeTerm out;
    out.tuple.r = t.r;
    for (const op::Perm& w : t.word)
        out.tuple.word.push_back(op::perm_mul(w, w0inv));
    out.args.resize(t.r);
    for (int p = 0; p < t.r; ++p) out.args[p] = args[w0inv[p]];
    return out;
}

namespace {

op::PermTuple unit_tuple() {
    op::PermTuple t;
    t.r = 1;
    t.word = {op::Perm{0}};
    return t;
}

op::PermTuple single(const op::OperadElement& e) { return *e.terms.begin(); }

} // namespace

FreeElement generator_element(int index) {
    FreeElement e;
    e.toggle(FreeTerm{unit_tuple(), {index}});
    return e;
}

FreeElement term_element(const op::PermTuple& t, const std::vector<int>& args) {
    FreeElement e;
    if (auto c = canonicalize(t, args)) e.toggle(*c);
    return e;
}

int term_degree(const AlmostFreeAlgebra& f, const FreeTerm& t) {
    int deg = -t.tuple.degree();
    for (int a : t.args) deg += f.generators[a].degree;
    if (f.suspended) deg += t.tuple.r - 1;
    return deg;
}

FreeElement evaluate(const op::OperadElement& rho,
                     const std::vector<FreeElement>& args) {
    if ((int)args.size() != rho.r)
        throw std::invalid_argument("argument count does not match arity");
    FreeElement out;
    std::vector<const FreeTerm*> pick(rho.r);
    for (const op::PermTuple& t : rho.terms) {
        auto rec = [&](auto&& self, int slot) -> void {
            if (slot == rho.r) {
                std::vector<op::OperadElement> sig;
                std::vector<int> cat;
                for (int i = 0; i < rho.r; ++i) {
                    sig.push_back(op::make_element(pick[i]->tuple.r, {pick[i]->tuple}));
                    cat.insert(cat.end(), pick[i]->args.begin(), pick[i]->args.end());
                }
                op::OperadElement comp =
                    op::compose(op::make_element(rho.r, {t}), sig);
                for (const op::PermTuple& u : comp.terms)
                    if (auto c = canonicalize(u, cat)) out.toggle(*c);
                return;
            }
            for (const FreeTerm& ft : args[slot].terms) {
                pick[slot] = &ft;
                self(self, slot + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

FreeElement derivation_apply(const AlmostFreeAlgebra& f, const FreeElement& e) {
    FreeElement out;
    for (const FreeTerm& t : e.terms) {
        for (int i = 0; i < t.tuple.r; ++i) {
            auto it = f.h.find(t.args[i]);
            if (it == f.h.end() || it->second.zero()) continue;
            std::vector<FreeElement> vs;
            for (int j = 0; j < t.tuple.r; ++j)
                vs.push_back(j == i ? it->second : generator_element(t.args[j]));
            for (const FreeTerm& u :
                 evaluate(op::make_element(t.tuple.r, {t.tuple}), vs).terms)
                out.toggle(u);
        }
    }
    return out;
}

FreeElement full_differential(const AlmostFreeAlgebra& f, const FreeElement& e) {
    FreeElement out;
    for (const FreeTerm& t : e.terms) {
        for (const op::PermTuple& u :
             op::differential(op::make_element(t.tuple.r, {t.tuple})).terms)
            if (auto c = canonicalize(u, t.args)) out.toggle(*c);
        for (int i = 0; i < t.tuple.r; ++i)
            for (int j : f.generators[t.args[i]].internal_diff) {
                std::vector<int> args = t.args;
                args[i] = j;
                if (auto c = canonicalize(t.tuple, args)) out.toggle(*c);
            }
    }
    for (const FreeTerm& u : derivation_apply(f, e).terms) out.toggle(u);
    return out;
}

AlmostFreeAlgebra mandell_model(int n) {
    if (n < 1) throw std::invalid_argument("mandell_model requires n >= 1");
    AlmostFreeAlgebra f;
    f.generators.push_back({"e", n, {}});
    f.generators.push_back({"b", n - 1, {}});
    FreeElement hb = generator_element(0);
    hb.toggle(*canonicalize(single(op::theta(n)), {0, 0}));
    f.h[1] = hb;
    return f;
}

AlmostFreeAlgebra cell_extension(const AlmostFreeAlgebra& f,
                                 const std::vector<Generator>& new_gens,
                                 const std::map<std::string, FreeElement>& attach) {
    AlmostFreeAlgebra out = f;
    int old = (int)f.generators.size();
    for (const Generator& g : new_gens) {
        int idx = (int)out.generators.size();
        out.generators.push_back(g);
        auto it = attach.find(g.name);
        if (it == attach.end() || it->second.zero()) continue;
        for (const FreeTerm& t : it->second.terms) {
            for (int a : t.args)
                if (a >= old)
                    throw std::invalid_argument(
                        "attaching map must land in the old generators");
            if (term_degree(f, t) != g.degree + 1)
                throw std::invalid_argument("attaching map degree mismatch");
        }
        out.h[idx] = it->second;
    }
    return out;
}

std::vector<FreeTerm> enumerate_graded_basis(const AlmostFreeAlgebra& f, int m,
                                             int arity_cap, int opdeg_cap) {
    for (const Generator& g : f.generators)
        if (g.degree <= 0)
            throw std::invalid_argument(
                "graded enumeration requires generators of positive degree");
    std::vector<FreeTerm> out;
    for (int r = 1; r <= arity_cap; ++r) {
        for (int d = 0; d <= opdeg_cap; ++d) {
            int target = m + d - (f.suspended ? r - 1 : 0);
            if (target < r) continue;  // every generator has degree >= 1
            std::vector<op::PermTuple> tuples;
            for (const op::PermTuple& t : op::enumerate_basis(r, d))
                if (t.word[0] == op::perm_identity(r)) tuples.push_back(t);
            if (tuples.empty()) continue;
            std::vector<int> args;
            auto rec = [&](auto&& self, int left) -> void {
                if ((int)args.size() == r) {
                    if (left != 0) return;
                    for (const op::PermTuple& t : tuples)
                        out.push_back(FreeTerm{t, args});
                    return;
                }
                for (size_t g = 0; g < f.generators.size(); ++g) {
                    if (f.generators[g].degree > left) continue;
                    args.push_back((int)g);
                    self(self, left - f.generators[g].degree);
                    args.pop_back();
                }
            };
            rec(rec, target);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DSquaredReport check_d_squared(const AlmostFreeAlgebra& f, int lo, int hi,
                               int arity_cap, int opdeg_cap) {
    auto square = [&](const FreeTerm& t) {
        FreeElement e;
        e.toggle(t);
        return full_differential(f, full_differential(f, e)).zero();
    };
    for (size_t i = 0; i < f.generators.size(); ++i) {
        FreeTerm t{unit_tuple(), {(int)i}};
        if (!square(t)) return {false, t};
    }
    // enumerate directly: the caps keep this finite even with generators of
    // degree <= 0 (divided presentations), unlike enumerate_graded_basis
    DSquaredReport rep{true, std::nullopt};
    for (int r = 2; r <= arity_cap && rep.ok; ++r)
        for (int d = 0; d <= opdeg_cap && rep.ok; ++d)
            for (const op::PermTuple& t : op::enumerate_basis(r, d)) {
                if (!(t.word[0] == op::perm_identity(r))) continue;
                std::vector<int> args(r, 0);
                while (rep.ok) {
                    FreeTerm ft{t, args};
                    int m = term_degree(f, ft);
                    if (m >= lo && m <= hi && !square(ft)) rep = {false, ft};
                    int i = 0;
                    for (; i < r; ++i) {
                        if (++args[i] < (int)f.generators.size()) break;
                        args[i] = 0;
                    }
                    if (i == r) break;
                }
                if (!rep.ok) break;
            }
    return rep;
}

std::string to_text(const AlmostFreeAlgebra& f, const FreeElement& e) {
    if (e.zero()) return "0";
    std::string s;
    for (const FreeTerm& t : e.terms) {
        if (!s.empty()) s += " + ";
        if (t.tuple.r == 1 && t.tuple.degree() == 0) {
            s += f.generators[t.args[0]].name;
            continue;
        }
        s += op::to_text(t.tuple) + "(";
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) s += ",";
            s += f.generators[t.args[i]].name;
        }
        s += ")";
    }
    return s;
}

FreeElement element_from_text(const AlmostFreeAlgebra& f, const std::string& s) {
    FreeElement out;
    auto trim = [](std::string w) {
        size_t a = w.find_first_not_of(" \t");
        size_t b = w.find_last_not_of(" \t");
        return a == std::string::npos ? std::string{} : w.substr(a, b - a + 1);
    };
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string piece = trim(s.substr(pos, plus == std::string::npos
                                                   ? std::string::npos
                                                   : plus - pos));
        pos = plus == std::string::npos ? s.size() + 1 : plus + 1;
        if (piece.empty() || piece == "0") continue;
        size_t par = piece.find('(');
        if (par == std::string::npos) {
            out.toggle(FreeTerm{unit_tuple(), {f.index_of(piece)}});
            continue;
        }
        if (piece.back() != ')')
            throw std::invalid_argument("malformed term: " + piece);
        std::string tup = trim(piece.substr(0, par));
        std::string inner = piece.substr(par + 1, piece.size() - par - 2);
        std::vector<int> args;
        size_t q = 0;
        while (q <= inner.size()) {
            size_t comma = inner.find(',', q);
            std::string name = trim(inner.substr(
                q, comma == std::string::npos ? std::string::npos : comma - q));
            q = comma == std::string::npos ? inner.size() + 1 : comma + 1;
            if (!name.empty()) args.push_back(f.index_of(name));
        }
        op::PermTuple t = op::tuple_from_text(tup, (int)args.size());
        if (auto c = canonicalize(t, args)) out.toggle(*c);
    }
    return out;
}

std::string to_json(const AlmostFreeAlgebra& f) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const Generator& g : f.generators) {
        nlohmann::json jg{{"name", g.name}, {"degree", g.degree}};
        if (!g.internal_diff.empty()) {
            nlohmann::json d = nlohmann::json::array();
            for (int i : g.internal_diff) d.push_back(f.generators[i].name);
            jg["internal_diff"] = d;
        }
        j["generators"].push_back(jg);
    }
    j["h"] = nlohmann::json::object();
    for (const auto& [i, e] : f.h)
        j["h"][f.generators[i].name] = to_text(f, e);
    if (f.suspended) j["suspended"] = true;
    return j.dump(2);
}

AlmostFreeAlgebra algebra_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AlmostFreeAlgebra f;
    for (const auto& jg : j.at("generators"))
        f.generators.push_back(
            {jg.at("name").get<std::string>(), jg.at("degree").get<int>(), {}});
    for (const auto& jg : j.at("generators")) {
        if (!jg.contains("internal_diff")) continue;
        int idx = f.index_of(jg.at("name").get<std::string>());
        for (const auto& n : jg.at("internal_diff"))
            f.generators[idx].internal_diff.insert(
                f.index_of(n.get<std::string>()));
    }
    if (j.contains("h"))
        for (const auto& [name, val] : j.at("h").items())
            f.h[f.index_of(name)] =
                element_from_text(f, val.get<std::string>());
    if (j.contains("suspended")) f.suspended = j.at("suspended").get<bool>();
    return f;
}

} // namespace ea::fa
