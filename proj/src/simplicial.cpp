#include "ea/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ea::simp {

SimplexRef nondeg_ref(int dim, int id) {
    SimplexRef r;
    r.base_dim = dim;
    r.base_id = id;
    return r;
}

int SimplicialSet::id_of(int d, const std::string& name) const {
    const auto& v = names[d];
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] == name) return i;
    throw std::invalid_argument("unknown simplex name: " + name);
}

SimplexRef degeneracy_of(const SimplexRef& s, int j) {
    SimplexRef out = s;
    int carry = j;
    std::size_t idx = 0;
    // push s_carry inward past larger letters: s_i s_j = s_{j+1} s_i (i <= j)
    for (; idx < out.degeneracies.size(); ++idx) {
        if (carry > out.degeneracies[idx]) break;
        out.degeneracies[idx] += 1;
    }
    out.degeneracies.insert(out.degeneracies.begin() + idx, carry);
    return out;
}

SimplexRef face_of(const SimplicialSet& x, const SimplexRef& s, int i) {
    std::vector<int> outer;  // letters that commuted past the face
    int fi = i;
    std::size_t k = 0;
    for (; k < s.degeneracies.size(); ++k) {
        int j = s.degeneracies[k];
        if (fi == j || fi == j + 1) {
            // d_i s_j = id: remaining word survives unchanged
            SimplexRef out;
            out.base_dim = s.base_dim;
            out.base_id = s.base_id;
            out.degeneracies.assign(s.degeneracies.begin() + k + 1, s.degeneracies.end());
            for (auto it = outer.rbegin(); it != outer.rend(); ++it)
                out = degeneracy_of(out, *it);
            return out;
        }
        if (fi < j) outer.push_back(j - 1);
        else { outer.push_back(j); fi -= 1; }
    }
    if (s.base_dim == 0)
        throw std::invalid_argument("face of a 0-simplex");
    SimplexRef out = x.face[s.base_dim][s.base_id][fi];
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        out = degeneracy_of(out, *it);
    return out;
}

SimplexRef vertex_face(const SimplicialSet& x, const SimplexRef& s,
                       const std::vector<int>& keep) {
    SimplexRef out = s;
    for (int i = s.dim(); i >= 0; --i)
        if (!std::binary_search(keep.begin(), keep.end(), i))
            out = face_of(x, out, i);
    return out;
}

bool check_identities(const SimplicialSet& x) {
    for (int d = 2; d <= x.top_dim; ++d) {
        for (int id = 0; id < x.count(d); ++id) {
            SimplexRef s = nondeg_ref(d, id);
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i)
                    if (face_of(x, face_of(x, s, j), i) !=
                        face_of(x, face_of(x, s, i), j - 1))
                        return false;
        }
    }
    return true;
}

namespace {

std::string subset_name(const std::vector<int>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

SimplicialSet simplex_like(int n, bool with_top) {
    SimplicialSet x;
    x.top_dim = with_top ? n : n - 1;
    std::vector<std::vector<std::vector<int>>> cells(x.top_dim + 1);
    for (int d = 0; d <= x.top_dim; ++d)
        subsets_of_size(n, d + 1, cells[d]);
    x.names.resize(x.top_dim + 1);
    x.face.resize(x.top_dim + 1);
    std::map<std::vector<int>, int> idx;
    for (int d = 0; d <= x.top_dim; ++d)
        for (int i = 0; i < (int)cells[d].size(); ++i) {
            x.names[d].push_back(subset_name(cells[d][i]));
            idx[cells[d][i]] = i;
        }
    for (int d = 1; d <= x.top_dim; ++d) {
        x.face[d].resize(cells[d].size());
        for (int i = 0; i < (int)cells[d].size(); ++i)
            for (int f = 0; f <= d; ++f) {
                std::vector<int> sub = cells[d][i];
                sub.erase(sub.begin() + f);
                x.face[d][i].push_back(nondeg_ref(d - 1, idx[sub]));
            }
    }
    return x;
}

} // namespace

SimplicialSet standard_simplex(int n) { return simplex_like(n, true); }
SimplicialSet boundary_simplex(int n) {
    if (n < 1) throw std::invalid_argument("boundary of a point is empty");
    return simplex_like(n, false);
}

SimplicialSet sphere(int n) {
    SimplicialSet x;
    if (n == 0) {
        x.top_dim = 0;
        x.names = {{"pt+", "pt-"}};
        x.face.resize(1);
        return x;
    }
    x.top_dim = n;
    x.names.resize(n + 1);
    x.face.resize(n + 1);
    x.names[0] = {"pt"};
    x.names[n].push_back(n == 0 ? "pt" : "e" + std::to_string(n));
    SimplexRef collapsed;  // totally degenerate basepoint in dim n-1
    collapsed.base_dim = 0;
    collapsed.base_id = 0;
    for (int j = n - 2; j >= 0; --j) collapsed.degeneracies.push_back(j);
    x.face[n].resize(1);
    for (int i = 0; i <= n; ++i) x.face[n][0].push_back(collapsed);
    return x;
}

SimplicialSet nerve_z2(int d_max) {
    SimplicialSet x;
    x.top_dim = d_max;
    x.names.resize(d_max + 1);
    x.face.resize(d_max + 1);
    for (int d = 0; d <= d_max; ++d)
        x.names[d] = {"g" + std::to_string(d)};
    for (int d = 1; d <= d_max; ++d) {
        x.face[d].resize(1);
        for (int i = 0; i <= d; ++i) {
            if (i == 0 || i == d) {
                x.face[d][0].push_back(nondeg_ref(d - 1, 0));
            } else {
                // multiplying the two adjacent generators gives the identity
                SimplexRef r = nondeg_ref(d - 2, 0);
                r = degeneracy_of(r, i - 1);
                x.face[d][0].push_back(r);
            }
        }
    }
    return x;
}

std::pair<std::vector<int>, ProductCell>
joint_normalize(const SimplicialSet& x, const SimplicialSet& y,
                SimplexRef u, SimplexRef v) {
    std::vector<int> extracted;
    bool changed = true;
    while (changed && u.dim() > 0) {
        changed = false;
        for (int k = u.dim() - 1; k >= 0; --k) {
            SimplexRef du = face_of(x, u, k);
            SimplexRef dv = face_of(y, v, k);
            if (degeneracy_of(du, k) == u && degeneracy_of(dv, k) == v) {
                extracted.push_back(k);
                u = du;
                v = dv;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> word;
    SimplexRef acc;  // assemble the normal form of the extracted composite
    acc.base_dim = u.dim();
    for (auto it = extracted.rbegin(); it != extracted.rend(); ++it)
        acc = degeneracy_of(acc, *it);
    word = acc.degeneracies;
    return {word, ProductCell{u, v}};
}

int Product::cell_id(int d, const ProductCell& c) const {
    const auto& v = cells[d];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || !(*it == c))
        throw std::invalid_argument("product cell not found");
    return (int)(it - v.begin());
}

namespace {

std::string ref_name(const SimplicialSet& x, const SimplexRef& r) {
    std::string s;
    for (int j : r.degeneracies) s += "s" + std::to_string(j);
    if (!s.empty()) s += ".";
    return s + x.names[r.base_dim][r.base_id];
}

} // namespace

Product product(const SimplicialSet& x, const SimplicialSet& y) {
    Product pr;
    int top = x.top_dim + y.top_dim;
    pr.space.top_dim = top;
    pr.space.names.resize(top + 1);
    pr.space.face.resize(top + 1);
    pr.cells.resize(top + 1);

    for (int n = 0; n <= top; ++n) {
        std::vector<ProductCell> cs;
        for (int p = 0; p <= std::min(n, x.top_dim); ++p) {
            for (int q = 0; q <= std::min(n, y.top_dim); ++q) {
                if (p + q < n) continue;
                std::vector<std::vector<int>> is;
                subsets_of_size(n - 1, n - p, is);
                for (const auto& I : is) {
                    std::vector<std::vector<int>> js;
                    std::vector<int> comp;
                    for (int v = 0; v <= n - 1; ++v)
                        if (!std::binary_search(I.begin(), I.end(), v))
                            comp.push_back(v);
                    // J runs over (n-q)-subsets of the complement of I
                    std::vector<std::vector<int>> jsub;
                    subsets_of_size((int)comp.size() - 1, n - q, jsub);
                    for (const auto& sel : jsub) {
                        std::vector<int> J;
                        for (int s : sel) J.push_back(comp[s]);
                        for (int a = 0; a < (int)x.names[p].size(); ++a)
                            for (int b = 0; b < (int)y.names[q].size(); ++b) {
                                ProductCell c;
                                c.x = nondeg_ref(p, a);
                                c.x.degeneracies.assign(I.rbegin(), I.rend());
                                c.y = nondeg_ref(q, b);
                                c.y.degeneracies.assign(J.rbegin(), J.rend());
                                cs.push_back(c);
                            }
                    }
                }
            }
        }
        std::sort(cs.begin(), cs.end());
        pr.cells[n] = std::move(cs);
        for (const ProductCell& c : pr.cells[n])
            pr.space.names[n].push_back("(" + ref_name(x, c.x) + "," + ref_name(y, c.y) + ")");
    }
    for (int n = 1; n <= top; ++n) {
        pr.space.face[n].resize(pr.cells[n].size());
        for (int id = 0; id < (int)pr.cells[n].size(); ++id) {
            const ProductCell& c = pr.cells[n][id];
            for (int i = 0; i <= n; ++i) {
                auto [word, cell] = joint_normalize(x, y, face_of(x, c.x, i),
                                                    face_of(y, c.y, i));
                SimplexRef f;
                f.degeneracies = word;
                f.base_dim = n - 1 - (int)word.size();
                f.base_id = pr.cell_id(f.base_dim, cell);
                pr.space.face[n][id].push_back(f);
            }
        }
    }
    return pr;
}

void ChainElement::toggle(int id) {
    auto it = support.find(id);
    if (it == support.end()) support.insert(id);
    else support.erase(it);
}

void CochainElement::toggle(int id) {
    auto it = support.find(id);
    if (it == support.end()) support.insert(id);
    else support.erase(it);
}

gf2::Matrix boundary_matrix(const SimplicialSet& x, int n) {
    gf2::Matrix m(x.count(n - 1), x.count(n));
    if (n < 1 || n > x.top_dim) return m;
    for (int id = 0; id < x.count(n); ++id)
        for (int i = 0; i <= n; ++i) {
            const SimplexRef& f = x.face[n][id][i];
            if (f.nondeg()) m.flip(f.base_id, id);
        }
    return m;
}

gf2::Matrix coboundary_matrix(const SimplicialSet& x, int n) {
    return boundary_matrix(x, n + 1).transpose();
}

ChainElement boundary(const SimplicialSet& x, const ChainElement& c) {
    ChainElement out;
    out.degree = c.degree - 1;
    if (c.degree < 1 || c.degree > x.top_dim) return out;
    for (int id : c.support)
        for (int i = 0; i <= c.degree; ++i) {
            const SimplexRef& f = x.face[c.degree][id][i];
            if (f.nondeg()) out.toggle(f.base_id);
        }
    return out;
}

CochainElement coboundary(const SimplicialSet& x, const CochainElement& u) {
    CochainElement out;
    out.degree = u.degree + 1;
    int n = u.degree + 1;
    if (n < 1 || n > x.top_dim) return out;
    for (int id = 0; id < x.count(n); ++id) {
        int parity = 0;
        for (int i = 0; i <= n; ++i) {
            const SimplexRef& f = x.face[n][id][i];
            if (f.nondeg() && u.support.count(f.base_id)) parity ^= 1;
        }
        if (parity) out.toggle(id);
    }
    return out;
}

namespace {

std::vector<GradedPiece> graded_pieces(int lo, int hi,
                                       const std::function<gf2::Matrix(int)>& d_out,
                                       const std::function<gf2::Matrix(int)>& d_in) {
    std::vector<GradedPiece> out;
    for (int d = lo; d <= hi; ++d) {
        auto [rk_out, cycles] = gf2::rank_kernel(d_out(d));
        gf2::SubspaceBasis bnd = gf2::column_space(d_in(d));
        gf2::SubspaceBasis reps = gf2::quotient_basis(cycles, bnd);
        GradedPiece p;
        p.degree = d;
        p.dim = cycles.dim() - bnd.dim();
        p.representatives = reps.vecs;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

std::vector<GradedPiece> homology(const SimplicialSet& x, int lo, int hi) {
    return graded_pieces(lo, hi,
        [&](int d) { return boundary_matrix(x, d); },
        [&](int d) { return boundary_matrix(x, d + 1); });
}

std::vector<GradedPiece> cohomology(const SimplicialSet& x, int lo, int hi) {
    return graded_pieces(lo, hi,
        [&](int d) { return coboundary_matrix(x, d); },
        [&](int d) { return d == 0 ? gf2::Matrix(x.count(0), 0)
                                   : coboundary_matrix(x, d - 1); });
}

SimplexRef SimplicialMap::apply(const SimplexRef& s) const {
    auto it = image.find({s.base_dim, s.base_id});
    if (it == image.end())
        throw std::invalid_argument("simplicial map not defined on a simplex");
    SimplexRef out = it->second;
    for (auto jt = s.degeneracies.rbegin(); jt != s.degeneracies.rend(); ++jt)
        out = degeneracy_of(out, *jt);
    return out;
}

bool is_simplicial(const SimplicialMap& f) {
    for (int d = 1; d <= f.from->top_dim; ++d)
        for (int id = 0; id < f.from->count(d); ++id) {
            SimplexRef s = nondeg_ref(d, id);
            for (int i = 0; i <= d; ++i)
                if (f.apply(face_of(*f.from, s, i)) !=
                    face_of(*f.to, f.apply(s), i))
                    return false;
        }
    return true;
}

gf2::Matrix chain_map_matrix(const SimplicialMap& f, int n) {
    gf2::Matrix m(f.to->count(n), f.from->count(n));
    for (int id = 0; id < f.from->count(n); ++id) {
        SimplexRef im = f.apply(nondeg_ref(n, id));
        if (im.nondeg()) m.flip(im.base_id, id);
    }
    return m;
}

SimplicialMap circle_quotient(const SimplicialSet& interval, const SimplicialSet& circle) {
    SimplicialMap f;
    f.from = &interval;
    f.to = &circle;
    f.image[{0, 0}] = nondeg_ref(0, 0);
    f.image[{0, 1}] = nondeg_ref(0, 0);
    f.image[{1, 0}] = nondeg_ref(1, 0);
    return f;
}

std::string to_json(const SimplicialSet& x) {
    nlohmann::json j;
    j["top_dim"] = x.top_dim;
    j["nondegenerate"] = x.names;
    nlohmann::json faces = nlohmann::json::object();
    for (int d = 1; d <= x.top_dim; ++d)
        for (int id = 0; id < x.count(d); ++id)
            for (int i = 0; i <= d; ++i) {
                const SimplexRef& f = x.face[d][id][i];
                std::string key = std::to_string(d) + "/" + x.names[d][id] + "/" +
                                  std::to_string(i);
                faces[key] = {{"degeneracies", f.degeneracies},
                              {"base", x.names[f.base_dim][f.base_id]}};
            }
    j["faces"] = faces;
    return j.dump(2);
}

SimplicialSet from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SimplicialSet x;
    x.top_dim = j.at("top_dim").get<int>();
    x.names = j.at("nondegenerate").get<std::vector<std::vector<std::string>>>();
    if ((int)x.names.size() != x.top_dim + 1)
        throw std::invalid_argument("nondegenerate array does not match top_dim");
    x.face.resize(x.top_dim + 1);
    for (int d = 1; d <= x.top_dim; ++d)
        x.face[d].resize(x.count(d));
    for (int d = 1; d <= x.top_dim; ++d)
        for (int id = 0; id < x.count(d); ++id)
            for (int i = 0; i <= d; ++i) {
                std::string key = std::to_string(d) + "/" + x.names[d][id] + "/" +
                                  std::to_string(i);
                const auto& e = j.at("faces").at(key);
                SimplexRef f;
                f.degeneracies = e.at("degeneracies").get<std::vector<int>>();
                int bd = d - 1 - (int)f.degeneracies.size();
                f.base_dim = bd;
                f.base_id = x.id_of(bd, e.at("base").get<std::string>());
                x.face[d][id].push_back(f);
            }
    return x;
}

} // namespace ea::simp
