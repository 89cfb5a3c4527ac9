#ifndef EA_SIMPLICIAL_HPP
#define EA_SIMPLICIAL_HPP

#include "ea/gf2.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ea::simp {

/// Possibly-degenerate simplex: s_{j_1} ... s_{j_k} base with j_1 > ... > j_k.
struct SimplexRef {
    std::vector<int> degeneracies;
    int base_dim = 0;
    int base_id = 0;

    int dim() const { return base_dim + (int)degeneracies.size(); }
    bool nondeg() const { return degeneracies.empty(); }

    auto operator<=>(const SimplexRef&) const = default;
};

SimplexRef nondeg_ref(int dim, int id);

/// Finite simplicial set presented by nondegenerate simplices and their faces
/// in degeneracy normal form.
struct SimplicialSet {
    int top_dim = 0;
    std::vector<std::vector<std::string>> names;            // per dim
    std::vector<std::vector<std::vector<SimplexRef>>> face; // face[d][id][i], d >= 1

    int count(int d) const {
        return d >= 0 && d <= top_dim ? (int)names[d].size() : 0;
    }
    int id_of(int d, const std::string& name) const;
};

// Face/degeneracy of an arbitrary simplex, in normal form.
SimplexRef face_of(const SimplicialSet& x, const SimplexRef& s, int i);
SimplexRef degeneracy_of(const SimplexRef& s, int j);

// Iterated face keeping exactly the listed vertices (strictly increasing).
SimplexRef vertex_face(const SimplicialSet& x, const SimplexRef& s,
                       const std::vector<int>& keep);

bool check_identities(const SimplicialSet& x);

SimplicialSet standard_simplex(int n);
SimplicialSet boundary_simplex(int n);
SimplicialSet sphere(int n);
SimplicialSet nerve_z2(int d_max);

struct ProductCell {
    SimplexRef x, y;
    auto operator<=>(const ProductCell&) const = default;
};

/// Product simplicial set with the pair decomposition of its cells.
struct Product {
    SimplicialSet space;
    std::vector<std::vector<ProductCell>> cells;  // per dim, parallel to names

    int cell_id(int d, const ProductCell& c) const;
};

Product product(const SimplicialSet& x, const SimplicialSet& y);

// Joint normal form of an equal-dimension pair: common degeneracy word
// (strictly decreasing) plus a jointly nondegenerate pair.
std::pair<std::vector<int>, ProductCell>
joint_normalize(const SimplicialSet& x, const SimplicialSet& y,
                SimplexRef u, SimplexRef v);

/// F2 chain in a fixed degree, supported on nondegenerate simplex ids.
struct ChainElement {
    int degree = 0;
    std::set<int> support;

    void toggle(int id);
    bool zero() const { return support.empty(); }
    bool operator==(const ChainElement&) const = default;
    auto operator<=>(const ChainElement&) const = default;
};

/// F2 cochain in a fixed degree (finite carrier, stored as its support).
struct CochainElement {
    int degree = 0;
    std::set<int> support;

    void toggle(int id);
    bool zero() const { return support.empty(); }
    bool operator==(const CochainElement&) const = default;
    auto operator<=>(const CochainElement&) const = default;
};

// d_n: C_n -> C_{n-1} on normalized chains (degenerate faces dropped).
gf2::Matrix boundary_matrix(const SimplicialSet& x, int n);
// delta^n: C^n -> C^{n+1}, the transpose of d_{n+1}.
gf2::Matrix coboundary_matrix(const SimplicialSet& x, int n);

ChainElement boundary(const SimplicialSet& x, const ChainElement& c);
CochainElement coboundary(const SimplicialSet& x, const CochainElement& u);

struct GradedPiece {
    int degree = 0;
    int dim = 0;
    std::vector<gf2::BitVec> representatives;
};

std::vector<GradedPiece> homology(const SimplicialSet& x, int lo, int hi);
std::vector<GradedPiece> cohomology(const SimplicialSet& x, int lo, int hi);

/// Simplicial map recorded on nondegenerate simplices.
struct SimplicialMap {
    const SimplicialSet* from = nullptr;
    const SimplicialSet* to = nullptr;
    std::map<std::pair<int, int>, SimplexRef> image;  // (dim, id) -> ref

    SimplexRef apply(const SimplexRef& s) const;
};

// Commutes with faces on all nondegenerate simplices.
bool is_simplicial(const SimplicialMap& f);
// Induced matrix on normalized chains in degree n.
gf2::Matrix chain_map_matrix(const SimplicialMap& f, int n);

// The quotient standard_simplex(1) -> sphere(1).
SimplicialMap circle_quotient(const SimplicialSet& interval, const SimplicialSet& circle);

// JSON external format (see to_json for the schema).
std::string to_json(const SimplicialSet& x);
SimplicialSet from_json(const std::string& text);

} // namespace ea::simp

#endif
