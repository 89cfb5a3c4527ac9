#ifndef EA_OPERAD_HPP
#define EA_OPERAD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ea::op {

// Permutation of {0..r-1} in one-line notation: p[i] = image of i.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int r);
Perm perm_tau();                       // the transposition in arity 2
Perm perm_mul(const Perm& a, const Perm& b);   // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& p);

/// Basis simplex: a (d+1)-tuple of permutations of {1..r}; nondegenerate
/// when adjacent entries differ.
struct PermTuple {
    int r = 1;
    std::vector<Perm> word;  // length = degree + 1

    int degree() const { return (int)word.size() - 1; }
    bool nondegenerate() const;

    auto operator<=>(const PermTuple&) const = default;
};

/// F2 sum of basis tuples of a common arity.  `suspended` marks elements of
/// the operadic suspension, where a term of operad degree d and arity r sits
/// in lower degree d - (r - 1).
struct OperadElement {
    int r = 1;
    bool suspended = false;
    std::set<PermTuple> terms;

    bool zero() const { return terms.empty(); }
    void toggle(const PermTuple& t);   // F2 add, dropping degenerates

    bool operator==(const OperadElement&) const = default;
};

OperadElement make_element(int r, std::vector<PermTuple> ts, bool suspended = false);

OperadElement theta(int d);            // (id, tau, id, ...) in E(2)
OperadElement tau_theta(int d);        // tau acting on theta(d)
OperadElement operad_unit();           // the point of E(1)
OperadElement eta();                   // the point of E(0)

OperadElement differential(const OperadElement& e);

// Diagonal Sigma_r action, normalized so that in free-algebra coinvariants
// (act(w,rho))(v_1,...,v_r) = rho(v_{w(1)},...,v_{w(r)}).  Left action.
OperadElement act(const Perm& w, const OperadElement& e);

// Plain right translation of every entry; appears in the equivariance law of
// compose together with block_perm.
OperadElement act_right(const Perm& w, const OperadElement& e);

// Prefix/suffix coproduct; degenerate factors dropped.
std::set<std::pair<PermTuple, PermTuple>> diagonal(const OperadElement& e);

// Chain-level composition: multi-factor shuffle + levelwise substitution.
OperadElement compose(const OperadElement& rho, const std::vector<OperadElement>& sigma);

// Insertion at one slot (1-based); units elsewhere.
OperadElement partial_compose(const OperadElement& rho, int slot, const OperadElement& sigma);

// Levelwise block substitution w(u_1,...,u_r) of permutations.
Perm perm_substitute(const Perm& w, const std::vector<Perm>& us);

// Block permutation of w against the given block sizes.
Perm block_perm(const Perm& w, const std::vector<int>& sizes);

// 1 iff degree = r-1 and the first-column values exhaust {1..r}.
bool epsilon(const PermTuple& t);

// Cap product with the epsilon cocycle; lands in the suspension.
OperadElement cap_epsilon(const OperadElement& e);

// r! (r!-1)^d
unsigned long long basis_count(int r, int d);
std::vector<PermTuple> enumerate_basis(int r, int d);

// Streams every nondegenerate degree-d tuple without materializing the list.
void for_each_basis(int r, int d, const std::function<void(const PermTuple&)>& fn);

// Text format: entries as one-line words ("12|21"), sums joined by "+".
std::string to_text(const PermTuple& t);
std::string to_text(const OperadElement& e);
PermTuple tuple_from_text(const std::string& s, int r);
OperadElement element_from_text(const std::string& s, int r);

// d^2 = 0 on every basis tuple with arity <= r_max, degree <= d_max;
// enumeration runs threaded over an id encoding of the tuples.
bool check_d_squared_all(int r_max, int d_max);

} // namespace ea::op

#endif
