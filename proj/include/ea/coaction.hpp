#ifndef EA_COACTION_HPP
#define EA_COACTION_HPP

#include "ea/operad.hpp"
#include "ea/simplicial.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ea::coa {

/// Basis chain of a coalgebra carrier, tagged by lower degree.
struct CBasis {
    int degree = 0;
    int id = 0;
    auto operator<=>(const CBasis&) const = default;
};

struct TensorTerm {
    std::vector<CBasis> factors;
    auto operator<=>(const TensorTerm&) const = default;
};

/// F2 sum of elementary tensors of basis chains of one carrier.
struct TensorElement {
    int arity = 1;
    std::set<TensorTerm> terms;

    bool zero() const { return terms.empty(); }
    void toggle(const TensorTerm& t);
    bool operator==(const TensorElement&) const = default;
};

// Alexander-Whitney coproduct of a nondegenerate simplex (degenerate factors
// dropped); equals the i = 0 cup coproduct.
TensorElement aw_coproduct(const simp::SimplicialSet& x, int dim, int id);

// Steenrod's overlapping-interval cup-i coproduct: cut points
// 0 <= a_0 < ... < a_i <= n, even-numbered intervals to the left factor and
// odd-numbered ones to the right.  Orientation is pinned by the boundary
// coherence d theta_i* + theta_i* d = theta_{i-1}* + twist theta_{i-1}*.
TensorElement cup_i_coproduct(const simp::SimplicialSet& x, int i, int dim, int id);

// Tensor differential over chain factors of the carrier.
TensorElement tensor_boundary(const simp::SimplicialSet& x, const TensorElement& e);

// Push a tensor element through a simplicial map (degenerate images dropped).
TensorElement map_tensor(const simp::SimplicialMap& f, const TensorElement& e);

simp::SimplicialMap proj1(const simp::Product& pr, const simp::SimplicialSet& x,
                          const simp::SimplicialSet& y);
simp::SimplicialMap proj2(const simp::Product& pr, const simp::SimplicialSet& x,
                          const simp::SimplicialSet& y);

/// Raised when a co-operation of arity above a handle's capability is asked for.
struct CapabilityError : std::invalid_argument {
    int arity;
    explicit CapabilityError(int r)
        : std::invalid_argument("coalgebra handle does not support arity " +
                                std::to_string(r) +
                                "; restrict operations to the handle capability"),
          arity(r) {}
};

/// Coalgebra carrier exposing a capability-limited family of co-operations.
class CoalgebraHandle {
public:
    virtual ~CoalgebraHandle() = default;
    virtual int capability() const = 0;
    virtual bool reduced() const = 0;
    virtual std::vector<CBasis> basis() const = 0;
    virtual std::string name(const CBasis& c) const = 0;
    virtual std::set<CBasis> boundary(const CBasis& c) const = 0;
    virtual TensorElement co_operate(const op::PermTuple& t, const CBasis& c) const = 0;

    std::optional<CBasis> find(const std::string& name) const;
};

// rho*(c), linear in rho; throws CapabilityError above the handle's arity cap.
TensorElement co_operation(const CoalgebraHandle& k, const op::OperadElement& rho,
                           const CBasis& c);

/// Chains (or reduced chains) of a finite simplicial set; arity <= 2.
class SimplicialHandle : public CoalgebraHandle {
public:
    SimplicialHandle(const simp::SimplicialSet& x, bool reduced,
                     int basepoint_id = 0);
    int capability() const override { return 2; }
    bool reduced() const override { return reduced_; }
    std::vector<CBasis> basis() const override;
    std::string name(const CBasis& c) const override;
    std::set<CBasis> boundary(const CBasis& c) const override;
    TensorElement co_operate(const op::PermTuple& t, const CBasis& c) const override;

    const simp::SimplicialSet& space() const { return *x_; }
    bool is_basepoint(const CBasis& c) const {
        return c.degree == 0 && c.id == basepoint_;
    }

private:
    const simp::SimplicialSet* x_;
    bool reduced_;
    int basepoint_;
};

/// Reduced chains of the circle with the closed-form full-arity coaction
/// rho*(e_1) = epsilon_r(rho) e_1^{(x) r}.
class CircleHandle : public CoalgebraHandle {
public:
    int capability() const override;
    bool reduced() const override { return true; }
    std::vector<CBasis> basis() const override { return {CBasis{1, 0}}; }
    std::string name(const CBasis&) const override { return "e1"; }
    std::set<CBasis> boundary(const CBasis&) const override { return {}; }
    TensorElement co_operate(const op::PermTuple& t, const CBasis& c) const override;
};

/// Cochain with mixed degrees: support set of (degree, simplex id).
using Coch = std::set<std::pair<int, int>>;

Coch coch_add(Coch a, const Coch& b);
Coch coch_coboundary(const simp::SimplicialSet& x, const Coch& u);
// The unit cochain: 1 on every 0-simplex.
Coch unit_cochain(const simp::SimplicialSet& x);

// (rho(u_1,...,u_r))(s) = (u_1 (x) ... (x) u_r)(rho*(s)); arity <= 2.
Coch cochain_operation(const simp::SimplicialSet& x, const op::OperadElement& rho,
                       const std::vector<Coch>& args);

/// Element of N*(X) (x) N*(Y): support set of pairs of (degree, id) cochains.
using Tens2Term = std::pair<std::pair<int, int>, std::pair<int, int>>;
using Tens2 = std::set<Tens2Term>;

Tens2 tens2_add(Tens2 a, const Tens2& b);
Tens2 tens2_coboundary(const simp::SimplicialSet& x, const simp::SimplicialSet& y,
                       const Tens2& u);

// rho(a_1 (x) b_1, ..., a_r (x) b_r) = sum rho_(1)(a...) (x) rho_(2)(b...)
// over the operad coproduct of rho; carriers are N*(x) and N*(y).
Tens2 tensor_algebra_operation(const simp::SimplicialSet& x,
                               const simp::SimplicialSet& y,
                               const op::OperadElement& rho,
                               const std::vector<Tens2>& args);

// Chain-level shuffle image of a (x) b: the C(p+q, q) jointly nondegenerate
// product cells in dimension p + q.
std::set<int> shuffle_image(const simp::Product& pr, const CBasis& a, const CBasis& b);

// Dual of the chain-level shuffle: N*(x * y) -> N*(x) (x) N*(y).
Tens2 shuffle_map(const simp::Product& pr, const simp::SimplicialSet& x,
                  const simp::SimplicialSet& y, const Coch& u);

// Alexander-Whitney map of a product cell, split into the two factors.
Tens2 aw_product(const simp::Product& pr, const simp::SimplicialSet& x,
                 const simp::SimplicialSet& y, int dim, int id);

struct ShuffleWitness {
    int i = 0;              // the failing cup-i operation
    Coch u, v;              // homogeneous cochains on the product
    Tens2 through_shuffle;  // shuffle(theta_i(u, v))
    Tens2 in_tensor;        // theta_i(shuffle u, shuffle v)
};

// Exhaustive search (i ascending, then bidegrees, then support masks) for the
// minimal failing (theta_i, u, v) with deg u, deg v <= max_deg.
std::optional<ShuffleWitness> shuffle_witness(const simp::Product& pr,
                                              const simp::SimplicialSet& x,
                                              const simp::SimplicialSet& y,
                                              int max_i, int max_deg);

/// K -> A morphism recorded on the coalgebra basis.
template <class Elem>
using HomElement = std::map<CBasis, Elem>;

// Convolution-algebra operation on Hom(K, A):
//   rho(u_1,...,u_r)(c) = sum rho_(1)(u_1(c^(1)), ..., u_r(c^(r)))
// over the operad coproduct of rho and rho_(2)*(c).  `apply(rho', args)`
// evaluates an operation in A, `add(acc, e)` accumulates mod 2.
template <class Elem, class Apply, class Add>
HomElement<Elem> hom_algebra_operation(const CoalgebraHandle& k,
                                       const op::OperadElement& rho,
                                       const std::vector<HomElement<Elem>>& us,
                                       Apply&& apply, Add&& add) {
    HomElement<Elem> out;
    for (const CBasis& c : k.basis()) {
        Elem acc{};
        for (const op::PermTuple& t : rho.terms) {
            for (const auto& [t1, t2] : op::diagonal(op::make_element(rho.r, {t}))) {
                TensorElement co = co_operation(k, op::make_element(rho.r, {t2}), c);
                for (const TensorTerm& w : co.terms) {
                    std::vector<Elem> args;
                    args.reserve(w.factors.size());
                    for (size_t j = 0; j < w.factors.size(); ++j) {
                        auto it = us[j].find(w.factors[j]);
                        args.push_back(it == us[j].end() ? Elem{} : it->second);
                    }
                    add(acc, apply(op::make_element(rho.r, {t1}), args));
                }
            }
        }
        if (!(acc == Elem{})) out[c] = acc;
    }
    return out;
}

// Cochain-algebra target N*(Z).
HomElement<Coch> hom_algebra_operation(const CoalgebraHandle& k,
                                       const simp::SimplicialSet& target,
                                       const op::OperadElement& rho,
                                       const std::vector<HomElement<Coch>>& us);

// (du)(c) = delta(u(c)) + u(dc)
HomElement<Coch> hom_differential(const CoalgebraHandle& k,
                                  const simp::SimplicialSet& target,
                                  const HomElement<Coch>& u);

} // namespace ea::coa

#endif
