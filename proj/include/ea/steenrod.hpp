#ifndef EA_STEENROD_HPP
#define EA_STEENROD_HPP

#include "ea/coaction.hpp"
#include "ea/gf2.hpp"
#include "ea/simplicial.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ea::st {

/// Composition of integer-indexed Steenrod operations, leftmost applied last.
struct SqMonomial {
    std::vector<int> indices;

    int length() const { return (int)indices.size(); }
    int degree() const;

    auto operator<=>(const SqMonomial&) const = default;
};

// Every adjacent pair satisfies i_j >= 2 i_{j+1}.
bool admissible(const SqMonomial& m);
// Reading right to left from gen_degree, every index stays <= the current
// degree (the unstability condition).
bool unstable_ok(const SqMonomial& m, int gen_degree);
// C(a, b) mod 2 by Lucas; zero when b < 0 or b > a.
bool binomial_odd(long long a, long long b);

/// F2 sum of monomials in the big Steenrod algebra B.
struct BigSteenrodElement {
    std::set<SqMonomial> terms;

    void toggle(const SqMonomial& m);
    bool zero() const { return terms.empty(); }
    bool operator==(const BigSteenrodElement&) const = default;
};

// Admissible-basis expansion: rewrite the leftmost inadmissible pair by
// Sq^i Sq^j = sum_k C(j-k-1, i-2k) Sq^{i+j-k} Sq^k, i-j+1 <= k <= i/2.
BigSteenrodElement adem_normalize(const SqMonomial& m);
BigSteenrodElement adem_normalize(const BigSteenrodElement& e);
// A = B/B(1+Sq^0): erase Sq^0 factors, kill negative indices.
BigSteenrodElement project_to_classical(const BigSteenrodElement& e);

std::string to_text(const SqMonomial& m);
std::string to_text(const BigSteenrodElement& e);
SqMonomial monomial_from_text(const std::string& text);

/// Cohomology class in the chosen basis of H^degree.
struct CohClass {
    int degree = 0;
    gf2::BitVec coeffs;

    bool zero() const { return coeffs.none(); }
    bool operator==(const CohClass&) const = default;
};

/// Mod-2 cohomology of a finite simplicial set with a fixed basis per degree
/// and cached reduction of cocycles to the basis.
class Cohomology {
public:
    explicit Cohomology(const simp::SimplicialSet& x);

    const simp::SimplicialSet& space() const { return *x_; }
    int top() const { return x_->top_dim; }
    int dim(int d) const;
    CohClass zero_class(int d) const;
    CohClass basis_class(int d, int k) const;
    coa::Coch representative(const CohClass& c) const;
    // Express a cocycle's class in the basis; throws on non-cocycles.
    CohClass reduce(int degree, const coa::Coch& u) const;

private:
    const simp::SimplicialSet* x_;
    std::vector<simp::GradedPiece> pieces_;
    mutable std::vector<std::optional<gf2::Solver>> solvers_;
};

CohClass coh_add(CohClass a, const CohClass& b);
CohClass cup(const Cohomology& h, const CohClass& a, const CohClass& b);

// Class of theta_{n-i}(rep, rep) on a degree-n class; zero for i > n.
CohClass sq_on_cohomology(const Cohomology& h, int i, const CohClass& c);
// Right-to-left chain-level application of every index, Sq^0 and negative
// indices included.
CohClass sq_monomial_on_cohomology(const Cohomology& h, const SqMonomial& m,
                                   const CohClass& c);

/// Free unstable module presentation: B- or A-coefficients over a list of
/// graded generators.
struct UnstableModule {
    bool classical = false;
    std::vector<int> gen_degrees;
    std::vector<std::string> gen_names;
};

struct UnstableTerm {
    SqMonomial op;
    int gen = 0;

    auto operator<=>(const UnstableTerm&) const = default;
};

struct UnstableElement {
    std::set<UnstableTerm> terms;

    void toggle(const UnstableTerm& t);
    bool zero() const { return terms.empty(); }
    bool operator==(const UnstableElement&) const = default;
};

int term_degree(const UnstableModule& m, const UnstableTerm& t);
UnstableModule be_module(int n, bool classical);
// Adem rewriting, the unstability quotient, and on A-side modules the
// classical projection.
UnstableElement normalize(const UnstableModule& m, const UnstableElement& e);
std::string to_text(const UnstableModule& m, const UnstableElement& e);

// Admissible unstable monomial basis in total degrees [lo, hi]; B-side
// windows require a length cap (pass length_cap = -1 for "none").
std::vector<UnstableTerm> unstable_basis(const UnstableModule& m, int lo,
                                         int hi, int length_cap);
// Dims of U(m): polynomial algebra on the admissible generators of excess
// below the generator degree.  A-side, positive generator degrees only.
std::vector<int> u_poincare_series(const UnstableModule& m, int cap);

/// Right action of the Steenrod operations on H_*, as transposes of the
/// cohomological matrices; c.Sq^l lowers homological degree by l.
struct HomologySteenrodAction {
    std::vector<int> dims;                           // dim H_m
    std::map<std::pair<int, int>, gf2::Matrix> sq;   // (l, m) -> matrix on H_m

    gf2::BitVec act(int l, int m, const gf2::BitVec& c) const;
};

HomologySteenrodAction homology_action(const Cohomology& h, int max_degree);

/// B(e^n (x) H_*(x)) together with its classical quotient and the homological
/// action; generator e^n (x) c has degree n - deg(c).
struct ModuleContext {
    int n = 0;
    UnstableModule big;
    UnstableModule quotient;                // A-side, same generators
    std::vector<std::pair<int, int>> gens;  // generator -> (H_* degree, index)
    HomologySteenrodAction action;

    int gen_index(int hdeg, int idx) const;
};

ModuleContext module_context(const Cohomology& h, int n);

// g(e^n (x) c) = (1+Sq^0)(e^n (x) c) + sum_{l>=1} Sq^{-l}(e^n (x) c.Sq^l),
// extended B-linearly.
UnstableElement g_apply(const ModuleContext& ctx, const UnstableElement& z);
// r with r(g(z)) = z: r_0 splitting of (1+Sq^0) plus recursion on the
// homological degree of the generator.
UnstableElement retraction_apply(const ModuleContext& ctx, const UnstableElement& z);
// pi onto A(e^n (x) H_*(x)); pi(g(z)) = 0.
UnstableElement cokernel_project(const ModuleContext& ctx, const UnstableElement& z);

// Dims of U(A(e^n (x) H_*(x))); requires dim x < n.
std::vector<int> mapping_space_series(const simp::SimplicialSet& x, int n, int cap);

} // namespace ea::st

#endif
