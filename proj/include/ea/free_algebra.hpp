#ifndef EA_FREE_ALGEBRA_HPP
#define EA_FREE_ALGEBRA_HPP

#include "ea/operad.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ea::fa {

/// Generator of a free or almost-free algebra; upper degree, may be <= 0.
struct Generator {
    std::string name;
    int degree = 0;
    std::set<int> internal_diff;  // F2 image among generator indices

    auto operator<=>(const Generator&) const = default;
};

/// Canonical coinvariant term: tuple with identity leading entry, generator
/// indices as arguments.  Arity 1 with the unit tuple is a bare generator.
struct FreeTerm {
    op::PermTuple tuple;
    std::vector<int> args;

    auto operator<=>(const FreeTerm&) const = default;
};

struct FreeElement {
    std::set<FreeTerm> terms;

    bool zero() const { return terms.empty(); }
    void toggle(const FreeTerm& t);
    bool operator==(const FreeElement&) const = default;
};

/// Presentation (V, h) of an almost-free algebra; h twists the differential.
struct AlmostFreeAlgebra {
    std::vector<Generator> generators;
    std::map<int, FreeElement> h;  // generator index -> degree +1 element
    bool suspended = false;        // carrier is the suspension Lambda*E(V)

    int index_of(const std::string& name) const;
};

// Orbit representative with identity leading permutation; empty for
// degenerate tuples.
std::optional<FreeTerm> canonicalize(const op::PermTuple& t,
                                     const std::vector<int>& args);

FreeElement generator_element(int index);
FreeElement term_element(const op::PermTuple& t, const std::vector<int>& args);

// Upper degree of a term over the given presentation (suspension adds r-1).
int term_degree(const AlmostFreeAlgebra& f, const FreeTerm& t);

// Evaluation product: compose on the operad side, concatenate and
// canonicalize arguments; multilinear.
FreeElement evaluate(const op::OperadElement& rho,
                     const std::vector<FreeElement>& args);

// The derivation extending h: sum over slot insertions.
FreeElement derivation_apply(const AlmostFreeAlgebra& f, const FreeElement& e);

// Operad differential + internal generator differential + the h-derivation.
FreeElement full_differential(const AlmostFreeAlgebra& f, const FreeElement& e);

// F_n: generators e^n and b^{n-1} with h(b) = e + theta_n(e, e).
AlmostFreeAlgebra mandell_model(int n);

// Adjoin new generators with attaching maps (degree +1, old generators only).
AlmostFreeAlgebra cell_extension(const AlmostFreeAlgebra& f,
                                 const std::vector<Generator>& new_gens,
                                 const std::map<std::string, FreeElement>& attach);

// All canonical terms of upper degree m with arity <= arity_cap and operad
// degree <= opdeg_cap; deterministic order.  Generators must have positive
// degree.
std::vector<FreeTerm> enumerate_graded_basis(const AlmostFreeAlgebra& f, int m,
                                             int arity_cap, int opdeg_cap);

struct DSquaredReport {
    bool ok = true;
    std::optional<FreeTerm> witness;
};

// full_differential twice on all generators and on all basis terms with
// degrees in [lo, hi] under the caps.
DSquaredReport check_d_squared(const AlmostFreeAlgebra& f, int lo, int hi,
                               int arity_cap, int opdeg_cap);

// Text format: "e", "12|21(e,e)", sums joined with " + ", zero = "0".
std::string to_text(const AlmostFreeAlgebra& f, const FreeElement& e);
FreeElement element_from_text(const AlmostFreeAlgebra& f, const std::string& s);

// Presentation JSON: {"generators":[{"name","degree"}], "h":{name: text}}.
std::string to_json(const AlmostFreeAlgebra& f);
AlmostFreeAlgebra algebra_from_json(const std::string& text);

} // namespace ea::fa

#endif
