#ifndef EA_DIVISION_HPP
#define EA_DIVISION_HPP

#include "ea/coaction.hpp"
#include "ea/free_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace ea::dv {

/// Generator-level morphism between free/almost-free presentations.
struct GenMorphism {
    const fa::AlmostFreeAlgebra* from = nullptr;
    const fa::AlmostFreeAlgebra* to = nullptr;
    std::map<int, fa::FreeElement> image;  // generator index -> element of `to`
};

GenMorphism identity_morphism(const fa::AlmostFreeAlgebra& f);
fa::FreeElement morphism_apply(const GenMorphism& m, const fa::FreeElement& e);
GenMorphism compose_morphisms(const GenMorphism& g, const GenMorphism& f);

/// Division F (/) K: presentation on generators v (x) c plus the index map.
struct Division {
    fa::AlmostFreeAlgebra algebra;
    std::vector<std::pair<int, coa::CBasis>> source;  // divided index -> (v, c)

    int index(int base, const coa::CBasis& c) const;
};

// Lemma-2.3.8 transport: generator space V (x) K, internal differential
// v (x) dc (+ dv (x) c), and h(v (x) c) built from Delta(rho) with the prefix
// half co-acting on c.  Throws CapabilityError on unsupported arities.
Division divide_almost_free(const fa::AlmostFreeAlgebra& f,
                            const coa::CoalgebraHandle& k);

// Same transport on a generator-level morphism.
GenMorphism divide_morphism(const GenMorphism& m, const coa::CoalgebraHandle& k,
                            const Division& dfrom, const Division& dto);

// Sigma* Omega* F: same generators, h replaced by cap_epsilon of h, carrier
// flagged as the suspension.
fa::AlmostFreeAlgebra loop_model(const fa::AlmostFreeAlgebra& f);

// rho(Sigma a_1, ..., Sigma a_r) = Sigma (cap_epsilon(rho)(a_1, ..., a_r)).
fa::FreeElement suspension_algebra_operation(const op::OperadElement& rho,
                                             const std::vector<fa::FreeElement>& args);

struct AdjunctionReport {
    bool round_trip_ok = true;
    bool differential_ok = true;
    int samples = 0;
};

// Transport generator-level maps F (/) K -> N*(B) to F -> Hom(K, N*(B)) and
// back; checks the round trip and that the differential residuals of the two
// sides correspond on random samples.
AdjunctionReport adjunction_check(const fa::AlmostFreeAlgebra& f,
                                  const coa::CoalgebraHandle& k,
                                  const simp::SimplicialSet& b, int samples,
                                  unsigned seed);

} // namespace ea::dv

#endif
