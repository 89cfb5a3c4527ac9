#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ea/operad.hpp"

#include <map>
#include <random>

using namespace ea::op;

namespace {

OperadElement random_element(std::mt19937& rng, int r, int dmax, int nterms = 2) {
    OperadElement e;
    e.r = r;
    std::uniform_int_distribution<int> dd(0, dmax);
    for (int i = 0; i < nterms; ++i) {
        int d = r == 1 ? 0 : dd(rng);
        auto basis = enumerate_basis(r, d);
        std::uniform_int_distribution<int> pick(0, (int)basis.size() - 1);
        e.toggle(basis[pick(rng)]);
    }
    return e;
}

OperadElement add(OperadElement a, const OperadElement& b) {
    for (const PermTuple& t : b.terms) a.toggle(t);
    return a;
}

} // namespace

TEST_CASE("theta family and text format") {
    CHECK(to_text(theta(1)) == "12|21");
    CHECK(to_text(theta(0)) == "12");
    CHECK(element_from_text("12|21", 2) == theta(1));
    CHECK(element_from_text("12|21|12 + 21|12|21", 2) == add(theta(2), tau_theta(2)));
    CHECK(element_from_text("0", 2).zero());
    CHECK(element_from_text(to_text(theta(3)), 2) == theta(3));
    CHECK_THROWS_AS(element_from_text("13|21", 2), std::invalid_argument);
    CHECK_THROWS_AS(element_from_text("123", 2), std::invalid_argument);
}

TEST_CASE("degenerate tuples vanish") {
    PermTuple t;
    t.r = 2;
    t.word = {perm_identity(2), perm_identity(2)};
    OperadElement e;
    e.r = 2;
    e.toggle(t);
    CHECK(e.zero());
}

TEST_CASE("differential of theta") {
    CHECK(differential(theta(2)) == add(theta(1), tau_theta(1)));
    CHECK(differential(theta(0)).zero());
    for (int d = 1; d <= 6; ++d)
        CHECK(differential(theta(d)) == add(theta(d - 1), tau_theta(d - 1)));
}

TEST_CASE("diagonal action") {
    for (int d = 0; d <= 4; ++d) {
        OperadElement e = act(perm_tau(), theta(d));
        REQUIRE(e.terms.size() == 1);
        const PermTuple& t = *e.terms.begin();
        for (int i = 0; i <= d; ++i)
            CHECK(t.word[i] == (i % 2 ? perm_identity(2) : perm_tau()));
    }
    std::mt19937 rng(5);
    for (int r = 2; r <= 3; ++r) {
        OperadElement e = random_element(rng, r, 3);
        CHECK(act(perm_identity(r), e) == e);
        Perm w = perm_identity(r);
        std::shuffle(w.begin(), w.end(), rng);
        CHECK(act(perm_inverse(w), act(w, e)) == e);
    }
}

TEST_CASE("diagonal coproduct of theta") {
    for (int d = 0; d <= 6; ++d) {
        std::set<std::pair<PermTuple, PermTuple>> expect;
        for (int k = 0; k <= d; ++k) {
            OperadElement suffix = k % 2 ? tau_theta(d - k) : theta(d - k);
            expect.insert({*theta(k).terms.begin(), *suffix.terms.begin()});
        }
        CHECK(diagonal(theta(d)) == expect);
    }
}

TEST_CASE("diagonal of a degree-0 tuple is grouplike") {
    OperadElement e = element_from_text("231", 3);
    const PermTuple& t = *e.terms.begin();
    std::set<std::pair<PermTuple, PermTuple>> expect{{t, t}};
    CHECK(diagonal(e) == expect);
}

TEST_CASE("diagonal counit and coassociativity") {
    for (int r = 2; r <= 3; ++r) {
        for (int d = 0; d <= 4; ++d) {
            for (const PermTuple& t : enumerate_basis(r, d)) {
                OperadElement e = make_element(r, {t});
                auto delta = diagonal(e);
                // counit: the unique degree-0 prefix (suffix) reproduces t
                OperadElement left, right;
                left.r = right.r = r;
                for (const auto& [a, b] : delta) {
                    if (a.degree() == 0) left.toggle(b);
                    if (b.degree() == 0) right.toggle(a);
                }
                CHECK(left == e);
                CHECK(right == e);
                // coassociativity on triples
                std::map<std::tuple<PermTuple, PermTuple, PermTuple>, int> lhs, rhs;
                for (const auto& [a, b] : delta) {
                    for (const auto& [a1, a2] : diagonal(make_element(r, {a})))
                        lhs[{a1, a2, b}] ^= 1;
                    for (const auto& [b1, b2] : diagonal(make_element(r, {b})))
                        rhs[{a, b1, b2}] ^= 1;
                }
                std::erase_if(lhs, [](auto& kv) { return kv.second == 0; });
                std::erase_if(rhs, [](auto& kv) { return kv.second == 0; });
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("permutation substitution basics") {
    // substituting units reproduces the permutation
    Perm w{2, 0, 1};
    std::vector<Perm> units(3, perm_identity(1));
    CHECK(perm_substitute(w, units) == w);
    // block arithmetic: tau on blocks of sizes (2,1)
    Perm q = perm_substitute(perm_tau(), {perm_identity(2), perm_identity(1)});
    CHECK(q == Perm{1, 2, 0});
}

TEST_CASE("compose unit laws") {
    std::mt19937 rng(17);
    for (int r = 1; r <= 3; ++r) {
        OperadElement e = random_element(rng, r, 3);
        CHECK(compose(operad_unit(), {e}) == e);
        std::vector<OperadElement> units(r, operad_unit());
        CHECK(compose(e, units) == e);
    }
}

TEST_CASE("compose in degree zero is substitution") {
    OperadElement c = compose(theta(0), {theta(0), theta(0)});
    CHECK(c.r == 4);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms.begin()->word[0] == perm_identity(4));
    CHECK(c.terms.begin()->degree() == 0);
}

TEST_CASE("compose of positive-degree factors enumerates shuffles") {
    OperadElement c = compose(theta(1), {theta(1), operad_unit()});
    CHECK(c.r == 3);
    CHECK(c.terms.size() == 2);
    for (const PermTuple& t : c.terms)
        CHECK(t.degree() == 2);
}

TEST_CASE("compose arity mismatch is rejected") {
    CHECK_THROWS_AS(compose(theta(0), {theta(0)}), std::invalid_argument);
}

TEST_CASE("eta deletes a slot") {
    OperadElement c = partial_compose(theta(0), 2, eta());
    CHECK(c.r == 1);
    CHECK(c == make_element(1, {*operad_unit().terms.begin()}));
}

TEST_CASE("partial_compose") {
    std::mt19937 rng(3);
    OperadElement e = random_element(rng, 3, 2);
    for (int i = 1; i <= 3; ++i)
        CHECK(partial_compose(e, i, operad_unit()) == e);
    OperadElement s = random_element(rng, 2, 2);
    CHECK(partial_compose(operad_unit(), 1, s) == s);
    OperadElement c = partial_compose(theta(0), 1, theta(0));
    CHECK(c.r == 3);
    CHECK(c.terms.begin()->word[0] == perm_identity(3));
    CHECK_THROWS_AS(partial_compose(e, 4, s), std::invalid_argument);
}

TEST_CASE("Leibniz rule for compose") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> ar(1, 2);
        int r = ar(rng) + 1;  // 2 or 3
        OperadElement rho = random_element(rng, r, 2, 1);
        std::vector<OperadElement> sigma;
        for (int i = 0; i < r; ++i) sigma.push_back(random_element(rng, ar(rng), 2, 1));

        OperadElement lhs = differential(compose(rho, sigma));
        OperadElement rhs = compose(differential(rho), sigma);
        for (int i = 0; i < r; ++i) {
            auto s = sigma;
            s[i] = differential(s[i]);
            rhs = add(rhs, compose(rho, s));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("equivariance of compose") {
    // compose(act_right(w,rho); s_1..s_r)
    //   = act_right(block_perm(w,sizes), compose(rho; s_{w^{-1}(1)}..))
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 3;
        OperadElement rho = random_element(rng, r, 2, 1);
        std::vector<OperadElement> sigma;
        std::vector<int> sizes;
        std::uniform_int_distribution<int> ar(1, 2);
        for (int i = 0; i < r; ++i) {
            sigma.push_back(random_element(rng, ar(rng), 1, 1));
            sizes.push_back(sigma.back().r);
        }
        Perm w = perm_identity(r);
        std::shuffle(w.begin(), w.end(), rng);
        Perm wi = perm_inverse(w);

        OperadElement lhs = compose(act_right(w, rho), sigma);
        std::vector<OperadElement> permuted;
        for (int i = 0; i < r; ++i) permuted.push_back(sigma[wi[i]]);
        OperadElement rhs = act_right(block_perm(w, sizes), compose(rho, permuted));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compose is associative") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        OperadElement rho = random_element(rng, 2, 1, 1);
        OperadElement a = random_element(rng, 2, 1, 1);
        OperadElement b = random_element(rng, 1, 1, 1);
        OperadElement c = random_element(rng, 2, 1, 1);
        // (rho(a,b)) o (c,1,1) vs rho(a o (c,1), b)
        OperadElement lhs = compose(compose(rho, {a, b}),
                                    {c, operad_unit(), operad_unit()});
        OperadElement rhs = compose(rho, {compose(a, {c, operad_unit()}), b});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("epsilon cocycle values") {
    CHECK(epsilon(*theta(1).terms.begin()));
    CHECK(!epsilon(*theta(0).terms.begin()));
    CHECK(epsilon(*operad_unit().terms.begin()));
    CHECK(!epsilon(*theta(2).terms.begin()));
}

TEST_CASE("epsilon vanishes on boundaries") {
    for (int r = 1; r <= 3; ++r) {
        for_each_basis(r, r, [&](const PermTuple& t) {
            OperadElement b = differential(make_element(r, {t}));
            int parity = 0;
            for (const PermTuple& f : b.terms) parity ^= epsilon(f) ? 1 : 0;
            CHECK(parity == 0);
        });
    }
}

TEST_CASE("cap product with epsilon") {
    for (int d = 1; d <= 5; ++d) {
        OperadElement expect = tau_theta(d - 1);
        expect.suspended = true;
        CHECK(cap_epsilon(theta(d)) == expect);
    }
    CHECK(cap_epsilon(theta(0)).zero());
    OperadElement u = operad_unit();
    u.suspended = true;
    CHECK(cap_epsilon(operad_unit()) == u);
}

TEST_CASE("cap_epsilon is a chain map") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> ar(2, 3);
        OperadElement e = random_element(rng, ar(rng), 4);
        CHECK(cap_epsilon(differential(e)) == differential(cap_epsilon(e)));
    }
}

TEST_CASE("cap_epsilon respects compose") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> ar(1, 2);
        int r = ar(rng);
        OperadElement rho = random_element(rng, r, 3, 1);
        std::vector<OperadElement> sigma;
        for (int i = 0; i < r; ++i) sigma.push_back(random_element(rng, ar(rng), 3, 1));
        std::vector<OperadElement> capped;
        for (const auto& s : sigma) capped.push_back(cap_epsilon(s));
        CHECK(cap_epsilon(compose(rho, sigma)) == compose(cap_epsilon(rho), capped));
    }
}

TEST_CASE("basis counts") {
    for (int d = 0; d <= 5; ++d) CHECK(basis_count(2, d) == 2u);
    CHECK(basis_count(1, 0) == 1u);
    CHECK(basis_count(1, 3) == 0u);
    CHECK(basis_count(3, 2) == 150u);
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            CHECK(enumerate_basis(r, d).size() == basis_count(r, d));
}

TEST_CASE("differential squares to zero") {
    CHECK(check_d_squared_all(3, 4));
    // cross-check the encoded fast path against the generic differential
    for (int r = 2; r <= 3; ++r)
        for (int d = 2; d <= 3; ++d)
            for (const PermTuple& t : enumerate_basis(r, d))
                CHECK(differential(differential(make_element(r, {t}))).zero());
}
