#include <doctest.h>

#include <random>

#include "jl/goldman.hpp"
#include "jl/lie_poly.hpp"
#include "jl/linalg.hpp"
#include "jl/pbw.hpp"
#include "oracles.hpp"

using namespace jl;

namespace {

std::mt19937 rng(20240817);

LiePoly random_lie(const Alphabet& a, int degree) {
    std::uniform_int_distribution<int> coef(-4, 4);
    LiePoly p(a);
    for (auto& w : lyndon_words(a.size(), degree)) p.add_term(w, coef(rng));
    return p;
}

TensorPoly random_tensor(const Alphabet& a, int degree, int nterms) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> letter(0, a.size() - 1);
    TensorPoly p(a);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        for (int i = 0; i < degree; ++i) w += static_cast<char>(letter(rng));
        p.add_term(w, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("pairing on the symplectic basis") {
    Alphabet a = Alphabet::symplectic(2);
    int a1 = a.letter_index("a1"), b1 = a.letter_index("b1"), a2 = a.letter_index("a2");
    CHECK(a.pairing(a1, b1) == 1);
    CHECK(a.pairing(b1, a1) == -1);
    CHECK(a.pairing(a1, a2) == 0);
    CHECK(a.pairing(a1, a1) == 0);
    CHECK_THROWS_AS(Alphabet::boundary(4).pairing(0, 1), ModelMismatchError);
}

TEST_CASE("boundary alphabet eliminates e0") {
    Alphabet b = Alphabet::boundary(4);
    CHECK(b.size() == 3);
    CHECK(b.letter_name(0) == "e1");
    CHECK(b.letter_index("e0") == -1);
    CHECK(b.letter_index("e3") == 2);
    Alphabet b1 = Alphabet::boundary(3, 1);
    CHECK(b1.letter_name(0) == "e0");
    CHECK(b1.letter_name(1) == "e2");
}

TEST_CASE("lyndon word generation matches the Witt formula oracle") {
    for (int k : {2, 4, 6}) {
        for (int m = 1; m <= (k == 2 ? 8 : 5); ++m) {
            auto words = lyndon_words(k, m);
            CHECK(static_cast<long long>(words.size()) == oracles::witt(k, m));
            CHECK(static_cast<long long>(words.size()) == oracles::lyndon_count_direct(k, m));
            CHECK(static_cast<long long>(words.size()) == witt_dimension(k, m));
            for (auto& w : words) CHECK(is_lyndon(w));
        }
    }
}

TEST_CASE("free Lie dimensions for g=1, degrees 1..6") {
    // 2, 1, 2, 3, 6, 9 from the Witt oracle
    std::vector<long long> expected{2, 1, 2, 3, 6, 9};
    for (int m = 1; m <= 6; ++m) {
        CHECK(oracles::witt(2, m) == expected[static_cast<std::size_t>(m - 1)]);
        CHECK(static_cast<long long>(lyndon_words(2, m).size()) == expected[static_cast<std::size_t>(m - 1)]);
    }
}

TEST_CASE("bracket basics") {
    Alphabet a = Alphabet::symplectic(1);
    LiePoly la = LiePoly::letter(a, 0), lb = LiePoly::letter(a, 1);
    CHECK(lie_bracket(la, la).is_zero());
    TensorPoly t = lie_bracket(la, lb).to_tensor();
    TensorPoly expect(a);
    expect.add_term(Word{"\x00\x01", 2}, 1);
    expect.add_term(Word{"\x01\x00", 2}, -1);
    CHECK(t == expect);
}

TEST_CASE("Lyndon round trip, all degrees <= 8, g <= 3") {
    for (int g : {1, 2, 3}) {
        Alphabet a = Alphabet::symplectic(g);
        int dmax = g == 1 ? 8 : (g == 2 ? 6 : 4);
        for (int d = 1; d <= dmax; ++d) {
            LiePoly p = random_lie(a, d);
            CHECK(LiePoly::from_tensor(p.to_tensor()) == p);
        }
    }
}

TEST_CASE("tensor expansion of Lie elements passes the Dynkin test") {
    Alphabet a = Alphabet::symplectic(2);
    for (int d = 2; d <= 5; ++d) {
        LiePoly p = random_lie(a, d);
        TensorPoly t = p.to_tensor();
        CHECK(oracles::dynkin(t) == t * Rat(d));
    }
}

TEST_CASE("from_tensor rejects non-Lie input") {
    Alphabet a = Alphabet::symplectic(1);
    TensorPoly t(a);
    t.add_term(Word{"\x00\x00", 2}, 1);  // a1 a1 is not a Lie element
    CHECK_THROWS_AS(LiePoly::from_tensor(t), NotLieElementError);
}

TEST_CASE("Jacobi identity on random triples (exact)") {
    for (int g : {1, 2}) {
        Alphabet a = Alphabet::symplectic(g);
        for (int trial = 0; trial < 3; ++trial) {
            LiePoly x = random_lie(a, 2), y = random_lie(a, 3), z = random_lie(a, 4);
            LiePoly jac = lie_bracket(lie_bracket(x, y), z);
            jac += lie_bracket(lie_bracket(y, z), x);
            jac += lie_bracket(lie_bracket(z, x), y);
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("cyclic projection is rotation invariant and kills commutators") {
    Alphabet a = Alphabet::symplectic(2);
    Word w{"\x00\x01\x02", 3};
    CHECK(canonical_rotation(w) == canonical_rotation(Word{"\x02\x00\x01", 3}));
    CyclicPoly p = cyclic_project(TensorPoly::monomial(a, Word{"\x00\x01", 2}, 1));
    CyclicPoly q = cyclic_project(TensorPoly::monomial(a, Word{"\x01\x00", 2}, 1));
    CHECK(p == q);

    for (int trial = 0; trial < 4; ++trial) {
        TensorPoly u = random_tensor(a, 2, 3), v = random_tensor(a, 3, 3);
        CHECK(cyclic_project(commutator(u, v)).is_zero());
    }
    // |[u,v]| = 0 for Lie elements too
    LiePoly x = random_lie(a, 2), y = random_lie(a, 2);
    CHECK(cyclic_project(lie_bracket(x, y).to_tensor()).is_zero());
}

TEST_CASE("necklace dimensions: weight-4 cyclic space at g=1 is 6-dimensional") {
    Alphabet a = Alphabet::symplectic(1);
    CHECK(oracles::necklaces(2, 4) == 6);
    CHECK(static_cast<long long>(necklace_basis(a, 4).size()) == 6);
    for (int n = 0; n <= 8; ++n) {
        CHECK(static_cast<long long>(necklace_basis(a, n).size()) == oracles::necklaces(2, n));
        CHECK(oracles::necklaces_direct(2, n) == oracles::necklaces(2, n));
    }
    Alphabet a2 = Alphabet::symplectic(2);
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(necklace_basis(a2, n).size()) == oracles::necklaces(4, n));
}

TEST_CASE("kernel of cyclic projection is spanned by rotations: rank check") {
    // degree <= 6, g <= 2: dim T_w - dim span{w - rot(w)} = necklace count
    for (int g : {1, 2}) {
        Alphabet a = Alphabet::symplectic(g);
        for (int w = 1; w <= (g == 1 ? 6 : 4); ++w) {
            SparseEchelon<Word> rot_span;
            long long nwords = 1;
            for (int i = 0; i < w; ++i) nwords *= a.size();
            // enumerate all words, insert w - rot(w)
            Word word(static_cast<std::size_t>(w), 0);
            while (true) {
                Word r = word.substr(1) + word.substr(0, 1);
                std::map<Word, Rat> vec;
                if (r != word) {
                    vec[word] += 1;
                    vec[r] -= 1;
                    rot_span.insert(vec);
                }
                int i = w - 1;
                while (i >= 0 && word[static_cast<std::size_t>(i)] == static_cast<char>(a.size() - 1))
                    word[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
                ++word[static_cast<std::size_t>(i)];
            }
            CHECK(nwords - static_cast<long long>(rot_span.rank()) == oracles::necklaces(a.size(), w));
        }
    }
}

TEST_CASE("pbw_symmetrize basics") {
    Alphabet a = Alphabet::symplectic(2);
    CHECK(pbw_symmetrize(a, {}) == TensorPoly::unit(a));
    LiePoly u = random_lie(a, 2);
    CHECK(pbw_symmetrize(a, {u}) == u.to_tensor());

    LiePoly v = random_lie(a, 1), x = random_lie(a, 1), y = random_lie(a, 1);
    TensorPoly uv = pbw_symmetrize(a, {u, v});
    TensorPoly expect = (u.to_tensor() * v.to_tensor() + v.to_tensor() * u.to_tensor()) * Rat(1, 2);
    CHECK(uv == expect);

    // symmetry under permutation of three degree-1 factors
    CHECK(pbw_symmetrize(a, {v, x, y}) == pbw_symmetrize(a, {y, v, x}));
    CHECK(pbw_symmetrize(a, {v, x, y}) == pbw_symmetrize(a, {x, y, v}));
}

TEST_CASE("sym component projection") {
    Alphabet a = Alphabet::symplectic(1);
    SUBCASE("|a1| is its own Sym^1 component") {
        CyclicPoly c = CyclicPoly::necklace(a, Word{"\x00", 1});
        CHECK(sym_component_project(c, 1) == c);
        CHECK(sym_component_project(c, 2).is_zero());
    }
    SUBCASE("cyclic projection of a bracket is zero, so all components vanish") {
        LiePoly br = lie_bracket(LiePoly::letter(a, 0), LiePoly::letter(a, 1));
        CyclicPoly c = cyclic_project(br.to_tensor());
        CHECK(c.is_zero());
        CHECK(sym_component_project(c, 2).is_zero());
    }
}

TEST_CASE("sym components sum to the identity (completeness), g=2 weight 4") {
    Alphabet a = Alphabet::symplectic(2);
    std::uniform_int_distribution<int> coef(-3, 3);
    CyclicPoly c(a);
    for (auto& w : necklace_basis(a, 4)) c.add_term(w, coef(rng));
    auto comps = sym_components(c);
    CyclicPoly sum(a);
    for (auto& comp : comps) sum += comp;
    CHECK(sum == c);
    // components with n > w vanish automatically by construction
}

TEST_CASE("direct-sum property: sum_n dim |Sym^n|_w = dim cyclic_w, w <= 8, g <= 2") {
    for (int g : {1, 2}) {
        Alphabet a = Alphabet::symplectic(g);
        int wmax = g == 1 ? 8 : 6;
        for (int w = 1; w <= wmax; ++w) {
            long long total = 0;
            for (int n = 1; n <= w; ++n) {
                SparseEchelon<Word> ech;
                for (auto& v : sym_space_spanning(a, w, n)) {
                    std::map<Word, Rat> row(v.terms().begin(), v.terms().end());
                    ech.insert(row);
                }
                total += static_cast<long long>(ech.rank());
            }
            CHECK(total == oracles::necklaces(a.size(), w));
        }
    }
}

TEST_CASE("strict rational parser") {
    CHECK(rat_from_string("-3/2") == Rat(-3, 2));
    CHECK(rat_from_string("7") == 7);
    CHECK_THROWS_AS(rat_from_string("\xE2\x88\x92"
                                    "3/2"),
                    ParseError);  // unicode minus
    CHECK_THROWS_AS(rat_from_string("3/"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    try {
        rat_from_string("1x");
    } catch (const ParseError& e) {
        CHECK(e.position == 1);
    }
}
