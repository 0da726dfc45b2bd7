#include <doctest.h>

#include <random>

#include "jl/genus0.hpp"
#include "jl/goldman.hpp"
#include "jl/johnson.hpp"
#include "jl/serialize.hpp"

using namespace jl;

namespace {
std::mt19937 rng(31337);

CyclicPoly random_cyclic(const Alphabet& a, int wmax) {
    std::uniform_int_distribution<int> coef(-6, 6);
    CyclicPoly c(a);
    for (int w = 0; w <= wmax; ++w)
        for (auto& word : necklace_basis(a, w)) {
            int x = coef(rng);
            Rat q(x, 3);
            q.canonicalize();
            if (x % 2 == 0) c.add_term(word, q);
        }
    return c;
}
}  // namespace

TEST_CASE("tensor and cyclic round trips are bit exact") {
    Alphabet a = Alphabet::symplectic(2);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> letter(0, 3);
    TensorPoly t(a);
    for (int i = 0; i < 12; ++i) {
        Word w;
        for (int k = 0; k < i % 5; ++k) w += static_cast<char>(letter(rng));
        Rat c(coef(rng), 1 + i);
        c.canonicalize();
        t.add_term(w, c);
    }
    CHECK(tensor_from_json(tensor_to_json(t)) == t);

    CyclicPoly c = random_cyclic(a, 4);
    CHECK(cyclic_from_json(cyclic_to_json(c)) == c);

    // serialized text is stable
    CHECK(tensor_to_json(t).dump() == tensor_to_json(tensor_from_json(tensor_to_json(t))).dump());
}

TEST_CASE("boundary words with e0 are expanded at parse time") {
    Alphabet b = Alphabet::boundary(3);
    Json j = alphabet_to_json(b);
    j["terms"] = Json::array({Json{{"coef", "1"}, {"word", Json::array({"e0"})}}});
    TensorPoly t = tensor_from_json(j);
    TensorPoly expect(b);
    expect.add_term(Word(1, 0), -1);
    expect.add_term(Word(1, 1), -1);
    CHECK(t == expect);
    // no stored word mentions the eliminated letter: names round trip
    for (auto& term : tensor_to_json(t).at("terms"))
        for (auto& l : term.at("word")) CHECK(l.get<std::string>() != "e0");
}

TEST_CASE("lie poly round trip") {
    Alphabet a = Alphabet::symplectic(2);
    LiePoly p(a);
    for (auto& w : lyndon_words(4, 3)) p.add_term(w, Rat(-7, 2));
    CHECK(lie_from_json(lie_to_json(p)) == p);
}

TEST_CASE("cyclic pair round trip") {
    Alphabet a = Alphabet::symplectic(1);
    Alphabet a2 = Alphabet::symplectic(2);
    CyclicPair p = turaev_cobracket(CyclicPoly::necklace(a2, Word{"\x00\x02\x01\x03", 4}));
    CHECK(!p.is_zero());
    CHECK(pair_from_json(pair_to_json(p)) == p);
}

TEST_CASE("derivation round trips, both kinds") {
    Alphabet a = Alphabet::symplectic(2);
    ThetaDerivation lie_d = tau1(a, 0, 1, 2);
    ThetaDerivation back = derivation_from_json(derivation_to_json(lie_d));
    CHECK(back.kind() == DerKind::Lie);
    CHECK((back - lie_d).is_zero());

    ThetaDerivation ten_d = kk_derivation(CyclicPoly::necklace(a, Word{"\x00\x02\x01", 3}));
    ThetaDerivation back2 = derivation_from_json(derivation_to_json(ten_d));
    CHECK(back2.kind() == DerKind::Tensor);
    CHECK((back2 - ten_d).is_zero());
}

TEST_CASE("special derivation round trip keeps base and components") {
    SpecialDer0 s = ejk_generator(4, 1, 2);
    SpecialDer0 back = sder_from_json(sder_to_json(s));
    CHECK(back.base() == s.base());
    CHECK(back.punctures() == s.punctures());
    for (int j = 1; j < 4; ++j) CHECK(back.component(j) == s.component(j));
    SpecialDer0 sig = sigma_polylog(1);
    SpecialDer0 back2 = sder_from_json(sder_to_json(sig));
    CHECK(back2.base() == 1);
    CHECK(back2.component(0) == sig.component(0));
}

TEST_CASE("framing and rep element round trips") {
    FramingData f{2, {1, 0}, {3, -2}, {{"curve", 5}}};
    FramingData back = framing_from_json(framing_to_json(f));
    CHECK(back.genus == f.genus);
    CHECK(back.rot_a == f.rot_a);
    CHECK(back.rot_b == f.rot_b);
    CHECK(back.scc == f.scc);

    RepElement r{{{2, 2}, 1}, {{1, 1}, 3}, {{}, 2}, {{3, 1}, -2}};
    CHECK(rep_from_json(rep_to_json(r)) == r);
}

TEST_CASE("unicode minus in a coefficient is rejected with a location") {
    Alphabet a = Alphabet::symplectic(1);
    Json j = alphabet_to_json(a);
    j["terms"] = Json::array({Json{{"coef", "\xE2\x88\x92"
                                            "3/2"},
                                   {"word", Json::array({"a1"})}}});
    CHECK_THROWS_AS(tensor_from_json(j), ParseError);
    try {
        tensor_from_json(j);
    } catch (const ParseError& e) {
        CHECK(e.position == 0);
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}
