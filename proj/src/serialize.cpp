#include "jl/serialize.hpp"

namespace jl {

Json alphabet_to_json(const Alphabet& a) {
    Json j;
    if (a.is_symplectic()) {
        j["model"] = "symplectic";
        j["genus"] = a.genus();
    } else {
        j["model"] = "boundary";
        j["punctures"] = a.punctures();
        if (a.eliminated_puncture() != 0) j["eliminated"] = a.eliminated_puncture();
    }
    return j;
}

Alphabet alphabet_from_json(const Json& j) {
    std::string model = j.at("model").get<std::string>();
    if (model == "symplectic") return Alphabet::symplectic(j.at("genus").get<int>());
    if (model == "boundary")
        return Alphabet::boundary(j.at("punctures").get<int>(), j.value("eliminated", 0));
    throw ParseError("unknown model '" + model + "'", 0);
}

namespace {

Json word_json(const Alphabet& a, const Word& w) {
    Json arr = Json::array();
    for (unsigned char c : w) arr.push_back(a.letter_name(c));
    return arr;
}

/// Parses a letter list into a tensor monomial, expanding the eliminated
/// boundary letter.
TensorPoly word_poly_from_json(const Alphabet& a, const Json& arr, const Rat& coef) {
    TensorPoly p = TensorPoly::monomial(a, Word{}, coef);
    for (auto& item : arr) {
        int idx = a.letter_index(item.get<std::string>());
        TensorPoly letter(a);
        if (idx >= 0) {
            letter.add_term(Word(1, static_cast<char>(idx)), 1);
        } else {
            for (int l = 0; l < a.size(); ++l) letter.add_term(Word(1, static_cast<char>(l)), -1);
        }
        p = p * letter;
    }
    return p;
}

Json terms_json(const Alphabet& a, const std::vector<std::pair<Word, Rat>>& sorted) {
    Json arr = Json::array();
    for (auto& [w, c] : sorted) {
        Json t;
        t["coef"] = rat_to_string(c);
        t["word"] = word_json(a, w);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

Json tensor_to_json(const TensorPoly& p) {
    Json j = alphabet_to_json(p.alphabet());
    j["terms"] = terms_json(p.alphabet(), p.sorted_terms());
    return j;
}

TensorPoly tensor_from_json(const Json& j) {
    Alphabet a = alphabet_from_json(j);
    TensorPoly p(a);
    for (auto& t : j.at("terms"))
        p += word_poly_from_json(a, t.at("word"), rat_from_string(t.at("coef").get<std::string>()));
    return p;
}

Json lie_to_json(const LiePoly& p) {
    Json j = alphabet_to_json(p.alphabet());
    j["basis"] = "lyndon";
    j["terms"] = terms_json(p.alphabet(), p.sorted_terms());
    return j;
}

LiePoly lie_from_json(const Json& j) {
    Alphabet a = alphabet_from_json(j);
    LiePoly p(a);
    for (auto& t : j.at("terms")) {
        Word w;
        for (auto& item : t.at("word")) {
            int idx = a.letter_index(item.get<std::string>());
            if (idx < 0) throw ParseError("eliminated letter in Lyndon key", 0);
            w += static_cast<char>(idx);
        }
        if (!is_lyndon(w)) throw ParseError("word is not Lyndon: " + word_to_string(a, w), 0);
        p.add_term(w, rat_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

Json cyclic_to_json(const CyclicPoly& p) {
    Json j = alphabet_to_json(p.alphabet());
    j["cyclic"] = true;
    j["terms"] = terms_json(p.alphabet(), p.sorted_terms());
    return j;
}

CyclicPoly cyclic_from_json(const Json& j) {
    Alphabet a = alphabet_from_json(j);
    CyclicPoly p(a);
    for (auto& t : j.at("terms")) {
        TensorPoly mono = word_poly_from_json(a, t.at("word"), rat_from_string(t.at("coef").get<std::string>()));
        p += cyclic_project(mono);
    }
    return p;
}

Json pair_to_json(const CyclicPair& p) {
    Json j = alphabet_to_json(p.alphabet());
    Json arr = Json::array();
    for (auto& [k, c] : p.terms()) {
        Json t;
        t["coef"] = rat_to_string(c);
        t["left"] = word_json(p.alphabet(), k.first);
        t["right"] = word_json(p.alphabet(), k.second);
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

CyclicPair pair_from_json(const Json& j) {
    Alphabet a = alphabet_from_json(j);
    CyclicPair p(a);
    for (auto& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("coef").get<std::string>());
        TensorPoly l = word_poly_from_json(a, t.at("left"), Rat(1));
        TensorPoly r = word_poly_from_json(a, t.at("right"), Rat(1));
        p.add_pair(cyclic_project(l), cyclic_project(r), c);
    }
    return p;
}

Json derivation_to_json(const ThetaDerivation& d) {
    Json j = alphabet_to_json(d.alphabet());
    j["degree"] = d.degree();
    j["kind"] = d.kind() == DerKind::Lie ? "lie" : "tensor";
    Json vals;
    const Alphabet& a = d.alphabet();
    for (int l = 0; l < a.size(); ++l) {
        if (d.kind() == DerKind::Lie)
            vals[a.letter_name(l)] = terms_json(a, d.lie_value(l).sorted_terms());
        else
            vals[a.letter_name(l)] = terms_json(a, d.tensor_value(l).sorted_terms());
    }
    j["values"] = std::move(vals);
    return j;
}

ThetaDerivation derivation_from_json(const Json& j) {
    Alphabet a = alphabet_from_json(j);
    int degree = j.at("degree").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    const Json& vals = j.at("values");
    if (kind == "lie") {
        std::vector<LiePoly> values;
        for (int l = 0; l < a.size(); ++l) {
            LiePoly v(a);
            auto it = vals.find(a.letter_name(l));
            if (it != vals.end()) {
                for (auto& t : *it) {
                    Word w;
                    for (auto& item : t.at("word")) {
                        int idx = a.letter_index(item.get<std::string>());
                        if (idx < 0) throw ParseError("eliminated letter in Lyndon key", 0);
                        w += static_cast<char>(idx);
                    }
                    v.add_term(w, rat_from_string(t.at("coef").get<std::string>()));
                }
            }
            values.push_back(std::move(v));
        }
        return ThetaDerivation::lie_valued(a, degree, std::move(values));
    }
    std::vector<TensorPoly> values;
    for (int l = 0; l < a.size(); ++l) {
        TensorPoly v(a);
        auto it = vals.find(a.letter_name(l));
        if (it != vals.end())
            for (auto& t : *it)
                v += word_poly_from_json(a, t.at("word"), rat_from_string(t.at("coef").get<std::string>()));
        values.push_back(std::move(v));
    }
    return ThetaDerivation::tensor_valued(a, degree, std::move(values));
}

Json sder_to_json(const SpecialDer0& d) {
    Json j;
    j["model"] = "boundary";
    j["punctures"] = d.punctures();
    j["base"] = d.base();
    Json comps;
    for (int p = 0; p < d.punctures(); ++p) {
        if (p == d.base()) continue;
        comps["e" + std::to_string(p)] = terms_json(d.alphabet(), d.component(p).sorted_terms());
    }
    j["components"] = std::move(comps);
    return j;
}

SpecialDer0 sder_from_json(const Json& j) {
    int punctures = j.at("punctures").get<int>();
    int base = j.at("base").get<int>();
    Alphabet a = Alphabet::boundary(punctures, base);
    std::map<int, TensorPoly> comps;
    for (int p = 0; p < punctures; ++p) {
        if (p == base) continue;
        auto it = j.at("components").find("e" + std::to_string(p));
        if (it == j.at("components").end()) continue;
        TensorPoly u(a);
        for (auto& t : *it)
            u += word_poly_from_json(a, t.at("word"), rat_from_string(t.at("coef").get<std::string>()));
        comps.emplace(p, std::move(u));
    }
    return SpecialDer0::truncated(punctures, base, std::move(comps));
}

Json framing_to_json(const FramingData& f) {
    Json j;
    j["genus"] = f.genus;
    j["rot_a"] = f.rot_a;
    j["rot_b"] = f.rot_b;
    Json scc = Json::array();
    for (auto& [desc, rot] : f.scc) scc.push_back(Json{{"curve", desc}, {"rot", rot}});
    j["scc"] = std::move(scc);
    return j;
}

FramingData framing_from_json(const Json& j) {
    FramingData f;
    f.genus = j.at("genus").get<int>();
    f.rot_a = j.at("rot_a").get<std::vector<int>>();
    f.rot_b = j.at("rot_b").get<std::vector<int>>();
    if (j.contains("scc"))
        for (auto& s : j.at("scc"))
            f.scc.emplace_back(s.value("curve", std::string{}), s.at("rot").get<int>());
    return f;
}

Json rep_to_json(const RepElement& r) {
    Json j;
    for (auto& [p, m] : r) j[partition_to_string(p)] = m;
    return j;
}

RepElement rep_from_json(const Json& j) {
    RepElement r;
    for (auto it = j.begin(); it != j.end(); ++it)
        r[partition_from_string(it.key())] = it.value().get<long>();
    return r;
}

}  // namespace jl
