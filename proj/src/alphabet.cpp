#include "jl/alphabet.hpp"

namespace jl {

std::string Alphabet::letter_name(int idx) const {
    if (idx < 0 || idx >= size()) throw std::out_of_range("letter index");
    if (is_symplectic())
        return std::string(idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
    return "e" + std::to_string(puncture_of_index(idx));
}

int Alphabet::letter_index(std::string_view name) const {
    if (name.size() < 2) throw ParseError("bad letter name '" + std::string(name) + "'", 0);
    char kind = name[0];
    int num = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') throw ParseError("bad letter name '" + std::string(name) + "'", i);
        num = num * 10 + (name[i] - '0');
    }
    if (is_symplectic()) {
        if ((kind != 'a' && kind != 'b') || num < 1 || num > genus_)
            throw ParseError("letter '" + std::string(name) + "' not in symplectic alphabet", 0);
        return 2 * (num - 1) + (kind == 'b' ? 1 : 0);
    }
    if (kind != 'e' || num < 0 || num >= punctures_)
        throw ParseError("letter '" + std::string(name) + "' not in boundary alphabet", 0);
    return index_of_puncture(num);  // -1 for the eliminated letter
}

std::string word_to_string(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (unsigned char c : w) {
        if (!s.empty()) s += '.';
        s += a.letter_name(c);
    }
    return s;
}

}  // namespace jl
