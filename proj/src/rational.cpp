#include "jl/rational.hpp"

namespace jl {

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal", 0);
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0) throw ParseError("expected digit", i);
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t den_start = i, den_digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
        if (den_digits == 0) throw ParseError("expected denominator digit", den_start);
    }
    if (i != s.size()) throw ParseError("unexpected character in rational literal", i);
    Rat q(std::string(s), 10);
    if (q.get_den() == 0) throw ParseError("zero denominator", s.find('/') + 1);
    q.canonicalize();
    return q;
}

}  // namespace jl
