#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jl/rational.hpp"

namespace jl {

struct ModelMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A word in the free letters of an alphabet, stored as a byte string of
/// letter indices. Lexicographic order on Word agrees with the alphabet
/// order (a1 < b1 < a2 < ... resp. e-letters by puncture index).
using Word = std::string;

enum class SurfaceModel : std::uint8_t { Symplectic, Boundary };

/// The two surface models.
///
/// Symplectic(g): free letters a1,b1,...,ag,bg in that order (type (g,1bar)).
/// Boundary(n+1 punctures): letters e_j for the punctures with one letter
/// eliminated via sum(e_j) = 0. The eliminated puncture is 0 by default and
/// its letter never appears in stored words.
class Alphabet {
public:
    static Alphabet symplectic(int genus) {
        if (genus < 1) throw std::invalid_argument("genus must be >= 1");
        Alphabet a;
        a.model_ = SurfaceModel::Symplectic;
        a.genus_ = genus;
        return a;
    }
    static Alphabet boundary(int punctures, int eliminated = 0) {
        if (punctures < 3) throw std::invalid_argument("boundary model needs >= 3 punctures");
        if (eliminated < 0 || eliminated >= punctures) throw std::invalid_argument("bad eliminated puncture");
        Alphabet a;
        a.model_ = SurfaceModel::Boundary;
        a.punctures_ = punctures;
        a.eliminated_ = eliminated;
        return a;
    }

    SurfaceModel model() const { return model_; }
    bool is_symplectic() const { return model_ == SurfaceModel::Symplectic; }
    int genus() const { return genus_; }
    int punctures() const { return punctures_; }
    int eliminated_puncture() const { return eliminated_; }

    /// Number of free letters: 2g resp. punctures-1.
    int size() const {
        return is_symplectic() ? 2 * genus_ : punctures_ - 1;
    }

    std::string letter_name(int idx) const;
    /// Index of a named letter, or -1 for the eliminated boundary letter.
    /// Throws ParseError for unknown names.
    int letter_index(std::string_view name) const;

    /// Boundary model: puncture carried by letter index idx.
    int puncture_of_index(int idx) const {
        int j = idx;
        if (j >= eliminated_) ++j;
        return j;
    }
    /// Boundary model: letter index of puncture j, or -1 if eliminated.
    int index_of_puncture(int j) const {
        if (j == eliminated_) return -1;
        return j < eliminated_ ? j : j - 1;
    }

    /// Intersection pairing on letters (symplectic model only):
    /// <a_i,b_i> = 1, <b_i,a_i> = -1, all else 0.
    Rat pairing(int i, int j) const {
        if (!is_symplectic()) throw ModelMismatchError("pairing is defined only in the symplectic model");
        if (i / 2 != j / 2) return 0;
        if (i % 2 == 0 && j % 2 == 1) return 1;
        if (i % 2 == 1 && j % 2 == 0) return -1;
        return 0;
    }

    /// Torus multidegree of a word: in the symplectic model a_i contributes
    /// +e_i and b_i contributes -e_i (g entries); in the boundary model the
    /// per-letter counts (size() entries).
    std::vector<int> multidegree(const Word& w) const {
        std::vector<int> d(is_symplectic() ? genus_ : size(), 0);
        for (unsigned char c : w) {
            if (is_symplectic())
                d[c / 2] += (c % 2 == 0) ? 1 : -1;
            else
                d[c] += 1;
        }
        return d;
    }
    std::vector<int> letter_multidegree(int idx) const {
        std::vector<int> d(is_symplectic() ? genus_ : size(), 0);
        if (is_symplectic())
            d[idx / 2] = (idx % 2 == 0) ? 1 : -1;
        else
            d[idx] = 1;
        return d;
    }

    bool operator==(const Alphabet&) const = default;

private:
    SurfaceModel model_ = SurfaceModel::Symplectic;
    int genus_ = 0;
    int punctures_ = 0;
    int eliminated_ = 0;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (!(a == b)) throw ModelMismatchError("alphabet mismatch");
}

std::string word_to_string(const Alphabet& a, const Word& w);

}  // namespace jl
