#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mpoly.hpp"

namespace charvar::words {

// Letters of the rank-2 free group: +1 = x, -1 = x^-1, +2 = y, -2 = y^-1.
using Letter = std::int8_t;

struct FreeWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.letters == b.letters;
    }
};

// Word syntax: a string over {x, y, X, Y} with uppercase meaning the inverse
// letter; powers as "x^3" or "(xy)^5" (negative exponents invert).
FreeWord parse_word(std::string_view text);
std::string word_string(const FreeWord& w);

FreeWord free_reduce(const FreeWord& w);
FreeWord inverse_word(const FreeWord& w);
FreeWord cyclic_reduce(const FreeWord& w);
FreeWord concat_reduced(const FreeWord& a, const FreeWord& b);
FreeWord word_power(const FreeWord& w, unsigned k);

// Freely and cyclically reduces, then picks the least representative among
// all rotations of the word and of its inverse (letter order x < y < X < Y).
// Conjugate words and inverses share a canonical form, which keys the trace
// memo cache.
FreeWord canonical_form(const FreeWord& w);

// Reduces words to their trace polynomials in Z[X, Y, Z], where
// X = tr(x), Y = tr(y), Z = tr(xy).  Not thread-safe; use one engine per
// task (results are plain values and may be shared freely).
class TraceEngine {
public:
    MPoly trace(const FreeWord& w);
    std::size_t memo_size() const { return memo_.size(); }

private:
    MPoly trace_canonical(const FreeWord& w);
    std::unordered_map<std::string, MPoly> memo_;
};

// One-shot convenience wrapper around a fresh engine.
MPoly trace_poly(const FreeWord& w);

// Positive alternating word of the given length: xyxy... or yxyx...
FreeWord alternating_word(bool start_with_x, unsigned length);

// The H_m relator  xyx...yx (yxy...xy)^-1, freely reduced, of length 2m.
FreeWord relator_word(unsigned m);

struct HmPresentation {
    MPoly p0; // tr(w) - 2
    MPoly p1; // tr(wx) - X
    MPoly p2; // tr(wy) - Y
};

// Presentation polynomials of X(H_m) for odd m > 1 (NotOddM otherwise).
HmPresentation h_m_presentation(unsigned m);

struct TraceF {
    MPoly f;      // tau_{w2} - tau_{w1}
    MPoly tau_w1; // equals p_{(m-1)/2}(Z)
    MPoly tau_w2;
};

// f = tau_{w2} - tau_{w1} with w1 = (xy)^((m-1)/2), w2 = (yx)^((m-1)/2) y x^-1.
TraceF f_trace(unsigned m);

} // namespace charvar::words
