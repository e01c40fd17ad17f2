#include "words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

#include "families.hpp"

namespace charvar::words {

namespace {

int gen_of(Letter l) { return std::abs((int)l); } // 1 = x, 2 = y

// Fixed comparison order for canonical forms: x < y < X < Y.
int rank_of(Letter l) { return (l < 0 ? 2 : 0) + (gen_of(l) - 1); }

bool rank_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int ra = rank_of(a[i]), rb = rank_of(b[i]);
        if (ra != rb)
            return ra < rb;
    }
    return a.size() < b.size();
}

std::vector<Letter> rotate_left(const std::vector<Letter>& w, std::size_t r) {
    std::vector<Letter> out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + (std::ptrdiff_t)r, w.end());
    out.insert(out.end(), w.begin(), w.begin() + (std::ptrdiff_t)r);
    return out;
}

char letter_char(Letter l) {
    switch (l) {
    case 1: return 'x';
    case -1: return 'X';
    case 2: return 'y';
    case -2: return 'Y';
    }
    return '?';
}

} // namespace

FreeWord parse_word(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    };

    // word := { atom ['^' ['-'] digits] }*
    std::function<FreeWord(bool)> parse_seq = [&](bool in_parens) -> FreeWord {
        FreeWord out;
        for (;;) {
            skip_ws();
            if (pos >= text.size())
                break;
            char c = text[pos];
            if (c == ')') {
                if (!in_parens)
                    raise(ErrorCode::ParseError, "unmatched ')' in word");
                break;
            }
            FreeWord atom;
            if (c == '(') {
                ++pos;
                atom = parse_seq(true);
                skip_ws();
                if (pos >= text.size() || text[pos] != ')')
                    raise(ErrorCode::ParseError, "missing ')' in word");
                ++pos;
            } else if (c == 'x' || c == 'X' || c == 'y' || c == 'Y') {
                Letter l = (c == 'x') ? 1 : (c == 'X') ? -1 : (c == 'y') ? 2 : -2;
                atom.letters.push_back(l);
                ++pos;
            } else {
                raise(ErrorCode::ParseError,
                      std::string("unexpected character '") + c + "' in word");
            }
            skip_ws();
            long exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                bool negative = false;
                if (pos < text.size() && text[pos] == '-') {
                    negative = true;
                    ++pos;
                }
                if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
                    raise(ErrorCode::ParseError, "exponent must be an integer");
                long v = 0;
                while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                    v = v * 10 + (text[pos] - '0');
                    if (v > 1000000)
                        raise(ErrorCode::ParseError, "exponent too large");
                    ++pos;
                }
                exp = negative ? -v : v;
            }
            if (exp < 0) {
                atom = inverse_word(atom);
                exp = -exp;
            }
            FreeWord powered = word_power(atom, (unsigned)exp);
            out.letters.insert(out.letters.end(), powered.letters.begin(),
                               powered.letters.end());
        }
        return out;
    };

    FreeWord w = parse_seq(false);
    skip_ws();
    if (pos != text.size())
        raise(ErrorCode::ParseError, "trailing characters after word");
    return w;
}

std::string word_string(const FreeWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w.letters)
        s.push_back(letter_char(l));
    return s;
}

FreeWord free_reduce(const FreeWord& w) {
    FreeWord out;
    out.letters.reserve(w.size());
    for (Letter l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == (Letter)(-l))
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

FreeWord inverse_word(const FreeWord& w) {
    FreeWord out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back((Letter)(-*it));
    return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
    FreeWord a = free_reduce(w);
    std::size_t lo = 0, hi = a.size();
    while (hi - lo >= 2 && a.letters[lo] == (Letter)(-a.letters[hi - 1])) {
        ++lo;
        --hi;
    }
    FreeWord out;
    out.letters.assign(a.letters.begin() + (std::ptrdiff_t)lo,
                       a.letters.begin() + (std::ptrdiff_t)hi);
    return out;
}

FreeWord concat_reduced(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(out);
}

FreeWord word_power(const FreeWord& w, unsigned k) {
    FreeWord out;
    out.letters.reserve(w.size() * k);
    for (unsigned i = 0; i < k; ++i)
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

FreeWord canonical_form(const FreeWord& w) {
    FreeWord a = cyclic_reduce(w);
    if (a.empty())
        return a;
    FreeWord inv = inverse_word(a);
    std::vector<Letter> best = a.letters;
    for (const FreeWord* cand : {&a, &inv}) {
        for (std::size_t r = 0; r < cand->size(); ++r) {
            std::vector<Letter> rot = rotate_left(cand->letters, r);
            if (rank_less(rot, best))
                best = std::move(rot);
        }
    }
    return FreeWord{std::move(best)};
}

MPoly TraceEngine::trace(const FreeWord& w) {
    FreeWord c = canonical_form(w);
    std::string key = word_string(c);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    MPoly result = trace_canonical(c);
    memo_.emplace(std::move(key), result);
    return result;
}

// Core reduction on a canonical (freely and cyclically reduced) word.
// Every step rewrites tr into traces of words that are strictly smaller in
// the measure (length, min(#inverse letters, #plain letters)):
//   - a periodic word u^k collapses through p_k(tr u);
//   - a word with inverse letters pivots on one of them,
//     tr(A g^-1) = tr(A) tr(g) - tr(A g);
//   - a positive word pivots on a doubled letter,
//     tr(A g) = tr(A) tr(g) - tr(A g^-1), where A ends in g.
MPoly TraceEngine::trace_canonical(const FreeWord& w) {
    const std::size_t n = w.size();
    if (n == 0)
        return MPoly::constant(2);
    if (n == 1)
        return MPoly::variable(gen_of(w.letters[0]) == 1 ? Var::X : Var::Y);
    if (n == 2 && w.letters[0] == 1 && w.letters[1] == 2)
        return MPoly::variable(Var::Z);

    // Whole-word power u^k.
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = 0; i < n && periodic; ++i)
            periodic = (w.letters[i] == w.letters[(i + p) % n]);
        if (periodic) {
            FreeWord u;
            u.letters.assign(w.letters.begin(), w.letters.begin() + (std::ptrdiff_t)p);
            MPoly base = trace(u);
            return families::trace_power_poly((unsigned)(n / p)).substitute(Var::Z, base);
        }
    }

    std::size_t neg = 0;
    for (Letter l : w.letters)
        if (l < 0)
            ++neg;

    FreeWord work = w;
    if (2 * neg > n) {
        work = inverse_word(w); // tr(w^-1) = tr(w)
        neg = n - neg;
    }

    if (neg >= 1) {
        // Pivot on the last inverse letter, rotated to the end.
        std::size_t i = n;
        while (i-- > 0)
            if (work.letters[i] < 0)
                break;
        FreeWord rot{rotate_left(work.letters, (i + 1) % n)};
        Letter last = rot.letters.back();
        FreeWord head;
        head.letters.assign(rot.letters.begin(), rot.letters.end() - 1);
        FreeWord head_g = head;
        head_g.letters.push_back((Letter)(-last));
        MPoly gen = MPoly::variable(gen_of(last) == 1 ? Var::X : Var::Y);
        return trace(head) * gen - trace(free_reduce(head_g));
    }

    // All letters positive; a cyclically adjacent equal-generator pair exists
    // (a strictly alternating positive word is (xy)^k, handled above).
    std::size_t i = 0;
    for (; i < n; ++i)
        if (gen_of(work.letters[i]) == gen_of(work.letters[(i + 1) % n]))
            break;
    FreeWord rot{rotate_left(work.letters, (i + 2) % n)};
    Letter last = rot.letters.back();
    FreeWord head;
    head.letters.assign(rot.letters.begin(), rot.letters.end() - 1);
    FreeWord head_ginv = head;
    head_ginv.letters.push_back((Letter)(-last));
    MPoly gen = MPoly::variable(gen_of(last) == 1 ? Var::X : Var::Y);
    return trace(head) * gen - trace(free_reduce(head_ginv));
}

MPoly trace_poly(const FreeWord& w) {
    TraceEngine engine;
    return engine.trace(w);
}

FreeWord alternating_word(bool start_with_x, unsigned length) {
    FreeWord out;
    out.letters.reserve(length);
    for (unsigned i = 0; i < length; ++i) {
        bool is_x = ((i % 2 == 0) == start_with_x);
        out.letters.push_back(is_x ? 1 : 2);
    }
    return out;
}

FreeWord relator_word(unsigned m) {
    if (m <= 1 || m % 2 == 0)
        raise(ErrorCode::NotOddM, "m must be an odd integer greater than 1");
    FreeWord left = alternating_word(true, m);
    FreeWord right = alternating_word(false, m);
    return concat_reduced(left, inverse_word(right));
}

HmPresentation h_m_presentation(unsigned m) {
    FreeWord w = relator_word(m); // validates m
    TraceEngine engine;
    FreeWord x{{1}};
    FreeWord y{{2}};
    HmPresentation out;
    out.p0 = engine.trace(w) - MPoly::constant(2);
    out.p1 = engine.trace(concat_reduced(w, x)) - MPoly::variable(Var::X);
    out.p2 = engine.trace(concat_reduced(w, y)) - MPoly::variable(Var::Y);
    return out;
}

TraceF f_trace(unsigned m) {
    if (m <= 1 || m % 2 == 0)
        raise(ErrorCode::NotOddM, "m must be an odd integer greater than 1");
    unsigned s = (m - 1) / 2;
    TraceEngine engine;
    FreeWord xy{{1, 2}};
    FreeWord yx{{2, 1}};
    FreeWord w1 = word_power(xy, s);
    FreeWord w2 = word_power(yx, s);
    w2.letters.push_back(2);
    w2.letters.push_back(-1);
    w2 = free_reduce(w2);
    TraceF out;
    out.tau_w1 = engine.trace(w1);
    out.tau_w2 = engine.trace(w2);
    out.f = out.tau_w2 - out.tau_w1;
    return out;
}

} // namespace charvar::words
