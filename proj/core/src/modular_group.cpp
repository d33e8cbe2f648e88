#include "rinf/modular_group.hpp"

#include <algorithm>

namespace rinf {

Letter letter_inverse(Letter l) {
    switch (l) {
        case Letter::S: return Letter::S;
        case Letter::U: return Letter::Uinv;
        case Letter::Uinv: return Letter::U;
    }
    return Letter::S;  // unreachable
}

bool same_factor(Letter a, Letter b) {
    return (a == Letter::S) == (b == Letter::S);
}

namespace {

// u-letters as exponents mod 3: u = 1, u^-1 = 2.
int u_exponent(Letter l) { return l == Letter::U ? 1 : 2; }

std::optional<Letter> u_from_exponent(int e) {
    switch (e % 3) {
        case 1: return Letter::U;
        case 2: return Letter::Uinv;
        default: return std::nullopt;  // identity
    }
}

}  // namespace

void PslWord::push(Letter l) {
    if (letters_.empty() || !same_factor(letters_.back(), l)) {
        letters_.push_back(l);
        return;
    }
    if (l == Letter::S) {
        letters_.pop_back();  // s s = 1
        return;
    }
    const auto merged = u_from_exponent(u_exponent(letters_.back()) + u_exponent(l));
    letters_.pop_back();
    if (merged) letters_.push_back(*merged);
}

PslWord::PslWord(const std::vector<Letter>& raw) {
    for (Letter l : raw) push(l);
}

PslWord PslWord::operator*(const PslWord& o) const {
    PslWord r = *this;
    for (Letter l : o.letters_) r.push(l);
    return r;
}

PslWord PslWord::inverse() const {
    PslWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.push(letter_inverse(*it));
    return r;
}

std::string PslWord::str() const {
    std::string s;
    for (Letter l : letters_) {
        if (!s.empty()) s += ' ';
        s += (l == Letter::S) ? "s" : (l == Letter::U ? "u" : "u-");
    }
    return s.empty() ? "1" : s;
}

CyclicWord::CyclicWord(PslWord w) : word_(std::move(w)) {
    if (word_.size() >= 2 &&
        same_factor(word_.letters().front(), word_.letters().back()))
        throw precondition_error("NotCyclicallyReduced", word_.str());
}

CyclicWord CyclicWord::rotate(std::size_t r) const {
    if (empty()) return *this;
    r %= size();
    std::vector<Letter> rot(word_.letters().begin() + static_cast<long>(r),
                            word_.letters().end());
    rot.insert(rot.end(), word_.letters().begin(),
               word_.letters().begin() + static_cast<long>(r));
    return CyclicWord(PslWord(rot));
}

Mat2 gen_S() { return {0, -1, 1, 0}; }
Mat2 gen_T() { return {1, 1, 0, 1}; }
Mat2 gen_U() { return gen_S() * gen_T(); }  // (0 -1; 1 1), U^3 = -I

Mat2 evaluate(const PslWord& w) {
    static const Mat2 S = gen_S();
    static const Mat2 U = gen_U();
    static const Mat2 Uinv = inverse_unimodular(gen_U());
    Mat2 acc = Mat2::identity();
    for (Letter l : w.letters()) {
        switch (l) {
            case Letter::S: acc = acc * S; break;
            case Letter::U: acc = acc * U; break;
            case Letter::Uinv: acc = acc * Uinv; break;
        }
    }
    return acc;
}

namespace {

// Balanced remainder: a = q*c + r with r in (-|c|/2, |c|/2].
Int balanced_quotient(const Int& a, const Int& c) {
    Int q = a / c;  // truncated
    Int r = a - q * c;
    const Int half = abs(c);
    if (2 * r > half) q += (c > 0 ? 1 : -1);
    else if (2 * r <= -half) q -= (c > 0 ? 1 : -1);
    return q;
}

// Append T^q to a word: T = s u in PSL, T^-1 = u^-1 s.
void push_T_power(PslWord& w, Int q) {
    for (; q > 0; --q) {
        w.push(Letter::S);
        w.push(Letter::U);
    }
    for (; q < 0; ++q) {
        w.push(Letter::Uinv);
        w.push(Letter::S);
    }
}

}  // namespace

SignedLift decompose(const Mat2& m) {
    if (m.det() != 1) throw precondition_error("NotSL", "det = " + m.det().str());

    // Reduce W to +-T^k by left-multiplying T^-q and S^-1, recording the
    // inverse operations so that m = <word> * W throughout.
    Mat2 w = m;
    PslWord word;
    while (w.c != 0) {
        if (w.a != 0) {
            const Int q = balanced_quotient(w.a, w.c);
            if (q != 0) {
                // T^-q * W : row1 -= q*row2
                w.a -= q * w.c;
                w.b -= q * w.d;
                push_T_power(word, q);
            }
        }
        if (w.c != 0) {
            // S^-1 * W = (c d; -a -b)
            Mat2 next{w.c, w.d, -w.a, -w.b};
            w = next;
            word.push(Letter::S);
        }
    }
    // Now W = (a b; 0 a) with a = +-1, i.e. W = a * T^(a*b).
    push_T_power(word, w.a * w.b);

    SignedLift lift;
    lift.word = word;
    lift.matrix = m;
    const Mat2 value = evaluate(word);
    if (value == m) lift.sign = 1;
    else if (value == -m) lift.sign = -1;
    else throw verification_error("decompose: word does not evaluate to +-input");
    return lift;
}

CyclicReduction cyclic_reduce(const PslWord& w) {
    PslWord cur = w;
    PslWord conj;
    // Strip conjugation: while the ends cancel or merge, conjugate by the
    // first letter.  Strictly shortens (cancel) or shortens-by-merge; the
    // merge case u w' u -> w' u^-1 shortens by one, so this terminates.
    while (cur.size() >= 2 &&
           same_factor(cur.letters().front(), cur.letters().back())) {
        const Letter first = cur.letters().front();
        std::vector<Letter> rest(cur.letters().begin() + 1, cur.letters().end());
        PslWord tail(rest);
        tail.push(first);
        conj.push(first);
        cur = tail;
    }
    return {CyclicWord(cur), conj};
}

std::optional<RotationCertificate> psl_conjugator(const CyclicWord& w1,
                                                  const CyclicWord& w2) {
    if (w1.empty() || w2.empty())
        throw precondition_error("EmptyWord", "identity input to psl_conjugator");
    if (w1.size() != w2.size()) return std::nullopt;
    for (std::size_t r = 0; r < w1.size(); ++r) {
        if (w1.rotate(r) == w2) {
            std::vector<Letter> prefix(w1.word().letters().begin(),
                                       w1.word().letters().begin() +
                                           static_cast<long>(r));
            return RotationCertificate{r, PslWord(prefix)};
        }
    }
    return std::nullopt;
}

PslWord outer_flip(const PslWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) out.push_back(letter_inverse(l));
    return PslWord(out);
}

CyclicWord outer_flip(const CyclicWord& w) {
    return CyclicWord(outer_flip(w.word()));
}

PslRoot primitive_root_psl(const CyclicWord& w) {
    if (w.empty()) throw precondition_error("EmptyWord", "no root of identity");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (w.rotate(d) == w) {
            std::vector<Letter> head(w.word().letters().begin(),
                                     w.word().letters().begin() +
                                         static_cast<long>(d));
            return {CyclicWord(PslWord(head)), n / d};
        }
    }
    return {w, 1};  // unreachable: d = n always matches
}

CyclicWord centralizer_generator(const CyclicWord& w) {
    return primitive_root_psl(w).root;
}

}  // namespace rinf
