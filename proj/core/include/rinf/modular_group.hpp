#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rinf/exact_linear.hpp"

namespace rinf {

// Word algorithms in PSL(2,Z) = Z2 * Z3.
//
// Generator convention: S = (0 -1; 1 0), U = S*T = (0 -1; 1 1) with
// T = (1 1; 0 1).  U^3 = -I, so the images of S and U in PSL(2,Z) have
// orders 2 and 3 and generate the free product.

/// Letter of a normal-form word: s, u, or u^-1.
enum class Letter : std::uint8_t { S, U, Uinv };

Letter letter_inverse(Letter l);
bool same_factor(Letter a, Letter b);  // both s-letters or both u-letters

/// Normal-form word over {s, u, u^-1}: no s s, and u-letters never adjacent
/// (u u collapses to u^-1 and so on).  The empty word is the identity.
class PslWord {
public:
    PslWord() = default;
    explicit PslWord(const std::vector<Letter>& raw);  // normalizes

    static PslWord s() { return PslWord({Letter::S}); }
    static PslWord u() { return PslWord({Letter::U}); }
    static PslWord u_inv() { return PslWord({Letter::Uinv}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool operator==(const PslWord&) const = default;

    PslWord operator*(const PslWord& o) const;
    PslWord inverse() const;
    void push(Letter l);  // multiply on the right, keeping normal form

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// A PslWord together with one of its two SL(2,Z) lifts.
/// evaluate(word) = sign * matrix exactly.
struct SignedLift {
    PslWord word;
    Mat2 matrix;
    int sign = 1;  // +1 or -1
};

/// Cyclically reduced word; rotations form its PSL-conjugacy class.
class CyclicWord {
public:
    /// Throws NotCyclicallyReduced unless the first and last letters
    /// neither cancel nor merge.
    explicit CyclicWord(PslWord w);

    const PslWord& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    bool operator==(const CyclicWord&) const = default;

    CyclicWord rotate(std::size_t r) const;

private:
    PslWord word_;
};

/// Generator matrices of the chosen convention.
Mat2 gen_S();
Mat2 gen_U();
Mat2 gen_T();

/// Product of the generator matrices named by the word (u^-1 evaluates to
/// the exact inverse of U).
Mat2 evaluate(const PslWord& w);

/// Continued-fraction decomposition of m (det = 1) into a normal-form word
/// with evaluate(word) = sign * m.  Throws NotSL.
SignedLift decompose(const Mat2& m);

/// w = conjugator * cyclic * conjugator^-1 in PSL(2,Z).
struct CyclicReduction {
    CyclicWord cyclic;
    PslWord conjugator;
};
CyclicReduction cyclic_reduce(const PslWord& w);

/// Conjugacy certificate for cyclically reduced words: rotate(w1, rotation)
/// == w2, and conjugator satisfies conjugator^-1 * w1 * conjugator = w2.
struct RotationCertificate {
    std::size_t rotation = 0;
    PslWord conjugator;
};

/// Rotation match between nonempty cyclic words (hyperbolic conjugacy test).
/// Empty inputs throw EmptyWord.  nullopt means not conjugate in PSL(2,Z).
std::optional<RotationCertificate> psl_conjugator(const CyclicWord& w1,
                                                  const CyclicWord& w2);

/// The automorphism s -> s, u -> u^-1.  Realizes conjugation by diag(1,-1)
/// only up to an inner automorphism; callers must absorb inner factors.
PslWord outer_flip(const PslWord& w);
CyclicWord outer_flip(const CyclicWord& w);

/// w = root^k as cyclic words with k maximal (smallest cyclic period).
struct PslRoot {
    CyclicWord root;
    std::size_t k = 1;
};
PslRoot primitive_root_psl(const CyclicWord& w);

/// The PSL-centralizer of a nonempty cyclic word is the cyclic group
/// generated by its primitive root.
CyclicWord centralizer_generator(const CyclicWord& w);

}  // namespace rinf
