// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catsl2/flag.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catsl2 {

/// Composite of E's and F's written left to right; strand 1 is the last letter, next to weight n.
struct OneMor {
    std::string pattern;
    int n = 0;
    int shift = 0;

    int strands() const { return static_cast<int>(pattern.size()); }
    char strand(int r) const { return pattern[pattern.size() - static_cast<size_t>(r)]; }
    int weight_at(int region) const;
    int left_weight() const { return weight_at(strands()); }
    bool operator==(const OneMor& o) const { return pattern == o.pattern && n == o.n && shift == o.shift; }
    bool same_shape(const OneMor& o) const { return pattern == o.pattern && n == o.n; }
    std::string str() const;
};

struct Slice {
    enum class Op { Dot, Cross, Cup, Cap, Bubble };
    Op op = Op::Dot;
    int strand = 1;      // dot, cross
    std::string kind;    // "FE" or "EF" for cups and caps
    int pos = 0;         // region for cups, caps, bubbles
    std::string orient;  // "cw" or "ccw"
    int dots = 0;        // bubble dots, may be negative

    static Slice dot(int strand);
    static Slice cross(int strand);
    static Slice cup(const std::string& kind, int pos);
    static Slice cap(const std::string& kind, int pos);
    static Slice bubble(const std::string& orient, int dots, int pos = 0);
    bool operator==(const Slice& o) const;
    std::string str() const;
};

/// Target of a slice; throws std::invalid_argument when the slice does not fit.
OneMor slice_target(const OneMor& src, const Slice& s);
int slice_degree(const OneMor& src, const Slice& s);

struct Term2 {
    mpq_class coeff = 1;
    std::vector<Slice> slices;  // bottom to top
};

class TwoMor {
public:
    TwoMor() = default;
    TwoMor(OneMor source, OneMor target) : src_(std::move(source)), tgt_(std::move(target)) {}
    static TwoMor identity(const OneMor& x);
    static TwoMor word(const OneMor& x, std::vector<Slice> slices, const mpq_class& c = 1);

    const OneMor& source() const { return src_; }
    const OneMor& target() const { return tgt_; }
    const std::vector<Term2>& terms() const { return terms_; }
    void add_term(const Term2& t);

    /// Degrees of the individual terms.
    std::vector<int> degrees() const;
    bool homogeneous(int* deg = nullptr) const;

    TwoMor& operator+=(const TwoMor& o);
    TwoMor& operator-=(const TwoMor& o);
    TwoMor& operator*=(const mpq_class& c);
    friend TwoMor operator+(TwoMor a, const TwoMor& b) { return a += b; }
    friend TwoMor operator-(TwoMor a, const TwoMor& b) { return a -= b; }
    friend TwoMor operator*(const mpq_class& c, TwoMor a) { return a *= c; }
    std::string str() const;

private:
    OneMor src_, tgt_;
    std::vector<Term2> terms_;
};

int degree(const OneMor& src, const Term2& t);

/// a after b.
TwoMor compose_v(const TwoMor& a, const TwoMor& b);
/// a placed to the left of b.
TwoMor compose_h(const TwoMor& a, const TwoMor& b);

// ---- evaluation ---------------------------------------------------------------------------

BimSignature signature(const OneMor& x, int N);

struct BimMap {
    BimSignature source, target;
    std::vector<Exps> generators;
    std::vector<BimElement> images;
    bool is_zero() const;
};

/// Image of one element under a single term or a whole 2-morphism.
BimElement eval_on(const TwoMor& a, const BimElement& e);
/// Images of all generators of the source bimodule.
BimMap eval(const TwoMor& a, int N);

/// Smallest parity-matched N leaving room above the dot degree in every boundary region.
int auto_N(const TwoMor& a);

struct GammaCheck {
    bool equal = false;
    int N = 0;
    std::string detail;
};
GammaCheck equal_under_gamma(const TwoMor& a, const TwoMor& b, std::optional<int> N = std::nullopt);

// ---- bubbles ----------------------------------------------------------------------------------

/// Polynomial in bubbles b_j of degree 2j, all of orientation `orient`, in a region of weight n.
struct BubblePoly {
    int n = 0;
    std::string orient;
    std::map<std::vector<int>, mpq_class> terms;  // sorted multiset of j >= 1

    static BubblePoly constant(int n, const std::string& orient, const mpq_class& c);
    static BubblePoly var(int n, const std::string& orient, int j);
    bool is_zero() const;
    int max_degree() const;
    BubblePoly& operator+=(const BubblePoly& o);
    BubblePoly& operator*=(const mpq_class& c);
    bool operator==(const BubblePoly& o) const;
    std::string str() const;  // "v1^2 v3 - 2 v2"
    /// The closed diagram represented by this polynomial.
    TwoMor to_twomor() const;
};
BubblePoly operator*(const BubblePoly& a, const BubblePoly& b);

/// Orientation of the generators v_j at weight n: counterclockwise for n >= 0.
std::string v_orient(int n);
/// Dots on the bubble of degree 2j of the given orientation at weight n.
int bubble_dots_for(int n, const std::string& orient, int j);

/// Fake bubble of degree 2j at weight n as a polynomial in honest bubbles of the other orientation.
BubblePoly fake_bubble_poly(int n, int j);
/// Image of a bubble polynomial in H_k.
GrElement bubble_poly_image(const BubblePoly& p, int N);
/// Reduce a closed diagram to a polynomial in the v_j; throws when N leaves the answer undetermined.
/// At n = 0 either orientation generates; `orient` picks one.
BubblePoly closed_to_bubbles(const TwoMor& a, std::optional<int> N = std::nullopt, const std::string& orient = "");

// ---- symmetries -------------------------------------------------------------------------------

enum class DiagSym { Omega, Sigma, Psi, Tau, TauInv };
std::optional<DiagSym> parse_diag_sym(const std::string& s);
TwoMor symmetry(const TwoMor& a, DiagSym which);

// ---- JSON diagram format ---------------------------------------------------------------------------

TwoMor twomor_from_json(const std::string& text);
std::string twomor_to_json(const TwoMor& a);

}  // namespace catsl2
