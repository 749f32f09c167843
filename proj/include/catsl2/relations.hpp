// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catsl2/diagrams.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catsl2 {

// ---- building blocks ---------------------------------------------------------------------------

/// Sideways crossings EF1_n => FE1_n and FE1_n => EF1_n, built from U with a cup and a cap.
TwoMor sideways_ef_fe(int n);
TwoMor sideways_fe_ef(int n);
/// f placed between identity strands: left pattern on the left, right pattern (ending at weight n) on the right.
TwoMor whisker(const TwoMor& f, const std::string& left, const std::string& right, int n);
/// Repeated slice.
std::vector<Slice> dots(int strand, int m);

/// Right-hand side of the identity decomposition of EF1_n (ef = true) or FE1_n.
TwoMor identity_decomposition_rhs(int n, bool ef, const mpq_class& crossing_sign = 1);

struct RelationPair {
    std::string group;
    std::string name;
    TwoMor lhs, rhs;
};

/// Suites: biadjoint, nilhecke, bubbles, decomp, slides, triangle, symmetry, all.
std::vector<std::string> suite_names();
std::vector<RelationPair> relations_at(int n, const std::string& suite);

struct RelationCheck {
    std::string group, name;
    int n = 0, N = 0;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<RelationCheck> checks;
    bool ok() const;
    size_t failures() const;
};

/// Every relation of the suite for all parity-valid |n| <= N (clipped to [nmin, nmax]) and Nmin <= N <= Nmax.
/// threads = 0 uses the hardware concurrency.
SuiteReport relation_suite(int Nmin, int Nmax, std::optional<int> nmin = std::nullopt,
                           std::optional<int> nmax = std::nullopt, const std::string& suite = "all",
                           unsigned threads = 1);

// ---- decomposition of EF1_n / FE1_n -------------------------------------------------------------------

struct DecompReport {
    int n = 0, N = 0;
    std::vector<std::pair<TwoMor, TwoMor>> pairs;  // (lambda_s, sigma_s), s = 0..|n|
    bool ok = false;
    std::vector<std::string> failures;
};
DecompReport decomposition_idempotents(int n, int N);

// ---- endomorphisms of E^a 1_n -------------------------------------------------------------------------

struct EndRingReport {
    int a = 0, n = 0, d = 0, N = 0;
    size_t count = 0;      // basis elements of degree d
    long predicted = 0;    // coefficient of the graded rank
    size_t rank = 0;       // rank of their images
    bool ok() const { return static_cast<long>(count) == predicted && rank == count; }
};
/// Basis of degree d: x^alpha u_w times monomials in the v_j.
std::vector<TwoMor> endring_basis(int a, int n, int d);
/// q^d coefficient of q^{-a(a-1)/2}[a]! (1-q^2)^{-a} prod_j (1-q^{2j})^{-1}.
long endring_predicted(int a, int d);
EndRingReport endring_dim_check(int a, int n, int d, std::optional<int> N = std::nullopt);

// ---- bubble generation ------------------------------------------------------------------------------------

struct SpanReport {
    int k = 0, N = 0;
    std::vector<std::pair<size_t, size_t>> by_degree;  // (rank of bubble images, dim H_k) per degree 2d
    bool ok() const;
};
/// Products of bubbles span H_k in degrees up to 2 min(k, N-k).
SpanReport bubble_generation_check(int k, int N);

}  // namespace catsl2
