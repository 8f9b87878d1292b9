/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Universal sentences and quasi-identities over finite windows, the
// metabelian axiom suite, radical saturation, discrimination and
// geometric equivalence probes.

#ifndef LIEGEO_LOGIC_HPP
#define LIEGEO_LOGIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/geometry.hpp"
#include "liegeo/poly.hpp"
#include "liegeo/terms.hpp"

namespace liegeo {

// ∀x̄ ⋁_i (⋀ u_ij = 0 ∧ ⋀ w_ij ≠ 0). Terms use Var i for vars[i] and
// Const j for the j-th constant of the carrier.
struct UniversalSentence {
    struct Disjunct {
        std::vector<TermPtr> equations;
        std::vector<TermPtr> disequations;
    };
    std::vector<std::string> vars;
    std::vector<std::string> constants;
    std::vector<Disjunct> disjuncts;

    std::string str(const Field& f) const;
};

// ∀x̄ (⋀ r_i = 0 → s = 0).
struct QuasiIdentity {
    std::vector<std::string> vars;
    std::vector<std::string> constants;
    std::vector<TermPtr> premises;
    TermPtr conclusion;

    UniversalSentence sentence() const;
    std::string str(const Field& f) const;
};

struct Verdict {
    bool holds = true;
    // Falsifying assignment, least in lexicographic window order.
    std::optional<std::vector<Element>> witness;
    uint64_t assignments = 0;
    std::string method;
};

// Variables range over the window; terms are evaluated exactly in the
// carrier. Exhaustive search over window^n with early acceptance of
// satisfied disjuncts. multilinear: the sentence is a multilinear identity
// and is checked on tuples of basis elements only.
Verdict check_sentence(const UniversalSentence& s, const Window& window, const Field& term_field,
                       uint64_t budget = default_point_budget(), bool multilinear = false);
Verdict check_sentence(const QuasiIdentity& q, const Window& window, const Field& term_field,
                       uint64_t budget = default_point_budget());

std::string render_witness(const Verdict& v, const Carrier& carrier, const std::vector<std::string>& vars);

enum class AxiomId { Phi1, Phi2, Phi3, Phi4, Phi5Prime };

struct AxiomInstance {
    AxiomId id;
    std::string name;
    UniversalSentence sentence;  // empty for Phi4
    std::optional<Poly> poly;    // Phi5Prime
    bool multilinear = false;
};

AxiomInstance phi1();
AxiomInstance phi2();
AxiomInstance phi3();
AxiomInstance phi4(int r);
// [z1,z2]·f(a1..ar) = 0 → [z1,z2] = 0, the action spelled out as brackets
// with the constants.
AxiomInstance phi5_prime(const Poly& f, const std::vector<std::string>& constants);

// Elements u of the window with [[u,y],u] = 0 for every y of the window,
// brackets taken in the carrier.
std::vector<bool> fitting_set(const Window& window);

// ∀x1..x_{r+1} ¬φ. Linear-part rank on metabelian carriers unless
// force_exhaustive; otherwise exhaustive over window tuples.
Verdict check_phi4(const Window& window, int r, uint64_t budget = default_point_budget(),
                   bool force_exhaustive = false);

struct AxiomVerdict {
    std::string name;
    Verdict verdict;
    std::string note;
};

std::vector<AxiomVerdict> phi_suite(const Window& window, int r, const std::vector<Poly>& polys,
                                    uint64_t budget = default_point_budget());

// Saturation chain R0 = id<S>, R_{i+1} = id<R_i ∪ T_i> inside the degree
// window of A[X]. Quasi-identity variables range over the window monomials.
struct Saturation {
    Radical ideal;
    size_t steps = 0;
};
Saturation saturate_radical(AmbientPtr ambient, const std::vector<Element>& s, const std::vector<QuasiIdentity>& q,
                            int bound);
// Ideal closure of a set inside the degree window: brackets with the
// generators of A[X] that stay within the bound.
Radical ideal_window(AmbientPtr ambient, const std::vector<Element>& s, int bound);

struct QuasiIdentityBounds {
    size_t vars = 2;
    size_t length = 3;    // letters per left-normed atom
    size_t premises = 1;  // premises per quasi-identity
};
// All quasi-identities with left-normed atoms that hold in the window.
std::vector<QuasiIdentity> enumerate_valid_quasi_identities(const Window& window, const AlgebraSpec& algebra,
                                                            const QuasiIdentityBounds& bounds,
                                                            uint64_t budget = default_point_budget());

// C = A[X]/<relations> mapped to B: a point of V(relations) at which no
// target vanishes, least in index order.
std::optional<uint64_t> discriminates(AmbientPtr ambient, const std::vector<Element>& relations,
                                      const std::vector<Element>& targets, uint64_t budget = default_point_budget());

struct GeoEquivResult {
    bool equivalent = true;
    std::optional<size_t> first_divergence;
    size_t checked = 0;
};
GeoEquivResult geo_equiv_probe(CarrierPtr b, int trunc_b, CarrierPtr c, int trunc_c,
                               const std::vector<EquationSystem>& corpus, int bound,
                               uint64_t budget = default_point_budget());

}  // namespace liegeo

#endif  // LIEGEO_LOGIC_HPP
