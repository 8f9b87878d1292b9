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
// Free Lie algebras in the Lyndon basis.

#ifndef LIEGEO_FREE_LIE_HPP
#define LIEGEO_FREE_LIE_HPP

#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "liegeo/carrier.hpp"

namespace liegeo {

// Integer combination of Lyndon words, sorted by id.
using IntCombo = std::vector<std::pair<BasisId, int64_t>>;

// Lyndon words over an alphabet of fixed size, with their standard
// factorizations and the integer structure constants of the free Lie ring.
// One table per rank, shared by every algebra of that rank.
class LyndonTable {
public:
    static std::shared_ptr<LyndonTable> for_rank(int rank);

    int rank() const { return rank_; }
    // Word letters are generator indices 0..rank-1.
    BasisId intern(const std::string& word);
    const std::string& word(BasisId id) const;
    int degree(BasisId id) const { return static_cast<int>(word(id).size()); }
    bool is_letter(BasisId id) const { return degree(id) == 1; }
    std::pair<BasisId, BasisId> factorization(BasisId id) const;
    // Ids of all Lyndon words of length <= d, sorted by (degree, lex).
    std::vector<BasisId> basis_up_to(int d);
    // (degree, lex) order.
    bool less(BasisId a, BasisId b) const;

    const IntCombo& bracket(BasisId u, BasisId v);

    static bool is_lyndon(const std::string& w);
    // Standard factorization w = uv with v the longest proper Lyndon suffix.
    static size_t split_point(const std::string& w);

private:
    explicit LyndonTable(int rank) : rank_(rank) {}
    BasisId intern_locked(const std::string& w, BasisId left, BasisId right);
    IntCombo compute(BasisId u, BasisId v);

    struct Entry {
        std::string word;
        BasisId left, right;
    };

    int rank_;
    mutable std::shared_mutex mutex_;
    std::deque<Entry> entries_;
    std::map<std::string, BasisId> ids_;
    std::map<int, std::vector<BasisId>> generated_;
    std::unordered_map<uint64_t, IntCombo> products_;
};

struct LyndonBasisElement {
    std::vector<int> word;  // generator indices
    int degree;
    std::string bracketing;  // e.g. [x1,[x1,x2]]
};

// Configurable limit on generated basis sizes.
inline constexpr size_t kMaxLyndonBasis = 2'000'000;

std::vector<LyndonBasisElement> lyndon_basis(int rank, int max_degree, size_t limit = kMaxLyndonBasis);

// Number of Lyndon words of length n over k letters (necklace formula).
uint64_t lyndon_count(int k, int n);

class FreeLieAlgebra : public Carrier {
public:
    // names: display names of the generators; the first `constants` of them
    // form the coefficient algebra.
    FreeLieAlgebra(Field f, std::vector<std::string> names, size_t constants);
    static std::shared_ptr<FreeLieAlgebra> make(Field f, int rank, const std::string& prefix = "a");
    static std::shared_ptr<FreeLieAlgebra> make(Field f, std::vector<std::string> names, size_t constants);

    int rank() const { return table_->rank(); }
    const LyndonTable& table() const { return *table_; }
    const std::vector<std::string>& names() const { return names_; }

    std::string description() const override;
    int basis_degree(BasisId id) const override { return table_->degree(id); }
    std::string basis_name(BasisId id) const override;
    bool basis_less(BasisId a, BasisId b) const override { return table_->less(a, b); }
    std::vector<BasisId> window_basis(int d) const override { return table_->basis_up_to(d); }

    size_t constant_count() const override { return constants_; }
    Element constant(size_t i) const override { return generator_element(i); }
    std::string constant_name(size_t i) const override { return names_.at(i); }

    size_t generator_count() const override { return names_.size(); }
    std::optional<BasisId> generator(size_t i) const override;
    std::optional<size_t> generator_index(BasisId id) const override;
    std::optional<std::pair<BasisId, BasisId>> factors(BasisId id) const override;

    Element generator_element(size_t i) const;
    // Basis element of a Lyndon word given as generator indices.
    Element word_element(const std::vector<int>& word) const;
    // Left-normed bracket [[g_0, g_1], ...] of generators.
    Element left_normed(const std::vector<int>& gens) const;

protected:
    Element compute_bracket_basis(BasisId a, BasisId b) const override;

private:
    std::shared_ptr<LyndonTable> table_;
    std::vector<std::string> names_;
    size_t constants_;
};

}  // namespace liegeo

#endif  // LIEGEO_FREE_LIE_HPP
