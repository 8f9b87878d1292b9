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

#include "liegeo/free_lie.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace liegeo {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::CapacityExceeded, "structure constant overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::CapacityExceeded, "structure constant overflow");
    return r;
}

void accumulate(std::map<BasisId, int64_t>& acc, const IntCombo& c, int64_t scale) {
    for (const auto& [id, x] : c) acc[id] = checked_add(acc[id], checked_mul(x, scale));
}

IntCombo finish(const std::map<BasisId, int64_t>& acc) {
    IntCombo out;
    for (const auto& [id, x] : acc)
        if (x) out.emplace_back(id, x);
    return out;
}

}  // namespace

std::shared_ptr<LyndonTable> LyndonTable::for_rank(int rank) {
    if (rank < 1 || rank > 64) fail(ErrorCode::InvalidArgument, "free Lie rank must be in 1..64");
    static std::mutex m;
    static std::map<int, std::shared_ptr<LyndonTable>> tables;
    std::lock_guard lock(m);
    auto& t = tables[rank];
    if (!t) t.reset(new LyndonTable(rank));
    return t;
}

bool LyndonTable::is_lyndon(const std::string& w) {
    if (w.empty()) return false;
    // Strictly smaller than each proper suffix.
    for (size_t i = 1; i < w.size(); ++i)
        if (w.compare(i, std::string::npos, w) <= 0) return false;
    return true;
}

size_t LyndonTable::split_point(const std::string& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (is_lyndon(w.substr(i))) return i;
    return w.size();
}

BasisId LyndonTable::intern(const std::string& w) {
    {
        std::shared_lock lock(mutex_);
        auto it = ids_.find(w);
        if (it != ids_.end()) return it->second;
    }
    if (!is_lyndon(w)) fail(ErrorCode::InvalidArgument, "not a Lyndon word");
    for (unsigned char c : w)
        if (c >= static_cast<unsigned>(rank_)) fail(ErrorCode::InvalidArgument, "letter outside the alphabet");
    BasisId left = 0, right = 0;
    if (w.size() > 1) {
        size_t s = split_point(w);
        left = intern(w.substr(0, s));
        right = intern(w.substr(s));
    }
    std::unique_lock lock(mutex_);
    return intern_locked(w, left, right);
}

BasisId LyndonTable::intern_locked(const std::string& w, BasisId left, BasisId right) {
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    BasisId id = static_cast<BasisId>(entries_.size());
    entries_.push_back({w, left, right});
    ids_.emplace(w, id);
    return id;
}

const std::string& LyndonTable::word(BasisId id) const {
    std::shared_lock lock(mutex_);
    return entries_.at(id).word;
}

std::pair<BasisId, BasisId> LyndonTable::factorization(BasisId id) const {
    std::shared_lock lock(mutex_);
    const Entry& e = entries_.at(id);
    return {e.left, e.right};
}

bool LyndonTable::less(BasisId a, BasisId b) const {
    const std::string& x = word(a);
    const std::string& y = word(b);
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

std::vector<BasisId> LyndonTable::basis_up_to(int d) {
    if (d < 1) return {};
    {
        std::shared_lock lock(mutex_);
        auto it = generated_.find(d);
        if (it != generated_.end()) return it->second;
    }
    uint64_t total = 0;
    for (int n = 1; n <= d; ++n) {
        total += lyndon_count(rank_, n);
        if (total > kMaxLyndonBasis) fail(ErrorCode::CapacityExceeded, "Lyndon basis too large");
    }
    // Duval's generation of all Lyndon words of length <= d.
    std::vector<BasisId> out;
    std::vector<int> letters{-1};
    while (!letters.empty()) {
        letters.back() += 1;
        std::string s(letters.begin(), letters.end());
        out.push_back(intern(s));
        size_t m = letters.size();
        while (letters.size() < static_cast<size_t>(d)) letters.push_back(letters[letters.size() - m]);
        while (!letters.empty() && letters.back() == rank_ - 1) letters.pop_back();
    }
    std::sort(out.begin(), out.end(), [&](BasisId a, BasisId b) { return less(a, b); });
    std::unique_lock lock(mutex_);
    generated_[d] = out;
    return out;
}

const IntCombo& LyndonTable::bracket(BasisId u, BasisId v) {
    uint64_t key = (static_cast<uint64_t>(u) << 32) | v;
    {
        std::shared_lock lock(mutex_);
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
    }
    IntCombo value = compute(u, v);
    std::unique_lock lock(mutex_);
    return products_.emplace(key, std::move(value)).first->second;
}

IntCombo LyndonTable::compute(BasisId u, BasisId v) {
    if (u == v) return {};
    const std::string wu = word(u);
    const std::string wv = word(v);
    if (wv < wu) {
        IntCombo r = bracket(v, u);
        for (auto& t : r) t.second = -t.second;
        return r;
    }
    auto [u1, u2] = factorization(u);
    if (wu.size() == 1 || word(u2) >= wv) {
        std::string w = wu + wv;
        BasisId id;
        {
            std::unique_lock lock(mutex_);
            id = intern_locked(w, u, v);
        }
        return {{id, 1}};
    }
    // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    std::map<BasisId, int64_t> acc;
    IntCombo t1 = bracket(u2, v);
    for (const auto& [w, c] : t1) accumulate(acc, bracket(u1, w), c);
    IntCombo t2 = bracket(u1, v);
    for (const auto& [w, c] : t2) accumulate(acc, bracket(u2, w), -c);
    return finish(acc);
}

uint64_t lyndon_count(int k, int n) {
    // (1/n) sum_{d | n} mu(d) k^(n/d)
    auto mobius = [](int d) {
        int result = 1;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            d /= p;
            if (d % p == 0) return 0;
            result = -result;
        }
        if (d > 1) result = -result;
        return result;
    };
    __int128 acc = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(d);
        if (!mu) continue;
        __int128 pw = 1;
        for (int i = 0; i < n / d; ++i) {
            pw *= k;
            if (pw > (__int128)1 << 100) return UINT64_MAX;
        }
        acc += mu * pw;
    }
    return static_cast<uint64_t>(acc / n);
}

std::vector<LyndonBasisElement> lyndon_basis(int rank, int max_degree, size_t limit) {
    if (rank < 1 || max_degree < 1) fail(ErrorCode::InvalidArgument, "rank and degree must be positive");
    uint64_t total = 0;
    for (int n = 1; n <= max_degree; ++n) {
        uint64_t c = lyndon_count(rank, n);
        if (c > limit || total + c > limit) fail(ErrorCode::CapacityExceeded, "Lyndon basis exceeds the configured limit");
        total += c;
    }
    auto table = LyndonTable::for_rank(rank);
    std::vector<LyndonBasisElement> out;
    std::function<std::string(BasisId)> show = [&](BasisId id) -> std::string {
        if (table->is_letter(id)) return "x" + std::to_string(static_cast<unsigned char>(table->word(id)[0]) + 1);
        auto [l, r] = table->factorization(id);
        return "[" + show(l) + "," + show(r) + "]";
    };
    for (BasisId id : table->basis_up_to(max_degree)) {
        const std::string& w = table->word(id);
        LyndonBasisElement e;
        for (unsigned char c : w) e.word.push_back(c);
        e.degree = static_cast<int>(w.size());
        e.bracketing = show(id);
        out.push_back(std::move(e));
    }
    return out;
}

FreeLieAlgebra::FreeLieAlgebra(Field f, std::vector<std::string> names, size_t constants)
    : Carrier(std::move(f)),
      table_(LyndonTable::for_rank(static_cast<int>(names.size()))),
      names_(std::move(names)),
      constants_(constants) {
    if (constants_ > names_.size()) fail(ErrorCode::InvalidArgument, "more constants than generators");
}

std::shared_ptr<FreeLieAlgebra> FreeLieAlgebra::make(Field f, int rank, const std::string& prefix) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back(prefix + std::to_string(i));
    return std::make_shared<FreeLieAlgebra>(std::move(f), std::move(names), static_cast<size_t>(rank));
}

std::shared_ptr<FreeLieAlgebra> FreeLieAlgebra::make(Field f, std::vector<std::string> names, size_t constants) {
    return std::make_shared<FreeLieAlgebra>(std::move(f), std::move(names), constants);
}

std::string FreeLieAlgebra::description() const {
    return "free(" + std::to_string(rank()) + ") over " + field().str();
}

std::string FreeLieAlgebra::basis_name(BasisId id) const {
    if (table_->is_letter(id)) return names_.at(static_cast<unsigned char>(table_->word(id)[0]));
    auto [l, r] = table_->factorization(id);
    return "[" + basis_name(l) + "," + basis_name(r) + "]";
}

std::optional<BasisId> FreeLieAlgebra::generator(size_t i) const {
    if (i >= names_.size()) return std::nullopt;
    return table_->intern(std::string(1, static_cast<char>(i)));
}

std::optional<size_t> FreeLieAlgebra::generator_index(BasisId id) const {
    if (!table_->is_letter(id)) return std::nullopt;
    return static_cast<unsigned char>(table_->word(id)[0]);
}

std::optional<std::pair<BasisId, BasisId>> FreeLieAlgebra::factors(BasisId id) const {
    if (table_->is_letter(id)) return std::nullopt;
    return table_->factorization(id);
}

Element FreeLieAlgebra::generator_element(size_t i) const {
    auto g = generator(i);
    if (!g) fail(ErrorCode::InvalidArgument, "generator index out of range");
    return basis_element(*g);
}

Element FreeLieAlgebra::word_element(const std::vector<int>& word) const {
    std::string w;
    for (int c : word) w.push_back(static_cast<char>(c));
    return basis_element(table_->intern(w));
}

Element FreeLieAlgebra::left_normed(const std::vector<int>& gens) const {
    if (gens.empty()) return {};
    Element e = generator_element(static_cast<size_t>(gens[0]));
    for (size_t i = 1; i < gens.size(); ++i) e = bracket(e, generator_element(static_cast<size_t>(gens[i])));
    return e;
}

Element FreeLieAlgebra::compute_bracket_basis(BasisId a, BasisId b) const {
    const IntCombo& c = table_->bracket(a, b);
    Element e;
    for (const auto& [id, x] : c) {
        Scalar s = field().from_int(x);
        if (!field().is_zero(s)) e.terms.emplace_back(id, std::move(s));
    }
    return e;
}

}  // namespace liegeo
