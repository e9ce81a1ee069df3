#pragma once

#include "qtoda/qscalar.hpp"

#include <deque>
#include <map>

namespace qtoda {

using Word = std::vector<int>;
using WordCombo = std::map<Word, QScalar>;

/// Noncommutative rewriting system for straightening e-words and f-words.
/// All rules are homogeneous: every right-hand-side word is a permutation
/// of the left-hand side, strictly smaller in the rank-lexicographic word
/// order. Completion resolves every critical pair (overlap or inclusion)
/// whose superposition word fits the degree budget, so normal forms of
/// words within the budget are canonical; words beyond it are rejected
/// loudly rather than canonized unsoundly.
class RewriteSystem {
public:
    struct Rule {
        Word lhs;
        WordCombo rhs;
    };

    RewriteSystem() = default;
    RewriteSystem(std::vector<int> letter_rank, int degree_budget, long step_budget)
        : rank_(std::move(letter_rank)), degree_budget_(degree_budget), step_budget_(step_budget) {}

    int degree_budget() const { return degree_budget_; }
    size_t rule_count() const { return rules_.size(); }
    long completion_steps() const { return steps_; }

    /// True if w1 > w2 (same length assumed).
    bool word_greater(const Word& w1, const Word& w2) const {
        for (size_t i = 0; i < w1.size(); ++i)
            if (rank_[w1[i]] != rank_[w2[i]]) return rank_[w1[i]] > rank_[w2[i]];
        return false;
    }

    void add_relation(const WordCombo& rel) { pending_.push_back(rel); }

    /// Resolve all critical pairs within the degree budget. Throws if the
    /// step budget is exhausted first.
    void complete() {
        for (const auto& rel : pending_) add_rule(rel);
        pending_.clear();
        while (!queue_.empty()) {
            auto [ri, rj, shift] = queue_.front();
            queue_.pop_front();
            superpose(ri, rj, shift);
        }
        completed_ = true;
    }

    bool completed() const { return completed_; }

    /// Reduce a single word to its canonical combination.
    WordCombo reduce(const Word& w) const {
        if (static_cast<int>(w.size()) > degree_budget_)
            throw Error("rewriting budget exceeded: word of degree " + std::to_string(w.size()) +
                        " with degree budget " + std::to_string(degree_budget_) +
                        " (raise --budget-degree)");
        WordCombo acc;
        std::vector<std::pair<Word, QScalar>> stack;
        stack.emplace_back(w, QScalar(Int(1)));
        while (!stack.empty()) {
            auto [word, coeff] = std::move(stack.back());
            stack.pop_back();
            size_t pos;
            const Rule* rule = find_match(word, pos);
            if (!rule) {
                auto it = acc.find(word);
                if (it == acc.end())
                    acc.emplace(std::move(word), coeff);
                else {
                    it->second += coeff;
                    if (it->second.is_zero()) acc.erase(it);
                }
                continue;
            }
            for (const auto& [rw, rc] : rule->rhs) {
                Word nw;
                nw.reserve(word.size());
                nw.insert(nw.end(), word.begin(), word.begin() + pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), word.begin() + pos + rule->lhs.size(), word.end());
                stack.emplace_back(std::move(nw), coeff * rc);
            }
        }
        return acc;
    }

    WordCombo reduce(const WordCombo& combo) const {
        WordCombo acc;
        for (const auto& [w, c] : combo) {
            for (auto& [rw, rc] : reduce(w)) {
                auto it = acc.find(rw);
                if (it == acc.end())
                    acc.emplace(rw, rc * c);
                else {
                    it->second += rc * c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        return acc;
    }

private:
    std::vector<int> rank_;
    int degree_budget_ = 8;
    long step_budget_ = 200000;
    long steps_ = 0;
    bool completed_ = false;
    std::vector<Rule> rules_;
    std::vector<WordCombo> pending_;
    // (rule i, rule j, offset of j's lhs within the superposition word)
    std::deque<std::tuple<size_t, size_t, size_t>> queue_;

    const Rule* find_match(const Word& w, size_t& pos) const {
        for (size_t p = 0; p < w.size(); ++p) {
            for (const auto& r : rules_) {
                if (p + r.lhs.size() > w.size()) continue;
                if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + p)) {
                    pos = p;
                    return &r;
                }
            }
        }
        return nullptr;
    }

    void bump_steps() {
        if (++steps_ > step_budget_)
            throw Error("rewriting completion exceeded step budget " + std::to_string(step_budget_) +
                        " (raise --budget-steps)");
    }

    void add_rule(const WordCombo& rel) {
        WordCombo red = reduce(rel);
        if (red.empty()) return;
        bump_steps();
        auto lead = red.begin();
        for (auto it = std::next(red.begin()); it != red.end(); ++it)
            if (word_greater(it->first, lead->first)) lead = it;
        Rule rule;
        rule.lhs = lead->first;
        QScalar lc = lead->second;
        for (auto it = red.begin(); it != red.end(); ++it) {
            if (it == lead) continue;
            rule.rhs.emplace(it->first, -(it->second / lc));
        }
        rules_.push_back(std::move(rule));
        size_t j = rules_.size() - 1;
        for (size_t i = 0; i < rules_.size(); ++i) {
            enqueue_overlaps(i, j);
            if (i != j) enqueue_overlaps(j, i);
        }
    }

    void enqueue_overlaps(size_t i, size_t j) {
        const Word& a = rules_[i].lhs;
        const Word& b = rules_[j].lhs;
        // proper overlap: suffix of a = prefix of b
        for (size_t k = 1; k < a.size() && k < b.size(); ++k) {
            if (std::equal(a.end() - k, a.end(), b.begin())) {
                size_t len = a.size() + b.size() - k;
                if (static_cast<int>(len) <= degree_budget_) queue_.emplace_back(i, j, a.size() - k);
            }
        }
        // inclusion: b inside a
        if (b.size() < a.size())
            for (size_t p = 0; p + b.size() <= a.size(); ++p)
                if (std::equal(b.begin(), b.end(), a.begin() + p)) queue_.emplace_back(i, j, p);
    }

    void superpose(size_t i, size_t j, size_t shift) {
        bump_steps();
        const Rule& a = rules_[i];
        const Rule& b = rules_[j];
        size_t len = std::max(a.lhs.size(), shift + b.lhs.size());
        Word w;
        w.reserve(len);
        w.insert(w.end(), a.lhs.begin(), a.lhs.end());
        for (size_t p = w.size(); p < len; ++p) w.push_back(b.lhs[p - shift]);
        // route 1: apply rule a at 0; route 2: apply rule b at shift
        WordCombo r1, r2;
        for (const auto& [rw, rc] : a.rhs) {
            Word nw = rw;
            nw.insert(nw.end(), w.begin() + a.lhs.size(), w.end());
            r1[nw] = rc;
        }
        for (const auto& [rw, rc] : b.rhs) {
            Word nw(w.begin(), w.begin() + shift);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + shift + b.lhs.size(), w.end());
            r2[nw] = rc;
        }
        WordCombo diff = reduce(r1);
        for (auto& [rw, rc] : reduce(r2)) {
            auto it = diff.find(rw);
            if (it == diff.end())
                diff.emplace(rw, -rc);
            else {
                it->second -= rc;
                if (it->second.is_zero()) diff.erase(it);
            }
        }
        if (!diff.empty()) add_rule(diff);
    }
};

} // namespace qtoda
