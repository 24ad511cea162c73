#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocsel {

// Malformed input document (CLI maps this to exit 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Infeasible or ill-formed query, wrong rule, or violated structural
// precondition (CLI exit 2).
class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds a solver's size cap; an explicit refusal, never a
// silent truncation (CLI exit 3).
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scores are signed: net disapproval of a vote is negative whenever the
// committee overlaps the vote more than it misses it.
using Score = long long;

// Fixed-width bit vector over [0, size()). Votes, committees and
// non-outlier sets are all index subsets, so they share this type.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset from_indices(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    friend int intersect_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += __builtin_popcountll(a.words_[i] & b.words_[i]);
        return c;
    }
    friend int symdiff_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += __builtin_popcountll(a.words_[i] ^ b.words_[i]);
        return c;
    }
    friend int setminus_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += __builtin_popcountll(a.words_[i] & ~b.words_[i]);
        return c;
    }

private:
    void trim() {
        int r = nbits_ & 63;
        if (r != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class ScoringRule {
    Minisum,          // |X delta S|
    Disapproval,      // |X \ S|
    DisapprovalPrime, // |S \ X|
    NetDisapproval,   // |X \ S| - |X ^ S|, may be negative
};

const char* rule_name(ScoringRule r);
std::optional<ScoringRule> rule_from_name(const std::string& name);

// One approval ballot per voter; a vote may be empty or approve everyone.
// Votes are identified by input position and duplicates stay distinct.
struct Election {
    int m = 0;
    std::vector<Bitset> votes;

    int n() const { return static_cast<int>(votes.size()); }
    void validate() const;
};

struct OutlierQuery {
    ScoringRule rule = ScoringRule::Minisum;
    int m_star = 0; // committee size
    int n_bar = 0;  // outlier budget, n* = n - n_bar
    std::optional<Score> target;

    int n_star(int n) const { return n - n_bar; }
    void validate(const Election& e) const;
};

// Committee indices and non-outlier vote indices are kept sorted so
// solutions compare and serialize deterministically.
struct Solution {
    std::vector<int> committee;
    std::vector<int> non_outliers;
    Score score = 0;
};

// Global tie-break: smaller score, then lexicographically smaller
// committee, then lexicographically smaller non-outlier set. All solvers
// reduce with this key, which makes them comparable bit for bit.
bool solution_less(const Solution& a, const Solution& b);

struct SolverReport {
    Solution solution;
    std::string algorithm;
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
    int threads = 1;
    bool exact = true; // false: heuristic / bounded-guarantee result
    std::optional<std::uint64_t> seed;
};

} // namespace ocsel
