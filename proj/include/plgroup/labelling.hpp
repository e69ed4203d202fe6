#pragma once

#include "plgroup/rational.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace plgroup {

enum class Letter { a, a_inv, b, b_inv };

Letter letter_inverse(Letter l);
bool letter_is_a_type(Letter l);
std::string letter_str(Letter l);
Letter letter_parse(const std::string& tok);

// Parses a space-separated seed like "a b a" or "a b^-1 a".
std::vector<Letter> parse_letter_word(const std::string& s);
std::string letter_word_str(const std::vector<Letter>& w);

std::vector<Letter> word_inverse(const std::vector<Letter>& w);

// Odd length, a-letters at odd positions (1-based), b-letters at even ones.
bool is_permissible_seed(const std::vector<Letter>& w);

// Block {k, k+1/2, ..., k+(n-1)/2} stored in half-step units: idx2 = 2*position.
struct Block {
    long start2;   // 2 * first position
    long npoints;  // number of points, >= 1

    Rat start() const { return Rat(start2, 2); }
    Rat end() const { return Rat(start2 + npoints - 1, 2); }
    long end2() const { return start2 + npoints - 1; }
};

// Map (1/2)Z -> {a, b, a^-1, b^-1}; either generated from a permissible seed
// by the two-sided mirror-inverse extension, or the periodic labelling tau.
// Label queries materialize stages on demand; reads are synchronized.
class Labelling {
public:
    static std::shared_ptr<Labelling> from_seed(const std::vector<Letter>& seed);
    static std::shared_ptr<Labelling> periodic_tau();

    bool quasi_periodic_kind() const { return kind_ == Kind::Seeded; }
    const std::vector<Letter>& seed() const { return seed_; }

    Letter at(const Rat& q) const;  // q must be a half-integer
    Letter at2(long idx2) const;    // position idx2/2

    std::vector<Letter> word(const Block& X) const;

    // Current materialized extent in half-step units (diagnostics).
    std::pair<long, long> materialized2() const;

private:
    enum class Kind { Seeded, Tau };
    Labelling() = default;

    void ensure2(long idx2) const;
    void run_stage() const;

    Kind kind_ = Kind::Tau;
    std::vector<Letter> seed_;
    mutable std::mutex mu_;
    mutable std::vector<Letter> right_;  // idx2 >= 0
    mutable std::vector<Letter> left_;   // idx2 < 0, index -idx2-1
    mutable long lo2_ = 0;
    mutable long hi2_ = 0;
    mutable long stage_ = 0;

    Letter raw2(long idx2) const;
    void set2(long idx2, Letter l) const;
};

using LabellingPtr = std::shared_ptr<Labelling>;

// Block Y inside [-bound, bound] (positions) whose word is the formal inverse
// of the word of X. Tries the mirror positions written by the stage recursion
// first, then scans. Empty result = bounded-search failure.
std::optional<Block> find_inverse_block(const Labelling& rho, const Block& X, long bound);

struct RecurrenceResult {
    bool ok = false;
    long npoints = 0;  // least window size (in points) that always contains the word
};

// Least n such that every n-point block inside [-range, range] contains the
// word of X as a subword; empirical witness over the tested range only.
RecurrenceResult recurrence_radius(const Labelling& rho, const Block& X, long range);

struct WindowClasses {
    std::vector<std::pair<std::vector<Letter>, long>> classes;  // word -> multiplicity
    bool stabilized = false;
};

// Distinct radius-r (in half-steps) words centered at integers (or at
// half-integers) over [-range, range]; stabilized = unchanged when the range
// doubles once.
WindowClasses window_classes(const Labelling& rho, long radius_steps, long range,
                             bool centers_at_integers = true);

}  // namespace plgroup
