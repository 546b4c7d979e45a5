#ifndef LEAFPATHS_LENGTH_SET_HPP
#define LEAFPATHS_LENGTH_SET_HPP

#include <cstdint>
#include <vector>

#include "leafpaths/error.hpp"

namespace leafpaths {

/*
 * Set of path lengths in [0, cap], stored as a bit vector. Only the word
 * window actually spanned by members is allocated, so a singleton set deep
 * in a large tree costs one word, and unions of far-apart sets stay cheap.
 * All mutators keep membership exact; overflow past cap is an error, never
 * silent truncation.
 */
class LengthSet {
public:
    LengthSet() = default; // empty, cap 0
    explicit LengthSet(int cap);
    static LengthSet singleton(int value, int cap);

    int cap() const { return cap_; }
    bool empty() const { return words_.empty(); }
    int size() const;       // number of members
    bool contains(int v) const;
    void insert(int v);
    int min_value() const;  // -1 on empty
    int max_value() const;  // -1 on empty
    std::vector<int> values() const;

    // Words touched by the current window; the small-into-large merge key.
    int word_span() const { return static_cast<int>(words_.size()); }

    // *this |= other
    void union_with(const LengthSet& other);
    // *this |= { v + shift : v in other }; shift may be negative.
    void union_shifted(const LengthSet& other, int shift);

    bool operator==(const LengthSet& other) const;

private:
    void ensure_window(int lo_word, int hi_word);

    int cap_ = 0;
    int base_ = 0;                 // absolute index of words_[0]
    std::vector<std::uint64_t> words_;
};

// { x + y : x in a, y in b }, by OR-ing shifted copies of the denser
// operand, one shift per member of the sparser one.
LengthSet sumset(const LengthSet& a, const LengthSet& b);

} // namespace leafpaths

#endif
