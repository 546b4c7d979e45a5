#include "leafpaths/length_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace leafpaths {

LengthSet::LengthSet(int cap) : cap_(cap) {
    if (cap < 0)
        throw Error(ErrorKind::InvalidParameter, "length-set cap must be non-negative");
}

LengthSet LengthSet::singleton(int value, int cap) {
    LengthSet s(cap);
    s.insert(value);
    return s;
}

void LengthSet::ensure_window(int lo_word, int hi_word) {
    if (words_.empty()) {
        base_ = lo_word;
        words_.assign(static_cast<std::size_t>(hi_word - lo_word + 1), 0);
        return;
    }
    int cur_lo = base_;
    int cur_hi = base_ + static_cast<int>(words_.size()) - 1;
    int new_lo = std::min(cur_lo, lo_word);
    int new_hi = std::max(cur_hi, hi_word);
    if (new_lo == cur_lo && new_hi == cur_hi) return;
    std::vector<std::uint64_t> grown(static_cast<std::size_t>(new_hi - new_lo + 1), 0);
    std::copy(words_.begin(), words_.end(), grown.begin() + (cur_lo - new_lo));
    words_ = std::move(grown);
    base_ = new_lo;
}

void LengthSet::insert(int v) {
    if (v < 0 || v > cap_)
        throw Error(ErrorKind::Overflow,
                    "value " + std::to_string(v) + " outside [0," + std::to_string(cap_) + "]");
    int w = v >> 6;
    ensure_window(w, w);
    words_[static_cast<std::size_t>(w - base_)] |= std::uint64_t{1} << (v & 63);
}

bool LengthSet::contains(int v) const {
    if (v < 0 || v > cap_ || words_.empty()) return false;
    int w = v >> 6;
    if (w < base_ || w >= base_ + static_cast<int>(words_.size())) return false;
    return (words_[static_cast<std::size_t>(w - base_)] >> (v & 63)) & 1;
}

int LengthSet::size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

int LengthSet::min_value() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return ((base_ + static_cast<int>(i)) << 6) + std::countr_zero(words_[i]);
    return -1;
}

int LengthSet::max_value() const {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i])
            return ((base_ + static_cast<int>(i)) << 6) + 63 - std::countl_zero(words_[i]);
    return -1;
}

std::vector<int> LengthSet::values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(((base_ + static_cast<int>(i)) << 6) + b);
            w &= w - 1;
        }
    }
    return out;
}

void LengthSet::union_with(const LengthSet& other) {
    if (other.words_.empty()) return;
    if (other.max_value() > cap_)
        throw Error(ErrorKind::Overflow, "union exceeds length-set cap");
    ensure_window(other.base_, other.base_ + static_cast<int>(other.words_.size()) - 1);
    for (std::size_t i = 0; i < other.words_.size(); ++i)
        words_[static_cast<std::size_t>(other.base_ - base_) + i] |= other.words_[i];
}

void LengthSet::union_shifted(const LengthSet& other, int shift) {
    if (other.words_.empty()) return;
    if (shift == 0) {
        union_with(other);
        return;
    }
    int lo = other.min_value() + shift;
    int hi = other.max_value() + shift;
    if (lo < 0 || hi > cap_)
        throw Error(ErrorKind::Overflow,
                    "shift by " + std::to_string(shift) + " leaves [0," +
                        std::to_string(cap_) + "]");
    // Split the shift into a word offset plus a bit offset in [0,63].
    int s = shift & 63;
    int w_off = (shift - s) >> 6;
    ensure_window(lo >> 6, hi >> 6);
    const int limit = base_ + static_cast<int>(words_.size());
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        std::uint64_t bits = other.words_[i];
        if (!bits) continue;
        int target = other.base_ + static_cast<int>(i) + w_off;
        if (target >= base_ && target < limit)
            words_[static_cast<std::size_t>(target - base_)] |= bits << s;
        if (s && target + 1 >= base_ && target + 1 < limit)
            words_[static_cast<std::size_t>(target + 1 - base_)] |= bits >> (64 - s);
    }
}

bool LengthSet::operator==(const LengthSet& other) const {
    // Set equality; window layout and caps are representation detail.
    int lo = std::min(base_, other.base_);
    int hi = std::max(base_ + static_cast<int>(words_.size()),
                      other.base_ + static_cast<int>(other.words_.size()));
    for (int w = lo; w < hi; ++w) {
        std::uint64_t x = 0, y = 0;
        if (w >= base_ && w < base_ + static_cast<int>(words_.size()))
            x = words_[static_cast<std::size_t>(w - base_)];
        if (w >= other.base_ && w < other.base_ + static_cast<int>(other.words_.size()))
            y = other.words_[static_cast<std::size_t>(w - other.base_)];
        if (x != y) return false;
    }
    return true;
}

LengthSet sumset(const LengthSet& a, const LengthSet& b) {
    int cap = std::max(a.cap(), b.cap());
    LengthSet out(cap);
    if (a.empty() || b.empty()) return out;
    if (a.max_value() + b.max_value() > cap)
        throw Error(ErrorKind::Overflow,
                    "sumset max " + std::to_string(a.max_value() + b.max_value()) +
                        " exceeds cap " + std::to_string(cap));
    const LengthSet& sparse = a.size() <= b.size() ? a : b;
    const LengthSet& dense = a.size() <= b.size() ? b : a;
    for (int v : sparse.values()) out.union_shifted(dense, v);
    return out;
}

} // namespace leafpaths
