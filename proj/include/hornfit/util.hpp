#ifndef HORNFIT_UTIL_HPP
#define HORNFIT_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hornfit {

// Base class for all errors raised on invalid inputs or violated preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected input (precondition violation, unsupported fragment, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Syntax error with a source location.
class ParseError : public Error {
public:
    ParseError(size_t line, size_t col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    size_t line;
    size_t col;
};

// Fixed-size bitset sized at runtime. Used for element sets during concept
// evaluation and the simulation fixpoints.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    size_t size() const { return nbits_; }

    void set(size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }
    void reset_all() {
        for (auto& w : words_) w = 0;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    size_t count() const {
        size_t c = 0;
        for (auto w : words_) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& and_not(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const DynBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const DynBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const DynBitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const DynBitset& o) const { return !(*this == o); }

    // Index of the lowest set bit, or size() if none.
    size_t first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (i << 6) + static_cast<size_t>(__builtin_ctzll(words_[i]));
        return nbits_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f((i << 6) + static_cast<size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (uint64_t{1} << (nbits_ & 63)) - 1;
    }

    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

inline void hash_combine(size_t& seed, size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

} // namespace hornfit

#endif
